// validation.hpp -- validation reports shared by the word and forest checkers

#pragma once

#include <stdexcept>
#include <string>

namespace ctcat {

/// Result of checking an object against the defining conditions of its class.
///
/// Structural defects (wrong letter count, duplicate labels, out-of-range
/// indices) are reported as `malformed`, separately from violations of the
/// numbered conditions of the definition being checked.
struct ValidationReport {
    enum class Kind { ok, malformed, violation };

    Kind kind = Kind::ok;
    int condition = 0;   ///< 1-based condition number, set when kind == violation
    std::string detail;  ///< witness list for violations, reason for malformed input

    bool is_ok() const { return kind == Kind::ok; }

    /// Renders as `ok`, `violation <roman> witness=<w>[,<w>]`, or `malformed: <reason>`.
    std::string str() const;

    static ValidationReport okay() { return {}; }
    static ValidationReport bad(std::string reason);
    static ValidationReport violated(int condition, std::string witness);
};

/// Throws std::invalid_argument with the rendered report unless it is ok.
void require_valid(const ValidationReport& report, const std::string& what);

namespace detail {
/// Throws std::logic_error. Used where a proven property of validated input
/// fails to hold, which indicates a bug rather than bad input.
[[noreturn]] void internal_error(const std::string& message);
}  // namespace detail

}  // namespace ctcat
