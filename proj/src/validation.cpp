#include "ctcat/validation.hpp"

namespace ctcat {

namespace {
const char* roman(int condition) {
    switch (condition) {
        case 1: return "i";
        case 2: return "ii";
        case 3: return "iii";
        case 4: return "iv";
        default: return "?";
    }
}
}  // namespace

std::string ValidationReport::str() const {
    switch (kind) {
        case Kind::ok:
            return "ok";
        case Kind::malformed:
            return "malformed: " + detail;
        case Kind::violation:
            return std::string("violation ") + roman(condition) + " witness=" + detail;
    }
    return "?";
}

ValidationReport ValidationReport::bad(std::string reason) {
    return {Kind::malformed, 0, std::move(reason)};
}

ValidationReport ValidationReport::violated(int condition, std::string witness) {
    return {Kind::violation, condition, std::move(witness)};
}

void require_valid(const ValidationReport& report, const std::string& what) {
    if (!report.is_ok()) throw std::invalid_argument(what + ": " + report.str());
}

namespace detail {
void internal_error(const std::string& message) {
    throw std::logic_error("internal error: " + message);
}
}  // namespace detail

}  // namespace ctcat
