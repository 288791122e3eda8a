// counting.hpp -- exact counting formulas and lattice-path machinery

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace ctcat {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt catalan(int n);

/// Number of rooted ordered forest shapes with n nodes and s special leaves,
/// s * C(2n-s, n) / (2n-s). The division is exact and asserted.
BigInt c_ns(int n, int s);

/// Number of shuffles between a forest with s special leaves and its
/// symmetric: 2^s.
BigInt d_ns(int s);

/// Number of regions of the type C Catalan arrangement in R^n:
/// 2^n * n! * C(2n, n).
BigInt region_count(int n);

/// The same count computed as 2^n * n! * sum_s c_ns(n,s) * d_ns(s).
BigInt region_count_via_sum(int n);

/// Checks c_ns(n,s) == c_ns(n-1,s-1) + c_ns(n,s+1) for 1 <= s <= n-1,
/// taking c_ns(n-1,0) to be zero.
bool check_recurrence(int n);

/// Table of counts keyed by number of special leaves, s in [1, n].
struct CountTable {
    int n = 0;
    std::map<int, BigInt> entries;

    /// One `s=<k> count=<v>` line per entry, sorted by s.
    std::string str() const;
};

/// c_ns(n, s) for every s in [1, n].
CountTable special_leaf_table(int n);

/// Lattice path over steps 'U' and 'D'.
using LatticePath = std::string;

/// True iff every prefix has at least as many U as D and the totals agree.
bool is_dyck_path(const LatticePath& p);

/// Number of cyclic rotations of p in which every nonempty prefix has
/// strictly more U than D. By the cycle lemma this equals #U - #D, which is
/// asserted; the path must have positive excess.
int dominating_rotations(const LatticePath& p);

/// Number of Dyck paths of semilength n ending in a U followed by exactly
/// s D steps, counted by exhaustive generation.
BigInt count_paths_with_tail(int n, int s);

}  // namespace ctcat
