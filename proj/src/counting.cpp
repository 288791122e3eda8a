#include "ctcat/counting.hpp"

#include <stdexcept>

#include "ctcat/validation.hpp"

namespace ctcat {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

BigInt catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
    BigInt q, rem;
    boost::multiprecision::divide_qr(binomial(2 * n, n), BigInt(n + 1), q, rem);
    if (rem != 0) detail::internal_error("catalan: division is not exact");
    return q;
}

BigInt c_ns(int n, int s) {
    if (n < 1) throw std::invalid_argument("c_ns: n must be >= 1");
    if (s < 1 || s > n)
        throw std::invalid_argument("c_ns: s must satisfy 1 <= s <= n, got s=" + std::to_string(s));
    BigInt q, rem;
    boost::multiprecision::divide_qr(BigInt(s) * binomial(2 * n - s, n), BigInt(2 * n - s), q, rem);
    if (rem != 0) detail::internal_error("c_ns: division is not exact");
    return q;
}

BigInt d_ns(int s) {
    if (s < 0) throw std::invalid_argument("d_ns: s must be >= 0");
    return BigInt(1) << s;
}

BigInt region_count(int n) {
    if (n < 1) throw std::invalid_argument("region_count: n must be >= 1");
    return (BigInt(1) << n) * factorial(n) * binomial(2 * n, n);
}

BigInt region_count_via_sum(int n) {
    if (n < 1) throw std::invalid_argument("region_count_via_sum: n must be >= 1");
    BigInt sum = 0;
    for (int s = 1; s <= n; ++s) sum += c_ns(n, s) * d_ns(s);
    return (BigInt(1) << n) * factorial(n) * sum;
}

bool check_recurrence(int n) {
    if (n < 2) throw std::invalid_argument("check_recurrence: n must be >= 2");
    for (int s = 1; s <= n - 1; ++s) {
        const BigInt lhs = c_ns(n, s);
        const BigInt rhs = (s >= 2 ? c_ns(n - 1, s - 1) : BigInt(0)) + c_ns(n, s + 1);
        if (lhs != rhs) return false;
    }
    return true;
}

std::string CountTable::str() const {
    std::string out;
    for (const auto& [s, count] : entries)
        out += "s=" + std::to_string(s) + " count=" + count.str() + "\n";
    return out;
}

CountTable special_leaf_table(int n) {
    CountTable table;
    table.n = n;
    for (int s = 1; s <= n; ++s) table.entries[s] = c_ns(n, s);
    return table;
}

bool is_dyck_path(const LatticePath& p) {
    int height = 0;
    for (char step : p) {
        if (step == 'U')
            ++height;
        else if (step == 'D')
            --height;
        else
            throw std::invalid_argument("lattice path steps must be 'U' or 'D'");
        if (height < 0) return false;
    }
    return height == 0;
}

int dominating_rotations(const LatticePath& p) {
    int ups = 0;
    for (char step : p) {
        if (step == 'U')
            ++ups;
        else if (step != 'D')
            throw std::invalid_argument("lattice path steps must be 'U' or 'D'");
    }
    const int length = static_cast<int>(p.size());
    const int excess = 2 * ups - length;
    if (excess <= 0)
        throw std::invalid_argument("dominating_rotations: path must have positive U-excess");

    int count = 0;
    for (int start = 0; start < length; ++start) {
        int height = 0;
        bool dominating = true;
        for (int t = 0; t < length; ++t) {
            height += p[(start + t) % length] == 'U' ? 1 : -1;
            if (height < 1) {
                dominating = false;
                break;
            }
        }
        if (dominating) ++count;
    }
    if (count != excess) detail::internal_error("dominating_rotations: cycle lemma violated");
    return count;
}

namespace {

void walk_dyck(std::string& path, int ups, int downs, int n, int s, long long& count) {
    if (ups == n && downs == n) {
        // tail condition: the last s steps are D, preceded by a U
        const int pivot = 2 * n - s - 1;
        if (path[pivot] != 'U') return;
        for (int t = pivot + 1; t < 2 * n; ++t)
            if (path[t] != 'D') return;
        ++count;
        return;
    }
    if (ups < n) {
        path.push_back('U');
        walk_dyck(path, ups + 1, downs, n, s, count);
        path.pop_back();
    }
    if (downs < ups) {
        path.push_back('D');
        walk_dyck(path, ups, downs + 1, n, s, count);
        path.pop_back();
    }
}

}  // namespace

BigInt count_paths_with_tail(int n, int s) {
    if (n < 1) throw std::invalid_argument("count_paths_with_tail: n must be >= 1");
    if (s < 1 || s > n) throw std::invalid_argument("count_paths_with_tail: s must satisfy 1 <= s <= n");
    long long count = 0;
    std::string path;
    path.reserve(2 * static_cast<std::size_t>(n));
    walk_dyck(path, 0, 0, n, s, count);
    return BigInt(count);
}

}  // namespace ctcat
