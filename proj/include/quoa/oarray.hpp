// oarray.hpp
// Classical orthogonal arrays: generators (full factorial, zero-sum,
// Vandermonde-type over GF(d)) and brute-force strength / irredundancy checks.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quoa/ffield.hpp"

namespace quoa {

inline constexpr std::size_t kDefaultRowBudget = std::size_t{1} << 20;

/// An r x N array over [0, d) with a declared strength. Entries of
/// field-based arrays are element indices; the Field is kept for provenance.
struct OrthogonalArray {
    int levels = 0;
    int strength = 0;
    std::vector<std::vector<int>> rows;
    std::optional<Field> field;

    int runs() const { return static_cast<int>(rows.size()); }
    int factors() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
};

namespace detail {

inline void check_levels(int d) {
    if (d < 2) throw std::invalid_argument("orthogonal array: levels must be >= 2");
}

inline std::size_t checked_pow(int d, int e, std::size_t budget, const char* what) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > budget / static_cast<std::size_t>(d))
            throw std::invalid_argument(std::string(what) + ": row budget of " + std::to_string(budget) +
                                        " rows exceeded");
        r *= static_cast<std::size_t>(d);
    }
    return r;
}

// all k-subsets of {0,..,n-1} in lexicographic order
inline std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace detail

/// All d^N tuples in lexicographic order; strength N (every projection is
/// trivially balanced).
inline OrthogonalArray full_factorial(int d, int N, std::size_t row_budget = kDefaultRowBudget) {
    detail::check_levels(d);
    if (N < 1) throw std::invalid_argument("full_factorial: need at least one column");
    std::size_t r = detail::checked_pow(d, N, row_budget, "full_factorial");
    OrthogonalArray oa;
    oa.levels = d;
    oa.strength = N;
    oa.rows.reserve(r);
    std::vector<int> row(N, 0);
    while (true) {
        oa.rows.push_back(row);
        int i = N - 1;
        while (i >= 0 && row[i] == d - 1) row[i--] = 0;
        if (i < 0) break;
        ++row[i];
    }
    return oa;
}

/// The d^(N-1) rows whose digit sum is congruent to l mod d, in lexicographic
/// order; strength N-1.
inline OrthogonalArray zero_sum_oa(int d, int N, int l, std::size_t row_budget = kDefaultRowBudget) {
    detail::check_levels(d);
    if (N < 2) throw std::invalid_argument("zero_sum_oa: need at least two columns");
    if (l < 0 || l >= d) throw std::invalid_argument("zero_sum_oa: residue out of range");
    detail::checked_pow(d, N - 1, row_budget, "zero_sum_oa");
    OrthogonalArray oa;
    oa.levels = d;
    oa.strength = N - 1;
    std::vector<int> row(N - 1, 0);
    while (true) {
        int sum = 0;
        for (int x : row) sum += x;
        std::vector<int> full = row;
        full.push_back(((l - sum) % d + d) % d);
        oa.rows.push_back(std::move(full));
        int i = N - 2;
        while (i >= 0 && row[i] == d - 1) row[i--] = 0;
        if (i < 0) break;
        ++row[i];
    }
    // rows are lexicographic in the first N-1 digits, which is also full-row
    // lexicographic order because the last digit is determined
    std::sort(oa.rows.begin(), oa.rows.end());
    return oa;
}

/// Rows (i, k, i + a*j + a^2*k : a in F_d^*) over all (i, j, k), a strength-3
/// array with d+1 columns; for d = 2^t (t >= 2), `extended` appends j as a
/// column, giving d+2 columns at strength 3.
inline OrthogonalArray vandermonde_oa(const Field& f, bool extended = false,
                                      std::size_t row_budget = kDefaultRowBudget) {
    const int d = f.order();
    if (d <= 3) throw std::invalid_argument("vandermonde_oa: needs field order > 3");
    if (extended && (f.p() != 2 || f.degree() < 2))
        throw std::invalid_argument("vandermonde_oa: extended column requires d = 2^t with t >= 2");
    detail::checked_pow(d, 3, row_budget, "vandermonde_oa");
    OrthogonalArray oa;
    oa.levels = d;
    oa.strength = 3;
    oa.field = f;
    oa.rows.reserve(static_cast<std::size_t>(d) * d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                std::vector<int> row;
                row.reserve(d + 1 + (extended ? 1 : 0));
                row.push_back(i);
                row.push_back(k);
                for (int a = 1; a < d; ++a) {
                    int a2 = f.mul(a, a);
                    row.push_back(f.add(i, f.add(f.mul(a, j), f.mul(a2, k))));
                }
                if (extended) row.push_back(j);
                oa.rows.push_back(std::move(row));
            }
    return oa;
}

/// True iff every k-column projection contains each of the d^k tuples exactly
/// r / d^k times.
inline bool strength_check(const OrthogonalArray& oa, int k) {
    const int N = oa.factors();
    const int d = oa.levels;
    if (k < 1 || k > N) throw std::invalid_argument("strength_check: k out of range");
    std::size_t dk = 1;
    for (int i = 0; i < k; ++i) {
        if (dk > (std::size_t{1} << 40) / static_cast<std::size_t>(d)) return false;
        dk *= static_cast<std::size_t>(d);
    }
    const std::size_t r = oa.rows.size();
    if (r % dk != 0) return false;
    const std::size_t lambda = r / dk;
    std::vector<std::int64_t> counts;
    for (const auto& cols : detail::combinations(N, k)) {
        counts.assign(dk, 0);
        for (const auto& row : oa.rows) {
            std::size_t idx = 0;
            for (int c : cols) idx = idx * d + static_cast<std::size_t>(row[c]);
            ++counts[idx];
        }
        for (std::int64_t c : counts)
            if (c != static_cast<std::int64_t>(lambda)) return false;
    }
    return true;
}

/// True iff every (N-k)-column projection has all r rows distinct.
inline bool irredundancy_check(const OrthogonalArray& oa, int k) {
    const int N = oa.factors();
    if (k < 1 || k >= N) throw std::invalid_argument("irredundancy_check: need 1 <= k < N");
    std::vector<std::vector<int>> proj(oa.rows.size());
    for (const auto& cols : detail::combinations(N, N - k)) {
        for (std::size_t i = 0; i < oa.rows.size(); ++i) {
            proj[i].clear();
            for (int c : cols) proj[i].push_back(oa.rows[i][c]);
        }
        std::sort(proj.begin(), proj.end());
        if (std::adjacent_find(proj.begin(), proj.end()) != proj.end()) return false;
    }
    return true;
}

/// A hand-pinned irredundant OA(8,6,2,2) used as the canonical strength-2
/// sample for tests and docs.
inline OrthogonalArray iroa_8_6_2_2() {
    OrthogonalArray oa;
    oa.levels = 2;
    oa.strength = 2;
    oa.rows = {
        {0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 0}, {0, 1, 1, 1, 0, 1}, {0, 1, 0, 0, 1, 1},
        {1, 0, 1, 0, 1, 1}, {1, 0, 0, 1, 0, 1}, {1, 1, 0, 1, 1, 0}, {1, 1, 1, 0, 0, 0},
    };
    return oa;
}

}  // namespace quoa
