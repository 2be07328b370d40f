// verify.hpp
// Brute-force certification: k-uniformity of a state over all size-k site
// subsets, the Definition-style check for a QuantumOA (the double sum over
// row pairs, computed through the assembled sum by bilinearity), the m = 2
// negative control for the qubit 3+3m family, and the trace/Gram identity
// suite for the GHZ / Bell / psi families.

#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "quoa/qoa.hpp"
#include "quoa/qstate.hpp"

namespace quoa {

inline constexpr double kDefaultUniformityTol = 1e-9;

struct UniformityReport {
    int k = 0;
    std::size_t subsets_checked = 0;
    double max_deviation = 0.0;
    std::vector<int> worst_subset;  // 1-based sites
    bool passed = false;
    double wall_seconds = 0.0;
    double tolerance = 0.0;
};

namespace detail {

template <typename Fn>
inline void parallel_for(std::size_t count, int threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    const std::size_t T = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::vector<std::thread> pool;
    pool.reserve(T);
    for (std::size_t t = 0; t < T; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

/// Max-abs deviation of (entries of the subset marginal of `amps`) / denom
/// from I/D, where D = d^|sites|, computed from nonzero amplitudes only.
/// `sites` are 0-based here.
inline double subset_deviation(const std::vector<std::pair<const Ket*, Amplitude>>& amps, int d, int n,
                               const std::vector<int>& sites, double denom) {
    const int k = static_cast<int>(sites.size());
    std::size_t D = 1;
    for (int i = 0; i < k; ++i) {
        D *= static_cast<std::size_t>(d);
        if (D > (std::size_t{1} << 22)) throw std::invalid_argument("verification: marginal dimension too large");
    }
    std::vector<char> on_subset(n, 0);
    for (int s : sites) on_subset[s] = 1;
    const int bits = std::bit_width(static_cast<unsigned>(d - 1));
    if (bits * (n - k) > 64) throw std::invalid_argument("verification: too many traced sites to pack");

    struct Rec {
        std::uint64_t comp;
        std::uint32_t sidx;
        Amplitude amp;
    };
    std::vector<Rec> recs;
    recs.reserve(amps.size());
    for (const auto& [ketp, amp] : amps) {
        std::uint64_t comp = 0;
        std::uint32_t sidx = 0;
        const Ket& ket = *ketp;
        for (int s = 0; s < n; ++s) {
            if (on_subset[s])
                sidx = sidx * static_cast<std::uint32_t>(d) + ket[s];
            else
                comp = (comp << bits) | ket[s];
        }
        recs.push_back({comp, sidx, amp});
    }
    std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
        return a.comp != b.comp ? a.comp < b.comp : a.sidx < b.sidx;
    });

    std::unordered_map<std::uint64_t, Amplitude> entries;
    entries.reserve(recs.size() * 2);
    for (std::size_t lo = 0; lo < recs.size();) {
        std::size_t hi = lo;
        while (hi < recs.size() && recs[hi].comp == recs[lo].comp) ++hi;
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = lo; j < hi; ++j)
                entries[static_cast<std::uint64_t>(recs[i].sidx) * D + recs[j].sidx] +=
                    recs[i].amp * std::conj(recs[j].amp);
        lo = hi;
    }

    const double target = 1.0 / static_cast<double>(D);
    double dev = 0.0;
    std::size_t diag_seen = 0;
    std::vector<char> diag(D, 0);
    for (const auto& [key, v] : entries) {
        const std::uint64_t a = key / D, b = key % D;
        const double t = a == b ? target : 0.0;
        dev = std::max(dev, std::abs(v / denom - t));
        if (a == b && !diag[a]) {
            diag[a] = 1;
            ++diag_seen;
        }
    }
    if (diag_seen < D) dev = std::max(dev, target);  // some diagonal entry is exactly zero
    return dev;
}

inline UniformityReport run_subset_checks(const SparseState& state, int k, double denom, double tol, int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<const Ket*, Amplitude>> amps;
    amps.reserve(state.term_count());
    for (const auto& [ket, amp] : state.amps()) amps.emplace_back(&ket, amp);
    const auto subsets = detail::combinations(state.sites(), k);
    std::vector<double> devs(subsets.size());
    parallel_for(subsets.size(), threads,
                 [&](std::size_t i) { devs[i] = subset_deviation(amps, state.dim(), state.sites(), subsets[i], denom); });
    UniformityReport rep;
    rep.k = k;
    rep.subsets_checked = subsets.size();
    rep.tolerance = tol;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < devs.size(); ++i)
        if (devs[i] > rep.max_deviation) {
            rep.max_deviation = devs[i];
            worst = i;
        }
    rep.worst_subset.assign(subsets[worst].begin(), subsets[worst].end());
    for (int& s : rep.worst_subset) ++s;  // report 1-based sites
    rep.passed = rep.max_deviation <= tol;
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace detail

/// Checks all C(n, k) subsets of size exactly k (monotonicity makes smaller
/// sizes redundant); reports the worst trace-normalized deviation of rho_S
/// from I / d^k. The input must be normalized to within 1e-10.
inline UniformityReport is_k_uniform(const SparseState& state, int k, double tol = kDefaultUniformityTol,
                                     int threads = 1) {
    if (k < 1 || k > state.sites() / 2)
        throw std::invalid_argument("is_k_uniform: k must satisfy 1 <= k <= floor(n/2)");
    const double n2 = state.norm2();
    if (std::abs(n2 - 1.0) > 1e-10)
        throw std::invalid_argument("is_k_uniform: state is not normalized (|norm^2 - 1| = " +
                                    std::to_string(std::abs(n2 - 1.0)) + ")");
    return detail::run_subset_checks(state, k, n2, tol, threads);
}

/// Definition check for a QuantumOA at its declared strength: for every
/// size-k subset, sum_{i,j} Tr_{S^c} |row_i><row_j| must equal (r/d^k) I.
/// The double sum is evaluated through the unnormalized row sum (bilinear
/// identity), and deviations are reported on the /r scale so they are
/// directly comparable with is_k_uniform on the assembled state.
inline UniformityReport qoa_check(const QuantumOA& q, double tol = kDefaultUniformityTol, int threads = 1) {
    if (q.rows.empty()) throw std::invalid_argument("qoa_check: no rows");
    if (q.k < 1 || q.k >= q.N) throw std::invalid_argument("qoa_check: strength out of range");
    SparseState sum(q.d, q.N);
    for (const auto& row : q.rows) {
        if (row.dim() != q.d || row.sites() != q.N) throw std::invalid_argument("qoa_check: row shape mismatch");
        if (std::abs(row.norm2() - 1.0) > 1e-10) throw std::invalid_argument("qoa_check: rows must be unit norm");
        for (const auto& [ket, amp] : row.amps()) sum.accumulate(ket, amp);
    }
    return detail::run_subset_checks(sum, q.k, static_cast<double>(q.rows.size()), tol, threads);
}

struct M2Counterexample {
    std::vector<int> subset;  // 1-based
    DensityMatrix rho;
    double deviation = 0.0;
};

/// Reproduces why the qubit 3+3m family excludes m = 2: builds the eight
/// rows |ijk> (x) GHZ_ijk (x) GHZ_ijk directly (bypassing the builder guard)
/// and evaluates the Definition sum on sites {1, 4, 7} literally, pair by
/// pair. The normalized marginal differs from I/8 by exactly 1/8.
inline M2Counterexample m2_counterexample() {
    std::vector<SparseState> rows;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                SparseState row = basis_ket(2, {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
                                                static_cast<std::uint8_t>(k)});
                row = tensor(row, ghz_state(i, j, k));
                rows.push_back(tensor(row, ghz_state(i, j, k)));
            }
    const std::vector<int> subset{1, 4, 7};
    DensityMatrix acc(2, 3);
    for (const auto& a : rows)
        for (const auto& b : rows) {
            DensityMatrix c = cross_reduced(a, b, subset);
            for (int x = 0; x < acc.dim(); ++x)
                for (int y = 0; y < acc.dim(); ++y) acc.at(x, y) += c.at(x, y);
        }
    const double r = static_cast<double>(rows.size());
    for (int x = 0; x < acc.dim(); ++x)
        for (int y = 0; y < acc.dim(); ++y) acc.at(x, y) /= r;
    M2Counterexample out{subset, acc, acc.max_dev_from_scaled_identity(1.0 / acc.dim())};
    return out;
}

struct IdentityCheck {
    std::string name;
    double max_deviation = 0.0;
    bool passed = false;
};

namespace detail {

// Accumulated sum of Tr_{S^c} |a_i><b_i| over a list of state pairs,
// compared entrywise against expected * I. Returns the max-abs deviation.
inline double cross_sum_dev(const std::vector<std::pair<SparseState, SparseState>>& pairs,
                            const std::vector<int>& sites, double expected) {
    DensityMatrix acc(pairs.front().first.dim(), static_cast<int>(sites.size()));
    for (const auto& [a, b] : pairs) {
        DensityMatrix c = cross_reduced(a, b, sites);
        for (int x = 0; x < acc.dim(); ++x)
            for (int y = 0; y < acc.dim(); ++y) acc.at(x, y) += c.at(x, y);
    }
    return acc.max_dev_from_scaled_identity(expected);
}

}  // namespace detail

/// Numerically evaluates the GHZ, Bell and psi-family trace identities the
/// strength-3 proofs rest on, every one quantified over all free index
/// combinations. Returns one entry per identity with its worst deviation.
inline std::vector<IdentityCheck> identity_suite(double tol = 1e-12) {
    std::vector<IdentityCheck> out;
    auto push = [&](std::string name, double dev) { out.push_back({std::move(name), dev, dev <= tol}); };
    const std::vector<int> bits{0, 1};
    using PairList = std::vector<std::pair<SparseState, SparseState>>;

    // --- GHZ family -------------------------------------------------------
    // sum over one index, traced over two sites, one primed index
    {
        struct Var { const char* name; int traced[2]; int sum_idx; int delta_idx; };
        // index positions: 0 = i, 1 = j, 2 = k
        const std::vector<Var> vars{
            {"ghz: sum_j tr23 |G_ijk><G_i'jk| = I2 d(ii')", {2, 3}, 1, 0},
            {"ghz: sum_k tr23 |G_ijk><G_i'jk| = I2 d(ii')", {2, 3}, 2, 0},
            {"ghz: sum_i tr13 |G_ijk><G_ij'k| = I2 d(jj')", {1, 3}, 0, 1},
            {"ghz: sum_k tr13 |G_ijk><G_ij'k| = I2 d(jj')", {1, 3}, 2, 1},
            {"ghz: sum_i tr12 |G_ijk><G_ijk'| = I2 d(kk')", {1, 2}, 0, 2},
            {"ghz: sum_j tr12 |G_ijk><G_ijk'| = I2 d(kk')", {1, 2}, 1, 2},
        };
        for (const auto& v : vars) {
            double worst = 0;
            const int other = 3 - v.sum_idx - v.delta_idx;
            for (int dval : bits)
                for (int dval2 : bits)
                    for (int oval : bits) {
                        PairList ps;
                        for (int s : bits) {
                            int idx[3], idx2[3];
                            idx[v.sum_idx] = idx2[v.sum_idx] = s;
                            idx[v.delta_idx] = dval;
                            idx2[v.delta_idx] = dval2;
                            idx[other] = idx2[other] = oval;
                            ps.emplace_back(ghz_state(idx[0], idx[1], idx[2]), ghz_state(idx2[0], idx2[1], idx2[2]));
                        }
                        std::vector<int> keep_site{6 - v.traced[0] - v.traced[1]};
                        worst = std::max(worst, detail::cross_sum_dev(ps, keep_site, dval == dval2 ? 1.0 : 0.0));
                    }
            push(v.name, worst);
        }
    }
    // sum over one index, traced over two sites, both other indices primed
    {
        struct Var { const char* name; int sum_idx; };
        const std::vector<Var> vars{
            {"ghz: sum_i tr23 |G_ijk><G_ij'k'| = I2 d(jj')d(kk')", 0},
            {"ghz: sum_j tr13 |G_ijk><G_i'jk'| = I2 d(ii')d(kk')", 1},
            {"ghz: sum_k tr12 |G_ijk><G_i'j'k| = I2 d(ii')d(jj')", 2},
        };
        for (const auto& v : vars) {
            double worst = 0;
            const int a = v.sum_idx == 0 ? 1 : 0;
            const int b = v.sum_idx == 2 ? 1 : 2;
            for (int av : bits)
                for (int av2 : bits)
                    for (int bv : bits)
                        for (int bv2 : bits) {
                            PairList ps;
                            for (int s : bits) {
                                int idx[3], idx2[3];
                                idx[v.sum_idx] = idx2[v.sum_idx] = s;
                                idx[a] = av; idx2[a] = av2;
                                idx[b] = bv; idx2[b] = bv2;
                                ps.emplace_back(ghz_state(idx[0], idx[1], idx[2]),
                                                ghz_state(idx2[0], idx2[1], idx2[2]));
                            }
                            const double expect = (av == av2 && bv == bv2) ? 1.0 : 0.0;
                            worst = std::max(worst, detail::cross_sum_dev(ps, {v.sum_idx + 1}, expect));
                        }
            push(v.name, worst);
        }
    }
    // diagonal sums over one index, traced over one site -> I4 / 2
    {
        struct Var { const char* name; int traced; int sum_idx; };
        const std::vector<Var> vars{
            {"ghz: sum_j tr1 |G_ijk><G_ijk| = I4/2", 1, 1}, {"ghz: sum_k tr1 |G_ijk><G_ijk| = I4/2", 1, 2},
            {"ghz: sum_i tr2 |G_ijk><G_ijk| = I4/2", 2, 0}, {"ghz: sum_k tr2 |G_ijk><G_ijk| = I4/2", 2, 2},
            {"ghz: sum_i tr3 |G_ijk><G_ijk| = I4/2", 3, 0}, {"ghz: sum_j tr3 |G_ijk><G_ijk| = I4/2", 3, 1},
        };
        for (const auto& v : vars) {
            double worst = 0;
            const int a = v.sum_idx == 0 ? 1 : 0;
            const int b = v.sum_idx == 2 ? 1 : 2;
            std::vector<int> keep;
            for (int s = 1; s <= 3; ++s)
                if (s != v.traced) keep.push_back(s);
            for (int av : bits)
                for (int bv : bits) {
                    PairList ps;
                    for (int s : bits) {
                        int idx[3];
                        idx[v.sum_idx] = s;
                        idx[a] = av;
                        idx[b] = bv;
                        SparseState g = ghz_state(idx[0], idx[1], idx[2]);
                        ps.emplace_back(g, g);
                    }
                    worst = std::max(worst, detail::cross_sum_dev(ps, keep, 0.5));
                }
            push(v.name, worst);
        }
    }
    // sums over two indices, traced over one site, third index primed -> I4 d(..)
    {
        struct Var { const char* name; int traced; int delta_idx; };
        const std::vector<Var> vars{
            {"ghz: sum_ij tr1 |G_ijk><G_ijk'| = I4 d(kk')", 1, 2}, {"ghz: sum_ij tr2 |G_ijk><G_ijk'| = I4 d(kk')", 2, 2},
            {"ghz: sum_ik tr1 |G_ijk><G_ij'k| = I4 d(jj')", 1, 1}, {"ghz: sum_ik tr3 |G_ijk><G_ij'k| = I4 d(jj')", 3, 1},
            {"ghz: sum_jk tr2 |G_ijk><G_i'jk| = I4 d(ii')", 2, 0}, {"ghz: sum_jk tr3 |G_ijk><G_i'jk| = I4 d(ii')", 3, 0},
            {"ghz: sum_jk tr1 |G_ijk><G_i'jk| = I4 d(ii')", 1, 0}, {"ghz: sum_ik tr2 |G_ijk><G_ij'k| = I4 d(jj')", 2, 1},
            {"ghz: sum_ij tr3 |G_ijk><G_ijk'| = I4 d(kk')", 3, 2},
        };
        for (const auto& v : vars) {
            double worst = 0;
            const int a = v.delta_idx == 0 ? 1 : 0;
            const int b = v.delta_idx == 2 ? 1 : 2;
            std::vector<int> keep;
            for (int s = 1; s <= 3; ++s)
                if (s != v.traced) keep.push_back(s);
            for (int dv : bits)
                for (int dv2 : bits) {
                    PairList ps;
                    for (int av : bits)
                        for (int bv : bits) {
                            int idx[3], idx2[3];
                            idx[a] = idx2[a] = av;
                            idx[b] = idx2[b] = bv;
                            idx[v.delta_idx] = dv;
                            idx2[v.delta_idx] = dv2;
                            ps.emplace_back(ghz_state(idx[0], idx[1], idx[2]), ghz_state(idx2[0], idx2[1], idx2[2]));
                        }
                    worst = std::max(worst, detail::cross_sum_dev(ps, keep, dv == dv2 ? 1.0 : 0.0));
                }
            push(v.name, worst);
        }
    }

    // --- Bell family ------------------------------------------------------
    {
        double worst = 0;
        for (int x : bits)
            for (int y : bits)
                for (int x2 : bits)
                    for (int y2 : bits) {
                        const Amplitude ip = inner(bell_state(x, y), bell_state(x2, y2));
                        const double expect = (x == x2 && y == y2) ? 1.0 : 0.0;
                        worst = std::max(worst, std::abs(ip - expect));
                    }
        push("bell: <p_xy|p_x'y'> = d(xx')d(yy')", worst);
    }
    {
        PairList ps;
        for (int x : bits)
            for (int y : bits) {
                SparseState b = bell_state(x, y);
                ps.emplace_back(b, b);
            }
        push("bell: sum_xy |p_xy><p_xy| = I4", detail::cross_sum_dev(ps, {1, 2}, 1.0));
    }
    // composite-index inner products: delta in one of the four components
    {
        struct Var { const char* name; int delta_pos; };  // 0:x1 1:x2 2:y1 3:y2
        const std::vector<Var> vars{
            {"bell: <p_(x1+x2)(y1+y2)|p_(x1'+x2)(y1+y2)> = d(x1x1')", 0},
            {"bell: <p_(x1+x2)(y1+y2)|p_(x1+x2')(y1+y2)> = d(x2x2')", 1},
            {"bell: <p_(x1+x2)(y1+y2)|p_(x1+x2)(y1'+y2)> = d(y1y1')", 2},
            {"bell: <p_(x1+x2)(y1+y2)|p_(x1+x2)(y1+y2')> = d(y2y2')", 3},
        };
        for (const auto& v : vars) {
            double worst = 0;
            for (int x1 : bits)
                for (int x2 : bits)
                    for (int y1 : bits)
                        for (int y2 : bits)
                            for (int dv : bits) {
                                int c[4] = {x1, x2, y1, y2}, c2[4] = {x1, x2, y1, y2};
                                c2[v.delta_pos] = dv;
                                const Amplitude ip = inner(bell_state((c[0] + c[1]) % 2, (c[2] + c[3]) % 2),
                                                           bell_state((c2[0] + c2[1]) % 2, (c2[2] + c2[3]) % 2));
                                const double expect = c[v.delta_pos] == dv ? 1.0 : 0.0;
                                worst = std::max(worst, std::abs(ip - expect));
                            }
            push(v.name, worst);
        }
    }
    // traced sums with composite indices
    {
        struct Var { const char* name; int traced; int sum_pos; int delta_pos; };
        const std::vector<Var> vars{
            {"bell: sum_x2 tr2 |p><p'| = I2 d(x1x1')", 2, 1, 0},
            {"bell: sum_x1 tr2 |p><p'| = I2 d(x2x2')", 2, 0, 1},
            {"bell: sum_y1 tr1 |p><p'| = I2 d(x1x1')", 1, 2, 0},
            {"bell: sum_y2 tr1 |p><p'| = I2 d(x1x1')", 1, 3, 0},
            {"bell: sum_y1 tr1 |p><p'| = I2 d(x2x2')", 1, 2, 1},
            {"bell: sum_y2 tr1 |p><p'| = I2 d(x2x2')", 1, 3, 1},
        };
        for (const auto& v : vars) {
            double worst = 0;
            std::vector<int> others;
            for (int p = 0; p < 4; ++p)
                if (p != v.sum_pos && p != v.delta_pos) others.push_back(p);
            for (int dv : bits)
                for (int dv2 : bits)
                    for (int o1 : bits)
                        for (int o2 : bits) {
                            PairList ps;
                            for (int s : bits) {
                                int c[4], c2[4];
                                c[v.sum_pos] = c2[v.sum_pos] = s;
                                c[v.delta_pos] = dv;
                                c2[v.delta_pos] = dv2;
                                c[others[0]] = c2[others[0]] = o1;
                                c[others[1]] = c2[others[1]] = o2;
                                ps.emplace_back(bell_state((c[0] + c[1]) % 2, (c[2] + c[3]) % 2),
                                                bell_state((c2[0] + c2[1]) % 2, (c2[2] + c2[3]) % 2));
                            }
                            worst = std::max(worst,
                                             detail::cross_sum_dev(ps, {3 - v.traced}, dv == dv2 ? 1.0 : 0.0));
                        }
            push(v.name, worst);
        }
    }
    // completeness over any (x_i, y_j) pair of summed components
    {
        for (int xi : {0, 1})
            for (int yj : {2, 3}) {
                double worst = 0;
                const int xo = 1 - xi, yo = 5 - yj;
                for (int xv : bits)
                    for (int yv : bits) {
                        PairList ps;
                        for (int sx : bits)
                            for (int sy : bits) {
                                int c[4];
                                c[xi] = sx;
                                c[xo] = xv;
                                c[yj] = sy;
                                c[yo] = yv;
                                SparseState b = bell_state((c[0] + c[1]) % 2, (c[2] + c[3]) % 2);
                                ps.emplace_back(b, b);
                            }
                        worst = std::max(worst, detail::cross_sum_dev(ps, {1, 2}, 1.0));
                    }
                push("bell: sum_(x" + std::to_string(xi + 1) + ",y" + std::to_string(yj - 1) +
                         ") |p><p| = I4",
                     worst);
            }
    }

    // --- psi family over GF(4), GF(5), GF(7) -------------------------------
    for (int d : {4, 5, 7}) {
        Field f = Field::of_order(d);
        const int alpha = 2, beta = 1;
        struct Var { const char* fmt; int traced; bool sum_over_j; };
        const std::vector<Var> vars{
            {"psi(d=%d): sum_j tr1 |s_ijk><s_ijk| = I/d", 1, true},
            {"psi(d=%d): sum_k tr1 |s_ijk><s_ijk| = I/d", 1, false},
            {"psi(d=%d): sum_j tr2 |s_ijk><s_ijk| = I/d", 2, true},
            {"psi(d=%d): sum_j tr3 |s_ijk><s_ijk| = I/d", 3, true},
            {"psi(d=%d): sum_k tr3 |s_ijk><s_ijk| = I/d", 3, false},
        };
        for (const auto& v : vars) {
            double worst = 0;
            std::vector<int> keep;
            for (int s = 1; s <= 3; ++s)
                if (s != v.traced) keep.push_back(s);
            for (int i = 0; i < d; ++i)
                for (int other = 0; other < d; ++other) {
                    PairList ps;
                    for (int s = 0; s < d; ++s) {
                        const int j = v.sum_over_j ? s : other;
                        const int k = v.sum_over_j ? other : s;
                        SparseState st = psi_state(f, i, j, k, alpha, beta);
                        ps.emplace_back(st, st);
                    }
                    worst = std::max(worst, detail::cross_sum_dev(ps, keep, 1.0 / d));
                }
            char buf[96];
            std::snprintf(buf, sizeof(buf), v.fmt, d);
            push(buf, worst);
        }
    }
    return out;
}

}  // namespace quoa
