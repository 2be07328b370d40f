// qoa.hpp
// Builders for the quantum orthogonal array families, parameter selection for
// the prime-power constructions, conversion of classical irredundant arrays,
// state assembly, and the (N, d, k) coverage dispatcher.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quoa/ffield.hpp"
#include "quoa/oarray.hpp"
#include "quoa/qstate.hpp"

namespace quoa {

/// An ordered list of r mutually orthogonal N-site pure states plus the
/// (r, N, d, k) metadata and a human-readable provenance string.
struct QuantumOA {
    int r = 0, N = 0, d = 0, k = 0;
    std::string provenance;
    std::vector<SparseState> rows;
};

/// Parameters for the GF(d) strength-3 constructions: alphas = (1, a2, ...,
/// an) distinct nonzero, beta nonzero and outside the exclusion list
/// { a2^2-1, a2^2+a2 } u { a2*as, (a2-1)*as : s = 1..n }.
struct QudParams {
    Field field;
    std::vector<int> alphas;  // element indices, alphas[0] == 1
    int beta = 0;
};

inline std::vector<int> qud_forbidden_betas(const Field& f, const std::vector<int>& alphas) {
    const int a2 = alphas.at(1);
    const int a2sq = f.mul(a2, a2);
    std::set<int> bad{f.sub(a2sq, 1), f.add(a2sq, a2)};
    for (int as : alphas) {
        bad.insert(f.mul(a2, as));
        bad.insert(f.mul(f.sub(a2, 1), as));
    }
    return {bad.begin(), bad.end()};
}

inline bool qud_params_valid(const QudParams& p) {
    const Field& f = p.field;
    const auto& al = p.alphas;
    if (al.size() < 2 || al[0] != 1) return false;
    std::set<int> seen;
    for (int a : al) {
        if (a <= 0 || a >= f.order() || !seen.insert(a).second) return false;
    }
    const int a2 = al[1];
    if (f.mul(a2, a2) == 1) return false;
    if (p.beta <= 0 || p.beta >= f.order()) return false;
    const auto bad = qud_forbidden_betas(f, al);
    return std::find(bad.begin(), bad.end(), p.beta) == bad.end();
}

namespace detail {

inline SparseState tensor_power(const SparseState& base, const SparseState& factor, int m) {
    SparseState out = base;
    for (int i = 0; i < m; ++i) out = tensor(out, factor);
    return out;
}

inline Ket to_ket(const std::vector<int>& digits) {
    Ket k;
    k.reserve(digits.size());
    for (int d : digits) k.push_back(static_cast<std::uint8_t>(d));
    return k;
}

}  // namespace detail

/// QOA(8, 3+3m, 2, 3): rows |i j k> (x) GHZ_ijk^(x)m, for m >= 1, m != 2.
inline QuantumOA build_qubit_3_3m(int m) {
    if (m < 1) throw std::invalid_argument("build_qubit_3_3m: m must be >= 1");
    if (m == 2)
        throw std::invalid_argument(
            "build_qubit_3_3m: m = 2 is excluded (the marginal on sites {1,4,7} is not maximally mixed; "
            "see m2_counterexample)");
    QuantumOA q{8, 3 + 3 * m, 2, 3, "qubit_3_3m(m=" + std::to_string(m) + ")", {}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                q.rows.push_back(detail::tensor_power(basis_ket(2, detail::to_ket({i, j, k})), ghz_state(i, j, k), m));
    return q;
}

/// QOA(8, 4+3m, 2, 3): rows |i, j, k, i+j+k> (x) GHZ_ijk^(x)m, for m >= 2.
inline QuantumOA build_qubit_4_3m(int m) {
    if (m < 2)
        throw std::invalid_argument(
            "build_qubit_4_3m: m must be >= 2 (m = 1 would require a 3-uniform 7-qubit state, which does not exist)");
    QuantumOA q{8, 4 + 3 * m, 2, 3, "qubit_4_3m(m=" + std::to_string(m) + ")", {}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                q.rows.push_back(detail::tensor_power(basis_ket(2, detail::to_ket({i, j, k, (i + j + k) % 2})),
                                                      ghz_state(i, j, k), m));
    return q;
}

/// QOA(32, 11+3m, 2, 3): rows
/// |i j k f g> (x) bell(f+i, g+j) (x) bell(g+k, f+i) (x) bell(g+j, i+k) (x) GHZ_jfg^(x)m.
inline QuantumOA build_qubit_11_3m(int m) {
    if (m < 1) throw std::invalid_argument("build_qubit_11_3m: m must be >= 1");
    QuantumOA q{32, 11 + 3 * m, 2, 3, "qubit_11_3m(m=" + std::to_string(m) + ")", {}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int f = 0; f < 2; ++f)
                    for (int g = 0; g < 2; ++g) {
                        SparseState row = basis_ket(2, detail::to_ket({i, j, k, f, g}));
                        row = tensor(row, bell_state((f + i) % 2, (g + j) % 2));
                        row = tensor(row, bell_state((g + k) % 2, (f + i) % 2));
                        row = tensor(row, bell_state((g + j) % 2, (i + k) % 2));
                        q.rows.push_back(detail::tensor_power(row, ghz_state(j, f, g), m));
                    }
    return q;
}

namespace detail {

inline SparseState qud_row(const Field& f, const std::vector<int>& alphas, int beta, int i, int j, int k, int m) {
    std::vector<int> cls{i, k};
    for (int a : alphas) cls.push_back(f.add(i, f.add(f.mul(a, j), f.mul(f.mul(a, a), k))));
    return tensor_power(basis_ket(f.order(), to_ket(cls)), psi_state(f, i, j, k, alphas[1], beta), m);
}

inline QuantumOA build_qud_common(const QudParams& p, int m, const std::string& provenance) {
    const Field& f = p.field;
    const int d = f.order();
    const int n = static_cast<int>(p.alphas.size());
    QuantumOA q{d * d * d, 2 + n + 3 * m, d, 3, provenance, {}};
    q.rows.reserve(static_cast<std::size_t>(q.r));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) q.rows.push_back(qud_row(f, p.alphas, p.beta, i, j, k, m));
    return q;
}

inline std::string params_string(const QudParams& p) {
    std::ostringstream os;
    os << "alphas=(";
    for (std::size_t i = 0; i < p.alphas.size(); ++i) os << (i ? "," : "") << p.alphas[i];
    os << "),beta=" << p.beta;
    return os.str();
}

}  // namespace detail

/// QOA(d^3, 4+3m, d, 3) for prime-power d > 3: rows
/// |i, k, i+j+k, i+a2*j+a2^2*k> (x) psi_ijk^(x)m, with the four-column
/// exclusion list beta not in {a2, a2^2, a2-1, a2^2-1, a2^2+a2, a2^2-a2}.
inline QuantumOA build_qud_4_3m(const QudParams& p, int m) {
    const Field& f = p.field;
    if (f.order() <= 3) throw std::invalid_argument("build_qud_4_3m: needs field order > 3");
    if (m < 1) throw std::invalid_argument("build_qud_4_3m: m must be >= 1");
    if (p.alphas.size() != 2 || p.alphas[0] != 1)
        throw std::invalid_argument("build_qud_4_3m: alphas must be (1, a2)");
    const int a2 = p.alphas[1];
    if (a2 <= 0 || a2 >= f.order() || f.mul(a2, a2) == 1)
        throw std::invalid_argument("build_qud_4_3m: a2 must be nonzero with a2^2 != 1");
    const int a2sq = f.mul(a2, a2);
    const std::set<int> bad{a2, a2sq, f.sub(a2, 1), f.sub(a2sq, 1), f.add(a2sq, a2), f.sub(a2sq, a2)};
    if (p.beta <= 0 || p.beta >= f.order() || bad.count(p.beta))
        throw std::invalid_argument("build_qud_4_3m: beta " + std::to_string(p.beta) +
                                    " is excluded for a2 = " + std::to_string(a2));
    return detail::build_qud_common(
        p, m, "qud_4_3m(d=" + std::to_string(f.order()) + "," + detail::params_string(p) + ",m=" + std::to_string(m) + ")");
}

/// QOA(d^3, 2+n+3m, d, 3) for prime-power d > 3: rows
/// |i, k, i+a1*j+a1^2*k, ..., i+an*j+an^2*k> (x) psi_ijk^(x)m with the
/// consolidated beta exclusion list (see QudParams).
inline QuantumOA build_qud_2_n_3m(const QudParams& p, int m) {
    const Field& f = p.field;
    if (f.order() <= 3) throw std::invalid_argument("build_qud_2_n_3m: needs field order > 3");
    if (m < 1) throw std::invalid_argument("build_qud_2_n_3m: m must be >= 1");
    if (!qud_params_valid(p)) throw std::invalid_argument("build_qud_2_n_3m: parameters violate the exclusion list");
    return detail::build_qud_common(p, m,
                                    "qud_2_n_3m(d=" + std::to_string(f.order()) + ",n=" +
                                        std::to_string(p.alphas.size()) + "," + detail::params_string(p) +
                                        ",m=" + std::to_string(m) + ")");
}

/// Parameter selection for build_qud_2_n_3m, n in [2, 4]. Fields of order
/// 7, 8, 11 and 13 use the fixed tuples (1,2,3,4 ; 5) / GF(8): (1, x, x^2,
/// x+1 ; x^2+x+1), truncated to n. Everything else (including GF(9), whose
/// published tuple fails the exclusion list) uses a deterministic search:
/// a2 ascending skipping a2^2 = 1, remaining alphas the smallest free
/// indices ascending, beta ascending, first tuple passing qud_params_valid.
inline QudParams select_params(const Field& f, int n) {
    const int d = f.order();
    if (d < 7) throw std::invalid_argument("select_params: needs field order >= 7");
    if (n < 2 || n > 4) throw std::invalid_argument("select_params: n must be in [2, 4]");
    auto pinned = [&](std::vector<int> alphas, int beta) {
        alphas.resize(n);
        QudParams p{f, std::move(alphas), beta};
        if (!qud_params_valid(p)) throw std::logic_error("select_params: pinned tuple failed validation");
        return p;
    };
    if (f.degree() == 1 && (d == 7 || d == 11 || d == 13)) return pinned({1, 2, 3, 4}, 5);
    if (d == 8 && f.degree() == 3) return pinned({1, 2, 4, 3}, 7);
    for (int a2 = 2; a2 < d; ++a2) {
        if (f.mul(a2, a2) == 1) continue;
        std::vector<int> alphas{1, a2};
        for (int c = 2; static_cast<int>(alphas.size()) < n; ++c)
            if (c != a2) alphas.push_back(c);
        for (int beta = 1; beta < d; ++beta) {
            QudParams p{f, alphas, beta};
            if (qud_params_valid(p)) return p;
        }
    }
    throw std::runtime_error("select_params: no valid tuple exists for d = " + std::to_string(d) +
                             ", n = " + std::to_string(n) + " (unexpected for d >= 7)");
}

/// The d in {3, 5} family, N = 4+3m.
///
/// d = 5 rows are |i, k, i+j+k, i+2j+4k> (x) psi_ijk(alpha=2, beta=1)^(x)m,
/// which verifies as a QOA(125, 4+3m, 5, 3) even though the exclusion list
/// of build_qud_4_3m (which is sufficient, not necessary) admits no beta at
/// d = 5.
///
/// d = 3 rows are |i, j, k, 2(i+j+k)> (x) phi3_ijk^(x)m. No arrangement of
/// this zero-sum-prefix shape reaches strength 3 at d = 3 (for N = 7 it
/// would be an absolutely maximally entangled 7-qutrit state); the rows are
/// built for reference and fail qoa_check, so dispatch() does not route to
/// them.
inline QuantumOA build_qud35(int d, int m) {
    if (d != 3 && d != 5) throw std::invalid_argument("build_qud35: d must be 3 or 5");
    if (m < 1) throw std::invalid_argument("build_qud35: m must be >= 1");
    QuantumOA q{d * d * d, 4 + 3 * m, d, 3, "qud35(d=" + std::to_string(d) + ",m=" + std::to_string(m) + ")", {}};
    if (d == 5) {
        Field f(5);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    q.rows.push_back(detail::qud_row(f, {1, 2}, 1, i, j, k, m));
        return q;
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                q.rows.push_back(detail::tensor_power(
                    basis_ket(d, detail::to_ket({i, j, k, (d - 1) * (i + j + k) % d})), phi3_state(d, i, j, k), m));
    return q;
}

/// Strength-2 qubit families: base_columns = 2 gives QOA(4, 2+2m, 2, 2) for
/// m >= 2, base_columns = 3 gives QOA(4, 3+2m, 2, 2) for m >= 1; rows are
/// |i j [i+j]> (x) bell(i, j)^(x)m.
inline QuantumOA build_strength2_qubit(int base_columns, int m) {
    if (base_columns != 2 && base_columns != 3)
        throw std::invalid_argument("build_strength2_qubit: base_columns must be 2 or 3");
    if (base_columns == 2 && m < 2)
        throw std::invalid_argument("build_strength2_qubit: the 2-column variant needs m >= 2");
    if (base_columns == 3 && m < 1)
        throw std::invalid_argument("build_strength2_qubit: the 3-column variant needs m >= 1");
    QuantumOA q{4, base_columns + 2 * m, 2, 2,
                "strength2_qubit(cols=" + std::to_string(base_columns) + ",m=" + std::to_string(m) + ")", {}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::vector<int> cls{i, j};
            if (base_columns == 3) cls.push_back((i + j) % 2);
            q.rows.push_back(detail::tensor_power(basis_ket(2, detail::to_ket(cls)), bell_state(i, j), m));
        }
    return q;
}

/// Strength-2 families over GF(d), d >= 3 prime power: base_columns = 3 gives
/// rows |i, j, i+j> (x) phi2_ij^(x)m; base_columns = 4 appends i + alpha*j
/// with alpha not in {0, 1}.
inline QuantumOA build_strength2_qud(const Field& f, int base_columns, int m, std::optional<int> alpha = std::nullopt) {
    const int d = f.order();
    if (d < 3) throw std::invalid_argument("build_strength2_qud: needs field order >= 3");
    if (m < 1) throw std::invalid_argument("build_strength2_qud: m must be >= 1");
    if (base_columns != 3 && base_columns != 4)
        throw std::invalid_argument("build_strength2_qud: base_columns must be 3 or 4");
    int a = 0;
    if (base_columns == 4) {
        if (!alpha) throw std::invalid_argument("build_strength2_qud: the 4-column variant needs alpha");
        a = *alpha;
        if (a == 0 || a == 1) throw std::invalid_argument("build_strength2_qud: alpha must differ from 0 and 1");
        if (a < 0 || a >= d) throw std::invalid_argument("build_strength2_qud: alpha out of range");
    }
    std::string prov = "strength2_qud(d=" + std::to_string(d) + ",cols=" + std::to_string(base_columns) +
                       ",m=" + std::to_string(m) + (base_columns == 4 ? ",alpha=" + std::to_string(a) : "") + ")";
    QuantumOA q{d * d, base_columns + 2 * m, d, 2, std::move(prov), {}};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<int> cls{i, j, f.add(i, j)};
            if (base_columns == 4) cls.push_back(f.add(i, f.mul(a, j)));
            q.rows.push_back(detail::tensor_power(basis_ket(d, detail::to_ket(cls)), phi2_state(f, i, j), m));
        }
    return q;
}

/// Writes each row of an irredundant strength-k orthogonal array as a
/// computational-basis state. Errors if either check fails.
inline QuantumOA oa_to_qoa(const OrthogonalArray& oa, int k) {
    if (!strength_check(oa, k)) throw std::invalid_argument("oa_to_qoa: array fails the strength-" + std::to_string(k) + " check");
    if (!irredundancy_check(oa, k))
        throw std::invalid_argument("oa_to_qoa: array is not irredundant at strength " + std::to_string(k));
    QuantumOA q{oa.runs(), oa.factors(), oa.levels, k,
                "oa_to_qoa(r=" + std::to_string(oa.runs()) + ",N=" + std::to_string(oa.factors()) + ",d=" +
                    std::to_string(oa.levels) + ",k=" + std::to_string(k) + ")", {}};
    for (const auto& row : oa.rows) q.rows.push_back(basis_ket(oa.levels, detail::to_ket(row)));
    return q;
}

/// Equal-weight superposition of the rows, (1/sqrt r) * sum_i |row_i>.
inline SparseState assemble_state(const QuantumOA& q) {
    if (q.rows.empty()) throw std::invalid_argument("assemble_state: no rows");
    SparseState out(q.d, q.N);
    const double w = 1.0 / std::sqrt(static_cast<double>(q.rows.size()));
    for (const auto& row : q.rows)
        for (const auto& [ket, amp] : row.amps()) out.accumulate(ket, w * amp);
    return out;
}

/// Coverage dispatcher: picks the builder for the requested (N, d, k),
/// preferring the smallest r. Throws for combinations outside the covered
/// families (for k = 3 at d = 2 these are N < 6 and N in {7, 8, 9, 11};
/// d = 3 has no verified strength-3 route; d in {4, 6, ...} none exists).
inline QuantumOA dispatch(int N, int d, int k) {
    auto not_covered = [&](const std::string& why) {
        return std::invalid_argument("dispatch: (N=" + std::to_string(N) + ", d=" + std::to_string(d) +
                                     ", k=" + std::to_string(k) + ") is not covered by the implemented constructions: " + why);
    };
    if (k == 2) {
        if (N < 5) throw not_covered("strength 2 needs N >= 5");
        if (d == 2) {
            if (N % 2 == 1) return build_strength2_qubit(3, (N - 3) / 2);
            return build_strength2_qubit(2, (N - 2) / 2);
        }
        Field f = Field::of_order(d);  // throws for non-prime-powers
        if (N % 2 == 1) return build_strength2_qud(f, 3, (N - 3) / 2);
        return build_strength2_qud(f, 4, (N - 4) / 2, 2);
    }
    if (k == 3) {
        if (d == 2) {
            if (N < 6 || N == 7 || N == 8 || N == 9 || N == 11) throw not_covered("no qubit strength-3 family");
            switch (N % 3) {
                case 0: return build_qubit_3_3m(N / 3 - 1);
                case 1: return build_qubit_4_3m((N - 4) / 3);
                default: return build_qubit_11_3m((N - 11) / 3);
            }
        }
        if (d == 3) throw not_covered("the 3-level family fails strength-3 verification (see build_qud35)");
        if (d == 5) {
            if (N < 7 || N % 3 != 1) throw not_covered("the 5-level family needs N = 4+3m, m >= 1");
            return build_qud35(5, (N - 4) / 3);
        }
        Field f = Field::of_order(d);
        if (d < 7) throw not_covered("strength 3 needs d >= 7 (or d = 5)");
        if (N < 7) throw not_covered("strength 3 at d >= 7 needs N >= 7");
        const int n = 2 + (N - 7) % 3;
        const int m = (N - 2 - n) / 3;
        return build_qud_2_n_3m(select_params(f, n), m);
    }
    throw not_covered("strength must be 2 or 3");
}

}  // namespace quoa
