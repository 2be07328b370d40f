// qstate.hpp
// Sparse pure states on n qudit sites, partial traces, and the concrete
// state families used by the quantum orthogonal array builders: the signed
// 3-qubit GHZ basis, the Bell basis, and the d-level character bases over
// GF(d). Site 1 is the leftmost tensor factor and the most significant digit
// when a ket is linearized to an integer index.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "quoa/ffield.hpp"

namespace quoa {

using Ket = std::vector<std::uint8_t>;
using Amplitude = std::complex<double>;

/// Amplitudes at or below this magnitude are dropped after arithmetic.
inline constexpr double kAmpDropTol = 1e-14;

/// An n-site, d-level pure state stored as ket -> amplitude, kets in
/// lexicographic order.
class SparseState {
  public:
    SparseState(int d, int n) : d_(d), n_(n) {
        if (d < 2 || d > 255) throw std::invalid_argument("SparseState: local dimension out of range");
        if (n < 1) throw std::invalid_argument("SparseState: need at least one site");
    }

    int dim() const { return d_; }
    int sites() const { return n_; }
    const std::map<Ket, Amplitude>& amps() const { return amps_; }
    std::size_t term_count() const { return amps_.size(); }

    /// Adds `a` to the amplitude of `ket`, dropping the entry if the result
    /// falls below the drop tolerance.
    void accumulate(const Ket& ket, Amplitude a) {
        check_ket(ket);
        auto it = amps_.find(ket);
        if (it == amps_.end()) {
            if (std::abs(a) > kAmpDropTol) amps_.emplace(ket, a);
        } else {
            it->second += a;
            if (std::abs(it->second) <= kAmpDropTol) amps_.erase(it);
        }
    }

    Amplitude amplitude(const Ket& ket) const {
        auto it = amps_.find(ket);
        return it == amps_.end() ? Amplitude{0.0, 0.0} : it->second;
    }

    double norm2() const {
        double s = 0;
        for (const auto& [k, a] : amps_) s += std::norm(a);
        return s;
    }
    double norm() const { return std::sqrt(norm2()); }

  private:
    void check_ket(const Ket& ket) const {
        if (static_cast<int>(ket.size()) != n_) throw std::invalid_argument("SparseState: ket has wrong site count");
        for (auto digit : ket)
            if (digit >= d_) throw std::invalid_argument("SparseState: ket digit out of range");
    }

    int d_, n_;
    std::map<Ket, Amplitude> amps_;
};

inline SparseState basis_ket(int d, const Ket& digits) {
    SparseState s(d, static_cast<int>(digits.size()));
    s.accumulate(digits, 1.0);
    return s;
}

inline SparseState add(const SparseState& a, const SparseState& b) {
    if (a.dim() != b.dim() || a.sites() != b.sites())
        throw std::invalid_argument("add: states have different shapes");
    SparseState out = a;
    for (const auto& [k, v] : b.amps()) out.accumulate(k, v);
    return out;
}

inline SparseState scalar_mul(Amplitude c, const SparseState& a) {
    SparseState out(a.dim(), a.sites());
    for (const auto& [k, v] : a.amps()) out.accumulate(k, c * v);
    return out;
}

/// Tensor product; sites of `a` come first (leftmost ket factor = site 1).
inline SparseState tensor(const SparseState& a, const SparseState& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("tensor: states have different local dimensions");
    SparseState out(a.dim(), a.sites() + b.sites());
    for (const auto& [ka, va] : a.amps())
        for (const auto& [kb, vb] : b.amps()) {
            Ket k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            out.accumulate(k, va * vb);
        }
    return out;
}

/// <a|b>, conjugate-linear in the first argument.
inline Amplitude inner(const SparseState& a, const SparseState& b) {
    if (a.dim() != b.dim() || a.sites() != b.sites())
        throw std::invalid_argument("inner: states have different shapes");
    Amplitude s = 0;
    const auto& small = a.amps().size() <= b.amps().size() ? a : b;
    const auto& large = a.amps().size() <= b.amps().size() ? b : a;
    const bool conj_small = &small == &a;
    for (const auto& [k, v] : small.amps()) {
        auto it = large.amps().find(k);
        if (it == large.amps().end()) continue;
        s += conj_small ? std::conj(v) * it->second : std::conj(it->second) * v;
    }
    return s;
}

inline SparseState normalize(const SparseState& a) {
    double n = a.norm();
    if (n <= kAmpDropTol) throw std::invalid_argument("normalize: state has (near-)zero norm");
    return scalar_mul(1.0 / n, a);
}

// ---------------------------------------------------------------------------
// State families
// ---------------------------------------------------------------------------

/// Signed Pauli-twisted 3-qubit GHZ basis element:
/// (-1)^a * ( |i~ j~ k~estem> + (-1)^w |i j k> ) / sqrt(2), where x~ = 1-x,
/// a = 1 iff i = j = k, and w is the number of 1s among (i, j, k).
inline SparseState ghz_state(int i, int j, int k) {
    for (int x : {i, j, k})
        if (x != 0 && x != 1) throw std::invalid_argument("ghz_state: indices must be bits");
    const double s = ((i == j && j == k) ? -1.0 : 1.0) / std::numbers::sqrt2;
    const double w = (i + j + k) % 2 == 0 ? 1.0 : -1.0;
    SparseState st(2, 3);
    st.accumulate({static_cast<std::uint8_t>(1 - i), static_cast<std::uint8_t>(1 - j), static_cast<std::uint8_t>(1 - k)}, s);
    st.accumulate({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(k)}, s * w);
    return st;
}

/// Bell basis element ( (-1)^x |x y> + |x~ y~> ) / sqrt(2).
inline SparseState bell_state(int x, int y) {
    for (int v : {x, y})
        if (v != 0 && v != 1) throw std::invalid_argument("bell_state: indices must be bits");
    SparseState st(2, 2);
    st.accumulate({static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)}, (x ? -1.0 : 1.0) / std::numbers::sqrt2);
    st.accumulate({static_cast<std::uint8_t>(1 - x), static_cast<std::uint8_t>(1 - y)}, 1.0 / std::numbers::sqrt2);
    return st;
}

namespace detail {

/// exp(2*pi*I * e / p): the additive-character phase. For prime fields the
/// exponent e = trace(i*l) is the plain product i*l mod p, matching the
/// literal w^{il}; for extension fields the trace pairing keeps all character
/// sums over cosets exactly zero, which the index of the product would not.
inline Amplitude char_phase(int e, int p) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(p));
}

inline std::uint8_t u8(int x) { return static_cast<std::uint8_t>(x); }

}  // namespace detail

/// d-level 3-site basis element over GF(d):
/// (1/sqrt d) sum_l w^{<i,l>} |l+j, l+alpha*j+beta*k, l>, field arithmetic in
/// the kets, <i,l> the trace pairing. Requires alpha not in {0,1}, beta != 0.
inline SparseState psi_state(const Field& f, int i, int j, int k, int alpha, int beta) {
    const int d = f.order();
    if (d < 3) throw std::invalid_argument("psi_state: needs field order >= 3");
    if (alpha == 0 || alpha == 1) throw std::invalid_argument("psi_state: alpha must differ from 0 and 1");
    if (beta == 0) throw std::invalid_argument("psi_state: beta must be nonzero");
    SparseState st(d, 3);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    const int shift2 = f.add(f.mul(alpha, j), f.mul(beta, k));
    for (int l = 0; l < d; ++l) {
        Ket ket{detail::u8(f.add(l, j)), detail::u8(f.add(l, shift2)), detail::u8(l)};
        st.accumulate(ket, amp * detail::char_phase(f.pairing(i, l), f.p()));
    }
    return st;
}

/// 2-site analogue: (1/sqrt d) sum_l w^{<i,l>} |l+j, l>.
inline SparseState phi2_state(const Field& f, int i, int j) {
    const int d = f.order();
    if (d < 3) throw std::invalid_argument("phi2_state: needs field order >= 3");
    SparseState st(d, 2);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int l = 0; l < d; ++l)
        st.accumulate({detail::u8(f.add(l, j)), detail::u8(l)}, amp * detail::char_phase(f.pairing(i, l), f.p()));
    return st;
}

/// 3-site modular-arithmetic basis element for d in {3, 5}:
/// (1/sqrt d) sum_l w^{il} |l+2j+k, l+j+k, l> (sums mod d). The ket map is
/// unimodular, so the d^3 states form an orthonormal basis for both d.
inline SparseState phi3_state(int d, int i, int j, int k) {
    if (d != 3 && d != 5) throw std::invalid_argument("phi3_state: d must be 3 or 5");
    for (int x : {i, j, k})
        if (x < 0 || x >= d) throw std::invalid_argument("phi3_state: index out of range");
    SparseState st(d, 3);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int l = 0; l < d; ++l) {
        Ket ket{detail::u8((l + 2 * j + k) % d), detail::u8((l + j + k) % d), detail::u8(l)};
        st.accumulate(ket, amp * detail::char_phase((i * l) % d, d));
    }
    return st;
}

// ---------------------------------------------------------------------------
// Reduced density matrices
// ---------------------------------------------------------------------------

/// Dense complex matrix indexed by kets over a site subset; dim = d^|S|.
class DensityMatrix {
  public:
    DensityMatrix(int local_dim, int subset_sites)
        : d_(local_dim), s_(subset_sites), dim_(1) {
        for (int i = 0; i < s_; ++i) {
            if (static_cast<long>(dim_) * d_ > 4096)
                throw std::invalid_argument("DensityMatrix: dimension above the 4096 cap");
            dim_ *= d_;
        }
        m_.assign(static_cast<std::size_t>(dim_) * dim_, Amplitude{0.0, 0.0});
    }

    int dim() const { return dim_; }
    int local_dim() const { return d_; }
    int subset_sites() const { return s_; }

    Amplitude& at(int a, int b) { return m_[static_cast<std::size_t>(a) * dim_ + b]; }
    const Amplitude& at(int a, int b) const { return m_[static_cast<std::size_t>(a) * dim_ + b]; }

    double trace_real() const {
        double t = 0;
        for (int a = 0; a < dim_; ++a) t += at(a, a).real();
        return t;
    }

    double hermiticity_defect() const {
        double w = 0;
        for (int a = 0; a < dim_; ++a)
            for (int b = a; b < dim_; ++b)
                w = std::max(w, std::abs(at(a, b) - std::conj(at(b, a))));
        return w;
    }

    /// max-abs entry of (M - scale * I).
    double max_dev_from_scaled_identity(double scale) const {
        double w = 0;
        for (int a = 0; a < dim_; ++a)
            for (int b = 0; b < dim_; ++b)
                w = std::max(w, std::abs(at(a, b) - (a == b ? Amplitude{scale, 0.0} : Amplitude{0.0, 0.0})));
        return w;
    }

  private:
    int d_, s_, dim_;
    std::vector<Amplitude> m_;
};

namespace detail {

inline void check_subset(const SparseState& st, const std::vector<int>& sites) {
    if (sites.empty()) throw std::invalid_argument("partial trace: empty site subset");
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (sites[i] < 1 || sites[i] > st.sites())
            throw std::invalid_argument("partial trace: site index out of range");
        if (i > 0 && sites[i] <= sites[i - 1])
            throw std::invalid_argument("partial trace: sites must be strictly increasing");
    }
}

inline std::vector<int> complement_sites(int n, const std::vector<int>& sites) {
    std::vector<int> comp;
    std::size_t j = 0;
    for (int s = 1; s <= n; ++s) {
        if (j < sites.size() && sites[j] == s) { ++j; continue; }
        comp.push_back(s);
    }
    return comp;
}

inline int subset_index(const Ket& ket, const std::vector<int>& sites, int d) {
    int idx = 0;
    for (int s : sites) idx = idx * d + ket[static_cast<std::size_t>(s) - 1];
    return idx;
}

inline Ket subset_ket(const Ket& ket, const std::vector<int>& sites) {
    Ket out;
    out.reserve(sites.size());
    for (int s : sites) out.push_back(ket[static_cast<std::size_t>(s) - 1]);
    return out;
}

}  // namespace detail

/// Tr_{S^c} |a><b| over the 1-based site subset `sites` (strictly increasing).
/// Generally non-Hermitian; cross_reduced(a, a, S) equals reduced_density(a, S).
inline DensityMatrix cross_reduced(const SparseState& a, const SparseState& b, const std::vector<int>& sites) {
    if (a.dim() != b.dim() || a.sites() != b.sites())
        throw std::invalid_argument("cross_reduced: states have different shapes");
    detail::check_subset(a, sites);
    const auto comp = detail::complement_sites(a.sites(), sites);
    DensityMatrix rho(a.dim(), static_cast<int>(sites.size()));
    std::map<Ket, std::vector<std::pair<int, Amplitude>>> groups;
    for (const auto& [ket, amp] : b.amps())
        groups[detail::subset_ket(ket, comp)].emplace_back(detail::subset_index(ket, sites, b.dim()), amp);
    for (const auto& [ket, amp] : a.amps()) {
        auto it = groups.find(detail::subset_ket(ket, comp));
        if (it == groups.end()) continue;
        const int ia = detail::subset_index(ket, sites, a.dim());
        for (const auto& [ib, vb] : it->second) rho.at(ia, ib) += amp * std::conj(vb);
    }
    return rho;
}

/// rho_S = Tr_{S^c} |state><state|; trace equals the squared norm.
inline DensityMatrix reduced_density(const SparseState& state, const std::vector<int>& sites) {
    return cross_reduced(state, state, sites);
}

}  // namespace quoa
