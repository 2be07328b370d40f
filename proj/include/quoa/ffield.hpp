// ffield.hpp
// Exact arithmetic in GF(p^t). Elements are addressed by an integer index in
// [0, p^t): the base-p digits of the index are the coefficients of the
// polynomial representative, constant term first. This makes index 0 the
// additive and index 1 the multiplicative identity in every field.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quoa {

namespace detail {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// Coefficient vectors are constant-term first, arbitrary length.
inline std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

// Remainder of a modulo the monic polynomial m.
inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    const int deg_m = static_cast<int>(m.size()) - 1;
    for (int deg = static_cast<int>(a.size()) - 1; deg >= deg_m; --deg) {
        int c = a[deg] % p;
        if (c == 0) continue;
        for (int j = 0; j <= deg_m; ++j) {
            int idx = deg - deg_m + j;
            a[idx] = ((a[idx] - c * m[j]) % p + p) % p;
        }
    }
    a.resize(deg_m);
    return a;
}

inline bool poly_is_zero(const std::vector<int>& a) {
    for (int c : a)
        if (c != 0) return false;
    return true;
}

// Irreducibility over Z_p by trial division with all monic polynomials of
// degree 1..deg/2. Sufficient for the supported degrees t <= 4.
inline bool poly_irreducible(const std::vector<int>& m, int p) {
    const int deg = static_cast<int>(m.size()) - 1;
    if (deg < 1) return false;
    for (int ddeg = 1; 2 * ddeg <= deg; ++ddeg) {
        std::vector<int> div(ddeg + 1, 0);
        div[ddeg] = 1;
        // enumerate all p^ddeg monic divisors
        long count = 1;
        for (int i = 0; i < ddeg; ++i) count *= p;
        for (long it = 0; it < count; ++it) {
            long x = it;
            for (int i = 0; i < ddeg; ++i) { div[i] = static_cast<int>(x % p); x /= p; }
            if (poly_is_zero(poly_mod(m, div, p))) return false;
        }
    }
    return true;
}

struct FieldData {
    int p = 0;
    int t = 0;
    int order = 0;
    std::vector<int> modulus;               // size t+1, monic
    std::vector<int> mul_tab, add_tab;      // order*order, extension fields only
    std::vector<int> neg_tab, inv_tab, trace_tab;
    bool tabulated = false;
};

}  // namespace detail

class FieldElement;

/// A finite field GF(p^t), p prime, 1 <= t <= 4. Immutable; cheap to copy.
class Field {
  public:
    /// Constructs GF(p^t). When `modulus` is omitted, the lexicographically
    /// smallest monic irreducible polynomial over Z_p (coefficients compared
    /// constant-term first) is used; this yields x^3+x^2+1 for GF(8) and
    /// x^2+1 for GF(9).
    explicit Field(int p, int t = 1, std::optional<std::vector<int>> modulus = std::nullopt) {
        if (!detail::is_prime(p)) throw std::invalid_argument("Field: p must be prime, got " + std::to_string(p));
        if (t < 1) throw std::invalid_argument("Field: extension degree must be >= 1");
        if (t > 4) throw std::invalid_argument("Field: extension degree > 4 is not supported");
        auto data = std::make_shared<detail::FieldData>();
        data->p = p;
        data->t = t;
        long order = 1;
        for (int i = 0; i < t; ++i) {
            order *= p;
            if (order > (1 << 20)) throw std::invalid_argument("Field: order too large");
        }
        data->order = static_cast<int>(order);
        if (modulus) {
            data->modulus = *modulus;
            if (static_cast<int>(data->modulus.size()) != t + 1 || data->modulus.back() != 1)
                throw std::invalid_argument("Field: modulus must be monic of degree t");
            for (int& c : data->modulus) c = ((c % p) + p) % p;
            if (!detail::poly_irreducible(data->modulus, p))
                throw std::invalid_argument("Field: modulus polynomial is reducible over Z_p");
        } else {
            data->modulus = smallest_irreducible(p, t);
        }
        if (t >= 2) tabulate(*data);
        data_ = std::move(data);
    }

    /// Builds the field of the given prime-power order d = p^t.
    static Field of_order(int d) {
        if (d < 2) throw std::invalid_argument("Field: order must be >= 2");
        int p = 2;
        while (d % p != 0) {
            ++p;
            if (p * p > d) { p = d; break; }
        }
        int t = 0;
        int x = d;
        while (x % p == 0) { x /= p; ++t; }
        if (x != 1) throw std::invalid_argument("Field: " + std::to_string(d) + " is not a prime power");
        return Field(p, t);
    }

    int p() const { return data_->p; }
    int degree() const { return data_->t; }
    int order() const { return data_->order; }
    const std::vector<int>& modulus() const { return data_->modulus; }

    bool operator==(const Field& o) const {
        return data_ == o.data_ ||
               (data_->p == o.data_->p && data_->t == o.data_->t && data_->modulus == o.data_->modulus);
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    // Index-level arithmetic. All arguments and results are element indices.
    int add(int a, int b) const {
        check_index(a); check_index(b);
        if (data_->t == 1) return (a + b) % data_->p;
        return data_->add_tab[static_cast<std::size_t>(a) * data_->order + b];
    }
    int neg(int a) const {
        check_index(a);
        if (data_->t == 1) return (data_->p - a) % data_->p;
        return data_->neg_tab[a];
    }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const {
        check_index(a); check_index(b);
        if (data_->t == 1) return static_cast<int>((static_cast<long>(a) * b) % data_->p);
        return data_->mul_tab[static_cast<std::size_t>(a) * data_->order + b];
    }
    int inv(int a) const {
        check_index(a);
        if (a == 0) throw std::invalid_argument("Field: inverse of zero");
        if (data_->t == 1) {
            // Fermat: a^(p-2) mod p
            long r = 1, base = a;
            int e = data_->p - 2;
            while (e > 0) {
                if (e & 1) r = r * base % data_->p;
                base = base * base % data_->p;
                e >>= 1;
            }
            return static_cast<int>(r);
        }
        return data_->inv_tab[a];
    }
    /// Field trace into the prime subfield, returned as an integer in [0, p).
    int trace(int a) const {
        check_index(a);
        if (data_->t == 1) return a;
        return data_->trace_tab[a];
    }
    /// Additive-character exponent of the pair (a, b): trace(a*b) in [0, p).
    /// For prime fields this is the plain product a*b mod p.
    int pairing(int a, int b) const { return trace(mul(a, b)); }

    /// Base-p coefficient vector (constant term first) of the element index.
    std::vector<int> coeffs(int a) const {
        check_index(a);
        std::vector<int> c(data_->t);
        for (int i = 0; i < data_->t; ++i) { c[i] = a % data_->p; a /= data_->p; }
        return c;
    }
    /// Inverse of coeffs(): index of the element with the given coefficients.
    int index_of(const std::vector<int>& c) const {
        if (static_cast<int>(c.size()) != data_->t)
            throw std::invalid_argument("Field: coefficient vector has wrong length");
        int idx = 0;
        for (int i = data_->t - 1; i >= 0; --i) {
            int ci = ((c[i] % data_->p) + data_->p) % data_->p;
            idx = idx * data_->p + ci;
        }
        return idx;
    }

    FieldElement element(int index) const;
    FieldElement zero() const;
    FieldElement one() const;

  private:
    void check_index(int a) const {
        if (a < 0 || a >= data_->order)
            throw std::invalid_argument("Field: element index " + std::to_string(a) + " out of range [0, " +
                                        std::to_string(data_->order) + ")");
    }

    static std::vector<int> smallest_irreducible(int p, int t) {
        if (t == 1) return {0, 1};  // x
        std::vector<int> m(t + 1, 0);
        m[t] = 1;
        long count = 1;
        for (int i = 0; i < t; ++i) count *= p;
        for (long it = 0; it < count; ++it) {
            long x = it;
            // lexicographic: constant term varies slowest
            for (int i = t - 1; i >= 0; --i) { m[i] = static_cast<int>(x % p); x /= p; }
            if (detail::poly_irreducible(m, p)) return m;
        }
        throw std::logic_error("Field: no irreducible polynomial found");  // unreachable
    }

    static void tabulate(detail::FieldData& f) {
        const int d = f.order, p = f.p, t = f.t;
        auto coeffs_of = [&](int a) {
            std::vector<int> c(t);
            for (int i = 0; i < t; ++i) { c[i] = a % p; a /= p; }
            return c;
        };
        auto index_of = [&](const std::vector<int>& c) {
            int idx = 0;
            for (int i = t - 1; i >= 0; --i) idx = idx * p + c[i];
            return idx;
        };
        f.add_tab.resize(static_cast<std::size_t>(d) * d);
        f.mul_tab.resize(static_cast<std::size_t>(d) * d);
        f.neg_tab.resize(d);
        f.inv_tab.assign(d, -1);
        f.trace_tab.resize(d);
        std::vector<std::vector<int>> cs(d);
        for (int a = 0; a < d; ++a) cs[a] = coeffs_of(a);
        for (int a = 0; a < d; ++a) {
            std::vector<int> nc(t);
            for (int i = 0; i < t; ++i) nc[i] = (p - cs[a][i]) % p;
            f.neg_tab[a] = index_of(nc);
            for (int b = 0; b < d; ++b) {
                std::vector<int> sc(t);
                for (int i = 0; i < t; ++i) sc[i] = (cs[a][i] + cs[b][i]) % p;
                f.add_tab[static_cast<std::size_t>(a) * d + b] = index_of(sc);
                auto prod = detail::poly_mod(detail::poly_mul(cs[a], cs[b], p), f.modulus, p);
                f.mul_tab[static_cast<std::size_t>(a) * d + b] = index_of(prod);
            }
        }
        for (int a = 1; a < d; ++a) {
            if (f.inv_tab[a] >= 0) continue;
            for (int b = 1; b < d; ++b) {
                if (f.mul_tab[static_cast<std::size_t>(a) * d + b] == 1) {
                    f.inv_tab[a] = b;
                    f.inv_tab[b] = a;
                    break;
                }
            }
            if (f.inv_tab[a] < 0) throw std::logic_error("Field: element without inverse (modulus not irreducible?)");
        }
        // trace(a) = sum of Frobenius images a^(p^i), i = 0..t-1
        for (int a = 0; a < d; ++a) {
            int acc = 0, cur = a;
            for (int i = 0; i < t; ++i) {
                acc = f.add_tab[static_cast<std::size_t>(acc) * d + cur];
                int pw = cur;
                for (int e = 1; e < p; ++e) pw = f.mul_tab[static_cast<std::size_t>(pw) * d + cur];
                cur = pw;
            }
            // the trace lies in the prime subfield, whose elements are indices 0..p-1
            if (acc >= p) throw std::logic_error("Field: trace left the prime subfield");
            f.trace_tab[a] = acc;
        }
        f.tabulated = true;
    }

    std::shared_ptr<const detail::FieldData> data_;
};

/// A field element: a Field handle plus the element's canonical index.
class FieldElement {
  public:
    FieldElement(Field field, int index) : field_(std::move(field)), index_(index) {
        field_.coeffs(index);  // range check
    }

    int index() const { return index_; }
    const Field& field() const { return field_; }
    std::vector<int> coeffs() const { return field_.coeffs(index_); }
    bool is_zero() const { return index_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_.add(a.index_, b.index_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_.sub(a.index_, b.index_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_.mul(a.index_, b.index_)};
    }
    FieldElement operator-() const { return {field_, field_.neg(index_)}; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.index_ == b.index_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (a.field_ != b.field_) throw std::invalid_argument("FieldElement: operands from different fields");
    }
    Field field_;
    int index_;
};

inline FieldElement Field::element(int index) const { return FieldElement(*this, index); }
inline FieldElement Field::zero() const { return FieldElement(*this, 0); }
inline FieldElement Field::one() const { return FieldElement(*this, 1); }

inline FieldElement inv(const FieldElement& a) { return a.field().element(a.field().inv(a.index())); }

}  // namespace quoa
