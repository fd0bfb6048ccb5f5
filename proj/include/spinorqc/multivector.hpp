#pragma once

#include "spinorqc/scalar.hpp"
#include "spinorqc/signature.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace spinorqc {

// Basis blade g_{i1} g_{i2} ... with i1 < i2 < ..., encoded as a bitmask
// (bit i set iff g_i present).
using Mask = std::uint8_t;

inline int blade_grade(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

// Sign of sorting the concatenation of two canonically ordered blades into
// ascending order: counts, for every generator of a, the generators of b it
// must pass.
inline int reorder_sign(Mask a, Mask b) {
    unsigned x = static_cast<unsigned>(a) >> 1;
    int swaps = 0;
    while (x) {
        swaps += std::popcount(x & b);
        x >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

struct BladeProduct {
    Mask mask;
    int sign;
};

// Product of two basis blades: repeated generators contract with metric signs.
inline BladeProduct blade_gp(Mask a, Mask b, const Signature& sig) {
    int sign = reorder_sign(a, b);
    Mask common = a & b;
    for (int i = 0; common; ++i, common >>= 1)
        if (common & 1) sign *= sig.diag[static_cast<std::size_t>(i)];
    return {static_cast<Mask>(a ^ b), sign};
}

inline int reverse_sign(int k) { return (k * (k - 1) / 2) % 2 ? -1 : 1; }
inline int involution_sign(int k) { return (k % 2) ? -1 : 1; }

// Sign of g0 x g0 for blade x of grade k: (-1)^(k-1) if g0 divides x,
// (-1)^k otherwise (g0^2 = +1 required).
inline int conjugate_g0_sign(Mask m) {
    const int k = blade_grade(m);
    return involution_sign((m & 1) ? k - 1 : k);
}

template <class T>
struct Multivector {
    Signature sig;
    std::map<Mask, T> terms;  // no zero coefficients stored

    Multivector() : sig(Signature::cl13()) {}
    explicit Multivector(Signature s) : sig(std::move(s)) {}

    static Multivector zero(const Signature& s = Signature::cl13()) { return Multivector(s); }
    static Multivector scalar(T c, const Signature& s = Signature::cl13()) {
        Multivector m(s);
        m.add_term(0, std::move(c));
        return m;
    }
    static Multivector one(const Signature& s = Signature::cl13()) {
        return scalar(Coeff<T>::one(), s);
    }
    static Multivector generator(int i, const Signature& s = Signature::cl13()) {
        if (i < 0 || i >= s.dims()) throw std::out_of_range("generator index");
        Multivector m(s);
        m.add_term(static_cast<Mask>(1u << i), Coeff<T>::one());
        return m;
    }
    static Multivector blade(Mask mask, T c, const Signature& s = Signature::cl13()) {
        Multivector m(s);
        m.add_term(mask, std::move(c));
        return m;
    }

    void add_term(Mask mask, T c) {
        auto it = terms.find(mask);
        if (it == terms.end()) {
            if (!Coeff<T>::is_zero(c)) terms.emplace(mask, std::move(c));
            return;
        }
        it->second = it->second + c;
        if (Coeff<T>::is_zero(it->second)) terms.erase(it);
    }

    bool is_zero() const { return terms.empty(); }

    T scalar_part() const {
        auto it = terms.find(0);
        return it == terms.end() ? Coeff<T>::zero() : it->second;
    }

    bool is_even() const {
        for (const auto& [m, c] : terms)
            if (blade_grade(m) % 2) return false;
        return true;
    }

    bool is_scalar() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first == 0); }

    void check_sig(const Multivector& o) const {
        if (sig != o.sig) throw std::invalid_argument("signature mismatch");
    }

    friend Multivector operator+(const Multivector& a, const Multivector& b) {
        a.check_sig(b);
        Multivector r = a;
        for (const auto& [m, c] : b.terms) r.add_term(m, c);
        return r;
    }
    friend Multivector operator-(const Multivector& a, const Multivector& b) {
        a.check_sig(b);
        Multivector r = a;
        for (const auto& [m, c] : b.terms) r.add_term(m, -c);
        return r;
    }
    Multivector operator-() const {
        Multivector r(sig);
        for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
        return r;
    }
    friend Multivector operator*(const T& s, const Multivector& a) {
        Multivector r(a.sig);
        for (const auto& [m, c] : a.terms) r.add_term(m, s * c);
        return r;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.sig == b.sig && a.terms == b.terms;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }
};

template <class T>
Multivector<T> gp(const Multivector<T>& a, const Multivector<T>& b) {
    a.check_sig(b);
    Multivector<T> r(a.sig);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            const BladeProduct p = blade_gp(ma, mb, a.sig);
            T c = ca * cb;
            if (p.sign < 0) c = -c;
            r.add_term(p.mask, std::move(c));
        }
    return r;
}

template <class T>
Multivector<T> operator*(const Multivector<T>& a, const Multivector<T>& b) {
    return gp(a, b);
}

template <class T>
Multivector<T> grade_project(const Multivector<T>& a, int k) {
    if (k < 0 || k > a.sig.dims()) throw std::out_of_range("grade out of range");
    Multivector<T> r(a.sig);
    for (const auto& [m, c] : a.terms)
        if (blade_grade(m) == k) r.terms.emplace(m, c);
    return r;
}

template <class T>
Multivector<T> reverse(const Multivector<T>& a) {
    Multivector<T> r(a.sig);
    for (const auto& [m, c] : a.terms)
        r.terms.emplace(m, reverse_sign(blade_grade(m)) < 0 ? -c : c);
    return r;
}

template <class T>
Multivector<T> grade_involution(const Multivector<T>& a) {
    Multivector<T> r(a.sig);
    for (const auto& [m, c] : a.terms)
        r.terms.emplace(m, involution_sign(blade_grade(m)) < 0 ? -c : c);
    return r;
}

// Even-subalgebra adjoint: star(a) = g0 * reverse(a) * g0. Fixes 1 and the
// g_i g_0 blades, negates g_i g_j and the pseudoscalar; equals the conjugate
// transpose under the 2x2 matrix representation.
template <class T>
Multivector<T> star(const Multivector<T>& a) {
    if (a.sig.dims() < 1 || a.sig.diag[0] != 1)
        throw std::domain_error("star requires g0^2 = +1");
    Multivector<T> r(a.sig);
    for (const auto& [m, c] : a.terms) {
        const int s = reverse_sign(blade_grade(m)) * conjugate_g0_sign(m);
        r.terms.emplace(m, s < 0 ? -c : c);
    }
    return r;
}

// N(a) = <reverse(a) a>_0
template <class T>
T norm_squared(const Multivector<T>& a) {
    T acc = Coeff<T>::zero();
    for (const auto& [m, c] : a.terms) {
        const BladeProduct p = blade_gp(m, m, a.sig);
        T term = c * c;
        const int s = reverse_sign(blade_grade(m)) * p.sign;
        acc = acc + (s < 0 ? -term : term);
    }
    return acc;
}

template <class T>
Multivector<T> commutator(const Multivector<T>& a, const Multivector<T>& b) {
    return gp(a, b) - gp(b, a);
}

template <class T>
Multivector<T> anticommutator(const Multivector<T>& a, const Multivector<T>& b) {
    return gp(a, b) + gp(b, a);
}

enum class SpinClass { spin, spin_plus, neither };

template <class T>
SpinClass spin_membership(const Multivector<T>& a) {
    if (!a.is_even()) return SpinClass::neither;
    const T n = norm_squared(a);
    if (n == Coeff<T>::one()) return SpinClass::spin_plus;
    if (n == -Coeff<T>::one()) return SpinClass::spin;
    return SpinClass::neither;
}

// cos/sin of k*pi/4 as exact elements of Q[sqrt2], k taken mod 8.
inline Scalar cos_quarter_pi(int k) {
    static const int num[8] = {2, 1, 0, -1, -2, -1, 0, 1};  // value = num * sqrt2/2
    const int v = num[((k % 8) + 8) % 8];
    if (v == 0) return Scalar();
    if (v == 2 || v == -2) return Scalar::of_int(v / 2);
    return Scalar(Rational(0), Rational(v, 2));
}
inline Scalar sin_quarter_pi(int k) { return cos_quarter_pi(k - 2); }

// exp(theta*B) = cos(theta) + sin(theta)*B for B*B = -1, theta = k*pi/4.
inline Multivector<Scalar> exp_bivector(int theta_quarter_pi, const Multivector<Scalar>& b) {
    if (gp(b, b) != -Multivector<Scalar>::one(b.sig))
        throw std::domain_error("not a unit negative-square bivector");
    return Multivector<Scalar>::scalar(cos_quarter_pi(theta_quarter_pi), b.sig) +
           sin_quarter_pi(theta_quarter_pi) * b;
}

// Truncated power series exp(theta*a) for float coefficients; stops when the
// next term is below rel_tol of the largest accumulated coefficient.
Multivector<double> exp_series(double theta, const Multivector<double>& a,
                               double rel_tol = 1e-12, int max_terms = 64);

inline Multivector<double> to_float(const Multivector<Scalar>& a) {
    Multivector<double> r(a.sig);
    for (const auto& [m, c] : a.terms) r.add_term(m, c.to_double());
    return r;
}

}  // namespace spinorqc
