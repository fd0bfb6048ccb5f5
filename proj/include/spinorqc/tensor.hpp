#pragma once

#include "spinorqc/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace spinorqc {

// n-fold tensor product of one algebra with itself, with the slotwise
// (ungraded) product: (a1 (x) a2)(b1 (x) b2) = (a1 b1) (x) (a2 b2).
template <class T>
struct TensorMultivector {
    Signature sig;
    int slots = 1;
    std::map<std::vector<Mask>, T> terms;  // keys all have length == slots

    TensorMultivector() : sig(Signature::cl13()) {}
    TensorMultivector(Signature s, int n) : sig(std::move(s)), slots(n) {
        if (n < 1) throw std::invalid_argument("tensor: slot count must be >= 1");
    }

    static TensorMultivector zero(int n, const Signature& s = Signature::cl13()) {
        return TensorMultivector(s, n);
    }
    static TensorMultivector identity(int n, const Signature& s = Signature::cl13()) {
        TensorMultivector r(s, n);
        r.add_term(std::vector<Mask>(static_cast<std::size_t>(n), 0), Coeff<T>::one());
        return r;
    }
    static TensorMultivector from_single(const Multivector<T>& a) {
        TensorMultivector r(a.sig, 1);
        for (const auto& [m, c] : a.terms) r.terms.emplace(std::vector<Mask>{m}, c);
        return r;
    }

    void add_term(std::vector<Mask> key, T c) {
        auto it = terms.find(key);
        if (it == terms.end()) {
            if (!Coeff<T>::is_zero(c)) terms.emplace(std::move(key), std::move(c));
            return;
        }
        it->second = it->second + c;
        if (Coeff<T>::is_zero(it->second)) terms.erase(it);
    }

    bool is_zero() const { return terms.empty(); }

    T scalar_part() const {
        auto it = terms.find(std::vector<Mask>(static_cast<std::size_t>(slots), 0));
        return it == terms.end() ? Coeff<T>::zero() : it->second;
    }

    bool is_even_per_slot() const {
        for (const auto& [key, c] : terms)
            for (Mask m : key)
                if (blade_grade(m) % 2) return false;
        return true;
    }

    void check_compat(const TensorMultivector& o) const {
        if (sig != o.sig) throw std::invalid_argument("signature mismatch");
        if (slots != o.slots)
            throw std::invalid_argument("slot count mismatch: " + std::to_string(slots) + " vs " +
                                        std::to_string(o.slots));
    }

    friend TensorMultivector operator+(const TensorMultivector& a, const TensorMultivector& b) {
        a.check_compat(b);
        TensorMultivector r = a;
        for (const auto& [k, c] : b.terms) r.add_term(k, c);
        return r;
    }
    friend TensorMultivector operator-(const TensorMultivector& a, const TensorMultivector& b) {
        a.check_compat(b);
        TensorMultivector r = a;
        for (const auto& [k, c] : b.terms) r.add_term(k, -c);
        return r;
    }
    TensorMultivector operator-() const {
        TensorMultivector r(sig, slots);
        for (const auto& [k, c] : terms) r.terms.emplace(k, -c);
        return r;
    }
    friend TensorMultivector operator*(const T& s, const TensorMultivector& a) {
        TensorMultivector r(a.sig, a.slots);
        for (const auto& [k, c] : a.terms) r.add_term(k, s * c);
        return r;
    }

    friend bool operator==(const TensorMultivector& a, const TensorMultivector& b) {
        return a.sig == b.sig && a.slots == b.slots && a.terms == b.terms;
    }
    friend bool operator!=(const TensorMultivector& a, const TensorMultivector& b) {
        return !(a == b);
    }
};

template <class T>
TensorMultivector<T> tmul(const TensorMultivector<T>& a, const TensorMultivector<T>& b) {
    a.check_compat(b);
    TensorMultivector<T> r(a.sig, a.slots);
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            std::vector<Mask> key(static_cast<std::size_t>(a.slots));
            int sign = 1;
            for (std::size_t s = 0; s < key.size(); ++s) {
                const BladeProduct p = blade_gp(ka[s], kb[s], a.sig);
                key[s] = p.mask;
                sign *= p.sign;
            }
            T c = ca * cb;
            if (sign < 0) c = -c;
            r.add_term(std::move(key), std::move(c));
        }
    return r;
}

template <class T>
TensorMultivector<T> operator*(const TensorMultivector<T>& a, const TensorMultivector<T>& b) {
    return tmul(a, b);
}

// Slot concatenation: (sum a_i) (x) (sum b_j) term by term.
template <class T>
TensorMultivector<T> outer(const TensorMultivector<T>& a, const TensorMultivector<T>& b) {
    if (a.sig != b.sig) throw std::invalid_argument("signature mismatch");
    TensorMultivector<T> r(a.sig, a.slots + b.slots);
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            std::vector<Mask> key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            r.add_term(std::move(key), ca * cb);
        }
    return r;
}

template <class T>
TensorMultivector<T> tensor_of(const std::vector<Multivector<T>>& parts) {
    if (parts.empty()) throw std::invalid_argument("tensor: empty factor list");
    TensorMultivector<T> r = TensorMultivector<T>::from_single(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
        r = outer(r, TensorMultivector<T>::from_single(parts[i]));
    return r;
}

// Reversion applied in every slot.
template <class T>
TensorMultivector<T> tensor_reverse(const TensorMultivector<T>& a) {
    TensorMultivector<T> r(a.sig, a.slots);
    for (const auto& [k, c] : a.terms) {
        int sign = 1;
        for (Mask m : k) sign *= reverse_sign(blade_grade(m));
        r.terms.emplace(k, sign < 0 ? -c : c);
    }
    return r;
}

// Grade involution applied in every slot.
template <class T>
TensorMultivector<T> tensor_grade_involution(const TensorMultivector<T>& a) {
    TensorMultivector<T> r(a.sig, a.slots);
    for (const auto& [k, c] : a.terms) {
        int sign = 1;
        for (Mask m : k) sign *= involution_sign(blade_grade(m));
        r.terms.emplace(k, sign < 0 ? -c : c);
    }
    return r;
}

// Even-subalgebra adjoint in every slot (see star on Multivector).
template <class T>
TensorMultivector<T> tensor_star(const TensorMultivector<T>& a) {
    if (a.sig.dims() < 1 || a.sig.diag[0] != 1)
        throw std::domain_error("star requires g0^2 = +1");
    TensorMultivector<T> r(a.sig, a.slots);
    for (const auto& [k, c] : a.terms) {
        int sign = 1;
        for (Mask m : k) sign *= reverse_sign(blade_grade(m)) * conjugate_g0_sign(m);
        r.terms.emplace(k, sign < 0 ? -c : c);
    }
    return r;
}

// A * tensor_reverse(A) == identity
template <class T>
bool unitarity_check(const TensorMultivector<T>& a) {
    return tmul(a, tensor_reverse(a)) == TensorMultivector<T>::identity(a.slots, a.sig);
}

// Parity rule for generator tuples I, J of equal length n: with d the number
// of disagreeing slots, Delta = 1 iff d is even and d > 0 (the all-equal
// clause takes precedence). Predicts rho(e_I) rho(e_J) = (-1)^d rho(e_J)
// rho(e_I) having scalar symmetric combination.
inline int delta_sign(const std::vector<int>& I, const std::vector<int>& J) {
    if (I.size() != J.size()) throw std::invalid_argument("delta: tuple length mismatch");
    std::size_t d = 0;
    for (std::size_t s = 0; s < I.size(); ++s)
        if (I[s] != J[s]) ++d;
    if (d == 0) return 0;
    return (d % 2 == 0) ? 1 : 0;
}

// exp(theta * E) with E*E = -identity, theta = k*pi/4, exact.
inline TensorMultivector<Scalar> exp_tensor(int theta_quarter_pi,
                                            const TensorMultivector<Scalar>& e) {
    if (tmul(e, e) != -TensorMultivector<Scalar>::identity(e.slots, e.sig))
        throw std::domain_error("not a unit negative-square exponent");
    const Scalar c = cos_quarter_pi(theta_quarter_pi);
    const Scalar s = sin_quarter_pi(theta_quarter_pi);
    return c * TensorMultivector<Scalar>::identity(e.slots, e.sig) + s * e;
}

inline TensorMultivector<double> to_float(const TensorMultivector<Scalar>& a) {
    TensorMultivector<double> r(a.sig, a.slots);
    for (const auto& [k, c] : a.terms) r.add_term(k, c.to_double());
    return r;
}

// Truncated power series exp(theta * a) for float tensors.
inline TensorMultivector<double> exp_tensor_series(double theta, const TensorMultivector<double>& a,
                                                   double rel_tol = 1e-12, int max_terms = 64) {
    const auto max_abs = [](const TensorMultivector<double>& m) {
        double v = 0;
        for (const auto& [key, c] : m.terms) v = std::max(v, std::abs(c));
        return v;
    };
    TensorMultivector<double> acc = TensorMultivector<double>::identity(a.slots, a.sig);
    TensorMultivector<double> term = acc;
    for (int k = 1; k <= max_terms; ++k) {
        term = (theta / k) * tmul(term, a);
        acc = acc + term;
        if (max_abs(term) <= rel_tol * std::max(1.0, max_abs(acc))) break;
    }
    return acc;
}

}  // namespace spinorqc
