#pragma once

#include "spinorqc/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace spinorqc {

// Element of the ring Q[sqrt(2)]: rat + irr*sqrt(2).
// Zero iff both components are zero (sqrt(2) is irrational).
struct Scalar {
    Rational rat;
    Rational irr;

    Scalar() = default;
    Scalar(Rational r) : rat(std::move(r)) {}
    Scalar(Rational r, Rational i) : rat(std::move(r)), irr(std::move(i)) {}
    Scalar(long n) : rat(n) {}

    static Scalar of_int(long n) { return Scalar(Rational(n)); }
    static Scalar of_ratio(long p, long q) { return Scalar(Rational(p, q)); }
    // sqrt(2)/2 = 1/sqrt(2)
    static Scalar inv_sqrt2() { return Scalar(Rational(0), Rational(1, 2)); }
    static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return rat == 0 && irr == 0; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return {a.rat + b.rat, a.irr + b.irr};
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return {a.rat - b.rat, a.irr - b.irr};
    }
    Scalar operator-() const { return {-rat, -irr}; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return {a.rat * b.rat + 2 * a.irr * b.irr, a.rat * b.irr + a.irr * b.rat};
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.rat == b.rat && a.irr == b.irr;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // (a + b*sqrt2)^-1 = (a - b*sqrt2) / (a^2 - 2 b^2); the denominator is
    // nonzero for nonzero input because sqrt(2) is irrational.
    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero scalar");
        const Rational den = rat * rat - 2 * irr * irr;
        return {rat / den, -irr / den};
    }

    // Exact sign: when the components disagree in sign, |rat| vs sqrt2*|irr|
    // is decided by rat^2 vs 2*irr^2 (equality would force both zero).
    int sgn() const {
        const int sr = sign_of(rat), si = sign_of(irr);
        if (si == 0) return sr;
        if (sr == 0) return si;
        if (sr == si) return sr;
        return (rat * rat > 2 * irr * irr) ? sr : si;
    }

    friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sgn() < 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sgn() > 0; }

    Scalar abs() const { return sgn() < 0 ? -*this : *this; }

    double to_double() const {
        return spinorqc::to_double(rat) + spinorqc::to_double(irr) * std::sqrt(2.0);
    }
};

// Coefficient interface shared by the exact and float instantiations of the
// algebra templates.
template <class T>
struct Coeff;

template <>
struct Coeff<Scalar> {
    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar::of_int(1); }
    static Scalar from_int(long n) { return Scalar::of_int(n); }
    static Scalar from_ratio(long p, long q) { return Scalar::of_ratio(p, q); }
    static bool is_zero(const Scalar& s) { return s.is_zero(); }
    static double to_double(const Scalar& s) { return s.to_double(); }
};

template <>
struct Coeff<double> {
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long n) { return static_cast<double>(n); }
    static double from_ratio(long p, long q) {
        return static_cast<double>(p) / static_cast<double>(q);
    }
    static bool is_zero(double s) { return s == 0.0; }
    static double to_double(double s) { return s; }
};

}  // namespace spinorqc
