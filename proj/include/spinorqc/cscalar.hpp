#pragma once

#include "spinorqc/scalar.hpp"

#include <complex>

namespace spinorqc {

// Complex number with exact Q[sqrt2] components.
struct CScalar {
    Scalar re;
    Scalar im;

    CScalar() = default;
    CScalar(Scalar r) : re(std::move(r)) {}
    CScalar(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}
    CScalar(long n) : re(Scalar::of_int(n)) {}

    static CScalar i() { return {Scalar(), Scalar::of_int(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend CScalar operator+(const CScalar& a, const CScalar& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend CScalar operator-(const CScalar& a, const CScalar& b) {
        return {a.re - b.re, a.im - b.im};
    }
    CScalar operator-() const { return {-re, -im}; }
    friend CScalar operator*(const CScalar& a, const CScalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    CScalar conj() const { return {re, -im}; }

    friend bool operator==(const CScalar& a, const CScalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const CScalar& a, const CScalar& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

}  // namespace spinorqc
