#pragma once

#include "spinorqc/cscalar.hpp"

#include <complex>
#include <vector>

namespace spinorqc {

// Dense square matrix with exact complex entries, row-major.
struct CMatrix {
    int dim = 0;
    std::vector<CScalar> e;

    CMatrix() = default;
    explicit CMatrix(int d) : dim(d), e(static_cast<std::size_t>(d) * d) {}

    static CMatrix identity(int d) {
        CMatrix m(d);
        for (int i = 0; i < d; ++i) m.at(i, i) = CScalar(1);
        return m;
    }

    CScalar& at(int r, int c) { return e[static_cast<std::size_t>(r) * dim + c]; }
    const CScalar& at(int r, int c) const { return e[static_cast<std::size_t>(r) * dim + c]; }

    friend CMatrix operator+(const CMatrix& a, const CMatrix& b) {
        CMatrix r(a.dim);
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b) {
        CMatrix r(a.dim);
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
        return r;
    }
    friend CMatrix operator*(const CScalar& s, const CMatrix& a) {
        CMatrix r(a.dim);
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = s * a.e[i];
        return r;
    }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        CMatrix r(a.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int k = 0; k < a.dim; ++k) {
                const CScalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.dim; ++j) r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
            }
        return r;
    }

    CMatrix adjoint() const {
        CMatrix r(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) r.at(i, j) = at(j, i).conj();
        return r;
    }

    friend CMatrix kron(const CMatrix& a, const CMatrix& b) {
        CMatrix r(a.dim * b.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                for (int k = 0; k < b.dim; ++k)
                    for (int l = 0; l < b.dim; ++l)
                        r.at(i * b.dim + k, j * b.dim + l) = a.at(i, j) * b.at(k, l);
        return r;
    }

    std::vector<CScalar> first_column() const {
        std::vector<CScalar> col(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) col[static_cast<std::size_t>(i)] = at(i, 0);
        return col;
    }

    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.dim == b.dim && a.e == b.e;
    }
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : e)
            if (!x.is_zero()) return false;
        return true;
    }
};

// Numeric twin of CMatrix for the spectral routines.
struct DMatrix {
    int dim = 0;
    std::vector<std::complex<double>> e;

    DMatrix() = default;
    explicit DMatrix(int d) : dim(d), e(static_cast<std::size_t>(d) * d) {}
    explicit DMatrix(const CMatrix& m) : dim(m.dim), e(m.e.size()) {
        for (std::size_t i = 0; i < m.e.size(); ++i) e[i] = m.e[i].to_complex();
    }

    static DMatrix identity(int d) {
        DMatrix m(d);
        for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
        return m;
    }

    std::complex<double>& at(int r, int c) { return e[static_cast<std::size_t>(r) * dim + c]; }
    const std::complex<double>& at(int r, int c) const {
        return e[static_cast<std::size_t>(r) * dim + c];
    }

    friend DMatrix operator+(const DMatrix& a, const DMatrix& b) {
        DMatrix r(a.dim);
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }
    friend DMatrix operator-(const DMatrix& a, const DMatrix& b) {
        DMatrix r(a.dim);
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
        return r;
    }
    friend DMatrix operator*(std::complex<double> s, const DMatrix& a) {
        DMatrix r(a.dim);
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = s * a.e[i];
        return r;
    }
    friend DMatrix operator*(const DMatrix& a, const DMatrix& b) {
        DMatrix r(a.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int k = 0; k < a.dim; ++k) {
                const auto aik = a.at(i, k);
                if (aik == std::complex<double>(0)) continue;
                for (int j = 0; j < a.dim; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

    DMatrix adjoint() const {
        DMatrix r(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) r.at(i, j) = std::conj(at(j, i));
        return r;
    }

    double max_entry_abs() const {
        double v = 0;
        for (const auto& x : e) v = std::max(v, std::abs(x));
        return v;
    }

    std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& v) const {
        std::vector<std::complex<double>> r(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) r[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
        return r;
    }
};

// Largest singular value by power iteration on m^dagger m from the all-ones
// start vector; relative tolerance 1e-12, at most 10000 iterations.
double operator_norm(const DMatrix& m);
double operator_norm(const CMatrix& m);

}  // namespace spinorqc
