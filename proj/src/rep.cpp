#include "spinorqc/rep.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace spinorqc {

namespace {

CMatrix make_sigma(int i) {
    CMatrix m(2);
    switch (i) {
        case 1:
            m.at(0, 1) = CScalar(1);
            m.at(1, 0) = CScalar(1);
            break;
        case 2:
            m.at(0, 1) = -CScalar::i();
            m.at(1, 0) = CScalar::i();
            break;
        case 3:
            m.at(0, 0) = CScalar(1);
            m.at(1, 1) = -CScalar(1);
            break;
        default:
            throw std::out_of_range("sigma index");
    }
    return m;
}

// Images of the eight even basis blades, obtained multiplicatively from
// g_i g_0 -> sigma_i. The stored blades are g0-leading (mask order), so e.g.
// g0 g1 = -(g1 g0) -> -sigma_1 and the pseudoscalar g0 g1 g2 g3 -> i*1.
std::array<CMatrix, 16> make_blade_table() {
    std::array<CMatrix, 16> t;
    const CMatrix id = CMatrix::identity(2);
    t[0b0000] = id;
    t[0b0011] = -CScalar(1) * make_sigma(1);            // g0 g1
    t[0b0101] = -CScalar(1) * make_sigma(2);            // g0 g2
    t[0b1001] = -CScalar(1) * make_sigma(3);            // g0 g3
    t[0b0110] = -CScalar::i() * make_sigma(3);          // g1 g2 = -(g1 g0)(g2 g0)
    t[0b1010] = CScalar::i() * make_sigma(2);           // g1 g3 = -(g1 g0)(g3 g0)
    t[0b1100] = -CScalar::i() * make_sigma(1);          // g2 g3 = -(g2 g0)(g3 g0)
    t[0b1111] = CScalar::i() * id;                      // g0 g1 g2 g3
    return t;
}

const std::array<CMatrix, 16>& blade_table() {
    static const std::array<CMatrix, 16> t = make_blade_table();
    return t;
}

void require_cl13(const Signature& sig) {
    if (sig != Signature::cl13())
        throw std::domain_error("matrix representation is defined for Cl(1,3) only");
}

}  // namespace

const CMatrix& sigma(int i) {
    static const CMatrix s1 = make_sigma(1), s2 = make_sigma(2), s3 = make_sigma(3);
    switch (i) {
        case 1: return s1;
        case 2: return s2;
        case 3: return s3;
        default: throw std::out_of_range("sigma index");
    }
}

const CMatrix& identity2() {
    static const CMatrix id = CMatrix::identity(2);
    return id;
}

const CMatrix& rep_blade(Mask m) {
    if (blade_grade(m) % 2) throw std::domain_error("not in even subalgebra");
    return blade_table()[m];
}

CMatrix rep_even(const Multivector<Scalar>& a) {
    require_cl13(a.sig);
    CMatrix r(2);
    for (const auto& [m, c] : a.terms) {
        if (blade_grade(m) % 2) throw std::domain_error("not in even subalgebra");
        r = r + CScalar(c) * rep_blade(m);
    }
    return r;
}

CMatrix rep_even(const TensorMultivector<Scalar>& a) {
    require_cl13(a.sig);
    const int dim = 1 << a.slots;
    CMatrix r(dim);
    for (const auto& [key, c] : a.terms) {
        CMatrix term = CMatrix::identity(1);
        for (Mask m : key) {
            if (blade_grade(m) % 2) throw std::domain_error("not in even subalgebra");
            term = kron(term, rep_blade(m));
        }
        r = r + CScalar(c) * term;
    }
    return r;
}

DMatrix rep_even_numeric(const Multivector<double>& a) {
    require_cl13(a.sig);
    DMatrix r(2);
    for (const auto& [m, c] : a.terms) {
        if (blade_grade(m) % 2) throw std::domain_error("not in even subalgebra");
        r = r + std::complex<double>(c) * DMatrix(rep_blade(m));
    }
    return r;
}

double operator_norm(const DMatrix& m) {
    const DMatrix b = m.adjoint() * m;
    if (b.max_entry_abs() == 0.0) return 0.0;
    const int d = m.dim;
    std::vector<std::complex<double>> v(static_cast<std::size_t>(d), 1.0);
    double scale = std::sqrt(static_cast<double>(d));
    for (auto& x : v) x /= scale;
    double lambda = 0.0;
    for (int it = 0; it < 10000; ++it) {
        auto w = b.apply(v);
        double rayleigh = 0.0;
        for (int i = 0; i < d; ++i)
            rayleigh += std::real(std::conj(v[static_cast<std::size_t>(i)]) * w[static_cast<std::size_t>(i)]);
        double norm = 0.0;
        for (const auto& x : w) norm += std::norm(x);
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (auto& x : w) x /= norm;
        v = std::move(w);
        if (it > 0 && std::abs(rayleigh - lambda) <= 1e-12 * std::max(1.0, std::abs(rayleigh)))
            return std::sqrt(std::max(0.0, rayleigh));
        lambda = rayleigh;
    }
    throw std::runtime_error("operator_norm: power iteration did not converge");
}

double operator_norm(const CMatrix& m) { return operator_norm(DMatrix(m)); }

}  // namespace spinorqc
