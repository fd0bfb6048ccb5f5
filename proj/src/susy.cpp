#include "spinorqc/susy.hpp"

#include "spinorqc/format.hpp"
#include "spinorqc/rep.hpp"

#include <cmath>
#include <stdexcept>

namespace spinorqc {

namespace {

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    const BigInt rn = boost::multiprecision::sqrt(num);
    const BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

}  // namespace

PairOp pair_of(TensorMultivector<Scalar> x) {
    TensorMultivector<Scalar> z = TensorMultivector<Scalar>::zero(x.slots, x.sig);
    return {std::move(x), std::move(z)};
}

PairOp padd(const PairOp& x, const PairOp& y) { return {x.c0 + y.c0, x.c1 + y.c1}; }

PairOp psub(const PairOp& x, const PairOp& y) { return {x.c0 - y.c0, x.c1 - y.c1}; }

PairOp pmul(const PairOp& x, const PairOp& y, const Scalar& rho) {
    return {tmul(x.c0, y.c0) + rho * tmul(x.c1, y.c1), tmul(x.c0, y.c1) + tmul(x.c1, y.c0)};
}

PairOp pstar(const PairOp& x) { return {tensor_star(x.c0), tensor_star(x.c1)}; }

// (x + y*sqrt2)^2 = x^2 + 2y^2 + 2xy*sqrt2, so a root of p + q*sqrt2 needs
// x^2 = (p +- d)/2 with d^2 = p^2 - 2q^2, y = q/(2x); both square tests are
// over the rationals.
std::optional<Scalar> sqrt_in_ring(const Scalar& rho) {
    if (rho.sgn() < 0) return std::nullopt;
    const Rational p = rho.rat, q = rho.irr;
    if (q == 0) {
        if (const auto x = rational_sqrt(p)) return Scalar(*x);
        if (const auto y = rational_sqrt(p / 2)) return Scalar(Rational(0), *y);
        return std::nullopt;
    }
    const auto d = rational_sqrt(p * p - 2 * q * q);
    if (!d) return std::nullopt;
    for (const int pick : {1, -1}) {
        const Rational cand = (pick > 0 ? Rational(p + *d) : Rational(p - *d)) / 2;
        const auto x = rational_sqrt(cand);
        if (!x || *x == 0) continue;
        const Scalar s = Scalar(*x, q / (2 * *x)).abs();
        if (s * s == rho) return s;
    }
    return std::nullopt;
}

bool pair_is_zero(const PairOp& x, const Scalar& rho) {
    if (const auto s = sqrt_in_ring(rho)) return (x.c0 + *s * x.c1).is_zero();
    return x.c0.is_zero() && x.c1.is_zero();
}

std::string pair_text(const PairOp& x) {
    if (x.c1.is_zero()) return to_string(x.c0);
    if (x.c0.is_zero()) return "r * [" + to_string(x.c1) + "]";
    return "[" + to_string(x.c0) + "] + r * [" + to_string(x.c1) + "]";
}

namespace {

DMatrix pair_matrix(const PairOp& x, double r) {
    return DMatrix(rep_even(x.c0)) + std::complex<double>(r) * DMatrix(rep_even(x.c1));
}

// Residual known as an exact pair times a positive power of 1/sqrt(2r); the
// scale never changes the exact verdict, only the reported magnitude.
RelationRow pair_row(std::string label, const PairOp& residual, const Scalar& rho, double r,
                     double scale, const std::string& scale_text, const DMatrix& mat_lhs,
                     const DMatrix& mat_rhs) {
    const bool holds = pair_is_zero(residual, rho);
    const double exact_res = scale * pair_matrix(residual, r).max_entry_abs();
    const double spec_res = (mat_lhs - mat_rhs).max_entry_abs();
    const bool spec_holds = spec_res < 1e-10;
    return {std::move(label), holds,
            holds ? "" : scale_text + " * (" + pair_text(residual) + ")",
            exact_res,        spec_res,
            holds == spec_holds};
}

}  // namespace

SusyReport susy_charge(const MajoranaModel& m) {
    if (m.a.is_zero() && m.b.is_zero() && m.c.is_zero())
        throw std::invalid_argument("susy: coefficients a, b, c are all zero");

    SusyReport report;
    report.rho = m.a * m.a + m.b * m.b + m.c * m.c;
    report.r = std::sqrt(report.rho.to_double());
    const double r = report.r;

    const auto id = TensorMultivector<Scalar>::identity(2, m.h.sig);
    const auto gate = Scalar::of_ratio(1, 4) * tmul(m.emergent, id + m.parity);
    report.q_scaled = {tmul(m.h, gate), gate};  // (H + r) Ge (1+PM)/4

    const DMatrix M(rep_even(m.h));
    const DMatrix G(rep_even(m.emergent));
    const DMatrix Pm(rep_even(m.parity));
    const DMatrix I = DMatrix::identity(4);

    const double normality = (M * M.adjoint() - M.adjoint() * M).max_entry_abs();
    if (normality > 1e-10 * std::max(1.0, M.max_entry_abs() * M.max_entry_abs()))
        throw std::runtime_error("susy: rep of H is not normal (defect " +
                                 std::to_string(normality) + "); no principal square root");

    const std::complex<double> lam(1.0 / std::sqrt(2.0 * r));
    const DMatrix S = lam * (std::complex<double>(r) * I + M);
    report.sqrt_defect = (S * S - M).max_entry_abs();

    // Cross-check the branch: H has spectrum {+ir, -ir} with projectors
    // (1 -+ iM/r)/2, and the principal root takes +ir -> sqrt(r) e^{i pi/4},
    // -ir -> sqrt(r) e^{-i pi/4}.
    const std::complex<double> iu(0.0, 1.0);
    const DMatrix pi_plus = std::complex<double>(0.5) * (I - (iu / r) * M);
    const DMatrix pi_minus = std::complex<double>(0.5) * (I + (iu / r) * M);
    const DMatrix s_spec = std::sqrt(iu * r) * pi_plus + std::sqrt(-iu * r) * pi_minus;
    report.projector_defect = (S - s_spec).max_entry_abs();

    report.q = S * (std::complex<double>(0.25) * (G * (I + Pm)));
    const DMatrix& Q = report.q;
    const DMatrix zero4(4);

    const Scalar& rho = report.rho;
    const PairOp& qs = report.q_scaled;
    const PairOp h_p = pair_of(m.h);
    const PairOp pm_p = pair_of(m.parity);
    const double lam2 = 1.0 / (2.0 * r);
    const double lam1 = std::sqrt(lam2);

    report.rows.push_back(
        pair_row("Q^2 = 0", pmul(qs, qs, rho), rho, r, lam2, "1/(2*r)", Q * Q, zero4));
    report.rows.push_back(pair_row("[Q,H] = 0", psub(pmul(qs, h_p, rho), pmul(h_p, qs, rho)), rho,
                                   r, lam1, "1/sqrt(2*r)", Q * M - M * Q, zero4));
    report.rows.push_back(pair_row("{Q,PM} = 0", padd(pmul(qs, pm_p, rho), pmul(pm_p, qs, rho)),
                                   rho, r, lam1, "1/sqrt(2*r)", Q * Pm + Pm * Q, zero4));
    // In scaled form {Q,Qdag} = 2H reads {qs, star(qs)} = 4rH, an equation
    // between pairs: rhs = (0, 4H).
    const PairOp rhs4{TensorMultivector<Scalar>::zero(2, m.h.sig), Scalar::of_int(4) * m.h};
    report.rows.push_back(pair_row(
        "{Q,Qdag} = 2H", psub(padd(pmul(qs, pstar(qs), rho), pmul(pstar(qs), qs, rho)), rhs4), rho,
        r, lam2, "1/(2*r)", Q * Q.adjoint() + Q.adjoint() * Q, std::complex<double>(2.0) * M));
    return report;
}

namespace {

std::complex<double> vdot(const std::vector<std::complex<double>>& a,
                          const std::vector<std::complex<double>>& b) {
    std::complex<double> s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double vnorm(const std::vector<std::complex<double>>& a) { return std::sqrt(vdot(a, a).real()); }

}  // namespace

DegeneracyReport degeneracy_check(const MajoranaModel& m) {
    const SusyReport s = susy_charge(m);
    const DMatrix Pm(rep_even(m.parity));
    const DMatrix I = DMatrix::identity(4);
    const DMatrix proj = std::complex<double>(0.5) * (I + Pm);

    DegeneracyReport out;
    std::complex<double> tr(0);
    for (int i = 0; i < 4; ++i) tr += Pm.at(i, i);
    const int diff = static_cast<int>(std::lround(tr.real()));
    out.plus_multiplicity = (4 + diff) / 2;
    out.minus_multiplicity = (4 - diff) / 2;

    // Gram-Schmidt over the projector columns in index order.
    for (int c = 0; c < 4 && static_cast<int>(out.plus_basis.size()) < out.plus_multiplicity; ++c) {
        std::vector<std::complex<double>> v(4);
        for (int row = 0; row < 4; ++row) v[static_cast<std::size_t>(row)] = proj.at(row, c);
        for (const auto& b : out.plus_basis) {
            const std::complex<double> ov = vdot(b, v);
            for (std::size_t k = 0; k < 4; ++k) v[k] -= ov * b[k];
        }
        const double n = vnorm(v);
        if (n < 1e-9) continue;
        for (auto& x : v) x /= n;
        out.plus_basis.push_back(std::move(v));
    }

    for (const auto& psi : out.plus_basis) {
        const auto qpsi = s.q.apply(psi);
        out.q_image_norms.push_back(vnorm(qpsi));
        out.overlap_residuals.push_back(std::abs(vdot(psi, qpsi)));
        const auto flipped = Pm.apply(qpsi);
        std::vector<std::complex<double>> residual(4);
        for (std::size_t k = 0; k < 4; ++k) residual[k] = flipped[k] + qpsi[k];
        out.parity_flip_residuals.push_back(vnorm(residual));
    }
    return out;
}

}  // namespace spinorqc
