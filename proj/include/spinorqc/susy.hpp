#pragma once

#include "spinorqc/majorana.hpp"
#include "spinorqc/matrix.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace spinorqc {

// Element x0 + x1*r of K[r]/(r^2 - rho), where K is the exact two-slot tensor
// algebra, rho = a^2+b^2+c^2 > 0 and r is the positive real root. Keeping r
// symbolic lets the supercharge relations be decided exactly for every
// admissible parameter triple, including those with irrational r.
struct PairOp {
    TensorMultivector<Scalar> c0, c1;
};

PairOp pair_of(TensorMultivector<Scalar> x);
PairOp padd(const PairOp& x, const PairOp& y);
PairOp psub(const PairOp& x, const PairOp& y);
PairOp pmul(const PairOp& x, const PairOp& y, const Scalar& rho);
PairOp pstar(const PairOp& x);

// Positive square root of rho inside Q[sqrt2], when one exists.
std::optional<Scalar> sqrt_in_ring(const Scalar& rho);

// x0 + x1*r == 0. When rho is a square in Q[sqrt2] the root folds into the
// coefficients; otherwise 1 and r are independent over the algebra and both
// components must vanish.
bool pair_is_zero(const PairOp& x, const Scalar& rho);

std::string pair_text(const PairOp& x);

// Supercharge Q = H^{1/2} Ge (1+PM)/4 built from the principal square root
// H^{1/2} = (r + H)/sqrt(2r) of the anti-Hermitian H (eigenvalues +-ir).
// q_scaled holds sqrt(2r)*Q = (H + r) Ge (1+PM)/4 as a pair, so each relation
// residual is an exact pair up to a positive power of 1/sqrt(2r).
struct SusyReport {
    Scalar rho;               // a^2 + b^2 + c^2
    double r = 0;             // sqrt(rho)
    PairOp q_scaled;          // sqrt(2r) * Q
    DMatrix q;                // numeric Q through the representation
    double sqrt_defect = 0;       // ||S*S - M||max for S = (r*I + M)/sqrt(2r)
    double projector_defect = 0;  // ||S - principal sqrt via spectral projectors||max
    std::vector<RelationRow> rows;  // Q^2 = 0, [Q,H] = 0, {Q,PM} = 0, {Q,Qdag} = 2H
};

SusyReport susy_charge(const MajoranaModel& m);

// Parity structure of the numeric model: multiplicities of PM = +-1 read off
// the trace, an orthonormal basis of the +1 eigenspace, and how Q acts on it.
struct DegeneracyReport {
    int plus_multiplicity = 0;
    int minus_multiplicity = 0;
    std::vector<std::vector<std::complex<double>>> plus_basis;
    std::vector<double> q_image_norms;          // ||Q psi||
    std::vector<double> overlap_residuals;      // |<psi, Q psi>|
    std::vector<double> parity_flip_residuals;  // ||PM (Q psi) + Q psi||
};

DegeneracyReport degeneracy_check(const MajoranaModel& m);

}  // namespace spinorqc
