#pragma once

#include "spinorqc/spinor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinorqc {

// Two-slot Majorana triple G1 = g1g0 (x) 1, G2 = g3g0 (x) 1, G3 = g2g0 (x) g1g0,
// parity PM = g2g0 (x) g3g0, emergent operator Ge = -(iota (x) 1) G1 G2 G3
// (reduces to -(1 (x) g1g0)), Hamiltonian H = -(iota (x) 1)(a G1 + b G2 + c G3).

struct MajoranaSet {
    TensorMultivector<Scalar> g1, g2, g3;
};
MajoranaSet majorana_set();

TensorMultivector<Scalar> parity_op();
TensorMultivector<Scalar> emergent_majorana();

struct MajoranaModel {
    Scalar a, b, c;
    MajoranaSet gammas;
    TensorMultivector<Scalar> h;
    TensorMultivector<Scalar> parity;
    TensorMultivector<Scalar> emergent;
};
MajoranaModel majorana_model(const Scalar& a, const Scalar& b, const Scalar& c);

TensorMultivector<Scalar> hamiltonian_square(const MajoranaModel& m);

// exp(k*pi/4 * exponent) for the two Majorana braid exponents
// u = g1g0 g3g0 (x) 1 and v = g3g0 g2g0 (x) g1g0.
struct MajoranaBraids {
    TensorMultivector<Scalar> b1, b2;
};
MajoranaBraids majorana_braids(int theta_quarter_pi);

// Exact closed form when the exponent squares to -identity; otherwise a float
// series fallback with a notice.
struct TensorExp {
    bool exact;
    std::optional<TensorMultivector<Scalar>> value;
    std::optional<TensorMultivector<double>> approx;
    std::string notice;
};
TensorExp exp_tensor_with_fallback(int theta_quarter_pi, const TensorMultivector<Scalar>& e);

// One verified relation: exact verdict, exact and matrix-side residuals, and
// whether the two evaluations agree.
struct RelationRow {
    std::string label;
    bool holds;                          // exact expansion verdict
    std::string residual_text;           // canonical text, empty when holds
    std::optional<double> exact_residual;  // matrix norm of the exact residual
    double spectral_residual;            // residual of the matrix-side evaluation
    bool agreement;                      // verdicts coincide
};

std::vector<RelationRow> relation_suite(const MajoranaModel& m, int theta_quarter_pi = 1);

}  // namespace spinorqc
