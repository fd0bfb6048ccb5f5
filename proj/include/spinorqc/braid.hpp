#pragma once

#include "spinorqc/spinor.hpp"

#include <optional>
#include <set>
#include <string>

namespace spinorqc {

// Braid gates B1 = exp((pi/4) g1g0 g2g0) = (1 + g1g0 g2g0)/sqrt2 and
// B2 = exp((pi/4) g2g0 g3g0) = (1 + g2g0 g3g0)/sqrt2.

enum class Which { B1, B2 };

struct BraidGenerator {
    Which which;
    Multivector<Scalar> value;
};

BraidGenerator braid_b(Which which);

struct BraidRelation {
    bool holds;
    std::optional<Multivector<Scalar>> common;  // x y x when holds
};
BraidRelation braid_relation_check(const Multivector<Scalar>& x, const Multivector<Scalar>& y);

Multivector<Scalar> braid_action(const BraidGenerator& g, const Multivector<Scalar>& s);

TensorMultivector<Scalar> braid_tensor_power(const BraidGenerator& g, int n);

// Multiplicative closure of {B1, B2}; elements keyed by canonical text.
std::set<std::string> braid_group_closure();

struct BellInvariance {
    bool psi_plus_invariant_decoded;   // B1^(x)2 fixes decoded amplitudes
    bool psi_minus_invariant_decoded;
    bool psi_plus_invariant_raw;       // raw tensor equality (recorded, weaker)
    bool psi_minus_invariant_raw;
    TensorMultivector<Scalar> b2_psi_plus_difference;  // B2^(x)2 Psi+  -  Psi+
};
BellInvariance bell_invariance_check();

struct TeleportBranch {
    Bell label;
    Multivector<Scalar> correction;     // the operator on the payload slot
    Multivector<Scalar> payload;        // correction applied to psi, as a state
};

struct TeleportDecomposition {
    QubitAmplitudes input;  // psi = a|0> + b|1>
    std::array<TeleportBranch, 4> branches;
    TensorMultivector<Scalar> lhs;  // psi (x) Psi+ times P^(x)3
    bool exact;                     // lhs equals the half-sum of branches
};
TeleportDecomposition teleport_decompose(const Scalar& a, const Scalar& b);

struct IStateEquivalence {
    bool i01_decode_equal;  // i g3g0 (x) g1g0 P2 vs g3g0 (x) i g1g0 P2
    bool i10_decode_equal;
    bool i01_raw_equal;     // the raw elements differ
    bool i10_raw_equal;
};
IStateEquivalence i_state_equivalence_check();

}  // namespace spinorqc
