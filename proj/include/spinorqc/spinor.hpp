#pragma once

#include "spinorqc/rep.hpp"

#include <array>
#include <vector>

namespace spinorqc {

// Primitive idempotent P = (1 + g3 g0)/2 and the minimal left ideal Cl+ P.
// States: (a1 g3g0 + a2 i g3g0 + a3 g1g0 + a4 i g1g0) P with i realized by the
// pseudoscalar; n-slot states use the same dictionary per slot with the
// pseudoscalar inserted in the last slot for imaginary parts.

Multivector<Scalar> idempotent_p();
Multivector<Scalar> gamma(int i);                       // g_i
Multivector<Scalar> bivector_g0(int i);                 // g_i g0
Multivector<Scalar> pseudoscalar();                     // g0 g1 g2 g3
TensorMultivector<Scalar> idempotent_p_power(int n);    // P^(x)n

struct QubitAmplitudes {
    Scalar a1, a2, a3, a4;  // (a1 + i a2)|0> + (a3 + i a4)|1>
    friend bool operator==(const QubitAmplitudes& x, const QubitAmplitudes& y) {
        return x.a1 == y.a1 && x.a2 == y.a2 && x.a3 == y.a3 && x.a4 == y.a4;
    }
};

struct MultiQubitAmplitudes {
    int n = 1;
    std::vector<CScalar> amps;  // 2^n entries, lexicographic bitstring order
    friend bool operator==(const MultiQubitAmplitudes& x, const MultiQubitAmplitudes& y) {
        return x.n == y.n && x.amps == y.amps;
    }
};

Multivector<Scalar> encode_qubit(const QubitAmplitudes& q);
QubitAmplitudes decode_qubit(const Multivector<Scalar>& s);

TensorMultivector<Scalar> encode_state(const MultiQubitAmplitudes& amps);
MultiQubitAmplitudes decode_state(const TensorMultivector<Scalar>& s);

bool in_ideal(const Multivector<Scalar>& s);
bool in_ideal(const TensorMultivector<Scalar>& s);

// Bra of a state: P^(x)n times the amplitude expansion with imaginary parts
// negated; coincides with star(s) on the whole ideal.
Multivector<Scalar> dual(const Multivector<Scalar>& s);
TensorMultivector<Scalar> dual_state(const TensorMultivector<Scalar>& s);

struct InnerProduct {
    Scalar raw;         // <dual(a) b>_0
    Scalar normalized;  // 2^n * raw
};
InnerProduct inner_product(const Multivector<Scalar>& a, const Multivector<Scalar>& b);
InnerProduct inner_product_state(const TensorMultivector<Scalar>& a,
                                 const TensorMultivector<Scalar>& b);

// Complex column of a state: first column of its matrix representation.
std::vector<CScalar> rep_spinor(const Multivector<Scalar>& s);
std::vector<CScalar> rep_spinor(const TensorMultivector<Scalar>& s);

// Rank of the span of the eight even-basis elements times P, over Q[sqrt2].
int ideal_dimension();

enum class Bell { phi_plus, phi_minus, psi_plus, psi_minus };
const char* bell_name(Bell b);
TensorMultivector<Scalar> bell_state(Bell b);
std::array<TensorMultivector<Scalar>, 4> bell_states();

// Bipartite state factorability: rank of the 2x2 complex amplitude matrix,
// decided exactly (determinant test).
bool is_factorable(const TensorMultivector<Scalar>& state);

}  // namespace spinorqc
