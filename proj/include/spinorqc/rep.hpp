#pragma once

#include "spinorqc/matrix.hpp"
#include "spinorqc/tensor.hpp"

namespace spinorqc {

// Isomorphism from the even subalgebra of Cl(1,3) onto 2x2 complex matrices,
// generated by g_i g_0 -> sigma_i and extended multiplicatively; tensor slots
// map through Kronecker products. Only even elements are representable.

// Image of an even basis blade of Cl(1,3).
const CMatrix& rep_blade(Mask m);

CMatrix rep_even(const Multivector<Scalar>& a);
CMatrix rep_even(const TensorMultivector<Scalar>& a);

DMatrix rep_even_numeric(const Multivector<double>& a);

// Pauli matrices and the 2x2 identity, exact.
const CMatrix& sigma(int i);  // i in {1,2,3}
const CMatrix& identity2();

}  // namespace spinorqc
