#pragma once

#include "spinorqc/multivector.hpp"
#include "spinorqc/tensor.hpp"

#include <string>

namespace spinorqc {

// Canonical text forms. Every printed value parses back to itself through the
// expression language (round-trip identity on canonical forms).
//
//   scalars       "0", "1/2", "1/2*rt2", "1/2 + 1/2*rt2"
//   blades        ascending generator order with g0 rotated to the end and the
//                 rotation sign folded into the coefficient: "g3*g0", "g1*g2"
//   multivectors  terms sorted by (grade, mask), joined with " + " / " - ",
//                 e.g. "1/2 + 1/2*g3*g0"
//   tensors       "1/4*tensor(1, g3*g0) + ..." sorted by (total grade, masks)

std::string to_string(const Scalar& s);
std::string to_string(double x);

std::string to_string(const Multivector<Scalar>& a);
std::string to_string(const Multivector<double>& a);
std::string to_string(const TensorMultivector<Scalar>& a);
std::string to_string(const TensorMultivector<double>& a);

std::string spin_class_name(SpinClass c);

}  // namespace spinorqc
