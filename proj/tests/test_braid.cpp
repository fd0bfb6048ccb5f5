#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinorqc/braid.hpp"
#include "spinorqc/format.hpp"
#include "spinorqc/spinor.hpp"

#include <string>

using namespace spinorqc;

namespace {

const Scalar h = Scalar::inv_sqrt2();
const Multivector<Scalar> e1 = gp(bivector_g0(1), bivector_g0(2));
const Multivector<Scalar> e2 = gp(bivector_g0(2), bivector_g0(3));

}  // namespace

TEST_CASE("closed forms") {
    const auto b1 = braid_b(Which::B1);
    const auto b2 = braid_b(Which::B2);
    CHECK(b1.value == h * (Multivector<Scalar>::one() + e1));
    CHECK(b2.value == h * (Multivector<Scalar>::one() + e2));
    CHECK(b1.value == exp_bivector(1, e1));
    CHECK(b2.value == exp_bivector(1, e2));
    CHECK(norm_squared(b1.value) == Scalar::of_int(1));
    CHECK(norm_squared(b2.value) == Scalar::of_int(1));
    CHECK(spin_membership(b1.value) == SpinClass::spin_plus);
}

TEST_CASE("eighth roots of unity") {
    const auto b1 = braid_b(Which::B1).value;
    auto pow = Multivector<Scalar>::one();
    for (int k = 0; k < 4; ++k) pow = gp(pow, b1);
    CHECK(pow == -Multivector<Scalar>::one());
    for (int k = 0; k < 4; ++k) pow = gp(pow, b1);
    CHECK(pow == Multivector<Scalar>::one());
}

TEST_CASE("artin relation with its common value") {
    const auto b1 = braid_b(Which::B1).value;
    const auto b2 = braid_b(Which::B2).value;
    const auto rel = braid_relation_check(b1, b2);
    CHECK(rel.holds);
    REQUIRE(rel.common.has_value());
    CHECK(*rel.common == h * (e1 + e2));
    CHECK(*rel.common == gp(gp(b1, b2), b1));
}

TEST_CASE("the relation is not vacuous") {
    CHECK_FALSE(braid_relation_check(gamma(0), gamma(1)).holds);
    CHECK_FALSE(braid_relation_check(bivector_g0(1), bivector_g0(2)).holds);
}

TEST_CASE("actions on the encoded basis") {
    const auto b1 = braid_b(Which::B1);
    const auto b2 = braid_b(Which::B2);
    const auto p = idempotent_p();
    const auto s0 = gp(bivector_g0(3), p);
    const auto s1 = gp(bivector_g0(1), p);

    CHECK(braid_action(b2, s0) == h * (s0 + gp(e2, p)));
    CHECK(braid_action(b2, s1) == h * (gp(e1, p) + s1));

    CHECK(decode_qubit(braid_action(b1, s0)) == QubitAmplitudes{h, h, Scalar(), Scalar()});
    CHECK(decode_qubit(braid_action(b1, s1)) == QubitAmplitudes{Scalar(), Scalar(), h, -h});
    CHECK(decode_qubit(braid_action(b2, s0)) == QubitAmplitudes{h, Scalar(), Scalar(), h});
    CHECK(decode_qubit(braid_action(b2, s1)) == QubitAmplitudes{Scalar(), h, h, Scalar()});
}

TEST_CASE("tensor powers") {
    const auto b1 = braid_b(Which::B1);
    const auto b2 = braid_b(Which::B2);
    CHECK(braid_tensor_power(b1, 2) ==
          outer(TensorMultivector<Scalar>::from_single(b1.value),
                TensorMultivector<Scalar>::from_single(b1.value)));
    for (int n = 2; n <= 3; ++n) {
        const auto u = braid_tensor_power(b1, n);
        const auto v = braid_tensor_power(b2, n);
        CHECK(tmul(tmul(u, v), u) == tmul(tmul(v, u), v));
        CHECK(unitarity_check(u));
    }
}

TEST_CASE("group closure has order 48") {
    const auto closure = braid_group_closure();
    CHECK(closure.size() == 48);
    CHECK(closure.count("1") == 1);
    CHECK(closure.count("-1") == 1);
    CHECK(closure.count(to_string(braid_b(Which::B1).value)) == 1);
}

TEST_CASE("bell invariance is a statement about decoded amplitudes") {
    const auto inv = bell_invariance_check();
    CHECK(inv.psi_plus_invariant_decoded);
    CHECK(inv.psi_minus_invariant_decoded);
    CHECK_FALSE(inv.psi_plus_invariant_raw);
    CHECK_FALSE(inv.psi_minus_invariant_raw);
    CHECK_FALSE(inv.b2_psi_plus_difference.is_zero());
    const auto moved = tmul(braid_tensor_power(braid_b(Which::B2), 2), bell_state(Bell::psi_plus));
    CHECK(inv.b2_psi_plus_difference == moved - bell_state(Bell::psi_plus));
    CHECK_FALSE(decode_state(moved) == decode_state(bell_state(Bell::psi_plus)));
}

TEST_CASE("pseudoscalar placement does not matter after decoding") {
    const auto eq = i_state_equivalence_check();
    CHECK(eq.i01_decode_equal);
    CHECK(eq.i10_decode_equal);
    CHECK_FALSE(eq.i01_raw_equal);
    CHECK_FALSE(eq.i10_raw_equal);
}
