#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinorqc/format.hpp"
#include "spinorqc/tensor.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace spinorqc;

namespace {

Multivector<Scalar> gen(int i) { return Multivector<Scalar>::generator(i); }
Multivector<Scalar> biv(int i) { return gp(gen(i), gen(0)); }

TensorMultivector<Scalar> random_tensor(std::mt19937_64& rng, int slots) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> mask(0, 15);
    auto t = TensorMultivector<Scalar>::zero(slots);
    for (int i = 0; i < 6; ++i) {
        std::vector<Mask> key;
        for (int s = 0; s < slots; ++s) key.push_back(static_cast<Mask>(mask(rng)));
        const int p = num(rng);
        const int q = den(rng);
        t.add_term(key, Scalar(Rational(p, q)));
    }
    return t;
}

}  // namespace

TEST_CASE("componentwise product carries no cross-slot sign") {
    const auto x = tensor_of<Scalar>({Multivector<Scalar>::one(), gen(1)});
    const auto y = tensor_of<Scalar>({gen(1), Multivector<Scalar>::one()});
    CHECK(tmul(x, y) == tensor_of<Scalar>({gen(1), gen(1)}));
    CHECK(tmul(x, y) == tmul(y, x));  // odd-odd slots still commute
}

TEST_CASE("slot and signature compatibility is enforced") {
    const auto two = TensorMultivector<Scalar>::identity(2);
    const auto three = TensorMultivector<Scalar>::identity(3);
    CHECK_THROWS_WITH_AS(tmul(two, three), "slot count mismatch: 2 vs 3",
                         std::invalid_argument);
    CHECK_THROWS_AS(two + three, std::invalid_argument);
}

TEST_CASE("tensor_of stacks outer products") {
    const auto t = tensor_of<Scalar>({biv(1), biv(2), biv(3)});
    CHECK(t.slots == 3);
    const auto u = outer(outer(TensorMultivector<Scalar>::from_single(biv(1)),
                               TensorMultivector<Scalar>::from_single(biv(2))),
                         TensorMultivector<Scalar>::from_single(biv(3)));
    CHECK(t == u);
    CHECK(t.is_even_per_slot());
    CHECK_FALSE(tensor_of<Scalar>({gen(0), biv(1)}).is_even_per_slot());
}

TEST_CASE("multilinearity of the outer product") {
    std::mt19937_64 rng(21);
    const auto a = random_tensor(rng, 1);
    const auto b = random_tensor(rng, 1);
    const auto c = random_tensor(rng, 2);
    CHECK(outer(a + b, c) == outer(a, c) + outer(b, c));
    CHECK(outer(c, a + b) == outer(c, a) + outer(c, b));
}

TEST_CASE("per-slot involutions") {
    const auto t = tensor_of<Scalar>({gp(biv(1), biv(2)), gen(3)});
    CHECK(tensor_reverse(t) == tensor_of<Scalar>({reverse(gp(biv(1), biv(2))), reverse(gen(3))}));
    CHECK(tensor_grade_involution(t) ==
          tensor_of<Scalar>({grade_involution(gp(biv(1), biv(2))), grade_involution(gen(3))}));
    CHECK(tensor_star(t) == tensor_of<Scalar>({star(gp(biv(1), biv(2))), star(gen(3))}));
    std::mt19937_64 rng(22);
    for (int i = 0; i < 10; ++i) {
        const auto x = random_tensor(rng, 2);
        const auto y = random_tensor(rng, 2);
        CHECK(tensor_reverse(tmul(x, y)) == tmul(tensor_reverse(y), tensor_reverse(x)));
        CHECK(tensor_star(tmul(x, y)) == tmul(tensor_star(y), tensor_star(x)));
        CHECK(tensor_grade_involution(tmul(x, y)) ==
              tmul(tensor_grade_involution(x), tensor_grade_involution(y)));
        CHECK(tensor_reverse(tensor_reverse(x)) == x);
        CHECK(tensor_star(tensor_star(x)) == x);
    }
}

TEST_CASE("unitarity") {
    const auto rotor = exp_tensor(1, tensor_of<Scalar>({gp(biv(1), biv(2)), Multivector<Scalar>::one()}));
    CHECK(unitarity_check(rotor));
    CHECK_FALSE(unitarity_check(Scalar::of_int(2) * TensorMultivector<Scalar>::identity(2)));
}

TEST_CASE("parity clause on generator tuples") {
    CHECK(delta_sign({0, 1}, {0, 1}) == 0);  // all equal
    CHECK(delta_sign({0, 1}, {0, 2}) == 0);  // one mismatch
    CHECK(delta_sign({0, 1}, {2, 3}) == 1);  // two mismatches
    CHECK(delta_sign({0, 1, 2}, {1, 2, 3}) == 0);
    CHECK(delta_sign({0, 1, 2}, {1, 2, 2}) == 1);
    CHECK_THROWS_AS(delta_sign({0}, {0, 1}), std::invalid_argument);
}

TEST_CASE("exact tensor exponential") {
    const auto e = tensor_of<Scalar>({gp(biv(1), biv(3)), Multivector<Scalar>::one()});
    CHECK(tmul(e, e) == -TensorMultivector<Scalar>::identity(2));
    CHECK(exp_tensor(0, e) == TensorMultivector<Scalar>::identity(2));
    CHECK(exp_tensor(2, e) == e);
    CHECK(exp_tensor(4, e) == -TensorMultivector<Scalar>::identity(2));
    const auto r = exp_tensor(1, e);
    CHECK(tmul(r, r) == e);
    CHECK_THROWS_WITH_AS(exp_tensor(1, tensor_of<Scalar>({biv(1), Multivector<Scalar>::one()})),
                         "not a unit negative-square exponent", std::domain_error);
}

TEST_CASE("series exponential matches the closed form") {
    const auto e = tensor_of<Scalar>({gp(biv(1), biv(3)), Multivector<Scalar>::one()});
    const double theta = 3 * std::acos(-1.0) / 4;
    const auto approx = exp_tensor_series(theta, to_float(e));
    const auto exact = to_float(exp_tensor(3, e));
    for (const auto& [k, c] : exact.terms)
        CHECK(approx.terms.at(k) == doctest::Approx(c).epsilon(1e-12));
}

TEST_CASE("canonical tensor text") {
    const auto t = tensor_of<Scalar>({biv(3), biv(3)});
    CHECK(to_string(t) == "tensor(g3*g0, g3*g0)");
    CHECK(to_string(Scalar::of_ratio(1, 2) * t) == "1/2*tensor(g3*g0, g3*g0)");
    CHECK(to_string(TensorMultivector<Scalar>::zero(2)) == "0");
    CHECK(to_string(TensorMultivector<Scalar>::identity(2)) == "tensor(1, 1)");
    const auto sum = t - tensor_of<Scalar>({biv(1), biv(1)});
    CHECK(to_string(sum) == "-tensor(g1*g0, g1*g0) + tensor(g3*g0, g3*g0)");
}
