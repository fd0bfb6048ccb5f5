#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinorqc/rep.hpp"
#include "spinorqc/spinor.hpp"

#include <random>
#include <stdexcept>

using namespace spinorqc;

namespace {

const CScalar kOne = CScalar(Scalar::of_int(1));
const CScalar kI = CScalar(Scalar(), Scalar::of_int(1));

Multivector<Scalar> random_even(std::mt19937_64& rng) {
    static const Mask even[8] = {0, 3, 5, 6, 9, 10, 12, 15};
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    Multivector<Scalar> m;
    for (Mask k : even) {
        const int p = num(rng);
        const int q = den(rng);
        m.add_term(k, Scalar(Rational(p, q)));
    }
    return m;
}

}  // namespace

TEST_CASE("bivectors with g0 map to the Pauli matrices") {
    for (int i = 1; i <= 3; ++i) CHECK(rep_even(bivector_g0(i)) == sigma(i));
    CHECK(rep_even(Multivector<Scalar>::one()) == identity2());
    CHECK(rep_even(pseudoscalar()) == kI * identity2());
}

TEST_CASE("even basis blade images") {
    CHECK(rep_blade(0) == identity2());
    CHECK(rep_blade(3) == CScalar(-1) * sigma(1));   // g0 g1
    CHECK(rep_blade(5) == CScalar(-1) * sigma(2));   // g0 g2
    CHECK(rep_blade(9) == CScalar(-1) * sigma(3));   // g0 g3
    CHECK(rep_blade(6) == -kI * sigma(3));           // g1 g2
    CHECK(rep_blade(10) == kI * sigma(2));           // g1 g3
    CHECK(rep_blade(12) == -kI * sigma(1));          // g2 g3
    CHECK(rep_blade(15) == kI * identity2());        // g0 g1 g2 g3
}

TEST_CASE("pauli algebra holds in the image") {
    for (int i = 1; i <= 3; ++i) CHECK(sigma(i) * sigma(i) == identity2());
    CHECK(sigma(1) * sigma(2) == kI * sigma(3));
    CHECK(sigma(2) * sigma(3) == kI * sigma(1));
    CHECK(sigma(3) * sigma(1) == kI * sigma(2));
    CHECK(sigma(1) * sigma(2) + sigma(2) * sigma(1) == CMatrix(2));
}

TEST_CASE("the map is an algebra homomorphism") {
    static const Mask even[8] = {0, 3, 5, 6, 9, 10, 12, 15};
    for (Mask a : even)
        for (Mask b : even) {
            const auto ea = Multivector<Scalar>::blade(a, Scalar::of_int(1));
            const auto eb = Multivector<Scalar>::blade(b, Scalar::of_int(1));
            CHECK(rep_even(gp(ea, eb)) == rep_even(ea) * rep_even(eb));
        }
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        const auto x = random_even(rng);
        const auto y = random_even(rng);
        CHECK(rep_even(gp(x, y)) == rep_even(x) * rep_even(y));
        CHECK(rep_even(x + y) == rep_even(x) + rep_even(y));
    }
}

TEST_CASE("star is the conjugate transpose, reversion is not") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 20; ++i) {
        const auto x = random_even(rng);
        CHECK(rep_even(star(x)) == rep_even(x).adjoint());
    }
    const auto b3 = bivector_g0(3);
    CHECK(rep_even(reverse(b3)) != rep_even(b3).adjoint());
}

TEST_CASE("domain restrictions") {
    CHECK_THROWS_WITH_AS(rep_even(Multivector<Scalar>::generator(0)), "not in even subalgebra",
                         std::domain_error);
    CHECK_THROWS_AS(rep_even(Multivector<Scalar>::generator(1) + Multivector<Scalar>::one()),
                    std::domain_error);
    CHECK_THROWS_WITH_AS(rep_even(Multivector<Scalar>::one(Signature::cl30())),
                         "matrix representation is defined for Cl(1,3) only", std::domain_error);
}

TEST_CASE("tensor slots map through the Kronecker product") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 10; ++i) {
        const auto x = random_even(rng);
        const auto y = random_even(rng);
        const auto t = outer(TensorMultivector<Scalar>::from_single(x),
                             TensorMultivector<Scalar>::from_single(y));
        CHECK(rep_even(t) == kron(rep_even(x), rep_even(y)));
    }
    CHECK(rep_even(TensorMultivector<Scalar>::identity(3)).dim == 8);
    CHECK_THROWS_AS(rep_even(tensor_of<Scalar>({Multivector<Scalar>::generator(1),
                                                Multivector<Scalar>::one()})),
                    std::domain_error);
}

TEST_CASE("numeric twin agrees with the exact representation") {
    std::mt19937_64 rng(34);
    const auto x = random_even(rng);
    const DMatrix exact_image(rep_even(x));
    const DMatrix numeric_image = rep_even_numeric(to_float(x));
    CHECK((exact_image - numeric_image).max_entry_abs() < 1e-12);
}

TEST_CASE("operator norm by power iteration") {
    CHECK(operator_norm(sigma(1)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(operator_norm(CMatrix(2)) == 0.0);
    DMatrix d(2);
    d.at(0, 0) = 3.0;
    d.at(1, 1) = 0.5;
    CHECK(operator_norm(d) == doctest::Approx(3.0).epsilon(1e-10));
    DMatrix n(2);
    n.at(0, 1) = 2.0;  // nilpotent, largest singular value 2
    CHECK(operator_norm(n) == doctest::Approx(2.0).epsilon(1e-10));
}
