#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinorqc/format.hpp"
#include "spinorqc/multivector.hpp"
#include "spinorqc/scalar.hpp"

#include <cmath>
#include <stdexcept>

using namespace spinorqc;

TEST_CASE("ring arithmetic in Q[sqrt2]") {
    const Scalar a(Rational(1, 2), Rational(-3, 4));
    const Scalar b(Rational(-2, 3), Rational(5));
    CHECK(a + b == Scalar(Rational(-1, 6), Rational(17, 4)));
    CHECK(a - b == Scalar(Rational(7, 6), Rational(-23, 4)));
    CHECK(a * b == Scalar(Rational(-47, 6), Rational(3)));
    CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar::of_int(2));
    CHECK(Scalar::inv_sqrt2() * Scalar::sqrt2() == Scalar::of_int(1));
    CHECK(Scalar::inv_sqrt2() + Scalar::inv_sqrt2() == Scalar::sqrt2());
    CHECK((-a) + a == Scalar());
}

TEST_CASE("inverse") {
    const Scalar x(Rational(3), Rational(1));
    CHECK(x.inverse() == Scalar(Rational(3, 7), Rational(-1, 7)));
    CHECK(x * x.inverse() == Scalar::of_int(1));
    const Scalar y(Rational(0), Rational(-2, 5));
    CHECK(y * y.inverse() == Scalar::of_int(1));
    CHECK(Scalar::inv_sqrt2().inverse() == Scalar::sqrt2());
    CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("exact sign with mixed components") {
    // 3/2 - sqrt2 > 0 since 9/4 > 2; 7/5 - sqrt2 < 0 since 49/25 < 2
    CHECK(Scalar(Rational(3, 2), Rational(-1)).sgn() == 1);
    CHECK(Scalar(Rational(7, 5), Rational(-1)).sgn() == -1);
    CHECK(Scalar(Rational(-3, 2), Rational(1)).sgn() == -1);
    CHECK(Scalar(Rational(-7, 5), Rational(1)).sgn() == 1);
    CHECK(Scalar().sgn() == 0);
    CHECK(Scalar(Rational(0), Rational(-4)).sgn() == -1);
    CHECK(Scalar(Rational(7, 5), Rational(-1)).abs() == Scalar(Rational(-7, 5), Rational(1)));
    CHECK(Scalar(Rational(3, 2), Rational(-1)).abs() == Scalar(Rational(3, 2), Rational(-1)));
}

TEST_CASE("ordering straddles sqrt2") {
    CHECK(Scalar(Rational(7, 5)) < Scalar::sqrt2());
    CHECK(Scalar::sqrt2() < Scalar(Rational(3, 2)));
    CHECK(Scalar::inv_sqrt2() < Scalar::of_int(1));
    CHECK(Scalar::of_int(1) < Scalar::sqrt2());
}

TEST_CASE("rational literal parsing") {
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("+5") == Rational(5));
    CHECK(parse_rational("-12/8") == Rational(-3, 2));
    CHECK(parse_rational("0/9") == Rational(0));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
    CHECK(rational_to_string(Rational(4)) == "4");
}

TEST_CASE("canonical scalar text") {
    CHECK(to_string(Scalar()) == "0");
    CHECK(to_string(Scalar::of_ratio(-2, 7)) == "-2/7");
    CHECK(to_string(Scalar::sqrt2()) == "rt2");
    CHECK(to_string(-Scalar::sqrt2()) == "-rt2");
    CHECK(to_string(Scalar::inv_sqrt2()) == "1/2*rt2");
    CHECK(to_string(Scalar(Rational(1, 2), Rational(1, 2))) == "1/2 + 1/2*rt2");
    CHECK(to_string(Scalar(Rational(1, 2), Rational(-1, 3))) == "1/2 - 1/3*rt2");
    CHECK(to_string(Scalar(Rational(-2), Rational(1))) == "-2 + rt2");
}

TEST_CASE("conversion to double") {
    CHECK(Scalar(Rational(1, 2), Rational(1, 2)).to_double() ==
          doctest::Approx(0.5 + std::sqrt(2.0) / 2).epsilon(1e-15));
    CHECK(Scalar::of_int(-3).to_double() == -3.0);
}

TEST_CASE("quarter-pi trigonometry table") {
    CHECK(cos_quarter_pi(0) == Scalar::of_int(1));
    CHECK(cos_quarter_pi(1) == Scalar::inv_sqrt2());
    CHECK(cos_quarter_pi(2) == Scalar());
    CHECK(cos_quarter_pi(3) == -Scalar::inv_sqrt2());
    CHECK(cos_quarter_pi(4) == Scalar::of_int(-1));
    CHECK(sin_quarter_pi(1) == Scalar::inv_sqrt2());
    CHECK(sin_quarter_pi(2) == Scalar::of_int(1));
    CHECK(sin_quarter_pi(-1) == -Scalar::inv_sqrt2());
    for (int k = -9; k <= 9; ++k) {
        const Scalar c = cos_quarter_pi(k), s = sin_quarter_pi(k);
        CHECK(c * c + s * s == Scalar::of_int(1));
        CHECK(c.to_double() ==
              doctest::Approx(std::cos(k * std::acos(-1.0) / 4)).epsilon(1e-12));
        CHECK(s.to_double() ==
              doctest::Approx(std::sin(k * std::acos(-1.0) / 4)).epsilon(1e-12));
    }
}
