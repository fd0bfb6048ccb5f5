#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinorqc/rep.hpp"
#include "spinorqc/susy.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

using namespace spinorqc;

namespace {

Scalar sc(int num, int den = 1) { return Scalar::of_ratio(num, den); }

// Every supercharge relation must fail exactly, with the numeric oracle
// agreeing that it fails.
void check_all_relations_fail(const SusyReport& report) {
    REQUIRE(report.rows.size() == 4);
    for (const auto& row : report.rows) {
        INFO(row.label);
        CHECK_FALSE(row.holds);
        CHECK(row.agreement);
        CHECK_FALSE(row.residual_text.empty());
        REQUIRE(row.exact_residual.has_value());
        CHECK(*row.exact_residual > 1e-10);
        CHECK(row.spectral_residual > 1e-10);
    }
    CHECK(report.sqrt_defect < 1e-10);
    CHECK(report.projector_defect < 1e-10);
}

}  // namespace

TEST_CASE("square roots inside the coefficient ring") {
    CHECK(sqrt_in_ring(sc(4)) == Scalar::of_int(2));
    CHECK(sqrt_in_ring(sc(9, 4)) == Scalar::of_ratio(3, 2));
    CHECK(sqrt_in_ring(sc(0)) == Scalar());
    CHECK(sqrt_in_ring(sc(2)) == Scalar::sqrt2());
    CHECK(sqrt_in_ring(sc(8)) == Scalar(Rational(0), Rational(2)));
    CHECK(sqrt_in_ring(Scalar(Rational(3), Rational(2))) == Scalar(Rational(1), Rational(1)));
    CHECK(sqrt_in_ring(Scalar(Rational(6), Rational(4))) == Scalar(Rational(2), Rational(1)));
    CHECK(sqrt_in_ring(Scalar(Rational(11), Rational(6))) == Scalar(Rational(3), Rational(1)));
    // (sqrt2 - 1)^2 = 3 - 2*sqrt2; the returned root is the positive one.
    CHECK(sqrt_in_ring(Scalar(Rational(3), Rational(-2))) == Scalar(Rational(-1), Rational(1)));

    CHECK_FALSE(sqrt_in_ring(sc(3)).has_value());
    CHECK_FALSE(sqrt_in_ring(sc(5)).has_value());
    CHECK_FALSE(sqrt_in_ring(Scalar(Rational(1), Rational(1))).has_value());
    CHECK_FALSE(sqrt_in_ring(Scalar(Rational(0), Rational(1))).has_value());
    CHECK_FALSE(sqrt_in_ring(sc(-1)).has_value());
    CHECK_FALSE(sqrt_in_ring(Scalar(Rational(-3), Rational(2))).has_value());
}

TEST_CASE("pair arithmetic") {
    const auto id = TensorMultivector<Scalar>::identity(2);
    const auto pm = parity_op();
    const auto ge = emergent_majorana();
    const Scalar rho = sc(3);

    const PairOp x{pm, ge};
    const PairOp y{ge, id};
    const PairOp prod = pmul(x, y, rho);
    CHECK(prod.c0 == tmul(pm, ge) + rho * tmul(ge, id));
    CHECK(prod.c1 == tmul(pm, id) + tmul(ge, ge));
    CHECK(padd(x, y).c0 == pm + ge);
    CHECK(psub(x, y).c1 == ge - id);
    CHECK(pstar(x).c0 == tensor_star(pm));
    CHECK(pstar(x).c1 == tensor_star(ge));
    CHECK(pair_of(pm).c1.is_zero());
}

TEST_CASE("pair vanishing depends on whether the root folds in") {
    const auto id = TensorMultivector<Scalar>::identity(2);
    const auto zero = TensorMultivector<Scalar>::zero(2);

    // rho = 4: r = 2 folds, so (-2*X, X) is the zero pair.
    CHECK(pair_is_zero({Scalar::of_int(-2) * id, id}, sc(4)));
    // rho = 2: r = sqrt2 folds through the ring.
    CHECK(pair_is_zero({-(Scalar::sqrt2()) * id, id}, sc(2)));
    // rho = 3: r is irrational over Q[sqrt2], so 1 and r are independent.
    CHECK_FALSE(pair_is_zero({-(Scalar::sqrt2()) * id, id}, sc(3)));
    CHECK_FALSE(pair_is_zero({zero, id}, sc(3)));
    CHECK(pair_is_zero({zero, zero}, sc(3)));
    CHECK_FALSE(pair_is_zero({id, zero}, sc(4)));
}

TEST_CASE("pair text shapes") {
    const auto id = TensorMultivector<Scalar>::identity(2);
    const auto zero = TensorMultivector<Scalar>::zero(2);
    CHECK(pair_text({id, zero}) == "tensor(1, 1)");
    CHECK(pair_text({zero, id}) == "r * [tensor(1, 1)]");
    CHECK(pair_text({id, id}) == "[tensor(1, 1)] + r * [tensor(1, 1)]");
}

TEST_CASE("supercharge report structure at unit coefficients") {
    const auto m = majorana_model(sc(1), Scalar(), Scalar());
    const auto report = susy_charge(m);
    CHECK(report.rho == sc(1));
    CHECK(report.r == doctest::Approx(1.0));

    const auto id = TensorMultivector<Scalar>::identity(2);
    const auto gate = Scalar::of_ratio(1, 4) * tmul(m.emergent, id + m.parity);
    CHECK(report.q_scaled.c0 == tmul(m.h, gate));
    CHECK(report.q_scaled.c1 == gate);

    const std::vector<std::string> labels = {"Q^2 = 0", "[Q,H] = 0", "{Q,PM} = 0", "{Q,Qdag} = 2H"};
    REQUIRE(report.rows.size() == labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) CHECK(report.rows[i].label == labels[i]);
    check_all_relations_fail(report);
}

TEST_CASE("every relation fails for every admissible coefficient choice tried") {
    check_all_relations_fail(susy_charge(majorana_model(sc(1), Scalar(), Scalar())));
    check_all_relations_fail(susy_charge(majorana_model(sc(1, 2), sc(-1, 3), sc(2, 7))));
    check_all_relations_fail(susy_charge(majorana_model(sc(1), sc(1), sc(1))));
    // rho = 2 exercises the branch where r lives inside the coefficient ring.
    check_all_relations_fail(susy_charge(majorana_model(Scalar::sqrt2(), Scalar(), Scalar())));
    // rho = 4 has a rational root.
    check_all_relations_fail(susy_charge(majorana_model(Scalar::sqrt2(), sc(1), sc(-1))));
}

TEST_CASE("reported residuals match an independent reconstruction") {
    const auto m = majorana_model(sc(1, 2), sc(-1, 3), sc(2, 7));
    const auto report = susy_charge(m);
    const Scalar& rho = report.rho;
    const double r = report.r;
    const PairOp& qs = report.q_scaled;

    const auto pair_abs = [&](const PairOp& p) {
        const DMatrix num =
            DMatrix(rep_even(p.c0)) + std::complex<double>(r) * DMatrix(rep_even(p.c1));
        return num.max_entry_abs();
    };

    const PairOp q2 = pmul(qs, qs, rho);
    CHECK_FALSE(pair_is_zero(q2, rho));
    CHECK(*report.rows[0].exact_residual ==
          doctest::Approx(pair_abs(q2) / (2.0 * r)).epsilon(1e-12));

    const PairOp h_p = pair_of(m.h);
    const PairOp comm = psub(pmul(qs, h_p, rho), pmul(h_p, qs, rho));
    CHECK(*report.rows[1].exact_residual ==
          doctest::Approx(pair_abs(comm) / std::sqrt(2.0 * r)).epsilon(1e-12));

    const PairOp rhs4{TensorMultivector<Scalar>::zero(2), Scalar::of_int(4) * m.h};
    const PairOp anti = psub(padd(pmul(qs, pstar(qs), rho), pmul(pstar(qs), qs, rho)), rhs4);
    CHECK_FALSE(pair_is_zero(anti, rho));
    CHECK(*report.rows[3].exact_residual ==
          doctest::Approx(pair_abs(anti) / (2.0 * r)).epsilon(1e-12));

    // The numeric charge really is the matrix whose relations the rows report.
    const DMatrix q2_mat = report.q * report.q;
    CHECK(report.rows[0].spectral_residual == doctest::Approx(q2_mat.max_entry_abs()).epsilon(1e-12));
}

TEST_CASE("zero coefficients are rejected") {
    CHECK_THROWS_WITH_AS(susy_charge(majorana_model(Scalar(), Scalar(), Scalar())),
                         "susy: coefficients a, b, c are all zero", std::invalid_argument);
}

TEST_CASE("parity degeneracy structure") {
    const auto m = majorana_model(sc(1), Scalar(), Scalar());
    const auto deg = degeneracy_check(m);
    CHECK(deg.plus_multiplicity == 2);
    CHECK(deg.minus_multiplicity == 2);
    REQUIRE(deg.plus_basis.size() == 2);
    REQUIRE(deg.q_image_norms.size() == 2);
    REQUIRE(deg.overlap_residuals.size() == 2);
    REQUIRE(deg.parity_flip_residuals.size() == 2);

    const DMatrix pm(rep_even(m.parity));
    const auto vdot = [](const std::vector<std::complex<double>>& a,
                         const std::vector<std::complex<double>>& b) {
        std::complex<double> s(0);
        for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
        return s;
    };
    for (std::size_t i = 0; i < deg.plus_basis.size(); ++i) {
        const auto& psi = deg.plus_basis[i];
        REQUIRE(psi.size() == 4);
        CHECK(std::abs(vdot(psi, psi) - std::complex<double>(1.0)) < 1e-12);
        // Lives in the +1 parity eigenspace.
        const auto flipped = pm.apply(psi);
        double dev = 0;
        for (std::size_t k = 0; k < 4; ++k) dev = std::max(dev, std::abs(flipped[k] - psi[k]));
        CHECK(dev < 1e-9);
    }
    CHECK(std::abs(vdot(deg.plus_basis[0], deg.plus_basis[1])) < 1e-12);

    // Recompute the reported diagnostics from the published charge.
    const auto report = susy_charge(m);
    for (std::size_t i = 0; i < deg.plus_basis.size(); ++i) {
        const auto qpsi = report.q.apply(deg.plus_basis[i]);
        double norm2 = 0;
        for (const auto& x : qpsi) norm2 += std::norm(x);
        CHECK(deg.q_image_norms[i] == doctest::Approx(std::sqrt(norm2)).epsilon(1e-12));
        CHECK(deg.overlap_residuals[i] ==
              doctest::Approx(std::abs(vdot(deg.plus_basis[i], qpsi))).epsilon(1e-12));
    }
}
