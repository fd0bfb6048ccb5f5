#include "spinorqc/majorana.hpp"

#include "spinorqc/format.hpp"

#include <cmath>

namespace spinorqc {

namespace {

const Signature& sig13() { return Signature::cl13(); }

TensorMultivector<Scalar> two_slot(const Multivector<Scalar>& x, const Multivector<Scalar>& y) {
    return tensor_of<Scalar>({x, y});
}

TensorMultivector<Scalar> iota_slot1() {
    return two_slot(pseudoscalar(), Multivector<Scalar>::one(sig13()));
}

}  // namespace

MajoranaSet majorana_set() {
    const auto one = Multivector<Scalar>::one(sig13());
    return {two_slot(bivector_g0(1), one), two_slot(bivector_g0(3), one),
            two_slot(bivector_g0(2), bivector_g0(1))};
}

TensorMultivector<Scalar> parity_op() { return two_slot(bivector_g0(2), bivector_g0(3)); }

TensorMultivector<Scalar> emergent_majorana() {
    const auto g = majorana_set();
    return -tmul(iota_slot1(), tmul(g.g1, tmul(g.g2, g.g3)));
}

MajoranaModel majorana_model(const Scalar& a, const Scalar& b, const Scalar& c) {
    const auto g = majorana_set();
    const auto h = -tmul(iota_slot1(), a * g.g1 + b * g.g2 + c * g.g3);
    return {a, b, c, g, h, parity_op(), emergent_majorana()};
}

TensorMultivector<Scalar> hamiltonian_square(const MajoranaModel& m) { return tmul(m.h, m.h); }

MajoranaBraids majorana_braids(int theta_quarter_pi) {
    const auto one = Multivector<Scalar>::one(sig13());
    const auto u = two_slot(gp(bivector_g0(1), bivector_g0(3)), one);
    const auto v = two_slot(gp(bivector_g0(3), bivector_g0(2)), bivector_g0(1));
    return {exp_tensor(theta_quarter_pi, u), exp_tensor(theta_quarter_pi, v)};
}

TensorExp exp_tensor_with_fallback(int theta_quarter_pi, const TensorMultivector<Scalar>& e) {
    if (tmul(e, e) == -TensorMultivector<Scalar>::identity(e.slots, e.sig))
        return {true, exp_tensor(theta_quarter_pi, e), std::nullopt, ""};
    TensorMultivector<double> ed(e.sig, e.slots);
    for (const auto& [k, c] : e.terms) ed.add_term(k, c.to_double());
    const double theta = theta_quarter_pi * std::acos(-1.0) / 4.0;
    return {false, std::nullopt, exp_tensor_series(theta, ed),
            "exponent square is not -identity; float series used"};
}

namespace {

// One relation, evaluated twice: exact tensor expansion, and numeric matrix
// arithmetic on the representations of its operands.
RelationRow make_row(std::string label, const TensorMultivector<Scalar>& lhs,
                     const TensorMultivector<Scalar>& rhs, const DMatrix& mat_lhs,
                     const DMatrix& mat_rhs) {
    const auto residual = lhs - rhs;
    const bool holds = residual.is_zero();
    const double exact_res = DMatrix(rep_even(residual)).max_entry_abs();
    const double spec_res = (mat_lhs - mat_rhs).max_entry_abs();
    const bool spec_holds = spec_res < 1e-10;
    return {std::move(label), holds,     holds ? "" : to_string(residual),
            exact_res,        spec_res,  holds == spec_holds};
}

}  // namespace

std::vector<RelationRow> relation_suite(const MajoranaModel& m, int theta_quarter_pi) {
    std::vector<RelationRow> rows;
    const auto id = TensorMultivector<Scalar>::identity(2, sig13());
    const auto zero = TensorMultivector<Scalar>::zero(2, sig13());

    const DMatrix g_mat[3] = {DMatrix(rep_even(m.gammas.g1)), DMatrix(rep_even(m.gammas.g2)),
                              DMatrix(rep_even(m.gammas.g3))};
    const DMatrix ge_mat(rep_even(m.emergent));
    const DMatrix pm_mat(rep_even(m.parity));
    const DMatrix h_mat(rep_even(m.h));
    const DMatrix id_mat = DMatrix::identity(4);
    const DMatrix zero_mat(4);

    const TensorMultivector<Scalar>* gs[3] = {&m.gammas.g1, &m.gammas.g2, &m.gammas.g3};
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const auto lhs = tmul(*gs[i], *gs[j]) + tmul(*gs[j], *gs[i]);
            const auto rhs = i == j ? Scalar::of_int(2) * id : zero;
            const DMatrix ml = g_mat[i] * g_mat[j] + g_mat[j] * g_mat[i];
            const DMatrix mr = i == j ? std::complex<double>(2.0) * id_mat : zero_mat;
            rows.push_back(make_row("{G" + std::to_string(i + 1) + ",G" + std::to_string(j + 1) +
                                        "} = " + (i == j ? "2" : "0"),
                                    lhs, rhs, ml, mr));
        }

    rows.push_back(make_row("(Ge)^2 = 1", tmul(m.emergent, m.emergent), id, ge_mat * ge_mat,
                            id_mat));
    for (int j = 0; j < 3; ++j)
        rows.push_back(make_row("[Ge,G" + std::to_string(j + 1) + "] = 0",
                                tmul(m.emergent, *gs[j]) - tmul(*gs[j], m.emergent), zero,
                                ge_mat * g_mat[j] - g_mat[j] * ge_mat, zero_mat));
    rows.push_back(make_row("{Ge,PM} = 0", tmul(m.emergent, m.parity) + tmul(m.parity, m.emergent),
                            zero, ge_mat * pm_mat + pm_mat * ge_mat, zero_mat));
    rows.push_back(make_row("(PM)^2 = 1", tmul(m.parity, m.parity), id, pm_mat * pm_mat, id_mat));
    rows.push_back(make_row("[Ge,H] = 0", tmul(m.emergent, m.h) - tmul(m.h, m.emergent), zero,
                            ge_mat * h_mat - h_mat * ge_mat, zero_mat));

    const Scalar r2 = m.a * m.a + m.b * m.b + m.c * m.c;
    rows.push_back(make_row("H^2 = -(a^2+b^2+c^2)", hamiltonian_square(m), -r2 * id,
                            h_mat * h_mat,
                            std::complex<double>(-r2.to_double()) * id_mat));

    const auto braids = majorana_braids(theta_quarter_pi);
    const DMatrix b1_mat(rep_even(braids.b1)), b2_mat(rep_even(braids.b2));
    const std::string angle =
        theta_quarter_pi == 1 ? "pi/4" : std::to_string(theta_quarter_pi) + "*pi/4";
    rows.push_back(make_row("B1M B2M B1M = B2M B1M B2M (theta=" + angle + ")",
                            tmul(braids.b1, tmul(braids.b2, braids.b1)),
                            tmul(braids.b2, tmul(braids.b1, braids.b2)),
                            b1_mat * b2_mat * b1_mat, b2_mat * b1_mat * b2_mat));
    rows.push_back(make_row("[B1M,Ge] = 0", tmul(braids.b1, m.emergent) - tmul(m.emergent, braids.b1),
                            zero, b1_mat * ge_mat - ge_mat * b1_mat, zero_mat));
    rows.push_back(make_row("[B2M,Ge] = 0", tmul(braids.b2, m.emergent) - tmul(m.emergent, braids.b2),
                            zero, b2_mat * ge_mat - ge_mat * b2_mat, zero_mat));
    return rows;
}

}  // namespace spinorqc
