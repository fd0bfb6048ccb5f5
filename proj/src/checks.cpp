#include "spinorqc/checks.hpp"

#include "spinorqc/braid.hpp"
#include "spinorqc/format.hpp"
#include "spinorqc/majorana.hpp"
#include "spinorqc/rep.hpp"
#include "spinorqc/spinor.hpp"
#include "spinorqc/susy.hpp"
#include "spinorqc/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace spinorqc {

namespace {

using nlohmann::ordered_json;

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    const int p = num(rng);
    const int q = den(rng);
    return Rational(p, q);
}

// Coefficients drawn from the full scalar ring.
Scalar small_scalar(std::mt19937_64& rng) {
    const Rational rat = small_rational(rng);
    const Rational irr = small_rational(rng);
    return Scalar(rat, irr);
}

constexpr Mask kEvenMasks[8] = {0, 3, 5, 6, 9, 10, 12, 15};

Multivector<Scalar> random_even(std::mt19937_64& rng) {
    Multivector<Scalar> m(Signature::cl13());
    for (Mask mask : kEvenMasks) {
        const Scalar c = small_scalar(rng);
        m.add_term(mask, c);
    }
    return m;
}

ordered_json row_json(const RelationRow& r) {
    ordered_json j;
    j["relation"] = r.label;
    j["holds"] = r.holds;
    if (r.holds) {
        j["residual_norm"] = nullptr;
    } else {
        double v = r.spectral_residual;
        if (r.exact_residual) v = std::max(v, *r.exact_residual);
        j["residual_norm"] = v;
    }
    j["oracle_agreement"] = r.agreement;
    return j;
}

std::vector<std::vector<int>> generator_tuples(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(t);
        int i = n - 1;
        while (i >= 0 && t[static_cast<std::size_t>(i)] == 3) {
            t[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++t[static_cast<std::size_t>(i)];
    }
    return out;
}

std::string tuple_text(const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

}  // namespace

SuiteResult run_braid_suite() {
    std::vector<std::string> failures;
    const BraidGenerator b1 = braid_b(Which::B1);
    const BraidGenerator b2 = braid_b(Which::B2);
    const Scalar h = Scalar::inv_sqrt2();
    const Multivector<Scalar> e1 = gp(bivector_g0(1), bivector_g0(2));
    const Multivector<Scalar> e2 = gp(bivector_g0(2), bivector_g0(3));
    const Multivector<Scalar> p = idempotent_p();

    const BraidRelation rel = braid_relation_check(b1.value, b2.value);
    if (!rel.holds) failures.push_back("artin relation b1 b2 b1 = b2 b1 b2");
    if (!rel.common || *rel.common != h * (e1 + e2))
        failures.push_back("artin common value differs from (1/rt2)(g1g0 g2g0 + g2g0 g3g0)");
    if (braid_relation_check(gamma(0), gamma(1)).holds)
        failures.push_back("artin relation unexpectedly holds for (g0, g1)");

    if (b1.value != exp_bivector(1, e1)) failures.push_back("B1 closed form vs exponential");
    if (b2.value != exp_bivector(1, e2)) failures.push_back("B2 closed form vs exponential");
    if (norm_squared(b1.value) != Scalar::of_int(1)) failures.push_back("N(B1) != 1");
    if (norm_squared(b2.value) != Scalar::of_int(1)) failures.push_back("N(B2) != 1");

    const auto closure = braid_group_closure();
    const int order = static_cast<int>(closure.size());
    if (order != 48) failures.push_back("group closure order " + std::to_string(order) + " != 48");

    for (int n = 2; n <= 3; ++n) {
        const auto u = braid_tensor_power(b1, n);
        const auto v = braid_tensor_power(b2, n);
        if (tmul(tmul(u, v), u) != tmul(tmul(v, u), v))
            failures.push_back("tensor-power artin relation fails at n = " + std::to_string(n));
    }

    const Multivector<Scalar> s0 = gp(bivector_g0(3), p);
    const Multivector<Scalar> s1 = gp(bivector_g0(1), p);
    if (braid_action(b2, s0) != h * (s0 + gp(e2, p)))
        failures.push_back("B2 action on g3g0 P");
    if (braid_action(b2, s1) != h * (gp(e1, p) + s1))
        failures.push_back("B2 action on g1g0 P");
    if (braid_action(b1, s0) != h * (s0 + gp(gp(e1, bivector_g0(3)), p)))
        failures.push_back("B1 action on g3g0 P");
    if (braid_action(b1, s1) != h * (s1 + gp(gp(e1, bivector_g0(1)), p)))
        failures.push_back("B1 action on g1g0 P");

    const BellInvariance inv = bell_invariance_check();
    if (!inv.psi_plus_invariant_decoded) failures.push_back("B1^(x)2 Psi+ decoded invariance");
    if (!inv.psi_minus_invariant_decoded) failures.push_back("B1^(x)2 Psi- decoded invariance");
    if (inv.psi_plus_invariant_raw || inv.psi_minus_invariant_raw)
        failures.push_back("B1^(x)2 Psi+- raw equality unexpectedly exact");
    if (inv.b2_psi_plus_difference.is_zero())
        failures.push_back("B2^(x)2 Psi+ unexpectedly invariant");

    const IStateEquivalence eq = i_state_equivalence_check();
    if (!eq.i01_decode_equal || !eq.i10_decode_equal)
        failures.push_back("pseudoscalar placement decode equivalence");
    if (eq.i01_raw_equal || eq.i10_raw_equal)
        failures.push_back("pseudoscalar placement raw forms unexpectedly equal");

    ordered_json j;
    j["relation"] = rel.holds;
    j["group_order"] = order;
    j["teleport_samples"] = 0;
    j["failures"] = failures;
    return {"braid", failures.empty(), j};
}

SuiteResult run_teleport_suite(int samples, std::uint64_t seed) {
    std::vector<std::string> failures;
    std::mt19937_64 rng(seed);

    const Multivector<Scalar> wanted[4] = {
        Multivector<Scalar>::one(Signature::cl13()),
        bivector_g0(3),
        bivector_g0(1),
        gp(bivector_g0(1), bivector_g0(3)),
    };
    const Bell order[4] = {Bell::psi_plus, Bell::psi_minus, Bell::phi_plus, Bell::phi_minus};
    const TeleportDecomposition table = teleport_decompose(Scalar::of_int(2), Scalar::of_ratio(-3, 5));
    for (const TeleportBranch& br : table.branches) {
        const Multivector<Scalar>* want = nullptr;
        for (int i = 0; i < 4; ++i)
            if (order[i] == br.label) want = &wanted[i];
        if (!want || br.correction != *want)
            failures.push_back(std::string("correction table entry for ") + bell_name(br.label));
    }

    int ran = 0;
    for (int i = 0; i < samples; ++i) {
        const Rational ra = small_rational(rng);
        const Rational rb = small_rational(rng);
        Scalar a(ra), b(rb);
        if (a.is_zero() && b.is_zero()) a = Scalar::of_int(1);
        const TeleportDecomposition d = teleport_decompose(a, b);
        ++ran;
        if (!d.exact)
            failures.push_back("sample " + std::to_string(i) + " (a=" + to_string(a) +
                               ", b=" + to_string(b) + "): decomposition not exact");
    }

    ordered_json j;
    j["relation"] = failures.empty();
    j["group_order"] = 0;
    j["teleport_samples"] = ran;
    j["failures"] = failures;
    return {"teleport", failures.empty(), j};
}

SuiteResult run_majorana_suite(const Scalar& a, const Scalar& b, const Scalar& c,
                               int theta_quarter_pi) {
    const MajoranaModel m = majorana_model(a, b, c);
    const auto rows = relation_suite(m, theta_quarter_pi);
    bool ok = true;
    ordered_json jrows = ordered_json::array();
    for (const RelationRow& r : rows) {
        jrows.push_back(row_json(r));
        ok = ok && r.holds && r.agreement;
    }
    ordered_json j;
    j["a"] = to_string(a);
    j["b"] = to_string(b);
    j["c"] = to_string(c);
    j["theta"] = theta_quarter_pi;
    j["rows"] = jrows;
    return {"majorana", ok, j};
}

SuiteResult run_susy_suite(const Scalar& a, const Scalar& b, const Scalar& c) {
    const MajoranaModel m = majorana_model(a, b, c);
    const SusyReport s = susy_charge(m);
    const DegeneracyReport deg = degeneracy_check(m);

    bool ok = s.sqrt_defect < 1e-10 && s.projector_defect < 1e-10;
    ordered_json jrows = ordered_json::array();
    for (const RelationRow& r : s.rows) {
        jrows.push_back(row_json(r));
        ok = ok && r.agreement;
    }

    ordered_json j;
    j["a"] = to_string(a);
    j["b"] = to_string(b);
    j["c"] = to_string(c);
    j["rho"] = to_string(s.rho);
    j["r"] = s.r;
    j["sqrt_defect"] = s.sqrt_defect;
    j["projector_defect"] = s.projector_defect;
    j["q_scaled"] = pair_text(s.q_scaled);
    j["rows"] = jrows;
    j["parity_multiplicities"] = {deg.plus_multiplicity, deg.minus_multiplicity};
    j["q_image_norms"] = deg.q_image_norms;
    j["overlap_residuals"] = deg.overlap_residuals;
    j["parity_flip_residuals"] = deg.parity_flip_residuals;
    return {"susy", ok, j};
}

SuiteResult run_cstar_suite(int samples, std::uint64_t seed) {
    std::vector<std::string> failures;
    std::mt19937_64 rng(seed);
    double max_cstar_defect = 0;
    double max_triangle_excess = 0;

    for (int i = 0; i < samples; ++i) {
        const Multivector<Scalar> o = random_even(rng);
        const Multivector<Scalar> q = random_even(rng);
        const std::string tag = "sample " + std::to_string(i) + ": ";

        if (star(star(o)) != o) failures.push_back(tag + "(O*)* != O");
        if (star(gp(o, q)) != gp(star(q), star(o)))
            failures.push_back(tag + "(O1 O2)* != O2* O1*");
        if (star(o + q) != star(o) + star(q)) failures.push_back(tag + "star not additive");
        if (rep_even(star(o)) != rep_even(o).adjoint())
            failures.push_back(tag + "star does not match the matrix adjoint");

        const double no = operator_norm(rep_even(o));
        const double nq = operator_norm(rep_even(q));
        const double nprod = operator_norm(rep_even(gp(o, star(o))));
        const double cstar_defect = std::abs(nprod - no * no) / std::max(1.0, no * no);
        max_cstar_defect = std::max(max_cstar_defect, cstar_defect);
        if (cstar_defect > 1e-9) failures.push_back(tag + "||O O*|| != ||O||^2");

        const double nsum = operator_norm(rep_even(o + q));
        const double excess = nsum - (no + nq);
        max_triangle_excess = std::max(max_triangle_excess, excess);
        if (excess > 1e-9) failures.push_back(tag + "triangle inequality violated");
    }

    const double b1_norm = operator_norm(rep_even(braid_b(Which::B1).value));
    if (std::abs(b1_norm - 1.0) > 1e-12) failures.push_back("||B1|| != 1");

    ordered_json j;
    j["samples"] = samples;
    j["seed"] = seed;
    j["max_cstar_defect"] = max_cstar_defect;
    j["max_triangle_excess"] = max_triangle_excess;
    j["b1_norm"] = b1_norm;
    j["failures"] = failures;
    return {"cstar", failures.empty(), j};
}

SuiteResult run_delta_suite() {
    std::vector<std::string> failures;
    int pairs = 0;
    for (int n = 1; n <= 3; ++n) {
        const auto tuples = generator_tuples(n);
        std::vector<TensorMultivector<Scalar>> rho;
        rho.reserve(tuples.size());
        for (const auto& t : tuples) {
            std::vector<Multivector<Scalar>> parts;
            parts.reserve(t.size());
            for (int g : t) parts.push_back(gamma(g));
            rho.push_back(tensor_of(parts));
        }
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            for (std::size_t k = 0; k < tuples.size(); ++k) {
                ++pairs;
                const std::string tag =
                    "n=" + std::to_string(n) + " " + tuple_text(tuples[i]) + tuple_text(tuples[k]);
                try {
                    std::size_t d = 0;
                    for (std::size_t s = 0; s < tuples[i].size(); ++s)
                        if (tuples[i][s] != tuples[k][s]) ++d;
                    const int want_delta = (d > 0 && d % 2 == 0) ? 1 : 0;
                    if (delta_sign(tuples[i], tuples[k]) != want_delta) {
                        failures.push_back(tag + ": clause value mismatch");
                        continue;
                    }
                    const auto x = tmul(rho[i], rho[k]);
                    const auto y = tmul(rho[k], rho[i]);
                    const auto combo = (d % 2 == 0) ? x - y : x + y;
                    const auto scalar_only =
                        combo.scalar_part() * TensorMultivector<Scalar>::identity(n);
                    if (combo != scalar_only)
                        failures.push_back(tag + ": combination is not scalar");
                } catch (const std::exception& ex) {
                    failures.push_back(tag + ": " + ex.what());
                }
            }
        }
    }

    ordered_json j;
    j["pairs_checked"] = pairs;
    j["failures"] = failures;
    return {"delta", failures.empty(), j};
}

nlohmann::ordered_json run_all_suites(const SuiteOptions& opt) {
    std::vector<SuiteResult> suites;
    suites.push_back(run_braid_suite());
    suites.push_back(run_cstar_suite(opt.samples, opt.seed));
    suites.push_back(run_delta_suite());
    suites.push_back(run_majorana_suite(opt.a, opt.b, opt.c, opt.theta_quarter_pi));
    suites.push_back(run_susy_suite(opt.a, opt.b, opt.c));
    suites.push_back(run_teleport_suite(opt.samples, opt.seed));
    std::sort(suites.begin(), suites.end(),
              [](const SuiteResult& x, const SuiteResult& y) { return x.name < y.name; });

    bool all = true;
    ordered_json list = ordered_json::array();
    for (const SuiteResult& s : suites) {
        all = all && s.passed;
        ordered_json row;
        row["name"] = s.name;
        row["passed"] = s.passed;
        row["report"] = s.report;
        list.push_back(row);
    }
    ordered_json j;
    j["seed"] = opt.seed;
    j["passed"] = all;
    j["suites"] = list;
    return j;
}

}  // namespace spinorqc
