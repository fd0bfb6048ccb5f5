#include "spinorqc/braid.hpp"

#include "spinorqc/format.hpp"

#include <stdexcept>

namespace spinorqc {

namespace {

Multivector<Scalar> braid_exponent(Which which) {
    return which == Which::B1 ? gp(bivector_g0(1), bivector_g0(2))
                              : gp(bivector_g0(2), bivector_g0(3));
}

}  // namespace

BraidGenerator braid_b(Which which) { return {which, exp_bivector(1, braid_exponent(which))}; }

BraidRelation braid_relation_check(const Multivector<Scalar>& x, const Multivector<Scalar>& y) {
    const auto xyx = gp(gp(x, y), x);
    const auto yxy = gp(gp(y, x), y);
    if (xyx == yxy) return {true, xyx};
    return {false, std::nullopt};
}

Multivector<Scalar> braid_action(const BraidGenerator& g, const Multivector<Scalar>& s) {
    return gp(g.value, s);
}

TensorMultivector<Scalar> braid_tensor_power(const BraidGenerator& g, int n) {
    if (n < 1) throw std::invalid_argument("tensor power needs n >= 1");
    std::vector<Multivector<Scalar>> parts(static_cast<std::size_t>(n), g.value);
    return tensor_of(parts);
}

std::set<std::string> braid_group_closure() {
    std::vector<Multivector<Scalar>> elems{braid_b(Which::B1).value, braid_b(Which::B2).value};
    std::set<std::string> seen;
    for (const auto& e : elems) seen.insert(to_string(e));
    bool grew = true;
    while (grew) {
        grew = false;
        const auto snapshot = elems;
        for (const auto& a : snapshot)
            for (const auto& b : snapshot) {
                const auto p = gp(a, b);
                if (seen.insert(to_string(p)).second) {
                    elems.push_back(p);
                    grew = true;
                    if (elems.size() > 10000)
                        throw std::runtime_error("braid closure did not terminate");
                }
            }
    }
    return seen;
}

BellInvariance bell_invariance_check() {
    const auto b1_2 = braid_tensor_power(braid_b(Which::B1), 2);
    const auto b2_2 = braid_tensor_power(braid_b(Which::B2), 2);
    const auto psi_p = bell_state(Bell::psi_plus);
    const auto psi_m = bell_state(Bell::psi_minus);
    const auto acted_p = tmul(b1_2, psi_p);
    const auto acted_m = tmul(b1_2, psi_m);
    BellInvariance r{
        decode_state(acted_p) == decode_state(psi_p),
        decode_state(acted_m) == decode_state(psi_m),
        acted_p == psi_p,
        acted_m == psi_m,
        tmul(b2_2, psi_p) - psi_p,
    };
    return r;
}

TeleportDecomposition teleport_decompose(const Scalar& a, const Scalar& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("zero state");
    const auto s0 = bivector_g0(3), s1 = bivector_g0(1);
    const Multivector<Scalar> psi_pre = a * s0 + b * s1;
    const Scalar h = Scalar::inv_sqrt2();

    // Bell prefixes (no trailing idempotents; those are applied once, at the end).
    const auto bell_pre = [&](Bell which) {
        const auto t = [&](const Multivector<Scalar>& x, const Multivector<Scalar>& y) {
            return tensor_of<Scalar>({x, y});
        };
        switch (which) {
            case Bell::phi_plus: return h * (t(s0, s0) + t(s1, s1));
            case Bell::phi_minus: return h * (t(s0, s0) - t(s1, s1));
            case Bell::psi_plus: return h * (t(s0, s1) + t(s1, s0));
            default: return h * (t(s0, s1) - t(s1, s0));
        }
    };

    const auto p3 = idempotent_p_power(3);
    const auto lhs =
        tmul(outer(TensorMultivector<Scalar>::from_single(psi_pre), bell_pre(Bell::psi_plus)), p3);

    const Multivector<Scalar> one = Multivector<Scalar>::one(Signature::cl13());
    const std::array<std::pair<Bell, Multivector<Scalar>>, 4> table{{
        {Bell::psi_plus, one},
        {Bell::psi_minus, bivector_g0(3)},
        {Bell::phi_plus, bivector_g0(1)},
        {Bell::phi_minus, gp(bivector_g0(1), bivector_g0(3))},
    }};

    TeleportDecomposition out{{a, Scalar(), b, Scalar()}, {}, lhs, false};
    TensorMultivector<Scalar> sum = TensorMultivector<Scalar>::zero(3, Signature::cl13());
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& [label, corr] = table[i];
        const auto payload_pre = gp(corr, psi_pre);
        sum = sum + outer(bell_pre(label), TensorMultivector<Scalar>::from_single(payload_pre));
        out.branches[i] = {label, corr, gp(payload_pre, idempotent_p())};
    }
    const auto rhs = tmul(Scalar::of_ratio(1, 2) * sum, p3);
    out.exact = lhs == rhs;
    return out;
}

IStateEquivalence i_state_equivalence_check() {
    const auto iota = pseudoscalar();
    const auto s0 = bivector_g0(3), s1 = bivector_g0(1);
    const auto p2 = idempotent_p_power(2);
    const auto mk = [&](const Multivector<Scalar>& x, const Multivector<Scalar>& y) {
        return tmul(tensor_of<Scalar>({x, y}), p2);
    };
    const auto i01_a = mk(gp(iota, s0), s1), i01_b = mk(s0, gp(iota, s1));
    const auto i10_a = mk(gp(iota, s1), s0), i10_b = mk(s1, gp(iota, s0));
    return {
        decode_state(i01_a) == decode_state(i01_b),
        decode_state(i10_a) == decode_state(i10_b),
        i01_a == i01_b,
        i10_a == i10_b,
    };
}

}  // namespace spinorqc
