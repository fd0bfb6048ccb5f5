#include "spinorqc/spinor.hpp"

#include <stdexcept>

namespace spinorqc {

namespace {

// Function, not a namespace-scope reference: clients may call into this
// module during their own static initialization.
const Signature& sig13() { return Signature::cl13(); }

// Basis slot elements for bits 0 and 1: g3 g0 and g1 g0.
Multivector<Scalar> slot_element(int bit) { return bivector_g0(bit == 0 ? 3 : 1); }

void require_state_dims(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("state slot count must be in 1..10");
}

}  // namespace

Multivector<Scalar> gamma(int i) { return Multivector<Scalar>::generator(i, sig13()); }

Multivector<Scalar> bivector_g0(int i) { return gp(gamma(i), gamma(0)); }

Multivector<Scalar> pseudoscalar() {
    return gp(gp(gamma(0), gamma(1)), gp(gamma(2), gamma(3)));
}

Multivector<Scalar> idempotent_p() {
    const Scalar half = Scalar::of_ratio(1, 2);
    return half * (Multivector<Scalar>::one(sig13()) + bivector_g0(3));
}

TensorMultivector<Scalar> idempotent_p_power(int n) {
    require_state_dims(n);
    std::vector<Multivector<Scalar>> parts(static_cast<std::size_t>(n), idempotent_p());
    return tensor_of(parts);
}

Multivector<Scalar> encode_qubit(const QubitAmplitudes& q) {
    const Multivector<Scalar> iota = pseudoscalar();
    Multivector<Scalar> pre = q.a1 * slot_element(0) + q.a2 * gp(iota, slot_element(0)) +
                              q.a3 * slot_element(1) + q.a4 * gp(iota, slot_element(1));
    return gp(pre, idempotent_p());
}

bool in_ideal(const Multivector<Scalar>& s) {
    if (s.sig != sig13()) return false;
    if (!s.is_even()) return false;
    return gp(s, idempotent_p()) == s;
}

bool in_ideal(const TensorMultivector<Scalar>& s) {
    if (s.sig != sig13()) return false;
    if (!s.is_even_per_slot()) return false;
    return tmul(s, idempotent_p_power(s.slots)) == s;
}

std::vector<CScalar> rep_spinor(const Multivector<Scalar>& s) {
    if (!in_ideal(s)) throw std::domain_error("not in ideal");
    return rep_even(s).first_column();
}

std::vector<CScalar> rep_spinor(const TensorMultivector<Scalar>& s) {
    if (!in_ideal(s)) throw std::domain_error("not in ideal");
    return rep_even(s).first_column();
}

QubitAmplitudes decode_qubit(const Multivector<Scalar>& s) {
    const auto col = rep_spinor(s);
    return {col[0].re, col[0].im, col[1].re, col[1].im};
}

TensorMultivector<Scalar> encode_state(const MultiQubitAmplitudes& amps) {
    require_state_dims(amps.n);
    if (amps.amps.size() != (1u << amps.n))
        throw std::invalid_argument("amplitude count must be 2^n");
    const Multivector<Scalar> iota = pseudoscalar();
    TensorMultivector<Scalar> acc = TensorMultivector<Scalar>::zero(amps.n, sig13());
    for (std::size_t b = 0; b < amps.amps.size(); ++b) {
        const CScalar& c = amps.amps[b];
        if (c.is_zero()) continue;
        std::vector<Multivector<Scalar>> parts;
        parts.reserve(static_cast<std::size_t>(amps.n));
        for (int s = 0; s < amps.n; ++s)
            parts.push_back(slot_element((b >> (amps.n - 1 - s)) & 1));
        if (!c.re.is_zero()) acc = acc + c.re * tensor_of(parts);
        if (!c.im.is_zero()) {
            auto parts_i = parts;
            parts_i.back() = gp(iota, parts_i.back());
            acc = acc + c.im * tensor_of(parts_i);
        }
    }
    return tmul(acc, idempotent_p_power(amps.n));
}

MultiQubitAmplitudes decode_state(const TensorMultivector<Scalar>& s) {
    return {s.slots, rep_spinor(s)};
}

Multivector<Scalar> dual(const Multivector<Scalar>& s) {
    const QubitAmplitudes q = decode_qubit(s);
    const Multivector<Scalar> iota = pseudoscalar();
    Multivector<Scalar> post = q.a1 * slot_element(0) - q.a2 * gp(iota, slot_element(0)) +
                               q.a3 * slot_element(1) - q.a4 * gp(iota, slot_element(1));
    return gp(idempotent_p(), post);
}

TensorMultivector<Scalar> dual_state(const TensorMultivector<Scalar>& s) {
    const MultiQubitAmplitudes amps = decode_state(s);
    const Multivector<Scalar> iota = pseudoscalar();
    TensorMultivector<Scalar> acc = TensorMultivector<Scalar>::zero(amps.n, sig13());
    for (std::size_t b = 0; b < amps.amps.size(); ++b) {
        const CScalar& c = amps.amps[b];
        if (c.is_zero()) continue;
        std::vector<Multivector<Scalar>> parts;
        parts.reserve(static_cast<std::size_t>(amps.n));
        for (int s2 = 0; s2 < amps.n; ++s2)
            parts.push_back(slot_element((b >> (amps.n - 1 - s2)) & 1));
        if (!c.re.is_zero()) acc = acc + c.re * tensor_of(parts);
        if (!c.im.is_zero()) {
            auto parts_i = parts;
            parts_i.back() = gp(iota, parts_i.back());
            acc = acc - c.im * tensor_of(parts_i);
        }
    }
    return tmul(idempotent_p_power(amps.n), acc);
}

InnerProduct inner_product(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
    if (!in_ideal(b)) throw std::domain_error("not in ideal");
    const Scalar raw = gp(dual(a), b).scalar_part();
    return {raw, Scalar::of_int(2) * raw};
}

InnerProduct inner_product_state(const TensorMultivector<Scalar>& a,
                                 const TensorMultivector<Scalar>& b) {
    if (!in_ideal(b)) throw std::domain_error("not in ideal");
    const Scalar raw = tmul(dual_state(a), b).scalar_part();
    Scalar factor = Scalar::of_int(1);
    for (int i = 0; i < a.slots; ++i) factor = factor * Scalar::of_int(2);
    return {raw, factor * raw};
}

int ideal_dimension() {
    // Even basis blades of Cl(1,3), each multiplied by P, as rows of a
    // 16-column coefficient matrix; rank by Gaussian elimination over Q[sqrt2].
    static const Mask even_masks[8] = {0b0000, 0b0011, 0b0101, 0b1001,
                                       0b0110, 0b1010, 0b1100, 0b1111};
    std::vector<std::array<Scalar, 16>> rows;
    for (Mask m : even_masks) {
        const auto prod = gp(Multivector<Scalar>::blade(m, Scalar::of_int(1), sig13()), idempotent_p());
        std::array<Scalar, 16> row{};
        for (const auto& [mask, c] : prod.terms) row[mask] = c;
        rows.push_back(row);
    }
    int rank = 0;
    for (int col = 0; col < 16 && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        const Scalar inv = rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)].inverse();
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            const Scalar f = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * inv;
            if (f.is_zero()) continue;
            for (int c2 = col; c2 < 16; ++c2)
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] =
                    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -
                    f * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c2)];
        }
        ++rank;
    }
    return rank;
}

const char* bell_name(Bell b) {
    switch (b) {
        case Bell::phi_plus: return "Phi+";
        case Bell::phi_minus: return "Phi-";
        case Bell::psi_plus: return "Psi+";
        default: return "Psi-";
    }
}

TensorMultivector<Scalar> bell_state(Bell b) {
    const Scalar h = Scalar::inv_sqrt2();
    const auto t = [](int b1, int b2) {
        return tensor_of<Scalar>({slot_element(b1), slot_element(b2)});
    };
    TensorMultivector<Scalar> pre(sig13(), 2);
    switch (b) {
        case Bell::phi_plus: pre = t(0, 0) + t(1, 1); break;
        case Bell::phi_minus: pre = t(0, 0) - t(1, 1); break;
        case Bell::psi_plus: pre = t(0, 1) + t(1, 0); break;
        case Bell::psi_minus: pre = t(0, 1) - t(1, 0); break;
    }
    return tmul(h * pre, idempotent_p_power(2));
}

std::array<TensorMultivector<Scalar>, 4> bell_states() {
    return {bell_state(Bell::phi_plus), bell_state(Bell::phi_minus), bell_state(Bell::psi_plus),
            bell_state(Bell::psi_minus)};
}

bool is_factorable(const TensorMultivector<Scalar>& state) {
    if (state.slots != 2) throw std::invalid_argument("factorability test is bipartite only");
    const auto amps = decode_state(state).amps;
    return (amps[0] * amps[3] - amps[1] * amps[2]).is_zero();
}

}  // namespace spinorqc
