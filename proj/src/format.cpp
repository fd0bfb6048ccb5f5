#include "spinorqc/format.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace spinorqc {

namespace {

// Standalone scalar text: "0", "p/q", "p/q*rt2", "a + b*rt2", "a - b*rt2".
std::string scalar_text(const Scalar& s) {
    if (s.is_zero()) return "0";
    if (s.irr == 0) return rational_to_string(s.rat);
    std::string irr_part;
    const Rational ia = s.irr < 0 ? Rational(-s.irr) : s.irr;
    irr_part = (ia == 1) ? "rt2" : rational_to_string(ia) + "*rt2";
    if (s.rat == 0) return (s.irr < 0 ? "-" : "") + irr_part;
    return rational_to_string(s.rat) + (s.irr < 0 ? " - " : " + ") + irr_part;
}

std::string double_text(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

// Blade text with g0 rotated to the end; returns the rotation sign
// (-1)^(grade-1) when g0 is present, to be folded into the coefficient.
std::pair<std::string, int> blade_text(Mask m) {
    if (m == 0) return {"1", 1};
    std::string out;
    for (int i = 1; i < 8; ++i)
        if (m & (1u << i)) {
            if (!out.empty()) out += "*";
            out += "g" + std::to_string(i);
        }
    int sign = 1;
    if (m & 1) {
        if (!out.empty()) out += "*";
        out += "g0";
        sign = involution_sign(blade_grade(m) - 1);
    }
    return {out, sign};
}

// One canonical term from (blade text, display coefficient); the caller joins
// terms with " + " / " - " using the returned sign.
struct TermText {
    std::string body;
    int sign;
};

TermText exact_term(const std::string& blade, const Scalar& display) {
    if (blade == "1") {
        // Mixed-sign a + b*rt2 has |x| text with a leading minus; lead with
        // the first printed component's sign, never the overall sign, so
        // joining cannot produce "--" or "+ -".
        const std::string body = scalar_text(display);
        if (body.front() == '-') return {body.substr(1), -1};
        return {body, 1};
    }
    const int sign = display.sgn();
    const Scalar mag = display.abs();
    if (mag == Scalar::of_int(1)) return {blade, sign};
    std::string coef = scalar_text(mag);
    if (mag.rat != 0 && mag.irr != 0) coef = "(" + coef + ")";
    return {coef + "*" + blade, sign};
}

TermText float_term(const std::string& blade, double display) {
    const int sign = display < 0 ? -1 : 1;
    const double mag = display < 0 ? -display : display;
    if (blade == "1") return {double_text(mag), sign};
    if (mag == 1.0) return {blade, sign};
    return {double_text(mag) + "*" + blade, sign};
}

std::string join_terms(const std::vector<TermText>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            out += terms[i].sign < 0 ? "-" : "";
        else
            out += terms[i].sign < 0 ? " - " : " + ";
        out += terms[i].body;
    }
    return out;
}

template <class T, class MakeTerm>
std::string multivector_text(const Multivector<T>& a, MakeTerm make) {
    std::vector<std::pair<Mask, T>> items(a.terms.begin(), a.terms.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        return blade_grade(x.first) < blade_grade(y.first);
    });
    std::vector<TermText> out;
    for (const auto& [m, c] : items) {
        const auto [blade, fold] = blade_text(m);
        out.push_back(make(blade, fold < 0 ? -c : c));
    }
    return join_terms(out);
}

template <class T, class MakeTerm>
std::string tensor_text(const TensorMultivector<T>& a, MakeTerm make) {
    using Item = std::pair<std::vector<Mask>, T>;
    std::vector<Item> items(a.terms.begin(), a.terms.end());
    std::stable_sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
        int gx = 0, gy = 0;
        for (Mask m : x.first) gx += blade_grade(m);
        for (Mask m : y.first) gy += blade_grade(m);
        if (gx != gy) return gx < gy;
        return x.first < y.first;
    });
    std::vector<TermText> out;
    for (const auto& [key, c] : items) {
        std::string body = "tensor(";
        int fold = 1;
        for (std::size_t s = 0; s < key.size(); ++s) {
            const auto [blade, sign] = blade_text(key[s]);
            fold *= sign;
            if (s) body += ", ";
            body += blade;
        }
        body += ")";
        out.push_back(make(body, fold < 0 ? -c : c));
    }
    return join_terms(out);
}

}  // namespace

std::string to_string(const Scalar& s) { return scalar_text(s); }
std::string to_string(double x) { return double_text(x); }

std::string to_string(const Multivector<Scalar>& a) {
    return multivector_text(a, [](const std::string& b, const Scalar& c) {
        return exact_term(b, c);
    });
}

std::string to_string(const Multivector<double>& a) {
    return multivector_text(a, [](const std::string& b, double c) { return float_term(b, c); });
}

std::string to_string(const TensorMultivector<Scalar>& a) {
    return tensor_text(a, [](const std::string& b, const Scalar& c) { return exact_term(b, c); });
}

std::string to_string(const TensorMultivector<double>& a) {
    return tensor_text(a, [](const std::string& b, double c) { return float_term(b, c); });
}

std::string spin_class_name(SpinClass c) {
    switch (c) {
        case SpinClass::spin: return "spin";
        case SpinClass::spin_plus: return "spin_plus";
        default: return "neither";
    }
}

}  // namespace spinorqc
