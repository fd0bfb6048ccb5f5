#include "spinorqc/multivector.hpp"

#include <algorithm>
#include <cmath>

namespace spinorqc {

Multivector<double> exp_series(double theta, const Multivector<double>& a, double rel_tol,
                               int max_terms) {
    const auto max_abs = [](const Multivector<double>& m) {
        double v = 0;
        for (const auto& [mask, c] : m.terms) v = std::max(v, std::abs(c));
        return v;
    };
    Multivector<double> acc = Multivector<double>::one(a.sig);
    Multivector<double> term = acc;
    for (int k = 1; k <= max_terms; ++k) {
        term = (theta / k) * gp(term, a);
        acc = acc + term;
        if (max_abs(term) <= rel_tol * std::max(1.0, max_abs(acc))) break;
    }
    return acc;
}

}  // namespace spinorqc
