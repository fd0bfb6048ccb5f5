#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace spinorqc {

// Diagonal metric of Cl(p,q); diag[i] is the square of generator g_i.
// At most 8 generators (blade masks fit a byte).
struct Signature {
    std::vector<std::int8_t> diag;

    Signature() = default;
    Signature(std::initializer_list<int> signs) {
        if (signs.size() > 8) throw std::invalid_argument("signature: more than 8 generators");
        for (int s : signs) {
            if (s != 1 && s != -1) throw std::invalid_argument("signature: diag entries must be +-1");
            diag.push_back(static_cast<std::int8_t>(s));
        }
    }

    int dims() const { return static_cast<int>(diag.size()); }

    // Spacetime algebra Cl(1,3): g0^2 = 1, g1^2 = g2^2 = g3^2 = -1.
    static const Signature& cl13() {
        static const Signature s{+1, -1, -1, -1};
        return s;
    }
    static const Signature& cl30() {
        static const Signature s{+1, +1, +1};
        return s;
    }

    friend bool operator==(const Signature& a, const Signature& b) { return a.diag == b.diag; }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

}  // namespace spinorqc
