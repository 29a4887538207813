#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mspkit {

// Element of the marking alphabet: (1,rho), (1,phi), zeta_5^j for j in 1..4,
// plus the broad-only trivial element 1.
enum class monodromy : std::uint8_t {
    rho1,
    phi1,
    zeta1,
    zeta2,
    zeta3,
    zeta4,
    one,  // broad numerical data only; never part of narrow MSP data
};

// The exponent m with gamma = zeta_5^m; (1,rho), (1,phi) and 1 all sit over
// the trivial group element and get index 0.
constexpr int monodromy_index(monodromy g) {
    switch (g) {
        case monodromy::zeta1: return 1;
        case monodromy::zeta2: return 2;
        case monodromy::zeta3: return 3;
        case monodromy::zeta4: return 4;
        default: return 0;
    }
}

constexpr bool is_broad_only(monodromy g) { return g == monodromy::one; }

inline const char* monodromy_name(monodromy g) {
    switch (g) {
        case monodromy::rho1: return "rho1";
        case monodromy::phi1: return "phi1";
        case monodromy::zeta1: return "zeta1";
        case monodromy::zeta2: return "zeta2";
        case monodromy::zeta3: return "zeta3";
        case monodromy::zeta4: return "zeta4";
        case monodromy::one: return "one";
    }
    return "?";
}

inline monodromy parse_monodromy(const std::string& s) {
    if (s == "rho1") return monodromy::rho1;
    if (s == "phi1") return monodromy::phi1;
    if (s == "zeta1") return monodromy::zeta1;
    if (s == "zeta2") return monodromy::zeta2;
    if (s == "zeta3") return monodromy::zeta3;
    if (s == "zeta4") return monodromy::zeta4;
    if (s == "one") return monodromy::one;
    throw std::invalid_argument("unknown monodromy: " + s);
}

}  // namespace mspkit
