#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace mspkit {

// Divisor data at a node of thickness k: q^{-1}M = 5A + n1 D1 + n2 D2 with A
// of class l in CL(V)/Car(V) = Z/k, generated by D1 with D2 = -D1.
struct node_divisor_data {
    int k = 1;
    long long n1 = 0;
    long long n2 = 0;
    long long l = 0;  // reduced mod k by the constructor users; we reduce again

    node_divisor_data() = default;
    node_divisor_data(int k_, long long n1_, long long n2_, long long l_)
        : k(k_), n1(n1_), n2(n2_), l(l_) {
        if (k < 1) throw std::invalid_argument("thickness must be >= 1");
        l = ((l % k) + k) % k;
    }
};

inline long long mod_pos(long long x, long long mod) { return ((x % mod) + mod) % mod; }

// (5l + n1 - n2) mod k; zero iff M is Cartier at the node.
inline long long cartier_residue(const node_divisor_data& d) {
    return mod_pos(5 * d.l + d.n1 - d.n2, d.k);
}

enum class stacking : std::uint8_t { scheme, mu5 };

// After the degree-5 base change, (1/5)M extends as a Cartier divisor without
// stacking iff 5l + n1 - n2 = 0 mod 5k; otherwise the node becomes a balanced
// mu_5 point ((u,v) -> (zeta u, zeta^{-1} v)).
inline stacking stacking_decision(const node_divisor_data& d) {
    return mod_pos(5 * d.l + d.n1 - d.n2, 5LL * d.k) == 0 ? stacking::scheme : stacking::mu5;
}

// gcd(m, r) = 1; preconditions 0 <= m < r.
inline bool representable(long long m, long long r) {
    if (r < 1 || m < 0 || m >= r) throw std::invalid_argument("need 0 <= m < r, r >= 1");
    return std::gcd(m, r) == 1;
}

// Monodromy indices on the two branches of a balanced node: m and (r-m) mod r.
inline std::pair<long long, long long> node_branch_monodromies(long long m, long long r) {
    if (r < 1 || m < 0 || m >= r) throw std::invalid_argument("need 0 <= m < r, r >= 1");
    return {m, (r - m) % r};
}

}  // namespace mspkit
