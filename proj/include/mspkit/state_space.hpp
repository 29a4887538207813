#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "mspkit/fifths.hpp"
#include "mspkit/rational.hpp"

namespace mspkit {

// Element of H*_T(P^5 u mu_5) = C[H,t]/<H^5(H+t)>  (+)  sum_j C[t] 1_{j/5}.
// The P^5 sector is kept reduced: H-exponent <= 5, with H^6 rewritten as
// -t H^5.  Grading: deg H = deg t = 2, deg 1_{j/5} = 8j/5.
class state_class {
public:
    // (H exponent, t exponent) -> coefficient
    using p5_poly = std::map<std::pair<int, int>, rational>;
    // t exponent -> coefficient
    using t_poly = std::map<int, rational>;

    state_class() = default;

    static state_class monomial(const rational& c, int h_exp, int t_exp);
    static state_class unit_j(const rational& c, int j, int t_exp);  // c * t^b * 1_{j/5}
    static state_class one() { return monomial(1, 0, 0); }

    const p5_poly& p5() const { return p5_; }
    const t_poly& mu5(int j) const;
    bool has_mu5() const;
    bool is_zero() const;

    void add_p5(const rational& c, int h_exp, int t_exp);  // reduces on the fly
    void add_mu5(const rational& c, int j, int t_exp);

    state_class operator+(const state_class& o) const;
    state_class operator-() const;

    friend bool operator==(const state_class&, const state_class&) = default;

private:
    p5_poly p5_;
    std::map<int, t_poly> mu5_;  // keys in 1..4
    void prune();
};

struct undefined_product : std::domain_error {
    using std::domain_error::domain_error;
};

// Polynomial product reduced by H^6 -> -t H^5.  The mu_5 sector only carries
// a C[t]-module structure, so at most one operand may have a mu_5 part.
state_class ring_mul(const state_class& x, const state_class& y);

struct degree_report {
    std::set<fifths> degrees;
    bool homogeneous() const { return degrees.size() <= 1; }
};

degree_report ring_deg(const state_class& x);

}  // namespace mspkit
