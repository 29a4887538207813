#include "mspkit/state_space.hpp"

namespace mspkit {

state_class state_class::monomial(const rational& c, int h_exp, int t_exp) {
    state_class x;
    x.add_p5(c, h_exp, t_exp);
    return x;
}

state_class state_class::unit_j(const rational& c, int j, int t_exp) {
    state_class x;
    x.add_mu5(c, j, t_exp);
    return x;
}

const state_class::t_poly& state_class::mu5(int j) const {
    static const t_poly empty;
    auto it = mu5_.find(j);
    return it == mu5_.end() ? empty : it->second;
}

bool state_class::has_mu5() const {
    for (const auto& [j, p] : mu5_)
        if (!p.empty()) return true;
    return false;
}

bool state_class::is_zero() const { return p5_.empty() && !has_mu5(); }

void state_class::add_p5(const rational& c, int h_exp, int t_exp) {
    if (c == 0) return;
    if (h_exp < 0 || t_exp < 0) throw std::domain_error("negative exponent");
    if (h_exp > 5) {
        // H^{5+k} = (-t)^k H^5
        int k = h_exp - 5;
        rational cc = (k % 2 == 0) ? c : -c;
        add_p5(cc, 5, t_exp + k);
        return;
    }
    auto key = std::make_pair(h_exp, t_exp);
    auto [it, fresh] = p5_.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p5_.erase(it);
    }
}

void state_class::add_mu5(const rational& c, int j, int t_exp) {
    if (c == 0) return;
    if (j < 1 || j > 4) throw std::domain_error("mu5 sector index must be in 1..4");
    if (t_exp < 0) throw std::domain_error("negative exponent");
    auto& p = mu5_[j];
    auto [it, fresh] = p.try_emplace(t_exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
    prune();
}

void state_class::prune() {
    for (auto it = mu5_.begin(); it != mu5_.end();)
        it = it->second.empty() ? mu5_.erase(it) : std::next(it);
}

state_class state_class::operator+(const state_class& o) const {
    state_class r = *this;
    for (const auto& [k, c] : o.p5_) r.add_p5(c, k.first, k.second);
    for (const auto& [j, p] : o.mu5_)
        for (const auto& [b, c] : p) r.add_mu5(c, j, b);
    return r;
}

state_class state_class::operator-() const {
    state_class r;
    for (const auto& [k, c] : p5_) r.add_p5(-c, k.first, k.second);
    for (const auto& [j, p] : mu5_)
        for (const auto& [b, c] : p) r.add_mu5(-c, j, b);
    return r;
}

state_class ring_mul(const state_class& x, const state_class& y) {
    if (x.has_mu5() && y.has_mu5())
        throw undefined_product("no product is defined between two mu5-sector classes");

    state_class r;
    for (const auto& [ka, ca] : x.p5())
        for (const auto& [kb, cb] : y.p5())
            r.add_p5(ca * cb, ka.first + kb.first, ka.second + kb.second);

    // mu5 sector scales by the t-only part of the other factor.
    auto scale_mu5 = [&](const state_class& m, const state_class& s) {
        for (int j = 1; j <= 4; ++j)
            for (const auto& [b, c] : m.mu5(j))
                for (const auto& [k, cs] : s.p5())
                    if (k.first == 0) r.add_mu5(c * cs, j, b + k.second);
    };
    if (x.has_mu5()) scale_mu5(x, y);
    if (y.has_mu5()) scale_mu5(y, x);
    return r;
}

degree_report ring_deg(const state_class& x) {
    degree_report rep;
    for (const auto& [k, c] : x.p5())
        rep.degrees.insert(fifths::from_integer(2 * k.first + 2 * k.second));
    for (int j = 1; j <= 4; ++j)
        for (const auto& [b, c] : x.mu5(j)) rep.degrees.insert(fifths{10 * b + 8 * j});
    return rep;
}

}  // namespace mspkit
