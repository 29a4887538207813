#include "mspkit/dimension.hpp"

namespace mspkit {

fifths virtual_dim(const numerical_data& data) {
    auto rep = validate_numerical(data);
    if (!rep.valid()) throw invalid_data(std::move(rep));

    fifths d = data.d0;
    d -= fifths::from_integer(5 * data.ell_phi1());
    d += data.dinf + fifths{data.index_sum()};
    d += fifths::from_integer(1 - data.g);
    d += fifths::from_integer(data.ell() - data.index_sum());
    if (!d.is_integer())
        throw std::logic_error("virtual dimension " + d.str() + " is not an integer");
    return d;
}

int base_dim(int g, int ell) { return 5 * g - 5 + ell; }

bool base_dim_is_formal(int g, int ell) { return g == 0 && ell < 5; }

fifths selection_exponent(const std::vector<int>& a, const std::vector<fifths>& degs,
                          const numerical_data& data, exponent_baseline baseline) {
    if (a.size() != degs.size() || static_cast<int>(a.size()) != data.ell())
        throw std::invalid_argument("selection_exponent: |a|, |degs| and |gamma| must agree");
    std::int64_t twice_raw = 0;  // accumulate in tenths to halve degrees exactly
    for (std::size_t k = 0; k < a.size(); ++k) twice_raw += 10 * a[k] + degs[k].raw;
    fifths second = baseline == exponent_baseline::dinf ? data.dinf : data.d0;
    fifths base = data.d0 + second + fifths::from_integer(1 - data.g + data.ell());
    twice_raw -= 2 * base.raw;
    if (twice_raw % 2 != 0)
        throw std::domain_error("selection exponent is not in (1/5)Z");
    return fifths{twice_raw / 2};
}

}  // namespace mspkit
