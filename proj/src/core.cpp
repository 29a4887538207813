#include "mspkit/fifths.hpp"
#include "mspkit/numerical.hpp"

#include <charconv>

namespace mspkit {

fifths parse_fifths(const std::string& s) {
    auto parse_int = [](std::string_view sv) -> std::int64_t {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
        if (ec != std::errc{} || p != sv.data() + sv.size())
            throw std::invalid_argument("bad integer in degree literal");
        return v;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return fifths::from_integer(parse_int(s));
    std::int64_t num = parse_int(std::string_view(s).substr(0, slash));
    std::int64_t den = parse_int(std::string_view(s).substr(slash + 1));
    if (den == 5) return fifths{num};
    if (den == 1) return fifths::from_integer(num);
    if (den == -5) return fifths{-num};
    if (den != 0 && num % den == 0) return fifths::from_integer(num / den);
    if (den != 0 && (num * 5) % den == 0) return fifths{num * 5 / den};
    throw std::invalid_argument("degree literal not in (1/5)Z: " + s);
}

validation_report validate_numerical(const numerical_data& data) {
    validation_report rep;
    if (data.g < 0) rep.violations.push_back("genus must be non-negative");
    if (!data.d0.is_integer())
        rep.violations.push_back("d0 = " + data.d0.str() + " is not an integer");
    fifths t = data.dinf + fifths{data.index_sum()};
    if (!t.is_integer())
        rep.violations.push_back("dinf + (1/5)*sum(m_i) = " + t.str() + " is not an integer");
    for (std::size_t i = 0; i < data.gamma.size(); ++i)
        if (is_broad_only(data.gamma[i]))
            rep.violations.push_back("marking " + std::to_string(i + 1) +
                                     " carries the broad-only monodromy 1");
    return rep;
}

}  // namespace mspkit
