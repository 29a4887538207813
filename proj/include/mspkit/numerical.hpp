#pragma once

#include <string>
#include <vector>

#include "mspkit/fifths.hpp"
#include "mspkit/monodromy.hpp"

namespace mspkit {

// (g, gamma, d0, dinf) for an MSP field.
struct numerical_data {
    int g = 0;
    std::vector<monodromy> gamma;
    fifths d0;
    fifths dinf;

    int ell() const { return static_cast<int>(gamma.size()); }
    int ell_phi1() const {
        int n = 0;
        for (auto m : gamma)
            if (m == monodromy::phi1) ++n;
        return n;
    }
    int index_sum() const {
        int s = 0;
        for (auto m : gamma) s += monodromy_index(m);
        return s;
    }
};

struct validation_report {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    bool valid() const { return violations.empty(); }
};

// Integrality checks: d0 in Z, and dinf + (1/5) sum m_i in Z.  Report-style.
validation_report validate_numerical(const numerical_data& data);

}  // namespace mspkit
