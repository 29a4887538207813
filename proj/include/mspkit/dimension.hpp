#pragma once

#include <stdexcept>
#include <vector>

#include "mspkit/fifths.hpp"
#include "mspkit/numerical.hpp"

namespace mspkit {

struct invalid_data : std::domain_error {
    validation_report report;
    explicit invalid_data(validation_report rep)
        : std::domain_error(rep.violations.empty() ? "invalid data" : rep.violations.front()),
          report(std::move(rep)) {}
};

// (d0 - 5 l_phi) + (dinf + (1/5) sum m_i) + 1 - g + sum (1 - m_i); always an
// integer on valid data, returned as an (integral) degree in fifths.
fifths virtual_dim(const numerical_data& data);

// 5g - 5 + l, the dimension of the stack of (curve, L, N) triples.
int base_dim(int g, int ell);
// Tiny inputs where the formula value is purely formal.
bool base_dim_is_formal(int g, int ell);

enum class exponent_baseline { dinf, d0 };

// e(a., phi.) = sum_k (a_k + deg_k / 2) - (d0 + dinf + 1 - g + l).  The second
// degree entering the baseline is configurable; the default reads it as dinf.
fifths selection_exponent(const std::vector<int>& a, const std::vector<fifths>& degs,
                          const numerical_data& data,
                          exponent_baseline baseline = exponent_baseline::dinf);

// Invariant vanishing rule: degree reasons kill everything with e < 0.
inline bool vanishes_by_dimension(fifths e) { return e.raw < 0; }

}  // namespace mspkit
