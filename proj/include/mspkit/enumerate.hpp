#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mspkit/canonical.hpp"
#include "mspkit/graph.hpp"
#include "mspkit/stability.hpp"

namespace mspkit {

struct malformed_decoration : std::domain_error {
    using std::domain_error::domain_error;
};

// Auxiliary legs forcing quasi-stability: 3 deg L per level-0/01 vertex and
// 2 delta(v) per level-1inf vertex, delta(v) = 5 deg N - #(edges into level
// inf).  Fractional leg counts or negative delta mean the decoration cannot
// come from a field and raise malformed_decoration.
std::map<int, int> auxiliary_legs(const decorated_graph& g);

// All vertices semistable (2g_v - 2 + |E_v| >= 0, auxiliary legs included)
// and no chain of three consecutive strictly semistable vertices.
bool quasi_stable(const decorated_graph& g, const std::map<int, int>& aux);

struct enum_request {
    numerical_data data;
    std::optional<int> max_vertices;
    bool emit_aux_legs = false;
    bool aux_check = true;  // quasi-stability-after-aux-legs filter
    std::uint64_t work_cap = 0;          // 0 = unlimited; measured in work items
    std::uint64_t resume_from_item = 0;  // resumption token from a capped run
    int jobs = 1;
};

struct canonical_graph {
    decorated_graph graph;
    std::string cert;
    std::map<int, int> aux;  // filled when emit_aux_legs is set
};

struct enum_result {
    std::vector<canonical_graph> graphs;  // sorted by certificate, duplicate-free
    long long bound_used = 0;             // the leg bound L_max
    std::uint64_t items_processed = 0;
};

struct enum_cap_exceeded : std::runtime_error {
    enum_result partial;
    std::uint64_t resume_token;  // next work item
    enum_cap_exceeded(enum_result p, std::uint64_t tok)
        : std::runtime_error("enumeration cap exceeded; resume from item " + std::to_string(tok)),
          partial(std::move(p)),
          resume_token(tok) {}
};

// Total-leg search bound l + 3 d0 + 10 dinf + 4g + 2l (clamped below by l).
long long leg_bound(const numerical_data& data);

// Enumerates the decorated graph types (level, degree and genus decorations
// up to decorated isomorphism) passing validate_graph, stability, and -- when
// aux_check is set -- quasi-stability after auxiliary legs.  Deterministic
// output order regardless of jobs.
enum_result enumerate_theta(const enum_request& req);

// Independent reference: flat scan of all level/genus/edge/leg/degree
// combinations up to max_vertices, filtered by the same public predicates.
// Kept serial; used as the test oracle for the organized enumerator.
enum_result brute_force_theta(const numerical_data& data, int max_vertices, bool aux_check = true);

}  // namespace mspkit
