#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mspkit/fifths.hpp"
#include "mspkit/graph.hpp"
#include "mspkit/numerical.hpp"
#include "mspkit/rational.hpp"

namespace mspkit {

// ---------------------------------------------------------------------------
// Combinatorial model of a degenerating surface: smooth components of the
// central fiber, nodes with thickness k (local model xy = t^k), and disjoint
// horizontal sections.
// ---------------------------------------------------------------------------

struct surface_marking {
    bool pre_stacky = false;
};

struct surface_component {
    int id = 0;
    int genus = 0;
    std::vector<surface_marking> markings;
};

struct surface_node {
    int a = 0;
    int b = 0;
    int thickness = 1;
};

enum class section_kind : std::uint8_t { A, B };

struct section_datum {
    int id = 0;
    section_kind kind = section_kind::B;
    fifths coeff;  // B and off-marking A: positive integers; A at pre-stacky markings: (1/5)Z>0
    int component = 0;
    std::optional<int> at_marking;  // index into the component's marking list
};

struct surface_model {
    std::vector<surface_component> components;
    std::vector<surface_node> nodes;
    std::vector<section_datum> sections;

    const surface_component* find_component(int id) const;
    surface_component* find_component(int id);
    int next_component_id() const;

    // Q-intersection pairing on the central fiber: D_i . D_j = sum 1/k over
    // the nodes joining i and j, D_i^2 = -sum 1/k over nodes on i.
    rational pairing(int i, int j) const;
    // deg omega^log on D_v: 2g_v - 2 + #node branches + #markings.
    int wdeg(int id) const;
    int branches(int id) const;

    validation_report validate() const;
};

// ---------------------------------------------------------------------------
// Pre-baskets and the rewriting engine.
// ---------------------------------------------------------------------------

struct pre_basket {
    surface_model surface;
    std::map<int, long long> l;  // component id -> l_i in Z
    std::map<int, fifths> m;     // component id -> m_i in (1/5)Z

    long long l_of(int id) const;
    fifths m_of(int id) const;
};

struct basket_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Componentwise degree discrepancy of the defining linear equivalence:
// B.D_v + sum l_i (D_i.D_v) - 5 A.D_v - 5 sum m_i (D_i.D_v) - wdeg(v).
rational defect(const pre_basket& pb, int comp);
std::map<int, rational> defect_vector(const pre_basket& pb);
bool defect_free(const pre_basket& pb);

// Termination measures.
long long V1(const pre_basket& pb);  // sum of 5 m_j over components meeting B
long long V2(const pre_basket& pb);  // sum of l_i over components meeting A
long long V3(const pre_basket& pb);  // sum of 5 l_i m_j over ordered adjacent pairs

// Coefficient reduction (l_i, m_i) -> (l_i - r_i, m_i - r_i/5) with
// r_i = min(5 m_i, l_i); the result always satisfies l, m >= 0 and l m = 0.
pre_basket shift(const pre_basket& pb);

bool is_basket(const pre_basket& pb);
bool is_final(const pre_basket& pb);

// Blow up the point of the chosen B-section on component jbar (m_jbar > 0,
// l_jbar = 0): the section, and its marking if any, move to the new rational
// component E with l_E = b + eps, m_E = m_jbar, followed by shift.
pre_basket blowup_B(const pre_basket& pb, int jbar, int section_id);

// Same at an A-section on ibar (l_ibar > 0, m_ibar = 0): E carries
// l_E = l_ibar + eps, m_E = a, followed by shift.
pre_basket blowup_A(const pre_basket& pb, int ibar, int section_id);

enum class separate_strategy : std::uint8_t { paper, pullback };

// Separates the support of l from the support of m at a bad node (l_i m_j != 0
// across the node).  PAPER inserts one (-2)-curve with the literal coefficient
// assignment (V3 strictly decreases; the defect vector is not preserved and is
// returned for diagnostics).  PULLBACK performs the order-2 base change with
// honest Cartier pullback: thicknesses and vertical coefficients double, every
// thickness-2 node is resolved by a (-2)-curve with half-sum coefficients, and
// the defect vector is preserved.
pre_basket separate_bad_node(const pre_basket& pb, int node_index, separate_strategy strategy);

struct reduction_step {
    std::string op;        // "blowup_b" | "blowup_a" | "separate_paper" | "separate_pullback"
    int site_component = -1;
    int site_section = -1;
    int site_node = -1;
    long long v_before[3] = {0, 0, 0};
    long long v_after[3] = {0, 0, 0};
    std::vector<std::pair<int, std::string>> defect_after;  // component -> exact value
};

struct reduction_trace {
    separate_strategy strategy = separate_strategy::paper;
    std::vector<reduction_step> steps;
    std::string status;  // "final" | "cycle" | "step_cap"
    // On "cycle": the repeating sequence of bad-pair value states, each state
    // a sorted list of (l, 5m) pairs, from first occurrence back to itself.
    std::vector<std::vector<std::pair<long long, long long>>> cycle;
};

struct cycle_detected : std::runtime_error {
    reduction_trace trace;
    pre_basket state;
    cycle_detected(reduction_trace t, pre_basket s)
        : std::runtime_error("separation does not terminate: bad-pair state recurs"),
          trace(std::move(t)),
          state(std::move(s)) {}
};

struct step_cap_exceeded : std::runtime_error {
    reduction_trace trace;
    pre_basket state;
    step_cap_exceeded(reduction_trace t, pre_basket s)
        : std::runtime_error("rewriting step cap exceeded"), trace(std::move(t)), state(std::move(s)) {}
};

// shift; blow down V1 to zero, then V2, then separate bad nodes until V3 = 0.
// Deterministic site selection: lowest component id, then lowest section id /
// node index.  PAPER terminates unconditionally; PULLBACK either terminates or
// aborts with a cycle certificate.
std::pair<pre_basket, reduction_trace> finalize(const pre_basket& pb,
                                                separate_strategy strategy,
                                                long long step_cap = 1'000'000);

// ---------------------------------------------------------------------------
// Building pre-baskets from degeneration data and reading final baskets back
// into decorated graph fragments.
// ---------------------------------------------------------------------------

struct degeneration_section {
    int component = 0;
    fifths coeff;  // divisor multiplicity of the closure; positive
    std::optional<int> at_marking;
};

struct degeneration_desc {
    std::vector<surface_component> components;
    std::vector<surface_node> nodes;
    std::vector<degeneration_section> nu2_closure;  // becomes A
    std::vector<degeneration_section> rho_closure;  // becomes B
    std::map<int, long long> l;
    std::map<int, fifths> m;
};

// Assembles the pre-basket: A-coefficients at pre-stacky markings are divided
// by 5, B-sections at pre-stacky markings are rejected, every basket clause
// and the defect-free condition are validated.
pre_basket from_degeneration(const degeneration_desc& desc);

// Degree data of the restacked family of a final basket: per component,
// deg N = A.D_v + sum m_i (D_i.D_v), deg L = -deg N, level from the divisor
// support (m_v > 0: inf; l_v > 0: 1; else 1inf).
decorated_graph to_graph(const pre_basket& final);

}  // namespace mspkit
