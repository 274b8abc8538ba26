#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gis/event.hpp"
#include "gis/graph.hpp"

namespace gis {

using rule_mask = std::uint16_t;

constexpr rule_mask rule_bit(int i) { return static_cast<rule_mask>(1u << (i - 1)); }
constexpr bool rule_disabled(rule_mask m, int i) { return (m & rule_bit(i)) != 0; }
// Heavy rules skipped on very large graphs: R6 and R12-R14.
constexpr rule_mask large_mode_mask() {
    return rule_bit(6) | rule_bit(12) | rule_bit(13) | rule_bit(14);
}

// What one rule application did to the graph, plus the bookkeeping the
// incremental engine needs to requeue dependent checks.
struct rule_effect {
    reduction_event event;
    // Alive vertices whose weights, adjacency, or neighborhood changed
    // (includes surviving neighbors of removed vertices). May contain
    // duplicates.
    std::vector<vertex_id> touched;
    // Removable edges inserted or re-weighted by this event (both endpoints
    // alive): direct candidates for the zero-penalty rule.
    std::vector<std::pair<vertex_id, vertex_id>> edited_rem_edges;
};

// Per-rule attempts used by the reduction drivers. Each checks the rule's
// precondition and condition against the current graph; when the rule fires
// the graph is mutated and the effect returned. Stale elements (dead
// vertices, vanished edges, wrong degree) yield nullopt, never an error.
std::optional<rule_effect> try_rule_1(graph& g, vertex_id u, vertex_id v);
std::optional<rule_effect> try_rule_2(graph& g, vertex_id u, vertex_id v);
std::optional<rule_effect> try_rule_3(graph& g, vertex_id u);
std::optional<rule_effect> try_rule_4(graph& g, vertex_id u);
std::optional<rule_effect> try_rule_5(graph& g, vertex_id u);
std::optional<rule_effect> try_rule_6(graph& g, vertex_id u);
std::optional<rule_effect> try_rule_7(graph& g, vertex_id u);
std::optional<rule_effect> try_rule_8(graph& g, vertex_id u);
std::optional<rule_effect> try_rule_9(graph& g, vertex_id u);
std::optional<rule_effect> try_rule_10(graph& g, vertex_id u);
std::optional<rule_effect> try_rule_11(graph& g, vertex_id u);
// Edge rules try both role assignments of {u,v}, smaller id first.
std::optional<rule_effect> try_rule_12(graph& g, vertex_id u, vertex_id v);
std::optional<rule_effect> try_rule_13(graph& g, vertex_id u, vertex_id v);
std::optional<rule_effect> try_rule_14(graph& g, vertex_id u, vertex_id v);

// Twin-fold eligibility of a single vertex: w(u) >= sum of positive
// incident removable penalties. Pair applicability additionally needs equal
// permanent neighborhoods.
bool twin_eligible(const graph& g, vertex_id u);

// Grouped operations. These are the strict public surface: preconditions
// are errors, not no-ops.

// R1 then R2 on a removable edge.
std::optional<reduction_event> apply_edge_transformations(graph& g, vertex_id u, vertex_id v);
// First match of R3, R4, R5, R6 on a vertex.
std::optional<reduction_event> apply_neighborhood_reductions(graph& g, vertex_id u);
// R7 on a degree-one vertex; exactly one sub-case fires.
std::optional<reduction_event> apply_degree_one(graph& g, vertex_id u);
// R8 or R9 on a degree-two vertex depending on the neighbor edge class.
std::optional<reduction_event> apply_degree_two(graph& g, vertex_id u);
// R10 or R11 on a vertex of permanent degree one or two.
std::optional<reduction_event> apply_low_perm_degree(graph& g, vertex_id u);
// R12 then R13 on a permanent edge, or R14 on a non-adjacent twin pair.
std::optional<reduction_event> apply_vertex_pair(graph& g, vertex_id u, vertex_id v);

}  // namespace gis
