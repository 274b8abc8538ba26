#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gis/graph.hpp"

namespace gis {

enum class rule : std::uint8_t {
    edge_removal = 1,        // R1: removable edge with zero penalty
    edge_penalty = 2,        // R2: penalty exceeds both endpoint values
    neighborhood_weight = 3,
    neighborhood_penalty = 4,
    negative_profit = 5,
    clique = 6,
    degree_one = 7,
    degree_two_perm = 8,     // neighbors joined by a permanent edge
    degree_two_nonperm = 9,
    perm_degree_one = 10,
    perm_degree_two = 11,
    perm_edge = 12,
    common_neighbors = 13,
    twin_fold = 14,
};

inline int rule_index(rule r) { return static_cast<int>(r); }

// Membership rule for a vertex that a reduction removed or folded: how to
// decide it when a kernel solution is replayed back to the original graph.
enum class lift_kind : std::uint8_t {
    always_in,
    never_in,
    in_iff_out,        // in iff a is out
    in_iff_in,         // in iff a is in
    in_iff_both_out,   // in iff a and b are both out
    in_iff_both_in,
    in_iff_any_out,    // in iff a is out or b is out
    in_iff_any_in,
    in_iff_a_out_b_in,     // in iff a out and b in
    in_iff_a_out_or_b_in,  // in iff a out or b in
    fold_pair,             // vertex is the folded v'; in iff both a,b in
};

struct lift_entry {
    vertex_id vertex;
    lift_kind kind;
    vertex_id a = no_vertex;
    vertex_id b = no_vertex;
};

enum class edge_edit_kind : std::uint8_t {
    rem_delete,
    rem_to_perm,
    rem_insert,
    rem_penalty_delta,
};

struct edge_edit {
    vertex_id u, v;
    edge_edit_kind kind;
    benefit amount;  // insert: initial penalty; penalty_delta: the delta
};

struct removed_vertex {
    vertex_id v;
    benefit profit;  // pre-removal
    std::vector<vertex_id> perm;
    std::vector<rem_entry> rem;
};

struct weight_delta {
    vertex_id v;
    benefit delta;
};

struct fold_creation {
    vertex_id id;
    benefit profit;
    std::vector<vertex_id> perm;
    std::vector<rem_entry> rem;
};

// One applied reduction with enough recorded state to (a) replay the graph
// rewrite forward and (b) decide removed vertices when lifting a kernel
// solution backward.
struct reduction_event {
    rule r;
    std::uint8_t case_major = 0;  // e.g. R8.2.2 -> major 2, minor 2
    std::uint8_t case_minor = 0;
    std::vector<edge_edit> edge_edits;      // applied first
    std::vector<weight_delta> weight_deltas;
    std::vector<removed_vertex> removed;
    std::optional<fold_creation> fold;
    benefit offset_delta;
    std::vector<lift_entry> lifts;

    // "R7.1.2"-style tag, used by coverage assertions and traces.
    std::string tag() const {
        std::string s = "R" + std::to_string(rule_index(r));
        if (case_major) {
            s += "." + std::to_string(case_major);
            if (case_minor) s += "." + std::to_string(case_minor);
        }
        return s;
    }
};

// Applies ev forward to g (edits, weight deltas, removals, fold creation).
// Replaying a full trace on the pre-reduction graph must reproduce the
// kernel exactly; tests rely on this.
void replay_event(graph& g, const reduction_event& ev);

}  // namespace gis
