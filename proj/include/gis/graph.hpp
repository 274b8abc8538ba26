#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gis/benefit.hpp"
#include "gis/errors.hpp"

namespace gis {

using vertex_id = std::uint32_t;
inline constexpr vertex_id no_vertex = UINT32_MAX;

struct rem_entry {
    vertex_id to;
    benefit penalty;
};

// A GIS instance: vertex profits, a permanent edge set (hard conflicts) and
// a removable edge set with penalties (soft conflicts). Vertices are removed
// in place via liveness flags; adjacency entries pointing at dead vertices
// are tombstones that get swept by compact(). Ids are never reused, so new
// vertices created by folding always get fresh ids.
class graph {
public:
    graph() = default;
    explicit graph(std::size_t n, int scale = 0);

    vertex_id add_vertex(benefit profit);
    void add_permanent_edge(vertex_id u, vertex_id v);
    void add_removable_edge(vertex_id u, vertex_id v, benefit penalty);

    // Deletes {u,v} from E_r (eager on both sides).
    void delete_removable_edge(vertex_id u, vertex_id v);
    // Moves {u,v} from E_r to E_p, dropping its penalty.
    void removable_to_permanent(vertex_id u, vertex_id v);
    // Updates the stored penalty on both directed copies.
    void set_penalty(vertex_id u, vertex_id v, benefit p);

    // Kills u and clears its own adjacency; neighbors keep tombstones.
    void remove_vertex(vertex_id u);

    void set_profit(vertex_id u, benefit w) { check_alive(u); profit_[u] = w; }
    void add_profit(vertex_id u, benefit delta) { check_alive(u); profit_[u] += delta; }

    benefit profit(vertex_id u) const { check_alive(u); return profit_[u]; }
    bool alive(vertex_id u) const { return u < alive_.size() && alive_[u]; }
    std::size_t vertex_count() const { return profit_.size(); }
    std::size_t alive_count() const { return alive_count_; }
    std::size_t permanent_edge_count() const { return perm_edges_; }
    std::size_t removable_edge_count() const { return rem_edges_; }

    std::uint32_t permanent_degree(vertex_id u) const { check_alive(u); return perm_deg_[u]; }
    std::uint32_t removable_degree(vertex_id u) const { check_alive(u); return rem_deg_[u]; }
    std::uint32_t degree(vertex_id u) const { return permanent_degree(u) + removable_degree(u); }
    std::uint32_t max_degree() const;

    bool has_permanent_edge(vertex_id u, vertex_id v) const;
    bool has_removable_edge(vertex_id u, vertex_id v) const;
    // Penalty of removable edge {u,v}; nullopt when no such edge. Absent
    // pairs and permanent edges are handled structurally by callers, never
    // by sentinel values.
    std::optional<benefit> removable_penalty(vertex_id u, vertex_id v) const;

    // Alive permanent neighbors, ascending.
    template <typename F>
    void for_permanent(vertex_id u, F&& f) const {
        for (vertex_id v : perm_[u])
            if (alive_[v]) f(v);
    }
    // Alive removable neighbors with penalties, ascending.
    template <typename F>
    void for_removable(vertex_id u, F&& f) const {
        for (const rem_entry& e : rem_[u])
            if (alive_[e.to]) f(e.to, e.penalty);
    }
    // As above but the callback returns false to stop early.
    template <typename F>
    bool for_permanent_while(vertex_id u, F&& f) const {
        for (vertex_id v : perm_[u])
            if (alive_[v] && !f(v)) return false;
        return true;
    }
    template <typename F>
    bool for_removable_while(vertex_id u, F&& f) const {
        for (const rem_entry& e : rem_[u])
            if (alive_[e.to] && !f(e.to, e.penalty)) return false;
        return true;
    }

    std::vector<vertex_id> permanent_neighbors(vertex_id u) const;
    std::vector<rem_entry> removable_neighbors(vertex_id u) const;
    std::vector<vertex_id> alive_vertices() const;

    int scale() const { return scale_; }
    void set_scale(int s) { scale_ = s; }

    // Sweeps tombstone entries out of every adjacency list. Invalidates
    // adjacency iteration; call only between reduction events.
    void compact();
    bool compaction_due() const { return tombstones_ > 64 && tombstones_ * 2 > entries_; }

    // Full invariant check (symmetry, class disjointness, no self loops,
    // empty adjacency on dead vertices, degree counters). Throws
    // internal_error on violation. Test and debug helper; O(V + E log E).
    void validate() const;

    // True when the alive subgraphs (profits, edges, penalties) coincide.
    bool same_alive_subgraph(const graph& other) const;

private:
    void check_alive(vertex_id u) const {
        if (u >= alive_.size()) throw invalid_input("unknown vertex id " + std::to_string(u));
        if (!alive_[u]) throw invalid_input("dead vertex id " + std::to_string(u));
    }
    void check_pair(vertex_id u, vertex_id v) const {
        check_alive(u);
        check_alive(v);
        if (u == v) throw invalid_input("self loop on vertex " + std::to_string(u));
    }

    std::vector<benefit> profit_;
    std::vector<std::vector<vertex_id>> perm_;
    std::vector<std::vector<rem_entry>> rem_;
    std::vector<std::uint8_t> alive_;
    std::vector<std::uint32_t> perm_deg_;  // alive neighbors only
    std::vector<std::uint32_t> rem_deg_;
    std::size_t alive_count_ = 0;
    std::size_t perm_edges_ = 0;  // alive edges
    std::size_t rem_edges_ = 0;
    std::size_t tombstones_ = 0;
    std::size_t entries_ = 0;  // directed adjacency entries incl. tombstones
    int scale_ = 0;
};

// A candidate solution: vertex subset plus its cached net benefit. members
// is sorted ascending.
struct solution {
    std::vector<vertex_id> members;
    benefit net_benefit;
};

// nb(S) = sum of profits minus penalties of removable edges inside S. Does
// not check permanent-edge feasibility.
benefit net_benefit(const graph& g, std::span<const vertex_id> s);

// True iff no permanent edge joins two members of s.
bool is_generalized_independent(const graph& g, std::span<const vertex_id> s);

// Profit of v plus the absolute sum of its negative incident penalties.
benefit tilde_w(const graph& g, vertex_id v);

// Sum of max(0, tilde_w(v)) over s: an upper bound on the net benefit of
// any generalized independent set inside s.
benefit w_plus(const graph& g, std::span<const vertex_id> s);

solution make_solution(const graph& g, std::vector<vertex_id> members);

}  // namespace gis
