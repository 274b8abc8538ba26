#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "gis/graph.hpp"
#include "gis/reduce.hpp"
#include "gis/rng.hpp"

namespace gis {

using clock = std::chrono::steady_clock;

struct search_params {
    std::uint64_t tolerance_l = 0;  // non-improvement tolerance L; 0 derives 10|V| (0.5|V| large)
    double epsilon = 0.2;           // perturbation fraction, in (0,1)
    double cutoff_seconds = 30.0;
    std::uint64_t seed = 1;
    bool large_mode = false;
};

struct solve_params : search_params {
    int trials = 10;
    std::uint64_t max_outer_iters = 0;  // 0: bounded by cutoff only
    rule_mask disabled = 0;             // reduction rules to skip
    int threads = 0;                    // 0: min(trials, hardware)
};

// Current solution plus per-vertex move gains B_u, permanent-conflict
// counts, and the tabu stamps of the swap operator. Gains satisfy
// gain(v) == w(v) - sum of penalties of removable edges from v into S.
class search_state {
public:
    search_state(const graph& g, const solution& s);

    benefit nb() const { return nb_; }
    std::size_t size() const { return size_; }
    std::size_t vertex_limit() const { return in_sol_.size(); }
    benefit gain(vertex_id v) const { return gain_[v]; }
    bool in_solution(vertex_id v) const { return in_sol_[v] != 0; }
    std::uint64_t iteration() const { return iter_; }
    void advance_iteration() { ++iter_; }
    bool tabu(vertex_id v) const { return tabu_until_[v] > iter_; }

    // M_1: vertices addable outright. M_2: swap candidates (exactly one
    // permanent conflict) minus the tabu list.
    void build_moves(std::vector<vertex_id>& m1, std::vector<vertex_id>& m2) const;
    // The single member of N_p(v) inside S; no_vertex if not exactly one.
    vertex_id unique_conflict(vertex_id v) const;

    void apply_add(vertex_id v);
    void apply_remove(vertex_id u);
    // Swap u out, v in; u becomes tabu until iter + 10 + uniform[0, m2_size).
    void apply_swap(vertex_id u, vertex_id v, std::size_t m2_size, rng& r);
    // Applies the R3/R4 inclusion conditions on the residual graph
    // G[V \ N_p[S]] with gains as effective profits; adds every qualifying
    // vertex. Pure search move, the graph is untouched. Returns #added.
    std::size_t apply_reduce_move();

    solution snapshot() const;
    std::vector<benefit> recompute_gains() const;  // from-scratch, for tests

private:
    const graph& g_;
    std::vector<std::uint8_t> in_sol_;
    std::vector<benefit> gain_;
    std::vector<std::uint32_t> conflicts_;  // |N_p(v) ∩ S|
    std::vector<std::uint64_t> tabu_until_;
    benefit nb_{0};
    std::size_t size_ = 0;
    std::uint64_t iter_ = 0;
};

// Random construction: repeatedly excludes a random vertex from the
// residual graph and lets complete reduction force vertices into the
// solution, then greedily extends to a maximal generalized independent set.
solution random_peeling(const graph& g, const std::vector<vertex_id>& s_init, rng& r,
                        rule_mask disabled = 0);

// Tabu search over ADD/SWAP plus the reduction move, with stagnation-driven
// perturbation. Returns the best solution visited; never worse than s.
solution neighborhood_search(const graph& g, const solution& s, std::uint64_t tolerance_l,
                             double epsilon, rng& r,
                             std::optional<clock::time_point> deadline = std::nullopt);

struct solve_stats {
    std::size_t kernel_size = 0;
    double time_ker_s = 0;
    double htime_s = 0;  // first attainment of the final best value, incl. pre-processing
    int trials = 0;
    std::uint64_t seed = 0;
    bool proven_optimal = false;
    benefit offset;
    std::uint64_t outer_iterations = 0;
};

struct solve_result {
    solution sol;  // original-graph solution, lifted and verified
    solve_stats stats;
};

// Full pipeline: reduce once, then trials of peel + search on the kernel
// until cutoff (or max_outer_iters per trial), lift the best kernel
// solution. Kernel fully reduced => result flagged proven optimal.
solve_result rls_solve(const graph& g, const solve_params& params);

}  // namespace gis
