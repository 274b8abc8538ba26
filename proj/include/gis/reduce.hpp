#pragma once

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gis/event.hpp"
#include "gis/graph.hpp"
#include "gis/rules.hpp"

namespace gis {

struct reduce_options {
    rule_mask disabled = 0;
    bool record_trace = true;
};

// Reduction fixpoint: a kernel graph, the accumulated objective offset
// (alpha(original) = alpha(kernel) + offset), the vertices forced into some
// optimal solution (original-id space, folds expanded), and the event trace
// that lifts kernel solutions back.
struct kernel_result {
    graph kernel;
    benefit offset;
    std::vector<vertex_id> forced;
    std::vector<reduction_event> trace;
    std::size_t original_vertex_count = 0;
};

// Incremental reduction driver. Candidate queues per rule are drained in
// rule order 1..14, smallest element first; every event requeues the
// (conservatively over-approximated) dependent neighborhood. Twin-fold
// candidates live in an exact bucket index keyed by permanent
// neighborhoods instead of a materialized V x V pair set.
class reduction_engine {
public:
    reduction_engine(graph& g, reduce_options opts = {});

    // Drains all candidate queues to the fixpoint.
    void run();

    // Removes u without recording an event and requeues its neighborhood;
    // used by random peeling between reduction rounds.
    void peel_vertex(vertex_id u);

    benefit offset() const { return offset_; }
    std::vector<reduction_event>& trace() { return trace_; }
    const std::vector<reduction_event>& trace() const { return trace_; }

    // Forced vertices accumulated since the last call, input-id space.
    std::vector<vertex_id> take_new_forced();

private:
    bool step();
    void post_event(rule_effect&& eff);
    void requeue_around(const std::vector<vertex_id>& touched,
                        const std::vector<std::pair<vertex_id, vertex_id>>& edited_rem);
    bool rule_on(int i) const { return !rule_disabled(opts_.disabled, i); }

    void enqueue_vertex(int qi, vertex_id v);
    void enqueue_edge(int qi, vertex_id u, vertex_id v);
    std::optional<rule_effect> dispatch(int i, std::uint64_t elem);

    // twin index (rule 14)
    void twin_refresh(vertex_id v);
    void twin_drop(vertex_id v);
    void twin_update_head(const std::vector<vertex_id>& key);
    bool twin_step();

    void expand_fold(vertex_id v, std::vector<vertex_id>& out) const;

    graph& g_;
    reduce_options opts_;
    benefit offset_{0};
    std::vector<reduction_event> trace_;
    std::vector<vertex_id> new_forced_;
    std::unordered_map<vertex_id, std::pair<vertex_id, vertex_id>> fold_parents_;

    struct vertex_queue {
        std::priority_queue<vertex_id, std::vector<vertex_id>, std::greater<>> heap;
        std::vector<std::uint8_t> in;
    };
    struct edge_queue {
        std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, std::greater<>> heap;
        std::unordered_set<std::uint64_t> in;
    };
    // index 0 unused; 1,2,12,13 edge queues; 3..11 vertex queues
    edge_queue eq1_, eq2_, eq12_, eq13_;
    vertex_queue vq_[12];  // vq_[i] for rule i+0 => index 3..11 used

    struct twin_bucket {
        std::set<vertex_id> members;
        bool registered = false;
        std::pair<vertex_id, vertex_id> head;
    };
    std::map<std::vector<vertex_id>, twin_bucket> twin_buckets_;
    std::map<std::pair<vertex_id, vertex_id>, std::vector<vertex_id>> twin_heads_;
    std::unordered_map<vertex_id, std::vector<vertex_id>> twin_key_of_;

    std::vector<vertex_id> scratch_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
};

// Exhaustively applies R1-R14 until no rule fires.
kernel_result complete_reduction(const graph& g, const reduce_options& opts = {});

// Reference driver: full canonical rescan after every event. Slow; exists
// so the incremental candidate tracking can be checked against it.
kernel_result complete_reduction_naive(const graph& g, const reduce_options& opts = {});

// Scans a copy of g for any applicable rule; returns its tag. nullopt means
// g is a fixpoint under the enabled rules.
std::optional<std::string> find_applicable_rule(const graph& g, rule_mask disabled = 0);

// Applies a recorded trace to a copy of the pre-reduction graph.
graph replay_trace(const graph& original, std::span<const reduction_event> trace);

// Reverse-replays the trace, deciding each removed or folded vertex by its
// lift clause, and returns a feasible solution of the original graph with
// net_benefit(original) == net_benefit(kernel, kernel_solution) + offset.
solution lift_solution(const kernel_result& kr, std::span<const vertex_id> kernel_solution,
                       const graph& original);

}  // namespace gis
