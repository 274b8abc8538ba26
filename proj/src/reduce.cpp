#include "gis/reduce.hpp"

#include <algorithm>
#include <functional>

namespace gis {

namespace {

std::uint64_t edge_key(vertex_id u, vertex_id v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

reduction_engine::reduction_engine(graph& g, reduce_options opts) : g_(g), opts_(opts) {
    std::size_t n = g_.vertex_count();
    for (int i = 3; i <= 11; ++i) vq_[i].in.assign(n, 0);
    mark_.assign(n, 0);

    for (vertex_id v = 0; v < n; ++v) {
        if (!g_.alive(v)) continue;
        for (int i = 3; i <= 11; ++i)
            if (rule_on(i)) enqueue_vertex(i, v);
        if (rule_on(14)) twin_refresh(v);
        g_.for_removable(v, [&](vertex_id x, benefit) {
            if (v < x) {
                if (rule_on(1)) enqueue_edge(1, v, x);
                if (rule_on(2)) enqueue_edge(2, v, x);
            }
        });
        g_.for_permanent(v, [&](vertex_id x) {
            if (v < x) {
                if (rule_on(12)) enqueue_edge(12, v, x);
                if (rule_on(13)) enqueue_edge(13, v, x);
            }
        });
    }
}

void reduction_engine::enqueue_vertex(int qi, vertex_id v) {
    auto& q = vq_[qi];
    if (v >= q.in.size()) q.in.resize(g_.vertex_count(), 0);
    if (q.in[v]) return;
    q.in[v] = 1;
    q.heap.push(v);
}

void reduction_engine::enqueue_edge(int qi, vertex_id u, vertex_id v) {
    edge_queue& q = qi == 1 ? eq1_ : qi == 2 ? eq2_ : qi == 12 ? eq12_ : eq13_;
    std::uint64_t k = edge_key(u, v);
    if (q.in.insert(k).second) q.heap.push(k);
}

std::optional<rule_effect> reduction_engine::dispatch(int i, std::uint64_t elem) {
    vertex_id u = static_cast<vertex_id>(elem >> 32);
    vertex_id v = static_cast<vertex_id>(elem & 0xffffffffu);
    switch (i) {
        case 1: return try_rule_1(g_, u, v);
        case 2: return try_rule_2(g_, u, v);
        case 3: return try_rule_3(g_, v);
        case 4: return try_rule_4(g_, v);
        case 5: return try_rule_5(g_, v);
        case 6: return try_rule_6(g_, v);
        case 7: return try_rule_7(g_, v);
        case 8: return try_rule_8(g_, v);
        case 9: return try_rule_9(g_, v);
        case 10: return try_rule_10(g_, v);
        case 11: return try_rule_11(g_, v);
        case 12: return try_rule_12(g_, u, v);
        case 13: return try_rule_13(g_, u, v);
        default: throw internal_error("bad rule index");
    }
}

bool reduction_engine::step() {
    for (int i = 1; i <= 14; ++i) {
        if (!rule_on(i)) continue;
        if (i == 14) {
            if (twin_step()) return true;
            continue;
        }
        if (i == 1 || i == 2 || i == 12 || i == 13) {
            edge_queue& q = i == 1 ? eq1_ : i == 2 ? eq2_ : i == 12 ? eq12_ : eq13_;
            while (!q.heap.empty()) {
                std::uint64_t k = q.heap.top();
                q.heap.pop();
                q.in.erase(k);
                if (auto eff = dispatch(i, k)) {
                    post_event(std::move(*eff));
                    return true;
                }
            }
        } else {
            vertex_queue& q = vq_[i];
            while (!q.heap.empty()) {
                vertex_id v = q.heap.top();
                q.heap.pop();
                q.in[v] = 0;
                if (auto eff = dispatch(i, v)) {
                    post_event(std::move(*eff));
                    return true;
                }
            }
        }
    }
    return false;
}

void reduction_engine::run() {
    while (step()) {
        if (g_.compaction_due()) g_.compact();
    }
}

void reduction_engine::post_event(rule_effect&& eff) {
    offset_ += eff.event.offset_delta;
    for (const lift_entry& l : eff.event.lifts)
        if (l.kind == lift_kind::fold_pair) fold_parents_[l.vertex] = {l.a, l.b};
    for (const lift_entry& l : eff.event.lifts)
        if (l.kind == lift_kind::always_in) expand_fold(l.vertex, new_forced_);
    // twin index: removed vertices leave, touched vertices re-bucket
    if (rule_on(14)) {
        for (const removed_vertex& r : eff.event.removed) twin_drop(r.v);
    }
    requeue_around(eff.touched, eff.edited_rem_edges);
    if (opts_.record_trace) trace_.push_back(std::move(eff.event));
}

void reduction_engine::requeue_around(const std::vector<vertex_id>& touched,
                                      const std::vector<std::pair<vertex_id, vertex_id>>& edited_rem) {
    if (mark_.size() < g_.vertex_count()) mark_.resize(g_.vertex_count(), 0);

    // T: alive touched, deduplicated
    ++stamp_;
    scratch_.clear();
    for (vertex_id v : touched) {
        if (!g_.alive(v) || mark_[v] == stamp_) continue;
        mark_[v] = stamp_;
        scratch_.push_back(v);
    }
    std::vector<vertex_id> tset = scratch_;

    for (vertex_id v : tset) {
        if (rule_on(5)) enqueue_vertex(5, v);
        if (rule_on(14)) twin_refresh(v);
        if (rule_on(2))
            g_.for_removable(v, [&](vertex_id x, benefit) { enqueue_edge(2, v, x); });
    }

    // U = T plus alive neighbors of T
    std::vector<vertex_id> uset = tset;
    for (vertex_id v : tset) {
        g_.for_permanent(v, [&](vertex_id x) {
            if (mark_[x] != stamp_) {
                mark_[x] = stamp_;
                uset.push_back(x);
            }
        });
        g_.for_removable(v, [&](vertex_id x, benefit) {
            if (mark_[x] != stamp_) {
                mark_[x] = stamp_;
                uset.push_back(x);
            }
        });
    }

    for (vertex_id v : uset) {
        for (int i : {3, 4, 6, 7, 8, 9, 10, 11})
            if (rule_on(i)) enqueue_vertex(i, v);
        if (rule_on(12) || rule_on(13)) {
            g_.for_permanent(v, [&](vertex_id x) {
                if (rule_on(12)) enqueue_edge(12, v, x);
                if (rule_on(13)) enqueue_edge(13, v, x);
            });
        }
    }

    if (rule_on(1)) {
        for (auto [u, v] : edited_rem)
            if (g_.alive(u) && g_.alive(v) && g_.has_removable_edge(u, v)) enqueue_edge(1, u, v);
    }
}

void reduction_engine::peel_vertex(vertex_id u) {
    std::vector<vertex_id> touched = g_.permanent_neighbors(u);
    g_.for_removable(u, [&](vertex_id x, benefit) { touched.push_back(x); });
    if (rule_on(14)) twin_drop(u);
    g_.remove_vertex(u);
    requeue_around(touched, {});
    if (g_.compaction_due()) g_.compact();
}

std::vector<vertex_id> reduction_engine::take_new_forced() {
    std::vector<vertex_id> out = std::move(new_forced_);
    new_forced_.clear();
    return out;
}

void reduction_engine::expand_fold(vertex_id v, std::vector<vertex_id>& out) const {
    auto it = fold_parents_.find(v);
    if (it == fold_parents_.end()) {
        out.push_back(v);
        return;
    }
    expand_fold(it->second.first, out);
    expand_fold(it->second.second, out);
}

// --- twin index -----------------------------------------------------------

void reduction_engine::twin_update_head(const std::vector<vertex_id>& key) {
    auto it = twin_buckets_.find(key);
    if (it == twin_buckets_.end()) return;
    twin_bucket& b = it->second;
    if (b.registered) {
        twin_heads_.erase(b.head);
        b.registered = false;
    }
    if (b.members.size() >= 2) {
        auto mi = b.members.begin();
        vertex_id a = *mi++;
        vertex_id c = *mi;
        b.head = {a, c};
        b.registered = true;
        twin_heads_[b.head] = key;
    }
    if (b.members.empty()) twin_buckets_.erase(it);
}

void reduction_engine::twin_drop(vertex_id v) {
    auto it = twin_key_of_.find(v);
    if (it == twin_key_of_.end()) return;
    std::vector<vertex_id> key = std::move(it->second);
    twin_key_of_.erase(it);
    auto bit = twin_buckets_.find(key);
    if (bit != twin_buckets_.end()) {
        bit->second.members.erase(v);
        twin_update_head(key);
    }
}

void reduction_engine::twin_refresh(vertex_id v) {
    if (!g_.alive(v) || !twin_eligible(g_, v)) {
        twin_drop(v);
        return;
    }
    std::vector<vertex_id> key = g_.permanent_neighbors(v);
    auto it = twin_key_of_.find(v);
    if (it != twin_key_of_.end()) {
        if (it->second == key) return;  // bucket unchanged
        twin_drop(v);
    }
    twin_buckets_[key].members.insert(v);
    twin_key_of_[v] = std::move(key);
    twin_update_head(twin_key_of_[v]);
}

bool reduction_engine::twin_step() {
    while (!twin_heads_.empty()) {
        auto [pair, key] = *twin_heads_.begin();
        auto eff = try_rule_14(g_, pair.first, pair.second);
        if (!eff) throw internal_error("twin index out of sync");
        post_event(std::move(*eff));
        return true;
    }
    return false;
}

// --- drivers ---------------------------------------------------------------

namespace {

kernel_result finish_result(graph&& g, reduction_engine& e, std::size_t n0) {
    kernel_result kr;
    kr.offset = e.offset();
    kr.trace = std::move(e.trace());
    kr.original_vertex_count = n0;
    std::vector<vertex_id> forced = e.take_new_forced();
    std::sort(forced.begin(), forced.end());
    forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
    kr.forced = std::move(forced);
    g.compact();
    kr.kernel = std::move(g);
    return kr;
}

// Canonical full scan: first applicable (rule, element) in rule order then
// element order. Shared by the naive driver and the fixpoint checker.
std::optional<rule_effect> scan_step(graph& g, rule_mask disabled) {
    std::size_t n = g.vertex_count();
    for (int i = 1; i <= 14; ++i) {
        if (rule_disabled(disabled, i)) continue;
        if (i == 1 || i == 2) {
            for (vertex_id u = 0; u < n; ++u) {
                if (!g.alive(u)) continue;
                for (const rem_entry& e : g.removable_neighbors(u)) {
                    if (e.to < u) continue;
                    auto eff = i == 1 ? try_rule_1(g, u, e.to) : try_rule_2(g, u, e.to);
                    if (eff) return eff;
                }
            }
        } else if (i == 12 || i == 13) {
            for (vertex_id u = 0; u < n; ++u) {
                if (!g.alive(u)) continue;
                for (vertex_id x : g.permanent_neighbors(u)) {
                    if (x < u) continue;
                    auto eff = i == 12 ? try_rule_12(g, u, x) : try_rule_13(g, u, x);
                    if (eff) return eff;
                }
            }
        } else if (i == 14) {
            // smallest head pair over exact permanent-neighborhood buckets
            std::map<std::vector<vertex_id>, vertex_id> first_eligible;
            std::pair<vertex_id, vertex_id> best{no_vertex, no_vertex};
            for (vertex_id v = 0; v < n; ++v) {
                if (!g.alive(v) || !twin_eligible(g, v)) continue;
                auto key = g.permanent_neighbors(v);
                auto [it, fresh] = first_eligible.try_emplace(std::move(key), v);
                if (!fresh) {
                    if (best.first == no_vertex || std::make_pair(it->second, v) < best)
                        best = {it->second, v};
                    // keep the smallest member as the bucket head
                }
            }
            if (best.first != no_vertex) {
                auto eff = try_rule_14(g, best.first, best.second);
                if (!eff) throw internal_error("twin scan out of sync");
                return eff;
            }
        } else {
            for (vertex_id v = 0; v < n; ++v) {
                std::optional<rule_effect> eff;
                switch (i) {
                    case 3: eff = try_rule_3(g, v); break;
                    case 4: eff = try_rule_4(g, v); break;
                    case 5: eff = try_rule_5(g, v); break;
                    case 6: eff = try_rule_6(g, v); break;
                    case 7: eff = try_rule_7(g, v); break;
                    case 8: eff = try_rule_8(g, v); break;
                    case 9: eff = try_rule_9(g, v); break;
                    case 10: eff = try_rule_10(g, v); break;
                    case 11: eff = try_rule_11(g, v); break;
                }
                if (eff) return eff;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

kernel_result complete_reduction(const graph& g, const reduce_options& opts) {
    graph work = g;
    reduction_engine e(work, opts);
    e.run();
    return finish_result(std::move(work), e, g.vertex_count());
}

kernel_result complete_reduction_naive(const graph& g, const reduce_options& opts) {
    graph work = g;
    kernel_result kr;
    kr.original_vertex_count = g.vertex_count();
    kr.offset = benefit(0);
    std::unordered_map<vertex_id, std::pair<vertex_id, vertex_id>> fold_parents;
    std::vector<vertex_id> forced;

    std::function<void(vertex_id)> expand = [&](vertex_id v) {
        auto it = fold_parents.find(v);
        if (it == fold_parents.end()) {
            forced.push_back(v);
            return;
        }
        expand(it->second.first);
        expand(it->second.second);
    };

    while (auto eff = scan_step(work, opts.disabled)) {
        kr.offset += eff->event.offset_delta;
        for (const lift_entry& l : eff->event.lifts) {
            if (l.kind == lift_kind::fold_pair) fold_parents[l.vertex] = {l.a, l.b};
            if (l.kind == lift_kind::always_in) expand(l.vertex);
        }
        if (opts.record_trace) kr.trace.push_back(std::move(eff->event));
    }
    std::sort(forced.begin(), forced.end());
    forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
    kr.forced = std::move(forced);
    work.compact();
    kr.kernel = std::move(work);
    return kr;
}

std::optional<std::string> find_applicable_rule(const graph& g, rule_mask disabled) {
    graph copy = g;
    if (auto eff = scan_step(copy, disabled)) return eff->event.tag();
    return std::nullopt;
}

graph replay_trace(const graph& original, std::span<const reduction_event> trace) {
    graph g = original;
    for (const reduction_event& ev : trace) replay_event(g, ev);
    g.compact();
    return g;
}

solution lift_solution(const kernel_result& kr, std::span<const vertex_id> kernel_solution,
                       const graph& original) {
    for (vertex_id v : kernel_solution)
        if (!kr.kernel.alive(v)) throw invalid_input("kernel solution uses a reduced vertex");
    if (!is_generalized_independent(kr.kernel, kernel_solution))
        throw invalid_input("kernel solution is not generalized independent");
    benefit kernel_nb = net_benefit(kr.kernel, kernel_solution);

    std::unordered_set<vertex_id> in(kernel_solution.begin(), kernel_solution.end());
    for (auto it = kr.trace.rbegin(); it != kr.trace.rend(); ++it) {
        for (const lift_entry& l : it->lifts) {
            switch (l.kind) {
                case lift_kind::fold_pair:
                    if (in.erase(l.vertex)) {
                        in.insert(l.a);
                        in.insert(l.b);
                    }
                    break;
                case lift_kind::always_in:
                    in.insert(l.vertex);
                    break;
                case lift_kind::never_in:
                    break;
                case lift_kind::in_iff_out:
                    if (!in.count(l.a)) in.insert(l.vertex);
                    break;
                case lift_kind::in_iff_in:
                    if (in.count(l.a)) in.insert(l.vertex);
                    break;
                case lift_kind::in_iff_both_out:
                    if (!in.count(l.a) && !in.count(l.b)) in.insert(l.vertex);
                    break;
                case lift_kind::in_iff_both_in:
                    if (in.count(l.a) && in.count(l.b)) in.insert(l.vertex);
                    break;
                case lift_kind::in_iff_any_out:
                    if (!in.count(l.a) || !in.count(l.b)) in.insert(l.vertex);
                    break;
                case lift_kind::in_iff_any_in:
                    if (in.count(l.a) || in.count(l.b)) in.insert(l.vertex);
                    break;
                case lift_kind::in_iff_a_out_b_in:
                    if (!in.count(l.a) && in.count(l.b)) in.insert(l.vertex);
                    break;
                case lift_kind::in_iff_a_out_or_b_in:
                    if (!in.count(l.a) || in.count(l.b)) in.insert(l.vertex);
                    break;
            }
        }
    }

    std::vector<vertex_id> members(in.begin(), in.end());
    std::sort(members.begin(), members.end());
    for (vertex_id v : members)
        if (v >= kr.original_vertex_count)
            throw internal_error("lift left a folded vertex undecided");
    if (!is_generalized_independent(original, members))
        throw internal_error("lifted solution violates a permanent edge");
    benefit nb = net_benefit(original, members);
    if (nb != kernel_nb + kr.offset)
        throw internal_error("lifted net benefit does not match kernel value plus offset");
    return solution{std::move(members), nb};
}

}  // namespace gis
