#include "gis/rules.hpp"

#include <algorithm>

namespace gis {

namespace {

// Records graph mutations into a reduction_event while applying them, so a
// forward replay of the event reproduces the post-state by construction.
class event_builder {
public:
    event_builder(graph& g, rule r, std::uint8_t major = 0, std::uint8_t minor = 0) : g_(g) {
        eff_.event.r = r;
        eff_.event.case_major = major;
        eff_.event.case_minor = minor;
    }

    void set_case(std::uint8_t major, std::uint8_t minor) {
        eff_.event.case_major = major;
        eff_.event.case_minor = minor;
    }

    void weight(vertex_id v, benefit delta) {
        if (delta.zero()) return;
        g_.add_profit(v, delta);
        eff_.event.weight_deltas.push_back({v, delta});
        touch(v);
    }

    void rem_delete(vertex_id u, vertex_id v) {
        g_.delete_removable_edge(u, v);
        eff_.event.edge_edits.push_back({u, v, edge_edit_kind::rem_delete, benefit(0)});
        touch(u);
        touch(v);
    }

    void rem_to_perm(vertex_id u, vertex_id v) {
        g_.removable_to_permanent(u, v);
        eff_.event.edge_edits.push_back({u, v, edge_edit_kind::rem_to_perm, benefit(0)});
        touch(u);
        touch(v);
    }

    void rem_insert(vertex_id u, vertex_id v, benefit p) {
        g_.add_removable_edge(u, v, p);
        eff_.event.edge_edits.push_back({u, v, edge_edit_kind::rem_insert, p});
        eff_.edited_rem_edges.emplace_back(u, v);
        touch(u);
        touch(v);
    }

    void rem_penalty_add(vertex_id u, vertex_id v, benefit delta) {
        if (delta.zero()) return;
        benefit p = *g_.removable_penalty(u, v) + delta;
        g_.set_penalty(u, v, p);
        eff_.event.edge_edits.push_back({u, v, edge_edit_kind::rem_penalty_delta, delta});
        eff_.edited_rem_edges.emplace_back(u, v);
        touch(u);
        touch(v);
    }

    // Merge penalty delta into {u,v}, creating the edge when absent (the
    // absent pair counts as penalty zero). Zero-penalty edges are never
    // created; existing edges updated to zero stay and feed R1.
    void rem_upsert(vertex_id u, vertex_id v, benefit delta) {
        if (g_.has_removable_edge(u, v))
            rem_penalty_add(u, v, delta);
        else if (!delta.zero())
            rem_insert(u, v, delta);
    }

    void remove(vertex_id v, lift_kind kind, vertex_id a = no_vertex, vertex_id b = no_vertex) {
        remove_recorded(v);
        eff_.event.lifts.push_back({v, kind, a, b});
    }

    // Removal whose membership is decided by a fold entry, not its own lift.
    void remove_for_fold(vertex_id v) { remove_recorded(v); }

    vertex_id fold(benefit profit, std::vector<vertex_id> perm, std::vector<rem_entry> rem,
                   vertex_id parent_a, vertex_id parent_b) {
        vertex_id id = g_.add_vertex(profit);
        for (vertex_id x : perm) {
            g_.add_permanent_edge(id, x);
            touch(x);
        }
        for (const rem_entry& e : rem) {
            g_.add_removable_edge(id, e.to, e.penalty);
            eff_.edited_rem_edges.emplace_back(id, e.to);
            touch(e.to);
        }
        touch(id);
        eff_.event.fold = fold_creation{id, profit, std::move(perm), std::move(rem)};
        eff_.event.lifts.push_back({id, lift_kind::fold_pair, parent_a, parent_b});
        return id;
    }

    void offset(benefit d) { eff_.event.offset_delta += d; }

    rule_effect finish() { return std::move(eff_); }

private:
    void remove_recorded(vertex_id v) {
        removed_vertex rec;
        rec.v = v;
        rec.profit = g_.profit(v);
        rec.perm = g_.permanent_neighbors(v);
        rec.rem = g_.removable_neighbors(v);
        for (vertex_id x : rec.perm) touch(x);
        for (const rem_entry& e : rec.rem) touch(e.to);
        g_.remove_vertex(v);
        eff_.event.removed.push_back(std::move(rec));
    }

    void touch(vertex_id v) {
        if (g_.alive(v)) eff_.touched.push_back(v);
    }

    graph& g_;
    rule_effect eff_;
};

benefit sum_pos_rem_penalties(const graph& g, vertex_id u) {
    benefit t(0);
    g.for_removable(u, [&](vertex_id, benefit p) { t += pos_part(p); });
    return t;
}

benefit sum_neg_rem_penalties(const graph& g, vertex_id u) {
    benefit t(0);
    g.for_removable(u, [&](vertex_id, benefit p) { t += neg_part(p); });
    return t;
}

// w+(N(u)) <= bound, bailing out as soon as the growing sum exceeds it.
bool wplus_neighbors_at_most(const graph& g, vertex_id u, benefit bound, bool perm_only) {
    benefit t(0);
    if (!g.for_permanent_while(u, [&](vertex_id x) {
            t += pos_part(tilde_w(g, x));
            return t <= bound;
        }))
        return false;
    if (!perm_only &&
        !g.for_removable_while(u, [&](vertex_id x, benefit) {
            t += pos_part(tilde_w(g, x));
            return t <= bound;
        }))
        return false;
    return t <= bound;
}

// Include u into every-optimal bookkeeping: u forced, N_p[u] deleted, each
// removable neighbor pays its penalty forward. Shared by R3, R4, R6.
rule_effect include_vertex(graph& g, vertex_id u, rule r) {
    event_builder b(g, r);
    auto rems = g.removable_neighbors(u);
    auto perms = g.permanent_neighbors(u);
    for (const rem_entry& e : rems) b.weight(e.to, -e.penalty);
    b.offset(g.profit(u));
    b.remove(u, lift_kind::always_in);
    for (vertex_id x : perms) b.remove(x, lift_kind::never_in);
    return b.finish();
}

// Finite-or-infinite penalty: permanent edges behave as +infinity in the
// degree-two case analysis, realized structurally.
struct ext_pen {
    bool inf;
    benefit val;  // meaningful only when !inf
};

ext_pen pen_of(const graph& g, vertex_id u, vertex_id v) {
    if (auto p = g.removable_penalty(u, v)) return {false, *p};
    return {true, benefit(0)};  // degree-two callers only query actual neighbors
}

bool ge_pen(benefit w, const ext_pen& p) { return !p.inf && w >= p.val; }
// w >= p(u,x) + p(u,y)
bool ge_pen_sum(benefit w, const ext_pen& a, const ext_pen& b) {
    return !a.inf && !b.inf && w >= a.val + b.val;
}

}  // namespace

std::optional<rule_effect> try_rule_1(graph& g, vertex_id u, vertex_id v) {
    if (!g.alive(u) || !g.alive(v)) return std::nullopt;
    auto p = g.removable_penalty(u, v);
    if (!p || !p->zero()) return std::nullopt;
    event_builder b(g, rule::edge_removal);
    b.rem_delete(u, v);
    return b.finish();
}

std::optional<rule_effect> try_rule_2(graph& g, vertex_id u, vertex_id v) {
    if (!g.alive(u) || !g.alive(v)) return std::nullopt;
    auto p = g.removable_penalty(u, v);
    if (!p) return std::nullopt;
    if (*p <= min(tilde_w(g, u), tilde_w(g, v))) return std::nullopt;
    event_builder b(g, rule::edge_penalty);
    b.rem_to_perm(u, v);
    return b.finish();
}

std::optional<rule_effect> try_rule_3(graph& g, vertex_id u) {
    if (!g.alive(u)) return std::nullopt;
    if (!wplus_neighbors_at_most(g, u, g.profit(u), false)) return std::nullopt;
    return include_vertex(g, u, rule::neighborhood_weight);
}

std::optional<rule_effect> try_rule_4(graph& g, vertex_id u) {
    if (!g.alive(u)) return std::nullopt;
    benefit bound = g.profit(u) - sum_pos_rem_penalties(g, u);
    if (!wplus_neighbors_at_most(g, u, bound, true)) return std::nullopt;
    return include_vertex(g, u, rule::neighborhood_penalty);
}

std::optional<rule_effect> try_rule_5(graph& g, vertex_id u) {
    if (!g.alive(u)) return std::nullopt;
    if (!g.profit(u).negative()) return std::nullopt;
    if (sum_neg_rem_penalties(g, u) <= g.profit(u)) return std::nullopt;
    event_builder b(g, rule::negative_profit);
    b.remove(u, lift_kind::never_in);
    return b.finish();
}

std::optional<rule_effect> try_rule_6(graph& g, vertex_id u) {
    if (!g.alive(u)) return std::nullopt;
    benefit slack = g.profit(u) - sum_pos_rem_penalties(g, u);
    if (slack.negative()) return std::nullopt;
    auto perms = g.permanent_neighbors(u);
    benefit bar(0);
    for (vertex_id x : perms) bar = max(bar, tilde_w(g, x));
    if (slack < pos_part(bar)) return std::nullopt;
    for (std::size_t i = 0; i < perms.size(); ++i)
        for (std::size_t j = i + 1; j < perms.size(); ++j)
            if (!g.has_permanent_edge(perms[i], perms[j])) return std::nullopt;
    return include_vertex(g, u, rule::clique);
}

std::optional<rule_effect> try_rule_7(graph& g, vertex_id u) {
    if (!g.alive(u) || g.degree(u) != 1) return std::nullopt;
    const benefit w = g.profit(u);
    if (g.removable_degree(u) == 1) {
        rem_entry e = g.removable_neighbors(u)[0];
        vertex_id v = e.to;
        if (w >= e.penalty) {
            // Case 1: removable pendant worth its penalty
            if (!w.negative()) {
                event_builder b(g, rule::degree_one, 1, 1);
                b.weight(v, -e.penalty);
                b.offset(w);
                b.remove(u, lift_kind::always_in);
                return b.finish();
            }
            event_builder b(g, rule::degree_one, 1, 2);
            b.weight(v, w - e.penalty);
            b.remove(u, lift_kind::in_iff_in, v);
            return b.finish();
        }
    }
    // Case 2: permanent pendant, or removable with w(u) below the penalty
    vertex_id v = g.permanent_degree(u) == 1 ? g.permanent_neighbors(u)[0]
                                             : g.removable_neighbors(u)[0].to;
    if (!w.negative()) {
        if (w >= tilde_w(g, v)) {
            event_builder b(g, rule::degree_one, 2, 1);
            b.offset(w);
            b.remove(u, lift_kind::always_in);
            b.remove(v, lift_kind::never_in);
            return b.finish();
        }
        event_builder b(g, rule::degree_one, 2, 2);
        b.weight(v, -w);
        b.offset(w);
        b.remove(u, lift_kind::in_iff_out, v);
        return b.finish();
    }
    event_builder b(g, rule::degree_one, 2, 3);
    b.remove(u, lift_kind::never_in);
    return b.finish();
}

std::optional<rule_effect> try_rule_8(graph& g, vertex_id u) {
    if (!g.alive(u) || g.degree(u) != 2) return std::nullopt;
    vertex_id x = no_vertex, y = no_vertex;
    g.for_permanent(u, [&](vertex_id t) { (x == no_vertex ? x : y) = t; });
    g.for_removable(u, [&](vertex_id t, benefit) { (x == no_vertex ? x : y) = t; });
    if (!g.has_permanent_edge(x, y)) return std::nullopt;

    const benefit w = g.profit(u);
    ext_pen px = pen_of(g, u, x);
    ext_pen py = pen_of(g, u, y);

    if (ge_pen(w, px) && ge_pen(w, py)) {
        // Case 1: w(u) covers both penalties
        if (!w.negative()) {
            event_builder b(g, rule::degree_two_perm, 1, 1);
            b.weight(x, -px.val);
            b.weight(y, -py.val);
            b.offset(w);
            b.remove(u, lift_kind::always_in);
            return b.finish();
        }
        event_builder b(g, rule::degree_two_perm, 1, 2);
        b.weight(x, w - px.val);
        b.weight(y, w - py.val);
        b.remove(u, lift_kind::in_iff_any_in, x, y);
        return b.finish();
    }
    if (ge_pen(w, px) || ge_pen(w, py)) {
        // Case 2: exactly one penalty exceeds w(u); x takes that role
        if (ge_pen(w, px)) {
            std::swap(x, y);
            std::swap(px, py);
        }
        if (!w.negative()) {
            if (w >= tilde_w(g, x)) {
                event_builder b(g, rule::degree_two_perm, 2, 1);
                b.weight(y, -py.val);
                b.offset(w);
                b.remove(u, lift_kind::always_in);
                b.remove(x, lift_kind::never_in);
                return b.finish();
            }
            event_builder b(g, rule::degree_two_perm, 2, 2);
            b.weight(x, -w);
            b.weight(y, -py.val);
            b.offset(w);
            b.remove(u, lift_kind::in_iff_out, x);
            return b.finish();
        }
        event_builder b(g, rule::degree_two_perm, 2, 3);
        b.weight(y, w - py.val);
        b.remove(u, lift_kind::in_iff_in, y);
        return b.finish();
    }
    // Case 3: both penalties exceed w(u); order by tilde weight, ties by id
    {
        benefit tx = tilde_w(g, x), ty = tilde_w(g, y);
        if (ty > tx || (ty == tx && y < x)) {
            std::swap(x, y);
            std::swap(tx, ty);
        }
        if (!w.negative()) {
            if (w >= tx) {
                event_builder b(g, rule::degree_two_perm, 3, 1);
                b.offset(w);
                b.remove(u, lift_kind::always_in);
                b.remove(x, lift_kind::never_in);
                b.remove(y, lift_kind::never_in);
                return b.finish();
            }
            if (w >= ty) {
                event_builder b(g, rule::degree_two_perm, 3, 2);
                b.weight(x, -w);
                b.offset(w);
                b.remove(u, lift_kind::in_iff_out, x);
                b.remove(y, lift_kind::never_in);
                return b.finish();
            }
            event_builder b(g, rule::degree_two_perm, 3, 3);
            b.weight(x, -w);
            b.weight(y, -w);
            b.offset(w);
            b.remove(u, lift_kind::in_iff_both_out, x, y);
            return b.finish();
        }
        event_builder b(g, rule::degree_two_perm, 3, 4);
        b.remove(u, lift_kind::never_in);
        return b.finish();
    }
}

std::optional<rule_effect> try_rule_9(graph& g, vertex_id u) {
    if (!g.alive(u) || g.degree(u) != 2) return std::nullopt;
    vertex_id x = no_vertex, y = no_vertex;
    g.for_permanent(u, [&](vertex_id t) { (x == no_vertex ? x : y) = t; });
    g.for_removable(u, [&](vertex_id t, benefit) { (x == no_vertex ? x : y) = t; });
    if (g.has_permanent_edge(x, y)) return std::nullopt;

    const benefit w = g.profit(u);
    ext_pen px = pen_of(g, u, x);
    ext_pen py = pen_of(g, u, y);
    // x carries the larger penalty; ties resolve to the smaller id
    bool x_bigger = px.inf || (!py.inf && (px.val > py.val || (px.val == py.val && x < y)));
    if (!x_bigger) {
        std::swap(x, y);
        std::swap(px, py);
    }

    if (ge_pen(w, px)) {
        // Case 1: w(u) >= p(u,x) >= p(u,y)
        if (!w.negative()) {
            if (ge_pen_sum(w, px, py)) {
                event_builder b(g, rule::degree_two_nonperm, 1, 1);
                b.weight(x, -px.val);
                b.weight(y, -py.val);
                b.offset(w);
                b.remove(u, lift_kind::always_in);
                return b.finish();
            }
            event_builder b(g, rule::degree_two_nonperm, 1, 2);
            b.weight(x, -px.val);
            b.weight(y, -py.val);
            b.offset(w);
            b.remove(u, lift_kind::in_iff_any_out, x, y);
            b.rem_upsert(x, y, w - px.val - py.val);
            return b.finish();
        }
        event_builder b(g, rule::degree_two_nonperm, 1, 3);
        b.weight(x, w - px.val);
        b.weight(y, w - py.val);
        b.remove(u, lift_kind::in_iff_any_in, x, y);
        b.rem_upsert(x, y, w);
        return b.finish();
    }
    if (ge_pen(w, py)) {
        // Case 2: p(u,x) > w(u) >= p(u,y)
        if (!w.negative()) {
            if (ge_pen_sum(w, px, py)) {
                event_builder b(g, rule::degree_two_nonperm, 2, 1);
                b.weight(y, -py.val);
                b.weight(x, -w);
                b.offset(w);
                b.remove(u, lift_kind::in_iff_a_out_or_b_in, x, y);
                b.rem_upsert(x, y, px.val - w);
                return b.finish();
            }
            event_builder b(g, rule::degree_two_nonperm, 2, 2);
            b.weight(y, -py.val);
            b.weight(x, -w);
            b.offset(w);
            b.remove(u, lift_kind::in_iff_out, x);
            b.rem_upsert(x, y, -py.val);
            return b.finish();
        }
        if (ge_pen_sum(w, px, py)) {
            event_builder b(g, rule::degree_two_nonperm, 2, 3);
            b.weight(y, w - py.val);
            b.remove(u, lift_kind::in_iff_in, y);
            b.rem_upsert(x, y, px.val);
            return b.finish();
        }
        event_builder b(g, rule::degree_two_nonperm, 2, 4);
        b.weight(y, w - py.val);
        b.remove(u, lift_kind::in_iff_a_out_b_in, x, y);
        b.rem_upsert(x, y, w - py.val);
        return b.finish();
    }
    // Case 3: p(u,y) > w(u) as well
    if (!w.negative()) {
        event_builder b(g, rule::degree_two_nonperm, 3, 1);
        b.weight(x, -w);
        b.weight(y, -w);
        b.offset(w);
        b.remove(u, lift_kind::in_iff_both_out, x, y);
        b.rem_upsert(x, y, -w);
        return b.finish();
    }
    if (!ge_pen_sum(w, px, py)) {
        event_builder b(g, rule::degree_two_nonperm, 3, 2);
        b.remove(u, lift_kind::never_in);
        return b.finish();
    }
    event_builder b(g, rule::degree_two_nonperm, 3, 3);
    b.remove(u, lift_kind::in_iff_both_in, x, y);
    b.rem_upsert(x, y, px.val + py.val - w);
    return b.finish();
}

namespace {

// Rewire u's removable edges onto survivor x with penalty merging; pairs
// already joined to x by a permanent edge are skipped.
void merge_removable_onto(event_builder& b, const graph& g, vertex_id x,
                          const std::vector<rem_entry>& rems) {
    for (const rem_entry& e : rems) {
        if (e.to == x || g.has_permanent_edge(x, e.to)) continue;
        b.rem_upsert(x, e.to, -e.penalty);
    }
}

}  // namespace

std::optional<rule_effect> try_rule_10(graph& g, vertex_id u) {
    if (!g.alive(u) || g.permanent_degree(u) != 1) return std::nullopt;
    if (g.profit(u) < sum_pos_rem_penalties(g, u)) return std::nullopt;
    vertex_id x = g.permanent_neighbors(u)[0];
    auto rems = g.removable_neighbors(u);
    event_builder b(g, rule::perm_degree_one);
    b.weight(x, -g.profit(u));
    for (const rem_entry& e : rems) b.weight(e.to, -e.penalty);
    merge_removable_onto(b, g, x, rems);
    b.offset(g.profit(u));
    b.remove(u, lift_kind::in_iff_out, x);
    return b.finish();
}

std::optional<rule_effect> try_rule_11(graph& g, vertex_id u) {
    if (!g.alive(u) || g.permanent_degree(u) != 2) return std::nullopt;
    auto perms = g.permanent_neighbors(u);
    vertex_id x = perms[0], y = perms[1];
    if (!g.has_permanent_edge(x, y)) return std::nullopt;
    const benefit w = g.profit(u);
    if (w < sum_pos_rem_penalties(g, u)) return std::nullopt;
    benefit tx = tilde_w(g, x), ty = tilde_w(g, y);
    if (ty > tx || (ty == tx && y < x)) {
        std::swap(x, y);
        std::swap(tx, ty);
    }
    auto rems = g.removable_neighbors(u);
    // Case selection compares the *effective* weight of u, its profit minus
    // the positive penalties it would drag along. Swapping a neighbor out
    // for u is only safe against that margin; with no removable neighbors
    // this coincides with w(u). The offsets and weight updates keep w(u).
    const benefit eff = w - sum_pos_rem_penalties(g, u);

    if (eff >= tx) {
        event_builder b(g, rule::perm_degree_two, 1);
        for (const rem_entry& e : rems) b.weight(e.to, -e.penalty);
        b.offset(w);
        b.remove(u, lift_kind::always_in);
        b.remove(x, lift_kind::never_in);
        b.remove(y, lift_kind::never_in);
        return b.finish();
    }
    if (eff >= ty) {
        event_builder b(g, rule::perm_degree_two, 2);
        b.weight(x, -w);
        for (const rem_entry& e : rems) b.weight(e.to, -e.penalty);
        merge_removable_onto(b, g, x, rems);
        b.offset(w);
        b.remove(u, lift_kind::in_iff_out, x);
        b.remove(y, lift_kind::never_in);
        return b.finish();
    }
    event_builder b(g, rule::perm_degree_two, 3);
    b.weight(x, -w);
    b.weight(y, -w);
    for (const rem_entry& e : rems) b.weight(e.to, -e.penalty);
    merge_removable_onto(b, g, x, rems);
    merge_removable_onto(b, g, y, rems);
    b.offset(w);
    b.remove(u, lift_kind::in_iff_both_out, x, y);
    return b.finish();
}

namespace {

bool rule_12_condition(const graph& g, vertex_id u, vertex_id v) {
    // w(u) >= tilde_w(v) + w+(N_p(u)\N_p[v]) + min(w+(N_r(u)\N_p(v)),
    //         sum of positive penalties of N_r(u)\N_p(v)).
    // Every term after tilde_w(v) is nonnegative and accumulates
    // monotonically, so the check can bail out as soon as it fails.
    const benefit w = g.profit(u);
    benefit rhs = tilde_w(g, v);
    if (rhs > w) return false;
    bool ok = g.for_permanent_while(u, [&](vertex_id t) {
        if (t == v || g.has_permanent_edge(t, v)) return true;
        rhs += pos_part(tilde_w(g, t));
        return rhs <= w;
    });
    if (!ok) return false;
    benefit wp(0), pp(0);
    ok = g.for_removable_while(u, [&](vertex_id t, benefit p) {
        if (g.has_permanent_edge(t, v)) return true;
        wp += pos_part(tilde_w(g, t));
        pp += pos_part(p);
        return rhs + min(wp, pp) <= w;
    });
    return ok && w >= rhs + min(wp, pp);
}

std::optional<rule_effect> rule_12_directed(graph& g, vertex_id u, vertex_id v) {
    if (!rule_12_condition(g, u, v)) return std::nullopt;
    event_builder b(g, rule::perm_edge);
    b.remove(v, lift_kind::never_in);
    return b.finish();
}

std::optional<rule_effect> rule_13_directed(graph& g, vertex_id u, vertex_id v) {
    if (!wplus_neighbors_at_most(g, v, g.profit(v) + pos_part(g.profit(u)), false))
        return std::nullopt;
    std::vector<vertex_id> common;
    g.for_permanent(u, [&](vertex_id t) {
        if (t != v && g.has_permanent_edge(t, v)) common.push_back(t);
    });
    if (common.empty()) return std::nullopt;
    event_builder b(g, rule::common_neighbors);
    for (vertex_id t : common) b.remove(t, lift_kind::never_in);
    return b.finish();
}

}  // namespace

std::optional<rule_effect> try_rule_12(graph& g, vertex_id u, vertex_id v) {
    if (!g.alive(u) || !g.alive(v) || !g.has_permanent_edge(u, v)) return std::nullopt;
    if (u > v) std::swap(u, v);
    if (auto e = rule_12_directed(g, u, v)) return e;
    return rule_12_directed(g, v, u);
}

std::optional<rule_effect> try_rule_13(graph& g, vertex_id u, vertex_id v) {
    if (!g.alive(u) || !g.alive(v) || !g.has_permanent_edge(u, v)) return std::nullopt;
    if (u > v) std::swap(u, v);
    if (auto e = rule_13_directed(g, u, v)) return e;
    return rule_13_directed(g, v, u);
}

bool twin_eligible(const graph& g, vertex_id u) {
    return g.alive(u) && g.profit(u) >= sum_pos_rem_penalties(g, u);
}

std::optional<rule_effect> try_rule_14(graph& g, vertex_id u, vertex_id v) {
    if (u == v || !g.alive(u) || !g.alive(v)) return std::nullopt;
    if (!twin_eligible(g, u) || !twin_eligible(g, v)) return std::nullopt;
    if (g.permanent_neighbors(u) != g.permanent_neighbors(v)) return std::nullopt;

    benefit puv(0);
    if (auto p = g.removable_penalty(u, v)) puv = *p;
    benefit wf = g.profit(u) + g.profit(v) - puv;
    std::vector<vertex_id> perm = g.permanent_neighbors(u);

    // p'({v',x}) = p({u,x}) + p({v,x}), absent edges counting as zero
    std::vector<rem_entry> rem;
    auto ru = g.removable_neighbors(u);
    auto rv = g.removable_neighbors(v);
    std::size_t i = 0, j = 0;
    auto push = [&](vertex_id to, benefit p) {
        if (to != u && to != v && !p.zero()) rem.push_back({to, p});
    };
    while (i < ru.size() || j < rv.size()) {
        if (j == rv.size() || (i < ru.size() && ru[i].to < rv[j].to)) {
            push(ru[i].to, ru[i].penalty);
            ++i;
        } else if (i == ru.size() || rv[j].to < ru[i].to) {
            push(rv[j].to, rv[j].penalty);
            ++j;
        } else {
            push(ru[i].to, ru[i].penalty + rv[j].penalty);
            ++i;
            ++j;
        }
    }

    event_builder b(g, rule::twin_fold);
    b.remove_for_fold(u);
    b.remove_for_fold(v);
    b.fold(wf, std::move(perm), std::move(rem), u, v);
    return b.finish();
}

std::optional<reduction_event> apply_edge_transformations(graph& g, vertex_id u, vertex_id v) {
    if (!g.removable_penalty(u, v)) throw invalid_input("edge is not removable");
    if (auto e = try_rule_1(g, u, v)) return std::move(e->event);
    if (auto e = try_rule_2(g, u, v)) return std::move(e->event);
    return std::nullopt;
}

std::optional<reduction_event> apply_neighborhood_reductions(graph& g, vertex_id u) {
    if (!g.alive(u)) throw invalid_input("dead vertex");
    if (auto e = try_rule_3(g, u)) return std::move(e->event);
    if (auto e = try_rule_4(g, u)) return std::move(e->event);
    if (auto e = try_rule_5(g, u)) return std::move(e->event);
    if (auto e = try_rule_6(g, u)) return std::move(e->event);
    return std::nullopt;
}

std::optional<reduction_event> apply_degree_one(graph& g, vertex_id u) {
    if (!g.alive(u)) throw invalid_input("dead vertex");
    if (g.degree(u) != 1) throw invalid_input("vertex degree is not one");
    if (auto e = try_rule_7(g, u)) return std::move(e->event);
    return std::nullopt;  // unreachable: R7 covers all degree-one vertices
}

std::optional<reduction_event> apply_degree_two(graph& g, vertex_id u) {
    if (!g.alive(u)) throw invalid_input("dead vertex");
    if (g.degree(u) != 2) throw invalid_input("vertex degree is not two");
    if (auto e = try_rule_8(g, u)) return std::move(e->event);
    if (auto e = try_rule_9(g, u)) return std::move(e->event);
    return std::nullopt;
}

std::optional<reduction_event> apply_low_perm_degree(graph& g, vertex_id u) {
    if (!g.alive(u)) throw invalid_input("dead vertex");
    if (g.permanent_degree(u) != 1 && g.permanent_degree(u) != 2)
        throw invalid_input("permanent degree is not one or two");
    if (auto e = try_rule_10(g, u)) return std::move(e->event);
    if (auto e = try_rule_11(g, u)) return std::move(e->event);
    return std::nullopt;
}

std::optional<reduction_event> apply_vertex_pair(graph& g, vertex_id u, vertex_id v) {
    if (!g.alive(u) || !g.alive(v)) throw invalid_input("dead vertex");
    if (g.has_permanent_edge(u, v)) {
        if (auto e = try_rule_12(g, u, v)) return std::move(e->event);
        if (auto e = try_rule_13(g, u, v)) return std::move(e->event);
        return std::nullopt;
    }
    if (auto e = try_rule_14(g, u, v)) return std::move(e->event);
    return std::nullopt;
}

}  // namespace gis
