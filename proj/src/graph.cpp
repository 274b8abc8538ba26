#include "gis/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace gis {

graph::graph(std::size_t n, int scale) : scale_(scale) {
    profit_.resize(n, benefit(0));
    perm_.resize(n);
    rem_.resize(n);
    alive_.resize(n, 1);
    perm_deg_.resize(n, 0);
    rem_deg_.resize(n, 0);
    alive_count_ = n;
}

vertex_id graph::add_vertex(benefit profit) {
    vertex_id id = static_cast<vertex_id>(profit_.size());
    profit_.push_back(profit);
    perm_.emplace_back();
    rem_.emplace_back();
    alive_.push_back(1);
    perm_deg_.push_back(0);
    rem_deg_.push_back(0);
    ++alive_count_;
    return id;
}

namespace {

template <typename Vec, typename Key>
auto lower_bound_id(Vec& v, Key key) {
    return std::lower_bound(v.begin(), v.end(), key, [](const auto& e, Key k) {
        if constexpr (std::is_same_v<std::decay_t<decltype(e)>, vertex_id>)
            return e < k;
        else
            return e.to < k;
    });
}

}  // namespace

void graph::add_permanent_edge(vertex_id u, vertex_id v) {
    check_pair(u, v);
    if (has_permanent_edge(u, v) || has_removable_edge(u, v))
        throw invalid_input("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    perm_[u].insert(lower_bound_id(perm_[u], v), v);
    perm_[v].insert(lower_bound_id(perm_[v], u), u);
    ++perm_deg_[u];
    ++perm_deg_[v];
    ++perm_edges_;
    entries_ += 2;
}

void graph::add_removable_edge(vertex_id u, vertex_id v, benefit penalty) {
    check_pair(u, v);
    if (has_permanent_edge(u, v) || has_removable_edge(u, v))
        throw invalid_input("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    rem_[u].insert(lower_bound_id(rem_[u], v), rem_entry{v, penalty});
    rem_[v].insert(lower_bound_id(rem_[v], u), rem_entry{u, penalty});
    ++rem_deg_[u];
    ++rem_deg_[v];
    ++rem_edges_;
    entries_ += 2;
}

void graph::delete_removable_edge(vertex_id u, vertex_id v) {
    check_pair(u, v);
    auto iu = lower_bound_id(rem_[u], v);
    auto iv = lower_bound_id(rem_[v], u);
    if (iu == rem_[u].end() || iu->to != v || iv == rem_[v].end() || iv->to != u)
        throw invalid_input("no removable edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    rem_[u].erase(iu);
    rem_[v].erase(iv);
    --rem_deg_[u];
    --rem_deg_[v];
    --rem_edges_;
    entries_ -= 2;
}

void graph::removable_to_permanent(vertex_id u, vertex_id v) {
    delete_removable_edge(u, v);
    add_permanent_edge(u, v);
}

void graph::set_penalty(vertex_id u, vertex_id v, benefit p) {
    check_pair(u, v);
    auto iu = lower_bound_id(rem_[u], v);
    auto iv = lower_bound_id(rem_[v], u);
    if (iu == rem_[u].end() || iu->to != v || iv == rem_[v].end() || iv->to != u)
        throw invalid_input("no removable edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    iu->penalty = p;
    iv->penalty = p;
}

void graph::remove_vertex(vertex_id u) {
    check_alive(u);
    for (vertex_id v : perm_[u]) {
        if (alive_[v]) {
            --perm_deg_[v];
            --perm_edges_;
            ++tombstones_;
        }
    }
    for (const rem_entry& e : rem_[u]) {
        if (alive_[e.to]) {
            --rem_deg_[e.to];
            --rem_edges_;
            ++tombstones_;
        }
    }
    entries_ -= perm_[u].size() + rem_[u].size();
    perm_[u].clear();
    perm_[u].shrink_to_fit();
    rem_[u].clear();
    rem_[u].shrink_to_fit();
    perm_deg_[u] = 0;
    rem_deg_[u] = 0;
    alive_[u] = 0;
    --alive_count_;
}

bool graph::has_permanent_edge(vertex_id u, vertex_id v) const {
    check_pair(u, v);
    const auto& lst = perm_[u];
    auto it = std::lower_bound(lst.begin(), lst.end(), v);
    return it != lst.end() && *it == v;
}

bool graph::has_removable_edge(vertex_id u, vertex_id v) const {
    return removable_penalty(u, v).has_value();
}

std::optional<benefit> graph::removable_penalty(vertex_id u, vertex_id v) const {
    check_pair(u, v);
    const auto& lst = rem_[u];
    auto it = std::lower_bound(lst.begin(), lst.end(), v,
                               [](const rem_entry& e, vertex_id k) { return e.to < k; });
    if (it != lst.end() && it->to == v) return it->penalty;
    return std::nullopt;
}

std::vector<vertex_id> graph::permanent_neighbors(vertex_id u) const {
    check_alive(u);
    std::vector<vertex_id> out;
    out.reserve(perm_deg_[u]);
    for_permanent(u, [&](vertex_id v) { out.push_back(v); });
    return out;
}

std::vector<rem_entry> graph::removable_neighbors(vertex_id u) const {
    check_alive(u);
    std::vector<rem_entry> out;
    out.reserve(rem_deg_[u]);
    for_removable(u, [&](vertex_id v, benefit p) { out.push_back({v, p}); });
    return out;
}

std::vector<vertex_id> graph::alive_vertices() const {
    std::vector<vertex_id> out;
    out.reserve(alive_count_);
    for (vertex_id v = 0; v < alive_.size(); ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

std::uint32_t graph::max_degree() const {
    std::uint32_t d = 0;
    for (vertex_id v = 0; v < alive_.size(); ++v)
        if (alive_[v]) d = std::max(d, perm_deg_[v] + rem_deg_[v]);
    return d;
}

void graph::compact() {
    for (vertex_id v = 0; v < alive_.size(); ++v) {
        if (!alive_[v]) continue;
        auto& pl = perm_[v];
        std::size_t before = pl.size();
        pl.erase(std::remove_if(pl.begin(), pl.end(), [&](vertex_id x) { return !alive_[x]; }),
                 pl.end());
        auto& rl = rem_[v];
        std::size_t beforer = rl.size();
        rl.erase(std::remove_if(rl.begin(), rl.end(), [&](const rem_entry& e) { return !alive_[e.to]; }),
                 rl.end());
        entries_ -= (before - pl.size()) + (beforer - rl.size());
    }
    tombstones_ = 0;
}

void graph::validate() const {
    std::size_t alive_n = 0, pe = 0, re = 0;
    for (vertex_id v = 0; v < alive_.size(); ++v) {
        if (!alive_[v]) {
            if (!perm_[v].empty() || !rem_[v].empty())
                throw internal_error("dead vertex has adjacency");
            continue;
        }
        ++alive_n;
        std::uint32_t pd = 0, rd = 0;
        vertex_id prev = no_vertex;
        for (vertex_id x : perm_[v]) {
            if (x == v) throw internal_error("permanent self loop");
            if (prev != no_vertex && x <= prev) throw internal_error("permanent list unsorted");
            prev = x;
            if (!alive_[x]) continue;
            ++pd;
            const auto& back = perm_[x];
            if (!std::binary_search(back.begin(), back.end(), v))
                throw internal_error("asymmetric permanent edge");
        }
        prev = no_vertex;
        for (const rem_entry& e : rem_[v]) {
            if (e.to == v) throw internal_error("removable self loop");
            if (prev != no_vertex && e.to <= prev) throw internal_error("removable list unsorted");
            prev = e.to;
            if (!alive_[e.to]) continue;
            ++rd;
            auto p = removable_penalty(e.to, v);
            if (!p || *p != e.penalty) throw internal_error("asymmetric removable edge");
            if (has_permanent_edge(v, e.to)) throw internal_error("edge in both classes");
        }
        if (pd != perm_deg_[v] || rd != rem_deg_[v]) throw internal_error("degree counter drift");
        pe += pd;
        re += rd;
    }
    if (alive_n != alive_count_) throw internal_error("alive counter drift");
    if (pe != 2 * perm_edges_ || re != 2 * rem_edges_) throw internal_error("edge counter drift");
}

bool graph::same_alive_subgraph(const graph& other) const {
    if (vertex_count() != other.vertex_count() || alive_count() != other.alive_count())
        return false;
    for (vertex_id v = 0; v < alive_.size(); ++v) {
        if (alive(v) != other.alive(v)) return false;
        if (!alive_[v]) continue;
        if (profit_[v] != other.profit_[v]) return false;
        if (permanent_neighbors(v) != other.permanent_neighbors(v)) return false;
        auto a = removable_neighbors(v);
        auto b = other.removable_neighbors(v);
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].to != b[i].to || a[i].penalty != b[i].penalty) return false;
    }
    return true;
}

benefit net_benefit(const graph& g, std::span<const vertex_id> s) {
    std::unordered_set<vertex_id> in(s.begin(), s.end());
    benefit total(0);
    for (vertex_id v : s) {
        total += g.profit(v);
        g.for_removable(v, [&](vertex_id x, benefit p) {
            if (x > v && in.count(x)) total -= p;
        });
    }
    return total;
}

bool is_generalized_independent(const graph& g, std::span<const vertex_id> s) {
    std::unordered_set<vertex_id> in;
    for (vertex_id v : s) {
        if (!g.alive(v)) throw invalid_input("dead vertex in solution");
        in.insert(v);
    }
    for (vertex_id v : s) {
        bool bad = false;
        g.for_permanent(v, [&](vertex_id x) { bad = bad || in.count(x) != 0; });
        if (bad) return false;
    }
    return true;
}

benefit tilde_w(const graph& g, vertex_id v) {
    benefit t = g.profit(v);
    g.for_removable(v, [&](vertex_id, benefit p) { t += pos_part(-p); });
    return t;
}

benefit w_plus(const graph& g, std::span<const vertex_id> s) {
    benefit total(0);
    for (vertex_id v : s) total += pos_part(tilde_w(g, v));
    return total;
}

solution make_solution(const graph& g, std::vector<vertex_id> members) {
    std::sort(members.begin(), members.end());
    benefit nb = net_benefit(g, members);
    return solution{std::move(members), nb};
}

}  // namespace gis
