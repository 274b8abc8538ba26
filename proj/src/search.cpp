#include "gis/search.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

namespace gis {

search_state::search_state(const graph& g, const solution& s) : g_(g) {
    std::size_t n = g.vertex_count();
    in_sol_.assign(n, 0);
    gain_.assign(n, benefit(0));
    conflicts_.assign(n, 0);
    tabu_until_.assign(n, 0);
    for (vertex_id v = 0; v < n; ++v)
        if (g.alive(v)) gain_[v] = g.profit(v);
    for (vertex_id m : s.members) {
        if (!g.alive(m)) throw invalid_input("solution uses a dead vertex");
        in_sol_[m] = 1;
    }
    for (vertex_id m : s.members) {
        g_.for_removable(m, [&](vertex_id x, benefit p) { gain_[x] -= p; });
        g_.for_permanent(m, [&](vertex_id x) {
            if (in_sol_[x]) throw invalid_input("solution contains a permanent edge");
            ++conflicts_[x];
        });
    }
    size_ = s.members.size();
    nb_ = s.net_benefit;
}

void search_state::build_moves(std::vector<vertex_id>& m1, std::vector<vertex_id>& m2) const {
    m1.clear();
    m2.clear();
    for (vertex_id v = 0; v < in_sol_.size(); ++v) {
        if (!g_.alive(v) || in_sol_[v]) continue;
        if (conflicts_[v] == 0)
            m1.push_back(v);
        else if (conflicts_[v] == 1 && !tabu(v))
            m2.push_back(v);
    }
}

vertex_id search_state::unique_conflict(vertex_id v) const {
    if (conflicts_[v] != 1) return no_vertex;
    vertex_id u = no_vertex;
    g_.for_permanent(v, [&](vertex_id x) {
        if (in_sol_[x]) u = x;
    });
    return u;
}

void search_state::apply_add(vertex_id v) {
    if (!g_.alive(v) || in_sol_[v]) throw invalid_input("vertex not addable");
    if (conflicts_[v] != 0) throw invalid_input("vertex conflicts with the solution");
    nb_ += gain_[v];
    in_sol_[v] = 1;
    ++size_;
    g_.for_removable(v, [&](vertex_id x, benefit p) { gain_[x] -= p; });
    g_.for_permanent(v, [&](vertex_id x) { ++conflicts_[x]; });
}

void search_state::apply_remove(vertex_id u) {
    if (!in_sol_[u]) throw invalid_input("vertex not in solution");
    nb_ -= gain_[u];
    in_sol_[u] = 0;
    --size_;
    g_.for_removable(u, [&](vertex_id x, benefit p) { gain_[x] += p; });
    g_.for_permanent(u, [&](vertex_id x) { --conflicts_[x]; });
}

void search_state::apply_swap(vertex_id u, vertex_id v, std::size_t m2_size, rng& r) {
    if (unique_conflict(v) != u || u == no_vertex) throw invalid_input("invalid swap pair");
    apply_remove(u);
    apply_add(v);
    tabu_until_[u] = iter_ + 10 + r.below(m2_size);
}

std::size_t search_state::apply_reduce_move() {
    std::size_t added = 0;
    auto residual = [&](vertex_id v) {
        return g_.alive(v) && !in_sol_[v] && conflicts_[v] == 0;
    };
    auto tilde_res = [&](vertex_id x) {
        benefit t = gain_[x];
        g_.for_removable(x, [&](vertex_id y, benefit p) {
            if (residual(y)) t += pos_part(-p);
        });
        return t;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (vertex_id v = 0; v < in_sol_.size(); ++v) {
            if (!residual(v)) continue;
            benefit wplus_all(0), wplus_perm(0), pos_pen(0);
            g_.for_permanent(v, [&](vertex_id x) {
                if (!residual(x)) return;
                benefit t = pos_part(tilde_res(x));
                wplus_all += t;
                wplus_perm += t;
            });
            g_.for_removable(v, [&](vertex_id x, benefit p) {
                if (!residual(x)) return;
                wplus_all += pos_part(tilde_res(x));
                pos_pen += pos_part(p);
            });
            if (gain_[v] >= wplus_all || gain_[v] >= wplus_perm + pos_pen) {
                apply_add(v);
                ++added;
                changed = true;
            }
        }
    }
    return added;
}

solution search_state::snapshot() const {
    std::vector<vertex_id> members;
    members.reserve(size_);
    for (vertex_id v = 0; v < in_sol_.size(); ++v)
        if (in_sol_[v]) members.push_back(v);
    return solution{std::move(members), nb_};
}

std::vector<benefit> search_state::recompute_gains() const {
    std::vector<benefit> out(in_sol_.size(), benefit(0));
    for (vertex_id v = 0; v < in_sol_.size(); ++v) {
        if (!g_.alive(v)) continue;
        benefit b = g_.profit(v);
        g_.for_removable(v, [&](vertex_id x, benefit p) {
            if (in_sol_[x]) b -= p;
        });
        out[v] = b;
    }
    return out;
}

solution random_peeling(const graph& g, const std::vector<vertex_id>& s_init, rng& r,
                        rule_mask disabled) {
    if (!is_generalized_independent(g, s_init)) throw invalid_input("infeasible initial set");

    graph residual = g;
    std::vector<std::uint8_t> in(g.vertex_count(), 0);
    std::vector<vertex_id> members;
    auto join = [&](vertex_id v) {
        if (!in[v]) {
            in[v] = 1;
            members.push_back(v);
        }
    };
    for (vertex_id v : s_init) join(v);
    // the given partial solution is fixed: take it out of the residual
    for (vertex_id v : s_init) {
        if (!residual.alive(v)) continue;
        for (vertex_id x : residual.permanent_neighbors(v)) residual.remove_vertex(x);
        residual.remove_vertex(v);
    }

    reduction_engine eng(residual, reduce_options{disabled, /*record_trace=*/false});
    while (residual.alive_count() > 0) {
        std::vector<vertex_id> alive = residual.alive_vertices();
        vertex_id u = alive[r.below(alive.size())];
        eng.peel_vertex(u);
        eng.run();
        for (vertex_id v : eng.take_new_forced()) join(v);
    }

    // greedy maximal extension over everything peeled or reduced away
    std::vector<benefit> gain(g.vertex_count(), benefit(0));
    std::vector<std::uint32_t> conflicts(g.vertex_count(), 0);
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (g.alive(v)) gain[v] = g.profit(v);
    for (vertex_id m : members) {
        g.for_removable(m, [&](vertex_id x, benefit p) { gain[x] -= p; });
        g.for_permanent(m, [&](vertex_id x) { ++conflicts[x]; });
    }
    std::vector<vertex_id> cand;
    while (true) {
        cand.clear();
        for (vertex_id v = 0; v < g.vertex_count(); ++v)
            if (g.alive(v) && !in[v] && conflicts[v] == 0 && gain[v].positive()) cand.push_back(v);
        if (cand.empty()) break;
        vertex_id v = cand[r.below(cand.size())];
        join(v);
        g.for_removable(v, [&](vertex_id x, benefit p) { gain[x] -= p; });
        g.for_permanent(v, [&](vertex_id x) { ++conflicts[x]; });
    }

    return make_solution(g, std::move(members));
}

namespace {

// Sequentially drops ceil(epsilon*|S|) members with the least gain, ties
// broken uniformly at random, gains refreshed between drops.
void perturb(search_state& st, double epsilon, rng& r) {
    std::size_t k = static_cast<std::size_t>(std::ceil(epsilon * static_cast<double>(st.size())));
    std::vector<vertex_id> ties;
    for (std::size_t i = 0; i < k && st.size() > 0; ++i) {
        benefit worst;
        bool first = true;
        ties.clear();
        for (vertex_id v = 0; v < st.vertex_limit(); ++v) {
            if (!st.in_solution(v)) continue;
            benefit gv = st.gain(v);
            if (first || gv < worst) {
                worst = gv;
                ties.clear();
                ties.push_back(v);
                first = false;
            } else if (gv == worst) {
                ties.push_back(v);
            }
        }
        if (ties.empty()) break;
        st.apply_remove(ties[r.below(ties.size())]);
    }
}

}  // namespace

solution neighborhood_search(const graph& g, const solution& s, std::uint64_t tolerance_l,
                             double epsilon, rng& r, std::optional<clock::time_point> deadline) {
    if (!is_generalized_independent(g, s.members)) throw invalid_input("infeasible input solution");
    if (epsilon <= 0 || epsilon >= 1) throw invalid_input("epsilon must be in (0,1)");

    search_state st(g, s);
    solution best = s;
    std::uint64_t l = 0;
    std::vector<vertex_id> m1, m2;

    while (true) {
        if (deadline && clock::now() > *deadline) break;
        st.advance_iteration();
        st.build_moves(m1, m2);

        if (!m1.empty() || !m2.empty()) {
            benefit best_gain;
            vertex_id bv = no_vertex, bu = no_vertex;
            for (vertex_id v : m1) {
                if (bv == no_vertex || st.gain(v) > best_gain) {
                    best_gain = st.gain(v);
                    bv = v;
                    bu = no_vertex;
                }
            }
            for (vertex_id v : m2) {
                vertex_id u = st.unique_conflict(v);
                benefit gsw = st.gain(v) - st.gain(u);
                if (bv == no_vertex || gsw > best_gain) {
                    best_gain = gsw;
                    bv = v;
                    bu = u;
                }
            }
            if (bu == no_vertex)
                st.apply_add(bv);
            else
                st.apply_swap(bu, bv, m2.size(), r);
        }
        st.apply_reduce_move();

        if (st.nb() > best.net_benefit) {
            best = st.snapshot();
            l = 0;
        } else {
            ++l;
        }
        if (l > st.size() || (m1.empty() && m2.empty())) perturb(st, epsilon, r);
        if (l > tolerance_l) break;
    }
    return best;
}

namespace {

std::uint64_t derive_tolerance(const solve_params& p, std::size_t n) {
    if (p.tolerance_l) return p.tolerance_l;
    double l = p.large_mode ? 0.5 * static_cast<double>(n) : 10.0 * static_cast<double>(n);
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(l)));
}

double seconds_since(clock::time_point t0) {
    return std::chrono::duration<double>(clock::now() - t0).count();
}

}  // namespace

solve_result rls_solve(const graph& g, const solve_params& params) {
    if (params.cutoff_seconds <= 0) throw invalid_input("cutoff must be positive");
    if (params.epsilon <= 0 || params.epsilon >= 1) throw invalid_input("epsilon must be in (0,1)");
    if (params.trials < 1) throw invalid_input("need at least one trial");

    const auto t0 = clock::now();
    rule_mask disabled = params.disabled;
    if (params.large_mode) disabled |= large_mode_mask();

    kernel_result kr = complete_reduction(g, reduce_options{disabled, true});

    solve_result res;
    res.stats.kernel_size = kr.kernel.alive_count();
    res.stats.time_ker_s = seconds_since(t0);
    res.stats.trials = params.trials;
    res.stats.seed = params.seed;
    res.stats.offset = kr.offset;

    if (kr.kernel.alive_count() == 0) {
        res.sol = lift_solution(kr, {}, g);
        res.stats.proven_optimal = true;
        res.stats.htime_s = seconds_since(t0);
        return res;
    }

    const std::uint64_t L = derive_tolerance(params, g.alive_count());
    const auto deadline = t0 + std::chrono::duration_cast<clock::duration>(
                                   std::chrono::duration<double>(params.cutoff_seconds));

    struct trial_out {
        benefit nb{INT64_MIN};
        std::vector<vertex_id> members;
        double hit_s = 0;
        std::uint64_t iters = 0;
    };
    std::vector<trial_out> outs(params.trials);

    auto worker = [&](int t) {
        rng r(rng::sub_seed(params.seed, static_cast<std::uint64_t>(t)));
        trial_out& out = outs[t];
        do {
            solution sol = random_peeling(kr.kernel, {}, r, disabled);
            sol = neighborhood_search(kr.kernel, sol, L, params.epsilon, r, deadline);
            if (sol.net_benefit > out.nb) {
                out.nb = sol.net_benefit;
                out.members = sol.members;
                out.hit_s = seconds_since(t0);
            }
            ++out.iters;
        } while (clock::now() < deadline &&
                 (params.max_outer_iters == 0 || out.iters < params.max_outer_iters));
    };

    int nthreads = params.threads > 0
                       ? params.threads
                       : std::max(1, std::min<int>(params.trials,
                                                   static_cast<int>(std::thread::hardware_concurrency())));
    if (nthreads <= 1 || params.trials == 1) {
        for (int t = 0; t < params.trials; ++t) worker(t);
    } else {
        std::vector<std::thread> pool;
        std::mutex next_mutex;
        int next = 0;
        for (int i = 0; i < nthreads; ++i) {
            pool.emplace_back([&] {
                while (true) {
                    int t;
                    {
                        std::lock_guard<std::mutex> lk(next_mutex);
                        if (next >= params.trials) return;
                        t = next++;
                    }
                    worker(t);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    int best_t = 0;
    for (int t = 1; t < params.trials; ++t)
        if (outs[t].nb > outs[best_t].nb) best_t = t;

    double htime = outs[best_t].hit_s;
    for (int t = 0; t < params.trials; ++t) {
        res.stats.outer_iterations += outs[t].iters;
        if (outs[t].nb == outs[best_t].nb) htime = std::min(htime, outs[t].hit_s);
    }

    res.sol = lift_solution(kr, outs[best_t].members, g);
    res.stats.htime_s = htime;
    res.stats.proven_optimal = false;
    return res;
}

}  // namespace gis
