#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gis/bench.hpp"
#include "gis/generate.hpp"
#include "gis/io.hpp"
#include "gis/oracle.hpp"
#include "gis/reduce.hpp"
#include "gis/search.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid_input = 1;
constexpr int exit_verify_failed = 2;
constexpr int exit_internal = 3;

gis::rule_mask parse_rule_list(const std::string& spec) {
    gis::rule_mask m = 0;
    std::size_t i = 0;
    while (i < spec.size()) {
        std::size_t j = spec.find(',', i);
        if (j == std::string::npos) j = spec.size();
        std::string tok = spec.substr(i, j - i);
        if (!tok.empty()) {
            int r = std::stoi(tok);
            if (r < 1 || r > 14) throw gis::invalid_input("rule id must be in 1..14: " + tok);
            m |= gis::rule_bit(r);
        }
        i = j + 1;
    }
    return m;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw gis::invalid_input("cannot open '" + path + "' for writing");
    return out;
}

void emit_solution(const gis::graph& g, const gis::solution& s, const std::string& path) {
    gis::verify_result ver = gis::verify_solution(g, s.members, s.net_benefit);
    if (!ver.ok()) throw gis::internal_error("refusing to emit unverified solution");
    if (path.empty() || path == "-") {
        gis::write_solution(s, std::cout);
    } else {
        auto out = open_out(path);
        gis::write_solution(s, out);
    }
}

struct solve_cli {
    std::string instance;
    std::string solution_path;
    bool csv = false;
    std::string rules_off;
    gis::solve_params params;

    void add_common(CLI::App* cmd) {
        cmd->add_option("--cutoff", params.cutoff_seconds, "wall-clock cutoff in seconds")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--trials", params.trials, "independent search trials");
        cmd->add_option("--seed", params.seed, "RNG seed");
        cmd->add_option("--tolerance-L", params.tolerance_l,
                        "non-improvement tolerance (default 10|V|, 0.5|V| in large mode)");
        cmd->add_option("--epsilon", params.epsilon, "perturbation fraction in (0,1)");
        cmd->add_flag("--large-mode", params.large_mode,
                      "halve the tolerance and skip rules 6 and 12-14");
        cmd->add_option("--disable-rules", rules_off, "comma-separated rule ids to skip, e.g. 6,12");
        cmd->add_option("--max-iters", params.max_outer_iters,
                        "outer iterations per trial (0 = until cutoff); use for reproducible runs");
        cmd->add_option("--threads", params.threads, "worker threads (0 = auto)");
    }
};

int cmd_kernelize(const std::string& instance, const std::string& out_path,
                  const std::string& rules_off, bool large) {
    gis::graph g = gis::parse_instance_file(instance);
    gis::rule_mask mask = parse_rule_list(rules_off);
    if (large) mask |= gis::large_mode_mask();
    auto t0 = std::chrono::steady_clock::now();
    gis::kernel_result kr = gis::complete_reduction(g, gis::reduce_options{mask, true});
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out_path.empty() || out_path == "-") {
        gis::write_instance(kr.kernel, std::cout);
    } else {
        auto out = open_out(out_path);
        gis::write_instance(kr.kernel, out);
    }
    std::cerr << "kernel_size " << kr.kernel.alive_count() << "\n"
              << "kernel_perm_edges " << kr.kernel.permanent_edge_count() << "\n"
              << "kernel_rem_edges " << kr.kernel.removable_edge_count() << "\n"
              << "offset " << kr.offset.raw() << "\n"
              << "forced " << kr.forced.size() << "\n"
              << "events " << kr.trace.size() << "\n"
              << "time_ker_s " << secs << "\n";
    return exit_ok;
}

int cmd_solve(solve_cli& cli) {
    gis::graph g = gis::parse_instance_file(cli.instance);
    cli.params.disabled = parse_rule_list(cli.rules_off);
    gis::solve_result res = gis::rls_solve(g, cli.params);
    gis::verify_result ver = gis::verify_solution(g, res.sol.members, res.sol.net_benefit);
    if (!ver.ok()) throw gis::internal_error("solver emitted an unverifiable solution");

    gis::run_report r;
    r.instance = cli.instance;
    r.bkv = res.sol.net_benefit;
    r.best_size = res.sol.members.size();
    r.htime_s = res.stats.htime_s;
    r.kernel_size = res.stats.kernel_size;
    r.time_ker_s = res.stats.time_ker_s;
    r.trials = res.stats.trials;
    r.seed = res.stats.seed;
    r.proven_optimal = res.stats.proven_optimal;
    if (cli.csv) {
        std::cout << gis::report_csv_header() << '\n' << gis::report_csv_row(r) << '\n';
    } else {
        std::cout << "bkv " << r.bkv.raw() << "\nbest_size " << r.best_size << "\nkernel_size "
                  << r.kernel_size << "\ntime_ker_s " << r.time_ker_s << "\nhtime_s " << r.htime_s
                  << "\nproven_optimal " << (r.proven_optimal ? 1 : 0) << "\n";
    }
    if (!cli.solution_path.empty()) emit_solution(g, res.sol, cli.solution_path);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gisrls: data-reduction and local-search toolkit for the generalized "
                 "independent set problem"};
    app.require_subcommand(1);

    // kernelize
    auto* ker = app.add_subcommand("kernelize", "reduce an instance to its kernel");
    std::string ker_in, ker_out, ker_rules;
    bool ker_large = false;
    ker->add_option("instance", ker_in, "instance file")->required();
    ker->add_option("-o,--output", ker_out, "kernel instance output (default stdout)");
    ker->add_option("--disable-rules", ker_rules, "comma-separated rule ids to skip");
    ker->add_flag("--large-mode", ker_large, "skip rules 6 and 12-14");

    // solve
    auto* sol = app.add_subcommand("solve", "run the reduction-driven local search");
    solve_cli scli;
    sol->add_option("instance", scli.instance, "instance file")->required();
    scli.add_common(sol);
    sol->add_option("--solution", scli.solution_path, "write the best solution to this file");
    sol->add_flag("--csv", scli.csv, "emit the report as CSV");

    // exact
    auto* exa = app.add_subcommand("exact", "exact optimum by exhaustive enumeration");
    std::string exa_in, exa_sol;
    std::size_t exa_limit = 26;
    bool exa_count = false;
    exa->add_option("instance", exa_in, "instance file")->required();
    exa->add_option("--limit", exa_limit, "max alive vertices (default 26)");
    exa->add_flag("--count", exa_count, "also count distinct optima");
    exa->add_option("--solution", exa_sol, "write the witness to this file");

    // verify
    auto* ver = app.add_subcommand("verify", "check a solution file against an instance");
    std::string ver_in, ver_sol;
    ver->add_option("instance", ver_in, "instance file")->required();
    ver->add_option("solution", ver_sol, "solution file")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gis::gen_params gp;
    std::string gen_out;
    gen->add_option("-n,--vertices", gp.n, "vertex count")->required();
    gen->add_option("--edge-prob", gp.edge_prob, "edge probability");
    gen->add_option("--removable-frac", gp.removable_frac, "fraction of edges made removable");
    gen->add_option("--profit-min", gp.profit_min, "min profit (scaled integer)");
    gen->add_option("--profit-max", gp.profit_max, "max profit (scaled integer)");
    gen->add_option("--penalty-min", gp.penalty_min, "min penalty (scaled integer)");
    gen->add_option("--penalty-max", gp.penalty_max, "max penalty (scaled integer)");
    gen->add_option("--scale", gp.scale, "power-of-ten scale recorded in the header");
    gen->add_option("--seed", gp.seed, "RNG seed");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // bench
    auto* ben = app.add_subcommand("bench", "solve a corpus, one CSV row per instance");
    solve_cli bcli;
    std::vector<std::string> ben_files;
    std::string ben_out;
    ben->add_option("instances", ben_files, "instance files")->required();
    bcli.add_common(ben);
    ben->add_option("-o,--output", ben_out, "CSV output (default stdout)");

    // ablate
    auto* abl = app.add_subcommand("ablate", "kernel sizes under rule toggles");
    std::vector<std::string> abl_files;
    std::string abl_out;
    bool abl_singles = false;
    abl->add_option("instances", abl_files, "instance files")->required();
    abl->add_flag("--singles", abl_singles, "toggle each rule individually instead of groups");
    abl->add_option("-o,--output", abl_out, "CSV output (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ker) return cmd_kernelize(ker_in, ker_out, ker_rules, ker_large);
        if (*sol) return cmd_solve(scli);
        if (*exa) {
            gis::graph g = gis::parse_instance_file(exa_in);
            gis::oracle_result r = gis::brute_force_alpha(g, exa_limit, exa_count);
            std::cout << "alpha " << r.alpha.raw() << "\nwitness_size " << r.witness.size() << "\n";
            if (exa_count) std::cout << "optima " << r.optimal_count << "\n";
            if (!exa_sol.empty())
                emit_solution(g, gis::make_solution(g, r.witness), exa_sol);
            return exit_ok;
        }
        if (*ver) {
            gis::graph g = gis::parse_instance_file(ver_in);
            gis::solution_file sf = gis::parse_solution_file(ver_sol);
            gis::verify_result r = gis::verify_solution(g, sf.members, sf.claimed);
            if (r.ok()) {
                std::cout << "accept " << r.actual.raw() << "\n";
                return exit_ok;
            }
            std::cout << (r.feasible ? "reject value_mismatch actual " + r.actual.str()
                                     : std::string("reject infeasible"))
                      << "\n";
            return exit_verify_failed;
        }
        if (*gen) {
            gis::graph g = gis::generate_instance(gp);
            if (gen_out.empty() || gen_out == "-") {
                gis::write_instance(g, std::cout);
            } else {
                auto out = open_out(gen_out);
                gis::write_instance(g, out);
            }
            return exit_ok;
        }
        if (*ben) {
            bcli.params.disabled = parse_rule_list(bcli.rules_off);
            if (ben_out.empty() || ben_out == "-") {
                gis::run_bench(ben_files, bcli.params, std::cout, std::cerr);
            } else {
                auto out = open_out(ben_out);
                gis::run_bench(ben_files, bcli.params, out, std::cerr);
            }
            return exit_ok;
        }
        if (*abl) {
            auto configs = abl_singles ? gis::single_rule_ablate_configs()
                                       : gis::default_ablate_configs();
            if (abl_out.empty() || abl_out == "-") {
                gis::run_ablate(abl_files, configs, std::cout, std::cerr);
            } else {
                auto out = open_out(abl_out);
                gis::run_ablate(abl_files, configs, out, std::cerr);
            }
            return exit_ok;
        }
    } catch (const gis::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid_input;
    }
    return exit_ok;
}
