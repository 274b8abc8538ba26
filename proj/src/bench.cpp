#include "gis/bench.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "gis/io.hpp"

namespace gis {

namespace {

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", s);
    return buf;
}

std::string base_name(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

}  // namespace

std::string report_csv_header() {
    return "instance,bkv,best_size,htime_s,kernel_size,time_ker_s,trials,seed,proven_optimal";
}

std::string report_csv_row(const run_report& r) {
    std::ostringstream os;
    os << r.instance << ',' << r.bkv.raw() << ',' << r.best_size << ',' << fmt_seconds(r.htime_s)
       << ',' << r.kernel_size << ',' << fmt_seconds(r.time_ker_s) << ',' << r.trials << ','
       << r.seed << ',' << (r.proven_optimal ? 1 : 0);
    return os.str();
}

run_report solve_to_report(const std::string& name, const graph& g, const solve_params& params) {
    solve_result res = rls_solve(g, params);
    verify_result ver = verify_solution(g, res.sol.members, res.sol.net_benefit);
    if (!ver.ok()) throw internal_error("emitted solution failed verification");
    run_report r;
    r.instance = name;
    r.bkv = res.sol.net_benefit;
    r.best_size = res.sol.members.size();
    r.htime_s = res.stats.htime_s;
    r.kernel_size = res.stats.kernel_size;
    r.time_ker_s = res.stats.time_ker_s;
    r.trials = res.stats.trials;
    r.seed = res.stats.seed;
    r.proven_optimal = res.stats.proven_optimal;
    return r;
}

void run_bench(const std::vector<std::string>& files, const solve_params& params,
               std::ostream& csv, std::ostream& log) {
    csv << report_csv_header() << '\n';
    for (const std::string& f : files) {
        try {
            graph g = parse_instance_file(f);
            run_report r = solve_to_report(base_name(f), g, params);
            csv << report_csv_row(r) << '\n';
            csv.flush();
        } catch (const std::exception& e) {
            log << "error: " << f << ": " << e.what() << '\n';
        }
    }
}

std::vector<ablate_config> default_ablate_configs() {
    return {
        {"all", 0},
        {"no-R1-2", static_cast<rule_mask>(rule_bit(1) | rule_bit(2))},
        {"no-R3-6",
         static_cast<rule_mask>(rule_bit(3) | rule_bit(4) | rule_bit(5) | rule_bit(6))},
        {"no-R7-11", static_cast<rule_mask>(rule_bit(7) | rule_bit(8) | rule_bit(9) |
                                            rule_bit(10) | rule_bit(11))},
        {"no-R12-14", static_cast<rule_mask>(rule_bit(12) | rule_bit(13) | rule_bit(14))},
    };
}

std::vector<ablate_config> single_rule_ablate_configs() {
    std::vector<ablate_config> out{{"all", 0}};
    for (int i = 1; i <= 14; ++i) out.push_back({"no-R" + std::to_string(i), rule_bit(i)});
    return out;
}

std::string ablate_csv_header() { return "instance,config,kernel_size,delta_vs_all,time_ker_s"; }

void run_ablate(const std::vector<std::string>& files, const std::vector<ablate_config>& configs,
                std::ostream& csv, std::ostream& log) {
    csv << ablate_csv_header() << '\n';
    for (const std::string& f : files) {
        graph g;
        try {
            g = parse_instance_file(f);
        } catch (const std::exception& e) {
            log << "error: " << f << ": " << e.what() << '\n';
            continue;
        }
        long long baseline = -1;
        for (const ablate_config& cfg : configs) {
            try {
                auto t0 = std::chrono::steady_clock::now();
                kernel_result kr =
                    complete_reduction(g, reduce_options{cfg.disabled, /*record_trace=*/false});
                double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                  .count();
                long long ker = static_cast<long long>(kr.kernel.alive_count());
                if (cfg.disabled == 0) baseline = ker;
                long long delta = baseline >= 0 ? ker - baseline : 0;
                csv << base_name(f) << ',' << cfg.name << ',' << ker << ',' << delta << ','
                    << fmt_seconds(secs) << '\n';
                csv.flush();
            } catch (const std::exception& e) {
                log << "error: " << f << " [" << cfg.name << "]: " << e.what() << '\n';
            }
        }
    }
}

}  // namespace gis
