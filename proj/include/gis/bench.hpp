#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gis/search.hpp"

namespace gis {

struct run_report {
    std::string instance;
    benefit bkv;
    std::size_t best_size = 0;  // |V_I|
    double htime_s = 0;
    std::size_t kernel_size = 0;  // |V_ker|
    double time_ker_s = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    bool proven_optimal = false;
};

std::string report_csv_header();
std::string report_csv_row(const run_report& r);

run_report solve_to_report(const std::string& name, const graph& g, const solve_params& params);

// Solves every instance file, streaming one CSV row each; per-instance
// failures go to log and the run continues.
void run_bench(const std::vector<std::string>& files, const solve_params& params,
               std::ostream& csv, std::ostream& log);

// Kernelization ablation: named rule toggles, kernel size and time per
// configuration, with size deltas against the all-rules baseline.
struct ablate_config {
    std::string name;
    rule_mask disabled;
};
std::vector<ablate_config> default_ablate_configs();  // group toggles
std::vector<ablate_config> single_rule_ablate_configs();

std::string ablate_csv_header();
void run_ablate(const std::vector<std::string>& files, const std::vector<ablate_config>& configs,
                std::ostream& csv, std::ostream& log);

}  // namespace gis
