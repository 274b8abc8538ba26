#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gis/graph.hpp"

namespace gis {

// Instance text format (ids 1-based, all numeric fields integers already
// multiplied by 10^scale, LF line endings):
//   c <comment>                       anywhere, ignored
//   p gis <n> <m_p> <m_r> <scale>     exactly once, first
//   v <id> <profit>                   n lines, each id once
//   pe <u> <v>                        m_p lines
//   re <u> <v> <penalty>              m_r lines
graph parse_instance(std::istream& in);
graph parse_instance_file(const std::string& path);

// Canonical form: header, v lines ascending, pe/re lines sorted. Dead
// vertices are dropped and alive ones renumbered 1..k ascending.
void write_instance(const graph& g, std::ostream& out);
std::string instance_to_string(const graph& g);

// Solution text format:
//   s <net_benefit>
//   x <id>        one line per member, 1-based ids
struct solution_file {
    benefit claimed;
    std::vector<vertex_id> members;  // 0-based after parsing
};
solution_file parse_solution(std::istream& in);
solution_file parse_solution_file(const std::string& path);
void write_solution(const solution& s, std::ostream& out);

struct verify_result {
    bool feasible;
    bool value_matches;
    benefit actual;
    bool ok() const { return feasible && value_matches; }
};
// Checks feasibility and that the claimed net benefit is exact. An invalid
// solution is a verdict, not an error.
verify_result verify_solution(const graph& g, const std::vector<vertex_id>& members,
                              benefit claimed);

}  // namespace gis
