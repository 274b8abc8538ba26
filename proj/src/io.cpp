#include "gis/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace gis {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::int64_t parse_int(const std::string& tok, std::size_t line) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec == std::errc::result_out_of_range) throw parse_error("integer out of range: " + tok, line);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw parse_error("expected integer, got '" + tok + "'", line);
    return v;
}

vertex_id parse_id(const std::string& tok, std::size_t n, std::size_t line) {
    std::int64_t v = parse_int(tok, line);
    if (v < 1 || static_cast<std::size_t>(v) > n)
        throw parse_error("vertex id " + tok + " out of range 1.." + std::to_string(n), line);
    return static_cast<vertex_id>(v - 1);
}

}  // namespace

graph parse_instance(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool got_header = false;
    std::size_t n = 0, mp = 0, mr = 0;
    std::size_t seen_v = 0, seen_pe = 0, seen_re = 0;
    graph g;
    std::vector<std::uint8_t> have_profit;

    while (std::getline(in, line)) {
        ++lineno;
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (got_header) throw parse_error("duplicate header", lineno);
            if (tok.size() != 6 || tok[1] != "gis")
                throw parse_error("expected 'p gis <n> <m_p> <m_r> <scale>'", lineno);
            std::int64_t ni = parse_int(tok[2], lineno);
            std::int64_t mpi = parse_int(tok[3], lineno);
            std::int64_t mri = parse_int(tok[4], lineno);
            std::int64_t sc = parse_int(tok[5], lineno);
            if (ni < 0 || mpi < 0 || mri < 0) throw parse_error("negative count in header", lineno);
            if (sc < 0 || sc > 18) throw parse_error("scale must be in 0..18", lineno);
            n = static_cast<std::size_t>(ni);
            mp = static_cast<std::size_t>(mpi);
            mr = static_cast<std::size_t>(mri);
            g = graph(n, static_cast<int>(sc));
            have_profit.assign(n, 0);
            got_header = true;
            continue;
        }
        if (!got_header) throw parse_error("'" + tok[0] + "' line before header", lineno);
        try {
            if (tok[0] == "v") {
                if (tok.size() != 3) throw parse_error("expected 'v <id> <profit>'", lineno);
                vertex_id id = parse_id(tok[1], n, lineno);
                if (have_profit[id])
                    throw parse_error("duplicate profit for vertex " + tok[1], lineno);
                have_profit[id] = 1;
                g.set_profit(id, benefit(parse_int(tok[2], lineno)));
                ++seen_v;
            } else if (tok[0] == "pe") {
                if (tok.size() != 3) throw parse_error("expected 'pe <u> <v>'", lineno);
                g.add_permanent_edge(parse_id(tok[1], n, lineno), parse_id(tok[2], n, lineno));
                ++seen_pe;
            } else if (tok[0] == "re") {
                if (tok.size() != 4) throw parse_error("expected 're <u> <v> <penalty>'", lineno);
                g.add_removable_edge(parse_id(tok[1], n, lineno), parse_id(tok[2], n, lineno),
                                     benefit(parse_int(tok[3], lineno)));
                ++seen_re;
            } else {
                throw parse_error("unknown line type '" + tok[0] + "'", lineno);
            }
        } catch (const invalid_input& e) {
            throw parse_error(e.what(), lineno);
        }
    }
    if (!got_header) throw parse_error("missing header");
    if (seen_v != n)
        throw parse_error("header declares " + std::to_string(n) + " vertices, found " +
                          std::to_string(seen_v));
    if (seen_pe != mp)
        throw parse_error("header declares " + std::to_string(mp) + " permanent edges, found " +
                          std::to_string(seen_pe));
    if (seen_re != mr)
        throw parse_error("header declares " + std::to_string(mr) + " removable edges, found " +
                          std::to_string(seen_re));
    return g;
}

graph parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return parse_instance(in);
}

void write_instance(const graph& g, std::ostream& out) {
    std::vector<vertex_id> alive = g.alive_vertices();
    std::vector<vertex_id> remap(g.vertex_count(), no_vertex);
    for (std::size_t i = 0; i < alive.size(); ++i) remap[alive[i]] = static_cast<vertex_id>(i);

    std::vector<std::pair<vertex_id, vertex_id>> pe;
    std::vector<std::tuple<vertex_id, vertex_id, benefit>> re;
    for (vertex_id v : alive) {
        g.for_permanent(v, [&](vertex_id x) {
            if (v < x) pe.emplace_back(remap[v], remap[x]);
        });
        g.for_removable(v, [&](vertex_id x, benefit p) {
            if (v < x) re.emplace_back(remap[v], remap[x], p);
        });
    }
    for (auto& [a, b] : pe)
        if (a > b) std::swap(a, b);
    for (auto& t : re)
        if (std::get<0>(t) > std::get<1>(t)) std::swap(std::get<0>(t), std::get<1>(t));
    std::sort(pe.begin(), pe.end());
    std::sort(re.begin(), re.end(), [](const auto& a, const auto& b) {
        return std::make_pair(std::get<0>(a), std::get<1>(a)) <
               std::make_pair(std::get<0>(b), std::get<1>(b));
    });

    out << "p gis " << alive.size() << ' ' << pe.size() << ' ' << re.size() << ' ' << g.scale()
        << '\n';
    for (std::size_t i = 0; i < alive.size(); ++i)
        out << "v " << i + 1 << ' ' << g.profit(alive[i]).raw() << '\n';
    for (auto [a, b] : pe) out << "pe " << a + 1 << ' ' << b + 1 << '\n';
    for (auto& [a, b, p] : re) out << "re " << a + 1 << ' ' << b + 1 << ' ' << p.raw() << '\n';
}

std::string instance_to_string(const graph& g) {
    std::ostringstream os;
    write_instance(g, os);
    return os.str();
}

solution_file parse_solution(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool got_s = false;
    solution_file sf;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "s") {
            if (got_s) throw parse_error("duplicate 's' line", lineno);
            if (tok.size() != 2) throw parse_error("expected 's <net_benefit>'", lineno);
            sf.claimed = benefit(parse_int(tok[1], lineno));
            got_s = true;
        } else if (tok[0] == "x") {
            if (!got_s) throw parse_error("'x' line before 's'", lineno);
            if (tok.size() != 2) throw parse_error("expected 'x <id>'", lineno);
            std::int64_t v = parse_int(tok[1], lineno);
            if (v < 1) throw parse_error("vertex id must be positive", lineno);
            sf.members.push_back(static_cast<vertex_id>(v - 1));
        } else {
            throw parse_error("unknown line type '" + tok[0] + "'", lineno);
        }
    }
    if (!got_s) throw parse_error("missing 's' line");
    std::sort(sf.members.begin(), sf.members.end());
    if (std::adjacent_find(sf.members.begin(), sf.members.end()) != sf.members.end())
        throw parse_error("duplicate member in solution");
    return sf;
}

solution_file parse_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return parse_solution(in);
}

void write_solution(const solution& s, std::ostream& out) {
    out << "s " << s.net_benefit.raw() << '\n';
    for (vertex_id v : s.members) out << "x " << v + 1 << '\n';
}

verify_result verify_solution(const graph& g, const std::vector<vertex_id>& members,
                              benefit claimed) {
    verify_result r{};
    for (vertex_id v : members) {
        if (!g.alive(v)) {
            r.feasible = false;
            r.value_matches = false;
            return r;
        }
    }
    r.feasible = is_generalized_independent(g, members);
    r.actual = net_benefit(g, members);
    r.value_matches = r.actual == claimed;
    return r;
}

}  // namespace gis
