#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "apsp/harness.hpp"

namespace apsp {

namespace {

bool parse_uint(std::string_view token, std::uint64_t& value) {
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

std::string line_error(std::size_t line, const std::string& what) {
    return "line " + std::to_string(line) + ": " + what;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::size_t n = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::istringstream comment(line.substr(hash + 1));
            std::string word;
            std::uint64_t declared = 0;
            if (hash == 0 && comment >> word && word.starts_with("n=") && parse_uint(std::string_view(word).substr(2), declared)) {
                n = std::max<std::size_t>(n, declared);
            }
            line.resize(hash);
        }
        std::istringstream tokens(line);
        std::vector<std::string> parts;
        for (std::string t; tokens >> t;) {
            parts.push_back(t);
        }
        if (parts.empty()) {
            continue;
        }
        if (parts.size() != 2) {
            throw InputError(line_error(lineno, "expected two vertex ids, found " + std::to_string(parts.size()) + " tokens"));
        }
        std::uint64_t ids[2];
        for (int i = 0; i < 2; ++i) {
            if (!parse_uint(parts[i], ids[i])) {
                throw InputError(line_error(lineno, "'" + parts[i] + "' is not a non-negative integer"));
            }
            if (ids[i] >= std::numeric_limits<Vertex>::max()) {
                throw InputError(line_error(lineno, "vertex id " + parts[i] + " out of range"));
            }
        }
        edges.emplace_back(static_cast<Vertex>(ids[0]), static_cast<Vertex>(ids[1]));
        n = std::max<std::size_t>(n, std::max(ids[0], ids[1]) + 1);
    }
    return Graph(n, edges);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "# n=" << g.num_vertices() << "\n";
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    write_edge_list(g, out);
}

void write_estimates(const DistanceMatrix& est, std::ostream& out) {
    for (Eigen::Index r = 0; r < est.values.rows(); ++r) {
        for (Eigen::Index c = 0; c < est.values.cols(); ++c) {
            if (c > 0) {
                out << ',';
            }
            const dist_t x = est.values(r, c);
            if (is_inf(x)) {
                out << "INF";
            } else {
                out << x;
            }
        }
        out << '\n';
    }
}

DistanceMatrix read_estimates(std::istream& in) {
    std::vector<std::vector<dist_t>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<dist_t> row;
        std::string_view rest(line);
        while (true) {
            const auto comma = rest.find(',');
            std::string_view cell = rest.substr(0, comma);
            while (!cell.empty() && cell.front() == ' ') {
                cell.remove_prefix(1);
            }
            while (!cell.empty() && cell.back() == ' ') {
                cell.remove_suffix(1);
            }
            std::uint64_t value = 0;
            if (cell == "INF") {
                row.push_back(INF);
            } else if (parse_uint(cell, value) && value < INF) {
                row.push_back(static_cast<dist_t>(value));
            } else {
                throw InputError(line_error(lineno, "bad estimate '" + std::string(cell) + "'"));
            }
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw InputError(line_error(lineno, "row length differs from the first row"));
        }
        rows.push_back(std::move(row));
    }
    const std::size_t n = rows.size();
    if (n > 0 && rows.front().size() != n) {
        throw InputError("estimate table is not square");
    }
    DistanceMatrix out = DistanceMatrix::square(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
        }
    }
    return out;
}

} // namespace apsp
