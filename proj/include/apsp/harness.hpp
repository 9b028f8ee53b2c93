#ifndef APSP_HARNESS_HPP
#define APSP_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "apsp/graph.hpp"

namespace apsp {

/*
 * Textual graph family description, e.g. "er:n=300,p=0.1,seed=1".
 *
 *   er                n, p, seed
 *   random-regular    n, d, seed       (n*d even, d < n)
 *   planted-clusters  n, c, pin, pout, seed
 *   tree              n, seed          (uniform random recursive tree)
 *   path | star | complete   n
 *
 * "erdos-renyi" and "regular" are accepted as aliases on input.
 */
struct GenSpec {
    std::string family;
    std::map<std::string, std::string> params;

    static GenSpec parse(std::string_view text);
    std::string to_string() const;

    std::size_t n() const;
    double get_double(const std::string& key, double fallback) const;
    std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;

    bool operator==(const GenSpec&) const = default;
};

/// Deterministic for a fixed spec (including its seed).
Graph generate(const GenSpec& spec);

/*
 * Edge lists: one "u v" pair per line, 0-based ids, '#' starts a comment.
 * A leading "# n=N" comment, as written by save_edge_list, fixes the vertex
 * count so isolated high-id vertices survive a round trip.
 */
Graph parse_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::string& path);

/// Square estimate tables as CSV, "INF" for unreachable.
void write_estimates(const DistanceMatrix& est, std::ostream& out);
DistanceMatrix read_estimates(std::istream& in);

struct ErrorReport {
    std::string algo;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string params;
    std::size_t k = 0;
    std::uint64_t max_error = 0;
    double mean_error = 0.0;
    /// hist[e] counts pairs with error e for e = 0..bound; the last entry
    /// counts violations.
    std::vector<std::uint64_t> histogram;
    std::uint64_t pairs_checked = 0;
    std::uint64_t violations = 0;
    double wall_ms = 0.0;
};

/*
 * Checks every ordered pair of `est` against `exact`. A pair violates when
 * est < d, est > d + bound, or exactly one of the two is INF. max_error and
 * mean_error are taken over the remaining pairs (INF-INF counts as error 0).
 */
ErrorReport compare_estimates(const DistanceMatrix& exact, const DistanceMatrix& est, std::uint64_t bound);

/// compare_estimates against exact_apsp_oracle(g); also fills n and m.
ErrorReport verify(const Graph& g, const DistanceMatrix& est, std::uint64_t bound);

std::string report_csv_header();
std::string report_csv_row(const ErrorReport& report);

/// Entry point of the `apsp` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace apsp

#endif
