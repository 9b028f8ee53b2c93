#include <algorithm>
#include <charconv>
#include <random>
#include <set>

#include "apsp/harness.hpp"

namespace apsp {

namespace {

const std::map<std::string, std::string> kAliases = {
    {"erdos-renyi", "er"},
    {"regular", "random-regular"},
};

const std::map<std::string, std::vector<std::string>> kFamilyKeys = {
    {"er", {"n", "p", "seed"}},
    {"random-regular", {"n", "d", "seed"}},
    {"planted-clusters", {"n", "c", "pin", "pout", "seed"}},
    {"tree", {"n", "seed"}},
    {"path", {"n"}},
    {"star", {"n"}},
    {"complete", {"n"}},
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

Graph er_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

/// Pairing model; a bad pair is redrawn a few times before the whole attempt restarts.
Graph regular_graph(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (d >= n || (n * d) % 2 != 0) {
        throw InputError("random-regular needs d < n and n*d even");
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Vertex> points;
        for (Vertex v = 0; v < n; ++v) {
            points.insert(points.end(), d, v);
        }
        std::set<Edge> edges;
        bool stuck = false;
        while (!points.empty() && !stuck) {
            stuck = true;
            for (int tries = 0; tries < 64; ++tries) {
                std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
                const std::size_t i = pick(rng);
                const std::size_t j = pick(rng);
                Vertex a = points[i];
                Vertex b = points[j];
                if (i == j || a == b || edges.count({std::min(a, b), std::max(a, b)})) {
                    continue;
                }
                edges.insert({std::min(a, b), std::max(a, b)});
                for (std::size_t idx : {std::max(i, j), std::min(i, j)}) {
                    points[idx] = points.back();
                    points.pop_back();
                }
                stuck = false;
                break;
            }
        }
        if (points.empty()) {
            const std::vector<Edge> list(edges.begin(), edges.end());
            return Graph(n, list);
        }
    }
    throw InputError("random-regular: no simple pairing found");
}

Graph planted_graph(std::size_t n, std::size_t c, double pin, double pout, std::uint64_t seed) {
    if (c < 1) {
        throw InputError("planted-clusters needs c >= 1");
    }
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution in(pin);
    std::bernoulli_distribution out(pout);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const bool same = u % c == v % c;
            if (same ? in(rng) : out(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

Graph tree_graph(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> parent(0, v - 1);
        edges.emplace_back(parent(rng), v);
    }
    return Graph(n, edges);
}

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InputError(std::string("generator parameter ") + name + " must lie in [0, 1]");
    }
}

} // namespace

GenSpec GenSpec::parse(std::string_view text) {
    text = trim(text);
    const auto colon = text.find(':');
    GenSpec spec;
    spec.family = std::string(trim(text.substr(0, colon)));
    if (auto it = kAliases.find(spec.family); it != kAliases.end()) {
        spec.family = it->second;
    }
    const auto keys = kFamilyKeys.find(spec.family);
    if (keys == kFamilyKeys.end()) {
        throw InputError("unknown graph family '" + spec.family + "'");
    }
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view item = trim(rest.substr(0, comma));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            const auto eq = item.find('=');
            if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size()) {
                throw InputError("malformed generator parameter '" + std::string(item) + "'");
            }
            const std::string key(trim(item.substr(0, eq)));
            if (std::find(keys->second.begin(), keys->second.end(), key) == keys->second.end()) {
                throw InputError("family " + spec.family + " has no parameter '" + key + "'");
            }
            if (!spec.params.emplace(key, std::string(trim(item.substr(eq + 1)))).second) {
                throw InputError("duplicate generator parameter '" + key + "'");
            }
        }
    }
    if (!spec.params.count("n")) {
        throw InputError("generator spec needs n");
    }
    spec.n();
    return spec;
}

std::string GenSpec::to_string() const {
    std::string out = family;
    char sep = ':';
    for (const auto& [key, value] : params) {
        out += sep;
        out += key + "=" + value;
        sep = ',';
    }
    return out;
}

std::size_t GenSpec::n() const {
    return static_cast<std::size_t>(get_uint("n", 0));
}

double GenSpec::get_double(const std::string& key, double fallback) const {
    auto it = params.find(key);
    if (it == params.end()) {
        return fallback;
    }
    double value = 0.0;
    const auto& s = it->second;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InputError("parameter " + key + " is not a number: '" + s + "'");
    }
    return value;
}

std::uint64_t GenSpec::get_uint(const std::string& key, std::uint64_t fallback) const {
    auto it = params.find(key);
    if (it == params.end()) {
        return fallback;
    }
    std::uint64_t value = 0;
    const auto& s = it->second;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InputError("parameter " + key + " is not a non-negative integer: '" + s + "'");
    }
    return value;
}

Graph generate(const GenSpec& spec) {
    const std::size_t n = spec.n();
    const std::uint64_t seed = spec.get_uint("seed", 1);
    const std::string& f = spec.family;
    if (f == "er") {
        const double p = spec.get_double("p", 0.1);
        check_probability(p, "p");
        return er_graph(n, p, seed);
    }
    if (f == "random-regular") {
        return regular_graph(n, spec.get_uint("d", 3), seed);
    }
    if (f == "planted-clusters") {
        const double pin = spec.get_double("pin", 0.5);
        const double pout = spec.get_double("pout", 0.01);
        check_probability(pin, "pin");
        check_probability(pout, "pout");
        return planted_graph(n, spec.get_uint("c", 4), pin, pout, seed);
    }
    if (f == "tree") {
        return tree_graph(n, seed);
    }
    std::vector<Edge> edges;
    if (f == "path") {
        for (Vertex v = 1; v < n; ++v) {
            edges.emplace_back(v - 1, v);
        }
    } else if (f == "star") {
        for (Vertex v = 1; v < n; ++v) {
            edges.emplace_back(0, v);
        }
    } else if (f == "complete") {
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                edges.emplace_back(u, v);
            }
        }
    } else {
        throw InputError("unknown graph family '" + f + "'");
    }
    return Graph(n, edges);
}

} // namespace apsp
