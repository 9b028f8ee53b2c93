#include <cstdio>
#include <sstream>

#include "apsp/apsp.hpp"
#include "apsp/harness.hpp"

namespace apsp {

ErrorReport compare_estimates(const DistanceMatrix& exact, const DistanceMatrix& est, std::uint64_t bound) {
    if (exact.values.rows() != est.values.rows() || exact.values.cols() != est.values.cols()) {
        throw InputError("estimate table is " + std::to_string(est.values.rows()) + "x" +
                         std::to_string(est.values.cols()) + ", expected " + std::to_string(exact.values.rows()) +
                         "x" + std::to_string(exact.values.cols()));
    }
    ErrorReport rep;
    rep.histogram.assign(bound + 2, 0);
    std::uint64_t total = 0;
    for (Eigen::Index r = 0; r < exact.values.rows(); ++r) {
        for (Eigen::Index c = 0; c < exact.values.cols(); ++c) {
            ++rep.pairs_checked;
            const dist_t d = exact.values(r, c);
            const dist_t e = est.values(r, c);
            std::uint64_t err = 0;
            bool bad = false;
            if (is_inf(d) || is_inf(e)) {
                bad = is_inf(d) != is_inf(e);
            } else if (e < d || e - d > bound) {
                bad = true;
            } else {
                err = e - d;
            }
            if (bad) {
                ++rep.violations;
                ++rep.histogram.back();
                continue;
            }
            ++rep.histogram[err];
            rep.max_error = std::max(rep.max_error, err);
            total += err;
        }
    }
    rep.mean_error = rep.pairs_checked == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(rep.pairs_checked);
    return rep;
}

ErrorReport verify(const Graph& g, const DistanceMatrix& est, std::uint64_t bound) {
    if (est.values.rows() != static_cast<Eigen::Index>(g.num_vertices()) ||
        est.values.cols() != static_cast<Eigen::Index>(g.num_vertices())) {
        throw InputError("estimates must be n x n for a graph with n = " + std::to_string(g.num_vertices()));
    }
    ErrorReport rep = compare_estimates(exact_apsp_oracle(g), est, bound);
    rep.n = g.num_vertices();
    rep.m = g.num_edges();
    return rep;
}

std::string report_csv_header() {
    return "algo,n,m,params,k,max_error,mean_error,err_hist,pairs_checked,violations,wall_ms";
}

std::string report_csv_row(const ErrorReport& r) {
    std::ostringstream out;
    out << r.algo << ',' << r.n << ',' << r.m << ',' << r.params << ',' << r.k << ',';
    if (r.histogram.empty()) {
        // not verified
        out << ",,,,";
    } else {
        char mean[32];
        std::snprintf(mean, sizeof mean, "%.6f", r.mean_error);
        out << r.max_error << ',' << mean << ',';
        for (std::size_t i = 0; i < r.histogram.size(); ++i) {
            out << (i ? "|" : "") << r.histogram[i];
        }
        out << ',' << r.pairs_checked << ',' << r.violations;
    }
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", r.wall_ms);
    out << ',' << wall;
    return out.str();
}

} // namespace apsp
