#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "apsp/apsp.hpp"
#include "apsp/harness.hpp"

namespace apsp {

namespace {

constexpr std::size_t kOracleLimit = 2000;

struct RunArgs {
    std::string algo;
    std::size_t k = 0;
    std::string input;
    std::string gen;
    std::optional<std::uint64_t> seed;
    bool verify = false;
    bool force = false;
    std::string report;
    std::string output;
    std::optional<double> omega;
    std::optional<std::size_t> D, d, q, delta;
};

struct VerifyArgs {
    std::string input;
    std::string estimates;
    std::uint64_t bound = 0;
    bool force = false;
};

void emit_report(const ErrorReport& rep, const std::string& path, std::ostream& out) {
    out << report_csv_header() << '\n' << report_csv_row(rep) << '\n';
    if (path.empty()) {
        return;
    }
    bool fresh = true;
    if (std::ifstream probe(path); probe) {
        fresh = probe.peek() == std::ifstream::traits_type::eof();
    }
    std::ofstream file(path, std::ios::app);
    if (!file) {
        throw InputError("cannot write report " + path);
    }
    if (fresh) {
        file << report_csv_header() << '\n';
    }
    file << report_csv_row(rep) << '\n';
}

void check_oracle_size(std::size_t n, bool force) {
    if (n > kOracleLimit && !force) {
        throw InputError("refusing oracle verification for n = " + std::to_string(n) + " > " +
                         std::to_string(kOracleLimit) + " (pass --force)");
    }
}

std::string describe_classes(const DriverTrace& trace) {
    std::string out;
    for (const ClassPlan& c : trace.classes) {
        if (c.matrix) {
            out += (out.empty() ? "" : "/") + std::to_string(c.D);
        }
    }
    return out.empty() ? "none" : out;
}

int do_run(const RunArgs& a, std::ostream& out) {
    Graph g;
    if (!a.gen.empty()) {
        GenSpec spec = GenSpec::parse(a.gen);
        if (a.seed && !spec.params.count("seed") &&
            (spec.family == "er" || spec.family == "random-regular" || spec.family == "planted-clusters" ||
             spec.family == "tree")) {
            spec.params["seed"] = std::to_string(*a.seed);
        }
        g = generate(spec);
    } else {
        g = load_edge_list(a.input);
    }
    if (a.verify) {
        check_oracle_size(g.num_vertices(), a.force);
    }

    Policy policy;
    if (a.omega) {
        policy.model = MMCostModel::square(*a.omega);
    }
    policy.switch_D = a.D;
    policy.d = a.d;
    policy.q = a.q;
    policy.delta = a.delta;
    policy.seed = a.seed.value_or(1);

    ErrorReport rep;
    rep.algo = a.algo;
    std::ostringstream params;
    params << "omega=" << policy.model.omega() << ";seed=" << policy.seed;
    if (a.D) params << ";D=" << *a.D;
    if (a.d) params << ";d=" << *a.d;
    if (a.q) params << ";q=" << *a.q;
    if (a.delta) params << ";delta=" << *a.delta;

    std::size_t k = a.k;
    DriverTrace trace;
    const auto start = std::chrono::steady_clock::now();
    EstimateMatrix est;
    if (a.algo == "exact") {
        k = 0;
        est = exact_apsp_oracle(g);
    } else if (a.algo == "dhz") {
        k = k == 0 ? 1 : k;
        est = dhz_sparse_apsp(g, k);
    } else if (a.algo == "plus2-warmup" || a.algo == "plus2-fast") {
        k = 1;
        policy.variant = a.algo == "plus2-fast" ? Plus2Variant::Grouped : Plus2Variant::Warmup;
        est = plus2_apsp(g, policy, &trace);
    } else {
        k = k == 0 ? 2 : k;
        est = plus2k_apsp(g, k, policy, &trace);
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!trace.classes.empty() || a.algo == "plus2-warmup" || a.algo == "plus2-fast" || a.algo == "plus2k") {
        params << ";matrix_D=" << describe_classes(trace);
    }
    rep.params = params.str();

    if (!a.output.empty()) {
        std::ofstream file(a.output);
        if (!file) {
            throw InputError("cannot write " + a.output);
        }
        write_estimates(est, file);
    }

    int code = 0;
    if (a.verify) {
        ErrorReport checked = verify(g, est, 2 * k);
        checked.algo = rep.algo;
        checked.params = rep.params;
        checked.wall_ms = rep.wall_ms;
        rep = std::move(checked);
        code = rep.violations == 0 ? 0 : 1;
    }
    rep.n = g.num_vertices();
    rep.m = g.num_edges();
    rep.k = k;
    emit_report(rep, a.report, out);
    return code;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
    const Graph g = load_edge_list(a.input);
    check_oracle_size(g.num_vertices(), a.force);
    std::ifstream in(a.estimates);
    if (!in) {
        throw InputError("cannot open " + a.estimates);
    }
    const DistanceMatrix est = read_estimates(in);
    ErrorReport rep = verify(g, est, a.bound);
    rep.algo = "verify";
    rep.params = "bound=" + std::to_string(a.bound);
    rep.k = static_cast<std::size_t>(a.bound / 2);
    emit_report(rep, "", out);
    return rep.violations == 0 ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Additive-approximation all-pairs shortest paths", "apsp"};
    app.require_subcommand(1);

    RunArgs run;
    CLI::App* run_cmd = app.add_subcommand("run", "Compute estimates for one graph");
    run_cmd->add_option("--algo", run.algo, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"exact", "dhz", "plus2-warmup", "plus2-fast", "plus2k"}));
    run_cmd->add_option("--k", run.k, "Approximation level (bound 2k)")->check(CLI::PositiveNumber);
    auto* input = run_cmd->add_option("--input", run.input, "Edge list file");
    auto* gen = run_cmd->add_option("--gen", run.gen, "Generator spec, e.g. er:n=300,p=0.1,seed=1");
    input->excludes(gen);
    run_cmd->add_option("--seed", run.seed, "Random seed");
    run_cmd->add_flag("--verify", run.verify, "Check every pair against exact BFS distances");
    run_cmd->add_flag("--force", run.force, "Allow verification above n = 2000");
    run_cmd->add_option("--report", run.report, "Append the report row to this CSV file");
    run_cmd->add_option("--output", run.output, "Write the estimate table as CSV");
    run_cmd->add_option("--omega", run.omega, "Square matrix multiplication exponent for the cost model")
        ->check(CLI::Range(2.0, 3.0));
    run_cmd->add_option("--D", run.D, "Degree classes at or above this take the matrix branch")
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--d", run.d, "Cluster threshold")->check(CLI::PositiveNumber);
    run_cmd->add_option("--q", run.q, "Group density")->check(CLI::PositiveNumber);
    run_cmd->add_option("--delta", run.delta, "Hitting-set threshold for +2k")->check(CLI::PositiveNumber);

    VerifyArgs ver;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Check an estimate table against a graph");
    verify_cmd->add_option("--input", ver.input, "Edge list file")->required();
    verify_cmd->add_option("--estimates", ver.estimates, "Estimate CSV")->required();
    verify_cmd->add_option("--bound", ver.bound, "Additive bound")->required();
    verify_cmd->add_flag("--force", ver.force, "Allow verification above n = 2000");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (run_cmd->parsed() && run.input.empty() && run.gen.empty()) {
            throw CLI::RequiredError("--input or --gen");
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (run_cmd->parsed()) {
            return do_run(run, out);
        }
        return do_verify(ver, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace apsp
