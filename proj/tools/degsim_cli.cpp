#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include <degsim/cyclestats.hpp>
#include <degsim/degseq.hpp>
#include <degsim/errors.hpp>
#include <degsim/experiments.hpp>
#include <degsim/explore.hpp>
#include <degsim/graphgen.hpp>
#include <degsim/kernel.hpp>
#include <degsim/powerlaw.hpp>

namespace {

using namespace degsim;

std::string read_text(const std::string &path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

SimpleGraph read_graph(const std::string &path) {
    std::istringstream in(read_text(path));
    return read_edge_list(in);
}

// Writes through `emit` to the file at `path`, or to stdout when it is empty or "-".
template <class F> void with_output(const std::string &path, F &&emit) {
    if (path.empty() || path == "-") {
        emit(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot write " + path);
    emit(out);
}

// "auto" selects the priming set; otherwise a comma list of 1-indexed labels.
std::vector<Vertex> parse_s0(const std::string &spec, const KernelMultigraph &h, double omega) {
    if (spec == "auto")
        return priming_set(h, omega);
    std::vector<Vertex> out;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long label = 0;
        try {
            label = std::stol(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size() || label < 1 || label > h.graph_order)
            throw ValidationError("bad --s0 entry '" + item + "'");
        out.push_back(static_cast<Vertex>(label - 1));
    }
    return out;
}

struct Options {
    std::string input;
    std::string out;
    std::uint64_t seed = 0;
    std::int64_t lambda = kDefaultLambda;
    double eps = kDefaultEps;
    double delta = kDefaultDelta;
    double omega = kDefaultOmega;
    std::string method = "auto";
    std::int64_t burn_in = -1;
    std::string s0 = "auto";
    std::int64_t budget = -1;
    bool stop_at_zero = false;
    bool json = false;
    std::int64_t t = 0;
    double alpha = 0, beta = 0;
    double tol = 1e-6;
    std::int64_t vertex_budget = kDefaultVertexBudget;
};

int run(int argc, char **argv) {
    CLI::App app{"Degree-sequence analysis and random-graph simulation"};
    app.require_subcommand(1);
    Options o;

    auto *inv = app.add_subcommand("invariants", "Invariant report of a degree sequence (JSON)");
    inv->add_option("sequence", o.input, "Degree sequence file ('-' for stdin)")->required();
    inv->add_option("--lambda", o.lambda, "Well-behavedness threshold on M")->capture_default_str();

    auto *feas = app.add_subcommand("feasible", "Print 'feasible' or 'infeasible'");
    feas->add_option("sequence", o.input, "Degree sequence file")->required();

    auto *cls = app.add_subcommand("classify", "Giant-component verdict");
    cls->add_option("sequence", o.input, "Degree sequence file")->required();
    cls->add_option("--eps", o.eps, "Giant threshold on R/M")->capture_default_str();
    cls->add_option("--delta", o.delta, "No-giant threshold on R/M")->capture_default_str();
    cls->add_option("--lambda", o.lambda, "Well-behavedness threshold on M")->capture_default_str();
    cls->add_flag("--json", o.json, "Emit the verdict and invariants as JSON");

    auto *smp = app.add_subcommand("sample", "Uniform simple graph with the given degrees");
    smp->add_option("sequence", o.input, "Degree sequence file")->required();
    smp->add_option("--method", o.method, "auto, config or mcmc")->capture_default_str();
    smp->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    smp->add_option("--burn-in", o.burn_in, "Switching steps (default 50 m ln m)");
    smp->add_option("--out", o.out, "Edge list output (default stdout)");

    auto *ker = app.add_subcommand("kernel", "Kernel multigraph of an edge list (JSON)");
    ker->add_option("edges", o.input, "Edge list file")->required();
    ker->add_option("--out", o.out, "JSON output (default stdout)");

    auto *exp = app.add_subcommand("explore", "Exploration trace on the kernel (CSV)");
    exp->add_option("edges", o.input, "Edge list file")->required();
    exp->add_option("--s0", o.s0, "'auto' (priming set) or comma list of 1-indexed vertices")
        ->capture_default_str();
    exp->add_option("--omega", o.omega, "Priming-set parameter in (0,1)")->capture_default_str();
    exp->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    exp->add_option("--budget", o.budget, "Maximum number of steps (default |V(H)|)");
    exp->add_flag("--stop-at-zero", o.stop_at_zero, "Stop at the first X_t = 0");
    exp->add_option("--csv", o.out, "Trace output (default stdout)");

    auto *cyc = app.add_subcommand("cyclestats", "Cycle counts, cycle-length law and tails (CSV)");
    cyc->add_option("--t", o.t, "Number of vertices")->required()->check(CLI::Range(0, 100000));

    auto *pl = app.add_subcommand("powerlaw", "Power-law degree sequence (#counts form)");
    pl->add_option("--alpha", o.alpha, "Log of the number of degree-1 vertices");
    pl->add_option("--beta", o.beta, "Exponent");
    pl->add_option("--vertex-budget", o.vertex_budget, "Maximum number of vertices")->capture_default_str();
    pl->add_option("--out", o.out, "Output file (default stdout)");
    auto *b0 = pl->add_subcommand("beta0", "Threshold exponent");
    b0->add_option("--tol", o.tol, "Bracket width")->capture_default_str();

    auto *xp = app.add_subcommand("experiment", "Run a JSON experiment description (CSV report)");
    xp->add_option("spec", o.input, "Experiment JSON file")->required();
    xp->add_option("--out", o.out, "Report output (default stdout)");
    xp->add_option("--seed", o.seed, "Override the master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (inv->parsed()) {
        const auto report = invariants(parse_sequence(read_text(o.input)), o.lambda);
        std::cout << to_json(report).dump(2) << '\n';
    } else if (feas->parsed()) {
        std::cout << (is_feasible(parse_sequence(read_text(o.input))) ? "feasible" : "infeasible") << '\n';
    } else if (cls->parsed()) {
        const auto c = classify(parse_sequence(read_text(o.input)), o.eps, o.delta, o.lambda);
        if (o.json) {
            nlohmann::json j{{"verdict", to_string(c.verdict)},
                             {"eps", c.epsilon_used},
                             {"delta", c.delta_used},
                             {"invariants", to_json(c.report)}};
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << to_string(c.verdict) << '\n';
        }
    } else if (smp->parsed()) {
        const auto seq = parse_sequence(read_text(o.input));
        CounterRng rng(o.seed);
        const auto g = sample_graph(seq, parse_sampler_method(o.method), rng, o.burn_in);
        with_output(o.out, [&](std::ostream &out) { write_edge_list(out, g); });
    } else if (ker->parsed()) {
        const auto h = build_kernel(read_graph(o.input));
        with_output(o.out, [&](std::ostream &out) { out << to_json(h).dump(2) << '\n'; });
    } else if (exp->parsed()) {
        const auto h = build_kernel(read_graph(o.input));
        ExploreOptions options;
        options.budget = o.budget;
        options.stop_at_zero = o.stop_at_zero;
        const auto trace = explore(h, parse_s0(o.s0, h, o.omega), o.seed, options);
        with_output(o.out, [&](std::ostream &out) { write_trace_csv(out, trace); });
        std::cerr << fmt::format("S0 size {}, X0 {}, steps {}, stop {}\n", trace.S0.size(), trace.X0,
                                 trace.steps.size(), to_string(trace.stop_reason));
    } else if (cyc->parsed()) {
        const auto table = c_table(o.t);
        if (table.has_exact(o.t))
            std::cout << "# C_" << o.t << " = " << table.exact(o.t) << '\n';
        std::cout << fmt::format("# log C_{} = {:.12g}\n", o.t, table.log_count(o.t));
        if (o.t == 0 || o.t >= 3) {
            std::cout << "ell,p_cycle,tail_at_least_ell\n";
            for (std::int64_t ell = 3; ell <= o.t; ++ell)
                std::cout << fmt::format("{},{:.12g},{:.12g}\n", ell, p_cycle(ell, o.t, table),
                                         longest_cycle_tail(o.t, ell, table));
        }
    } else if (pl->parsed()) {
        if (b0->parsed()) {
            std::cout << fmt::format("{:.10f}\n", beta0(o.tol));
        } else {
            if (pl->count("--alpha") == 0 || pl->count("--beta") == 0)
                throw ValidationError("powerlaw needs --alpha and --beta (or the beta0 subcommand)");
            const auto s = acl_sequence({o.alpha, o.beta}, o.vertex_budget);
            if (s.parity_fixed)
                std::cerr << "note: one degree-1 vertex appended to make the degree sum even\n";
            with_output(o.out, [&](std::ostream &out) { out << s.sequence.to_counts_text(); });
        }
    } else if (xp->parsed()) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(read_text(o.input));
        } catch (const nlohmann::json::exception &e) {
            throw ValidationError(std::string("experiment file: ") + e.what());
        }
        auto file = parse_experiment_file(doc);
        const bool seed_given = xp->count("--seed") > 0;
        if (file.kind == "all2") {
            const auto r = run_all2_experiment(file.all2_n, file.all2_gamma, file.all2_trials,
                                               seed_given ? o.seed : file.all2_seed);
            with_output(o.out, [&](std::ostream &out) { write_all2_csv(out, r); });
        } else if (file.kind == "powerlaw_sweep") {
            if (seed_given)
                file.sweep.master_seed = o.seed;
            const auto rows = run_powerlaw_sweep(file.sweep);
            with_output(o.out, [&](std::ostream &out) { write_sweep_csv(out, rows, file.sweep); });
        } else {
            if (seed_given)
                file.degree.master_seed = o.seed;
            const auto report = run_experiment(file.degree);
            with_output(o.out, [&](std::ostream &out) { write_report_csv(out, report); });
        }
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const degsim::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
