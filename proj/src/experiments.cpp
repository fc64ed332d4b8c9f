#include <degsim/experiments.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include <degsim/cyclestats.hpp>
#include <degsim/errors.hpp>
#include <degsim/kernel.hpp>
#include <degsim/rng.hpp>

namespace degsim {

namespace {

// Runs job(i) for i in [0, count) on up to `threads` workers. Each job writes
// only its own slot, so the outcome does not depend on scheduling.
template <typename Job> void parallel_for(std::int64_t count, unsigned threads, Job job) {
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::int64_t>(threads, std::max<std::int64_t>(count, 1)));
    if (threads <= 1) {
        for (std::int64_t i = 0; i < count; ++i)
            job(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (auto i = next++; i < count; i = next++)
                    job(i);
            } catch (...) {
                errors[w] = std::current_exception();
                next = count;
            }
        });
    }
    for (auto &t : pool)
        t.join();
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

std::string fixed(double x) { return fmt::format("{:.6f}", x); }

} // namespace

ScenarioSequence scenario_sequence(const Scenario &s, std::int64_t vertex_budget) {
    ScenarioSequence out;
    switch (s.kind) {
    case ScenarioKind::File: {
        std::ifstream in(s.path);
        if (!in)
            throw ValidationError("cannot open degree file '" + s.path + "'");
        std::stringstream text;
        text << in.rdbuf();
        out.sequence = parse_sequence(text.str());
        break;
    }
    case ScenarioKind::PowerLaw: {
        auto acl = acl_sequence({s.alpha, s.beta}, vertex_budget);
        out.sequence = std::move(acl.sequence);
        out.parity_fixed = acl.parity_fixed;
        break;
    }
    case ScenarioKind::Star: {
        if (s.k < 1)
            throw ValidationError("star scenario needs k >= 1");
        const std::int64_t n = s.k * s.k;
        if (n > vertex_budget)
            throw Overflow("star scenario exceeds the vertex budget");
        std::map<Degree, Count> counts{{1, n - 1}};
        counts[2 * s.k] += 1;
        out.sequence = DegreeSequence::from_counts(counts);
        break;
    }
    case ScenarioKind::Mixture: {
        if (s.n < 1 || s.fractions.empty())
            throw ValidationError("mixture scenario needs n >= 1 and at least one degree");
        std::map<Degree, Count> counts;
        for (const auto &[d, f] : s.fractions) {
            if (!(f >= 0))
                throw ValidationError("mixture fractions must be non-negative");
            counts[d] = std::llround(f * static_cast<double>(s.n));
        }
        out.sequence = DegreeSequence::from_counts(counts);
        if (out.sequence.n() > vertex_budget)
            throw Overflow("mixture scenario exceeds the vertex budget");
        if (out.sequence.degree_sum() % 2 != 0) {
            ++counts[1];
            out.sequence = DegreeSequence::from_counts(counts);
            out.parity_fixed = true;
        }
        break;
    }
    }
    return out;
}

TrialReport run_experiment(const ExperimentSpec &spec, std::int64_t vertex_budget) {
    if (spec.trials < 1)
        throw ValidationError("an experiment needs at least one trial");
    if (!(spec.gamma > 0 && spec.gamma < 1))
        throw ValidationError("gamma must lie in (0, 1)");
    if (!(spec.rho > 0))
        throw ValidationError("rho must be positive");

    const auto scenario = scenario_sequence(spec.scenario, vertex_budget);
    const auto &seq = scenario.sequence;
    if (!is_feasible(seq))
        throw InfeasibleScenario("scenario degree sequence is not graphical");

    TrialReport report;
    report.invariants = invariants(seq, spec.lambda_thresh);
    report.method_used = resolve_method(seq, spec.sampler);
    report.parity_fixed = scenario.parity_fixed;
    report.trials.resize(static_cast<std::size_t>(spec.trials));

    const auto n = seq.n();
    const auto mass = report.invariants.M;
    parallel_for(spec.trials, spec.threads, [&](std::int64_t i) {
        CounterRng rng(spec.master_seed, static_cast<std::uint64_t>(i));
        const SimpleGraph g = sample_graph(seq, report.method_used, rng, spec.burn_in);
        const auto g_stats = component_stats(g);
        const auto h = build_kernel(g);
        const auto h_stats = component_stats(h);

        TrialResult r;
        r.trial = i;
        r.n = n;
        r.largest_order = g_stats.largest_order;
        r.largest_order_fraction = static_cast<double>(r.largest_order) / static_cast<double>(n);
        r.largest_kernel_size = h_stats.largest_size;
        r.largest_kernel_size_fraction =
            mass > 0 ? static_cast<double>(r.largest_kernel_size) / static_cast<double>(mass) : 0.0;
        for (const auto &c : h.deleted_cycles)
            r.cyclic_vertices += static_cast<std::int64_t>(c.size());
        r.giant = static_cast<double>(r.largest_order) >= spec.gamma * static_cast<double>(n);
        r.kernel_giant = mass > 0 && static_cast<double>(r.largest_kernel_size) >=
                                         spec.rho * spec.gamma * static_cast<double>(mass);
        report.trials[static_cast<std::size_t>(i)] = r;
    });

    for (const auto &r : report.trials) {
        report.successes += r.giant ? 1 : 0;
        report.mean_largest_fraction += r.largest_order_fraction;
        report.mean_kernel_fraction += r.largest_kernel_size_fraction;
        report.mean_cyclic_vertices += static_cast<double>(r.cyclic_vertices);
        if (r.giant && !r.kernel_giant)
            ++report.giant_without_kernel;
        if (!r.giant && r.kernel_giant)
            ++report.kernel_without_giant;
    }
    const auto trials = static_cast<double>(spec.trials);
    report.p_giant = static_cast<double>(report.successes) / trials;
    report.mean_largest_fraction /= trials;
    report.mean_kernel_fraction /= trials;
    report.mean_cyclic_vertices /= trials;
    return report;
}

void write_report_csv(std::ostream &out, const TrialReport &report) {
    out << "trial,n,largest_order,largest_order_frac,largest_kernel_size,largest_kernel_size_frac,"
           "cyclic_vertices,giant,kernel_giant\n";
    for (const auto &r : report.trials)
        out << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.trial, r.n, r.largest_order,
                           fixed(r.largest_order_fraction), r.largest_kernel_size,
                           fixed(r.largest_kernel_size_fraction), r.cyclic_vertices,
                           r.giant ? 1 : 0, r.kernel_giant ? 1 : 0);
    const auto &inv = report.invariants;
    out << fmt::format("#aggregate,trials={},successes={},p_giant={},mean_largest_frac={},"
                       "mean_kernel_frac={},mean_cyclic_vertices={},giant_without_kernel={},"
                       "kernel_without_giant={},sampler={},parity_fixed={},M={},R={},jD={},"
                       "ratio_hat={}/{}\n",
                       report.trials.size(), report.successes, fixed(report.p_giant),
                       fixed(report.mean_largest_fraction), fixed(report.mean_kernel_fraction),
                       fixed(report.mean_cyclic_vertices), report.giant_without_kernel,
                       report.kernel_without_giant, to_string(report.method_used),
                       report.parity_fixed ? 1 : 0, inv.M, inv.R, inv.jD,
                       inv.ratio_hat.numerator(), inv.ratio_hat.denominator());
}

All2Report run_all2_experiment(std::int64_t n, double gamma, std::int64_t trials, std::uint64_t seed) {
    if (n < 3)
        throw DomainError("all-degree-2 experiment needs n >= 3");
    if (!(gamma > 0 && gamma <= 1))
        throw DomainError("gamma must lie in (0, 1]");
    if (trials < 1)
        throw DomainError("an experiment needs at least one trial");

    All2Report report;
    report.n = n;
    report.gamma = gamma;
    report.trials = trials;
    // Guard the ceiling against gamma * n landing a hair above an integer.
    report.min_length = std::max<std::int64_t>(
        3, static_cast<std::int64_t>(std::ceil(gamma * static_cast<double>(n) - 1e-9)));

    const CycleCountTable table(n);
    report.exact = longest_cycle_tail(n, report.min_length, table);
    for (std::int64_t i = 0; i < trials; ++i) {
        CounterRng rng(seed, static_cast<std::uint64_t>(i));
        const auto cycles = sample_2regular(n, rng, table);
        const bool long_cycle = std::any_of(cycles.begin(), cycles.end(), [&](const auto &c) {
            return static_cast<std::int64_t>(c.size()) >= report.min_length;
        });
        report.successes += long_cycle ? 1 : 0;
    }
    report.empirical = static_cast<double>(report.successes) / static_cast<double>(trials);
    report.standard_error = std::sqrt(report.exact * (1 - report.exact) / static_cast<double>(trials));
    return report;
}

void write_all2_csv(std::ostream &out, const All2Report &r) {
    out << "n,gamma,min_length,trials,successes,empirical,exact,standard_error\n";
    out << fmt::format("{},{},{},{},{},{},{},{}\n", r.n, fixed(r.gamma), r.min_length, r.trials,
                       r.successes, fixed(r.empirical), fmt::format("{:.10f}", r.exact),
                       fixed(r.standard_error));
}

std::vector<SweepRow> run_powerlaw_sweep(const SweepSpec &spec, std::int64_t vertex_budget) {
    std::vector<SweepRow> rows;
    std::uint64_t cell = 0;
    for (double alpha : spec.alphas) {
        for (double beta : spec.betas) {
            ExperimentSpec exp;
            exp.scenario.kind = ScenarioKind::PowerLaw;
            exp.scenario.alpha = alpha;
            exp.scenario.beta = beta;
            exp.trials = spec.trials;
            exp.gamma = spec.gamma;
            exp.sampler = spec.sampler;
            exp.lambda_thresh = spec.lambda_thresh;
            exp.threads = spec.threads;
            exp.master_seed = CounterRng(spec.master_seed, cell++)();

            SweepRow row;
            row.alpha = alpha;
            row.beta = beta;
            const auto seq = acl_sequence({alpha, beta}, vertex_budget);
            row.parity_fixed = seq.parity_fixed;
            row.verdict = classify(seq.sequence, spec.eps, spec.delta, spec.lambda_thresh).verdict;
            row.report = run_experiment(exp, vertex_budget);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows, const SweepSpec &spec) {
    out << "alpha,beta,n,parity_fixed,M,R,jD,ratio_hat,verdict,trials,gamma,p_giant,"
           "mean_largest_frac\n";
    for (const auto &row : rows) {
        const auto &inv = row.report.invariants;
        out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", fixed(row.alpha),
                           fixed(row.beta), inv.n, row.parity_fixed ? 1 : 0, inv.M, inv.R, inv.jD,
                           fixed(boost::rational_cast<double>(inv.ratio_hat)), to_string(row.verdict),
                           row.report.trials.size(), fixed(spec.gamma), fixed(row.report.p_giant),
                           fixed(row.report.mean_largest_fraction));
    }
}

namespace {

Scenario parse_scenario(const nlohmann::json &j) {
    Scenario s;
    const auto type = j.at("type").get<std::string>();
    if (type == "file") {
        s.kind = ScenarioKind::File;
        s.path = j.at("path").get<std::string>();
    } else if (type == "powerlaw") {
        s.kind = ScenarioKind::PowerLaw;
        s.alpha = j.at("alpha").get<double>();
        s.beta = j.at("beta").get<double>();
    } else if (type == "star") {
        s.kind = ScenarioKind::Star;
        s.k = j.at("k").get<std::int64_t>();
    } else if (type == "mixture") {
        s.kind = ScenarioKind::Mixture;
        s.n = j.at("n").get<std::int64_t>();
        for (const auto &[key, value] : j.at("fractions").items())
            s.fractions[std::stoll(key)] = value.get<double>();
    } else {
        throw ValidationError("unknown scenario type '" + type + "'");
    }
    return s;
}

} // namespace

ExperimentFile parse_experiment_file(const nlohmann::json &doc) {
    try {
        ExperimentFile f;
        f.kind = doc.value("kind", std::string("degree"));
        if (f.kind == "degree") {
            auto &e = f.degree;
            e.scenario = parse_scenario(doc.at("scenario"));
            e.trials = doc.value("trials", e.trials);
            e.gamma = doc.value("gamma", e.gamma);
            e.rho = doc.value("rho", e.rho);
            e.sampler = parse_sampler_method(doc.value("sampler", std::string("auto")));
            e.master_seed = doc.value("seed", e.master_seed);
            e.burn_in = doc.value("burn_in", e.burn_in);
            e.lambda_thresh = doc.value("lambda", e.lambda_thresh);
            e.threads = doc.value("threads", e.threads);
        } else if (f.kind == "all2") {
            f.all2_n = doc.at("n").get<std::int64_t>();
            f.all2_gamma = doc.at("gamma").get<double>();
            f.all2_trials = doc.value("trials", std::int64_t{1000});
            f.all2_seed = doc.value("seed", std::uint64_t{0});
        } else if (f.kind == "powerlaw_sweep") {
            auto &s = f.sweep;
            s.alphas = doc.at("alphas").get<std::vector<double>>();
            s.betas = doc.at("betas").get<std::vector<double>>();
            s.gamma = doc.value("gamma", s.gamma);
            s.trials = doc.value("trials", s.trials);
            s.master_seed = doc.value("seed", s.master_seed);
            s.eps = doc.value("eps", s.eps);
            s.delta = doc.value("delta", s.delta);
            s.lambda_thresh = doc.value("lambda", s.lambda_thresh);
            s.sampler = parse_sampler_method(doc.value("sampler", std::string("auto")));
            s.threads = doc.value("threads", s.threads);
        } else {
            throw ValidationError("unknown experiment kind '" + f.kind + "'");
        }
        return f;
    } catch (const nlohmann::json::exception &err) {
        throw ValidationError(std::string("experiment spec: ") + err.what());
    } catch (const std::invalid_argument &) {
        throw ValidationError("experiment spec: mixture degrees must be integers");
    }
}

} // namespace degsim
