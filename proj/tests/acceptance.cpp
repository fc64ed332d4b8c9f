// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>

#include <fmt/core.h>

#include <degsim/cyclestats.hpp>
#include <degsim/degseq.hpp>
#include <degsim/experiments.hpp>
#include <degsim/explore.hpp>
#include <degsim/graphgen.hpp>
#include <degsim/kernel.hpp>
#include <degsim/powerlaw.hpp>

#include "oracles.hpp"

using namespace degsim;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

// 1. Cycle counts against exhaustive enumeration.
Outcome exact_enumeration() {
    const auto table = c_table(9);
    for (int t = 0; t <= 9; ++t) {
        const auto brute = oracle::count_2regular(t);
        if (table.exact(t) != BigInt(brute))
            return fail(fmt::format("C_{} = {} but enumeration gives {}", t, table.exact(t).str(), brute));
    }
    return {true, fmt::format("C_4={} C_5={} C_6={} C_9={}", table.exact(4).str(), table.exact(5).str(),
                              table.exact(6).str(), table.exact(9).str())};
}

// 2. Cycle counts against C_t ~ (1 + 5/(8t)) e^(-3/4) t! / sqrt(pi t).
Outcome asymptotic_agreement() {
    const auto table = c_table(200);
    auto ratio = [&](std::int64_t t, double correction) {
        const double td = static_cast<double>(t);
        const double log_form = std::log1p(correction / td) - 0.75 - 0.5 * std::log(std::numbers::pi * td) +
                                std::lgamma(td + 1);
        return std::exp(table.log_count(t) - log_form);
    };
    bool shrinking = true;
    double previous = INFINITY;
    std::string scan;
    for (std::int64_t t : {20, 50, 100, 200}) {
        const double dev = std::fabs(ratio(t, 0.625) - 1);
        shrinking = shrinking && dev < previous;
        previous = dev;
        scan += fmt::format(" {}:{:.5f}", t, ratio(t, 0.625));
    }
    const double r100 = ratio(100, 0.625);
    const bool in_band = r100 >= 0.99 && r100 <= 1.01;
    return {in_band && shrinking,
            fmt::format("ratio(100)={:.6f} band [0.99,1.01] {}; shrinking {}; ratios{}; with 1-5/(8t) "
                        "instead: ratio(100)={:.8f}",
                        r100, in_band ? "ok" : "MISSED", shrinking ? "yes" : "no", scan, ratio(100, -0.625))};
}

// 3. Normalization and the exact three-cycle ratio.
Outcome normalization() {
    const auto table = c_table(2000);
    for (std::int64_t t = 3; t <= 30; ++t) {
        BigRational sum = 0;
        for (std::int64_t ell = 3; ell <= t; ++ell)
            sum += p_cycle_exact(ell, t, table);
        if (sum != 1)
            return fail(fmt::format("sum of p_cycle at t={} is not 1", t));
    }
    CounterRng rng(3003);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        const auto n2 = static_cast<std::int64_t>(rng.below(2001));
        const auto mp = 1 + static_cast<std::int64_t>(rng.below(500));
        double s = 0;
        for (double q : q_distribution(n2, mp, table))
            s += q;
        worst = std::max(worst, std::fabs(s - 1));
    }
    if (worst > 1e-12)
        return fail(fmt::format("q sums deviate from 1 by {:.3g}", worst));
    for (std::int64_t s = 0; s <= 20; ++s)
        for (std::int64_t mp = 1; mp <= 10; ++mp) {
            const BigRational lhs(two_phase_count(s, 3, mp, table), two_phase_count(s + 3, 0, mp, table));
            const BigRational rhs = BigRational(1, 6) * BigRational((s + 3) * (s + 2) * (s + 1),
                                                                    (s + mp) * (s + mp + 1) * (s + mp + 2));
            if (lhs != rhs)
                return fail(fmt::format("three-cycle ratio fails at s={} m'={}", s, mp));
        }
    return {true, fmt::format("p sums exact for t<=30; max |sum q - 1| = {:.2g}; ratio identity on 21x10 grid",
                              worst)};
}

// 4. Both samplers against the exhaustive realization lists.
Outcome sampler_uniformity() {
    const std::vector<std::pair<DegreeSequence, std::size_t>> cases = {
        {DegreeSequence::from_counts({{1, 4}}), 3},
        {DegreeSequence::from_counts({{2, 4}}), 3},
        {DegreeSequence::from_counts({{2, 2}, {1, 2}}), 2}};
    std::string detail;
    bool ok = true;
    std::uint64_t stream = 0;
    for (const auto &[seq, expected] : cases) {
        const auto all = oracle::realizations(seq.to_list());
        if (all.size() != expected)
            return fail(fmt::format("enumeration found {} realizations, expected {}", all.size(), expected));
        for (auto method : {SamplerMethod::Config, SamplerMethod::Mcmc}) {
            std::map<std::vector<Edge>, std::int64_t> freq;
            for (int i = 0; i < 30000; ++i) {
                CounterRng rng(4004, stream++);
                freq[sample_graph(seq, method, rng).edges()]++;
            }
            std::vector<std::int64_t> observed;
            for (const auto &r : all)
                observed.push_back(freq[r]);
            const double p = oracle::chi_square_uniform_p(observed);
            const bool good = freq.size() == all.size() && p > 0.01;
            ok = ok && good;
            detail += fmt::format("{}{}:p={:.3f} ", to_string(method), all.size(), p);
        }
    }
    return {ok, detail};
}

// 5. Disconnecting switches on small random graphs.
Outcome switching_bound() {
    CounterRng rng(5005);
    std::int64_t worst_ratio_num = 0, worst_n = 1;
    for (int i = 0; i < 200; ++i) {
        const auto n = static_cast<Vertex>(4 + rng.below(9));
        const double p = 0.15 + 0.6 * rng.uniform();
        const auto g = oracle::random_graph(n, p, rng);
        const auto count = count_disconnecting_switch_pairs(g);
        if (count > 8 * static_cast<std::int64_t>(n) * n)
            return fail(fmt::format("graph {} on {} vertices: {} > 8n^2", i, n, count));
        if (count * worst_n * worst_n > worst_ratio_num * n * n) {
            worst_ratio_num = count;
            worst_n = n;
        }
    }
    return {true, fmt::format("largest count/n^2 = {}/{}", worst_ratio_num, worst_n * worst_n)};
}

DegreeSequence random_mixture(CounterRng &rng, std::int64_t max_n) {
    std::vector<Degree> list;
    const auto n = 10 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_n - 9)));
    const double w1 = rng.uniform(), w2 = rng.uniform(), w3 = rng.uniform();
    for (std::int64_t i = 0; i < n; ++i) {
        const double r = rng.uniform() * (w1 + w2 + w3 + 0.2);
        list.push_back(r < w1 ? 1 : r < w1 + w2 ? 2 : r < w1 + w2 + w3 ? 3 : 4 + static_cast<Degree>(rng.below(3)));
    }
    Degree sum = 0;
    for (auto d : list)
        sum += d;
    if (sum % 2)
        list.push_back(1);
    return DegreeSequence::from_list(list);
}

// 6. build_kernel followed by subdivide is the identity.
Outcome kernel_roundtrip() {
    CounterRng rng(6006);
    int done = 0;
    while (done < 10000) {
        const auto seq = random_mixture(rng, 200);
        if (!is_feasible(seq))
            continue;
        CounterRng srng(6006, static_cast<std::uint64_t>(done) + 1);
        const auto g = sample_graph(seq, SamplerMethod::Mcmc, srng, 20 * static_cast<std::int64_t>(seq.degree_sum()));
        const auto h = build_kernel(g);
        if (subdivide(h) != g)
            return fail(fmt::format("round trip differs on instance {}", done));
        std::vector<std::int64_t> want, got;
        for (auto d : seq.to_list())
            if (d != 2)
                want.push_back(d);
        const auto hd = h.degrees();
        for (auto v : h.vertices)
            got.push_back(hd[v]);
        std::sort(got.begin(), got.end());
        if (got != want)
            return fail(fmt::format("kernel degree sequence differs on instance {}", done));
        ++done;
    }
    return {true, "10000 graphs"};
}

// 7. Exploration traces against a from-scratch boundary count.
Outcome exploration_consistency() {
    CounterRng rng(7007);
    auto recount = [](const KernelMultigraph &h, const std::set<Vertex> &S) {
        std::int64_t x = 0;
        for (const auto &e : h.edges)
            if (S.count(e.u) != S.count(e.v))
                ++x;
        return x;
    };
    std::int64_t steps = 0;
    for (int i = 0; i < 1000; ++i) {
        const bool tree = i % 5 == 0;
        KernelMultigraph h;
        std::vector<Vertex> S0;
        if (tree) {
            const auto n = static_cast<Vertex>(5 + rng.below(80));
            std::vector<Edge> edges;
            for (Vertex v = 1; v < n; ++v)
                edges.push_back({static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v))), v});
            h = build_kernel(SimpleGraph(n, edges));
            S0 = {h.vertices[rng.below(h.vertices.size())]};
        } else {
            auto seq = random_mixture(rng, 150);
            if (!is_feasible(seq)) {
                --i;
                continue;
            }
            CounterRng srng(7007, static_cast<std::uint64_t>(i) + 1);
            h = build_kernel(sample_graph(seq, SamplerMethod::Auto, srng));
            if (h.vertices.empty()) {
                --i;
                continue;
            }
            S0 = priming_set(h, 1e-4);
        }
        const auto trace = explore(h, S0, rng());
        std::set<Vertex> S(S0.begin(), S0.end());
        bool before_zero = trace.X0 > 0;
        if (trace.X0 != recount(h, S))
            return fail(fmt::format("trace {}: X0 differs from recount", i));
        for (const auto &step : trace.steps) {
            S.insert(step.w);
            ++steps;
            if (step.X != recount(h, S))
                return fail(fmt::format("trace {} step {}: X={} recount={}", i, step.t, step.X, recount(h, S)));
            if (before_zero && step.Xprime < step.X)
                return fail(fmt::format("trace {} step {}: X' < X", i, step.t));
            if (tree && before_zero && step.Xprime != step.X)
                return fail(fmt::format("tree trace {} step {}: X' != X", i, step.t));
            if (step.X == 0)
                before_zero = false;
        }
    }
    return {true, fmt::format("1000 traces, {} steps", steps)};
}

Scenario mixture(std::int64_t n, std::map<Degree, double> fractions) {
    Scenario s;
    s.kind = ScenarioKind::Mixture;
    s.n = n;
    s.fractions = std::move(fractions);
    return s;
}

std::string summary(const TrialReport &r) {
    return fmt::format("P={:.3f} ({}/{}), mean largest fraction {:.4f}, sampler {}", r.p_giant, r.successes,
                       r.trials.size(), r.mean_largest_fraction, to_string(r.method_used));
}

// 8. Cubic graphs have a giant component.
Outcome cubic_giant() {
    ExperimentSpec spec;
    spec.scenario = mixture(1000, {{3, 1.0}});
    spec.trials = 100;
    spec.gamma = 0.5;
    spec.master_seed = 8008;
    const auto r = run_experiment(spec);
    return {r.p_giant >= 0.9, summary(r)};
}

// 9. Mostly degree-1 sequences have none.
Outcome sparse_no_giant() {
    ExperimentSpec spec;
    spec.scenario = mixture(1000, {{1, 0.9}, {3, 0.1}});
    spec.trials = 100;
    spec.gamma = 0.05;
    spec.master_seed = 9009;
    const auto r = run_experiment(spec);
    return {r.p_giant <= 0.05, summary(r)};
}

// 10. Star plus matching.
Outcome star_counterexample() {
    ExperimentSpec spec;
    spec.scenario.kind = ScenarioKind::Star;
    spec.scenario.k = 99;
    spec.trials = 20;
    spec.master_seed = 1010;
    const auto r = run_experiment(spec);
    bool all = true;
    for (const auto &t : r.trials)
        all = all && t.largest_order == 199;
    const double ratio = boost::rational_cast<double>(r.invariants.ratio_hat);
    const bool ratio_ok = std::fabs(ratio - 2.90) < 0.01;
    return {all && ratio_ok,
            fmt::format("largest order 199 in all 20 trials: {}; ratio_hat = {}/{} = {:.4f}", all ? "yes" : "no",
                        r.invariants.ratio_hat.numerator(), r.invariants.ratio_hat.denominator(), ratio)};
}

// 11. Long cycles in uniform 2-regular graphs.
Outcome all_degree_two() {
    const auto r = run_all2_experiment(999, 1.0 / 8, 2000, 1111);
    const double diff = std::fabs(r.empirical - r.exact);
    const bool close = diff <= 3 * r.standard_error;
    const bool inside = r.empirical > 0.05 && r.empirical < 0.95 && r.exact > 0.05 && r.exact < 0.95;
    return {close && inside,
            fmt::format("L={} empirical {:.6f} exact {:.12f} (3 s.e. agreement {}); both in (0.05,0.95): {}",
                        r.min_length, r.empirical, r.exact, close ? "yes" : "no", inside ? "yes" : "NO")};
}

// 12. Power-law threshold.
Outcome powerlaw_threshold() {
    const double b0 = beta0(1e-4);
    const bool root_ok = std::fabs(b0 - 3.47875) <= 1e-4;
    SweepSpec low;
    low.alphas = {std::log(1e4)};
    low.betas = {3.0};
    low.gamma = 0.01;
    low.trials = 50;
    low.master_seed = 1212;
    SweepSpec high = low;
    high.betas = {3.9};
    high.gamma = 0.05;
    const auto a = run_powerlaw_sweep(low).front();
    const auto b = run_powerlaw_sweep(high).front();
    const bool ok = root_ok && a.report.p_giant >= 0.9 && b.report.p_giant <= 0.1;
    Scenario s;
    s.kind = ScenarioKind::PowerLaw;
    s.alpha = low.alphas[0];
    s.beta = 3.0;
    const auto va = classify(scenario_sequence(s).sequence, 0.05, 0.01);
    return {ok, fmt::format("beta0 = {:.6f}; beta 3.0: P={:.2f} (verdict at eps 0.05: {}); beta 3.9: P={:.2f} "
                            "(verdict {})",
                            b0, a.report.p_giant, to_string(va.verdict), b.report.p_giant, to_string(b.verdict))};
}

// 13. Property suites on random instances.
Outcome property_suites() {
    CounterRng rng(1313);
    for (int i = 0; i < 100000; ++i) {
        const auto j = 1 + static_cast<std::int64_t>(rng.below(12));
        std::vector<std::int64_t> a;
        std::int64_t sum = 0;
        for (std::int64_t k = 0; k < j; ++k) {
            auto x = 1 + static_cast<std::int64_t>(rng.below(6));
            if (x == 2)
                x = 1;
            a.push_back(x);
            sum += x;
        }
        // smallest ell meeting the precondition, plus some slack
        const auto ell = std::max<std::int64_t>(0, 2 * j - sum) + static_cast<std::int64_t>(rng.below(3));
        const auto c = check_claim0(a, ell);
        std::int64_t lhs = 0;
        for (auto x : a)
            lhs += x * (x - 2);
        if (!c.holds || c.lhs != lhs || lhs < j - 2 * ell)
            return fail(fmt::format("inequality fails on instance {}", i));
    }
    int feasible = 0;
    while (feasible < 10000) {
        const auto seq = random_mixture(rng, 120);
        if (!is_feasible(seq))
            continue;
        ++feasible;
        const auto r = r_lower_bound_check(seq);
        if (!r.holds)
            return fail(fmt::format("R = {} < bound {}", r.R, r.bound));
        auto list = seq.to_list();
        for (std::size_t k = list.size(); k > 1; --k)
            std::swap(list[k - 1], list[rng.below(k)]);
        const auto shuffled = invariants(DegreeSequence::from_list(list));
        const auto expected = oracle::invariants_from_list(list);
        if (!(shuffled == invariants(seq)) || shuffled.jD != expected.jD || shuffled.R != expected.R ||
            shuffled.M != expected.M)
            return fail("invariants depend on the order of the list");
    }
    return {true, "100000 inequality instances, 10000 feasible sequences"};
}

// 14. Dense sequences are almost connected.
Outcome dense_regime() {
    ExperimentSpec spec;
    spec.scenario = mixture(2000, {{7, 1.0}});
    spec.trials = 20;
    spec.gamma = 0.95;
    spec.master_seed = 1414;
    const auto r = run_experiment(spec);
    std::int64_t smallest = r.trials.front().largest_order;
    for (const auto &t : r.trials)
        smallest = std::min(smallest, t.largest_order);
    return {r.successes == 20, fmt::format("{}/20 trials >= 0.95n; smallest largest order {}; sampler {}",
                                           r.successes, smallest, to_string(r.method_used))};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "exact enumeration of 2-regular graphs", 10, exact_enumeration},
        {2, "asymptotic form of C_t", 5, asymptotic_agreement},
        {3, "normalization of cycle and q laws", 10, normalization},
        {4, "sampler uniformity", 120, sampler_uniformity},
        {5, "disconnecting switch bound", 120, switching_bound},
        {6, "kernel round trip", 60, kernel_roundtrip},
        {7, "exploration consistency", 60, exploration_consistency},
        {8, "cubic giant component", 120, cubic_giant},
        {9, "no giant for sparse mixture", 120, sparse_no_giant},
        {10, "star counterexample", 60, star_counterexample},
        {11, "long cycles with all degrees 2", 120, all_degree_two},
        {12, "power-law threshold", 300, powerlaw_threshold},
        {13, "property suites", 60, property_suites},
        {14, "dense regime", 60, dense_regime},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception &e) {
            out = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool pass = out.pass && in_time;
        failed += pass ? 0 : 1;
        fmt::print("{} {:2d} {} [{:.1f}s{}] {}\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                   in_time ? "" : fmt::format(" > {:.0f}s limit", c.limit_seconds), out.detail);
        std::fflush(stdout);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
