#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include <degsim/degseq.hpp>
#include <degsim/graphgen.hpp>
#include <degsim/powerlaw.hpp>

namespace degsim {

enum class ScenarioKind { File, PowerLaw, Star, Mixture };

struct Scenario {
    ScenarioKind kind = ScenarioKind::Mixture;
    std::string path;                    // File
    double alpha = 0, beta = 0;          // PowerLaw
    std::int64_t k = 0;                  // Star: n = k^2, one vertex of degree 2k
    std::int64_t n = 0;                  // Mixture scale
    std::map<Degree, double> fractions;  // Mixture: degree -> fraction of n
};

struct ScenarioSequence {
    DegreeSequence sequence;
    bool parity_fixed = false;
};

/// Materializes the scenario. Mixtures round each fraction * n and, like the
/// power-law family, append one degree-1 vertex when the degree sum is odd.
ScenarioSequence scenario_sequence(const Scenario &s, std::int64_t vertex_budget = kDefaultVertexBudget);

struct ExperimentSpec {
    Scenario scenario;
    std::int64_t trials = 1;
    double gamma = 0.5;     // giant: largest component has >= gamma n vertices
    double rho = 0.5;       // kernel giant: largest kernel component has >= rho gamma M edges
    SamplerMethod sampler = SamplerMethod::Auto;
    std::uint64_t master_seed = 0;
    std::int64_t burn_in = -1; // < 0: default_burn_in
    std::int64_t lambda_thresh = kDefaultLambda;
    unsigned threads = 0;      // 0: hardware concurrency
};

struct TrialResult {
    std::int64_t trial = 0;
    std::int64_t n = 0;
    std::int64_t largest_order = 0;
    double largest_order_fraction = 0;
    std::int64_t largest_kernel_size = 0;
    double largest_kernel_size_fraction = 0; // of M
    std::int64_t cyclic_vertices = 0;
    bool giant = false;
    bool kernel_giant = false;
};

struct TrialReport {
    std::vector<TrialResult> trials;
    std::int64_t successes = 0;
    double p_giant = 0;
    double mean_largest_fraction = 0;
    double mean_kernel_fraction = 0;
    double mean_cyclic_vertices = 0;
    // Trials where exactly one of {giant, kernel_giant} holds.
    std::int64_t giant_without_kernel = 0;
    std::int64_t kernel_without_giant = 0;
    InvariantReport invariants;
    SamplerMethod method_used = SamplerMethod::Config;
    bool parity_fixed = false;
};

/// Throws InfeasibleScenario when the scenario's sequence is not graphical.
TrialReport run_experiment(const ExperimentSpec &spec, std::int64_t vertex_budget = kDefaultVertexBudget);

/// One row per trial, then a "#aggregate" row of key=value fields.
void write_report_csv(std::ostream &out, const TrialReport &report);

struct All2Report {
    std::int64_t n = 0;
    double gamma = 0;
    std::int64_t min_length = 0; // ceil(gamma n)
    std::int64_t trials = 0;
    std::int64_t successes = 0;
    double empirical = 0;
    double exact = 0;
    double standard_error = 0;   // sqrt(exact (1 - exact) / trials)
};

/// Uniform 2-regular graphs on n vertices: how often a cycle of length at
/// least ceil(gamma n) appears, next to the exact probability.
All2Report run_all2_experiment(std::int64_t n, double gamma, std::int64_t trials, std::uint64_t seed);

void write_all2_csv(std::ostream &out, const All2Report &report);

struct SweepSpec {
    std::vector<double> alphas;
    std::vector<double> betas;
    double gamma = 0.05;
    std::int64_t trials = 10;
    std::uint64_t master_seed = 0;
    double eps = kDefaultEps;
    double delta = kDefaultDelta;
    std::int64_t lambda_thresh = kDefaultLambda;
    SamplerMethod sampler = SamplerMethod::Auto;
    unsigned threads = 0;
};

struct SweepRow {
    double alpha = 0, beta = 0;
    bool parity_fixed = false;
    Verdict verdict = Verdict::Indeterminate;
    TrialReport report;
};

std::vector<SweepRow> run_powerlaw_sweep(const SweepSpec &spec,
                                         std::int64_t vertex_budget = kDefaultVertexBudget);

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows, const SweepSpec &spec);

/// JSON experiment description. "kind" selects "degree" (default), "all2" or
/// "powerlaw_sweep"; see README for the fields.
struct ExperimentFile {
    std::string kind;
    ExperimentSpec degree;
    SweepSpec sweep;
    std::int64_t all2_n = 0;
    double all2_gamma = 0;
    std::int64_t all2_trials = 0;
    std::uint64_t all2_seed = 0;
};

ExperimentFile parse_experiment_file(const nlohmann::json &doc);

} // namespace degsim
