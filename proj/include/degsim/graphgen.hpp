#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <degsim/degseq.hpp>
#include <degsim/graph.hpp>
#include <degsim/rng.hpp>

namespace degsim {

struct OrientedEdge {
    Vertex from = 0;
    Vertex to = 0;
};

/// Ordered pair of oriented, distinct edges (u, v), (x, y) of a host graph.
struct OrientedEdgePair {
    OrientedEdge e1;
    OrientedEdge e2;
};

struct RejectionConfig {
    // Rejection is refused when sum d^2 / sum d exceeds this (acceptance decays
    // roughly like exp(-nu/2 - nu^2/4) with nu = sum d(d-1) / sum d).
    double max_second_moment_ratio = 6.0;
    std::int64_t max_attempts = 100'000;
};

/// Uniform simple graph with the given degrees via the pairing model with
/// rejection. Vertex i receives the i-th entry of the ascending list form.
SimpleGraph sample_configuration_rejection(const DegreeSequence &seq, std::uint64_t seed,
                                           const RejectionConfig &config = {});
SimpleGraph sample_configuration_rejection(const DegreeSequence &seq, CounterRng &rng,
                                           const RejectionConfig &config = {});

/// Replaces uv, xy by ux, vy. Returns nullopt when the result would not be
/// simple. Throws EdgeNotPresent when either edge is missing or both name the
/// same edge.
std::optional<SimpleGraph> switch_edges(const SimpleGraph &g, const OrientedEdgePair &pair);

/// Deterministic realization by the Havel–Hakimi greedy construction.
SimpleGraph havel_hakimi(const DegreeSequence &seq);

/// Heuristic burn-in 50 m log m (m = number of edges), at least 1.
std::int64_t default_burn_in(std::int64_t edges);

/// Lazy switching chain started from the Havel–Hakimi realization; invalid
/// proposals count as steps.
SimpleGraph sample_switch_mcmc(const DegreeSequence &seq, std::uint64_t seed, std::int64_t burn_in);
SimpleGraph sample_switch_mcmc(const DegreeSequence &seq, CounterRng &rng, std::int64_t burn_in);

enum class SamplerMethod { Config, Mcmc, Auto };

SamplerMethod parse_sampler_method(std::string_view name);
std::string_view to_string(SamplerMethod m);

/// Rejection when (max degree)^2 <= degree sum and the second-moment guard
/// admits it, switching chain otherwise.
SamplerMethod resolve_method(const DegreeSequence &seq, SamplerMethod requested,
                             const RejectionConfig &config = {});

/// burn_in < 0 selects default_burn_in.
SimpleGraph sample_graph(const DegreeSequence &seq, SamplerMethod method, CounterRng &rng,
                         std::int64_t burn_in = -1, const RejectionConfig &config = {});

inline constexpr Vertex kBruteForceCap = 14;

/// Counts ordered pairs of oriented distinct edges whose switch yields a simple
/// graph with more components than g. Each unordered edge pair is therefore
/// seen under 8 labelings: (uv,xy), (uv,yx), (vu,xy), (vu,yx) and the swapped
/// order. Throws TooLarge when g has more than cap vertices.
std::int64_t count_disconnecting_switch_pairs(const SimpleGraph &g, Vertex cap = kBruteForceCap);

} // namespace degsim
