#include <degsim/graphgen.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>

#include <degsim/errors.hpp>

namespace degsim {

namespace {

std::uint64_t edge_key(Vertex a, Vertex b) {
    if (a > b)
        std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

void require_feasible(const DegreeSequence &seq) {
    if (seq.n() > std::numeric_limits<Vertex>::max())
        throw TooLarge("degree sequence has too many vertices");
    if (!is_feasible(seq))
        throw InfeasibleSequence("degree sequence is not graphical");
}

double second_moment_ratio(const DegreeSequence &seq) {
    long double squares = 0;
    for (const auto &[d, mult] : seq.counts())
        squares += static_cast<long double>(d) * d * mult;
    return seq.degree_sum() == 0 ? 0.0 : static_cast<double>(squares / seq.degree_sum());
}

} // namespace

SimpleGraph sample_configuration_rejection(const DegreeSequence &seq, std::uint64_t seed,
                                           const RejectionConfig &config) {
    CounterRng rng(seed);
    return sample_configuration_rejection(seq, rng, config);
}

SimpleGraph sample_configuration_rejection(const DegreeSequence &seq, CounterRng &rng,
                                           const RejectionConfig &config) {
    require_feasible(seq);
    if (second_moment_ratio(seq) > config.max_second_moment_ratio)
        throw RejectionUnsuitable("sum d^2 / sum d is too large for rejection sampling; use the "
                                  "switching chain (--method mcmc)");

    const auto degrees = seq.to_list();
    const auto n = static_cast<Vertex>(degrees.size());
    std::vector<Vertex> stubs;
    stubs.reserve(static_cast<std::size_t>(seq.degree_sum()));
    for (Vertex v = 0; v < n; ++v)
        stubs.insert(stubs.end(), static_cast<std::size_t>(degrees[v]), v);

    std::vector<Edge> edges(stubs.size() / 2);
    std::vector<std::uint64_t> keys(edges.size());
    for (std::int64_t attempt = 0; attempt < config.max_attempts; ++attempt) {
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.below(i)]);
        bool simple = true;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const Vertex a = stubs[2 * k], b = stubs[2 * k + 1];
            if (a == b) {
                simple = false;
                break;
            }
            edges[k] = {std::min(a, b), std::max(a, b)};
            keys[k] = edge_key(a, b);
        }
        if (!simple)
            continue;
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
            continue;
        return SimpleGraph(n, edges);
    }
    throw RejectionBudgetExceeded("no simple pairing after " + std::to_string(config.max_attempts) +
                                  " attempts");
}

std::optional<SimpleGraph> switch_edges(const SimpleGraph &g, const OrientedEdgePair &pair) {
    const auto [u, v] = pair.e1;
    const auto [x, y] = pair.e2;
    if (!g.has_edge(u, v) || !g.has_edge(x, y))
        throw EdgeNotPresent("switch: edge not present in graph");
    if (edge_key(u, v) == edge_key(x, y))
        throw EdgeNotPresent("switch: the two edges must be distinct");
    if (u == x || v == y)
        return std::nullopt;

    const auto removed1 = edge_key(u, v), removed2 = edge_key(x, y);
    const auto blocked = [&](Vertex a, Vertex b) {
        const auto k = edge_key(a, b);
        return g.has_edge(a, b) && k != removed1 && k != removed2;
    };
    if (blocked(u, x) || blocked(v, y))
        return std::nullopt;

    std::vector<Edge> edges;
    edges.reserve(g.m());
    for (const auto &e : g.edges()) {
        const auto k = edge_key(e.u, e.v);
        if (k != removed1 && k != removed2)
            edges.push_back(e);
    }
    edges.push_back({u, x});
    edges.push_back({v, y});
    return SimpleGraph(g.n(), std::move(edges));
}

SimpleGraph havel_hakimi(const DegreeSequence &seq) {
    require_feasible(seq);
    const auto degrees = seq.to_list();
    const auto n = static_cast<Vertex>(degrees.size());

    std::set<std::pair<std::int64_t, Vertex>, std::greater<>> residual;
    for (Vertex v = 0; v < n; ++v)
        residual.emplace(degrees[v], v);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(seq.degree_sum() / 2));
    std::vector<std::pair<std::int64_t, Vertex>> taken;
    while (!residual.empty()) {
        auto [d, v] = *residual.begin();
        residual.erase(residual.begin());
        if (d == 0)
            break;
        if (static_cast<std::int64_t>(residual.size()) < d)
            throw InfeasibleSequence("Havel-Hakimi construction failed");
        taken.clear();
        for (std::int64_t k = 0; k < d; ++k) {
            auto it = residual.begin();
            if (it->first == 0)
                throw InfeasibleSequence("Havel-Hakimi construction failed");
            taken.push_back(*it);
            residual.erase(it);
            edges.push_back({v, taken.back().second});
        }
        for (auto [dw, w] : taken)
            if (dw > 1)
                residual.emplace(dw - 1, w);
    }
    return SimpleGraph(n, std::move(edges));
}

std::int64_t default_burn_in(std::int64_t edges) {
    if (edges < 2)
        return 1;
    return static_cast<std::int64_t>(std::ceil(50.0 * edges * std::log(static_cast<double>(edges))));
}

SimpleGraph sample_switch_mcmc(const DegreeSequence &seq, std::uint64_t seed, std::int64_t burn_in) {
    CounterRng rng(seed);
    return sample_switch_mcmc(seq, rng, burn_in);
}

SimpleGraph sample_switch_mcmc(const DegreeSequence &seq, CounterRng &rng, std::int64_t burn_in) {
    if (burn_in < 0)
        throw ValidationError("burn-in must be non-negative");
    const SimpleGraph start = havel_hakimi(seq);
    std::vector<Edge> edges = start.edges();
    const auto m = static_cast<std::uint64_t>(edges.size());
    if (m < 2)
        return start;

    std::unordered_set<std::uint64_t> present;
    present.reserve(edges.size() * 2);
    for (const auto &e : edges)
        present.insert(edge_key(e.u, e.v));

    for (std::int64_t step = 0; step < burn_in; ++step) {
        const auto i = rng.below(m);
        auto j = rng.below(m - 1);
        if (j >= i)
            ++j;
        auto [u, v] = edges[i];
        auto [x, y] = edges[j];
        if (rng.coin())
            std::swap(u, v);
        if (rng.coin())
            std::swap(x, y);
        if (u == x || v == y)
            continue;
        const auto k1 = edge_key(u, v), k2 = edge_key(x, y);
        const auto n1 = edge_key(u, x), n2 = edge_key(v, y);
        if ((n1 != k1 && n1 != k2 && present.count(n1)) ||
            (n2 != k1 && n2 != k2 && present.count(n2)))
            continue;
        present.erase(k1);
        present.erase(k2);
        present.insert(n1);
        present.insert(n2);
        edges[i] = {u, x};
        edges[j] = {v, y};
    }
    return SimpleGraph(start.n(), std::move(edges));
}

SamplerMethod parse_sampler_method(std::string_view name) {
    if (name == "config")
        return SamplerMethod::Config;
    if (name == "mcmc")
        return SamplerMethod::Mcmc;
    if (name == "auto")
        return SamplerMethod::Auto;
    throw ValidationError("unknown sampler '" + std::string(name) + "' (config|mcmc|auto)");
}

std::string_view to_string(SamplerMethod m) {
    switch (m) {
    case SamplerMethod::Config:
        return "config";
    case SamplerMethod::Mcmc:
        return "mcmc";
    case SamplerMethod::Auto:
        return "auto";
    }
    return "auto";
}

SamplerMethod resolve_method(const DegreeSequence &seq, SamplerMethod requested,
                             const RejectionConfig &config) {
    if (requested != SamplerMethod::Auto)
        return requested;
    const auto max_d = static_cast<long double>(seq.max_degree());
    const bool rejection_ok = max_d * max_d <= static_cast<long double>(seq.degree_sum()) &&
                              second_moment_ratio(seq) <= config.max_second_moment_ratio;
    return rejection_ok ? SamplerMethod::Config : SamplerMethod::Mcmc;
}

SimpleGraph sample_graph(const DegreeSequence &seq, SamplerMethod method, CounterRng &rng,
                         std::int64_t burn_in, const RejectionConfig &config) {
    if (resolve_method(seq, method, config) == SamplerMethod::Config)
        return sample_configuration_rejection(seq, rng, config);
    if (burn_in < 0)
        burn_in = default_burn_in(seq.degree_sum() / 2);
    return sample_switch_mcmc(seq, rng, burn_in);
}

std::int64_t count_disconnecting_switch_pairs(const SimpleGraph &g, Vertex cap) {
    if (g.n() > cap)
        throw TooLarge("graph has " + std::to_string(g.n()) + " vertices; brute-force cap is " +
                       std::to_string(cap));
    const auto base = connected_components(g).count;
    const auto &edges = g.edges();
    std::int64_t count = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (i == j)
                continue;
            for (int flip = 0; flip < 4; ++flip) {
                OrientedEdge e1{edges[i].u, edges[i].v};
                OrientedEdge e2{edges[j].u, edges[j].v};
                if (flip & 1)
                    std::swap(e1.from, e1.to);
                if (flip & 2)
                    std::swap(e2.from, e2.to);
                auto switched = switch_edges(g, {e1, e2});
                if (switched && connected_components(*switched).count > base)
                    ++count;
            }
        }
    }
    return count;
}

} // namespace degsim
