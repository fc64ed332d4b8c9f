#pragma once

// Brute-force reference computations used only by the tests. None of these
// share code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include <degsim/graph.hpp>
#include <degsim/rng.hpp>

namespace oracle {

using degsim::Edge;
using degsim::SimpleGraph;
using degsim::Vertex;

// All labeled simple graphs whose vertex i has degree degrees[i] (n <= 7).
inline std::vector<std::vector<Edge>> realizations(const std::vector<std::int64_t> &degrees) {
    const auto n = static_cast<Vertex>(degrees.size());
    std::vector<Edge> all;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            all.push_back({a, b});
    std::vector<std::vector<Edge>> out;
    const std::uint64_t subsets = 1ULL << all.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::vector<std::int64_t> deg(degrees.size(), 0);
        std::vector<Edge> chosen;
        for (std::size_t k = 0; k < all.size(); ++k) {
            if (mask >> k & 1) {
                ++deg[all[k].u];
                ++deg[all[k].v];
                chosen.push_back(all[k]);
            }
        }
        if (deg == degrees)
            out.push_back(chosen);
    }
    return out;
}

// Number of labeled 2-regular simple graphs on t vertices, by backtracking over
// the edges of K_t in lexicographic order.
inline std::uint64_t count_2regular(int t) {
    std::vector<int> deg(static_cast<std::size_t>(t), 0);
    std::uint64_t count = 0;
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == t) {
            ++count;
            return;
        }
        if (j == t) {
            if (deg[i] == 2)
                rec(i + 1, i + 2);
            return;
        }
        if (deg[i] < 2 && deg[j] < 2) {
            ++deg[i];
            ++deg[j];
            rec(i, j + 1);
            --deg[i];
            --deg[j];
        }
        rec(i, j + 1);
    };
    if (t == 0)
        return 1;
    rec(0, 1);
    return count;
}

// Definition-level invariants on an explicit list (any order).
struct Invariants {
    std::int64_t M = 0, R = 0, jD = 0;
};

inline Invariants invariants_from_list(std::vector<std::int64_t> d) {
    std::sort(d.begin(), d.end());
    Invariants r;
    const auto n = static_cast<std::int64_t>(d.size());
    r.jD = n;
    std::int64_t prefix = 0;
    for (std::int64_t j = 1; j <= n; ++j) {
        prefix += d[j - 1] * (d[j - 1] - 2);
        if (prefix > 0) {
            r.jD = j;
            break;
        }
    }
    for (std::int64_t i = r.jD; i <= n; ++i)
        r.R += d[i - 1];
    for (auto x : d)
        if (x != 2)
            r.M += x;
    return r;
}

// Canonical key of an edge set.
inline std::vector<Edge> normalized(std::vector<Edge> edges) {
    for (auto &e : edges)
        if (e.u > e.v)
            std::swap(e.u, e.v);
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Upper-tail p-value of Pearson's statistic against a uniform law over k cells.
inline double chi_square_uniform_p(const std::vector<std::int64_t> &observed) {
    const auto k = observed.size();
    double total = 0;
    for (auto o : observed)
        total += static_cast<double>(o);
    const double expected = total / static_cast<double>(k);
    double stat = 0;
    for (auto o : observed)
        stat += (static_cast<double>(o) - expected) * (static_cast<double>(o) - expected) / expected;
    boost::math::chi_squared dist(static_cast<double>(k - 1));
    return boost::math::cdf(boost::math::complement(dist, stat));
}

inline double chi_square_p(const std::vector<std::int64_t> &observed,
                           const std::vector<double> &probabilities) {
    double total = 0;
    for (auto o : observed)
        total += static_cast<double>(o);
    double stat = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = total * probabilities[i];
        stat += (static_cast<double>(observed[i]) - e) * (static_cast<double>(observed[i]) - e) / e;
    }
    boost::math::chi_squared dist(static_cast<double>(observed.size() - 1));
    return boost::math::cdf(boost::math::complement(dist, stat));
}

// Random simple graph on n vertices, each pair present with probability p.
inline SimpleGraph random_graph(Vertex n, double p, degsim::CounterRng &rng) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (rng.uniform() < p)
                edges.push_back({a, b});
    return SimpleGraph(n, std::move(edges));
}

// Components by repeated relabeling (no union-find, no search order).
inline int count_components(const SimpleGraph &g) {
    std::vector<int> label(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v)
        label[v] = v;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto &e : g.edges()) {
            const int lo = std::min(label[e.u], label[e.v]);
            if (label[e.u] != lo || label[e.v] != lo) {
                label[e.u] = label[e.v] = lo;
                changed = true;
            }
        }
    }
    return static_cast<int>(std::set<int>(label.begin(), label.end()).size());
}

} // namespace oracle
