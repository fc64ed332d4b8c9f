#include <degsim/explore.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include <degsim/errors.hpp>
#include <degsim/rng.hpp>

namespace degsim {

namespace {

// Fenwick tree over non-negative weights supporting weighted sampling.
class WeightTree {
  public:
    explicit WeightTree(std::size_t n) : tree_(n + 1, 0) {}

    void add(std::size_t i, std::int64_t delta) {
        total_ += delta;
        for (++i; i < tree_.size(); i += i & (~i + 1))
            tree_[i] += delta;
    }

    std::int64_t total() const { return total_; }

    // Smallest index whose inclusive prefix sum exceeds target (0 <= target < total).
    std::size_t find(std::int64_t target) const {
        std::size_t pos = 0;
        std::size_t step = 1;
        while (step * 2 < tree_.size())
            step *= 2;
        for (; step > 0; step /= 2) {
            if (pos + step < tree_.size() && tree_[pos + step] <= target) {
                pos += step;
                target -= tree_[pos];
            }
        }
        return pos;
    }

  private:
    std::vector<std::int64_t> tree_;
    std::int64_t total_ = 0;
};

} // namespace

std::vector<Vertex> priming_set_for_mass(const KernelMultigraph &h, double threshold) {
    const auto degree = h.degrees();
    std::vector<Vertex> order = h.vertices;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });
    std::vector<Vertex> S;
    double sum = 0;
    for (Vertex v : order) {
        if (sum >= threshold)
            break;
        S.push_back(v);
        sum += static_cast<double>(degree[v]);
    }
    std::sort(S.begin(), S.end());
    return S;
}

std::vector<Vertex> priming_set(const KernelMultigraph &h, double omega) {
    if (!(omega > 0 && omega < 1))
        throw DomainError("omega must lie in (0, 1)");
    const double threshold = 5.0 * std::pow(omega, 0.25) * static_cast<double>(h.degree_sum());
    return priming_set_for_mass(h, threshold);
}

std::string_view to_string(StopReason r) {
    switch (r) {
    case StopReason::Exhausted:
        return "Exhausted";
    case StopReason::XZero:
        return "XZero";
    case StopReason::Budget:
        return "Budget";
    }
    return "Exhausted";
}

ExplorationTrace explore(const KernelMultigraph &h, const std::vector<Vertex> &S0,
                         std::uint64_t seed, const ExploreOptions &options) {
    if (S0.empty())
        throw EmptyS0("exploration needs a non-empty initial set");

    const auto n = static_cast<std::size_t>(h.graph_order);
    const auto degree = h.degrees();
    std::vector<char> in_kernel(n, 0);
    for (Vertex v : h.vertices)
        in_kernel[v] = 1;

    std::vector<std::vector<Vertex>> darts(n); // non-loop neighbours, with multiplicity
    std::vector<std::int64_t> loops(n, 0);
    for (const auto &e : h.edges) {
        if (e.is_loop()) {
            ++loops[e.u];
        } else {
            darts[e.u].push_back(e.v);
            darts[e.v].push_back(e.u);
        }
    }

    ExplorationTrace trace;
    trace.S0 = S0;
    std::sort(trace.S0.begin(), trace.S0.end());
    trace.S0.erase(std::unique(trace.S0.begin(), trace.S0.end()), trace.S0.end());

    std::vector<char> in_S(n, 0);
    std::vector<std::int64_t> boundary(n, 0);
    std::set<Vertex> boundary_vertices;
    WeightTree outside(n);
    std::int64_t remaining_mass = 0;
    for (Vertex v : h.vertices) {
        outside.add(static_cast<std::size_t>(v), degree[v]);
        remaining_mass += degree[v];
    }

    std::int64_t X = 0;
    std::int64_t Xprime = 0;
    const auto join = [&](Vertex w) {
        in_S[w] = 1;
        outside.add(static_cast<std::size_t>(w), -degree[w]);
        remaining_mass -= degree[w];
        for (Vertex y : darts[w]) {
            if (in_S[y]) {
                if (--boundary[y] == 0)
                    boundary_vertices.erase(y);
                --X;
            } else {
                ++boundary[w];
                ++X;
            }
        }
        if (boundary[w] > 0)
            boundary_vertices.insert(w);
    };
    for (Vertex v : trace.S0) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || !in_kernel[v])
            throw ValidationError("initial vertex " + std::to_string(v + 1) + " is not in the kernel");
        join(v);
        Xprime += degree[v];
    }
    trace.X0 = X;
    trace.Xprime0 = Xprime;

    const auto vertex_count = static_cast<std::int64_t>(h.vertices.size());
    const std::int64_t to_explore = vertex_count - static_cast<std::int64_t>(trace.S0.size());
    const std::int64_t budget = options.budget < 0 ? vertex_count : options.budget;

    CounterRng rng(seed);
    std::vector<Vertex> candidates;
    for (std::int64_t t = 1; t <= to_explore; ++t) {
        if (t > budget) {
            trace.stop_reason = StopReason::Budget;
            return trace;
        }
        ExplorationStep step;
        step.t = t;
        if (X == 0) {
            if (outside.total() <= 0)
                throw InconsistentPaths("exploration reached kernel vertices of degree 0");
            step.w = static_cast<Vertex>(outside.find(static_cast<std::int64_t>(
                rng.below(static_cast<std::uint64_t>(outside.total())))));
        } else {
            const Vertex v = *boundary_vertices.begin();
            candidates.clear();
            for (Vertex y : darts[v])
                if (!in_S[y])
                    candidates.push_back(y);
            step.v = v;
            step.w = candidates[rng.below(candidates.size())];
        }
        const Vertex w = step.w;
        std::int64_t into_S = 0;
        for (Vertex y : darts[w])
            if (in_S[y])
                ++into_S;
        step.degree_w = degree[w];
        step.dprime = loops[w] + into_S - (step.v ? 1 : 0);
        join(w);
        Xprime += degree[w] - 2;
        step.X = X;
        step.Xprime = Xprime;
        step.remaining_mass = remaining_mass;
        trace.steps.push_back(step);

        if (options.stop_at_zero && X == 0) {
            trace.stop_reason = StopReason::XZero;
            return trace;
        }
    }
    trace.stop_reason = StopReason::Exhausted;
    return trace;
}

void write_trace_csv(std::ostream &out, const ExplorationTrace &trace) {
    out << "t,v,w,deg_w,dprime,X,Xprime\n";
    for (const auto &s : trace.steps) {
        out << s.t << ',';
        if (s.v)
            out << *s.v + 1;
        out << ',' << s.w + 1 << ',' << s.degree_w << ',' << s.dprime << ',' << s.X << ','
            << s.Xprime << '\n';
    }
}

} // namespace degsim
