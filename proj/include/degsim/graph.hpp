#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <utility>
#include <vector>

namespace degsim {

using Vertex = std::int32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Labeled simple graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted; adjacency lists are sorted.
/// Instances are immutable once constructed.
class SimpleGraph {
  public:
    SimpleGraph() = default;

    /// Throws ValidationError on loops, repeated pairs, or out-of-range labels.
    SimpleGraph(Vertex n, std::vector<Edge> edges);

    Vertex n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<Vertex> &neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    bool has_edge(Vertex a, Vertex b) const;
    std::vector<std::int64_t> degrees() const;

    friend bool operator==(const SimpleGraph &a, const SimpleGraph &b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    Vertex n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Component label per vertex (labels 0..count-1 in order of smallest member).
struct Components {
    std::vector<std::int32_t> label;
    std::int32_t count = 0;
};

Components connected_components(const SimpleGraph &g);

/// Edge-list text: "n <N>" header, then "u v" per line, 1-indexed, u < v, sorted.
void write_edge_list(std::ostream &out, const SimpleGraph &g);
SimpleGraph read_edge_list(std::istream &in);

} // namespace degsim
