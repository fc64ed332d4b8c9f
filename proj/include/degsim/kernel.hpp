#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include <degsim/graph.hpp>

namespace degsim {

/// Edge of the kernel multigraph together with the path of the host graph it
/// stands for. Non-loop paths run from the lower-labeled endpoint; loop paths
/// start and end at the root and visit the smaller of the root's two path
/// neighbours first.
struct KernelEdge {
    Vertex u = 0;
    Vertex v = 0;
    std::vector<Vertex> path;

    bool is_loop() const { return u == v; }
    std::size_t length() const { return path.empty() ? 0 : path.size() - 1; }

    friend auto operator<=>(const KernelEdge &, const KernelEdge &) = default;
};

/// The multigraph obtained from a simple graph by deleting its cyclic
/// components and suppressing every degree-2 vertex.
struct KernelMultigraph {
    Vertex graph_order = 0;                        // vertex count of the host graph
    std::vector<Vertex> vertices;                  // host labels of degree != 2, ascending
    std::vector<KernelEdge> edges;                 // sorted by (u, v, path)
    std::vector<std::vector<Vertex>> deleted_cycles; // cyclic order, starting at the minimum

    std::int64_t degree_sum() const { return 2 * static_cast<std::int64_t>(edges.size()); }

    /// Degree per host label (loops count twice; 0 for labels outside the kernel).
    std::vector<std::int64_t> degrees() const;

    friend bool operator==(const KernelMultigraph &, const KernelMultigraph &) = default;
};

/// Throws IsolatedVertex when g has a vertex of degree 0.
KernelMultigraph build_kernel(const SimpleGraph &g);

/// Checks the structural invariants; throws InconsistentPaths on violation.
void validate_kernel(const KernelMultigraph &h);

/// Re-inserts every path and deleted cycle. Inverse of build_kernel.
SimpleGraph subdivide(const KernelMultigraph &h);

/// Orients every path canonically and sorts the edge list.
KernelMultigraph canonicalize(KernelMultigraph h);

nlohmann::json to_json(const KernelMultigraph &h);

struct ComponentInfo {
    std::int64_t order = 0;       // vertices
    std::int64_t size = 0;        // edges (loops included)
    std::int64_t excess = 0;      // size - order
    std::int64_t near_excess = 0; // excess + |L ∩ V(K)|
    Vertex representative = 0;    // smallest vertex
};

struct ComponentStats {
    std::vector<ComponentInfo> components; // ordered by representative
    std::vector<std::int32_t> component_of; // per host label, -1 outside
    std::int64_t largest_order = 0;
    std::int64_t largest_size = 0;
    std::int64_t kernel_mass = 0;          // M: sum of degrees different from 2
    double high_degree_threshold = 0;      // sqrt(M) / ln(M); infinite when M < 2

    std::size_t count() const { return components.size(); }
};

/// Per-component statistics of the host graph. L uses M = sum of the
/// degrees different from 2.
ComponentStats component_stats(const SimpleGraph &g);

/// Per-component statistics of the kernel, M = kernel degree sum.
ComponentStats component_stats(const KernelMultigraph &h);

/// Kernel edge with a direction; `reversed` walks the stored path backwards.
struct OrientedKernelEdge {
    std::size_t edge = 0;
    bool reversed = false;
};

struct KernelEdgePair {
    OrientedKernelEdge e1;
    OrientedKernelEdge e2;
};

struct SwitchedPair {
    SimpleGraph graph;
    KernelMultigraph kernel;
};

/// Switching on the walks of g that realize two oriented kernel edges
/// e1 = uv and e2 = xy: the last edge of the first walk and the first edge of
/// the second are exchanged, which switches uv, xy into ux, vy in the kernel.
/// Returns nullopt when one of the four blocking conditions applies.
/// Throws EdgeNotPresent for out-of-range or identical kernel edges.
std::optional<SwitchedPair> extended_switch(const SimpleGraph &g, const KernelMultigraph &h,
                                            const KernelEdgePair &pair);

} // namespace degsim
