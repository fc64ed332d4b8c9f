#include <degsim/kernel.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>

#include <degsim/errors.hpp>

namespace degsim {

namespace {

std::uint64_t dart_key(Vertex from, Vertex to) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(from)) << 32) |
           static_cast<std::uint32_t>(to);
}

void orient(KernelEdge &e) {
    auto &p = e.path;
    if (p.size() < 2)
        return;
    if (p.front() == p.back()) {
        if (p.size() > 2 && p[1] > p[p.size() - 2])
            std::reverse(p.begin(), p.end());
    } else if (p.front() > p.back()) {
        std::reverse(p.begin(), p.end());
    }
    e.u = p.front();
    e.v = p.back();
}

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }

    std::vector<std::size_t> parent;
};

double high_degree_threshold(std::int64_t mass) {
    if (mass < 2)
        return std::numeric_limits<double>::infinity();
    const auto m = static_cast<double>(mass);
    return std::sqrt(m) / std::log(m);
}

// Groups `members` by union-find root and fills the per-component records.
ComponentStats collect(Vertex graph_order, const std::vector<Vertex> &members,
                       const std::vector<std::int64_t> &degree, DisjointSets &sets,
                       const std::vector<std::int64_t> &size_by_root, std::int64_t mass) {
    ComponentStats stats;
    stats.kernel_mass = mass;
    stats.high_degree_threshold = high_degree_threshold(mass);
    stats.component_of.assign(static_cast<std::size_t>(graph_order), -1);

    std::map<std::size_t, std::int32_t> index_of_root;
    for (Vertex v : members) {
        const auto root = sets.find(static_cast<std::size_t>(v));
        auto [it, inserted] = index_of_root.try_emplace(root, static_cast<std::int32_t>(stats.components.size()));
        if (inserted) {
            ComponentInfo info;
            info.representative = v;
            info.size = size_by_root[root];
            stats.components.push_back(info);
        }
        auto &info = stats.components[it->second];
        ++info.order;
        // degree-2 vertices are suppressed in the kernel and never belong to L
        if (degree[v] != 2 && static_cast<double>(degree[v]) > stats.high_degree_threshold)
            ++info.near_excess;
        stats.component_of[v] = it->second;
    }
    for (auto &info : stats.components) {
        info.excess = info.size - info.order;
        info.near_excess += info.excess;
        stats.largest_order = std::max(stats.largest_order, info.order);
        stats.largest_size = std::max(stats.largest_size, info.size);
    }
    return stats;
}

} // namespace

std::vector<std::int64_t> KernelMultigraph::degrees() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(graph_order), 0);
    for (const auto &e : edges) {
        ++out[e.u];
        ++out[e.v];
    }
    return out;
}

KernelMultigraph build_kernel(const SimpleGraph &g) {
    KernelMultigraph h;
    h.graph_order = g.n();
    for (Vertex v = 0; v < g.n(); ++v) {
        if (g.degree(v) == 0)
            throw IsolatedVertex("vertex " + std::to_string(v + 1) + " has degree 0");
        if (g.degree(v) != 2)
            h.vertices.push_back(v);
    }

    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::unordered_set<std::uint64_t> used;
    for (Vertex root : h.vertices) {
        seen[root] = 1;
        for (Vertex first : g.neighbors(root)) {
            if (used.count(dart_key(root, first)))
                continue;
            KernelEdge e;
            e.path = {root};
            Vertex prev = root, cur = first;
            while (g.degree(cur) == 2) {
                e.path.push_back(cur);
                seen[cur] = 1;
                const auto &nb = g.neighbors(cur);
                const Vertex next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            e.path.push_back(cur);
            used.insert(dart_key(root, first));
            used.insert(dart_key(cur, prev));
            orient(e);
            h.edges.push_back(std::move(e));
        }
    }
    std::sort(h.edges.begin(), h.edges.end());

    // Whatever remains unseen has degree 2 throughout its component: a cycle.
    for (Vertex start = 0; start < g.n(); ++start) {
        if (seen[start])
            continue;
        std::vector<Vertex> cycle{start};
        seen[start] = 1;
        Vertex prev = start, cur = g.neighbors(start)[0];
        while (cur != start) {
            cycle.push_back(cur);
            seen[cur] = 1;
            const auto &nb = g.neighbors(cur);
            const Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        h.deleted_cycles.push_back(std::move(cycle));
    }
    return h;
}

void validate_kernel(const KernelMultigraph &h) {
    const auto fail = [](const std::string &what) { throw InconsistentPaths(what); };
    const auto n = static_cast<std::size_t>(h.graph_order);
    const auto in_range = [&](Vertex v) { return v >= 0 && v < h.graph_order; };

    std::vector<char> role(n, 0); // 1 kernel vertex, 2 path interior, 3 cycle
    for (Vertex v : h.vertices) {
        if (!in_range(v) || role[v])
            fail("kernel vertex out of range or repeated");
        role[v] = 1;
    }
    std::map<std::pair<Vertex, Vertex>, int> unsubdivided;
    for (const auto &e : h.edges) {
        if (e.path.size() < 2 || e.path.front() != e.u || e.path.back() != e.v)
            fail("kernel edge path does not join its endpoints");
        if (!in_range(e.u) || !in_range(e.v) || role[e.u] != 1 || role[e.v] != 1)
            fail("kernel edge endpoint is not a kernel vertex");
        if (e.is_loop() && e.length() < 3)
            fail("loop at vertex " + std::to_string(e.u + 1) + " is subdivided fewer than twice");
        if (e.length() == 1 && ++unsubdivided[{std::min(e.u, e.v), std::max(e.u, e.v)}] > 1)
            fail("parallel class holds more than one unsubdivided edge");
        for (std::size_t i = 1; i + 1 < e.path.size(); ++i) {
            const Vertex w = e.path[i];
            if (!in_range(w) || role[w])
                fail("path interior vertex repeated or out of range");
            role[w] = 2;
        }
    }
    const auto degree = h.degrees();
    for (Vertex v : h.vertices)
        if (degree[v] == 2 || degree[v] == 0)
            fail("kernel vertex " + std::to_string(v + 1) + " has degree " +
                 std::to_string(degree[v]));
    for (const auto &cycle : h.deleted_cycles) {
        if (cycle.size() < 3)
            fail("deleted cycle shorter than 3");
        for (Vertex w : cycle) {
            if (!in_range(w) || role[w])
                fail("deleted cycle vertex repeated or out of range");
            role[w] = 3;
        }
    }
    if (std::find(role.begin(), role.end(), 0) != role.end())
        fail("some host vertex is covered by neither the kernel nor a deleted cycle");
}

SimpleGraph subdivide(const KernelMultigraph &h) {
    validate_kernel(h);
    std::vector<Edge> edges;
    for (const auto &e : h.edges)
        for (std::size_t i = 0; i + 1 < e.path.size(); ++i)
            edges.push_back({e.path[i], e.path[i + 1]});
    for (const auto &cycle : h.deleted_cycles)
        for (std::size_t i = 0; i < cycle.size(); ++i)
            edges.push_back({cycle[i], cycle[(i + 1) % cycle.size()]});
    try {
        return SimpleGraph(h.graph_order, std::move(edges));
    } catch (const ValidationError &err) {
        throw InconsistentPaths(std::string("subdivision is not simple: ") + err.what());
    }
}

KernelMultigraph canonicalize(KernelMultigraph h) {
    for (auto &e : h.edges)
        orient(e);
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

nlohmann::json to_json(const KernelMultigraph &h) {
    nlohmann::json vertices = nlohmann::json::array();
    for (Vertex v : h.vertices)
        vertices.push_back(v + 1);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto &e : h.edges)
        edges.push_back({{"u", e.u + 1}, {"v", e.v + 1}, {"length", e.length()}, {"loop", e.is_loop()}});
    nlohmann::json cycles = nlohmann::json::array();
    for (const auto &c : h.deleted_cycles)
        cycles.push_back(c.size());
    return {{"graph_order", h.graph_order},
            {"vertices", vertices},
            {"edges", edges},
            {"deleted_cycle_sizes", cycles}};
}

ComponentStats component_stats(const SimpleGraph &g) {
    DisjointSets sets(static_cast<std::size_t>(g.n()));
    for (const auto &e : g.edges())
        sets.unite(e.u, e.v);
    std::vector<std::int64_t> size_by_root(static_cast<std::size_t>(g.n()), 0);
    for (const auto &e : g.edges())
        ++size_by_root[sets.find(e.u)];

    std::vector<Vertex> members(static_cast<std::size_t>(g.n()));
    std::iota(members.begin(), members.end(), 0);
    const auto degree = g.degrees();
    std::int64_t mass = 0;
    for (auto d : degree)
        if (d != 2)
            mass += d;
    return collect(g.n(), members, degree, sets, size_by_root, mass);
}

ComponentStats component_stats(const KernelMultigraph &h) {
    DisjointSets sets(static_cast<std::size_t>(h.graph_order));
    for (const auto &e : h.edges)
        sets.unite(e.u, e.v);
    std::vector<std::int64_t> size_by_root(static_cast<std::size_t>(h.graph_order), 0);
    for (const auto &e : h.edges)
        ++size_by_root[sets.find(e.u)];
    return collect(h.graph_order, h.vertices, h.degrees(), sets, size_by_root, h.degree_sum());
}

std::optional<SwitchedPair> extended_switch(const SimpleGraph &g, const KernelMultigraph &h,
                                            const KernelEdgePair &pair) {
    if (pair.e1.edge >= h.edges.size() || pair.e2.edge >= h.edges.size())
        throw EdgeNotPresent("extended switch: kernel edge index out of range");
    if (pair.e1.edge == pair.e2.edge)
        throw EdgeNotPresent("extended switch: the two kernel edges must be distinct");

    const auto walk = [&](const OrientedKernelEdge &oe) {
        auto p = h.edges[oe.edge].path;
        if (oe.reversed)
            std::reverse(p.begin(), p.end());
        return p;
    };
    const auto w = walk(pair.e1); // u = w_0, ..., w_r = v
    const auto z = walk(pair.e2); // x = z_0, ..., z_s = y
    const std::size_t r = w.size() - 1, s = z.size() - 1;
    const Vertex u = w.front(), v = w.back(), x = z.front(), y = z.back();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!g.has_edge(w[i], w[i + 1]))
            throw EdgeNotPresent("extended switch: kernel path is not a walk of the graph");
    for (std::size_t i = 0; i + 1 < z.size(); ++i)
        if (!g.has_edge(z[i], z[i + 1]))
            throw EdgeNotPresent("extended switch: kernel path is not a walk of the graph");

    // A G-edge between a and b other than the single-edge walks e1 / e2.
    const auto foreign_edge = [&](Vertex a, Vertex b) {
        if (!g.has_edge(a, b))
            return false;
        const auto is = [&](const std::vector<Vertex> &p) {
            return p.size() == 2 && ((p[0] == a && p[1] == b) || (p[0] == b && p[1] == a));
        };
        return !is(w) && !is(z);
    };
    if (foreign_edge(u, x) && r == 1)
        return std::nullopt; // (i)
    if (foreign_edge(v, y) && s == 1)
        return std::nullopt; // (ii)
    if (u == x && r <= 2)
        return std::nullopt; // (iii)
    if (v == y && s <= 2)
        return std::nullopt; // (iv)

    const Vertex w_last = w[r - 1], z_first = z[1];
    std::vector<Edge> edges;
    edges.reserve(g.m());
    const auto same = [](const Edge &e, Vertex a, Vertex b) {
        return (e.u == a && e.v == b) || (e.u == b && e.v == a);
    };
    for (const auto &e : g.edges())
        if (!same(e, w_last, v) && !same(e, x, z_first))
            edges.push_back(e);
    edges.push_back({w_last, x});
    edges.push_back({v, z_first});

    SwitchedPair out{SimpleGraph(g.n(), std::move(edges)), h};
    KernelEdge first, second;
    first.path.assign(w.begin(), w.end() - 1);
    first.path.push_back(x);
    second.path.push_back(v);
    second.path.insert(second.path.end(), z.begin() + 1, z.end());
    orient(first);
    orient(second);

    auto &kedges = out.kernel.edges;
    const auto hi = std::max(pair.e1.edge, pair.e2.edge), lo = std::min(pair.e1.edge, pair.e2.edge);
    kedges.erase(kedges.begin() + static_cast<std::ptrdiff_t>(hi));
    kedges.erase(kedges.begin() + static_cast<std::ptrdiff_t>(lo));
    kedges.push_back(std::move(first));
    kedges.push_back(std::move(second));
    std::sort(kedges.begin(), kedges.end());
    return out;
}

} // namespace degsim
