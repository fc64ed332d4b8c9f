#include <degsim/graph.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include <degsim/errors.hpp>

namespace degsim {

SimpleGraph::SimpleGraph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0)
        throw ValidationError("negative vertex count");
    for (auto &e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw ValidationError("edge endpoint out of range");
        if (e.u == e.v)
            throw ValidationError("loop at vertex " + std::to_string(e.u + 1));
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw ValidationError("repeated edge " + std::to_string(dup->u + 1) + " " +
                              std::to_string(dup->v + 1));
    adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const auto &e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto &list : adjacency_)
        std::sort(list.begin(), list.end());
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        return false;
    const auto &list = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    const Vertex other = &list == &adjacency_[a] ? b : a;
    return std::binary_search(list.begin(), list.end(), other);
}

std::vector<std::int64_t> SimpleGraph::degrees() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v)
        out[v] = static_cast<std::int64_t>(adjacency_[v].size());
    return out;
}

Components connected_components(const SimpleGraph &g) {
    Components c;
    c.label.assign(static_cast<std::size_t>(g.n()), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (c.label[s] >= 0)
            continue;
        c.label[s] = c.count;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (c.label[w] < 0) {
                    c.label[w] = c.count;
                    stack.push_back(w);
                }
            }
        }
        ++c.count;
    }
    return c;
}

void write_edge_list(std::ostream &out, const SimpleGraph &g) {
    out << "n " << g.n() << '\n';
    for (const auto &e : g.edges())
        out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

SimpleGraph read_edge_list(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    long long n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream fields(line);
        if (n < 0) {
            std::string tag;
            if (!(fields >> tag >> n) || tag != "n" || n < 0)
                throw ParseError(line_no, "expected header 'n <N>'");
            continue;
        }
        long long u = 0, v = 0;
        std::string rest;
        if (!(fields >> u >> v) || (fields >> rest))
            throw ParseError(line_no, "expected 'u v'");
        if (u < 1 || v < 1 || u > n || v > n)
            throw ParseError(line_no, "vertex label out of range 1.." + std::to_string(n));
        edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    }
    if (n < 0)
        throw ParseError(line_no, "missing header 'n <N>'");
    return SimpleGraph(static_cast<Vertex>(n), std::move(edges));
}

} // namespace degsim
