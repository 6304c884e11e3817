#include "neighborly/dual_graph.hpp"

#include <algorithm>
#include <ostream>

#include "neighborly/detail/ridges.hpp"

namespace neighborly {

DualGraph DualGraph::from_edges(std::size_t num_nodes, std::vector<Edge> edges)
{
    for (auto& [a, b] : edges) {
        if (a >= num_nodes || b >= num_nodes)
            throw Error(ErrorCode::UnknownNode, "edge endpoint outside the graph");
        if (a == b)
            throw Error(ErrorCode::UnknownNode, "loops are not allowed");
        if (a > b)
            std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    DualGraph g;
    g.adjacency_.resize(num_nodes);
    for (const auto& [a, b] : edges) {
        g.adjacency_[a].push_back(b);
        g.adjacency_[b].push_back(a);
    }
    for (auto& adj : g.adjacency_)
        std::sort(adj.begin(), adj.end());
    g.edges_ = std::move(edges);
    return g;
}

bool DualGraph::adjacent(NodeId a, NodeId b) const
{
    const auto& adj = adjacency_.at(a);
    return std::binary_search(adj.begin(), adj.end(), b);
}

DualGraph DualGraph::induced(std::vector<NodeId> nodes) const
{
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (NodeId v : nodes)
        if (v >= num_nodes())
            throw Error(ErrorCode::UnknownNode, "node " + std::to_string(v) + " not in graph");

    auto local = [&](NodeId v) -> std::ptrdiff_t {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
        return (it != nodes.end() && *it == v) ? it - nodes.begin() : -1;
    };
    std::vector<Edge> sub;
    for (const auto& [a, b] : edges_) {
        auto la = local(a);
        auto lb = local(b);
        if (la >= 0 && lb >= 0)
            sub.emplace_back(static_cast<NodeId>(la), static_cast<NodeId>(lb));
    }
    DualGraph g = from_edges(nodes.size(), std::move(sub));
    if (has_facets())
        for (NodeId v : nodes)
            g.facets_.push_back(facets_[v]);
    for (NodeId v : nodes)
        g.parent_.push_back(parent_id(v));
    return g;
}

DualGraph dual_graph(const SimplicialComplex& x)
{
    if (!is_pure(x))
        throw Error(ErrorCode::Precondition, "dual graph needs a pure complex");

    std::vector<Edge> edges;
    const auto inc = detail::ridge_incidences(x);
    detail::for_each_ridge_group(inc, [&](std::size_t first, std::size_t last) {
        for (std::size_t i = first; i < last; ++i)
            for (std::size_t j = i + 1; j < last; ++j)
                edges.emplace_back(inc[i].facet, inc[j].facet);
    });
    DualGraph g = DualGraph::from_edges(x.num_facets(), std::move(edges));
    g.facets_ = x.facets();
    return g;
}

bool is_connected(const DualGraph& g)
{
    if (g.num_nodes() == 0)
        return false;
    return components_minus(g, {}).size() == 1;
}

bool is_tree(const DualGraph& g)
{
    return is_connected(g) && g.num_edges() + 1 == g.num_nodes();
}

bool is_cycle(const DualGraph& g)
{
    if (g.num_nodes() < 3 || !is_connected(g))
        return false;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

std::vector<NodeId> articulation_points(const DualGraph& g)
{
    const std::size_t n = g.num_nodes();
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> order(n, unseen), low(n, 0);
    std::vector<bool> cut(n, false);
    std::size_t clock = 0;

    struct Frame {
        NodeId node;
        NodeId parent;
        std::size_t next;  // index into neighbors(node)
        std::size_t children;
    };
    for (NodeId root = 0; root < n; ++root) {
        if (order[root] != unseen)
            continue;
        std::vector<Frame> stack{{root, unseen, 0, 0}};
        order[root] = low[root] = clock++;
        while (!stack.empty()) {
            Frame& top = stack.back();
            const auto& adj = g.neighbors(top.node);
            if (top.next < adj.size()) {
                NodeId w = adj[top.next++];
                if (order[w] == unseen) {
                    ++top.children;
                    order[w] = low[w] = clock++;
                    stack.push_back({w, top.node, 0, 0});
                } else if (w != top.parent) {
                    low[top.node] = std::min(low[top.node], order[w]);
                }
                continue;
            }
            Frame done = top;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children > 1)
                    cut[done.node] = true;
                continue;
            }
            Frame& up = stack.back();
            low[up.node] = std::min(low[up.node], low[done.node]);
            if (up.parent != unseen && low[done.node] >= order[up.node])
                cut[up.node] = true;
        }
    }
    std::vector<NodeId> out;
    for (NodeId v = 0; v < n; ++v)
        if (cut[v])
            out.push_back(v);
    return out;
}

bool is_two_connected(const DualGraph& g)
{
    return g.num_nodes() >= 3 && is_connected(g) && articulation_points(g).empty();
}

std::vector<std::vector<NodeId>> components_minus(const DualGraph& g, const std::vector<NodeId>& removed)
{
    const std::size_t n = g.num_nodes();
    std::vector<bool> gone(n, false);
    for (NodeId v : removed) {
        if (v >= n)
            throw Error(ErrorCode::UnknownNode, "node " + std::to_string(v) + " not in graph");
        gone[v] = true;
    }

    std::vector<std::vector<NodeId>> out;
    std::vector<bool> seen(n, false);
    for (NodeId start = 0; start < n; ++start) {
        if (gone[start] || seen[start])
            continue;
        std::vector<NodeId> comp{start};
        seen[start] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (NodeId w : g.neighbors(comp[i]))
                if (!gone[w] && !seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<NodeId> high_degree_set(const DualGraph& g)
{
    std::vector<NodeId> out;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (g.degree(v) >= 3)
            out.push_back(v);
    return out;
}

DualGraph vertex_facet_subgraph(const DualGraph& g, Vertex v)
{
    if (!g.has_facets())
        throw Error(ErrorCode::Precondition, "graph carries no facets");
    std::vector<NodeId> nodes;
    for (NodeId i = 0; i < g.num_nodes(); ++i)
        if (g.facet(i).contains(v))
            nodes.push_back(i);
    if (nodes.empty())
        throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in complex");
    return g.induced(std::move(nodes));
}

DualGraph vertex_facet_subgraph(const SimplicialComplex& x, Vertex v)
{
    if (!x.has_vertex(v))
        throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in complex");
    return vertex_facet_subgraph(dual_graph(x), v);
}

void write_dot(std::ostream& out, const DualGraph& g)
{
    out << "graph dual {\n";
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        out << "  " << v;
        if (g.has_facets()) {
            out << " [label=\"";
            const Face& f = g.facet(v);
            for (std::size_t i = 0; i < f.size(); ++i)
                out << (i ? " " : "") << f[i];
            out << "\"]";
        }
        out << ";\n";
    }
    for (const auto& [a, b] : g.edges())
        out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
}

}  // namespace neighborly
