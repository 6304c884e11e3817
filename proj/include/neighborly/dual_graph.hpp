/**
 * Facet-adjacency (dual) graphs of pure complexes and the graph predicates
 * used by the structural checks in analysis.hpp.
 */
#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "neighborly/complex.hpp"

namespace neighborly {

using NodeId = std::size_t;
using Edge = std::pair<NodeId, NodeId>;

/**
 * Simple undirected graph on nodes 0..nu-1.
 *
 * When built from a complex, node i is the i-th facet in canonical order and
 * facet(i) returns it. Graphs built from an explicit edge list carry no
 * facets. An induced subgraph remembers the parent id of each of its nodes.
 */
class DualGraph {
public:
    DualGraph() = default;

    /// Edges are normalized to (min, max) and deduplicated; loops and
    /// out-of-range endpoints throw UnknownNode.
    static DualGraph from_edges(std::size_t num_nodes, std::vector<Edge> edges);

    std::size_t num_nodes() const noexcept { return adjacency_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<NodeId>& neighbors(NodeId v) const { return adjacency_.at(v); }
    std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }
    bool adjacent(NodeId a, NodeId b) const;

    bool has_facets() const noexcept { return !facets_.empty(); }
    const Face& facet(NodeId v) const { return facets_.at(v); }
    const std::vector<Face>& facets() const noexcept { return facets_; }

    /// Parent-graph id of each node; identity for a non-induced graph.
    NodeId parent_id(NodeId v) const { return parent_.empty() ? v : parent_.at(v); }

    /// Subgraph induced on `nodes` (sorted, deduplicated internally).
    DualGraph induced(std::vector<NodeId> nodes) const;

private:
    friend DualGraph dual_graph(const SimplicialComplex& x);

    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<Edge> edges_;
    std::vector<Face> facets_;
    std::vector<NodeId> parent_;
};

/// Throws Precondition on a non-pure complex.
DualGraph dual_graph(const SimplicialComplex& x);

bool is_connected(const DualGraph& g);
bool is_tree(const DualGraph& g);
/// Connected, 2-regular and at least three nodes.
bool is_cycle(const DualGraph& g);

/// At least three nodes, connected, and no articulation point.
bool is_two_connected(const DualGraph& g);
std::vector<NodeId> articulation_points(const DualGraph& g);

/// Components of g - removed, each sorted, ordered by smallest member.
/// Throws UnknownNode for ids outside the graph.
std::vector<std::vector<NodeId>> components_minus(const DualGraph& g, const std::vector<NodeId>& removed);

/// Nodes of degree three or more.
std::vector<NodeId> high_degree_set(const DualGraph& g);

/// Induced subgraph of dual_graph(x) on the facets containing v.
DualGraph vertex_facet_subgraph(const SimplicialComplex& x, Vertex v);
DualGraph vertex_facet_subgraph(const DualGraph& g, Vertex v);

/// Graphviz rendering; facet-backed nodes are labelled by their vertices.
void write_dot(std::ostream& out, const DualGraph& g);

}  // namespace neighborly
