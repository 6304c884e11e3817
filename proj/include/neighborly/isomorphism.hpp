/**
 * Vertex bijections, a backtracking isomorphism test for small complexes,
 * and the reconstruction of a cyclic-dual-graph solid as Kühnel's solid.
 */
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "neighborly/complex.hpp"

namespace neighborly {

class VertexBijection {
public:
    VertexBijection() = default;
    /// Throws Precondition if a source or target label repeats.
    explicit VertexBijection(std::vector<std::pair<Vertex, Vertex>> pairs);

    /// (source, target) pairs sorted by source.
    const std::vector<std::pair<Vertex, Vertex>>& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }

    std::optional<Vertex> image(Vertex v) const;
    /// Throws UnknownVertex when `v` is outside the domain.
    Vertex at(Vertex v) const;

    Face apply(const Face& f) const;
    SimplicialComplex apply(const SimplicialComplex& x) const;

    VertexBijection inverse() const;
    /// `next` after this map: v -> next(this(v)).
    VertexBijection then(const VertexBijection& next) const;

    /// True iff the domain is V(x) and the facets of x map exactly onto the
    /// facets of y.
    bool maps_onto(const SimplicialComplex& x, const SimplicialComplex& y) const;

    bool operator==(const VertexBijection&) const = default;

private:
    std::vector<std::pair<Vertex, Vertex>> pairs_;
};

/**
 * Searches for a simplicial isomorphism x -> y.
 *
 * Vertices are split into classes by an invariant (number of facets through
 * the vertex, edge degree, f-vector of the link); the search assigns x's
 * vertices in a fixed connectivity-first order, trying targets of the same
 * class in ascending label order, and prunes on edge adjacency and on
 * completed facets. Deterministic.
 */
std::optional<VertexBijection> are_isomorphic(const SimplicialComplex& x, const SimplicialComplex& y);

/**
 * Given a solid whose dual graph is a cycle on 2d+3 facets with (d+2)-vertex
 * facets, recovers the vertex map onto kuehnel_solid(d). Each vertex must lie
 * in a run of d+2 consecutive facets along the cycle, and distinct vertices
 * in distinct runs; ordering the vertices by the end of their run gives the
 * isomorphism.
 *
 * Returns a bijection V(mbar) -> V(kuehnel_solid(d)). Throws
 * ReconstructionError naming the step ("cycle", "vertex-path", "distinct",
 * "isomorphism") whose hypothesis fails.
 */
VertexBijection uniqueness_reconstruction(const SimplicialComplex& mbar);

}  // namespace neighborly
