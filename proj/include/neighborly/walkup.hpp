/**
 * Stacked balls and spheres, Walkup-class membership, the closure of a
 * neighborly manifold by its 3-determined faces, combinatorial handle
 * addition, and Kühnel's cyclic complexes.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "neighborly/complex.hpp"

namespace neighborly {

/// True iff the dual graph is a tree and f_0 = f_d + d.
bool is_stacked_ball(const SimplicialComplex& x);

/**
 * Recognizes the boundary of a stacked (d+1)-ball.
 *
 * Repeatedly removes the star of a vertex whose link is the boundary of a
 * d-simplex and seals the hole with that simplex, until only the boundary of
 * a (d+1)-simplex is left. The first successful path is found greedily; when
 * greedy removal gets stuck the search backtracks over the other candidate
 * vertices (remembering dead ends) before answering false.
 *
 * Throws Precondition unless `s` is a pure, closed weak pseudomanifold.
 */
bool is_stacked_sphere(const SimplicialComplex& s);

enum class WalkupClass { K, KBar };

struct ClassReport {
    bool in_class_K = false;
    bool in_class_Kbar = false;
    /// First vertex (ascending label) whose link fails the queried class.
    std::optional<Vertex> failing_vertex;
    WalkupClass queried = WalkupClass::K;
    int d = 0;
};

/**
 * Checks every vertex link of `m`: stacked (d-1)-spheres for K(d), stacked
 * (d-1)-balls for K̄(d). Both flags are always computed. `failing_vertex`
 * refers to `query`, which defaults to K for closed inputs and K̄ otherwise.
 *
 * Throws DimensionMismatch unless `m` is pure of dimension d.
 */
ClassReport class_membership(const SimplicialComplex& m, int d,
                             std::optional<WalkupClass> query = std::nullopt);

/**
 * All maximal vertex sets whose subsets of size at most three are faces of
 * `m`. For a neighborly member M of K(d), d >= 4, this is the unique member
 * of K̄(d+1) whose boundary is M.
 */
SimplicialComplex bar_construction(const SimplicialComplex& m);

struct HandleMap {
    Face sigma1;
    Face sigma2;
    /// (x, psi(x)) for every x in sigma1.
    std::vector<std::pair<Vertex, Vertex>> psi;
};

/**
 * Removes the facets sigma1 and sigma2 and identifies each x in sigma1 with
 * psi(x). The map is validated first: both faces must be disjoint facets,
 * psi must be a bijection sigma1 -> sigma2, and no x may share a neighbor
 * with psi(x) in the edge graph. Violations throw InadmissibleHandleError
 * (or Precondition for malformed maps).
 */
SimplicialComplex handle_addition(const SimplicialComplex& x, const HandleMap& h);

/// (d+1)-dimensional complex on {0..2d+2} with facets {i..i+d+1} mod 2d+3.
SimplicialComplex kuehnel_solid(int d);
/// Boundary of kuehnel_solid(d): a neighborly d-manifold with 2d+3 vertices.
SimplicialComplex kuehnel_torus(int d);

/// Stacked d-ball with facets {i..i+d}, i = 0..count-1, whose dual graph is
/// a path.
SimplicialComplex path_ball(int d, int count);

/**
 * Seeded stacked d-ball with m facets.
 *
 * Starts from the simplex {0..d} whose d+1 ridges form the initial boundary
 * list, in ascending order of the omitted vertex. Step i (i = 1..m-1) draws r from
 * std::mt19937_64(seed) and picks boundary ridge number r % (#boundary
 * ridges) from the current list, cones it to the new vertex d+i, removes
 * that ridge from the list (order-preserving erase) and appends the d new
 * ridges in ascending order of the omitted vertex. This is the full
 * algorithm; ports reproduce fixtures by following it literally.
 */
SimplicialComplex random_stacked_ball(int d, int m, std::uint64_t seed);

}  // namespace neighborly
