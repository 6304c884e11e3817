/**
 * Simplicial homology with coefficients in the two-element field, plus a
 * combinatorial orientability test.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "neighborly/complex.hpp"
#include "neighborly/gf2.hpp"

namespace neighborly {

/**
 * Faces of each dimension in lexicographic order and the boundary maps
 * between them. boundary(k) has f_{k-1} rows and f_k columns; boundary(0)
 * is the zero map out of the vertices (no rows).
 */
class Z2ChainComplex {
public:
    int dim() const noexcept { return static_cast<int>(faces_.size()) - 1; }
    const std::vector<Face>& faces(int k) const { return faces_.at(static_cast<std::size_t>(k)); }
    const gf2::BitMatrix& boundary(int k) const { return boundary_.at(static_cast<std::size_t>(k)); }

    /// True iff boundary(k-1) * boundary(k) = 0 for every k >= 2.
    bool boundary_squares_to_zero() const;

private:
    friend Z2ChainComplex chain_complex(const SimplicialComplex& x);

    std::vector<std::vector<Face>> faces_;
    std::vector<gf2::BitMatrix> boundary_;
};

struct BettiVector {
    std::vector<std::int64_t> betti;

    std::int64_t euler() const;
    std::int64_t operator[](std::size_t i) const { return i < betti.size() ? betti[i] : 0; }
    bool operator==(const BettiVector&) const = default;
};

Z2ChainComplex chain_complex(const SimplicialComplex& x);

/// beta_i = f_i - rank d_i - rank d_{i+1}, ranks by packed elimination.
BettiVector betti_z2(const SimplicialComplex& x);
BettiVector betti_z2(const Z2ChainComplex& c);

/// epsilon - nu + 1 of the dual graph. Meaningful for neighborly members of
/// K̄(d+1) with d >= 4, where it equals beta_1 of the boundary.
std::int64_t beta1_dual_formula(const SimplicialComplex& mbar);

/**
 * Propagates facet orientations along a spanning tree of the dual graph and
 * checks every other adjacency. Throws Precondition unless `m` is a closed
 * pseudomanifold (every ridge in exactly two facets, connected dual graph).
 */
bool is_orientable(const SimplicialComplex& m);

}  // namespace neighborly
