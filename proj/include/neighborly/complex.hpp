/**
 * Finite abstract simplicial complexes stored by their facets.
 *
 * A complex is immutable once built. Lower-dimensional faces are enumerated
 * on demand from the facet list; nothing is cached, so concurrent reads from
 * several threads are safe.
 */
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "neighborly/error.hpp"

namespace neighborly {

using Vertex = std::uint32_t;

/**
 * A face: a strictly increasing list of vertex labels.
 *
 * The default-constructed face is the empty face of dimension -1. It only
 * shows up as a formal face inside homology and ridge bookkeeping.
 */
class Face {
public:
    Face() = default;
    Face(std::initializer_list<Vertex> vertices);

    /// Sorts the labels; throws InvalidFace on a repeated label.
    explicit Face(std::vector<Vertex> vertices);

    /// Trusts the caller that `sorted` is strictly increasing.
    static Face from_sorted(std::vector<Vertex> sorted);

    int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }

    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    auto begin() const noexcept { return vertices_.begin(); }
    auto end() const noexcept { return vertices_.end(); }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

    bool contains(Vertex v) const;
    bool is_subset_of(const Face& other) const;
    bool is_disjoint_from(const Face& other) const;
    std::size_t intersection_size(const Face& other) const;

    /// This face with `v` removed (or unchanged if absent).
    Face without(Vertex v) const;
    /// This face with the i-th vertex removed.
    Face without_index(std::size_t i) const;
    Face with(Vertex v) const;
    Face set_union(const Face& other) const;
    Face set_difference(const Face& other) const;

    auto operator<=>(const Face&) const = default;
    bool operator==(const Face&) const = default;

private:
    std::vector<Vertex> vertices_;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept;
};

/// Face counts (f_0, ..., f_d) and the Euler characteristic.
struct FVector {
    std::vector<std::int64_t> counts;
    std::int64_t euler = 0;

    bool operator==(const FVector&) const = default;
};

class SimplicialComplex {
public:
    /// The empty (void) complex. Only boundary_complex hands one out.
    SimplicialComplex() = default;

    /**
     * Canonicalizes an arbitrary facet list: duplicates are removed, faces
     * contained in other listed faces are dropped and the survivors are
     * sorted lexicographically.
     *
     * Throws EmptyComplex on an empty list and InvalidFace on an empty face.
     */
    static SimplicialComplex from_facets(std::vector<Face> faces);

    /// Builds from a list already known to be canonical (sorted, antichain).
    static SimplicialComplex from_canonical(std::vector<Face> facets);

    const std::vector<Face>& facets() const noexcept { return facets_; }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    std::size_t num_facets() const noexcept { return facets_.size(); }
    std::size_t num_vertices() const noexcept { return vertices_.size(); }
    int dim() const noexcept { return dim_; }
    bool is_empty() const noexcept { return facets_.empty(); }

    bool has_vertex(Vertex v) const;
    /// Dense index of `v` in vertices(), if present.
    std::optional<std::size_t> index_of(Vertex v) const;
    /// True iff `f` is a face (a subset of some facet). The empty face is a
    /// face of every non-empty complex.
    bool contains(const Face& f) const;
    bool has_facet(const Face& f) const;

    bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }

private:
    explicit SimplicialComplex(std::vector<Face> canonical);

    std::vector<Face> facets_;
    std::vector<Vertex> vertices_;
    int dim_ = -1;
};

/// All k-faces, sorted. k = -1 yields the empty face alone.
std::vector<Face> faces_of_dim(const SimplicialComplex& x, int k);

FVector f_vector(const SimplicialComplex& x);

/// Throws NotAFace when `alpha` is not a face of `x`. The link of a facet is
/// the empty complex.
SimplicialComplex link(const SimplicialComplex& x, const Face& alpha);

/// Facets containing `v`; equal to join({v}, link(x, v)).
SimplicialComplex star(const SimplicialComplex& x, Vertex v);

/// Throws VertexClash if the vertex sets meet. The empty complex acts as the
/// identity.
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);

SimplicialComplex skeleton(const SimplicialComplex& x, int k);

bool is_pure(const SimplicialComplex& x);
bool is_weak_pseudomanifold(const SimplicialComplex& x);
bool is_pseudomanifold(const SimplicialComplex& x);
/// Connected as a topological space (vertices joined through facets).
bool is_connected(const SimplicialComplex& x);

/// Pure subcomplex generated by the ridges lying in exactly one facet. Empty
/// for closed inputs. Throws Precondition unless `x` is a pure weak
/// pseudomanifold.
SimplicialComplex boundary_complex(const SimplicialComplex& x);

/// True iff every l-subset of the vertex set is a face. Throws Precondition
/// for l < 1.
bool is_neighborly(const SimplicialComplex& x, int l = 2);

/// The boundary of the simplex on `vertices` (which must have at least two
/// labels).
SimplicialComplex simplex_boundary(const Face& vertices);

/// A single simplex on `vertices`.
SimplicialComplex simplex(const Face& vertices);

/// Renames every vertex through `map` (indexed by dense vertex index) and
/// re-canonicalizes.
SimplicialComplex relabel(const SimplicialComplex& x, std::span<const Vertex> image_by_index);

}  // namespace neighborly
