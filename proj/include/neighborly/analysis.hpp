/**
 * Tight-neighborliness arithmetic and mechanical checks of the structural
 * facts about neighborly members of K̄(d) and their dual graphs.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neighborly/complex.hpp"
#include "neighborly/dual_graph.hpp"

namespace neighborly {

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

struct TightNeighborlyResult {
    std::int64_t beta1 = 0;
    std::int64_t lhs = 0;  // C(f0 - d - 1, 2)
    std::int64_t rhs = 0;  // C(d + 2, 2) * beta1
    bool satisfies_inequality = false;
    bool is_equality = false;
};

/// Evaluates C(f0-d-1, 2) >= C(d+2, 2) * beta1 with beta1 over Z_2. Throws
/// Precondition if `m` is disconnected, DimensionMismatch unless dim m = d.
TightNeighborlyResult tight_neighborly_check(const SimplicialComplex& m, int d);

/// Same comparison for given parameters (no complex needed).
TightNeighborlyResult tight_neighborly_check(std::int64_t f0, std::int64_t d, std::int64_t beta1);

struct ParameterTriple {
    std::int64_t beta1 = 0;
    std::int64_t d = 0;
    std::int64_t f0 = 0;

    bool operator==(const ParameterTriple&) const = default;
};

/**
 * All (d, f0), 3 <= d <= d_max, with (f0-d-1)(f0-d-2) = beta1 (d+1)(d+2).
 * Writing m = f0-d-2 this is m(m+1) = P, solved by an exact integer square
 * root of 4P+1. Throws Range when 4P+1 would not fit in 64 bits and
 * Precondition for beta1 < 1 or d_max < 3.
 */
std::vector<ParameterTriple> parameter_solutions(std::int64_t beta1, std::int64_t d_max);

/// C(n-d-1, 2) >= d^2 + 3d + 3, the vertex bound for two handles. Throws
/// Precondition for d < 4.
bool corollary_bound_check(std::int64_t n, std::int64_t d);

// ---------------------------------------------------------------------------
// Facet sets
// ---------------------------------------------------------------------------

/// Every component of dual(m) - s has fewer than f0(m) - dim(m) facets.
bool is_critical(const SimplicialComplex& m, const std::vector<NodeId>& s);
/// The facets listed in `s` together contain every vertex of m.
bool is_cover(const SimplicialComplex& m, const std::vector<NodeId>& s);

// ---------------------------------------------------------------------------
// Structural checks
// ---------------------------------------------------------------------------

enum class Lemma {
    DualTwoConnected,     // "dual-two-connected"
    VertexFacetTree,      // "vertex-facet-tree"
    DualCounts,           // "dual-counts"
    CycleIffMinimal,      // "cycle-iff-minimal"
    Beta1DualFormula,     // "beta1-dual-formula"
    CriticalIsCover,      // "critical-is-cover"
    DegreeTwoPaths,       // "degree-two-paths"
    HighDegreeCover,      // "high-degree-cover"
};

std::string_view lemma_id(Lemma l);
/// Throws UnknownLemma for an unrecognized id.
Lemma parse_lemma(std::string_view id);
std::vector<Lemma> all_lemmas();

struct Witness {
    std::string kind;                 // "vertex", "facets", "path", "counts"
    std::vector<std::int64_t> values;
    std::string note;
};

struct LemmaReport {
    std::string id;
    bool holds = false;
    std::optional<Witness> witness;   // present iff !holds
};

/**
 * Checks one structural statement exhaustively on `m`, which must be a
 * neighborly member of K̄(dim m) other than a single simplex. A violated
 * hypothesis throws HypothesisFailure instead of passing vacuously; this
 * includes the extra vertex-count condition f0 > 2 dim + 1 of the
 * degree-two path and high-degree cover statements, dim >= 4 for the
 * high-degree cover and dim >= 5 for the beta_1 formula.
 */
LemmaReport verify_lemma(const SimplicialComplex& m, Lemma lemma);

/// Class hypothesis shared by every verify_lemma call: neighborly, not a
/// single simplex, every vertex link a stacked ball. Throws
/// HypothesisFailure naming the first violation.
void require_neighborly_kbar(const SimplicialComplex& m);

/**
 * Scans every maximal path u0..ur of the dual graph whose internal nodes
 * have degree <= 2 (both directions, from every start) and checks that the
 * vertices x_i = u_{i-1} \ u_i are distinct, all lie in u0, and r <= dim+1.
 * Returns the first violating path. Does not check any hypothesis.
 */
std::optional<std::vector<NodeId>> degree_two_path_violation(const DualGraph& g);

// ---------------------------------------------------------------------------
// Counting argument audit
// ---------------------------------------------------------------------------

struct AuditReport {
    std::vector<LemmaReport> steps;
    /// The dual graph is a cycle (no facet of degree >= 3).
    bool cycle_case = false;
    /// No vertex count n <= |T|(d+2) satisfies the tight equation for beta1.
    bool contradiction = false;
};

/**
 * Graph-level replay of the vertex-counting argument: minimum degree
 * two, the degree-sum identity sum(deg-2) = 2(eps-nu), |T| <= 2(eps-nu),
 * eps - nu = beta1 - 1, and the vertex bound n <= |T|(d+2) against the tight
 * equation (n-d-1)(n-d-2) = beta1 (d+1)(d+2). Here d is the manifold
 * dimension, one less than the solid's. In the cycle case the bound is
 * replaced by n = 2d+3 and beta1 = 1.
 */
AuditReport theorem_argument_audit(const DualGraph& g, std::int64_t n, std::int64_t d, std::int64_t beta1);

/// Complex version: also checks that the high-degree facets cover V(mbar).
AuditReport theorem_argument_audit(const SimplicialComplex& mbar, std::int64_t beta1);

}  // namespace neighborly
