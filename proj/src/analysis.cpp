#include "neighborly/analysis.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>

#include "neighborly/arith.hpp"
#include "neighborly/homology.hpp"
#include "neighborly/walkup.hpp"

namespace neighborly {

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

TightNeighborlyResult tight_neighborly_check(std::int64_t f0, std::int64_t d, std::int64_t beta1)
{
    TightNeighborlyResult r;
    r.beta1 = beta1;
    r.lhs = binomial(f0 - d - 1, 2);
    r.rhs = checked_mul(binomial(d + 2, 2), beta1);
    r.satisfies_inequality = r.lhs >= r.rhs;
    r.is_equality = r.lhs == r.rhs;
    return r;
}

TightNeighborlyResult tight_neighborly_check(const SimplicialComplex& m, int d)
{
    if (m.is_empty() || m.dim() != d)
        throw Error(ErrorCode::DimensionMismatch, "expected a complex of dimension " + std::to_string(d));
    if (!is_connected(m))
        throw Error(ErrorCode::Precondition, "tight neighborliness is defined for connected complexes");
    const std::int64_t beta1 = betti_z2(m)[1];
    return tight_neighborly_check(static_cast<std::int64_t>(m.num_vertices()), d, beta1);
}

std::vector<ParameterTriple> parameter_solutions(std::int64_t beta1, std::int64_t d_max)
{
    if (beta1 < 1 || d_max < 3)
        throw Error(ErrorCode::Precondition, "need beta1 >= 1 and d_max >= 3");

    std::vector<ParameterTriple> out;
    for (std::int64_t d = 3; d <= d_max; ++d) {
        const std::int64_t product = checked_mul(checked_mul(beta1, d + 1), d + 2);
        const std::int64_t disc = checked_add(checked_mul(product, 4), 1);
        const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(disc)));
        if (root * root != disc)
            continue;
        const std::int64_t m = (root - 1) / 2;  // disc is odd, so root is odd
        out.push_back({beta1, d, m + d + 2});
    }
    return out;
}

bool corollary_bound_check(std::int64_t n, std::int64_t d)
{
    if (d < 4)
        throw Error(ErrorCode::Precondition, "the bound is stated for d >= 4");
    return binomial(n - d - 1, 2) >= checked_add(checked_mul(d, d + 3), 3);
}

// ---------------------------------------------------------------------------
// Facet sets
// ---------------------------------------------------------------------------

namespace {

bool critical_in(const DualGraph& g, std::size_t threshold, const std::vector<NodeId>& s)
{
    for (const auto& comp : components_minus(g, s))
        if (comp.size() >= threshold)
            return false;
    return true;
}

bool cover_in(const DualGraph& g, std::size_t num_vertices, const std::vector<NodeId>& s)
{
    std::vector<Vertex> seen;
    for (NodeId id : s) {
        if (id >= g.num_nodes())
            throw Error(ErrorCode::UnknownNode, "node " + std::to_string(id) + " not in graph");
        const Face& f = g.facet(id);
        seen.insert(seen.end(), f.begin(), f.end());
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return seen.size() == num_vertices;
}

std::size_t critical_threshold(const SimplicialComplex& m)
{
    return m.num_vertices() - static_cast<std::size_t>(m.dim());
}

}  // namespace

bool is_critical(const SimplicialComplex& m, const std::vector<NodeId>& s)
{
    return critical_in(dual_graph(m), critical_threshold(m), s);
}

bool is_cover(const SimplicialComplex& m, const std::vector<NodeId>& s)
{
    return cover_in(dual_graph(m), m.num_vertices(), s);
}

// ---------------------------------------------------------------------------
// Structural checks
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::pair<Lemma, std::string_view>, 8> lemma_names{{
    {Lemma::DualTwoConnected, "dual-two-connected"},
    {Lemma::VertexFacetTree, "vertex-facet-tree"},
    {Lemma::DualCounts, "dual-counts"},
    {Lemma::CycleIffMinimal, "cycle-iff-minimal"},
    {Lemma::Beta1DualFormula, "beta1-dual-formula"},
    {Lemma::CriticalIsCover, "critical-is-cover"},
    {Lemma::DegreeTwoPaths, "degree-two-paths"},
    {Lemma::HighDegreeCover, "high-degree-cover"},
}};

LemmaReport pass(Lemma l)
{
    return {std::string(lemma_id(l)), true, std::nullopt};
}

LemmaReport fail(Lemma l, Witness w)
{
    return {std::string(lemma_id(l)), false, std::move(w)};
}

std::vector<std::int64_t> as_values(const std::vector<NodeId>& ids)
{
    return {ids.begin(), ids.end()};
}

void hypothesis(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorCode::HypothesisFailure, what);
}

}  // namespace

std::string_view lemma_id(Lemma l)
{
    for (const auto& [lemma, name] : lemma_names)
        if (lemma == l)
            return name;
    return "unknown";
}

Lemma parse_lemma(std::string_view id)
{
    for (const auto& [lemma, name] : lemma_names)
        if (name == id)
            return lemma;
    throw Error(ErrorCode::UnknownLemma, "unknown check id '" + std::string(id) + "'");
}

std::vector<Lemma> all_lemmas()
{
    std::vector<Lemma> out;
    for (const auto& entry : lemma_names)
        out.push_back(entry.first);
    return out;
}

void require_neighborly_kbar(const SimplicialComplex& m)
{
    hypothesis(!m.is_empty() && is_pure(m), "complex must be pure and non-empty");
    hypothesis(m.num_facets() > 1, "complex is a single simplex");
    hypothesis(is_neighborly(m, 2), "complex is not neighborly");
    const ClassReport cls = class_membership(m, m.dim(), WalkupClass::KBar);
    hypothesis(cls.in_class_Kbar,
               "link of vertex " + std::to_string(cls.failing_vertex.value_or(0)) + " is not a stacked ball");
}

std::optional<std::vector<NodeId>> degree_two_path_violation(const DualGraph& g)
{
    if (!g.has_facets())
        throw Error(ErrorCode::Precondition, "path scan needs a facet-backed graph");
    const std::size_t n = g.num_nodes();
    for (NodeId start = 0; start < n; ++start) {
        for (NodeId second : g.neighbors(start)) {
            std::vector<NodeId> path{start, second};
            std::vector<bool> on(n, false);
            on[start] = on[second] = true;
            while (g.degree(path.back()) == 2) {
                const auto& nb = g.neighbors(path.back());
                NodeId next = (nb[0] == path[path.size() - 2]) ? nb[1] : nb[0];
                if (on[next])
                    break;
                on[next] = true;
                path.push_back(next);
            }

            const Face& u0 = g.facet(path.front());
            const std::size_t r = path.size() - 1;
            bool ok = r <= u0.size();  // u0.size() = dim + 1
            std::vector<Vertex> dropped;
            for (std::size_t i = 1; ok && i <= r; ++i) {
                Face diff = g.facet(path[i - 1]).set_difference(g.facet(path[i]));
                Vertex x = diff[0];
                if (!u0.contains(x) || std::find(dropped.begin(), dropped.end(), x) != dropped.end())
                    ok = false;
                dropped.push_back(x);
            }
            if (!ok)
                return path;
        }
    }
    return std::nullopt;
}

LemmaReport verify_lemma(const SimplicialComplex& m, Lemma lemma)
{
    require_neighborly_kbar(m);

    const DualGraph g = dual_graph(m);
    const auto n = static_cast<std::int64_t>(m.num_vertices());
    const std::int64_t dim = m.dim();
    const auto nu = static_cast<std::int64_t>(g.num_nodes());
    const auto eps = static_cast<std::int64_t>(g.num_edges());

    switch (lemma) {
    case Lemma::DualTwoConnected: {
        if (is_two_connected(g))
            return pass(lemma);
        auto cut = articulation_points(g);
        return fail(lemma, {"facets", as_values(cut), "articulation facets of the dual graph"});
    }
    case Lemma::VertexFacetTree: {
        for (Vertex v : m.vertices()) {
            DualGraph sub = vertex_facet_subgraph(g, v);
            if (static_cast<std::int64_t>(sub.num_nodes()) != n - dim || !is_tree(sub))
                return fail(lemma, {"vertex", {v}, "facets through the vertex do not form a tree of f0 - dim nodes"});
        }
        return pass(lemma);
    }
    case Lemma::DualCounts: {
        const bool ok = checked_mul(nu, dim + 1) == checked_mul(n, n - dim)
            && checked_mul(eps, dim) == checked_mul(n, n - dim - 1);
        if (ok)
            return pass(lemma);
        return fail(lemma, {"counts", {nu, eps, n, dim}, "nu, eps, f0, dim"});
    }
    case Lemma::CycleIffMinimal: {
        const bool ok = n >= 2 * dim + 1 && ((n == 2 * dim + 1) == is_cycle(g));
        if (ok)
            return pass(lemma);
        return fail(lemma, {"counts", {n, dim, is_cycle(g) ? 1 : 0}, "f0, dim, dual graph is a cycle"});
    }
    case Lemma::Beta1DualFormula: {
        hypothesis(dim >= 5, "beta_1 formula needs a solid of dimension >= 5");
        const std::int64_t formula = eps - nu + 1;
        const std::int64_t beta1 = betti_z2(boundary_complex(m))[1];
        if (formula == beta1)
            return pass(lemma);
        return fail(lemma, {"counts", {formula, beta1}, "eps - nu + 1, beta_1 of the boundary"});
    }
    case Lemma::CriticalIsCover: {
        const std::size_t threshold = critical_threshold(m);
        auto check = [&](const std::vector<NodeId>& s) -> std::optional<LemmaReport> {
            if (critical_in(g, threshold, s) && !cover_in(g, m.num_vertices(), s))
                return fail(lemma, {"facets", as_values(s), "critical facet set that misses a vertex"});
            return std::nullopt;
        };
        const std::size_t facets = g.num_nodes();
        if (facets <= 20) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << facets); ++mask) {
                std::vector<NodeId> s;
                for (std::size_t i = 0; i < facets; ++i)
                    if (mask >> i & 1U)
                        s.push_back(i);
                if (auto r = check(s))
                    return *r;
            }
        } else {
            std::mt19937_64 rng(0x5eed);
            for (int trial = 0; trial < 65536; ++trial) {
                std::vector<NodeId> s;
                for (std::size_t i = 0; i < facets; ++i)
                    if (rng() & 1U)
                        s.push_back(i);
                if (auto r = check(s))
                    return *r;
            }
        }
        return pass(lemma);
    }
    case Lemma::DegreeTwoPaths: {
        hypothesis(n > 2 * dim + 1, "path statement needs f0 > 2 dim + 1");
        if (auto path = degree_two_path_violation(g))
            return fail(lemma, {"path", as_values(*path), "maximal degree-two path violating the drop pattern"});
        return pass(lemma);
    }
    case Lemma::HighDegreeCover: {
        hypothesis(dim >= 4, "high-degree cover needs a solid of dimension >= 4");
        hypothesis(n > 2 * dim + 1, "high-degree cover needs f0 > 2 dim + 1");
        auto t = high_degree_set(g);
        if (cover_in(g, m.num_vertices(), t))
            return pass(lemma);
        return fail(lemma, {"facets", as_values(t), "high-degree facets miss a vertex"});
    }
    }
    throw Error(ErrorCode::UnknownLemma, "unhandled check");
}

// ---------------------------------------------------------------------------
// Counting argument audit
// ---------------------------------------------------------------------------

namespace {

LemmaReport step(std::string id, bool ok, std::vector<std::int64_t> values, std::string note)
{
    LemmaReport r{std::move(id), ok, std::nullopt};
    if (!ok)
        r.witness = Witness{"counts", std::move(values), std::move(note)};
    return r;
}

}  // namespace

AuditReport theorem_argument_audit(const DualGraph& g, std::int64_t n, std::int64_t d, std::int64_t beta1)
{
    AuditReport report;
    const auto nu = static_cast<std::int64_t>(g.num_nodes());
    const auto eps = static_cast<std::int64_t>(g.num_edges());

    std::int64_t min_degree = std::numeric_limits<std::int64_t>::max();
    std::int64_t excess = 0;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        const auto deg = static_cast<std::int64_t>(g.degree(v));
        min_degree = std::min(min_degree, deg);
        excess += deg - 2;
    }
    const auto t = static_cast<std::int64_t>(high_degree_set(g).size());
    report.cycle_case = (t == 0);

    report.steps.push_back(step("min-degree-two", nu > 0 && min_degree >= 2, {min_degree}, "minimum degree"));
    report.steps.push_back(step("degree-sum-identity", excess == 2 * (eps - nu), {excess, eps, nu},
                                "sum(deg - 2), eps, nu"));
    report.steps.push_back(step("high-degree-bound", t <= 2 * (eps - nu), {t, eps - nu}, "|T|, eps - nu"));
    report.steps.push_back(step("beta1-from-dual", eps - nu + 1 == beta1, {eps - nu + 1, beta1},
                                "eps - nu + 1, beta1"));

    const TightNeighborlyResult tight = tight_neighborly_check(n, d, beta1);
    if (report.cycle_case) {
        report.steps.push_back(step("cycle-vertex-count", n == 2 * d + 3, {n, d}, "f0, d"));
        report.steps.push_back(step("tight-equation", tight.is_equality, {tight.lhs, tight.rhs}, "lhs, rhs"));
        // a cycle forces n = 2d+3 and eps - nu + 1 = 1
        report.contradiction = !tight_neighborly_check(2 * d + 3, d, beta1).is_equality || eps - nu + 1 != beta1;
        return report;
    }

    const std::int64_t bound = checked_mul(t, d + 2);
    report.steps.push_back(step("vertex-bound", n <= bound, {n, bound}, "f0, |T|(d+2)"));
    report.steps.push_back(step("tight-equation", tight.is_equality, {tight.lhs, tight.rhs}, "lhs, rhs"));

    // The tight equation has at most one solution n for given (beta1, d).
    bool feasible = false;
    for (std::int64_t candidate = d + 1; candidate <= bound; ++candidate)
        if (tight_neighborly_check(candidate, d, beta1).is_equality)
            feasible = true;
    report.contradiction = !feasible;
    return report;
}

AuditReport theorem_argument_audit(const SimplicialComplex& mbar, std::int64_t beta1)
{
    const DualGraph g = dual_graph(mbar);
    const auto n = static_cast<std::int64_t>(mbar.num_vertices());
    const std::int64_t d = mbar.dim() - 1;
    AuditReport report = theorem_argument_audit(g, n, d, beta1);
    if (!report.cycle_case) {
        auto t = high_degree_set(g);
        report.steps.push_back(step("high-degree-cover", cover_in(g, mbar.num_vertices(), t),
                                    as_values(t), "high-degree facets"));
    }
    return report;
}

}  // namespace neighborly
