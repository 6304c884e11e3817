#include "neighborly/walkup.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "neighborly/detail/ridges.hpp"
#include "neighborly/dual_graph.hpp"

namespace neighborly {

bool is_stacked_ball(const SimplicialComplex& x)
{
    if (x.is_empty() || !is_pure(x))
        return false;
    const auto facets = static_cast<std::int64_t>(x.num_facets());
    const auto verts = static_cast<std::int64_t>(x.num_vertices());
    return verts == facets + x.dim() && is_tree(dual_graph(x));
}

// ---------------------------------------------------------------------------
// Stacked sphere recognition
// ---------------------------------------------------------------------------

namespace {

bool is_closed_weak_pseudomanifold(const SimplicialComplex& s)
{
    if (s.is_empty() || !is_pure(s))
        return false;
    const auto inc = detail::ridge_incidences(s);
    bool ok = true;
    detail::for_each_ridge_group(inc, [&](std::size_t first, std::size_t last) {
        if (last - first != 2)
            ok = false;
    });
    return ok;
}

using FacetSet = std::vector<Face>;  // sorted

class SpherePeeler {
public:
    explicit SpherePeeler(int dim) : dim_(dim) {}

    bool reduces(const FacetSet& facets)
    {
        const auto top = static_cast<std::size_t>(dim_ + 1);
        std::map<Vertex, std::vector<std::size_t>> star;
        for (std::size_t i = 0; i < facets.size(); ++i)
            for (Vertex v : facets[i])
                star[v].push_back(i);

        if (star.size() == top + 1)
            return facets.size() == top + 1;
        if (failed_.count(facets))
            return false;

        for (const auto& [v, incident] : star) {
            if (incident.size() != top)
                continue;
            // v sits in exactly d+1 facets; its link is the boundary of a
            // d-simplex iff those facets span only d+1 other vertices.
            std::vector<Vertex> nbrs;
            for (std::size_t i : incident)
                for (Vertex w : facets[i])
                    if (w != v)
                        nbrs.push_back(w);
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            if (nbrs.size() != top)
                continue;
            Face seal = Face::from_sorted(std::move(nbrs));
            if (std::binary_search(facets.begin(), facets.end(), seal))
                continue;

            FacetSet next;
            next.reserve(facets.size() - top + 1);
            for (std::size_t i = 0, k = 0; i < facets.size(); ++i) {
                if (k < incident.size() && incident[k] == i) {
                    ++k;
                    continue;
                }
                next.push_back(facets[i]);
            }
            next.insert(std::upper_bound(next.begin(), next.end(), seal), seal);
            if (reduces(next))
                return true;
        }
        failed_.insert(facets);
        return false;
    }

private:
    int dim_;
    std::set<FacetSet> failed_;
};

}  // namespace

bool is_stacked_sphere(const SimplicialComplex& s)
{
    if (!is_closed_weak_pseudomanifold(s))
        throw Error(ErrorCode::Precondition, "stacked sphere test needs a pure closed weak pseudomanifold");
    SpherePeeler peeler(s.dim());
    return peeler.reduces(s.facets());
}

// ---------------------------------------------------------------------------
// Walkup classes
// ---------------------------------------------------------------------------

ClassReport class_membership(const SimplicialComplex& m, int d, std::optional<WalkupClass> query)
{
    if (m.is_empty() || !is_pure(m) || m.dim() != d)
        throw Error(ErrorCode::DimensionMismatch,
                    "expected a pure complex of dimension " + std::to_string(d));

    ClassReport report;
    report.d = d;
    report.queried = query.value_or(is_closed_weak_pseudomanifold(m) ? WalkupClass::K : WalkupClass::KBar);

    std::optional<Vertex> fail_k, fail_kbar;
    for (Vertex v : m.vertices()) {
        SimplicialComplex lk = link(m, Face{v});
        const bool right_dim = !lk.is_empty() && is_pure(lk) && lk.dim() == d - 1;
        const bool sphere = right_dim && is_closed_weak_pseudomanifold(lk) && is_stacked_sphere(lk);
        const bool ball = right_dim && is_stacked_ball(lk);
        if (!sphere && !fail_k)
            fail_k = v;
        if (!ball && !fail_kbar)
            fail_kbar = v;
        if (fail_k && fail_kbar)
            break;
    }
    report.in_class_K = !fail_k;
    report.in_class_Kbar = !fail_kbar;
    report.failing_vertex = report.queried == WalkupClass::K ? fail_k : fail_kbar;
    return report;
}

// ---------------------------------------------------------------------------
// Closure by 3-determined faces
// ---------------------------------------------------------------------------

namespace {

using Bits = boost::dynamic_bitset<>;

class MaximalSetEnumerator {
public:
    explicit MaximalSetEnumerator(const SimplicialComplex& m)
        : m_(m), n_(m.num_vertices()), adjacent_(n_, Bits(n_))
    {
        if (m.dim() >= 1)
            for (const Face& e : faces_of_dim(m, 1)) {
                auto a = *m.index_of(e[0]);
                auto b = *m.index_of(e[1]);
                adjacent_[a].set(b);
                adjacent_[b].set(a);
            }
        if (m.dim() >= 2)
            for (const Face& t : faces_of_dim(m, 2)) {
                std::size_t idx[3];
                for (int i = 0; i < 3; ++i)
                    idx[i] = *m.index_of(t[i]);
                for (int i = 0; i < 3; ++i)
                    third(idx[i], idx[(i + 1) % 3]).set(idx[(i + 2) % 3]);
            }
    }

    std::vector<Face> run()
    {
        std::vector<std::size_t> current;
        Bits candidates(n_);
        candidates.set();
        extend(current, candidates, Bits(n_));
        return std::move(found_);
    }

private:
    // Vertices c with {a, b, c} a triangle.
    Bits& third(std::size_t a, std::size_t b)
    {
        auto key = static_cast<std::uint64_t>(std::min(a, b)) * n_ + std::max(a, b);
        auto [it, inserted] = triangles_.try_emplace(key, n_);
        return it->second;
    }

    // Bron-Kerbosch over the hereditary family "all pairs are edges and all
    // triples are triangles". Pivoting is unsound for triple constraints, so
    // every candidate is branched on; the excluded set keeps each maximal set
    // reported once.
    void extend(std::vector<std::size_t>& current, Bits candidates, Bits excluded)
    {
        if (candidates.none()) {
            if (excluded.none())
                report(current);
            return;
        }
        for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
            Bits compatible = adjacent_[v];
            for (std::size_t r : current)
                compatible &= third(r, v);
            current.push_back(v);
            extend(current, candidates & compatible, excluded & compatible);
            current.pop_back();
            candidates.reset(v);
            excluded.set(v);
        }
    }

    void report(const std::vector<std::size_t>& current)
    {
        std::vector<Vertex> labels;
        labels.reserve(current.size());
        for (std::size_t i : current)
            labels.push_back(m_.vertices()[i]);
        found_.emplace_back(std::move(labels));
    }

    const SimplicialComplex& m_;
    std::size_t n_;
    std::vector<Bits> adjacent_;
    std::unordered_map<std::uint64_t, Bits> triangles_;
    std::vector<Face> found_;
};

}  // namespace

SimplicialComplex bar_construction(const SimplicialComplex& m)
{
    if (m.is_empty())
        throw Error(ErrorCode::EmptyComplex, "closure of the empty complex");
    MaximalSetEnumerator enumerator(m);
    return SimplicialComplex::from_facets(enumerator.run());
}

// ---------------------------------------------------------------------------
// Handle addition
// ---------------------------------------------------------------------------

SimplicialComplex handle_addition(const SimplicialComplex& x, const HandleMap& h)
{
    if (!is_pure(x))
        throw Error(ErrorCode::Precondition, "handle addition needs a pure complex");
    if (!x.has_facet(h.sigma1) || !x.has_facet(h.sigma2))
        throw Error(ErrorCode::Precondition, "sigma1 and sigma2 must be facets");
    if (!h.sigma1.is_disjoint_from(h.sigma2))
        throw Error(ErrorCode::Precondition, "sigma1 and sigma2 must be disjoint");

    std::vector<Vertex> domain, range;
    for (const auto& [a, b] : h.psi) {
        domain.push_back(a);
        range.push_back(b);
    }
    std::sort(domain.begin(), domain.end());
    std::sort(range.begin(), range.end());
    if (domain != h.sigma1.vertices() || range != h.sigma2.vertices())
        throw Error(ErrorCode::Precondition, "psi must be a bijection sigma1 -> sigma2");

    const std::size_t n = x.num_vertices();
    std::vector<Bits> adjacent(n, Bits(n));
    for (const Face& e : faces_of_dim(x, 1)) {
        auto a = *x.index_of(e[0]);
        auto b = *x.index_of(e[1]);
        adjacent[a].set(b);
        adjacent[b].set(a);
    }
    for (const auto& [a, b] : h.psi) {
        auto ia = *x.index_of(a);
        auto ib = *x.index_of(b);
        if (adjacent[ia].test(ib))
            throw InadmissibleHandleError(a, b, std::nullopt,
                                          "vertices " + std::to_string(a) + " and " + std::to_string(b) + " are adjacent");
        Bits common = adjacent[ia] & adjacent[ib];
        if (common.any()) {
            Vertex c = x.vertices()[common.find_first()];
            throw InadmissibleHandleError(a, b, c,
                                          "vertices " + std::to_string(a) + " and " + std::to_string(b)
                                              + " share neighbor " + std::to_string(c));
        }
    }

    std::vector<Vertex> image(x.vertices());
    for (const auto& [a, b] : h.psi)
        image[*x.index_of(a)] = b;

    std::vector<Face> out;
    for (const Face& f : x.facets()) {
        if (f == h.sigma1 || f == h.sigma2)
            continue;
        std::vector<Vertex> mapped;
        for (Vertex v : f)
            mapped.push_back(image[*x.index_of(v)]);
        out.emplace_back(std::move(mapped));
    }
    const std::size_t expected = out.size();
    SimplicialComplex result = SimplicialComplex::from_facets(std::move(out));
    if (result.num_facets() != expected)
        throw Error(ErrorCode::Precondition, "identification merged distinct facets");
    return result;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

SimplicialComplex kuehnel_solid(int d)
{
    if (d < 2)
        throw Error(ErrorCode::Range, "Kuehnel complexes need d >= 2");
    const int n = 2 * d + 3;
    std::vector<Face> facets;
    for (int i = 0; i < n; ++i) {
        std::vector<Vertex> f;
        for (int j = 0; j <= d + 1; ++j)
            f.push_back(static_cast<Vertex>((i + j) % n));
        facets.emplace_back(std::move(f));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex kuehnel_torus(int d)
{
    return boundary_complex(kuehnel_solid(d));
}

SimplicialComplex path_ball(int d, int count)
{
    if (d < 1 || count < 1)
        throw Error(ErrorCode::Range, "path ball needs d >= 1 and count >= 1");
    std::vector<Face> facets;
    for (int i = 0; i < count; ++i) {
        std::vector<Vertex> f;
        for (int j = 0; j <= d; ++j)
            f.push_back(static_cast<Vertex>(i + j));
        facets.push_back(Face::from_sorted(std::move(f)));
    }
    return SimplicialComplex::from_canonical(std::move(facets));
}

SimplicialComplex random_stacked_ball(int d, int m, std::uint64_t seed)
{
    if (d < 1 || m < 1)
        throw Error(ErrorCode::Range, "stacked ball needs d >= 1 and m >= 1");

    std::mt19937_64 rng(seed);
    std::vector<Vertex> first(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i)
        first[static_cast<std::size_t>(i)] = static_cast<Vertex>(i);
    const Face root = Face::from_sorted(first);

    std::vector<Face> facets{root};
    std::vector<Face> open_ridges;
    for (std::size_t i = 0; i < root.size(); ++i)
        open_ridges.push_back(root.without_index(i));

    for (int step = 1; step < m; ++step) {
        const auto pick = static_cast<std::size_t>(rng() % open_ridges.size());
        const Face ridge = open_ridges[pick];
        open_ridges.erase(open_ridges.begin() + static_cast<std::ptrdiff_t>(pick));

        const auto fresh = static_cast<Vertex>(d + step);
        const Face facet = ridge.with(fresh);
        for (Vertex u : ridge)
            open_ridges.push_back(facet.without(u));
        facets.push_back(facet);
    }
    std::sort(facets.begin(), facets.end());
    return SimplicialComplex::from_canonical(std::move(facets));
}

}  // namespace neighborly
