#include "neighborly/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include <boost/dynamic_bitset.hpp>

#include "neighborly/dual_graph.hpp"
#include "neighborly/walkup.hpp"

namespace neighborly {

// ---------------------------------------------------------------------------
// VertexBijection
// ---------------------------------------------------------------------------

VertexBijection::VertexBijection(std::vector<std::pair<Vertex, Vertex>> pairs)
    : pairs_(std::move(pairs))
{
    std::sort(pairs_.begin(), pairs_.end());
    std::vector<Vertex> targets;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (i > 0 && pairs_[i].first == pairs_[i - 1].first)
            throw Error(ErrorCode::Precondition, "bijection maps a vertex twice");
        targets.push_back(pairs_[i].second);
    }
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
        throw Error(ErrorCode::Precondition, "bijection is not injective");
}

std::optional<Vertex> VertexBijection::image(Vertex v) const
{
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(v, Vertex{0}));
    if (it == pairs_.end() || it->first != v)
        return std::nullopt;
    return it->second;
}

Vertex VertexBijection::at(Vertex v) const
{
    if (auto w = image(v))
        return *w;
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " outside bijection domain");
}

Face VertexBijection::apply(const Face& f) const
{
    std::vector<Vertex> out;
    out.reserve(f.size());
    for (Vertex v : f)
        out.push_back(at(v));
    return Face(std::move(out));
}

SimplicialComplex VertexBijection::apply(const SimplicialComplex& x) const
{
    std::vector<Face> out;
    out.reserve(x.num_facets());
    for (const Face& f : x.facets())
        out.push_back(apply(f));
    return SimplicialComplex::from_facets(std::move(out));
}

VertexBijection VertexBijection::inverse() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(pairs_.size());
    for (const auto& [a, b] : pairs_)
        out.emplace_back(b, a);
    return VertexBijection(std::move(out));
}

VertexBijection VertexBijection::then(const VertexBijection& next) const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(pairs_.size());
    for (const auto& [a, b] : pairs_)
        out.emplace_back(a, next.at(b));
    return VertexBijection(std::move(out));
}

bool VertexBijection::maps_onto(const SimplicialComplex& x, const SimplicialComplex& y) const
{
    if (pairs_.size() != x.num_vertices() || x.num_facets() != y.num_facets())
        return false;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (pairs_[i].first != x.vertices()[i])
            return false;
    return apply(x) == y;
}

// ---------------------------------------------------------------------------
// Isomorphism search
// ---------------------------------------------------------------------------

namespace {

using Bits = boost::dynamic_bitset<>;
using Signature = std::vector<std::int64_t>;

struct Indexed {
    const SimplicialComplex& x;
    std::vector<Bits> adjacent;
    std::vector<Signature> signature;
    /// Facet ids through each vertex; a vertex set is a face iff the
    /// intersection over its members is non-empty.
    std::vector<Bits> facets_of;
    /// Vertex indices of each facet.
    std::vector<std::vector<std::size_t>> facet_members;

    explicit Indexed(const SimplicialComplex& c)
        : x(c), adjacent(c.num_vertices(), Bits(c.num_vertices())),
          facets_of(c.num_vertices(), Bits(c.num_facets()))
    {
        for (std::size_t fi = 0; fi < c.num_facets(); ++fi) {
            std::vector<std::size_t> members;
            for (Vertex v : c.facets()[fi]) {
                members.push_back(*c.index_of(v));
                facets_of[members.back()].set(fi);
            }
            facet_members.push_back(std::move(members));
        }
        if (c.dim() >= 1)
            for (const Face& e : faces_of_dim(c, 1)) {
                auto a = *c.index_of(e[0]);
                auto b = *c.index_of(e[1]);
                adjacent[a].set(b);
                adjacent[b].set(a);
            }
        for (std::size_t i = 0; i < c.num_vertices(); ++i) {
            Vertex v = c.vertices()[i];
            Signature s;
            std::vector<std::int64_t> star_sizes;
            for (const Face& f : c.facets())
                if (f.contains(v))
                    star_sizes.push_back(static_cast<std::int64_t>(f.size()));
            std::sort(star_sizes.begin(), star_sizes.end());
            s.push_back(static_cast<std::int64_t>(star_sizes.size()));
            s.push_back(static_cast<std::int64_t>(adjacent[i].count()));
            s.insert(s.end(), star_sizes.begin(), star_sizes.end());
            SimplicialComplex lk = link(c, Face{v});
            if (!lk.is_empty()) {
                FVector fv = f_vector(lk);
                s.push_back(-1);  // separator
                s.insert(s.end(), fv.counts.begin(), fv.counts.end());
            }
            signature.push_back(std::move(s));
        }
    }
};

class IsoSearch {
public:
    IsoSearch(const Indexed& a, const Indexed& b) : a_(a), b_(b), n_(a.x.num_vertices())
    {
        for (const Face& f : b.x.facets())
            target_facets_.insert(f);

        // class id per vertex, shared between both sides
        std::map<Signature, std::size_t> class_of;
        for (const auto& s : a.signature)
            class_of.try_emplace(s, class_of.size());
        for (std::size_t i = 0; i < n_; ++i) {
            class_a_.push_back(class_of.at(a.signature[i]));
            auto it = class_of.find(b.signature[i]);
            class_b_.push_back(it == class_of.end() ? static_cast<std::size_t>(-1) : it->second);
        }
        class_size_.assign(class_of.size(), 0);
        for (std::size_t c : class_a_)
            ++class_size_[c];

        build_order();
    }

    bool classes_match() const
    {
        auto sa = class_a_;
        auto sb = class_b_;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        return sa == sb;
    }

    std::optional<VertexBijection> run()
    {
        image_.assign(n_, none_);
        preimage_.assign(n_, none_);
        used_.assign(n_, false);
        if (!search(0))
            return std::nullopt;
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (std::size_t i = 0; i < n_; ++i)
            pairs.emplace_back(a_.x.vertices()[i], b_.x.vertices()[image_[i]]);
        return VertexBijection(std::move(pairs));
    }

private:
    static constexpr std::size_t none_ = static_cast<std::size_t>(-1);

    // Rarest class first, then always the vertex with most already-ordered
    // neighbours, ties by class size and index.
    void build_order()
    {
        std::vector<bool> placed(n_, false);
        std::vector<std::size_t> placed_nbrs(n_, 0);
        for (std::size_t step = 0; step < n_; ++step) {
            std::size_t best = none_;
            for (std::size_t v = 0; v < n_; ++v) {
                if (placed[v])
                    continue;
                if (best == none_ || placed_nbrs[v] > placed_nbrs[best]
                    || (placed_nbrs[v] == placed_nbrs[best] && class_size_[class_a_[v]] < class_size_[class_a_[best]]))
                    best = v;
            }
            placed[best] = true;
            order_.push_back(best);
            for (std::size_t w = a_.adjacent[best].find_first(); w != Bits::npos; w = a_.adjacent[best].find_next(w))
                ++placed_nbrs[w];
        }
        std::vector<std::size_t> rank(n_);
        for (std::size_t p = 0; p < n_; ++p)
            rank[order_[p]] = p;
        completes_.resize(n_);
        for (const Face& f : a_.x.facets()) {
            std::size_t last = 0;
            std::vector<std::size_t> idx;
            for (Vertex v : f) {
                idx.push_back(*a_.x.index_of(v));
                last = std::max(last, rank[idx.back()]);
            }
            completes_[last].push_back(std::move(idx));
        }
    }

    bool search(std::size_t pos)
    {
        if (pos == n_)
            return true;
        const std::size_t v = order_[pos];
        for (std::size_t w = 0; w < n_; ++w) {
            if (used_[w] || class_b_[w] != class_a_[v])
                continue;
            if (!consistent(pos, v, w))
                continue;
            image_[v] = w;
            preimage_[w] = v;
            used_[w] = true;
            if (partial_faces_ok(a_, b_, image_, v, w) && partial_faces_ok(b_, a_, preimage_, w, v) && facets_ok(pos)
                && search(pos + 1))
                return true;
            image_[v] = none_;
            preimage_[w] = none_;
            used_[w] = false;
        }
        return false;
    }

    bool consistent(std::size_t pos, std::size_t v, std::size_t w) const
    {
        for (std::size_t p = 0; p < pos; ++p) {
            std::size_t u = order_[p];
            if (a_.adjacent[v].test(u) != b_.adjacent[w].test(image_[u]))
                return false;
        }
        return true;
    }

    // Every facet of `from` through v, restricted to mapped vertices, must
    // land inside some facet of `to`.
    static bool partial_faces_ok(const Indexed& from, const Indexed& to, const std::vector<std::size_t>& map,
                                 std::size_t v, std::size_t w)
    {
        const Bits& through = from.facets_of[v];
        for (std::size_t fi = through.find_first(); fi != Bits::npos; fi = through.find_next(fi)) {
            Bits common = to.facets_of[w];
            for (std::size_t u : from.facet_members[fi])
                if (u != v && map[u] != none_) {
                    common &= to.facets_of[map[u]];
                    if (common.none())
                        return false;
                }
        }
        return true;
    }

    bool facets_ok(std::size_t pos) const
    {
        for (const auto& idx : completes_[pos]) {
            std::vector<Vertex> img;
            for (std::size_t i : idx)
                img.push_back(b_.x.vertices()[image_[i]]);
            if (!target_facets_.count(Face(std::move(img))))
                return false;
        }
        return true;
    }

    const Indexed& a_;
    const Indexed& b_;
    std::size_t n_;
    std::vector<std::size_t> class_a_, class_b_, class_size_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::vector<std::size_t>>> completes_;
    std::unordered_set<Face, FaceHash> target_facets_;
    std::vector<std::size_t> image_;
    std::vector<std::size_t> preimage_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<VertexBijection> are_isomorphic(const SimplicialComplex& x, const SimplicialComplex& y)
{
    if (x.num_vertices() != y.num_vertices() || x.num_facets() != y.num_facets() || x.dim() != y.dim())
        return std::nullopt;
    if (x.is_empty())
        return VertexBijection{};
    if (f_vector(x) != f_vector(y))
        return std::nullopt;

    Indexed a(x), b(y);
    IsoSearch search(a, b);
    if (!search.classes_match())
        return std::nullopt;
    return search.run();
}

// ---------------------------------------------------------------------------
// Reconstruction
// ---------------------------------------------------------------------------

VertexBijection uniqueness_reconstruction(const SimplicialComplex& mbar)
{
    if (mbar.is_empty() || !is_pure(mbar) || mbar.dim() < 3)
        throw ReconstructionError("cycle", "need a pure complex of dimension at least 3");
    const int top = mbar.dim();       // d + 1
    const std::size_t run = static_cast<std::size_t>(top) + 1;  // facets per vertex
    const std::size_t n = mbar.num_vertices();
    const DualGraph g = dual_graph(mbar);
    if (!is_cycle(g) || g.num_nodes() != n || n != 2 * static_cast<std::size_t>(top) + 1)
        throw ReconstructionError("cycle", "dual graph is not a cycle on 2d+3 facets over 2d+3 vertices");

    // walk the cycle from facet 0 towards its smaller neighbour
    std::vector<NodeId> cycle{0};
    std::vector<std::size_t> position(n, 0);
    NodeId prev = 0, cur = g.neighbors(0).front();
    while (cur != 0) {
        position[cur] = cycle.size();
        cycle.push_back(cur);
        const auto& nb = g.neighbors(cur);
        NodeId next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }

    // vertex label -> end position k of its run [k-d-1, k]
    std::vector<std::size_t> run_end(n);
    for (std::size_t vi = 0; vi < n; ++vi) {
        const Vertex v = mbar.vertices()[vi];
        std::vector<bool> on(n, false);
        std::size_t count = 0;
        for (NodeId f = 0; f < n; ++f)
            if (g.facet(f).contains(v)) {
                on[position[f]] = true;
                ++count;
            }
        std::size_t ends = 0;
        for (std::size_t p = 0; p < n; ++p)
            if (on[p] && !on[(p + 1) % n]) {
                ++ends;
                run_end[vi] = p;
            }
        if (count != run || ends != 1)
            throw ReconstructionError("vertex-path",
                                      "facets through vertex " + std::to_string(v) + " do not form a path of d+2 facets");
    }

    std::vector<std::size_t> owner(n, n);
    for (std::size_t vi = 0; vi < n; ++vi) {
        if (owner[run_end[vi]] != n)
            throw ReconstructionError("distinct", "vertices " + std::to_string(mbar.vertices()[owner[run_end[vi]]])
                                                      + " and " + std::to_string(mbar.vertices()[vi]) + " lie in the same facets");
        owner[run_end[vi]] = vi;
    }

    // vertex k of the model solid lies in facets k-d-1..k, so it corresponds
    // to the vertex whose run ends at position k
    std::vector<std::pair<Vertex, Vertex>> to_model;
    for (std::size_t k = 0; k < n; ++k)
        to_model.emplace_back(mbar.vertices()[owner[k]], static_cast<Vertex>(k));
    VertexBijection phi_inverse(std::move(to_model));

    const SimplicialComplex model = kuehnel_solid(top - 1);
    if (!phi_inverse.maps_onto(mbar, model))
        throw ReconstructionError("isomorphism", "induced vertex map does not carry facets onto the model solid");
    return phi_inverse;
}

}  // namespace neighborly
