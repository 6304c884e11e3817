#include "neighborly/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "neighborly/arith.hpp"
#include "neighborly/detail/ridges.hpp"

namespace neighborly {

// ---------------------------------------------------------------------------
// Face
// ---------------------------------------------------------------------------

Face::Face(std::initializer_list<Vertex> vertices)
    : Face(std::vector<Vertex>(vertices))
{
}

Face::Face(std::vector<Vertex> vertices)
    : vertices_(std::move(vertices))
{
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw Error(ErrorCode::InvalidFace, "face lists a vertex twice");
}

Face Face::from_sorted(std::vector<Vertex> sorted)
{
    Face f;
    f.vertices_ = std::move(sorted);
    return f;
}

bool Face::contains(Vertex v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const
{
    return size() <= other.size()
        && std::includes(other.begin(), other.end(), begin(), end());
}

bool Face::is_disjoint_from(const Face& other) const
{
    return intersection_size(other) == 0;
}

std::size_t Face::intersection_size(const Face& other) const
{
    std::size_t n = 0;
    auto a = begin();
    auto b = other.begin();
    while (a != end() && b != other.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            ++n;
            ++a;
            ++b;
        }
    }
    return n;
}

Face Face::without(Vertex v) const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex w : vertices_)
        if (w != v)
            out.push_back(w);
    return from_sorted(std::move(out));
}

Face Face::without_index(std::size_t i) const
{
    std::vector<Vertex> out;
    out.reserve(size() - 1);
    for (std::size_t j = 0; j < size(); ++j)
        if (j != i)
            out.push_back(vertices_[j]);
    return from_sorted(std::move(out));
}

Face Face::with(Vertex v) const
{
    if (contains(v))
        return *this;
    std::vector<Vertex> out = vertices_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return from_sorted(std::move(out));
}

Face Face::set_union(const Face& other) const
{
    std::vector<Vertex> out;
    out.reserve(size() + other.size());
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
}

Face Face::set_difference(const Face& other) const
{
    std::vector<Vertex> out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
}

std::size_t FaceHash::operator()(const Face& f) const noexcept
{
    // FNV-1a over the labels
    std::uint64_t h = 1469598103934665603ULL;
    for (Vertex v : f) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// SimplicialComplex
// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::vector<Face> canonical)
    : facets_(std::move(canonical))
{
    for (const Face& f : facets_) {
        vertices_.insert(vertices_.end(), f.begin(), f.end());
        dim_ = std::max(dim_, f.dim());
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

SimplicialComplex SimplicialComplex::from_canonical(std::vector<Face> facets)
{
    return SimplicialComplex(std::move(facets));
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> faces)
{
    if (faces.empty())
        throw Error(ErrorCode::EmptyComplex, "a complex needs at least one facet");
    for (const Face& f : faces)
        if (f.empty())
            throw Error(ErrorCode::InvalidFace, "facets must be non-empty");

    // Largest faces first so a face only needs checking against kept faces.
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    std::vector<Face> kept;
    kept.reserve(faces.size());
    std::unordered_map<Vertex, std::vector<std::size_t>> by_vertex;
    const std::size_t top = faces.front().size();
    for (Face& f : faces) {
        bool absorbed = false;
        if (f.size() < top) {
            auto it = by_vertex.find(f[0]);
            if (it != by_vertex.end()) {
                for (std::size_t k : it->second) {
                    if (kept[k].size() > f.size() && f.is_subset_of(kept[k])) {
                        absorbed = true;
                        break;
                    }
                }
            }
        }
        if (absorbed)
            continue;
        for (Vertex v : f)
            by_vertex[v].push_back(kept.size());
        kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end());
    return SimplicialComplex(std::move(kept));
}

bool SimplicialComplex::has_vertex(Vertex v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::optional<std::size_t> SimplicialComplex::index_of(Vertex v) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool SimplicialComplex::contains(const Face& f) const
{
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Face& g) { return f.is_subset_of(g); });
}

bool SimplicialComplex::has_facet(const Face& f) const
{
    return std::binary_search(facets_.begin(), facets_.end(), f);
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

namespace {

// Appends every `size`-subset of `f` to `out`.
void append_subsets(const Face& f, std::size_t size, std::vector<Face>& out)
{
    const std::size_t n = f.size();
    if (size > n)
        return;
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<Vertex> sub(size);
        for (std::size_t i = 0; i < size; ++i)
            sub[i] = f[idx[i]];
        out.push_back(Face::from_sorted(std::move(sub)));

        // advance to the next combination in lexicographic order
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == n - size + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t a)
{
    while (parent[a] != a) {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    return a;
}

}  // namespace

std::vector<Face> faces_of_dim(const SimplicialComplex& x, int k)
{
    if (k < -1 || k > x.dim())
        throw Error(ErrorCode::DimensionRange,
                    "dimension " + std::to_string(k) + " outside [-1, " + std::to_string(x.dim()) + "]");
    if (k == -1)
        return {Face{}};

    std::vector<Face> out;
    for (const Face& f : x.facets())
        append_subsets(f, static_cast<std::size_t>(k + 1), out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FVector f_vector(const SimplicialComplex& x)
{
    FVector fv;
    for (int k = 0; k <= x.dim(); ++k) {
        auto n = static_cast<std::int64_t>(faces_of_dim(x, k).size());
        fv.counts.push_back(n);
        fv.euler = checked_add(fv.euler, (k % 2 == 0) ? n : -n);
    }
    return fv;
}

SimplicialComplex link(const SimplicialComplex& x, const Face& alpha)
{
    if (!x.contains(alpha))
        throw Error(ErrorCode::NotAFace, "link requested for a non-face");

    std::vector<Face> out;
    for (const Face& f : x.facets()) {
        if (!alpha.is_subset_of(f))
            continue;
        Face rest = f.set_difference(alpha);
        if (!rest.empty())
            out.push_back(std::move(rest));
    }
    // Distinct facets through alpha stay an antichain after removing alpha.
    std::sort(out.begin(), out.end());
    return SimplicialComplex::from_canonical(std::move(out));
}

SimplicialComplex star(const SimplicialComplex& x, Vertex v)
{
    if (!x.has_vertex(v))
        throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in complex");
    std::vector<Face> out;
    for (const Face& f : x.facets())
        if (f.contains(v))
            out.push_back(f);
    return SimplicialComplex::from_canonical(std::move(out));
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y)
{
    if (x.is_empty())
        return y;
    if (y.is_empty())
        return x;

    const auto& vx = x.vertices();
    const auto& vy = y.vertices();
    std::vector<Vertex> common;
    std::set_intersection(vx.begin(), vx.end(), vy.begin(), vy.end(), std::back_inserter(common));
    if (!common.empty())
        throw Error(ErrorCode::VertexClash, "join of complexes sharing vertex " + std::to_string(common[0]));

    std::vector<Face> out;
    out.reserve(x.num_facets() * y.num_facets());
    for (const Face& a : x.facets())
        for (const Face& b : y.facets())
            out.push_back(a.set_union(b));
    std::sort(out.begin(), out.end());
    return SimplicialComplex::from_canonical(std::move(out));
}

SimplicialComplex skeleton(const SimplicialComplex& x, int k)
{
    if (k < 0 || k > x.dim())
        throw Error(ErrorCode::DimensionRange,
                    "skeleton dimension " + std::to_string(k) + " outside [0, " + std::to_string(x.dim()) + "]");
    std::vector<Face> out = faces_of_dim(x, k);
    for (const Face& f : x.facets())
        if (f.dim() < k)
            out.push_back(f);
    std::sort(out.begin(), out.end());
    return SimplicialComplex::from_canonical(std::move(out));
}

bool is_pure(const SimplicialComplex& x)
{
    const auto& fs = x.facets();
    return std::all_of(fs.begin(), fs.end(),
                       [&](const Face& f) { return f.dim() == x.dim(); });
}

namespace detail {

std::vector<RidgeIncidence> ridge_incidences(const SimplicialComplex& x)
{
    std::vector<RidgeIncidence> inc;
    const auto& fs = x.facets();
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < fs[i].size(); ++j)
            inc.push_back({fs[i].without_index(j), i, j});
    std::sort(inc.begin(), inc.end(), [](const RidgeIncidence& a, const RidgeIncidence& b) {
        if (a.ridge != b.ridge)
            return a.ridge < b.ridge;
        return a.facet < b.facet;
    });
    return inc;
}

}  // namespace detail

bool is_weak_pseudomanifold(const SimplicialComplex& x)
{
    if (x.is_empty() || !is_pure(x))
        return false;
    const auto inc = detail::ridge_incidences(x);
    bool ok = true;
    detail::for_each_ridge_group(inc, [&](std::size_t first, std::size_t last) {
        if (last - first > 2)
            ok = false;
    });
    return ok;
}

bool is_pseudomanifold(const SimplicialComplex& x)
{
    if (!is_weak_pseudomanifold(x))
        return false;
    std::vector<std::size_t> parent(x.num_facets());
    std::iota(parent.begin(), parent.end(), 0);
    std::size_t components = x.num_facets();
    const auto inc = detail::ridge_incidences(x);
    detail::for_each_ridge_group(inc, [&](std::size_t first, std::size_t last) {
        for (std::size_t i = first + 1; i < last; ++i) {
            std::size_t a = find_root(parent, inc[first].facet);
            std::size_t b = find_root(parent, inc[i].facet);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    });
    return components == 1;
}

bool is_connected(const SimplicialComplex& x)
{
    if (x.is_empty())
        return false;
    std::vector<std::size_t> parent(x.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    std::size_t components = x.num_vertices();
    for (const Face& f : x.facets()) {
        std::size_t a = find_root(parent, *x.index_of(f[0]));
        for (std::size_t i = 1; i < f.size(); ++i) {
            std::size_t b = find_root(parent, *x.index_of(f[i]));
            if (a != b) {
                parent[b] = a;
                --components;
            }
        }
    }
    return components == 1;
}

SimplicialComplex boundary_complex(const SimplicialComplex& x)
{
    if (!is_weak_pseudomanifold(x))
        throw Error(ErrorCode::Precondition, "boundary needs a pure weak pseudomanifold");
    const auto inc = detail::ridge_incidences(x);
    std::vector<Face> out;
    detail::for_each_ridge_group(inc, [&](std::size_t first, std::size_t last) {
        if (last - first == 1 && !inc[first].ridge.empty())
            out.push_back(inc[first].ridge);
    });
    return SimplicialComplex::from_canonical(std::move(out));
}

bool is_neighborly(const SimplicialComplex& x, int l)
{
    if (l < 1)
        throw Error(ErrorCode::Precondition, "neighborliness order must be at least 1");
    const auto n = static_cast<std::int64_t>(x.num_vertices());
    if (l > n)
        return true;
    if (l - 1 > x.dim())
        return false;
    const auto faces = static_cast<std::int64_t>(faces_of_dim(x, l - 1).size());
    try {
        return faces == binomial(n, l);
    } catch (const Error&) {
        // C(n, l) overflowed; no enumerable complex has that many faces
        return false;
    }
}

SimplicialComplex simplex_boundary(const Face& vertices)
{
    if (vertices.size() < 2)
        throw Error(ErrorCode::Precondition, "simplex boundary needs at least two vertices");
    std::vector<Face> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out.push_back(vertices.without_index(i));
    std::sort(out.begin(), out.end());
    return SimplicialComplex::from_canonical(std::move(out));
}

SimplicialComplex simplex(const Face& vertices)
{
    return SimplicialComplex::from_facets({vertices});
}

SimplicialComplex relabel(const SimplicialComplex& x, std::span<const Vertex> image_by_index)
{
    if (image_by_index.size() != x.num_vertices())
        throw Error(ErrorCode::Precondition, "relabeling must cover every vertex");
    std::vector<Face> out;
    out.reserve(x.num_facets());
    for (const Face& f : x.facets()) {
        std::vector<Vertex> image;
        image.reserve(f.size());
        for (Vertex v : f)
            image.push_back(image_by_index[*x.index_of(v)]);
        out.emplace_back(std::move(image));
    }
    return SimplicialComplex::from_facets(std::move(out));
}

}  // namespace neighborly
