// Brute-force reference implementations used only by the tests. They share no
// code with the library beyond the Face/SimplicialComplex value types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "neighborly/complex.hpp"

namespace oracle {

using neighborly::Face;
using neighborly::SimplicialComplex;
using neighborly::Vertex;
using VSet = std::vector<Vertex>;

inline VSet to_vset(const Face& f)
{
    return {f.begin(), f.end()};
}

/// Every non-empty face, by expanding each facet's subsets.
inline std::set<VSet> all_faces(const SimplicialComplex& x)
{
    std::set<VSet> out;
    for (const Face& f : x.facets()) {
        const std::size_t k = f.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            VSet s;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1U)
                    s.push_back(f[i]);
            out.insert(s);
        }
    }
    return out;
}

inline std::vector<std::int64_t> f_vector(const SimplicialComplex& x)
{
    std::vector<std::int64_t> counts;
    for (const VSet& s : all_faces(x)) {
        if (counts.size() < s.size())
            counts.resize(s.size(), 0);
        ++counts[s.size() - 1];
    }
    return counts;
}

inline SimplicialComplex from_sets(const std::vector<VSet>& sets)
{
    std::vector<Face> faces;
    for (const VSet& s : sets)
        faces.emplace_back(s);
    return SimplicialComplex::from_facets(std::move(faces));
}

/// Facets {i, ..., i+d+1} mod 2d+3, written out directly.
inline SimplicialComplex cyclic_solid(int d)
{
    const int n = 2 * d + 3;
    std::vector<VSet> sets;
    for (int i = 0; i < n; ++i) {
        VSet s;
        for (int j = 0; j <= d + 1; ++j)
            s.push_back(static_cast<Vertex>((i + j) % n));
        std::sort(s.begin(), s.end());
        sets.push_back(s);
    }
    return from_sets(sets);
}

/// Ridges lying in exactly one facet, counted by brute force.
inline SimplicialComplex free_ridges(const SimplicialComplex& x)
{
    std::map<VSet, int> count;
    for (const Face& f : x.facets())
        for (std::size_t i = 0; i < f.size(); ++i) {
            VSet r = to_vset(f);
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
            ++count[r];
        }
    std::vector<VSet> sets;
    for (const auto& [r, c] : count)
        if (c == 1)
            sets.push_back(r);
    return from_sets(sets);
}

inline std::size_t common(const VSet& a, const VSet& b)
{
    VSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out.size();
}

/// Adjacency lists of the dual graph by pairwise intersection sizes.
inline std::vector<std::vector<std::size_t>> dual_adjacency(const SimplicialComplex& x)
{
    const auto& fs = x.facets();
    std::vector<std::vector<std::size_t>> adj(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            if (common(to_vset(fs[i]), to_vset(fs[j])) + 1 == fs[i].size()) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    return adj;
}

inline std::size_t count_reachable(const std::vector<std::vector<std::size_t>>& adj,
                                   const std::vector<bool>& removed)
{
    std::size_t start = adj.size();
    for (std::size_t i = 0; i < adj.size(); ++i)
        if (!removed[i]) {
            start = i;
            break;
        }
    if (start == adj.size())
        return 0;
    std::vector<bool> seen(adj.size(), false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t count = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++count;
        for (std::size_t w : adj[v])
            if (!removed[w] && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return count;
}

/// Definitional check: at least 3 nodes and G - v connected for every v.
inline bool two_connected(const std::vector<std::vector<std::size_t>>& adj)
{
    const std::size_t n = adj.size();
    if (n < 3)
        return false;
    std::vector<bool> removed(n, false);
    if (count_reachable(adj, removed) != n)
        return false;
    for (std::size_t v = 0; v < n; ++v) {
        removed[v] = true;
        if (count_reachable(adj, removed) != n - 1)
            return false;
        removed[v] = false;
    }
    return true;
}

/// Constructive peeling: repeatedly delete a facet that meets the rest in
/// exactly one ridge and owns a vertex no other facet has.
inline bool peels_to_simplex(const SimplicialComplex& x)
{
    std::vector<VSet> fs;
    for (const Face& f : x.facets())
        fs.push_back(to_vset(f));
    if (fs.empty())
        return false;
    const std::size_t k = fs[0].size();
    for (const VSet& f : fs)
        if (f.size() != k)
            return false;
    while (fs.size() > 1) {
        bool removed = false;
        for (std::size_t i = 0; i < fs.size() && !removed; ++i) {
            std::size_t ridge_neighbors = 0;
            for (std::size_t j = 0; j < fs.size(); ++j)
                if (j != i && common(fs[i], fs[j]) + 1 == k)
                    ++ridge_neighbors;
            if (ridge_neighbors != 1)
                continue;
            for (Vertex v : fs[i]) {
                bool free = true;
                for (std::size_t j = 0; j < fs.size() && free; ++j)
                    if (j != i && std::binary_search(fs[j].begin(), fs[j].end(), v))
                        free = false;
                if (free) {
                    fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
                    removed = true;
                    break;
                }
            }
        }
        if (!removed)
            return false;
    }
    return true;
}

/// Rank over GF(2) by plain row reduction on bool rows.
inline std::size_t rank_gf2(std::vector<std::vector<bool>> rows)
{
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][c])
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t j = c; j < cols; ++j)
                    rows[r][j] = rows[r][j] != rows[rank][j];
        ++rank;
    }
    return rank;
}

/// Betti numbers over GF(2) from an explicit face list.
inline std::vector<std::int64_t> betti(const SimplicialComplex& x)
{
    std::vector<std::vector<VSet>> by_dim;
    for (const VSet& s : all_faces(x)) {
        if (by_dim.size() < s.size())
            by_dim.resize(s.size());
        by_dim[s.size() - 1].push_back(s);
    }
    const std::size_t top = by_dim.size();
    std::vector<std::size_t> ranks(top + 1, 0);  // ranks[k] = rank of boundary from k-faces
    for (std::size_t k = 1; k < top; ++k) {
        std::map<VSet, std::size_t> index;
        for (std::size_t i = 0; i < by_dim[k - 1].size(); ++i)
            index[by_dim[k - 1][i]] = i;
        std::vector<std::vector<bool>> rows(by_dim[k].size(), std::vector<bool>(by_dim[k - 1].size(), false));
        for (std::size_t i = 0; i < by_dim[k].size(); ++i)
            for (std::size_t j = 0; j < by_dim[k][i].size(); ++j) {
                VSet r = by_dim[k][i];
                r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
                rows[i][index.at(r)] = true;
            }
        ranks[k] = rank_gf2(std::move(rows));
    }
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < top; ++k)
        out.push_back(static_cast<std::int64_t>(by_dim[k].size() - ranks[k] - ranks[k + 1]));
    return out;
}

/// Isomorphism by trying every vertex permutation (small inputs only).
inline bool isomorphic_brute(const SimplicialComplex& x, const SimplicialComplex& y)
{
    if (x.num_vertices() != y.num_vertices() || x.num_facets() != y.num_facets())
        return false;
    std::set<VSet> target;
    for (const Face& f : y.facets())
        target.insert(to_vset(f));
    VSet perm = y.vertices();
    std::sort(perm.begin(), perm.end());
    const VSet& src = x.vertices();
    do {
        std::map<Vertex, Vertex> m;
        for (std::size_t i = 0; i < src.size(); ++i)
            m[src[i]] = perm[i];
        bool ok = true;
        for (const Face& f : x.facets()) {
            VSet img;
            for (Vertex v : f)
                img.push_back(m[v]);
            std::sort(img.begin(), img.end());
            if (!target.count(img)) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Maximal vertex subsets all of whose 2- and 3-subsets are faces, by
/// enumerating every subset of V (at most ~16 vertices).
inline SimplicialComplex closure_brute(const SimplicialComplex& m)
{
    const auto faces = all_faces(m);
    const VSet& vs = m.vertices();
    const std::size_t n = vs.size();
    std::vector<std::uint32_t> good;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        VSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U)
                s.push_back(vs[i]);
        bool ok = true;
        for (std::size_t a = 0; a < s.size() && ok; ++a) {
            for (std::size_t b = a + 1; b < s.size() && ok; ++b) {
                if (!faces.count({s[a], s[b]}))
                    ok = false;
                for (std::size_t c = b + 1; c < s.size() && ok; ++c)
                    if (!faces.count({s[a], s[b], s[c]}))
                        ok = false;
            }
        }
        if (ok)
            good.push_back(mask);
    }
    std::vector<VSet> sets;
    for (std::uint32_t g : good) {
        bool maximal = true;
        for (std::uint32_t h : good)
            if (h != g && (h & g) == g) {
                maximal = false;
                break;
            }
        if (!maximal)
            continue;
        VSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (g >> i & 1U)
                s.push_back(vs[i]);
        sets.push_back(s);
    }
    return from_sets(sets);
}

/// Orientability by trying every sign pattern on the facets (<= ~20 facets).
/// Two facets sharing ridge r induce opposite orientations on r exactly when
/// sign_a * (-1)^(pos of omitted vertex in a) = -sign_b * (-1)^(pos in b).
inline bool orientable_brute(const SimplicialComplex& m)
{
    const auto& fs = m.facets();
    const std::size_t n = fs.size();
    struct Incidence {
        std::size_t a, b;
        int pa, pb;
    };
    std::map<VSet, std::vector<std::pair<std::size_t, int>>> ridges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < fs[i].size(); ++j) {
            VSet r = to_vset(fs[i]);
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
            ridges[r].push_back({i, static_cast<int>(j)});
        }
    std::vector<Incidence> pairs;
    for (const auto& [r, inc] : ridges)
        if (inc.size() == 2)
            pairs.push_back({inc[0].first, inc[1].first, inc[0].second, inc[1].second});
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (const auto& p : pairs) {
            int sa = (mask >> p.a & 1U) ? -1 : 1;
            int sb = (mask >> p.b & 1U) ? -1 : 1;
            int ia = (p.pa % 2) ? -1 : 1;
            int ib = (p.pb % 2) ? -1 : 1;
            if (sa * ia != -(sb * ib)) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    }
    return false;
}

}  // namespace oracle
