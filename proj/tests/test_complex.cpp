#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "neighborly/complex.hpp"
#include "neighborly/error.hpp"
#include "neighborly/walkup.hpp"
#include "oracles.hpp"

using namespace neighborly;

namespace {

SimplicialComplex tetra_boundary()
{
    return simplex_boundary(Face{0, 1, 2, 3});
}

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("Face normalizes and rejects duplicates")
{
    Face f{3, 1, 2};
    CHECK(f.vertices() == std::vector<Vertex>{1, 2, 3});
    CHECK(f.dim() == 2);
    CHECK(code_of([] { Face{1, 1}; }) == ErrorCode::InvalidFace);
    CHECK(f.without(2) == Face{1, 3});
    CHECK(f.with(0) == Face{0, 1, 2, 3});
    CHECK(f.set_difference(Face{1, 5}) == Face{2, 3});
    CHECK(Face{1, 2}.is_subset_of(f));
    CHECK(f.intersection_size(Face{2, 3, 4}) == 2);
}

TEST_CASE("from_facets canonicalizes")
{
    auto a = SimplicialComplex::from_facets({Face{0, 1}, Face{1, 2}, Face{0, 1}});
    CHECK(a.facets() == std::vector<Face>{Face{0, 1}, Face{1, 2}});

    auto b = SimplicialComplex::from_facets({Face{0, 1, 2}, Face{0, 1}});
    CHECK(b.facets() == std::vector<Face>{Face{0, 1, 2}});

    std::vector<Face> cyclic;
    for (Vertex i = 0; i < 7; ++i)
        cyclic.push_back(Face{i, (i + 1) % 7, (i + 2) % 7, (i + 3) % 7});
    auto c = SimplicialComplex::from_facets(cyclic);
    CHECK(c.dim() == 3);
    CHECK(c.num_facets() == 7);
    CHECK(c.num_vertices() == 7);

    CHECK(code_of([] { SimplicialComplex::from_facets({}); }) == ErrorCode::EmptyComplex);
    CHECK(code_of([] { SimplicialComplex::from_facets({Face{}}); }) == ErrorCode::InvalidFace);
}

TEST_CASE("canonical equality is order-insensitive")
{
    std::mt19937_64 rng(11);
    for (const auto& entry : corpus::all()) {
        auto facets = entry.complex.facets();
        std::shuffle(facets.begin(), facets.end(), rng);
        // add some redundant sub-faces too
        if (!facets.empty() && facets[0].size() > 1)
            facets.push_back(facets[0].without_index(0));
        CHECK_MESSAGE(SimplicialComplex::from_facets(facets) == entry.complex, entry.name);
    }
}

TEST_CASE("faces_of_dim")
{
    auto tri = simplex(Face{0, 1, 2});
    CHECK(faces_of_dim(tri, 1) == std::vector<Face>{Face{0, 1}, Face{0, 2}, Face{1, 2}});
    CHECK(faces_of_dim(tri, -1) == std::vector<Face>{Face{}});
    CHECK(code_of([&] { faces_of_dim(tri, 3); }) == ErrorCode::DimensionRange);
    CHECK(code_of([&] { faces_of_dim(tri, -2); }) == ErrorCode::DimensionRange);

    // frozen from the subset-enumeration oracle
    CHECK(faces_of_dim(kuehnel_solid(2), 2).size() == 21);

    for (const auto& entry : corpus::all())
        CHECK(faces_of_dim(entry.complex, 0).size() == entry.complex.num_vertices());
}

TEST_CASE("faces_of_dim agrees with subset enumeration and is closed downward")
{
    for (const auto& entry : corpus::all()) {
        const auto& x = entry.complex;
        if (x.dim() > 6)
            continue;
        const auto expected = oracle::f_vector(x);
        const auto fv = f_vector(x);
        CHECK_MESSAGE(fv.counts == expected, entry.name);
        for (int k = 1; k <= x.dim(); ++k) {
            auto lower = faces_of_dim(x, k - 1);
            for (const Face& f : faces_of_dim(x, k))
                for (std::size_t i = 0; i < f.size(); ++i)
                    CHECK(std::binary_search(lower.begin(), lower.end(), f.without_index(i)));
        }
    }
}

TEST_CASE("f_vector")
{
    auto fv = f_vector(tetra_boundary());
    CHECK(fv.counts == std::vector<std::int64_t>{4, 6, 4});
    CHECK(fv.euler == 2);

    // frozen from the oracle (cyclic solid -> free ridges -> subset enumeration)
    CHECK(oracle::f_vector(oracle::free_ridges(oracle::cyclic_solid(2))) == std::vector<std::int64_t>{7, 21, 14});
    CHECK(f_vector(kuehnel_torus(2)).counts == std::vector<std::int64_t>{7, 21, 14});
    CHECK(f_vector(kuehnel_torus(2)).euler == 0);
    CHECK(f_vector(kuehnel_torus(3)).counts == std::vector<std::int64_t>{9, 36, 54, 27});
    CHECK(f_vector(kuehnel_torus(3)).euler == 0);

    for (const auto& entry : corpus::all()) {
        auto f = f_vector(entry.complex);
        std::int64_t chi = 0;
        for (std::size_t i = 0; i < f.counts.size(); ++i)
            chi += (i % 2 == 0 ? 1 : -1) * f.counts[i];
        CHECK(f.euler == chi);
        CHECK(f.counts.back() >= 1);
    }
}

TEST_CASE("link")
{
    CHECK(link(tetra_boundary(), Face{0}) == simplex_boundary(Face{1, 2, 3}));
    CHECK(link(simplex(Face{0, 1, 2}), Face{0, 1}) == simplex(Face{2}));
    CHECK(code_of([] { link(tetra_boundary(), Face{0, 1, 2, 3}); }) == ErrorCode::NotAFace);
    CHECK(link(simplex(Face{0, 1, 2}), Face{0, 1, 2}).is_empty());

    auto torus = kuehnel_torus(3);
    for (Vertex v : torus.vertices()) {
        auto lk = link(torus, Face{v});
        CHECK(lk.num_vertices() == 8);
        CHECK(lk.dim() == 2);
        CHECK(is_stacked_sphere(lk));
    }

    // against the definition: beta with alpha u beta a face
    auto faces = oracle::all_faces(torus);
    auto lk = link(torus, Face{0, 1});
    std::set<oracle::VSet> expected;
    for (const auto& s : faces) {
        if (std::find(s.begin(), s.end(), 0U) != s.end() || std::find(s.begin(), s.end(), 1U) != s.end())
            continue;
        oracle::VSet u = s;
        u.push_back(0);
        u.push_back(1);
        std::sort(u.begin(), u.end());
        if (faces.count(u))
            expected.insert(s);
    }
    CHECK(oracle::all_faces(lk) == expected);
}

TEST_CASE("star and join")
{
    auto st = star(tetra_boundary(), 0);
    CHECK(st.facets() == std::vector<Face>{Face{0, 1, 2}, Face{0, 1, 3}, Face{0, 2, 3}});
    CHECK(code_of([] { star(tetra_boundary(), 9); }) == ErrorCode::UnknownVertex);

    CHECK(star(kuehnel_solid(2), 0).num_facets() == 4);

    for (const auto& entry : corpus::all())
        for (Vertex v : entry.complex.vertices()) {
            auto lk = link(entry.complex, Face{v});
            auto st_v = star(entry.complex, v);
            CHECK(st_v == join(simplex(Face{v}), lk));
            if (!lk.is_empty())
                CHECK(f_vector(st_v).counts.back() == f_vector(lk).counts.back());
        }

    CHECK(join(simplex(Face{0}), simplex(Face{1, 2})) == simplex(Face{0, 1, 2}));
    CHECK(join(simplex(Face{0, 1}), simplex(Face{2, 3})) == simplex(Face{0, 1, 2, 3}));
    CHECK(join(simplex_boundary(Face{0, 1, 2}), simplex(Face{3})).num_facets() == 3);
    CHECK(code_of([] { join(simplex(Face{0, 1}), simplex(Face{1, 2})); }) == ErrorCode::VertexClash);
}

TEST_CASE("f_vector of a join is the convolution")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int d1 = 1 + static_cast<int>(rng() % 3);
        const int d2 = 1 + static_cast<int>(rng() % 3);
        auto x = random_stacked_ball(d1, 1 + static_cast<int>(rng() % 4), rng());
        auto y = random_stacked_ball(d2, 1 + static_cast<int>(rng() % 4), rng());
        if (rng() & 1U)
            x = boundary_complex(x);
        const Vertex shift = 100;
        std::vector<Vertex> image;
        for (Vertex v : y.vertices())
            image.push_back(v + shift);
        y = relabel(y, image);

        auto fx = f_vector(x).counts;
        auto fy = f_vector(y).counts;
        fx.insert(fx.begin(), 1);
        fy.insert(fy.begin(), 1);
        std::vector<std::int64_t> conv(fx.size() + fy.size() - 1, 0);
        for (std::size_t i = 0; i < fx.size(); ++i)
            for (std::size_t j = 0; j < fy.size(); ++j)
                conv[i + j] += fx[i] * fy[j];
        conv.erase(conv.begin());
        CHECK(f_vector(join(x, y)).counts == conv);
    }
}

TEST_CASE("skeleton")
{
    auto k4 = skeleton(tetra_boundary(), 1);
    CHECK(k4.num_facets() == 6);
    CHECK(k4.dim() == 1);
    auto k7 = skeleton(kuehnel_torus(2), 1);
    CHECK(k7.num_facets() == 21);
    for (const auto& entry : corpus::all())
        CHECK(skeleton(entry.complex, entry.complex.dim()) == entry.complex);
    auto mixed = SimplicialComplex::from_facets({Face{0, 1, 2}, Face{3}});
    CHECK(skeleton(mixed, 1).facets() == std::vector<Face>{Face{0, 1}, Face{0, 2}, Face{1, 2}, Face{3}});
    CHECK(code_of([&] { skeleton(mixed, 3); }) == ErrorCode::DimensionRange);
}

TEST_CASE("purity and pseudomanifold predicates")
{
    auto mixed = SimplicialComplex::from_facets({Face{0, 1, 2}, Face{2, 3}});
    CHECK_FALSE(is_pure(mixed));
    auto solid = kuehnel_solid(2);
    CHECK(is_pure(solid));
    CHECK(is_weak_pseudomanifold(solid));
    CHECK(is_pseudomanifold(solid));
    auto two = SimplicialComplex::from_facets({Face{0, 1, 2}, Face{3, 4, 5}});
    CHECK(is_weak_pseudomanifold(two));
    CHECK_FALSE(is_pseudomanifold(two));
    CHECK_FALSE(is_connected(two));
    auto book = SimplicialComplex::from_facets({Face{0, 1, 2}, Face{0, 1, 3}, Face{0, 1, 4}});
    CHECK_FALSE(is_weak_pseudomanifold(book));
}

TEST_CASE("boundary_complex")
{
    CHECK(boundary_complex(simplex(Face{0, 1, 2, 3})) == tetra_boundary());
    auto solid = kuehnel_solid(2);
    auto bd = boundary_complex(solid);
    CHECK(bd.num_facets() == 14);
    CHECK(bd == oracle::free_ridges(solid));
    CHECK(boundary_complex(tetra_boundary()).is_empty());
    auto book = SimplicialComplex::from_facets({Face{0, 1, 2}, Face{0, 1, 3}, Face{0, 1, 4}});
    CHECK(code_of([&] { boundary_complex(book); }) == ErrorCode::Precondition);

    for (const auto& entry : corpus::all())
        if (is_pure(entry.complex) && is_weak_pseudomanifold(entry.complex)) {
            auto b = boundary_complex(entry.complex);
            if (!b.is_empty())
                CHECK_MESSAGE(b == oracle::free_ridges(entry.complex), entry.name);
        }
}

TEST_CASE("sphere euler characteristic for stacked ball boundaries")
{
    for (int d = 1; d <= 6; ++d)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto sphere = boundary_complex(random_stacked_ball(d + 1, 8, seed));
            CHECK(f_vector(sphere).euler == 1 + (d % 2 == 0 ? 1 : -1));
        }
}

TEST_CASE("is_neighborly")
{
    CHECK(is_neighborly(kuehnel_torus(3)));
    CHECK(is_neighborly(tetra_boundary(), 3));
    CHECK_FALSE(is_neighborly(tetra_boundary(), 4));
    CHECK_FALSE(is_neighborly(SimplicialComplex::from_facets({Face{0, 1, 2}, Face{3, 4, 5}})));
    CHECK(code_of([] { is_neighborly(simplex(Face{0}), 0); }) == ErrorCode::Precondition);
}

TEST_CASE("relabel")
{
    auto x = simplex_boundary(Face{0, 1, 2});
    std::vector<Vertex> image{10, 5, 7};
    auto y = relabel(x, image);
    CHECK(y.vertices() == std::vector<Vertex>{5, 7, 10});
    CHECK(y.has_facet(Face{5, 10}));
    std::vector<Vertex> clash{1, 1, 2};
    CHECK_THROWS_AS(relabel(x, clash), Error);
}
