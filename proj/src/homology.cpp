#include "neighborly/homology.hpp"

#include <algorithm>

#include "neighborly/detail/ridges.hpp"
#include "neighborly/dual_graph.hpp"

namespace neighborly {

bool Z2ChainComplex::boundary_squares_to_zero() const
{
    for (int k = 2; k <= dim(); ++k)
        if (!gf2::multiply(boundary(k - 1), boundary(k)).is_zero())
            return false;
    return true;
}

std::int64_t BettiVector::euler() const
{
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < betti.size(); ++i)
        chi += (i % 2 == 0) ? betti[i] : -betti[i];
    return chi;
}

Z2ChainComplex chain_complex(const SimplicialComplex& x)
{
    Z2ChainComplex c;
    for (int k = 0; k <= x.dim(); ++k)
        c.faces_.push_back(faces_of_dim(x, k));

    c.boundary_.emplace_back(0, c.faces_.empty() ? 0 : c.faces_[0].size());
    for (int k = 1; k <= x.dim(); ++k) {
        const auto& rows = c.faces_[static_cast<std::size_t>(k - 1)];
        const auto& cols = c.faces_[static_cast<std::size_t>(k)];
        gf2::BitMatrix m(rows.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            for (std::size_t i = 0; i < cols[j].size(); ++i) {
                Face side = cols[j].without_index(i);
                auto it = std::lower_bound(rows.begin(), rows.end(), side);
                m.set(static_cast<std::size_t>(it - rows.begin()), j);
            }
        }
        c.boundary_.push_back(std::move(m));
    }
    return c;
}

BettiVector betti_z2(const Z2ChainComplex& c)
{
    const int top = c.dim();
    std::vector<std::int64_t> ranks(static_cast<std::size_t>(top + 2), 0);
    for (int k = 1; k <= top; ++k)
        ranks[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(gf2::rank(c.boundary(k)));

    BettiVector out;
    for (int k = 0; k <= top; ++k) {
        const auto fk = static_cast<std::int64_t>(c.faces(k).size());
        out.betti.push_back(fk - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k + 1)]);
    }
    return out;
}

BettiVector betti_z2(const SimplicialComplex& x)
{
    return betti_z2(chain_complex(x));
}

std::int64_t beta1_dual_formula(const SimplicialComplex& mbar)
{
    const DualGraph g = dual_graph(mbar);
    return static_cast<std::int64_t>(g.num_edges()) - static_cast<std::int64_t>(g.num_nodes()) + 1;
}

bool is_orientable(const SimplicialComplex& m)
{
    if (!is_pseudomanifold(m))
        throw Error(ErrorCode::Precondition, "orientability needs a pseudomanifold");

    struct Gluing {
        std::size_t other;
        int parity;  // (position here + position there) mod 2
    };
    std::vector<std::vector<Gluing>> glue(m.num_facets());
    const auto inc = detail::ridge_incidences(m);
    bool closed = true;
    detail::for_each_ridge_group(inc, [&](std::size_t first, std::size_t last) {
        if (last - first != 2) {
            closed = false;
            return;
        }
        const auto& a = inc[first];
        const auto& b = inc[first + 1];
        int parity = static_cast<int>((a.position + b.position) % 2);
        glue[a.facet].push_back({b.facet, parity});
        glue[b.facet].push_back({a.facet, parity});
    });
    if (!closed)
        throw Error(ErrorCode::Precondition, "orientability needs a closed pseudomanifold");

    // sign[f] orients facet f relative to its sorted vertex order. Facet a
    // induces sign[a] * (-1)^i on its ridge omitting position i; neighbours
    // must induce opposite orientations on the shared ridge.
    std::vector<int> sign(m.num_facets(), 0);
    std::vector<std::size_t> queue{0};
    sign[0] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        std::size_t a = queue[q];
        for (const Gluing& g : glue[a]) {
            int want = (g.parity == 0) ? -sign[a] : sign[a];
            if (sign[g.other] == 0) {
                sign[g.other] = want;
                queue.push_back(g.other);
            } else if (sign[g.other] != want) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace neighborly
