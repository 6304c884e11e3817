#pragma once

#include <cstddef>
#include <vector>

#include "neighborly/complex.hpp"

namespace neighborly::detail {

struct RidgeIncidence {
    Face ridge;
    std::size_t facet;     // index into SimplicialComplex::facets()
    std::size_t position;  // index within the facet of the omitted vertex
};

/// Every (ridge, facet) pair of a pure complex, sorted by ridge then facet.
/// Equal ridges are adjacent, so a linear scan groups the facets on a ridge.
std::vector<RidgeIncidence> ridge_incidences(const SimplicialComplex& x);

/// Calls `fn(first, last)` for each maximal run of equal ridges.
template <typename Fn>
void for_each_ridge_group(const std::vector<RidgeIncidence>& inc, Fn&& fn)
{
    std::size_t i = 0;
    while (i < inc.size()) {
        std::size_t j = i + 1;
        while (j < inc.size() && inc[j].ridge == inc[i].ridge)
            ++j;
        fn(i, j);
        i = j;
    }
}

}  // namespace neighborly::detail
