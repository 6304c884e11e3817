/**
 * FCT facet-list text format.
 *
 * One facet per line as space-separated decimal vertex labels. Lines whose
 * first non-blank character is `#` are comments; blank lines are skipped.
 * Facets may come in any order; the reader canonicalizes. The writer emits
 * the canonical facet order, one facet per line, with no trailing spaces.
 */
#pragma once

#include <iosfwd>
#include <string>

#include "neighborly/complex.hpp"

namespace neighborly {

/// Throws ParseError (carrying the 1-based line number) on malformed input.
SimplicialComplex read_fct(std::istream& in);
SimplicialComplex read_fct_string(const std::string& text);

void write_fct(std::ostream& out, const SimplicialComplex& x);
std::string to_fct_string(const SimplicialComplex& x);

}  // namespace neighborly
