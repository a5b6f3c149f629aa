#ifndef DISTSET_LITERAL_HPP
#define DISTSET_LITERAL_HPP

#include <string>

#include "distset/realalg.hpp"

namespace distset {

// Textual grammar for algebraic values (bit-exact interchange format):
//   RATIONAL := "<int>/<posint>" | "<int>"
//   QUAD     := "(<int> + <int>*sqrt(<posint>))/<posint>"
//   ROOT     := "root([c0,c1,...,ck]; <lo>, <hi>)"
// Rendering uses RATIONAL for degree-1 defining polynomials, QUAD for
// degree 2, ROOT otherwise.
std::string render_literal(const RealAlg& x);
RealAlg parse_literal(const std::string& text);

} // namespace distset

#endif
