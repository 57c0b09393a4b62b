#ifndef GALDIST_JSON_IO_HPP
#define GALDIST_JSON_IO_HPP

#include "galdist/distinction.hpp"
#include "galdist/forms.hpp"
#include "galdist/invgraph.hpp"
#include "galdist/prasad.hpp"

#include <json.hpp>

#include <string>

namespace galdist::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Parses text as JSON, raising InputError on syntax errors.
Json parse(const std::string& text);
Json read_file(const std::string& path);

// Rationals travel as integers or "p/q" strings.
Json to_json(const Q& q);
Q rational(const Json& j);
std::vector<Q> rational_list(const Json& j);

Json to_json(const SquareClass& c);
SquareClass square_class(const Json& j, const Prime& p);

Json to_json(const RatMatrix& m);
RatMatrix rat_matrix(const Json& j);

Json to_json(const BiquadElement& x);
Json to_json(const BiquadMatrix& m);
// Entries are rationals or [c0, c1, c2, c3] coordinate lists.
BiquadMatrix biquad_matrix(const Json& j, const BiquadField& f);

// {"case", "p", "a", "b", "kernel", "n"}
ClassicalPair classical_pair(const Json& j);
Json to_json(const ClassicalPair& pair);

// {"parts", "r", "sign"}
Composition composition(const Json& j);
Json to_json(const Composition& c);

// {"rho", "c"}, both 1-based.
SignedPerm signed_perm(const Json& j);
Json to_json(const SignedPerm& w);

XOrbitInvariant orbit_invariant(const Json& j, const Prime& p);
Json to_json(const XOrbitInvariant& inv);

Json to_json(const FormInvariants& inv);

CuspidalDatum cuspidal_datum(const Json& j, const Prime& p);
Json to_json(const CuspidalDatum& d);
Json to_json(const Witness& w);
Json to_json(const Verdict& v);

Json to_json(const Root& r);
Json to_json(const Vertex& v);
Json to_json(const DescentResult& d);

QuadExtension quad_extension(const Json& j);
GroupDescriptor group_descriptor(const Json& j, const Prime& fallback);
Json to_json(const GroupDescriptor& y);
Json to_json(const CharacterFormula& chi);
std::string formula_text(const CharacterFormula& chi);

GLProductDatum gl_product_datum(const Json& j);
Json to_json(const GLProductResult& r);

}  // namespace galdist::io

#endif
