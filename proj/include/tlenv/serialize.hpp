#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tlenv/derivations.hpp"
#include "tlenv/element.hpp"
#include "tlenv/meander.hpp"
#include "tlenv/spectrum.hpp"

namespace tlenv {

// Element documents:
//   {"flavor":"V","cells":[{"shape":{"left":0,"right":0,"top":2,"bottom":0,
//     "shading":"+"},"terms":[{"pairs":[[0,1]],"coeff":{"num":[1],"den":[1]}}]}]}
// Pairs use clockwise indices from the marked corner.  Coefficient entries
// are integers, or decimal strings when they exceed 64 bits.
//
// Strict parsing rejects anything emit_element would not produce:
// unreduced coefficients, unsorted pairs, terms or cells, and repeated
// terms.  Lenient parsing canonicalizes them.  Both reject crossing or
// imperfect matchings, zero coefficients and malformed documents
// (SchemaError).
//
// Elements of Phi or Omega may carry "parity": "odd" | "even" | "mixed"
// after "flavor"; parsing checks it against the cells.
GradedElement parse_element(std::string_view text, bool strict = true);
std::string emit_element(const GradedElement& e);
std::string emit_element(const GradedElement& e, Parity parity);
// The "parity" field of a document, if present.
std::optional<Parity> document_parity(std::string_view text);

// {"shape":{...},"pairs":[[0,3],[1,2]]}
TLDiagram parse_diagram(std::string_view text, bool strict = true);
std::string emit_diagram(const TLDiagram& d);

std::string emit_coeff(const Scalar& s);

// {"vertices":[{"id":"*","parity":"even"},...],"edges":[["*","a"]],
//  "star":"*","infinite":false,"delta":1.414}  ("delta" optional)
PrincipalGraph parse_graph(std::string_view text);

// {"n":2,"counts":{"1":2,"2":2},"polynomial":"2*q + 2*q^2"}
std::string emit_meander(const MeanderCount& m);

}  // namespace tlenv
