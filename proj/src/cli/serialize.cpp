#include "tlenv/serialize.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "json.hpp"
#include "tlenv/errors.hpp"

namespace tlenv {

using json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw SchemaError(std::string("expected an object holding \"") + key + "\"");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
  return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const char* what) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
      throw SchemaError(std::string("unexpected field \"") + it.key() + "\" in " + what);
}

int small_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  auto x = v.get<long long>();
  if (x < 0 || x > 1000) throw SchemaError(std::string(what) + " out of range");
  return static_cast<int>(x);
}

mpz_class big_int(const json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return mpz_class(std::to_string(v.get<unsigned long long>()));
    return mpz_class(std::to_string(v.get<long long>()));
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) throw SchemaError("bad integer string \"" + s + "\"");
    return z;
  }
  throw SchemaError("coefficient entries must be integers");
}

json emit_int(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json poly_json(const Poly& p) {
  json a = json::array();
  if (p.is_zero()) a.push_back(0);
  for (const auto& c : p.coeffs()) a.push_back(emit_int(c));
  return a;
}

Poly poly_from(const json& a, bool strict, const char* what) {
  if (!a.is_array() || a.empty()) throw SchemaError(std::string(what) + " must be a nonempty array");
  std::vector<mpz_class> c;
  for (const auto& v : a) c.push_back(big_int(v));
  Poly p(c);
  if (strict && static_cast<int>(a.size()) != std::max(1, p.degree() + 1))
    throw SchemaError(std::string(what) + " has trailing zeros");
  return p;
}

Scalar coeff_from(const json& c, bool strict) {
  if (strict) only_keys(c, {"num", "den"}, "coeff");
  Poly num = poly_from(field(c, "num"), strict, "num");
  Poly den = poly_from(field(c, "den"), strict, "den");
  if (den.is_zero()) throw SchemaError("zero denominator");
  if (num.is_zero()) throw SchemaError("zero coefficients are not allowed");
  Scalar s(num, den);
  if (strict && (s.num() != num || s.den() != den))
    throw SchemaError("coefficient is not reduced: " + s.to_string());
  return s;
}

Shading shading_from(const json& v) {
  if (v == "+") return Shading::Plus;
  if (v == "-") return Shading::Minus;
  throw SchemaError("shading must be \"+\" or \"-\"");
}

json shape_json(const BoxShape& s) {
  json o;
  o["left"] = s.left;
  o["right"] = s.right;
  o["top"] = s.top;
  o["bottom"] = s.bottom;
  o["shading"] = std::string(1, shading_char(s.shading));
  return o;
}

}  // namespace

std::string emit_coeff(const Scalar& s) {
  json o;
  o["num"] = poly_json(s.num());
  o["den"] = poly_json(s.den());
  return o.dump();
}

namespace {

std::string emit_element_impl(const GradedElement& e, std::optional<Parity> parity) {
  std::ostringstream os;
  os << "{\n  \"flavor\": \"" << flavor_name(e.flavor()) << "\",\n";
  if (parity) os << "  \"parity\": \"" << parity_name(*parity) << "\",\n";
  os << "  \"cells\": [";
  bool first_cell = true;
  for (const auto& cell : e.cells()) {
    os << (first_cell ? "\n" : ",\n");
    first_cell = false;
    os << "    {\n      \"shape\": " << shape_json(cell.shape).dump() << ",\n      \"terms\": [";
    bool first_term = true;
    for (const auto& [d, c] : cell.terms) {
      os << (first_term ? "\n" : ",\n");
      first_term = false;
      json pairs = json::array();
      for (auto [i, j] : d.pairs()) pairs.push_back({i, j});
      os << "        {\"pairs\": " << pairs.dump() << ", \"coeff\": " << emit_coeff(c) << "}";
    }
    os << "\n      ]\n    }";
  }
  os << (first_cell ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

Parity parity_from(const json& v) {
  if (v == "odd") return Parity::Odd;
  if (v == "even") return Parity::Even;
  if (v == "mixed") return Parity::Mixed;
  throw SchemaError("parity must be \"odd\", \"even\" or \"mixed\"");
}

// Matching from a "pairs" array, checked against the shape.
TLDiagram diagram_from(const BoxShape& shape, const json& pj, bool strict) {
  if (!pj.is_array()) throw SchemaError("pairs must be an array");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : pj) {
    if (!p.is_array() || p.size() != 2) throw SchemaError("each pair must have two entries");
    pairs.emplace_back(small_int(p[0], "pair entry"), small_int(p[1], "pair entry"));
  }
  TLDiagram d;
  try {
    d = TLDiagram::from_pairs(shape, pairs);
  } catch (const ShapeError& e) {
    throw SchemaError(std::string("invalid matching: ") + e.what());
  }
  if (strict && d.pairs() != pairs) throw SchemaError("pairs are not in canonical order");
  return d;
}

BoxShape shape_from(const json& sh, bool strict) {
  if (strict) only_keys(sh, {"left", "right", "top", "bottom", "shading"}, "shape");
  BoxShape shape(small_int(field(sh, "left"), "left"), small_int(field(sh, "right"), "right"),
                 small_int(field(sh, "top"), "top"), small_int(field(sh, "bottom"), "bottom"),
                 shading_from(field(sh, "shading")));
  try {
    shape.validate();
  } catch (const ShapeError& e) {
    throw SchemaError(e.what());
  }
  return shape;
}

}  // namespace

std::string emit_element(const GradedElement& e) { return emit_element_impl(e, std::nullopt); }
std::string emit_element(const GradedElement& e, Parity parity) { return emit_element_impl(e, parity); }

std::optional<Parity> document_parity(std::string_view text) {
  json doc = parse_json(text);
  if (doc.is_object() && doc.contains("parity")) return parity_from(doc["parity"]);
  return std::nullopt;
}

std::string emit_diagram(const TLDiagram& d) {
  json o;
  o["shape"] = shape_json(d.shape());
  json pairs = json::array();
  for (auto [i, j] : d.pairs()) pairs.push_back({i, j});
  o["pairs"] = pairs;
  return o.dump() + "\n";
}

TLDiagram parse_diagram(std::string_view text, bool strict) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw SchemaError("diagram document must be an object");
  if (strict) only_keys(doc, {"shape", "pairs"}, "diagram");
  return diagram_from(shape_from(field(doc, "shape"), strict), field(doc, "pairs"), strict);
}

GradedElement parse_element(std::string_view text, bool strict) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw SchemaError("element document must be an object");
  if (strict) only_keys(doc, {"flavor", "parity", "cells"}, "element");
  const json& fl = field(doc, "flavor");
  Flavor flavor;
  if (fl == "V") flavor = Flavor::V;
  else if (fl == "W") flavor = Flavor::W;
  else throw SchemaError("flavor must be \"V\" or \"W\"");
  const json& cells = field(doc, "cells");
  if (!cells.is_array()) throw SchemaError("cells must be an array");

  GradedElement out(flavor);
  std::vector<TLDiagram> order;
  bool first_cell = true;
  BoxShape prev_shape;
  for (const auto& cell : cells) {
    if (strict) only_keys(cell, {"shape", "terms"}, "cell");
    BoxShape shape = shape_from(field(cell, "shape"), strict);
    if (strict && !first_cell && !(prev_shape < shape)) throw SchemaError("cells are not in canonical order");
    first_cell = false;
    prev_shape = shape;
    const json& terms = field(cell, "terms");
    if (!terms.is_array() || terms.empty()) throw SchemaError("terms must be a nonempty array");
    std::vector<TLDiagram> cell_order;
    for (const auto& t : terms) {
      if (strict) only_keys(t, {"pairs", "coeff"}, "term");
      TLDiagram d = diagram_from(shape, field(t, "pairs"), strict);
      Scalar c = coeff_from(field(t, "coeff"), strict);
      if (strict) {
        if (!cell_order.empty() && !(cell_order.back() < d))
          throw SchemaError("terms are not in canonical order or repeat a diagram");
        cell_order.push_back(d);
      }
      out.add_term(d, c);
    }
  }
  if (doc.contains("parity")) {
    Parity declared = parity_from(doc["parity"]);
    bool phi = true, omega = true;
    for (const auto& sh : out.shapes()) {
      phi = phi && (in_phi_odd(sh) || in_phi_even(sh));
      omega = omega && (in_omega_odd(sh) || in_omega_even(sh));
    }
    if (!phi && !omega) throw SchemaError("parity given for an element outside Phi and Omega");
    if (!out.is_zero() && (phi ? phi_parity(out) : omega_parity(out)) != declared)
      throw SchemaError(std::string("declared parity ") + parity_name(declared) + " does not match the cells");
  }
  return out;
}

PrincipalGraph parse_graph(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw SchemaError("graph document must be an object");
  only_keys(doc, {"vertices", "edges", "star", "infinite", "delta"}, "graph");
  PrincipalGraph g;
  const json& vs = field(doc, "vertices");
  if (!vs.is_array()) throw SchemaError("vertices must be an array");
  for (const auto& v : vs) {
    only_keys(v, {"id", "parity"}, "vertex");
    const json& id = field(v, "id");
    const json& par = field(v, "parity");
    if (!id.is_string()) throw SchemaError("vertex id must be a string");
    if (par != "even" && par != "odd") throw SchemaError("parity must be \"even\" or \"odd\"");
    g.vertices.push_back({id.get<std::string>(), par == "even"});
  }
  const json& es = field(doc, "edges");
  if (!es.is_array()) throw SchemaError("edges must be an array");
  auto vertex = [&](const json& v) {
    if (!v.is_string()) throw SchemaError("edge endpoints must be vertex ids");
    int i = g.find(v.get<std::string>());
    if (i < 0) throw SchemaError("unknown vertex \"" + v.get<std::string>() + "\"");
    return i;
  };
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2) throw SchemaError("each edge must have two endpoints");
    g.edges.emplace_back(vertex(e[0]), vertex(e[1]));
  }
  g.star = vertex(field(doc, "star"));
  if (doc.contains("infinite")) {
    if (!doc["infinite"].is_boolean()) throw SchemaError("infinite must be a boolean");
    g.infinite = doc["infinite"].get<bool>();
  }
  if (doc.contains("delta")) {
    if (!doc["delta"].is_number()) throw SchemaError("delta must be a number");
    g.delta = doc["delta"].get<double>();
  }
  return g;
}

std::string emit_meander(const MeanderCount& m) {
  json o;
  o["n"] = m.order;
  json counts = json::object();
  for (int k = 0; k < m.order; ++k) counts[std::to_string(k + 1)] = m.counts[k];
  o["counts"] = counts;
  o["polynomial"] = meander_polynomial(m).to_string('q');
  return o.dump() + "\n";
}

}  // namespace tlenv
