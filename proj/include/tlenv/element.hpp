#pragma once

#include <map>
#include <string>
#include <vector>

#include "tlenv/diagram.hpp"
#include "tlenv/scalar.hpp"

namespace tlenv {

// V: ordinary diagram basis.  W: basis carrying the star product.
enum class Flavor { V, W };

inline const char* flavor_name(Flavor f) { return f == Flavor::V ? "V" : "W"; }

// The component of an element in a single box shape.
struct DiagramVector {
  BoxShape shape;
  std::map<TLDiagram, Scalar> terms;
};

// Finite linear combination of diagrams, possibly spread over many box
// shapes.  Terms are kept sorted by shape, then matching; zero
// coefficients are never stored.
class GradedElement {
 public:
  using Terms = std::map<TLDiagram, Scalar>;

  explicit GradedElement(Flavor flavor = Flavor::V) : flavor_(flavor) {}
  static GradedElement basis(const TLDiagram& d, Flavor flavor = Flavor::V);
  static GradedElement term(const TLDiagram& d, const Scalar& c, Flavor flavor = Flavor::V);

  Flavor flavor() const { return flavor_; }
  GradedElement with_flavor(Flavor f) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const TLDiagram& d) const;

  void add_term(const TLDiagram& d, const Scalar& c);
  // Adds c * d^loops.
  void add_term(const TLDiagram& d, const Scalar& c, int loops);

  std::vector<BoxShape> shapes() const;
  GradedElement cell(const BoxShape& shape) const;
  std::vector<DiagramVector> cells() const;

  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement& operator*=(const Scalar& c);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(GradedElement a, const Scalar& c) { return a *= c; }
  friend GradedElement operator*(const Scalar& c, GradedElement a) { return a *= c; }
  GradedElement operator-() const;
  bool operator==(const GradedElement& o) const {
    return flavor_ == o.flavor_ && terms_ == o.terms_;
  }
  bool operator!=(const GradedElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_flavor(const GradedElement& o) const;

  Flavor flavor_;
  Terms terms_;
};

}  // namespace tlenv
