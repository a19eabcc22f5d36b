#include "tlenv/element.hpp"

#include <sstream>

#include "tlenv/errors.hpp"

namespace tlenv {

GradedElement GradedElement::basis(const TLDiagram& d, Flavor flavor) {
  return term(d, Scalar(1), flavor);
}

GradedElement GradedElement::term(const TLDiagram& d, const Scalar& c, Flavor flavor) {
  GradedElement e(flavor);
  e.add_term(d, c);
  return e;
}

GradedElement GradedElement::with_flavor(Flavor f) const {
  GradedElement e = *this;
  e.flavor_ = f;
  return e;
}

Scalar GradedElement::coeff(const TLDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Scalar() : it->second;
}

void GradedElement::add_term(const TLDiagram& d, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GradedElement::add_term(const TLDiagram& d, const Scalar& c, int loops) {
  if (loops == 0) {
    add_term(d, c);
  } else {
    add_term(d, c * Scalar::delta_pow(loops));
  }
}

std::vector<BoxShape> GradedElement::shapes() const {
  std::vector<BoxShape> out;
  for (const auto& [d, c] : terms_)
    if (out.empty() || out.back() != d.shape()) out.push_back(d.shape());
  return out;
}

GradedElement GradedElement::cell(const BoxShape& shape) const {
  GradedElement e(flavor_);
  for (const auto& [d, c] : terms_)
    if (d.shape() == shape) e.terms_.emplace(d, c);
  return e;
}

std::vector<DiagramVector> GradedElement::cells() const {
  std::vector<DiagramVector> out;
  for (const auto& [d, c] : terms_) {
    if (out.empty() || out.back().shape != d.shape()) out.push_back(DiagramVector{d.shape(), {}});
    out.back().terms.emplace(d, c);
  }
  return out;
}

void GradedElement::check_flavor(const GradedElement& o) const {
  if (flavor_ != o.flavor_) throw PreconditionError("mixing V and W flavored elements");
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  check_flavor(o);
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  check_flavor(o);
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

GradedElement& GradedElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

GradedElement GradedElement::operator-() const {
  GradedElement e = *this;
  for (auto& [d, v] : e.terms_) v = -v;
  return e;
}

std::string GradedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << d.to_string();
  }
  return os.str();
}

}  // namespace tlenv
