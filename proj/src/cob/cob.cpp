#include "tlenv/cob.hpp"

#include <map>
#include <mutex>

#include "tlenv/errors.hpp"
#include "tlenv/tangle.hpp"

namespace tlenv {

namespace {

enum class Kind { Epi, Monic, NonnestedEpi, NonnestedMonic };

std::shared_ptr<const std::vector<TLDiagram>> cached(Kind kind, int from, int to) {
  static std::mutex mu;
  static std::map<std::tuple<Kind, int, int>, std::shared_ptr<const std::vector<TLDiagram>>> cache;
  if (from < 0 || to < 0 || (from - to) % 2 != 0 || to > from)
    throw ShapeError("no such reduction of boundary points");
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(kind, from, to);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  bool epi_side = kind == Kind::Epi || kind == Kind::NonnestedEpi;
  BoxShape shape = epi_side ? BoxShape(0, 0, to, from) : BoxShape(0, 0, from, to);
  std::vector<TLDiagram> out;
  for (const auto& d : enumerate_matchings(shape)) {
    Classification c = classify(d);
    bool keep = false;
    switch (kind) {
      case Kind::Epi: keep = c.epi; break;
      case Kind::Monic: keep = c.monic; break;
      case Kind::NonnestedEpi: keep = c.nonnested_epi; break;
      case Kind::NonnestedMonic: keep = c.nonnested_monic; break;
    }
    if (keep) out.push_back(d);
  }
  auto ptr = std::make_shared<const std::vector<TLDiagram>>(std::move(out));
  cache.emplace(key, ptr);
  return ptr;
}

template <typename Lists>
GradedElement apply_sum(const GradedElement& in, Flavor out_flavor, bool signed_sum, Lists lists) {
  GradedElement out(out_flavor);
  for (const auto& [d, c] : in.terms()) {
    const BoxShape& s = d.shape();
    for (int s2 = s.top % 2; s2 <= s.top; s2 += 2)
      for (int t2 = s.bottom % 2; t2 <= s.bottom; t2 += 2) {
        auto [tops, bots] = lists(s.top, s2, s.bottom, t2);
        int caps = (s.top - s2) / 2 + (s.bottom - t2) / 2;
        Scalar sc = signed_sum && caps % 2 ? -c : c;
        for (const auto& a : *tops) {
          GlueResult up = stack_top(a, d);
          for (const auto& b : *bots) {
            GlueResult r = stack_bottom(up.diagram, b);
            out.add_term(r.diagram, sc, up.loops + r.loops);
          }
        }
      }
  }
  return out;
}

}  // namespace

std::shared_ptr<const std::vector<TLDiagram>> epi_diagrams(int from, int to) {
  return cached(Kind::Epi, from, to);
}
std::shared_ptr<const std::vector<TLDiagram>> monic_diagrams(int from, int to) {
  return cached(Kind::Monic, from, to);
}
std::shared_ptr<const std::vector<TLDiagram>> nonnested_epi_diagrams(int from, int to) {
  return cached(Kind::NonnestedEpi, from, to);
}
std::shared_ptr<const std::vector<TLDiagram>> nonnested_monic_diagrams(int from, int to) {
  return cached(Kind::NonnestedMonic, from, to);
}

GradedElement map_X(const GradedElement& v) {
  if (v.flavor() != Flavor::V) throw PreconditionError("X expects a V flavored element");
  return apply_sum(v, Flavor::W, false, [](int s, int s2, int t, int t2) {
    return std::make_pair(epi_diagrams(s, s2), monic_diagrams(t, t2));
  });
}

GradedElement map_Y(const GradedElement& w) {
  if (w.flavor() != Flavor::W) throw PreconditionError("Y expects a W flavored element");
  return apply_sum(w, Flavor::V, true, [](int s, int s2, int t, int t2) {
    return std::make_pair(nonnested_epi_diagrams(s, s2), nonnested_monic_diagrams(t, t2));
  });
}

}  // namespace tlenv
