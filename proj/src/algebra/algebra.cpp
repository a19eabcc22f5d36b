#include "tlenv/algebra.hpp"

#include <unordered_map>

#include "tlenv/errors.hpp"

namespace tlenv {

bool composable(const BoxShape& x, const BoxShape& y) {
  return x.right == y.left && y.shading == flip_if_odd(x.shading, x.top);
}

GradedElement v_product(const GradedElement& x, const GradedElement& y) {
  if (x.flavor() != y.flavor()) throw PreconditionError("mixing V and W flavored elements");
  GradedElement out(x.flavor());
  for (const auto& [dx, cx] : x.terms())
    for (const auto& [dy, cy] : y.terms()) {
      if (!composable(dx.shape(), dy.shape())) continue;
      GlueResult r = glue_horizontal(dx, dy);
      out.add_term(r.diagram, cx * cy, r.loops);
    }
  return out;
}

std::pair<int, Shading> gr_grade(const GradedElement& x) {
  if (x.is_zero()) throw PreconditionError("zero element has no grade");
  const BoxShape& first = x.terms().begin()->first.shape();
  for (const auto& [d, c] : x.terms()) {
    const BoxShape& s = d.shape();
    if (s.left != s.right || s.bottom != 0 || s.top % 2 != 0)
      throw PreconditionError("not an element of Gr_k: " + s.to_string());
    if (s.left != first.left) throw PreconditionError("Gr element mixes side counts");
    if (s.shading != first.shading) throw PreconditionError("Gr element mixes shadings");
  }
  return {first.left, first.shading};
}

GradedElement gr_product(const GradedElement& x, const GradedElement& y) {
  if (x.is_zero() || y.is_zero()) return GradedElement(x.flavor());
  auto gx = gr_grade(x);
  auto gy = gr_grade(y);
  if (gx.first != gy.first) throw PreconditionError("Gr product of different k");
  if (gx.second != gy.second) throw PreconditionError("Gr product of different shadings");
  return v_product(x, y);
}

GradedElement gr_include(const GradedElement& x) {
  GradedElement out(x.flavor());
  if (x.is_zero()) return out;
  gr_grade(x);
  for (const auto& [d, c] : x.terms()) {
    const BoxShape& s = d.shape();
    BoxShape ns(s.left + 1, s.right + 1, s.top, 0, s.shading);
    Matching m(ns.size(), -1);
    auto map = [&](int i) {
      auto [side, pos] = s.locate(i);
      return ns.index(side, pos);
    };
    for (int i = 0; i < d.size(); ++i) m[map(i)] = map(d.partner(i));
    int a = ns.index(Side::Left, s.left), b = ns.index(Side::Right, s.right);
    m[a] = b;
    m[b] = a;
    out.add_term(TLDiagram(ns, std::move(m)), c);
  }
  return out;
}

namespace {

Poly compute_trace(const TLDiagram& d) {
  const BoxShape& s = d.shape();
  const int n = d.size();
  Matching ext(n, -1);
  for (int r = 0; r < s.left; ++r) {
    int a = s.index(Side::Left, r), b = s.index(Side::Right, r);
    ext[a] = b;
    ext[b] = a;
  }
  std::vector<int> top_idx(s.top), bot_idx(s.bottom);
  for (int p = 0; p < s.top; ++p) top_idx[p] = s.index(Side::Top, p);
  for (int p = 0; p < s.bottom; ++p) bot_idx[p] = s.index(Side::Bottom, p);
  auto tops = noncrossing_matchings(s.top);
  auto bots = noncrossing_matchings(s.bottom);
  std::vector<long> hist(n / 2 + 2, 0);
  for (const auto& tm : *tops) {
    for (int p = 0; p < s.top; ++p) ext[top_idx[p]] = top_idx[tm[p]];
    for (const auto& bm : *bots) {
      for (int p = 0; p < s.bottom; ++p) ext[bot_idx[p]] = bot_idx[bm[p]];
      ++hist[count_cycles(d.partner(), ext)];
    }
  }
  std::vector<mpz_class> c(hist.size());
  for (std::size_t i = 0; i < hist.size(); ++i) c[i] = hist[i];
  return Poly(std::move(c));
}

}  // namespace

Poly diagram_trace(const TLDiagram& d) {
  const BoxShape& s = d.shape();
  if (s.left != s.right || s.top % 2 != 0 || s.bottom % 2 != 0) return Poly();
  thread_local std::unordered_map<TLDiagram, Poly, TLDiagramHash> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  Poly p = compute_trace(d);
  if (cache.size() > 200000) cache.clear();
  cache.emplace(d, p);
  return p;
}

Scalar v_trace(const GradedElement& x) {
  Scalar acc;
  for (const auto& [d, c] : x.terms()) {
    Poly p = diagram_trace(d);
    if (!p.is_zero()) acc += c * Scalar(p);
  }
  return acc;
}

Scalar normalized_trace(const GradedElement& x) {
  Scalar acc;
  for (const auto& [d, c] : x.terms()) {
    if (d.shape().left != d.shape().right) throw PreconditionError("trace needs equal side counts");
    Poly p = diagram_trace(d);
    if (!p.is_zero()) acc += c * Scalar(p) * Scalar::delta_pow(-d.shape().left);
  }
  return acc;
}

Scalar voiculescu_trace(const GradedElement& x) {
  if (x.is_zero()) return Scalar();
  gr_grade(x);
  return normalized_trace(x);
}

Scalar boxtimes_trace(const GradedElement& x) {
  for (const auto& [d, c] : x.terms()) {
    const BoxShape& s = d.shape();
    if (s.left != s.right || s.left % 2 != 0)
      throw PreconditionError("tensor trace needs side counts 2k on both sides");
  }
  return normalized_trace(x);
}

GradedElement w_product(const GradedElement& x, const GradedElement& y) {
  GradedElement out(Flavor::W);
  for (const auto& [dx, cx] : x.terms())
    for (const auto& [dy, cy] : y.terms()) {
      const BoxShape& a = dx.shape();
      const BoxShape& b = dy.shape();
      if (!composable(a, b)) continue;
      Scalar cc = cx * cy;
      for (int i = 0; i <= std::min(a.top, b.top); ++i)
        for (int j = 0; j <= std::min(a.bottom, b.bottom); ++j) {
          GlueResult r = glue_partial(dx, dy, i, j);
          out.add_term(r.diagram, cc, r.loops);
        }
    }
  return out;
}

Scalar w_trace(const GradedElement& x) {
  Scalar acc;
  for (const auto& [d, c] : x.terms()) {
    const BoxShape& s = d.shape();
    if (s.top != 0 || s.bottom != 0 || s.left != s.right) continue;
    GlueResult r = trace_close(d);
    acc += c * Scalar::delta_pow(r.loops);
  }
  return acc;
}

GradedElement dagger(const GradedElement& x) {
  GradedElement out(x.flavor());
  for (const auto& [d, c] : x.terms()) out.add_term(dagger_reflect(d), c);
  return out;
}

GradedElement transpose(const GradedElement& x) {
  GradedElement out(x.flavor());
  for (const auto& [d, c] : x.terms()) out.add_term(transpose(d), c);
  return out;
}

GradedElement tl_action(const TLDiagram& a, const TLDiagram& b, const GradedElement& x) {
  if (a.shape().left || a.shape().right || b.shape().left || b.shape().right)
    throw GluingError("acting diagrams must not have side points");
  GradedElement out(x.flavor());
  for (const auto& [d, c] : x.terms()) {
    if (d.shape().top != a.shape().bottom || d.shape().bottom != b.shape().top)
      throw GluingError("boundary count mismatch in action on " + d.shape().to_string());
    GlueResult up = stack_top(a, d);
    GlueResult r = stack_bottom(up.diagram, b);
    out.add_term(r.diagram, c, up.loops + r.loops);
  }
  return out;
}

TLDiagram embed_tensor(const TLDiagram& x, const TLDiagram& y) {
  const BoxShape& a = x.shape();
  const BoxShape& b = y.shape();
  for (const BoxShape* s : {&a, &b})
    if (s->left != s->right || s->bottom != 0 || s->top % 2 != 0)
      throw PreconditionError("tensor embedding needs Gr_k elements");
  if (a.left != b.left || a.shading != b.shading)
    throw PreconditionError("tensor embedding of different grades");
  const int k = a.left;
  BoxShape out(2 * k, 2 * k, a.top, b.top, a.shading);
  Tangle t;
  int px = t.add(x), py = t.add(y);
  Boundary bd(out);
  for (int p = 0; p < a.top; ++p) bd.set(Side::Top, p, t.at(px, Side::Top, p));
  for (int r = 0; r < k; ++r) {
    bd.set(Side::Left, r, t.at(px, Side::Left, r));
    bd.set(Side::Right, r, t.at(px, Side::Right, r));
    bd.set(Side::Right, k + (k - 1 - r), t.at(py, Side::Left, r));
    bd.set(Side::Left, k + (k - 1 - r), t.at(py, Side::Right, r));
  }
  for (int p = 0; p < b.top; ++p) bd.set(Side::Bottom, b.top - 1 - p, t.at(py, Side::Top, p));
  return resolve(t, bd).diagram;
}

GradedElement embed_tensor(const GradedElement& x, const GradedElement& y) {
  GradedElement out(x.flavor());
  for (const auto& [dx, cx] : x.terms())
    for (const auto& [dy, cy] : y.terms()) out.add_term(embed_tensor(dx, dy), cx * cy);
  return out;
}

GradedElement op_map(const GradedElement& y) {
  GradedElement out(y.flavor());
  for (const auto& [d, c] : y.terms()) {
    if (d.shape().left != d.shape().right) throw PreconditionError("op needs square cells");
    out.add_term(rotate_pi(d), c);
  }
  return out;
}

TLDiagram make_diagram(const BoxShape& shape,
                       const std::vector<std::pair<SidePoint, SidePoint>>& strands) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(strands.size());
  for (const auto& [a, b] : strands)
    pairs.emplace_back(shape.index(a.side, a.pos), shape.index(b.side, b.pos));
  return TLDiagram::from_pairs(shape, pairs);
}

namespace standard {

TLDiagram unit(int k, Shading s) {
  std::vector<std::pair<SidePoint, SidePoint>> st;
  for (int r = 0; r < k; ++r) st.push_back({{Side::Left, r}, {Side::Right, r}});
  return make_diagram(BoxShape(k, k, 0, 0, s), st);
}

GradedElement unit_element(int k, Shading s) { return GradedElement::basis(unit(k, s)); }

TLDiagram jones_e(int m, int i, Shading s) {
  if (i < 0 || i > m - 2) throw ShapeError("Jones projection index out of range");
  std::vector<std::pair<SidePoint, SidePoint>> st;
  for (int r = 0; r < m; ++r)
    if (r != i && r != i + 1) st.push_back({{Side::Left, r}, {Side::Right, r}});
  st.push_back({{Side::Left, i}, {Side::Left, i + 1}});
  st.push_back({{Side::Right, i}, {Side::Right, i + 1}});
  return make_diagram(BoxShape(m, m, 0, 0, s), st);
}

GradedElement cupcap_e(int k, Shading s, bool normalized) {
  GradedElement e = GradedElement::basis(jones_e(k + 2, k, s));
  if (normalized) e *= Scalar::delta_pow(-1);
  return e;
}

GradedElement f_element(int k, Shading s) {
  if (k < 1) throw ShapeError("f_k needs k >= 1");
  return GradedElement::term(jones_e(2 * k, k - 1, s), Scalar::delta_pow(-1));
}

TLDiagram c_diagram(int k, Shading s) {
  std::vector<std::pair<SidePoint, SidePoint>> st;
  st.push_back({{Side::Top, 0}, {Side::Right, 0}});
  for (int r = 0; r < 2 * k; ++r) st.push_back({{Side::Left, r}, {Side::Right, r + 1}});
  st.push_back({{Side::Bottom, 0}, {Side::Right, 2 * k + 1}});
  return make_diagram(BoxShape(2 * k, 2 * k + 2, 1, 1, s), st);
}

GradedElement c_element(int k, Shading s) { return GradedElement::basis(c_diagram(k, s)); }

GradedElement p_element(int k, Shading s) { return GradedElement::basis(unit(2 * k, s)); }

TLDiagram vertical_bars() {
  return make_diagram(BoxShape(0, 0, 2, 2),
                      {{{Side::Top, 0}, {Side::Bottom, 0}}, {{Side::Top, 1}, {Side::Bottom, 1}}});
}

TLDiagram rainbow(int n) {
  std::vector<std::pair<SidePoint, SidePoint>> st;
  for (int i = 0; i < n; ++i) st.push_back({{Side::Top, i}, {Side::Top, 2 * n - 1 - i}});
  return make_diagram(BoxShape(0, 0, 2 * n, 0), st);
}

TLDiagram cups(int n) {
  std::vector<std::pair<SidePoint, SidePoint>> st;
  for (int i = 0; i < n; ++i) st.push_back({{Side::Top, 2 * i}, {Side::Top, 2 * i + 1}});
  return make_diagram(BoxShape(0, 0, 2 * n, 0), st);
}

TLDiagram empty() { return TLDiagram(BoxShape(0, 0, 0, 0), {}); }

}  // namespace standard

}  // namespace tlenv
