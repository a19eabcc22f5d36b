#include "tlenv/gns.hpp"

#include <Eigen/Dense>
#include <limits>
#include <map>
#include <mutex>

#include "tlenv/algebra.hpp"
#include "tlenv/errors.hpp"
#include "tlenv/tangle.hpp"

namespace tlenv {

namespace {

int weight(const Scalar& s) { return s.num().degree() + s.den().degree(); }

}  // namespace

ScalarMatrix solve(ScalarMatrix a, ScalarMatrix b) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw PreconditionError("solve needs a square matrix");
  if (b.size() != n) throw PreconditionError("right hand side has the wrong height");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (!a[r][col].is_zero() && (piv == n || weight(a[r][col]) < weight(a[piv][col]))) piv = r;
    if (piv == n) throw DegenerateModulusError("singular Gram matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Scalar inv = Scalar(1) / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (auto& v : b[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar f = a[r][col];
      for (std::size_t c = col; c < n; ++c)
        if (!a[col][c].is_zero()) a[r][c] -= f * a[col][c];
      for (std::size_t c = 0; c < b[r].size(); ++c)
        if (!b[col][c].is_zero()) b[r][c] -= f * b[col][c];
    }
  }
  return b;
}

ScalarMatrix inverse(const ScalarMatrix& a) {
  ScalarMatrix id(a.size(), std::vector<Scalar>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) id[i][i] = Scalar(1);
  return solve(a, id);
}

Scalar determinant(ScalarMatrix a) {
  const std::size_t n = a.size();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (!a[r][col].is_zero() && (piv == n || weight(a[r][col]) < weight(a[piv][col]))) piv = r;
    if (piv == n) return Scalar();
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Scalar inv = Scalar(1) / a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      Scalar f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

namespace {

Scalar pair_diagrams(const TLDiagram& x, const TLDiagram& y, Pairing p) {
  const BoxShape& sx = x.shape();
  const BoxShape& sy = y.shape();
  if (sx.left != sy.left || sx.right != sy.right || sx.shading != sy.shading) return Scalar();
  TLDiagram yd = dagger_reflect(y);
  if (p == Pairing::Tau) {
    if ((sx.top + sy.top) % 2 || (sx.bottom + sy.bottom) % 2) return Scalar();
    GlueResult g = glue_horizontal(yd, x);
    Poly tr = diagram_trace(g.diagram);
    return Scalar(tr) * Scalar::delta_pow(g.loops - sx.right);
  }
  if (sx.top != sy.top || sx.bottom != sy.bottom) return Scalar();
  GlueResult g = glue_partial(yd, x, sx.top, sx.bottom);
  GlueResult c = trace_close(g.diagram);
  return Scalar::delta_pow(g.loops + c.loops);
}

}  // namespace

Scalar inner_product(const GradedElement& x, const GradedElement& y, Pairing p) {
  Scalar acc;
  for (const auto& [dx, cx] : x.terms())
    for (const auto& [dy, cy] : y.terms()) {
      Scalar v = pair_diagrams(dx, dy, p);
      if (!v.is_zero()) acc += cx * cy * v;
    }
  return acc;
}

ScalarMatrix gram_matrix(const std::vector<TLDiagram>& basis, Pairing p) {
  const std::size_t n = basis.size();
  ScalarMatrix g(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = pair_diagrams(basis[i], basis[j], p);
  return g;
}

ScalarMatrix gram_matrix(const BoxShape& shape, Pairing p) {
  return gram_matrix(enumerate_matchings(shape), p);
}

double min_gram_eigenvalue(const ScalarMatrix& g, double delta) {
  const Eigen::Index n = static_cast<Eigen::Index>(g.size());
  if (n == 0) return std::numeric_limits<double>::infinity();
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = g[i][j].evaluate(delta);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

std::vector<TLDiagram> tensor_basis(int a2, int b2) {
  std::vector<TLDiagram> out;
  for (const auto& d : enumerate_matchings(BoxShape(0, 0, a2, b2)))
    if (through_strings(d) == 0) out.push_back(d);
  return out;
}

namespace {

struct ThroughCache {
  std::mutex mu;
  std::map<int, ScalarMatrix> gram;
  std::map<int, ScalarMatrix> inv;
};

ThroughCache& through_cache() {
  static ThroughCache c;
  return c;
}

ScalarMatrix build_through_gram(int r) {
  auto ms = noncrossing_matchings(r);
  const std::size_t n = ms->size();
  ScalarMatrix g(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = Scalar::delta_pow(count_cycles((*ms)[i], (*ms)[j]));
  return g;
}

}  // namespace

const ScalarMatrix& through_gram(int r) {
  ThroughCache& c = through_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto it = c.gram.find(r);
  if (it == c.gram.end()) it = c.gram.emplace(r, build_through_gram(r)).first;
  return it->second;
}

const ScalarMatrix& through_gram_inverse(int r) {
  const ScalarMatrix& g = through_gram(r);
  ThroughCache& c = through_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto it = c.inv.find(r);
  if (it == c.inv.end()) it = c.inv.emplace(r, inverse(g)).first;
  return it->second;
}

namespace {

void require_tensor_cell(const BoxShape& s) {
  if (s.left != 0 || s.right != 0 || s.top % 2 || s.bottom % 2 || s.shading != Shading::Plus)
    throw PreconditionError("conditional expectation needs cells V+_{0,0}(2a,2b), got " + s.to_string());
}

}  // namespace

GradedElement conditional_expectation(const GradedElement& q) {
  GradedElement out(q.flavor());
  for (const auto& [d, c] : q.terms()) {
    const BoxShape& s = d.shape();
    require_tensor_cell(s);
    std::vector<int> top_ends, bot_ends;
    for (int p = 0; p < s.top; ++p) {
      auto [side, pos] = s.locate(d.partner(s.index(Side::Top, p)));
      if (side == Side::Bottom) {
        top_ends.push_back(s.index(Side::Top, p));
        bot_ends.push_back(s.index(Side::Bottom, pos));
      }
    }
    const int r = static_cast<int>(top_ends.size());
    if (r == 0) {
      out.add_term(d, c);
      continue;
    }
    const ScalarMatrix& ginv = through_gram_inverse(r);
    auto ms = noncrossing_matchings(r);
    for (std::size_t i = 0; i < ms->size(); ++i) {
      Matching m = d.partner();
      for (int a = 0; a < r; ++a) m[top_ends[a]] = top_ends[(*ms)[i][a]];
      for (std::size_t j = 0; j < ms->size(); ++j) {
        if (ginv[i][j].is_zero()) continue;
        Matching mm = m;
        for (int a = 0; a < r; ++a) mm[bot_ends[a]] = bot_ends[(*ms)[j][a]];
        out.add_term(TLDiagram(s, std::move(mm)), c * ginv[i][j]);
      }
    }
  }
  return out;
}

namespace {

const ScalarMatrix& tensor_gram_inverse(int a2, int b2, Pairing p) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, Pairing>, ScalarMatrix> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(a2, b2, p);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, inverse(gram_matrix(tensor_basis(a2, b2), p))).first;
  return it->second;
}

}  // namespace

GradedElement conditional_expectation_gram(const GradedElement& q, Pairing p) {
  GradedElement out(q.flavor());
  for (const auto& cell : q.cells()) {
    require_tensor_cell(cell.shape);
    std::vector<TLDiagram> basis = tensor_basis(cell.shape.top, cell.shape.bottom);
    const ScalarMatrix& ginv = tensor_gram_inverse(cell.shape.top, cell.shape.bottom, p);
    GradedElement part(q.flavor());
    for (const auto& [d, c] : cell.terms) part.add_term(d, c);
    std::vector<Scalar> rhs(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      rhs[i] = inner_product(part, GradedElement::basis(basis[i], q.flavor()), p);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Scalar coef;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (!rhs[j].is_zero()) coef += ginv[i][j] * rhs[j];
      out.add_term(basis[i], coef);
    }
  }
  return out;
}

void check_modulus(const GradedElement& q, double delta) {
  std::map<int, bool> seen;
  for (const auto& [d, c] : q.terms()) {
    require_tensor_cell(d.shape());
    int r = through_strings(d);
    if (r < 2 || seen.count(r)) continue;
    seen[r] = true;
    const ScalarMatrix& g = through_gram(r);
    const Eigen::Index n = static_cast<Eigen::Index>(g.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = g[i][j].evaluate(delta);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    double smallest = es.eigenvalues().cwiseAbs().minCoeff();
    if (smallest < 1e-10)
      throw DegenerateModulusError("Gram matrix on " + std::to_string(r) +
                                   " through strings is singular at d = " + std::to_string(delta));
  }
}

std::vector<NumericTerm> evaluate(const GradedElement& x, double delta) {
  std::vector<NumericTerm> out;
  for (const auto& [d, c] : x.terms()) out.push_back({d, c.evaluate(delta)});
  return out;
}

}  // namespace tlenv
