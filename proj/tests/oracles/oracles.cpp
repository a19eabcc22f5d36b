#include "oracles/oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oracle {

std::vector<std::pair<Side, int>> clockwise(const BoxShape& s) {
  std::vector<std::pair<Side, int>> out;
  for (int p = 0; p < s.top; ++p) out.emplace_back(Side::Top, p);
  for (int r = 0; r < s.right; ++r) out.emplace_back(Side::Right, r);
  for (int p = s.bottom - 1; p >= 0; --p) out.emplace_back(Side::Bottom, p);
  for (int r = s.left - 1; r >= 0; --r) out.emplace_back(Side::Left, r);
  return out;
}

int index_of(const BoxShape& s, Side side, int pos) {
  auto cw = clockwise(s);
  for (std::size_t i = 0; i < cw.size(); ++i)
    if (cw[i].first == side && cw[i].second == pos) return static_cast<int>(i);
  throw std::out_of_range("no such boundary point");
}

bool pairwise_noncrossing(const Matching& m) {
  const int n = static_cast<int>(m.size());
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      int b = m[a], d = m[c];
      if (a < c && c < b && b < d) return false;
    }
  return true;
}

namespace {
void pm(Matching& cur, std::vector<Matching>& out) {
  int i = -1;
  for (std::size_t k = 0; k < cur.size(); ++k)
    if (cur[k] == -1) {
      i = static_cast<int>(k);
      break;
    }
  if (i == -1) {
    out.push_back(cur);
    return;
  }
  for (std::size_t j = i + 1; j < cur.size(); ++j) {
    if (cur[j] != -1) continue;
    cur[i] = static_cast<int>(j);
    cur[j] = i;
    pm(cur, out);
    cur[i] = cur[j] = -1;
  }
}
}  // namespace

std::vector<Matching> all_perfect_matchings(int n) {
  std::vector<Matching> out;
  Matching cur(n, -1);
  pm(cur, out);
  return out;
}

std::vector<Matching> all_noncrossing(int n) {
  std::vector<Matching> out;
  for (auto& m : all_perfect_matchings(n))
    if (pairwise_noncrossing(m)) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

int Net::add(const TLDiagram& d) {
  int base = static_cast<int>(parent_.size());
  pieces_.push_back(d);
  base_.push_back(base);
  for (int i = 0; i < d.size(); ++i) parent_.push_back(base + i);
  for (int i = 0; i < d.size(); ++i) unite(base + i, base + d.partner(i));
  return static_cast<int>(pieces_.size()) - 1;
}

int Net::id(int piece, Side side, int pos) const {
  return base_[piece] + index_of(pieces_[piece].shape(), side, pos);
}

int Net::find(int x) {
  while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
  return x;
}

void Net::unite(int a, int b) { parent_[find(a)] = find(b); }

void Net::join(int pa, Side sa, int a, int pb, Side sb, int b) { unite(id(pa, sa, a), id(pb, sb, b)); }

void Net::expose(Side out_side, int out_pos, int piece, Side side, int pos) {
  exposed_.emplace_back(out_side, out_pos, id(piece, side, pos));
}

std::pair<Matching, int> Net::resolve(const BoxShape& out) {
  Matching m(out.size(), -1);
  std::map<int, std::vector<int>> comp;
  for (auto [side, pos, v] : exposed_) comp[find(v)].push_back(index_of(out, side, pos));
  for (auto& [root, pts] : comp) {
    if (pts.size() != 2) throw std::logic_error("component with other than two ends");
    m[pts[0]] = pts[1];
    m[pts[1]] = pts[0];
  }
  std::map<int, int> all;
  for (std::size_t v = 0; v < parent_.size(); ++v) all[find(static_cast<int>(v))] = 1;
  int loops = static_cast<int>(all.size() - comp.size());
  return {m, loops};
}

tlenv::GlueResult partial(const TLDiagram& x, const TLDiagram& y, int i, int j) {
  const BoxShape& a = x.shape();
  const BoxShape& b = y.shape();
  Net net;
  int px = net.add(x), py = net.add(y);
  for (int r = 0; r < a.right; ++r) net.join(px, Side::Right, r, py, Side::Left, r);
  for (int m = 0; m < i; ++m) net.join(px, Side::Top, a.top - 1 - m, py, Side::Top, m);
  for (int m = 0; m < j; ++m) net.join(px, Side::Bottom, a.bottom - 1 - m, py, Side::Bottom, m);
  BoxShape out(a.left, b.right, a.top + b.top - 2 * i, a.bottom + b.bottom - 2 * j, a.shading);
  int pos = 0;
  for (int p = 0; p < a.top - i; ++p) net.expose(Side::Top, pos++, px, Side::Top, p);
  for (int p = i; p < b.top; ++p) net.expose(Side::Top, pos++, py, Side::Top, p);
  pos = 0;
  for (int p = 0; p < a.bottom - j; ++p) net.expose(Side::Bottom, pos++, px, Side::Bottom, p);
  for (int p = j; p < b.bottom; ++p) net.expose(Side::Bottom, pos++, py, Side::Bottom, p);
  for (int r = 0; r < a.left; ++r) net.expose(Side::Left, r, px, Side::Left, r);
  for (int r = 0; r < b.right; ++r) net.expose(Side::Right, r, py, Side::Right, r);
  auto [m, loops] = net.resolve(out);
  return {TLDiagram(out, m), loops};
}

tlenv::GlueResult horizontal(const TLDiagram& x, const TLDiagram& y) { return partial(x, y, 0, 0); }

Poly trace(const TLDiagram& d) {
  const BoxShape& s = d.shape();
  if (s.left != s.right || s.top % 2 || s.bottom % 2) return Poly();
  std::map<int, long> hist;
  for (const auto& tm : all_noncrossing(s.top))
    for (const auto& bm : all_noncrossing(s.bottom)) {
      Net net;
      int px = net.add(d);
      for (int r = 0; r < s.left; ++r) net.join(px, Side::Left, r, px, Side::Right, r);
      for (int p = 0; p < s.top; ++p)
        if (tm[p] > p) net.join(px, Side::Top, p, px, Side::Top, tm[p]);
      for (int p = 0; p < s.bottom; ++p)
        if (bm[p] > p) net.join(px, Side::Bottom, p, px, Side::Bottom, bm[p]);
      hist[net.resolve(BoxShape()).second]++;
    }
  Poly acc;
  for (auto [k, c] : hist) acc += Poly::monomial(c, k);
  return acc;
}

mpq_class eval(const Poly& p, const mpq_class& x) {
  mpq_class acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

bool eval(const Scalar& s, const mpq_class& x, mpq_class& out) {
  mpq_class d = eval(s.den(), x);
  if (d == 0) return false;
  out = eval(s.num(), x) / d;
  return true;
}

bool same_function(const Scalar& a, const Scalar& b) {
  static const std::vector<mpq_class> pts = {mpq_class(3, 2), mpq_class(7, 3), mpq_class(-5, 4),
                                             mpq_class(11), mpq_class(2, 9), mpq_class(-13, 7)};
  int used = 0;
  for (const auto& x : pts) {
    mpq_class va, vb;
    if (!eval(a, x, va) || !eval(b, x, vb)) continue;
    if (va != vb) return false;
    ++used;
  }
  return used >= 3;
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

TLDiagram random_diagram(const BoxShape& s, std::mt19937_64& rng) {
  auto ms = tlenv::noncrossing_matchings(s.size());
  return TLDiagram(s, (*ms)[rng() % ms->size()]);
}

BoxShape random_shape(int max_points, std::mt19937_64& rng, bool allow_odd_sides) {
  while (true) {
    int total = 2 * uniform(rng, 0, max_points / 2);
    int c[4] = {0, 0, 0, 0};
    for (int i = 0; i < total; ++i) c[uniform(rng, 0, 3)]++;
    BoxShape s(c[0], c[1], c[2], c[3], uniform(rng, 0, 1) ? tlenv::Shading::Plus : tlenv::Shading::Minus);
    if (!allow_odd_sides && (s.left % 2 || s.right % 2)) continue;
    return s;
  }
}

}  // namespace oracle
