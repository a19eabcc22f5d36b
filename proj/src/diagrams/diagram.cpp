#include "tlenv/diagram.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "tlenv/errors.hpp"

namespace tlenv {

int BoxShape::count(Side side) const {
  switch (side) {
    case Side::Top: return top;
    case Side::Right: return right;
    case Side::Bottom: return bottom;
    case Side::Left: return left;
  }
  return 0;
}

int BoxShape::index(Side side, int pos) const {
  if (pos < 0 || pos >= count(side)) throw ShapeError("side position out of range");
  switch (side) {
    case Side::Top: return pos;
    case Side::Right: return top + pos;
    case Side::Bottom: return top + right + (bottom - 1 - pos);
    case Side::Left: return top + right + bottom + (left - 1 - pos);
  }
  return -1;
}

std::pair<Side, int> BoxShape::locate(int i) const {
  if (i < 0 || i >= size()) throw ShapeError("boundary index out of range");
  if (i < top) return {Side::Top, i};
  i -= top;
  if (i < right) return {Side::Right, i};
  i -= right;
  if (i < bottom) return {Side::Bottom, bottom - 1 - i};
  i -= bottom;
  return {Side::Left, left - 1 - i};
}

void BoxShape::validate() const {
  if (left < 0 || right < 0 || top < 0 || bottom < 0) throw ShapeError("negative boundary count");
  if (size() % 2 != 0) throw ShapeError("odd number of boundary points in " + to_string());
}

std::string BoxShape::to_string() const {
  std::ostringstream os;
  os << "V" << shading_char(shading) << "_{" << left << "," << right << "}(" << top << ","
     << bottom << ")";
  return os.str();
}

bool is_noncrossing(const Matching& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> stack;
  stack.reserve(n);
  for (int i = 0; i < n; ++i) {
    int j = m[i];
    if (j < 0 || j >= n || j == i || m[j] != i) return false;
    if (j > i) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != j) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

TLDiagram::TLDiagram(const BoxShape& shape, Matching partner)
    : shape_(shape), partner_(std::move(partner)) {
  shape_.validate();
  if (static_cast<int>(partner_.size()) != shape_.size())
    throw ShapeError("matching size does not fit " + shape_.to_string());
  const int n = size();
  for (int i = 0; i < n; ++i) {
    int j = partner_[i];
    if (j < 0 || j >= n || j == i || partner_[j] != i)
      throw ShapeError("not a perfect matching");
  }
  if (!is_noncrossing(partner_)) throw ShapeError("crossing matching");
}

TLDiagram TLDiagram::from_pairs(const BoxShape& shape,
                                const std::vector<std::pair<int, int>>& pairs) {
  shape.validate();
  Matching m(shape.size(), -1);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= shape.size() || b >= shape.size() || a == b)
      throw ShapeError("pair index out of range");
    if (m[a] != -1 || m[b] != -1) throw ShapeError("point used twice");
    m[a] = b;
    m[b] = a;
  }
  for (int v : m)
    if (v == -1) throw ShapeError("unmatched boundary point");
  return TLDiagram(shape, std::move(m));
}

TLDiagram TLDiagram::unchecked(const BoxShape& shape, Matching partner) {
  TLDiagram d;
  d.shape_ = shape;
  d.partner_ = std::move(partner);
  return d;
}

std::vector<std::pair<int, int>> TLDiagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    if (partner_[i] > i) out.emplace_back(i, partner_[i]);
  return out;
}

TLDiagram TLDiagram::with_shading(Shading s) const {
  TLDiagram d = *this;
  d.shape_.shading = s;
  return d;
}

std::vector<int> TLDiagram::encode() const {
  std::vector<int> e{shape_.left, shape_.right, shape_.top, shape_.bottom,
                     static_cast<int>(shape_.shading)};
  e.insert(e.end(), partner_.begin(), partner_.end());
  return e;
}

std::string TLDiagram::to_string() const {
  std::ostringstream os;
  os << shape_.to_string() << "[";
  bool first = true;
  for (auto [a, b] : pairs()) {
    if (!first) os << " ";
    first = false;
    os << a << "-" << b;
  }
  os << "]";
  return os.str();
}

std::size_t TLDiagramHash::operator()(const TLDiagram& d) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : d.encode()) {
    h ^= static_cast<std::size_t>(v + 7);
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

void build_matchings(int i, Matching& cur, std::vector<int>& open, std::vector<Matching>& out) {
  const int n = static_cast<int>(cur.size());
  if (i == n) {
    out.push_back(cur);
    return;
  }
  if (static_cast<int>(open.size()) + 1 <= n - i - 1) {
    open.push_back(i);
    build_matchings(i + 1, cur, open, out);
    open.pop_back();
  }
  if (!open.empty()) {
    int j = open.back();
    open.pop_back();
    cur[i] = j;
    cur[j] = i;
    build_matchings(i + 1, cur, open, out);
    open.push_back(j);
  }
}

}  // namespace

std::shared_ptr<const std::vector<Matching>> noncrossing_matchings(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const std::vector<Matching>>> cache;
  if (n < 0 || n % 2 != 0) throw ShapeError("matchings need an even number of points");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Matching> out;
  Matching cur(n, -1);
  std::vector<int> open;
  build_matchings(0, cur, open, out);
  std::sort(out.begin(), out.end());
  auto ptr = std::make_shared<const std::vector<Matching>>(std::move(out));
  cache.emplace(n, ptr);
  return ptr;
}

std::vector<TLDiagram> enumerate_matchings(const BoxShape& shape) {
  shape.validate();
  auto ms = noncrossing_matchings(shape.size());
  std::vector<TLDiagram> out;
  out.reserve(ms->size());
  for (const auto& m : *ms) out.push_back(TLDiagram::unchecked(shape, m));
  return out;
}

std::size_t catalan(int n) { return noncrossing_matchings(2 * n)->size(); }

int through_strings(const TLDiagram& d) {
  const BoxShape& s = d.shape();
  int r = 0;
  for (int i = 0; i < s.top; ++i)
    if (s.locate(d.partner(i)).first == Side::Bottom) ++r;
  return r;
}

Classification classify(const TLDiagram& d) {
  const BoxShape& s = d.shape();
  if (s.left != 0 || s.right != 0) throw ClassificationError("classify needs a diagram without side points");
  Classification c;
  int through = through_strings(d);
  c.epi = through == s.top;
  c.monic = through == s.bottom;
  auto adjacent_caps = [&](Side side) {
    for (int p = 0; p < s.count(side); ++p) {
      auto [os, q] = s.locate(d.at(side, p));
      if (os == side && q > p && q != p + 1) return false;
    }
    return true;
  };
  c.nonnested_epi = c.epi && adjacent_caps(Side::Bottom);
  c.nonnested_monic = c.monic && adjacent_caps(Side::Top);
  return c;
}

namespace {

// Map every point through a side-wise rule onto a new shape.
template <typename F>
TLDiagram remap(const TLDiagram& d, const BoxShape& out, F&& f) {
  const BoxShape& s = d.shape();
  std::vector<int> map(s.size());
  for (int i = 0; i < s.size(); ++i) {
    auto [side, pos] = s.locate(i);
    auto [ns, np] = f(side, pos);
    map[i] = out.index(ns, np);
  }
  return relabel(d, out, map);
}

}  // namespace

TLDiagram relabel(const TLDiagram& d, const BoxShape& shape, const std::vector<int>& map) {
  Matching m(shape.size(), -1);
  if (static_cast<int>(map.size()) != d.size() || shape.size() != d.size())
    throw ShapeError("relabel size mismatch");
  for (int i = 0; i < d.size(); ++i) m[map[i]] = map[d.partner(i)];
  return TLDiagram(shape, std::move(m));
}

TLDiagram dagger_reflect(const TLDiagram& d) {
  const BoxShape& s = d.shape();
  BoxShape out(s.right, s.left, s.top, s.bottom, flip_if_odd(s.shading, s.top));
  return remap(d, out, [&](Side side, int pos) -> std::pair<Side, int> {
    switch (side) {
      case Side::Top: return {Side::Top, s.top - 1 - pos};
      case Side::Bottom: return {Side::Bottom, s.bottom - 1 - pos};
      case Side::Left: return {Side::Right, pos};
      case Side::Right: return {Side::Left, pos};
    }
    return {side, pos};
  });
}

TLDiagram transpose(const TLDiagram& d) {
  const BoxShape& s = d.shape();
  BoxShape out(s.left, s.right, s.bottom, s.top,
               flip_if_odd(s.shading, s.top + s.right + s.bottom));
  return remap(d, out, [&](Side side, int pos) -> std::pair<Side, int> {
    switch (side) {
      case Side::Top: return {Side::Bottom, pos};
      case Side::Bottom: return {Side::Top, pos};
      case Side::Left: return {Side::Left, s.left - 1 - pos};
      case Side::Right: return {Side::Right, s.right - 1 - pos};
    }
    return {side, pos};
  });
}

TLDiagram rotate_pi(const TLDiagram& d) {
  const BoxShape& s = d.shape();
  BoxShape out(s.right, s.left, s.bottom, s.top, flip_if_odd(s.shading, s.top + s.right));
  return remap(d, out, [&](Side side, int pos) -> std::pair<Side, int> {
    switch (side) {
      case Side::Top: return {Side::Bottom, s.top - 1 - pos};
      case Side::Bottom: return {Side::Top, s.bottom - 1 - pos};
      case Side::Left: return {Side::Right, s.left - 1 - pos};
      case Side::Right: return {Side::Left, s.right - 1 - pos};
    }
    return {side, pos};
  });
}

}  // namespace tlenv
