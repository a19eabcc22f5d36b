#include "tlenv/tangle.hpp"

#include "tlenv/errors.hpp"

namespace tlenv {

int Tangle::add(const TLDiagram& d) {
  pieces_.push_back(d);
  offset_.push_back(total_);
  total_ += d.size();
  return static_cast<int>(pieces_.size()) - 1;
}

int Tangle::add_string() {
  return add(TLDiagram::unchecked(BoxShape(0, 0, 1, 1), Matching{1, 0}));
}

Port Tangle::at(int piece, Side side, int pos) const {
  return Port{piece, pieces_.at(piece).shape().index(side, pos)};
}

void Tangle::wire(Port a, Port b) { wires_.emplace_back(a, b); }

int Tangle::flat(Port p) const {
  if (p.piece < 0 || p.piece >= static_cast<int>(pieces_.size()) || p.point < 0 ||
      p.point >= pieces_[p.piece].size())
    throw GluingError("tangle port out of range");
  return offset_[p.piece] + p.point;
}

GlueResult Tangle::close(const BoxShape& out, const std::vector<Port>& boundary) const {
  if (static_cast<int>(boundary.size()) != out.size())
    throw GluingError("boundary size does not match output shape");
  std::vector<int> internal(total_);
  for (std::size_t k = 0; k < pieces_.size(); ++k)
    for (int i = 0; i < pieces_[k].size(); ++i)
      internal[offset_[k] + i] = offset_[k] + pieces_[k].partner(i);
  // ext >= 0: wired to that point; ext <= -2: outer point -ext-2.
  std::vector<int> ext(total_, -1);
  auto attach = [&](int p, int v) {
    if (ext[p] != -1) throw GluingError("piece point attached twice");
    ext[p] = v;
  };
  for (auto [a, b] : wires_) {
    int fa = flat(a), fb = flat(b);
    if (fa == fb) throw GluingError("wire from a point to itself");
    attach(fa, fb);
    attach(fb, fa);
  }
  for (std::size_t i = 0; i < boundary.size(); ++i) attach(flat(boundary[i]), -static_cast<int>(i) - 2);
  for (int v : ext)
    if (v == -1) throw GluingError("dangling piece point");

  std::vector<char> seen(total_, 0);
  Matching m(out.size(), -1);
  for (int i = 0; i < out.size(); ++i) {
    if (m[i] != -1) continue;
    int p = flat(boundary[i]);
    while (true) {
      seen[p] = 1;
      int q = internal[p];
      seen[q] = 1;
      int e = ext[q];
      if (e <= -2) {
        int j = -e - 2;
        m[i] = j;
        m[j] = i;
        break;
      }
      p = e;
    }
  }
  int loops = 0;
  for (int p = 0; p < total_; ++p) {
    if (seen[p]) continue;
    ++loops;
    int cur = p;
    do {
      seen[cur] = 1;
      int q = internal[cur];
      seen[q] = 1;
      cur = ext[q];
    } while (cur != p);
  }
  if (!is_noncrossing(m)) throw GluingError("tangle resolves to a crossing matching");
  return GlueResult{TLDiagram::unchecked(out, std::move(m)), loops};
}

GlueResult glue_partial(const TLDiagram& x, const TLDiagram& y, int i, int j) {
  const BoxShape& a = x.shape();
  const BoxShape& b = y.shape();
  if (a.right != b.left) throw GluingError("side counts differ");
  if (i < 0 || j < 0 || i > a.top || i > b.top || j > a.bottom || j > b.bottom)
    throw GluingError("partial gluing count out of range");
  Tangle t;
  int px = t.add(x), py = t.add(y);
  for (int r = 0; r < a.right; ++r) t.wire(t.at(px, Side::Right, r), t.at(py, Side::Left, r));
  for (int m = 0; m < i; ++m) t.wire(t.at(px, Side::Top, a.top - 1 - m), t.at(py, Side::Top, m));
  for (int m = 0; m < j; ++m)
    t.wire(t.at(px, Side::Bottom, a.bottom - 1 - m), t.at(py, Side::Bottom, m));
  BoxShape out(a.left, b.right, a.top + b.top - 2 * i, a.bottom + b.bottom - 2 * j, a.shading);
  Boundary bd(out);
  int pos = 0;
  for (int p = 0; p < a.top - i; ++p) bd.set(Side::Top, pos++, t.at(px, Side::Top, p));
  for (int p = i; p < b.top; ++p) bd.set(Side::Top, pos++, t.at(py, Side::Top, p));
  pos = 0;
  for (int p = 0; p < a.bottom - j; ++p) bd.set(Side::Bottom, pos++, t.at(px, Side::Bottom, p));
  for (int p = j; p < b.bottom; ++p) bd.set(Side::Bottom, pos++, t.at(py, Side::Bottom, p));
  for (int r = 0; r < a.left; ++r) bd.set(Side::Left, r, t.at(px, Side::Left, r));
  for (int r = 0; r < b.right; ++r) bd.set(Side::Right, r, t.at(py, Side::Right, r));
  return resolve(t, bd);
}

GlueResult glue_horizontal(const TLDiagram& x, const TLDiagram& y) { return glue_partial(x, y, 0, 0); }

GlueResult trace_close(const TLDiagram& x) {
  const BoxShape& a = x.shape();
  if (a.left != a.right) throw GluingError("trace closure needs equal side counts");
  Tangle t;
  int px = t.add(x);
  for (int r = 0; r < a.left; ++r) t.wire(t.at(px, Side::Left, r), t.at(px, Side::Right, r));
  BoxShape out(0, 0, a.top, a.bottom, a.shading);
  Boundary bd(out);
  for (int p = 0; p < a.top; ++p) bd.set(Side::Top, p, t.at(px, Side::Top, p));
  for (int p = 0; p < a.bottom; ++p) bd.set(Side::Bottom, p, t.at(px, Side::Bottom, p));
  return resolve(t, bd);
}

GlueResult stack_top(const TLDiagram& a, const TLDiagram& x) {
  const BoxShape& sa = a.shape();
  const BoxShape& sx = x.shape();
  if (sa.left != 0 || sa.right != 0) throw GluingError("stacked diagram has side points");
  if (sa.bottom != sx.top) throw GluingError("boundary count mismatch in vertical stacking");
  Tangle t;
  int pa = t.add(a), px = t.add(x);
  for (int p = 0; p < sx.top; ++p) t.wire(t.at(pa, Side::Bottom, p), t.at(px, Side::Top, p));
  BoxShape out(sx.left, sx.right, sa.top, sx.bottom, sx.shading);
  Boundary bd(out);
  for (int p = 0; p < sa.top; ++p) bd.set(Side::Top, p, t.at(pa, Side::Top, p));
  for (int p = 0; p < sx.bottom; ++p) bd.set(Side::Bottom, p, t.at(px, Side::Bottom, p));
  for (int r = 0; r < sx.left; ++r) bd.set(Side::Left, r, t.at(px, Side::Left, r));
  for (int r = 0; r < sx.right; ++r) bd.set(Side::Right, r, t.at(px, Side::Right, r));
  return resolve(t, bd);
}

GlueResult stack_bottom(const TLDiagram& x, const TLDiagram& b) {
  const BoxShape& sb = b.shape();
  const BoxShape& sx = x.shape();
  if (sb.left != 0 || sb.right != 0) throw GluingError("stacked diagram has side points");
  if (sb.top != sx.bottom) throw GluingError("boundary count mismatch in vertical stacking");
  Tangle t;
  int px = t.add(x), pb = t.add(b);
  for (int p = 0; p < sx.bottom; ++p) t.wire(t.at(px, Side::Bottom, p), t.at(pb, Side::Top, p));
  BoxShape out(sx.left, sx.right, sx.top, sb.bottom, sx.shading);
  Boundary bd(out);
  for (int p = 0; p < sx.top; ++p) bd.set(Side::Top, p, t.at(px, Side::Top, p));
  for (int p = 0; p < sb.bottom; ++p) bd.set(Side::Bottom, p, t.at(pb, Side::Bottom, p));
  for (int r = 0; r < sx.left; ++r) bd.set(Side::Left, r, t.at(px, Side::Left, r));
  for (int r = 0; r < sx.right; ++r) bd.set(Side::Right, r, t.at(px, Side::Right, r));
  return resolve(t, bd);
}

int count_cycles(const Matching& a, const Matching& b) {
  const int n = static_cast<int>(a.size());
  std::vector<char> seen(n, 0);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    int cur = i;
    do {
      seen[cur] = 1;
      int q = a[cur];
      seen[q] = 1;
      cur = b[q];
    } while (cur != i);
  }
  return cycles;
}

}  // namespace tlenv
