#pragma once

#include <vector>

#include "tlenv/diagram.hpp"

namespace tlenv {

struct Port {
  int piece = -1;
  int point = -1;
};

struct GlueResult {
  TLDiagram diagram;
  int loops = 0;
};

// A planar tangle built from diagram pieces, internal wires between piece
// points, and an outer boundary whose points attach to piece points.
// Resolving it yields the outer matching and the number of closed loops.
class Tangle {
 public:
  int add(const TLDiagram& d);
  // A plain strand with points 0 and 1.
  int add_string();
  Port at(int piece, Side side, int pos) const;
  void wire(Port a, Port b);

  // boundary[i] is the piece point attached to outer point i (clockwise).
  // Throws GluingError on dangling or doubly used points and on a crossing result.
  GlueResult close(const BoxShape& out, const std::vector<Port>& boundary) const;

 private:
  int flat(Port p) const;

  std::vector<TLDiagram> pieces_;
  std::vector<int> offset_;
  std::vector<std::pair<Port, Port>> wires_;
  int total_ = 0;
};

// Collects outer boundary attachments by side position.
class Boundary {
 public:
  explicit Boundary(const BoxShape& shape) : shape_(shape), ports_(shape.size()) {}
  void set(Side side, int pos, Port p) { ports_[shape_.index(side, pos)] = p; }
  const BoxShape& shape() const { return shape_; }
  const std::vector<Port>& ports() const { return ports_; }

 private:
  BoxShape shape_;
  std::vector<Port> ports_;
};

inline GlueResult resolve(const Tangle& t, const Boundary& b) { return t.close(b.shape(), b.ports()); }

// x's right side against y's left side; the result keeps x's shading.
GlueResult glue_horizontal(const TLDiagram& x, const TLDiagram& y);
// Horizontal gluing that also joins x's last i top points to y's first i
// (nested) and likewise j bottom points.
GlueResult glue_partial(const TLDiagram& x, const TLDiagram& y, int i, int j);
// Join each left point to the right point at the same height.
GlueResult trace_close(const TLDiagram& x);
// a stacked on x: a's bottom meets x's top.
GlueResult stack_top(const TLDiagram& a, const TLDiagram& x);
// b stacked below x: x's bottom meets b's top.
GlueResult stack_bottom(const TLDiagram& x, const TLDiagram& b);

// Number of closed loops formed by two matchings on the same points.
int count_cycles(const Matching& a, const Matching& b);

}  // namespace tlenv
