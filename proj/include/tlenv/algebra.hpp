#pragma once

#include <utility>

#include "tlenv/element.hpp"
#include "tlenv/tangle.hpp"

namespace tlenv {

// True when x's right side can meet y's left side.
bool composable(const BoxShape& x, const BoxShape& y);

// Horizontal product; incompatible pairs of terms contribute zero.
GradedElement v_product(const GradedElement& x, const GradedElement& y);

// Grade (k, shading) of a nonzero element of Gr_k; throws otherwise.
std::pair<int, Shading> gr_grade(const GradedElement& x);
// Product in Gr_k; both factors must share k and shading.
GradedElement gr_product(const GradedElement& x, const GradedElement& y);
// Gr_k -> Gr_{k+1}: one extra string along the bottom.
GradedElement gr_include(const GradedElement& x);

// Closure of left against right, then the sum over all non-crossing
// cappings of the top and of the bottom.
Poly diagram_trace(const TLDiagram& d);
Scalar v_trace(const GradedElement& x);
// d^{-k} Tr on Gr_k.
Scalar voiculescu_trace(const GradedElement& x);
// d^{-2k} Tr on V_{2k,2k}(2n,2m).
Scalar boxtimes_trace(const GradedElement& x);
// d^{-left} Tr on cells with equal side counts.
Scalar normalized_trace(const GradedElement& x);

// Sum over partial gluings of the top and bottom strings.
GradedElement w_product(const GradedElement& x, const GradedElement& y);
// Left-right closure of cells with no top or bottom points.
Scalar w_trace(const GradedElement& x);

// Mirror image, coefficients unchanged.
GradedElement dagger(const GradedElement& x);
GradedElement transpose(const GradedElement& x);

// a stacked above, b below.  a: top s' bottom s, b: top t bottom t'.
GradedElement tl_action(const TLDiagram& a, const TLDiagram& b, const GradedElement& x);

// x on top, y rotated a half turn below.  Both in Gr_k with equal shading.
TLDiagram embed_tensor(const TLDiagram& x, const TLDiagram& y);
GradedElement embed_tensor(const GradedElement& x, const GradedElement& y);
// Half-turn rotation of square cells.
GradedElement op_map(const GradedElement& y);

// Diagram from explicit pairs of side positions.
struct SidePoint {
  Side side;
  int pos;
};
TLDiagram make_diagram(const BoxShape& shape,
                       const std::vector<std::pair<SidePoint, SidePoint>>& strands);

namespace standard {

// k straight strings from left to right.
TLDiagram unit(int k, Shading s = Shading::Plus);
GradedElement unit_element(int k, Shading s = Shading::Plus);
// Jones projection on m strings: positions i and i+1 capped on both sides.
TLDiagram jones_e(int m, int i, Shading s = Shading::Plus);
// e_k in V_{k+2,k+2}(0,0): k straight strings above a capped pair.
GradedElement cupcap_e(int k, Shading s = Shading::Plus, bool normalized = true);
// d^{-1} times the middle cap on 2k strings.
GradedElement f_element(int k, Shading s = Shading::Plus);
// c_k in V_{2k,2k+2}(1,1).
TLDiagram c_diagram(int k, Shading s = Shading::Plus);
GradedElement c_element(int k, Shading s = Shading::Plus);
GradedElement p_element(int k, Shading s = Shading::Plus);
// Two vertical strings in V_{0,0}(2,2).
TLDiagram vertical_bars();
// n nested caps on 2n top points in Gr_0.
TLDiagram rainbow(int n);
// n adjacent caps on 2n top points in Gr_0.
TLDiagram cups(int n);
// Empty diagram: unit of Gr_0.
TLDiagram empty();

}  // namespace standard

}  // namespace tlenv
