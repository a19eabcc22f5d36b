#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace tlenv {

enum class Shading : int { Plus = 1, Minus = -1 };

inline Shading flip(Shading s) { return s == Shading::Plus ? Shading::Minus : Shading::Plus; }
// (-1)^n * s
inline Shading flip_if_odd(Shading s, int n) { return (n & 1) ? flip(s) : s; }
inline char shading_char(Shading s) { return s == Shading::Plus ? '+' : '-'; }

enum class Side { Top, Right, Bottom, Left };

// Rectangle with boundary points on each side and the shading of the
// region at the marked top-left corner.  Boundary points are numbered
// clockwise from the marked corner: top left to right, right top to
// bottom, bottom right to left, left bottom to top.
struct BoxShape {
  int left = 0;
  int right = 0;
  int top = 0;
  int bottom = 0;
  Shading shading = Shading::Plus;

  BoxShape() = default;
  BoxShape(int l, int r, int t, int b, Shading s = Shading::Plus)
      : left(l), right(r), top(t), bottom(b), shading(s) {}

  int size() const { return left + right + top + bottom; }
  int count(Side side) const;
  // Clockwise index of the point at position pos along a side, positions
  // read left to right on horizontal sides and top to bottom on vertical ones.
  int index(Side side, int pos) const;
  std::pair<Side, int> locate(int index) const;
  // Throws ShapeError on negative counts or an odd total.
  void validate() const;

  std::string to_string() const;
  auto operator<=>(const BoxShape&) const = default;
};

using Matching = std::vector<int>;

// A Temperley-Lieb diagram: a non-crossing perfect matching of the
// boundary points of a box.
class TLDiagram {
 public:
  TLDiagram() = default;
  // Validates: perfect matching, involution, non-crossing.
  TLDiagram(const BoxShape& shape, Matching partner);
  static TLDiagram from_pairs(const BoxShape& shape, const std::vector<std::pair<int, int>>& pairs);
  static TLDiagram unchecked(const BoxShape& shape, Matching partner);

  const BoxShape& shape() const { return shape_; }
  const Matching& partner() const { return partner_; }
  int partner(int i) const { return partner_[i]; }
  int size() const { return static_cast<int>(partner_.size()); }
  int at(Side side, int pos) const { return partner_[shape_.index(side, pos)]; }
  std::vector<std::pair<int, int>> pairs() const;
  TLDiagram with_shading(Shading s) const;

  // Shape fields followed by the matching.
  std::vector<int> encode() const;
  std::string to_string() const;

  auto operator<=>(const TLDiagram&) const = default;
  bool operator==(const TLDiagram&) const = default;

 private:
  BoxShape shape_;
  Matching partner_;
};

struct TLDiagramHash {
  std::size_t operator()(const TLDiagram& d) const;
};

bool is_noncrossing(const Matching& m);

// All non-crossing perfect matchings on n points, lexicographic in the
// partner array.  Cached and shared between threads.
std::shared_ptr<const std::vector<Matching>> noncrossing_matchings(int n);
std::vector<TLDiagram> enumerate_matchings(const BoxShape& shape);
std::size_t catalan(int n);

struct Classification {
  bool epi = false;
  bool monic = false;
  bool nonnested_epi = false;
  bool nonnested_monic = false;
};

// For diagrams without side points.
Classification classify(const TLDiagram& d);
int through_strings(const TLDiagram& d);

// Left-right mirror image.
TLDiagram dagger_reflect(const TLDiagram& d);
// Top-bottom mirror image.
TLDiagram transpose(const TLDiagram& d);
// Rotation by a half turn.
TLDiagram rotate_pi(const TLDiagram& d);
// Apply a point map old index -> new index onto a new shape.
TLDiagram relabel(const TLDiagram& d, const BoxShape& shape, const std::vector<int>& map);

}  // namespace tlenv
