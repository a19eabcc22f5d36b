#pragma once

// Independent reference implementations used only by tests.  Gluing is
// done with a union-find over explicitly numbered strand ends instead of
// the library's path walk; matchings are enumerated by brute force.

#include <gmpxx.h>

#include <random>
#include <utility>
#include <vector>

#include "tlenv/algebra.hpp"

namespace oracle {

using tlenv::BoxShape;
using tlenv::Matching;
using tlenv::Poly;
using tlenv::Scalar;
using tlenv::Side;
using tlenv::TLDiagram;

std::vector<std::pair<Side, int>> clockwise(const BoxShape& s);
int index_of(const BoxShape& s, Side side, int pos);

bool pairwise_noncrossing(const Matching& m);
std::vector<Matching> all_perfect_matchings(int n);
std::vector<Matching> all_noncrossing(int n);

// Union-find network of diagram pieces.
class Net {
 public:
  int add(const TLDiagram& d);
  void join(int pa, Side sa, int a, int pb, Side sb, int b);
  void expose(Side out_side, int out_pos, int piece, Side side, int pos);
  // Outer matching and number of closed components.
  std::pair<Matching, int> resolve(const BoxShape& out);

 private:
  int find(int x);
  void unite(int a, int b);
  int id(int piece, Side side, int pos) const;

  std::vector<TLDiagram> pieces_;
  std::vector<int> base_;
  std::vector<int> parent_;
  std::vector<std::tuple<Side, int, int>> exposed_;  // out side, out pos, flat id
};

tlenv::GlueResult horizontal(const TLDiagram& x, const TLDiagram& y);
tlenv::GlueResult partial(const TLDiagram& x, const TLDiagram& y, int i, int j);
Poly trace(const TLDiagram& d);

mpq_class eval(const Poly& p, const mpq_class& x);
// Exact value at a rational point; false at a pole.
bool eval(const Scalar& s, const mpq_class& x, mpq_class& out);
// Agreement at a fixed set of rational points.
bool same_function(const Scalar& a, const Scalar& b);

// Random element helpers.
TLDiagram random_diagram(const BoxShape& s, std::mt19937_64& rng);
BoxShape random_shape(int max_points, std::mt19937_64& rng, bool allow_odd_sides = true);
int uniform(std::mt19937_64& rng, int lo, int hi);

}  // namespace oracle
