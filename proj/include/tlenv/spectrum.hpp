#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tlenv {

struct GraphVertex {
  std::string id;
  bool even = true;
};

// Pointed bipartite graph.  Infinite-depth graphs are given by a
// truncation together with infinite = true.
struct PrincipalGraph {
  std::vector<GraphVertex> vertices;
  std::vector<std::pair<int, int>> edges;
  int star = 0;
  bool infinite = false;
  std::optional<double> delta;

  int find(const std::string& id) const;  // -1 if absent
  // Throws GraphError unless connected, bipartite, star even, no loops or
  // repeated edges.
  void validate() const;
};

// A path * - v1 - ... with n vertices, alternating parity from even.
PrincipalGraph path_graph(int n);

struct PFData {
  double delta = 0;
  std::vector<double> dims;  // dims[star] == 1
  double residual = 0;       // max |A dims - delta dims|
};

// Power iteration on A + 1.  Throws GraphError on invalid or degenerate
// graphs and when a supplied delta disagrees by more than 1e-9.
PFData pf_dimensions(const PrincipalGraph& g);

struct IndexValue {
  bool infinite = false;
  double value = 0;
};

// Sum of squared dimensions over the even vertices.
IndexValue global_index(const PrincipalGraph& g, const PFData& pf);
IndexValue global_index(const PrincipalGraph& g);

// 1 + 2 d^{-2k} I (d - 1); requires d > 1 and I > 0.
double r_parameter(int k, double delta, double index);
// 2 d I - (2I - 1), the dimension count that should reproduce r_0.
double phi_omega_balance(double delta, double index);

}  // namespace tlenv
