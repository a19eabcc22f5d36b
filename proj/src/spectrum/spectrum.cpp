#include "tlenv/spectrum.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <set>

#include "tlenv/errors.hpp"

namespace tlenv {

int PrincipalGraph::find(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return static_cast<int>(i);
  return -1;
}

void PrincipalGraph::validate() const {
  const int n = static_cast<int>(vertices.size());
  if (n == 0) throw GraphError("graph has no vertices");
  if (star < 0 || star >= n) throw GraphError("star is not a vertex");
  if (!vertices[star].even) throw GraphError("star must be even");
  std::set<std::string> ids;
  for (const auto& v : vertices)
    if (!ids.insert(v.id).second) throw GraphError("duplicate vertex id " + v.id);
  std::set<std::pair<int, int>> seen;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw GraphError("edge endpoint out of range");
    if (a == b) throw GraphError("self loop at " + vertices[a].id);
    if (vertices[a].even == vertices[b].even)
      throw GraphError("edge " + vertices[a].id + "-" + vertices[b].id + " joins vertices of equal parity");
    if (!seen.insert(std::minmax(a, b)).second)
      throw GraphError("repeated edge " + vertices[a].id + "-" + vertices[b].id);
    int ra = root(a), rb = root(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  if (comps != 1) throw GraphError("graph is not connected");
  if (edges.empty()) throw GraphError("graph has no edges");
}

PrincipalGraph path_graph(int n) {
  PrincipalGraph g;
  for (int i = 0; i < n; ++i) g.vertices.push_back({i == 0 ? "*" : "v" + std::to_string(i), i % 2 == 0});
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

PFData pf_dimensions(const PrincipalGraph& g) {
  g.validate();
  const int n = static_cast<int>(g.vertices.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges) a(u, v) = a(v, u) = 1.0;
  Eigen::MatrixXd shifted = a + Eigen::MatrixXd::Identity(n, n);

  Eigen::VectorXd v = Eigen::VectorXd::Ones(n).normalized();
  double lambda = 0;
  bool converged = false;
  for (int it = 0; it < 1000000; ++it) {
    Eigen::VectorXd w = shifted * v;
    w.normalize();
    double change = (w - v).lpNorm<Eigen::Infinity>();
    v = w;
    if (change < 1e-15 || (it % 64 == 0 && (a * v - v.dot(a * v) * v).lpNorm<Eigen::Infinity>() < 1e-14)) {
      converged = true;
      break;
    }
  }
  if (!converged) throw GraphError("power iteration did not converge");
  lambda = v.dot(a * v);
  if (lambda <= 1e-12) throw GraphError("degenerate graph: largest eigenvalue is zero");

  PFData out;
  out.delta = lambda;
  Eigen::VectorXd dims = v / v(g.star);
  out.dims.assign(dims.data(), dims.data() + n);
  out.residual = (a * dims - lambda * dims).lpNorm<Eigen::Infinity>();
  for (double d : out.dims)
    if (!(d > 0)) throw GraphError("Perron-Frobenius vector is not positive");
  if (g.delta && std::abs(*g.delta - lambda) > 1e-9)
    throw GraphError("supplied delta " + std::to_string(*g.delta) + " differs from graph norm " +
                     std::to_string(lambda));
  return out;
}

IndexValue global_index(const PrincipalGraph& g, const PFData& pf) {
  if (g.infinite) return {true, std::numeric_limits<double>::infinity()};
  double sum = 0;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (g.vertices[i].even) sum += pf.dims[i] * pf.dims[i];
  return {false, sum};
}

IndexValue global_index(const PrincipalGraph& g) { return global_index(g, pf_dimensions(g)); }

double r_parameter(int k, double delta, double index) {
  if (!(delta > 1)) throw PreconditionError("r_k requires delta > 1");
  if (!(index > 0) || std::isinf(index)) throw PreconditionError("r_k requires a finite positive index");
  if (k < 0) throw PreconditionError("level must be nonnegative");
  return 1 + 2 * std::pow(delta, -2 * k) * index * (delta - 1);
}

double phi_omega_balance(double delta, double index) { return 2 * delta * index - (2 * index - 1); }

}  // namespace tlenv
