#include "tlenv/meander.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "tlenv/algebra.hpp"
#include "tlenv/diagram.hpp"
#include "tlenv/errors.hpp"

namespace tlenv {

std::uint64_t MeanderCount::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

int components(const Matching& up, const Matching& down) {
  const int m = static_cast<int>(up.size());
  UnionFind uf(m);
  int comps = m;
  for (int i = 0; i < m; ++i) {
    if (up[i] > i && uf.unite(i, up[i])) --comps;
    if (down[i] > i && uf.unite(i, down[i])) --comps;
  }
  return comps;
}

}  // namespace

MeanderCount enumerate_meanders(int n) {
  if (n < 1 || n > kMaxMeanderOrder)
    throw PreconditionError("meander order must lie in 1.." + std::to_string(kMaxMeanderOrder));
  auto nc = noncrossing_matchings(2 * n);
  const std::size_t rows = nc->size();
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), rows));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n, 0));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < rows; i += workers)
        for (const auto& down : *nc) ++partial[w][components((*nc)[i], down) - 1];
    });
  for (auto& t : pool) t.join();
  MeanderCount out{n, std::vector<std::uint64_t>(n, 0)};
  for (const auto& p : partial)
    for (int k = 0; k < n; ++k) out.counts[k] += p[k];
  return out;
}

Poly meander_polynomial(const MeanderCount& m) {
  std::vector<mpz_class> c(m.order + 1);
  for (int k = 0; k < m.order; ++k) c[k + 1] = mpz_class(std::to_string(m.counts[k]));
  return Poly(std::move(c));
}

Poly meander_polynomial(int n) { return meander_polynomial(enumerate_meanders(n)); }

Scalar trace_moment(int n) {
  if (n < 1) throw PreconditionError("moment order must be positive");
  GradedElement bars = GradedElement::basis(standard::vertical_bars());
  GradedElement power = bars;
  for (int i = 1; i < n; ++i) power = v_product(power, bars);
  return boxtimes_trace(power);
}

}  // namespace tlenv
