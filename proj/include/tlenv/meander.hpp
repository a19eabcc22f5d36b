#pragma once

#include <cstdint>
#include <vector>

#include "tlenv/scalar.hpp"

namespace tlenv {

inline constexpr int kMaxMeanderOrder = 8;

struct MeanderCount {
  int order = 0;
  // counts[k - 1] = number of systems with k components, k = 1..order.
  std::vector<std::uint64_t> counts;
  std::uint64_t total() const;
};

// All (upper, lower) pairs of non-crossing matchings on 2n points.
// Throws PreconditionError unless 1 <= n <= kMaxMeanderOrder.
MeanderCount enumerate_meanders(int n);
// sum_k M_n^(k) q^k.
Poly meander_polynomial(int n);
Poly meander_polynomial(const MeanderCount& m);
// Boxtimes trace of the n-th power of the vertical bars.
Scalar trace_moment(int n);

}  // namespace tlenv
