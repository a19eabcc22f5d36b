#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "tlenv/errors.hpp"
#include "tlenv/meander.hpp"

using namespace tlenv;

namespace {

// Walks each loop of up ∪ down.
std::vector<std::uint64_t> oracle_counts(int n) {
  std::vector<std::uint64_t> out(n, 0);
  auto nc = oracle::all_noncrossing(2 * n);
  for (const auto& up : nc)
    for (const auto& down : nc) {
      std::vector<bool> seen(2 * n, false);
      int loops = 0;
      for (int s = 0; s < 2 * n; ++s) {
        if (seen[s]) continue;
        ++loops;
        int p = s;
        do {
          seen[p] = true;
          p = up[p];
          seen[p] = true;
          p = down[p];
        } while (p != s);
      }
      ++out[loops - 1];
    }
  return out;
}

}  // namespace

TEST(Meander, SmallOrders) {
  EXPECT_EQ(enumerate_meanders(1).counts, (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(enumerate_meanders(2).counts, (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(enumerate_meanders(3).total(), 25u);
  EXPECT_EQ(meander_polynomial(1).to_string('q'), "q");
  EXPECT_EQ(meander_polynomial(2).to_string('q'), "2*q + 2*q^2");
}

TEST(Meander, AgreesWithLoopWalk) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_meanders(n).counts, oracle_counts(n)) << n;
}

TEST(Meander, ClosedMeanders) {
  const std::uint64_t closed[] = {1, 2, 8, 42, 262, 1828, 13820, 110954};
  for (int n = 1; n <= 8; ++n) {
    MeanderCount m = enumerate_meanders(n);
    EXPECT_EQ(m.counts[0], closed[n - 1]);
    EXPECT_EQ(m.counts[n - 1], catalan(n));
    std::uint64_t c = catalan(n);
    EXPECT_EQ(m.total(), c * c);
  }
}

TEST(Meander, TraceMoment) {
  EXPECT_EQ(trace_moment(1), Scalar::delta());
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(trace_moment(n), Scalar(meander_polynomial(n))) << n;
}

TEST(Meander, Bounds) {
  EXPECT_THROW(enumerate_meanders(0), PreconditionError);
  EXPECT_THROW(enumerate_meanders(9), PreconditionError);
}
