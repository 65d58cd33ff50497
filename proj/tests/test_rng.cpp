#include "doctest.h"

#include <cmath>
#include <set>

#include "critlab/rng.hpp"

using critlab::RngStream;

TEST_CASE("identical seed and stream reproduce the sequence") {
  RngStream a(42, 7);
  RngStream b(42, 7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.next_u64() == b.next_u64());
    CHECK(a.normal() == b.normal());
  }
}

TEST_CASE("different streams diverge") {
  RngStream a(42, 7);
  RngStream b(42, 8);
  RngStream c(43, 7);
  CHECK(a.next_u64() != b.next_u64());
  RngStream a2(42, 7);
  CHECK(a2.next_u64() != c.next_u64());
}

TEST_CASE("substream does not advance the parent") {
  RngStream a(1, 2);
  RngStream b(1, 2);
  RngStream sub = a.substream(99);
  (void)sub.next_u64();
  CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("uniform lies in [0, 1) and normal has unit variance") {
  RngStream rng(2024, 1);
  const int n = 100000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
  for (int i = 0; i < n; ++i) {
    const double g = rng.normal();
    sum += g;
    sum_sq += g * g;
  }
  // 5 sigma windows: sd(mean) = 1/sqrt(n), sd(var) ~ sqrt(2/n)
  CHECK(std::abs(sum / n) < 5.0 / std::sqrt(n));
  CHECK(std::abs(sum_sq / n - 1.0) < 5.0 * std::sqrt(2.0 / n));
}

TEST_CASE("mix_stream separates nearby index pairs") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 50; ++i)
    for (std::uint64_t j = 0; j < 50; ++j) seen.insert(critlab::mix_stream(i, j));
  CHECK(seen.size() == 2500);
}
