// test_rng.cpp — counter-based stream determinism and derivation

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "pdc/experiments.hpp"
#include "pdc/rng.hpp"

using pdc::RandomStream;

TEST_CASE("same seed replays the same sequence") {
  RandomStream a = RandomStream::from_seed(42);
  RandomStream b = RandomStream::from_seed(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("copying a stream copies its position") {
  RandomStream a = RandomStream::from_seed(7);
  a.next_u64();
  a.next_u64();
  RandomStream b = a;
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("derive does not advance the parent") {
  RandomStream a = RandomStream::from_seed(3);
  RandomStream b = RandomStream::from_seed(3);
  (void)a.derive("child");
  (void)a.derive(std::uint64_t{12});
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct labels give distinct children") {
  RandomStream root = RandomStream::from_seed(1);
  std::set<std::uint64_t> keys;
  for (std::uint64_t i = 0; i < 1000; ++i) keys.insert(root.derive(i).key());
  keys.insert(root.derive("planted").key());
  keys.insert(root.derive("null").key());
  CHECK(keys.size() == 1002);
}

TEST_CASE("next_unit lies in [0,1)") {
  RandomStream a = RandomStream::from_seed(9);
  for (int i = 0; i < 10000; ++i) {
    const double u = a.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("next_below stays in range and covers all residues") {
  RandomStream a = RandomStream::from_seed(11);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const std::uint64_t v = a.next_below(7);
    REQUIRE(v < 7);
    ++hits[static_cast<std::size_t>(v)];
  }
  // each residue expected 10000 +- 4*sqrt(10000*6/7) ~ 370
  for (int h : hits) {
    CHECK(h > 10000 - 400);
    CHECK(h < 10000 + 400);
  }
}

TEST_CASE("derive_stream: identical inputs replay identically") {
  RandomStream a = pdc::derive_stream(5, "detect", std::uint64_t{3}, "planted");
  RandomStream b = pdc::derive_stream(5, "detect", std::uint64_t{3}, "planted");
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("derive_stream: differing trial index diverges") {
  RandomStream a = pdc::derive_stream(5, "detect", std::uint64_t{3});
  RandomStream b = pdc::derive_stream(5, "detect", std::uint64_t{4});
  int agree = 0;
  for (int i = 0; i < 10000; ++i) {
    if (a.next_u64() == b.next_u64()) ++agree;
  }
  CHECK(agree == 0);
}

TEST_CASE("derive_stream: paired arms behave independently") {
  RandomStream a = pdc::derive_stream(5, "detect", std::uint64_t{3}, "P");
  RandomStream b = pdc::derive_stream(5, "detect", std::uint64_t{3}, "Q");
  const int N = 10000;
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (int i = 0; i < N; ++i) {
    const double x = a.next_unit(), y = b.next_unit();
    sx += x;
    sy += y;
    sxx += x * x;
    syy += y * y;
    sxy += x * y;
  }
  const double n = N;
  const double corr = (sxy - sx * sy / n) /
                      std::sqrt((sxx - sx * sx / n) * (syy - sy * sy / n));
  CHECK(std::fabs(corr) < 4.0 / std::sqrt(n));
}
