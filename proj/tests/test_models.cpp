// test_models.cpp — parameter derivation and the planted/null samplers

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "pdc/errors.hpp"
#include "pdc/models.hpp"

using namespace pdc;

TEST_CASE("derived parameters match hand-computed values") {
  const ModelParams m = make_params(12, 0.9, 0.3, 0.1);
  CHECK(m.r == doctest::Approx(0.36).epsilon(1e-15));
  CHECK(m.mu == doctest::Approx(1.125).epsilon(1e-15));
  CHECK(m.lambda == doctest::Approx(1.3093073414159544).epsilon(1e-15));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make_params(0, 0.9, 0.3, 0.1), ValidationError);
  CHECK_THROWS_AS(make_params(10, 0.3, 0.3, 0.1), ValidationError);
  CHECK_THROWS_AS(make_params(10, 0.2, 0.3, 0.1), ValidationError);
  CHECK_THROWS_AS(make_params(10, 1.1, 0.3, 0.1), ValidationError);
  CHECK_THROWS_AS(make_params(10, 0.9, 0.0, 0.1), ValidationError);
  CHECK_THROWS_AS(make_params(10, 1.0, 1.0, 0.1), ValidationError);
  CHECK_THROWS_AS(make_params(10, 0.9, 0.3, -0.01), ValidationError);
  CHECK_THROWS_AS(make_params(10, 0.9, 0.3, 0.51), ValidationError);
  CHECK_NOTHROW(make_params(10, 1.0, 0.5, 0.5));
  CHECK_NOTHROW(make_params(1, 0.9, 0.3, 0.0));
}

TEST_CASE("same stream replays the same planted sample") {
  const ModelParams m = make_params(60, 0.8, 0.3, 0.2);
  RandomStream a = RandomStream::from_seed(5);
  RandomStream b = RandomStream::from_seed(5);
  const PlantedSample sa = sample_planted(m, a);
  const PlantedSample sb = sample_planted(m, b);
  CHECK(sa.graph == sb.graph);
  CHECK(sa.latents.z == sb.latents.z);
}

TEST_CASE("noiseless boundary reproduces the geometric graph exactly") {
  RandomStream rng = RandomStream::from_seed(8);
  const LatentAssignment z = sample_latents(80, rng);
  const Graph g = sample_edges_given_latents(z, 1.0, 0.0, 0.2, rng);
  CHECK(g == geometric_graph(z, 0.2));
}

TEST_CASE("edge frequencies given latents match p inside and q outside") {
  const ModelParams m = make_params(2, 0.8, 0.3, 0.25);
  LatentAssignment z;
  z.z = {0.0, 0.1};  // inside the window (0.1 <= tau/2 = 0.125)
  RandomStream rng = RandomStream::from_seed(13);
  const int trials = 20000;
  int in_hits = 0, out_hits = 0;
  LatentAssignment zout;
  zout.z = {0.0, 0.4};  // outside
  for (int t = 0; t < trials; ++t) {
    if (sample_edges_given_latents(z, m.p, m.q, m.tau, rng).has_edge(0, 1)) ++in_hits;
    if (sample_edges_given_latents(zout, m.p, m.q, m.tau, rng).has_edge(0, 1)) ++out_hits;
  }
  const double n = trials;
  const double se_p = std::sqrt(0.8 * 0.2 / n), se_q = std::sqrt(0.3 * 0.7 / n);
  CHECK(std::fabs(in_hits / n - 0.8) < 5 * se_p);
  CHECK(std::fabs(out_hits / n - 0.3) < 5 * se_q);
}

TEST_CASE("planted and null marginal densities both equal r") {
  const ModelParams m = make_params(100, 0.9, 0.2, 0.3);
  RandomStream rng = RandomStream::from_seed(21);
  const int trials = 60;
  const double pairs = 100.0 * 99.0 / 2.0;
  double planted_edges = 0.0, null_edges = 0.0;
  for (int t = 0; t < trials; ++t) {
    planted_edges += static_cast<double>(sample_planted(m, rng).graph.edge_count());
    null_edges += static_cast<double>(sample_null(m, rng).edge_count());
  }
  const double total = pairs * trials;
  // pairwise covariance between edge indicators vanishes (window events for
  // pairs sharing a vertex are independent), so the binomial error is exact
  const double se = std::sqrt(m.r * (1 - m.r) / total);
  CHECK(std::fabs(planted_edges / total - m.r) < 5 * se);
  CHECK(std::fabs(null_edges / total - m.r) < 5 * se);
}

TEST_CASE("raw-probability sampler validates its inputs") {
  LatentAssignment z;
  z.z = {0.0, 0.1};
  RandomStream rng = RandomStream::from_seed(1);
  CHECK_THROWS_AS(sample_edges_given_latents(z, 0.5, 0.6, 0.2, rng), ValidationError);
  CHECK_THROWS_AS(sample_edges_given_latents(z, 1.2, 0.5, 0.2, rng), ValidationError);
  CHECK_THROWS_AS(sample_edges_given_latents(z, 0.5, -0.1, 0.2, rng), ValidationError);
}
