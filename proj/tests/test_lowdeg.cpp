// test_lowdeg.cpp — signed-moment estimates, window-mask probabilities, the
// correlation recursion, and the degree-capped advantage

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <string>

#include "pdc/edge_subset.hpp"
#include "pdc/errors.hpp"
#include "pdc/geometry.hpp"
#include "pdc/lowdeg.hpp"
#include "pdc/models.hpp"
#include "pdc/rng.hpp"
#include "pdc/shapes.hpp"

using namespace pdc;

namespace {

RandomStream stream(std::uint64_t k) { return RandomStream::from_seed(424242).derive("lowdeg").derive(k); }

const EdgeSubset kTriangle({{0, 1}, {0, 2}, {1, 2}});
const EdgeSubset kWedge({{0, 1}, {0, 2}});
const EdgeSubset kC4({{0, 1}, {1, 2}, {2, 3}, {0, 3}});

bool within_4se(const McEstimate& e, double target) {
  return std::abs(e.mean - target) <= 4.0 * e.std_error;
}

}  // namespace

TEST_CASE("eta counts the close edges") {
  LatentAssignment z;
  z.z = {0.0, 0.03, 0.5, 0.96};
  const EdgeSubset alpha({{0, 1}, {0, 3}, {0, 2}, {1, 2}});
  CHECK(eta(z, alpha, 0.1) == 2);  // (0,1) at 0.03 and (0,3) at 0.04
  CHECK(eta(z, alpha, 0.05) == 0);
  CHECK(eta(z, EdgeSubset(), 0.1) == 0);
  CHECK_THROWS_AS(eta(z, alpha, 0.6), ValidationError);
  CHECK_THROWS_AS(eta(z, alpha, -0.1), ValidationError);
  LatentAssignment small;
  small.z = {0.0, 0.1};
  CHECK_THROWS_AS(eta(small, alpha, 0.1), ValidationError);
}

TEST_CASE("signed-moment estimator handles the exact cases without sampling") {
  const ModelParams m = make_params(50, 0.9, 0.3, 0.2);
  RandomStream rng = stream(1);

  const McEstimate empty = phi_expectation_mc(m, EdgeSubset(), 10, rng);
  CHECK(empty.mean == 1.0);
  CHECK(empty.exact);
  CHECK(empty.std_error == 0.0);

  // A degree-one support vertex makes the conditional product integrate to
  // zero, whatever the rest of the shape does.
  for (const EdgeSubset& dangling :
       {EdgeSubset({{0, 1}}), kWedge, EdgeSubset({{0, 1}, {2, 3}}),
        EdgeSubset({{0, 1}, {0, 2}, {1, 2}, {2, 3}})}) {
    const McEstimate e = phi_expectation_mc(m, dangling, 10, rng);
    CHECK(e.mean == 0.0);
    CHECK(e.exact);
  }

  CHECK_THROWS_AS(phi_expectation_mc(make_params(10, 0.9, 0.3, 0.0), kTriangle, 10, rng),
                  ValidationError);
  CHECK_THROWS_AS(phi_expectation_mc(m, kTriangle, 0, rng), ValidationError);

  // 6 disjoint triangles span 18 support vertices, past the sampler's buffer
  // (and with no dangling edge the exact-zero shortcut does not apply).
  std::vector<std::pair<int, int>> wide;
  for (int i = 0; i < 18; i += 3) {
    wide.emplace_back(i, i + 1);
    wide.emplace_back(i, i + 2);
    wide.emplace_back(i + 1, i + 2);
  }
  CHECK_THROWS_AS(phi_expectation_mc(m, EdgeSubset(wide), 10, rng), BudgetError);
}

TEST_CASE("triangle and 4-cycle moments match their closed forms") {
  const ModelParams m = make_params(50, 0.9, 0.3, 0.2);
  const double tau = m.tau;
  RandomStream rng = stream(2);

  const double tri_target =
      std::pow(m.mu, 3) * tau * tau * (3.0 - 4.0 * tau) / (4.0 * std::pow(1.0 - tau, 3));
  const McEstimate tri = phi_expectation_mc(m, kTriangle, 400000, rng);
  CHECK(tri.std_error > 0.0);
  CHECK(within_4se(tri, tri_target));

  const double c4_target =
      std::pow(m.mu, 4) * std::pow(tau, 3) * (2.0 - 3.0 * tau) / (3.0 * std::pow(1.0 - tau, 4));
  const McEstimate c4 = phi_expectation_mc(m, kC4, 400000, rng);
  CHECK(within_4se(c4, c4_target));
}

TEST_CASE("latent-only and graph-sampling estimators agree") {
  const ModelParams m = make_params(50, 0.9, 0.3, 0.2);
  RandomStream rng = stream(3);

  const McEstimate latent = phi_expectation_mc(m, kTriangle, 300000, rng);
  const McEstimate graph = phi_expectation_graph_mc(m, kTriangle, 400000, rng);
  const double se = std::sqrt(latent.std_error * latent.std_error +
                              graph.std_error * graph.std_error);
  CHECK(std::abs(latent.mean - graph.mean) <= 4.0 * se);

  // The graph sampler has no dangling-edge shortcut, so a wedge checks that
  // the zero is real and not an artifact of the skip.
  const McEstimate wedge = phi_expectation_graph_mc(m, kWedge, 300000, rng);
  CHECK(std::abs(wedge.mean) <= 4.0 * wedge.std_error);
}

TEST_CASE("moment magnitudes respect the counting bound") {
  const ModelParams m = make_params(50, 0.9, 0.3, 0.2);
  RandomStream rng = stream(4);
  for (const Shape& s : enumerate_shapes(3)) {
    if (s.edges.has_dangling_edge()) continue;
    const McEstimate e = phi_expectation_mc(m, s.edges, 100000, rng);
    const int mm = s.edge_count();
    const int v = s.vertex_count();
    const double bound = std::pow(m.mu / (1.0 - m.tau), mm) * std::pow(double(v), 2 * v) *
                         std::pow(m.tau, v - mm);
    CHECK(std::abs(e.mean) <= bound + 4.0 * e.std_error);
  }
}

TEST_CASE("window-mask probabilities: single edge is analytic, beta must nest") {
  const ModelParams m = make_params(50, 0.9, 0.3, 0.2);
  RandomStream rng = stream(5);
  const EdgeSubset edge({{0, 1}});

  const McEstimate all_out = p_alpha_beta_mc(m, edge, edge, 100, rng);
  CHECK(all_out.mean == 1.0 - m.tau);
  CHECK(all_out.exact);
  const McEstimate all_in = p_alpha_beta_mc(m, edge, EdgeSubset(), 100, rng);
  CHECK(all_in.mean == m.tau);
  CHECK(all_in.exact);

  CHECK_THROWS_AS(p_alpha_beta_mc(m, edge, EdgeSubset({{0, 2}}), 100, rng), ValidationError);
}

TEST_CASE("triangle window masks match inclusion-exclusion and sum to one") {
  const ModelParams m = make_params(50, 0.9, 0.3, 0.2);
  const double tau = m.tau;
  RandomStream rng = stream(6);
  const std::uint64_t s = 300000;

  const McEstimate none_out = p_alpha_beta_mc(m, kTriangle, EdgeSubset(), s, rng);
  CHECK(within_4se(none_out, 0.75 * tau * tau));

  double total = none_out.mean;
  double var = none_out.std_error * none_out.std_error;

  const auto& te = kTriangle.edges();
  for (int k = 0; k < 3; ++k) {
    const McEstimate one = p_alpha_beta_mc(m, kTriangle, EdgeSubset({te[k]}), s, rng);
    CHECK(within_4se(one, tau * tau / 4.0));
    total += one.mean;
    var += one.std_error * one.std_error;
  }
  for (int k = 0; k < 3; ++k) {
    std::vector<std::pair<int, int>> two;
    for (int j = 0; j < 3; ++j)
      if (j != k) two.push_back(te[j]);
    const McEstimate est = p_alpha_beta_mc(m, kTriangle, EdgeSubset(two), s, rng);
    CHECK(within_4se(est, tau - 2.0 * tau * tau + 0.75 * tau * tau));
    total += est.mean;
    var += est.std_error * est.std_error;
  }
  const McEstimate three = p_alpha_beta_mc(m, kTriangle, kTriangle, s, rng);
  CHECK(within_4se(three, 1.0 - 3.0 * tau + 2.25 * tau * tau));
  total += three.mean;
  var += three.std_error * three.std_error;

  CHECK(std::abs(total - 1.0) <= 4.0 * std::sqrt(var));

  // Both wedge edges close happens with probability tau^2 exactly: the two
  // windows are independent given the shared endpoint.
  RandomStream rng2 = stream(7);
  const McEstimate wedge_in = p_alpha_beta_mc(m, kWedge, EdgeSubset(), s, rng2);
  CHECK(within_4se(wedge_in, tau * tau));
}

TEST_CASE("correlation table: root edge is exact, small shapes match hand values") {
  const ModelParams m = make_params(50, 0.9, 0.3, 0.2);
  const double tau = m.tau;
  LowDegConfig cfg;
  cfg.max_edges = 3;
  cfg.mc_samples = 400000;
  RandomStream rng = stream(8);

  const RhoTable table = rho_table(m, cfg, rng);
  CHECK(table.rho_empty == tau);
  // depth 3 holds the root edge, 2 two-edge shapes, 7 three-edge shapes
  CHECK(table.entries.size() == 10);

  std::map<std::string, RhoEntry> by_id;
  for (const auto& e : table.entries) by_id[e.shape.id] = e;

  const RhoEntry& root = by_id.at("12");
  CHECK(root.rho == tau);
  CHECK(root.std_error == 0.0);
  CHECK(root.p_alpha_alpha == 1.0 - tau);

  // rho for the interior path and for the triangle both reduce to
  // tau^2 (3 - 4 tau) / (4 (1 - tau)^2); the cherry cancels to zero.
  const double hand = tau * tau * (3.0 - 4.0 * tau) / (4.0 * (1.0 - tau) * (1.0 - tau));
  const RhoEntry& path = by_id.at("13.23");
  CHECK(path.std_error > 0.0);
  CHECK(std::abs(path.rho - hand) <= 4.0 * path.std_error);
  const RhoEntry& tri = by_id.at("12.13.23");
  CHECK(std::abs(tri.rho - hand) <= 4.0 * tri.std_error);
  const RhoEntry& cherry = by_id.at("12.13");
  CHECK(std::abs(cherry.rho) <= 4.0 * cherry.std_error);

  for (const auto& e : table.entries) {
    const int mm = e.shape.edge_count();
    const int v = e.shape.vertex_count();
    // crude union bound on the all-outside probability
    CHECK(e.p_alpha_alpha >= 1.0 - 2.0 * tau * mm * mm - 4.0 / std::sqrt(double(cfg.mc_samples)));
    const double cap = (1.0 + tau * std::pow(double(mm), 4)) * std::pow(mm + 1.0, mm) *
                       std::pow(tau * v, v - 1);
    CHECK(std::abs(e.rho) <= cap + 4.0 * e.std_error);
  }
}

TEST_CASE("correlation table lookup rules") {
  const ModelParams m = make_params(50, 0.9, 0.3, 0.2);
  LowDegConfig cfg;
  cfg.max_edges = 2;
  cfg.mc_samples = 50000;
  RandomStream rng = stream(9);
  const RhoTable table = rho_table(m, cfg, rng);

  CHECK(table.lookup(EdgeSubset()) == m.tau);
  CHECK(table.lookup(EdgeSubset({{0, 2}})) == 0.0);            // root 1 missing
  CHECK(table.lookup(EdgeSubset({{0, 2}, {1, 3}})) == 0.0);    // disconnected
  CHECK(table.lookup(EdgeSubset({{0, 1}})) == m.tau);
  // interior relabels resolve to the same entry
  CHECK(table.lookup(EdgeSubset({{0, 6}, {6, 1}})) == table.lookup(EdgeSubset({{0, 2}, {2, 1}})));
  // a three-edge shape is outside this depth-2 table
  CHECK_THROWS_AS(table.lookup(kTriangle), ValidationError);
  cfg.max_edges = 0;
  CHECK_THROWS_AS(rho_table(m, cfg, rng), ValidationError);
}

TEST_CASE("correlation bound is analytic at depth one") {
  const ModelParams m = make_params(50, 0.9, 0.3, 0.2);
  LowDegConfig cfg;
  cfg.max_edges = 1;
  RandomStream rng = stream(10);
  const CorrBound cb = corr_bound(m, cfg, rng);
  // tau^2 (1 + lambda^2) with lambda^2 = 12/7
  CHECK(cb.corr_sq_bound == doctest::Approx(0.10857142857142857).epsilon(1e-14));
  CHECK(cb.std_error == 0.0);
  CHECK(cb.mmse_lower_bound == doctest::Approx(0.09142857142857143).epsilon(1e-13));
}

TEST_CASE("correlation bound collapses to tau^2 as the edge signal vanishes") {
  const ModelParams weak = make_params(30, 0.3, 0.2999999, 0.1);
  LowDegConfig cfg;
  cfg.max_edges = 3;
  cfg.mc_samples = 100000;
  RandomStream rng = stream(11);
  const CorrBound cb = corr_bound(weak, cfg, rng);
  const double tau_sq = weak.tau * weak.tau;
  CHECK(std::abs(cb.corr_sq_bound - tau_sq) <= 1e-6 * tau_sq + 4.0 * cb.std_error);
  CHECK(cb.mmse_lower_bound == doctest::Approx(weak.tau - cb.corr_sq_bound).epsilon(1e-12));
}

TEST_CASE("in the sparse weak regime the bound stays near the trivial level") {
  const ModelParams m = make_params(20, 0.3, 0.29, 0.05);
  LowDegConfig cfg;
  cfg.max_edges = 3;
  cfg.mc_samples = 100000;
  RandomStream rng = stream(12);
  const CorrBound cb = corr_bound(m, cfg, rng);
  CHECK(cb.corr_sq_bound / (m.tau * m.tau) < 10.0);
  CHECK(cb.corr_sq_bound >= m.tau * m.tau);
}

TEST_CASE("advantage at degree two is exactly one") {
  const ModelParams m = make_params(100, 0.9, 0.3, 0.2);
  LowDegConfig cfg;
  cfg.max_edges = 2;
  cfg.mc_samples = 1000;
  RandomStream rng = stream(13);
  const AdvantageResult adv = advantage_sq(m, cfg, rng);
  CHECK(adv.advantage_sq == 1.0);
  CHECK(adv.std_error == 0.0);
  for (const auto& c : adv.breakdown) {
    CHECK(c.skipped);
    CHECK(c.contribution == 0.0);
  }
}

TEST_CASE("advantage at degree three is driven by the triangle alone") {
  const ModelParams m = make_params(50, 0.9, 0.3, 0.2);
  LowDegConfig cfg;
  cfg.max_edges = 3;
  cfg.mc_samples = 300000;
  RandomStream rng = stream(14);
  const AdvantageResult adv = advantage_sq(m, cfg, rng);

  int active = 0;
  double tri_contrib = 0.0;
  for (const auto& c : adv.breakdown) {
    if (c.skipped) continue;
    ++active;
    CHECK(c.shape.id == "12.13.23");
    CHECK(c.embedding_count == 19600.0);  // C(50,3)
    tri_contrib = c.contribution;
  }
  CHECK(active == 1);
  CHECK(adv.advantage_sq == doctest::Approx(1.0 + tri_contrib).epsilon(1e-12));

  const double tau = m.tau;
  const double phi_target =
      std::pow(m.mu, 3) * tau * tau * (3.0 - 4.0 * tau) / (4.0 * std::pow(1.0 - tau, 3));
  const double target = 1.0 + 19600.0 * phi_target * phi_target;
  CHECK(std::abs(adv.advantage_sq - target) <= 5.0 * adv.std_error);

  // identical replay regardless of worker count
  RandomStream r1 = stream(14);
  cfg.threads = 3;
  const AdvantageResult wide = advantage_sq(m, cfg, r1);
  CHECK(wide.advantage_sq == adv.advantage_sq);
  CHECK(wide.std_error == adv.std_error);
}

TEST_CASE("advantage at degree four adds the 4-cycle") {
  const ModelParams m = make_params(50, 0.9, 0.3, 0.2);
  LowDegConfig cfg;
  cfg.max_edges = 4;
  cfg.mc_samples = 300000;
  RandomStream rng = stream(15);
  const AdvantageResult adv = advantage_sq(m, cfg, rng);

  CHECK(adv.breakdown.size() == 19);
  double tri = -1.0, c4 = -1.0;
  int active = 0;
  for (const auto& c : adv.breakdown) {
    if (c.skipped) continue;
    ++active;
    CHECK(c.contribution ==
          doctest::Approx(c.embedding_count * c.phi.mean * c.phi.mean).epsilon(1e-12));
    if (c.shape.id == "12.13.23") tri = c.contribution;
    if (c.shape.id == "12.13.24.34") c4 = c.contribution;
  }
  CHECK(active == 2);
  CHECK(tri > 0.0);
  CHECK(c4 > 0.0);

  // Closed forms: 19600 triangles and 690900 labeled 4-cycles at n = 50. The
  // extra factor of n in the 4-cycle count outweighs its smaller moment at
  // this operating point.
  const double tau = m.tau;
  const double tri_mean =
      std::pow(m.mu, 3) * tau * tau * (3.0 - 4.0 * tau) / (4.0 * std::pow(1.0 - tau, 3));
  const double c4_mean =
      std::pow(m.mu, 4) * std::pow(tau, 3) * (2.0 - 3.0 * tau) / (3.0 * std::pow(1.0 - tau, 4));
  CHECK(tri == doctest::Approx(19600.0 * tri_mean * tri_mean).epsilon(0.10));
  CHECK(c4 == doctest::Approx(690900.0 * c4_mean * c4_mean).epsilon(0.20));
  CHECK(c4 > tri);

  CHECK_THROWS_AS(advantage_sq(m, LowDegConfig{0, 8, 100, 1}, rng), ValidationError);
  CHECK_THROWS_AS(advantage_sq(m, LowDegConfig{5, 8, 100, 1}, rng), ValidationError);
}

TEST_CASE("advantage stays near one in the subcritical scaling") {
  // n^3 tau^4 mu^6 is about 0.06 here, so the enumerated sum is a few
  // thousandths even at a million vertices.
  const ModelParams m = make_params(1000000, 0.8, 0.4, 2.1483e-5);
  LowDegConfig cfg;
  cfg.max_edges = 3;
  cfg.mc_samples = 500000;
  RandomStream rng = stream(16);
  const AdvantageResult adv = advantage_sq(m, cfg, rng);
  CHECK(adv.advantage_sq >= 1.0);
  CHECK(adv.advantage_sq < 1.1);
}

TEST_CASE("advantage breakdown CSV carries one row per shape") {
  const ModelParams m = make_params(30, 0.9, 0.3, 0.2);
  LowDegConfig cfg;
  cfg.max_edges = 3;
  cfg.mc_samples = 20000;
  RandomStream rng = stream(17);
  const AdvantageResult adv = advantage_sq(m, cfg, rng);
  const std::string path = "lowdeg_test_breakdown.csv";
  write_advantage_csv(adv, m, cfg, 17, path);

  std::FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  char line[512];
  int rows = 0, comments = 0;
  bool header_ok = false;
  while (std::fgets(line, sizeof(line), f)) {
    const std::string s(line);
    if (s.rfind("# pdc-lowdeg-v1", 0) == 0) header_ok = true;
    if (s.rfind("#", 0) == 0) {
      ++comments;
      continue;
    }
    if (s.rfind("shape_id", 0) == 0) continue;
    ++rows;
  }
  std::fclose(f);
  std::remove(path.c_str());
  CHECK(header_ok);
  CHECK(rows == 8);  // 1 + 2 + 5 shapes through three edges
}
