// oracles.cpp — brute-force references and their randomized equivalence suites

#include "pdc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <vector>

#include "pdc/graph.hpp"
#include "pdc/rng.hpp"
#include "pdc/statistics.hpp"

namespace pdc::oracle {

double signed_triangle_enumerated(const StandardizedMatrix& M) {
  const int n = M.n();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        total += M.entry(i, j) * M.entry(j, k) * M.entry(i, k);
      }
    }
  }
  return total;
}

double signed_triangle_dense_trace(const StandardizedMatrix& M) {
  const int n = M.n();
  std::vector<double> D(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) D[static_cast<std::size_t>(i) * n + j] = M.entry(i, j);
  }
  double trace3 = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        trace3 += D[static_cast<std::size_t>(i) * n + j] *
                  D[static_cast<std::size_t>(j) * n + k] *
                  D[static_cast<std::size_t>(k) * n + i];
      }
    }
  }
  return trace3 / 6.0;
}

double signed_saw_nested(const StandardizedMatrix& M, int ell) {
  if (ell < 1 || ell > 4) throw ValidationError("saw oracle: ell must be in 1..4");
  const int n = M.n();
  if (n < ell + 2) throw ValidationError("saw oracle: need n >= ell + 2");
  const int a = 0, b = 1;
  double total = 0.0;
  if (ell == 1) {
    for (int u = 0; u < n; ++u) {
      if (u == a || u == b) continue;
      total += M.entry(a, u) * M.entry(u, b);
    }
    return total;
  }
  if (ell == 2) {
    for (int u = 0; u < n; ++u) {
      if (u == a || u == b) continue;
      for (int v = 0; v < n; ++v) {
        if (v == a || v == b || v == u) continue;
        total += M.entry(a, u) * M.entry(u, v) * M.entry(v, b);
      }
    }
    return total;
  }
  if (ell == 3) {
    for (int u = 0; u < n; ++u) {
      if (u == a || u == b) continue;
      for (int v = 0; v < n; ++v) {
        if (v == a || v == b || v == u) continue;
        for (int w = 0; w < n; ++w) {
          if (w == a || w == b || w == u || w == v) continue;
          total += M.entry(a, u) * M.entry(u, v) * M.entry(v, w) * M.entry(w, b);
        }
      }
    }
    return total;
  }
  for (int u = 0; u < n; ++u) {
    if (u == a || u == b) continue;
    for (int v = 0; v < n; ++v) {
      if (v == a || v == b || v == u) continue;
      for (int w = 0; w < n; ++w) {
        if (w == a || w == b || w == u || w == v) continue;
        for (int x = 0; x < n; ++x) {
          if (x == a || x == b || x == u || x == v || x == w) continue;
          total += M.entry(a, u) * M.entry(u, v) * M.entry(v, w) * M.entry(w, x) *
                   M.entry(x, b);
        }
      }
    }
  }
  return total;
}

namespace {

constexpr double kRelTol = 1e-9;

bool close_rel(double a, double b) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= kRelTol * scale;
}

Graph random_graph(RandomStream& rng, int n, double density) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.next_unit() < density) g.set_edge(i, j);
    }
  }
  return g;
}

struct SuiteReport {
  int cases = 0;
  int failures = 0;
};

void report(std::ostream& out, const char* name, const SuiteReport& s) {
  out << (s.failures == 0 ? "[ok]   " : "[FAIL] ") << name << ": " << s.cases - s.failures
      << "/" << s.cases << " cases agree" << '\n';
}

}  // namespace

bool run_oracle_checks(std::ostream& out, std::uint64_t seed) {
  RandomStream root = RandomStream::from_seed(seed);

  // Suite 1: triangle statistic, three independent routes.
  SuiteReport tri;
  {
    RandomStream rng = root.derive("triangles");
    for (int c = 0; c < 100; ++c) {
      const int n = 3 + static_cast<int>(rng.next_below(10));  // 3..12
      const double density = 0.05 + 0.9 * rng.next_unit();
      const double center = 0.05 + 0.9 * rng.next_unit();
      Graph g = random_graph(rng, n, density);
      StandardizedMatrix M(std::move(g), center);
      const double fast = signed_triangle(M);
      const double enumerated = signed_triangle_enumerated(M);
      const double traced = signed_triangle_dense_trace(M);
      ++tri.cases;
      if (!close_rel(fast, enumerated) || !close_rel(fast, traced)) ++tri.failures;
    }
    report(out, "triangle count-form vs enumeration vs dense trace", tri);
  }

  // Suite 2: self-avoiding walk sums, recursive vs nested loops.
  SuiteReport saw;
  {
    RandomStream rng = root.derive("saw");
    for (int c = 0; c < 60; ++c) {
      const double density = 0.05 + 0.9 * rng.next_unit();
      const double center = 0.05 + 0.9 * rng.next_unit();
      for (int ell = 1; ell <= 4; ++ell) {
        const int n = ell + 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(11 - ell)));
        Graph g = random_graph(rng, n, density);
        StandardizedMatrix M(std::move(g), center);
        const double fast = signed_saw_exact(M, {.ell = ell});
        const double nested = signed_saw_nested(M, ell);
        ++saw.cases;
        if (!close_rel(fast, nested)) ++saw.failures;
      }
    }
    report(out, "walk sum depth-first vs nested loops", saw);
  }

  // Suite 3: clique sum at v=3 must equal the triangle statistic.
  SuiteReport clique;
  {
    RandomStream rng = root.derive("clique");
    for (int c = 0; c < 40; ++c) {
      const int n = 3 + static_cast<int>(rng.next_below(10));
      const double density = 0.05 + 0.9 * rng.next_unit();
      const double center = 0.05 + 0.9 * rng.next_unit();
      Graph g = random_graph(rng, n, density);
      StandardizedMatrix M(std::move(g), center);
      ++clique.cases;
      if (!close_rel(signed_clique_count(M, 3), signed_triangle(M))) ++clique.failures;
    }
    report(out, "clique sum (v=3) vs triangle statistic", clique);
  }

  // Suite 4: exhaustive sampler sweep equals the exact walk sum.
  SuiteReport sweep;
  {
    RandomStream rng = root.derive("sweep");
    for (int c = 0; c < 20; ++c) {
      const double density = 0.05 + 0.9 * rng.next_unit();
      const double center = 0.05 + 0.9 * rng.next_unit();
      for (int ell = 1; ell <= 3; ++ell) {
        const int n = ell + 2 + static_cast<int>(rng.next_below(7));
        Graph g = random_graph(rng, n, density);
        StandardizedMatrix M(std::move(g), center);
        RandomStream mc = rng.derive("mc").derive(static_cast<std::uint64_t>(c));
        const SawEstimate est = signed_saw_mc(M, {.ell = ell}, 1, mc, /*exhaustive=*/true);
        ++sweep.cases;
        if (!est.exact || !close_rel(est.estimate, signed_saw_exact(M, {.ell = ell}))) {
          ++sweep.failures;
        }
      }
    }
    report(out, "exhaustive sampler sweep vs exact walk sum", sweep);
  }

  return tri.failures == 0 && saw.failures == 0 && clique.failures == 0 && sweep.failures == 0;
}

}  // namespace pdc::oracle
