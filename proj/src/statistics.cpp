#include "pdc/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pdc/accum.hpp"
#include "pdc/errors.hpp"
#include "pdc/numeric.hpp"
#include "pdc/parallel.hpp"

namespace pdc {

double signed_subgraph(const StandardizedMatrix& M, const EdgeSubset& alpha) {
  const int n = M.n();
  double prod = 1.0;
  for (auto [i, j] : alpha.edges()) {
    if (i >= n || j >= n) throw ValidationError("signed_subgraph: vertex out of range");
    prod *= M.entry(i, j);
  }
  return prod;
}

double signed_triangle(const StandardizedMatrix& M) {
  // Entries take only two values, so the sum over vertex triples collapses to
  // the exact counts of triples with k = 0..3 present edges.
  const Graph& g = M.graph();
  const std::int64_t n = g.n();
  if (n < 3) return 0.0;
  const std::int64_t m = g.edge_count();
  const std::int64_t tri = g.triangle_count();
  const std::int64_t wedge = g.wedge_count();

  const std::int64_t n3 = tri;
  const std::int64_t n2 = wedge - 3 * tri;
  const std::int64_t n1 = m * (n - 2) - 2 * n2 - 3 * n3;
  const std::int64_t n0 = n * (n - 1) * (n - 2) / 6 - n1 - n2 - n3;

  const double pos = M.present_value();
  const double neg = M.absent_value();
  return static_cast<double>(n3) * pos * pos * pos + static_cast<double>(n2) * pos * pos * neg +
         static_cast<double>(n1) * pos * neg * neg + static_cast<double>(n0) * neg * neg * neg;
}

namespace {

double clique_sum_rec(const StandardizedMatrix& M, int v, int next, std::vector<int>& chosen,
                      double prod) {
  if (static_cast<int>(chosen.size()) == v) return prod;
  double acc = 0.0;
  const int need = v - static_cast<int>(chosen.size());
  for (int u = next; u <= M.n() - need; ++u) {
    double p = prod;
    for (int w : chosen) p *= M.entry(w, u);
    chosen.push_back(u);
    acc += clique_sum_rec(M, v, u + 1, chosen, p);
    chosen.pop_back();
  }
  return acc;
}

}  // namespace

double signed_clique_count(const StandardizedMatrix& M, int v, int v_cap) {
  if (v < 3 || v > M.n()) throw ValidationError("signed_clique_count: need 3 <= v <= n");
  if (v > v_cap) throw BudgetError("signed_clique_count: v exceeds cap");
  std::vector<int> chosen;
  return clique_sum_rec(M, v, 0, chosen, 1.0);
}

namespace {

struct SawContext {
  const StandardizedMatrix* M = nullptr;
  int a = 0, b = 1, ell = 1, n = 0;
};

void check_saw_args(const StandardizedMatrix& M, const SawSpec& spec, const SawOptions& opt) {
  if (spec.ell < 1) throw ValidationError("signed_saw: ell must be >= 1");
  const int n = M.n();
  if (opt.endpoint_a < 0 || opt.endpoint_a >= n || opt.endpoint_b < 0 || opt.endpoint_b >= n)
    throw ValidationError("signed_saw: endpoint out of range");
  if (opt.endpoint_a == opt.endpoint_b) throw ValidationError("signed_saw: endpoints must differ");
  if (n < spec.ell + 2) throw ValidationError("signed_saw: need n >= ell + 2");
}

// Sum over ordered tuples of distinct interior vertices extending the prefix
// that ends at `last` with `depth` interior vertices still to place.
double saw_dfs(const SawContext& ctx, int last, int depth, double prod,
               std::vector<char>& visited) {
  const StandardizedMatrix& M = *ctx.M;
  if (depth == 0) return prod * M.residual(last, ctx.b);
  PairwiseAccumulator acc;
  for (int w = 0; w < ctx.n; ++w) {
    if (visited[static_cast<std::size_t>(w)]) continue;
    visited[static_cast<std::size_t>(w)] = 1;
    acc.add(saw_dfs(ctx, w, depth - 1, prod * M.residual(last, w), visited));
    visited[static_cast<std::size_t>(w)] = 0;
  }
  return acc.total();
}

}  // namespace

double signed_saw_exact(const StandardizedMatrix& M, const SawSpec& spec, const SawOptions& opt) {
  check_saw_args(M, spec, opt);
  const int n = M.n();
  const int ell = spec.ell;

  if (ipow(static_cast<double>(n - 2), ell) > static_cast<double>(opt.term_budget))
    throw BudgetError("signed_saw_exact: (n-2)^ell exceeds term budget");

  SawContext ctx{&M, opt.endpoint_a, opt.endpoint_b, ell, n};

  std::vector<double> slot(static_cast<std::size_t>(n), 0.0);
  parallel_for(static_cast<std::uint64_t>(n), opt.threads, [&](std::uint64_t first) {
    const int w = static_cast<int>(first);
    if (w == ctx.a || w == ctx.b) return;
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    visited[static_cast<std::size_t>(ctx.a)] = 1;
    visited[static_cast<std::size_t>(ctx.b)] = 1;
    visited[static_cast<std::size_t>(w)] = 1;
    slot[first] = saw_dfs(ctx, w, ell - 1, M.residual(ctx.a, w), visited);
  });

  const double raw = pairwise_sum(slot);
  return raw * ipow(M.scale(), ell + 1);
}

SawEstimate signed_saw_mc(const StandardizedMatrix& M, const SawSpec& spec, std::uint64_t samples,
                          RandomStream& rng, bool exhaustive, const SawOptions& opt) {
  check_saw_args(M, spec, opt);
  if (exhaustive) {
    SawEstimate est;
    est.estimate = signed_saw_exact(M, spec, opt);
    est.std_error = 0.0;
    est.samples = static_cast<std::uint64_t>(falling_factorial(M.n() - 2, spec.ell));
    est.exact = true;
    return est;
  }
  if (samples == 0) throw ValidationError("signed_saw_mc: samples must be >= 1");

  const int n = M.n();
  const int ell = spec.ell;
  const int lo = std::min(opt.endpoint_a, opt.endpoint_b);
  const int hi = std::max(opt.endpoint_a, opt.endpoint_b);
  const RandomStream base(rng.next_u64());

  // Fixed block partition: per-sample streams come from the sample index and
  // blocks merge in block order, so the estimate is bit-identical for every
  // thread count.
  const std::uint64_t blocks = std::min<std::uint64_t>(samples, 256);
  std::vector<RunningStat> block(blocks);
  parallel_for(blocks, opt.threads, [&](std::uint64_t w) {
    RunningStat st;
    const std::uint64_t s_lo = samples * w / blocks;
    const std::uint64_t s_hi = samples * (w + 1) / blocks;
    std::vector<int> interior(static_cast<std::size_t>(ell));
    for (std::uint64_t s = s_lo; s < s_hi; ++s) {
      RandomStream ss = base.derive(s);
      // ordered distinct interior vertices, uniform by rejection
      for (int k = 0; k < ell; ++k) {
        int v;
        bool fresh;
        do {
          v = static_cast<int>(ss.next_below(static_cast<std::uint64_t>(n - 2)));
          if (v >= lo) ++v;
          if (v >= hi) ++v;
          fresh = true;
          for (int t = 0; t < k; ++t) {
            if (interior[t] == v) {
              fresh = false;
              break;
            }
          }
        } while (!fresh);
        interior[k] = v;
      }
      double prod = M.residual(opt.endpoint_a, interior[0]);
      for (int k = 1; k < ell; ++k) prod *= M.residual(interior[k - 1], interior[k]);
      prod *= M.residual(interior[ell - 1], opt.endpoint_b);
      st.add(prod);
    }
    block[static_cast<std::size_t>(w)] = st;
  });

  RunningStat all;
  for (const auto& st : block) all.merge(st);

  const double ff = falling_factorial(n - 2, ell);
  const double scale = ipow(M.scale(), ell + 1);
  SawEstimate est;
  est.estimate = ff * scale * all.mean();
  est.std_error = ff * scale * all.stderr_of_mean();
  est.samples = samples;
  est.exact = false;
  return est;
}

}  // namespace pdc
