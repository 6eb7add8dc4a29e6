#include "pdc/lowdeg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "pdc/accum.hpp"
#include "pdc/errors.hpp"
#include "pdc/numeric.hpp"
#include "pdc/parallel.hpp"

namespace pdc {

int eta(const LatentAssignment& z, const EdgeSubset& alpha, double tau) {
  if (!(tau >= 0.0 && tau <= 0.5)) throw ValidationError("eta: tau must be in [0, 1/2]");
  const int n = z.n();
  int count = 0;
  for (auto [i, j] : alpha.edges()) {
    if (i >= n || j >= n) throw ValidationError("eta: vertex out of range");
    if (circle_dist(z.z[static_cast<std::size_t>(i)], z.z[static_cast<std::size_t>(j)]) <=
        tau / 2.0)
      ++count;
  }
  return count;
}

namespace {

// Edges of alpha rewritten against the sorted support, so samplers only draw
// |V(alpha)| uniforms.
struct LocalShape {
  int v = 0;
  std::vector<std::pair<int, int>> edges;
};

constexpr int kMaxSupport = 16;

LocalShape localize(const EdgeSubset& alpha) {
  LocalShape ls;
  const auto& verts = alpha.vertices();
  ls.v = static_cast<int>(verts.size());
  if (ls.v > kMaxSupport)
    throw BudgetError("lowdeg: shape support exceeds 16 vertices");
  ls.edges.reserve(alpha.edges().size());
  for (auto [a, b] : alpha.edges()) {
    const int la = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), a) - verts.begin());
    const int lb = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), b) - verts.begin());
    ls.edges.emplace_back(la, lb);
  }
  return ls;
}

McEstimate exact_estimate(double value) {
  McEstimate e;
  e.mean = value;
  e.std_error = 0.0;
  e.samples = 0;
  e.exact = true;
  return e;
}

// Block-parallel mean of fn(sample_stream) over `samples` draws. The block
// partition is fixed (not per worker) and blocks merge in block order, so the
// result is bit-identical for every thread count.
template <class Fn>
RunningStat mc_mean(std::uint64_t samples, unsigned threads, RandomStream& rng, Fn&& fn) {
  if (samples == 0) throw ValidationError("monte carlo: samples must be >= 1");
  const RandomStream base(rng.next_u64());
  const std::uint64_t blocks = std::min<std::uint64_t>(samples, 256);
  std::vector<RunningStat> block(blocks);
  parallel_for(blocks, threads, [&](std::uint64_t w) {
    RunningStat st;
    const std::uint64_t lo = samples * w / blocks;
    const std::uint64_t hi = samples * (w + 1) / blocks;
    for (std::uint64_t s = lo; s < hi; ++s) {
      RandomStream ss = base.derive(s);
      st.add(fn(ss));
    }
    block[static_cast<std::size_t>(w)] = st;
  });
  RunningStat all;
  for (const auto& st : block) all.merge(st);
  return all;
}

}  // namespace

McEstimate phi_expectation_mc(const ModelParams& params, const EdgeSubset& alpha,
                              std::uint64_t samples, RandomStream& rng, unsigned threads) {
  if (!(params.tau > 0.0)) throw ValidationError("phi_expectation_mc: tau must be positive");
  if (alpha.empty()) return exact_estimate(1.0);
  if (alpha.has_dangling_edge()) return exact_estimate(0.0);

  const LocalShape ls = localize(alpha);
  const double tau = params.tau;
  const int m = alpha.edge_count();
  // E[phi_alpha] = (mu*tau/(tau-1))^m * E_z[((tau-1)/tau)^eta(z)]
  const double outer = ipow(params.mu * tau / (tau - 1.0), m);
  const double base_ratio = (tau - 1.0) / tau;

  RunningStat st = mc_mean(samples, threads, rng, [&](RandomStream& ss) {
    double z[kMaxSupport];
    for (int i = 0; i < ls.v; ++i) z[i] = ss.next_unit();
    int inside = 0;
    for (auto [a, b] : ls.edges) {
      if (circle_dist(z[a], z[b]) <= tau / 2.0) ++inside;
    }
    return outer * ipow(base_ratio, inside);
  });

  McEstimate e;
  e.mean = st.mean();
  e.std_error = st.stderr_of_mean();
  e.samples = samples;
  e.exact = false;
  return e;
}

McEstimate phi_expectation_graph_mc(const ModelParams& params, const EdgeSubset& alpha,
                                    std::uint64_t samples, RandomStream& rng) {
  if (alpha.empty()) return exact_estimate(1.0);
  const LocalShape ls = localize(alpha);
  const double tau = params.tau;
  const double s = std::sqrt(params.r * (1.0 - params.r));
  const double present = (1.0 - params.r) / s;
  const double absent = -params.r / s;

  RunningStat st = mc_mean(samples, 1, rng, [&](RandomStream& ss) {
    double z[kMaxSupport];
    for (int i = 0; i < ls.v; ++i) z[i] = ss.next_unit();
    double prod = 1.0;
    for (auto [a, b] : ls.edges) {
      const double dens = circle_dist(z[a], z[b]) <= tau / 2.0 ? params.p : params.q;
      prod *= ss.next_unit() < dens ? present : absent;
    }
    return prod;
  });

  McEstimate e;
  e.mean = st.mean();
  e.std_error = st.stderr_of_mean();
  e.samples = samples;
  e.exact = false;
  return e;
}

AdvantageResult advantage_sq(const ModelParams& params, const LowDegConfig& cfg,
                             RandomStream& rng) {
  if (cfg.max_edges < 1 || cfg.max_edges > 4)
    throw ValidationError("advantage_sq: degree cap must be in 1..4");

  AdvantageResult res;
  double err_sq = 0.0;
  for (const Shape& shape : enumerate_shapes(cfg.max_edges, cfg.vertex_budget)) {
    ShapeContribution c;
    c.shape = shape;
    c.embedding_count = shape.embeddings(params.n);
    c.skipped = shape.edges.has_dangling_edge() || shape.vertex_count() > shape.edge_count();
    if (c.skipped) {
      c.phi = exact_estimate(0.0);
      c.contribution = 0.0;
    } else {
      c.phi = phi_expectation_mc(params, shape.edges, cfg.mc_samples, rng, cfg.threads);
      c.contribution = c.embedding_count * c.phi.mean * c.phi.mean;
      const double d = c.embedding_count * 2.0 * std::fabs(c.phi.mean) * c.phi.std_error;
      err_sq += d * d;
    }
    res.breakdown.push_back(std::move(c));
  }
  double total = 1.0;
  for (const auto& c : res.breakdown) total += c.contribution;
  res.advantage_sq = total;
  res.std_error = std::sqrt(err_sq);
  return res;
}

McEstimate p_alpha_beta_mc(const ModelParams& params, const EdgeSubset& alpha,
                           const EdgeSubset& beta, std::uint64_t samples, RandomStream& rng) {
  const auto& ae = alpha.edges();
  for (auto e : beta.edges()) {
    if (!std::binary_search(ae.begin(), ae.end(), e))
      throw ValidationError("p_alpha_beta_mc: beta must be a subset of alpha");
  }
  const double tau = params.tau;
  if (alpha.edge_count() == 1) {
    return exact_estimate(beta.edge_count() == 1 ? 1.0 - tau : tau);
  }

  const LocalShape ls = localize(alpha);
  std::vector<char> outside_target(ls.edges.size(), 0);
  for (std::size_t k = 0; k < ae.size(); ++k)
    outside_target[k] = std::binary_search(beta.edges().begin(), beta.edges().end(), ae[k]) ? 1 : 0;

  RunningStat st = mc_mean(samples, 1, rng, [&](RandomStream& ss) {
    double z[kMaxSupport];
    for (int i = 0; i < ls.v; ++i) z[i] = ss.next_unit();
    for (std::size_t k = 0; k < ls.edges.size(); ++k) {
      const bool outside = circle_dist(z[ls.edges[k].first], z[ls.edges[k].second]) > tau / 2.0;
      if (outside != static_cast<bool>(outside_target[k])) return 0.0;
    }
    return 1.0;
  });

  McEstimate e;
  e.mean = st.mean();
  e.std_error = st.stderr_of_mean();
  e.samples = samples;
  e.exact = false;
  return e;
}

namespace {

bool contains_both_roots(const EdgeSubset& alpha) {
  const auto& v = alpha.vertices();
  return std::find(v.begin(), v.end(), 0) != v.end() &&
         std::find(v.begin(), v.end(), 1) != v.end();
}

}  // namespace

double RhoTable::lookup(const EdgeSubset& alpha) const {
  if (alpha.empty()) return rho_empty;
  if (!contains_both_roots(alpha) || alpha.component_count() != 1) return 0.0;
  const std::string id = rooted_canonical_id(alpha);
  for (const auto& entry : entries) {
    if (entry.shape.id == id) return entry.rho;
  }
  throw ValidationError("rho lookup: shape outside the computed table");
}

RhoTable rho_table(const ModelParams& params, const LowDegConfig& cfg, RandomStream& rng) {
  const int depth = std::min(cfg.max_edges, 3);
  if (depth < 1) throw ValidationError("rho_table: degree cap must be >= 1");
  const double tau = params.tau;

  RhoTable table;
  table.rho_empty = tau;

  for (const RootedShape& shape : enumerate_rooted_connected(depth)) {
    // The only connected rooted shape with one edge is the root pair itself,
    // where the recursion collapses to (tau - tau^2)/(1 - tau) = tau.
    if (shape.edge_count() == 1) {
      RhoEntry entry;
      entry.shape = shape;
      entry.rho = tau;
      entry.std_error = 0.0;
      entry.p_alpha_alpha = 1.0 - tau;
      table.entries.push_back(std::move(entry));
      continue;
    }
    const LocalShape ls = localize(shape.edges);
    const int m = shape.edge_count();
    const std::uint64_t nmask = 1ULL << m;

    // One latent pass tallies every outside-pattern of the shape's edges plus
    // the numerator event {all edges and the root pair inside}.
    std::vector<std::uint64_t> mask_count(nmask, 0);
    std::uint64_t numer_count = 0;
    RandomStream base(rng.next_u64());
    const std::uint64_t samples = cfg.mc_samples;
    for (std::uint64_t s = 0; s < samples; ++s) {
      RandomStream ss = base.derive(s);
      double z[kMaxSupport];
      for (int i = 0; i < ls.v; ++i) z[i] = ss.next_unit();
      std::uint64_t mask = 0;
      for (std::size_t k = 0; k < ls.edges.size(); ++k) {
        if (circle_dist(z[ls.edges[k].first], z[ls.edges[k].second]) > tau / 2.0)
          mask |= 1ULL << k;
      }
      ++mask_count[mask];
      if (mask == 0 && circle_dist(z[0], z[1]) <= tau / 2.0) ++numer_count;
    }

    const double inv = 1.0 / static_cast<double>(samples);
    auto freq = [&](std::uint64_t mask) { return static_cast<double>(mask_count[mask]) * inv; };
    auto freq_var = [&](double f) { return f * (1.0 - f) * inv; };

    const double p_num = static_cast<double>(numer_count) * inv;
    const double p_aa = freq(nmask - 1);  // all edges outside
    if (p_aa <= 0.0) throw ValidationError("rho_table: degenerate P_alpha_alpha estimate");

    // rho = (P{alpha ∪ root pair ⊆ W} - Σ_{β ⊊ α} rho_β P_{αβ}) / P_αα
    double acc = p_num;
    double var_acc = freq_var(p_num);
    for (std::uint64_t sub = 0; sub + 1 < nmask; ++sub) {
      // β = edges whose indices are in `sub` fall outside; P_{αβ} = freq(sub)
      std::vector<std::pair<int, int>> beta_edges;
      for (int k = 0; k < m; ++k) {
        if (sub & (1ULL << k)) beta_edges.push_back(shape.edges.edges()[static_cast<std::size_t>(k)]);
      }
      const EdgeSubset beta(beta_edges);
      double rho_beta = 0.0, rho_beta_err = 0.0;
      if (beta.empty()) {
        rho_beta = table.rho_empty;
      } else if (contains_both_roots(beta) && beta.component_count() == 1) {
        const std::string id = rooted_canonical_id(beta);
        for (const auto& entry : table.entries) {
          if (entry.shape.id == id) {
            rho_beta = entry.rho;
            rho_beta_err = entry.std_error;
            break;
          }
        }
      }
      if (rho_beta == 0.0 && rho_beta_err == 0.0) continue;
      const double p_ab = freq(sub);
      acc -= rho_beta * p_ab;
      var_acc += rho_beta * rho_beta * freq_var(p_ab) + p_ab * p_ab * rho_beta_err * rho_beta_err;
    }

    RhoEntry entry;
    entry.shape = shape;
    entry.p_alpha_alpha = p_aa;
    entry.rho = acc / p_aa;
    // first-order propagation, treating the tallies as independent
    entry.std_error = std::sqrt(var_acc / (p_aa * p_aa) +
                                entry.rho * entry.rho * freq_var(p_aa) / (p_aa * p_aa));
    table.entries.push_back(std::move(entry));
  }
  return table;
}

CorrBound corr_bound(const ModelParams& params, const LowDegConfig& cfg, RandomStream& rng) {
  const RhoTable table = rho_table(params, cfg, rng);
  CorrBound out;
  double total = table.rho_empty * table.rho_empty;
  double err_sq = 0.0;
  for (const auto& entry : table.entries) {
    const double emb = entry.shape.embeddings(params.n);
    const double lam = ipow(params.lambda * params.lambda, entry.shape.edge_count());
    total += emb * entry.rho * entry.rho * lam;
    const double d = emb * 2.0 * std::fabs(entry.rho) * entry.std_error * lam;
    err_sq += d * d;
  }
  out.corr_sq_bound = total;
  out.std_error = std::sqrt(err_sq);
  out.mmse_lower_bound = std::max(0.0, params.tau - total);
  return out;
}

void write_advantage_csv(const AdvantageResult& result, const ModelParams& params,
                         const LowDegConfig& cfg, std::uint64_t seed, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ValidationError("write_advantage_csv: cannot open " + path);
  char buf[64];
  auto num = [&](double x) {
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
  };
  os << "# pdc-lowdeg-v1\n";
  os << "# n=" << params.n << " p=" << num(params.p) << " q=" << num(params.q)
     << " tau=" << num(params.tau) << " D=" << cfg.max_edges
     << " mc_samples=" << cfg.mc_samples << " seed=" << seed << "\n";
  os << "# advantage_sq=" << num(result.advantage_sq) << " std_error=" << num(result.std_error)
     << "\n";
  os << "shape_id,edges,vertices,components,embedding_count,phi_mean,phi_stderr,contribution\n";
  for (const auto& c : result.breakdown) {
    os << c.shape.id << ',' << c.shape.edge_count() << ',' << c.shape.vertex_count() << ','
       << c.shape.edges.component_count() << ',' << num(c.embedding_count) << ','
       << num(c.phi.mean) << ',' << num(c.phi.std_error) << ',' << num(c.contribution) << "\n";
  }
  if (!os) throw ValidationError("write_advantage_csv: write failed for " + path);
}

}  // namespace pdc
