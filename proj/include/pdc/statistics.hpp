#pragma once
// statistics.hpp — signed subgraph-count statistics

#include <cstdint>

#include "pdc/edge_subset.hpp"
#include "pdc/rng.hpp"
#include "pdc/standardized.hpp"

namespace pdc {

// Product of standardized entries over alpha; empty alpha gives 1.
double signed_subgraph(const StandardizedMatrix& M, const EdgeSubset& alpha);

// Sum of entry products over all unordered vertex triples, i.e. trace(M^3)/6.
// Entries take two values, so the trace collapses to exact counts of triples
// with 0..3 present edges; that path is O(m * n/64) and rounding-free.
double signed_triangle(const StandardizedMatrix& M);

// Brute-force signed clique sum over all C(n,v) vertex subsets. Exponential;
// the cap keeps it at exploration scale (v <= 5, n <= 60 intended).
double signed_clique_count(const StandardizedMatrix& M, int v, int v_cap = 5);

// Self-avoiding walks of ell+1 edges between two endpoint vertices through
// ell distinct interior vertices.
struct SawSpec {
  int ell = 1;
};

struct SawOptions {
  int endpoint_a = 0;
  int endpoint_b = 1;
  // Exact enumeration refuses when (n-2)^ell exceeds this many terms.
  std::uint64_t term_budget = 1'000'000'000ULL;
  unsigned threads = 1;
};

// Exact sum over all ordered interior tuples (depth-first, visited mask).
// Inner products multiply raw residuals; the global scale (c(1-c))^-(ell+1)/2
// is applied once. Parallelizes over the first interior vertex with a fixed
// partition and pairwise reduction, so results do not depend on thread count.
double signed_saw_exact(const StandardizedMatrix& M, const SawSpec& spec,
                        const SawOptions& opt = {});

struct SawEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  bool exact = false;
};

// Uniform ordered distinct interior tuples; estimate = falling factorial times
// the sample mean (unbiased), std_error from the sample variance. With
// exhaustive=true it sweeps every tuple instead and returns the exact value.
SawEstimate signed_saw_mc(const StandardizedMatrix& M, const SawSpec& spec,
                          std::uint64_t samples, RandomStream& rng, bool exhaustive = false,
                          const SawOptions& opt = {});

}  // namespace pdc
