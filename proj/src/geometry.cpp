#include "pdc/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pdc/errors.hpp"
#include "pdc/graph.hpp"

namespace pdc {

LatentAssignment sample_latents(int n, RandomStream& rng) {
  if (n < 1) throw ValidationError("sample_latents: n must be >= 1");
  LatentAssignment la;
  la.z.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) la.z[static_cast<std::size_t>(i)] = rng.next_unit();
  return la;
}

void validate_latents(const LatentAssignment& la) {
  if (la.z.empty()) throw ValidationError("latents: empty assignment");
  for (double v : la.z) {
    if (!(v >= 0.0 && v < 1.0) || std::isnan(v))
      throw ValidationError("latents: position outside [0, 1)");
  }
}

Graph geometric_graph(const LatentAssignment& la, double tau) {
  validate_latents(la);
  if (!(tau >= 0.0 && tau <= 0.5)) throw ValidationError("geometric_graph: tau must be in [0, 1/2]");
  const int n = la.n();
  Graph g(n);
  const double half = tau / 2.0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (circle_dist(la.z[static_cast<std::size_t>(i)], la.z[static_cast<std::size_t>(j)]) <= half)
        g.set_edge(i, j);
    }
  }
  return g;
}

void write_latents(const LatentAssignment& la, std::ostream& os) {
  validate_latents(la);
  os << "n " << la.n() << "\n";
  char buf[64];
  for (int i = 0; i < la.n(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", la.z[static_cast<std::size_t>(i)]);
    os << (i + 1) << " " << buf << "\n";
  }
}

void write_latents(const LatentAssignment& la, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ValidationError("write_latents: cannot open " + path);
  write_latents(la, os);
  if (!os) throw ValidationError("write_latents: write failed for " + path);
}

LatentAssignment read_latents(std::istream& is) {
  std::string tag;
  int n = 0;
  if (!(is >> tag >> n) || tag != "n" || n < 1)
    throw ValidationError("read_latents: bad header");
  LatentAssignment la;
  la.z.assign(static_cast<std::size_t>(n), -1.0);
  for (int k = 0; k < n; ++k) {
    int idx = 0;
    double v = 0.0;
    if (!(is >> idx >> v)) throw ValidationError("read_latents: truncated file");
    if (idx < 1 || idx > n) throw ValidationError("read_latents: index out of range");
    if (la.z[static_cast<std::size_t>(idx - 1)] >= 0.0)
      throw ValidationError("read_latents: duplicate index");
    if (!(v >= 0.0 && v < 1.0)) throw ValidationError("read_latents: position outside [0, 1)");
    la.z[static_cast<std::size_t>(idx - 1)] = v;
  }
  return la;
}

LatentAssignment read_latents(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("read_latents: cannot open " + path);
  return read_latents(is);
}

}  // namespace pdc
