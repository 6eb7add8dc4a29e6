#include "pdc/graph.hpp"

#include <bit>
#include <fstream>

#include "pdc/errors.hpp"

namespace pdc {

Graph::Graph(int n) {
  if (n < 1) throw ValidationError("Graph: n must be >= 1");
  n_ = n;
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0ULL);
}

void Graph::set_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw ValidationError("set_edge: vertex out of range");
  if (i == j) throw ValidationError("set_edge: self-loop");
  if (has_edge(i, j)) return;
  bits_[static_cast<std::size_t>(i) * words_ + (static_cast<std::size_t>(j) >> 6)] |=
      1ULL << (j & 63);
  bits_[static_cast<std::size_t>(j) * words_ + (static_cast<std::size_t>(i) >> 6)] |=
      1ULL << (i & 63);
  ++m_;
}

int Graph::degree(int i) const {
  if (i < 0 || i >= n_) throw ValidationError("degree: vertex out of range");
  const std::uint64_t* r = row(i);
  int d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int i = 0; i < n_; ++i) {
    const std::uint64_t* r = row(i);
    for (std::size_t w = (static_cast<std::size_t>(i) >> 6); w < words_; ++w) {
      std::uint64_t bitsw = r[w];
      if (w == (static_cast<std::size_t>(i) >> 6)) {
        // keep only j > i within this word
        const int bit = i & 63;
        bitsw &= (bit == 63) ? 0ULL : ~((2ULL << bit) - 1ULL);
      }
      while (bitsw) {
        const int b = std::countr_zero(bitsw);
        bitsw &= bitsw - 1;
        out.emplace_back(i, static_cast<int>(w * 64) + b);
      }
    }
  }
  return out;
}

std::int64_t Graph::triangle_count() const {
  // For each edge (i, j) with i < j, count common neighbors k > j; every
  // triangle is then seen exactly once at its smallest two vertices.
  std::int64_t t = 0;
  for (int i = 0; i < n_; ++i) {
    const std::uint64_t* ri = row(i);
    for (int j = i + 1; j < n_; ++j) {
      if (!has_edge(i, j)) continue;
      const std::uint64_t* rj = row(j);
      const std::size_t wj = static_cast<std::size_t>(j) >> 6;
      const int bit = j & 63;
      std::uint64_t first = ri[wj] & rj[wj];
      first &= (bit == 63) ? 0ULL : ~((2ULL << bit) - 1ULL);
      t += std::popcount(first);
      for (std::size_t w = wj + 1; w < words_; ++w) t += std::popcount(ri[w] & rj[w]);
    }
  }
  return t;
}

std::int64_t Graph::wedge_count() const {
  std::int64_t w = 0;
  for (int i = 0; i < n_; ++i) {
    const std::int64_t d = degree(i);
    w += d * (d - 1) / 2;
  }
  return w;
}

void write_graph(const Graph& g, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ValidationError("write_graph: cannot open " + path);
  os << "n " << g.n() << " m " << g.edge_count() << "\n";
  for (auto [i, j] : g.edges()) os << (i + 1) << " " << (j + 1) << "\n";
  if (!os) throw ValidationError("write_graph: write failed for " + path);
}

Graph read_graph(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("read_graph: cannot open " + path);
  std::string tn, tm;
  int n = 0;
  std::int64_t m = 0;
  if (!(is >> tn >> n >> tm >> m) || tn != "n" || tm != "m" || n < 1 || m < 0)
    throw ValidationError("read_graph: bad header");
  Graph g(n);
  for (std::int64_t e = 0; e < m; ++e) {
    int i = 0, j = 0;
    if (!(is >> i >> j)) throw ValidationError("read_graph: truncated file");
    if (i < 1 || j < 1 || i > n || j > n) throw ValidationError("read_graph: vertex out of range");
    if (i == j) throw ValidationError("read_graph: self-loop");
    if (i > j) throw ValidationError("read_graph: edges must be listed as i < j");
    if (g.has_edge(i - 1, j - 1)) throw ValidationError("read_graph: duplicate edge");
    g.set_edge(i - 1, j - 1);
  }
  int extra_i = 0, extra_j = 0;
  if (is >> extra_i >> extra_j) throw ValidationError("read_graph: more edges than declared");
  return g;
}

}  // namespace pdc
