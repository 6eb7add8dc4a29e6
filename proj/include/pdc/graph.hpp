#pragma once
// graph.hpp — dense undirected simple graph with bit-row storage

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pdc {

// Vertices 0..n-1, symmetric adjacency, zero diagonal. Rows are bit vectors
// so neighborhood intersections run word-parallel.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  bool has_edge(int i, int j) const {
    return (row(i)[static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1u;
  }

  // i != j required; setting an existing edge is a no-op.
  void set_edge(int i, int j);

  int degree(int i) const;

  const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * words_; }
  std::size_t words_per_row() const { return words_; }

  // Sorted (i,j) pairs with i < j.
  std::vector<std::pair<int, int>> edges() const;

  // Unordered triangles and unordered 2-edge paths.
  std::int64_t triangle_count() const;
  std::int64_t wedge_count() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Text format: header "n <count> m <edges>", then one "<i> <j>" line per edge
// with i < j, 1-based. The reader rejects out-of-range vertices, self-loops,
// inverted order, duplicates, and edge-count mismatches.
void write_graph(const Graph& g, const std::string& path);
Graph read_graph(const std::string& path);

}  // namespace pdc
