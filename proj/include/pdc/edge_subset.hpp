#pragma once
// edge_subset.hpp — finite vertex-pair sets with cached structure

#include <utility>
#include <vector>

namespace pdc {

// A set of unordered vertex pairs. Construction normalizes each pair to
// (min,max), sorts, and rejects loops and duplicates; structural facts that
// product statistics branch on (support, components, dangling edges) are
// computed once and cached.
class EdgeSubset {
 public:
  EdgeSubset() = default;  // the empty set
  explicit EdgeSubset(std::vector<std::pair<int, int>> edges);

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& vertices() const { return vertices_; }

  int edge_count() const { return static_cast<int>(edges_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  bool empty() const { return edges_.empty(); }

  // Connected components of the support (0 for the empty set).
  int component_count() const { return components_; }

  // True if some support vertex has degree exactly 1.
  bool has_dangling_edge() const { return dangling_; }

  bool operator==(const EdgeSubset&) const = default;

 private:
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> vertices_;
  int components_ = 0;
  bool dangling_ = false;
};

}  // namespace pdc
