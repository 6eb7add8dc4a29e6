#include "pdc/edge_subset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pdc/errors.hpp"

namespace pdc {

EdgeSubset::EdgeSubset(std::vector<std::pair<int, int>> edges) {
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0) throw ValidationError("EdgeSubset: negative vertex");
    if (a == b) throw ValidationError("EdgeSubset: self-loop");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ValidationError("EdgeSubset: duplicate edge");
  edges_ = std::move(edges);

  for (auto [a, b] : edges_) {
    vertices_.push_back(a);
    vertices_.push_back(b);
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

  // local indices for union-find and degrees
  std::map<int, int> local;
  for (std::size_t k = 0; k < vertices_.size(); ++k) local[vertices_[k]] = static_cast<int>(k);

  std::vector<int> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };

  std::vector<int> deg(vertices_.size(), 0);
  for (auto [a, b] : edges_) {
    const int la = local[a], lb = local[b];
    ++deg[static_cast<std::size_t>(la)];
    ++deg[static_cast<std::size_t>(lb)];
    parent[static_cast<std::size_t>(find(la))] = find(lb);
  }

  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (find(static_cast<int>(k)) == static_cast<int>(k)) ++components_;
  dangling_ = std::any_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
}

}  // namespace pdc
