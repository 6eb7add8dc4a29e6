#include "pdc/shapes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pdc/errors.hpp"
#include "pdc/numeric.hpp"

namespace pdc {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList apply_perm(const EdgeList& edges, const std::vector<int>& perm) {
  EdgeList out;
  out.reserve(edges.size());
  for (auto [a, b] : edges) {
    int x = perm[static_cast<std::size_t>(a)];
    int y = perm[static_cast<std::size_t>(b)];
    if (x > y) std::swap(x, y);
    out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string id_of(const EdgeList& edges) {
  std::string s;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k) s += '.';
    s += static_cast<char>('1' + edges[k].first);
    s += static_cast<char>('1' + edges[k].second);
  }
  return s;
}

// Canonical form = lexicographically smallest relabeled edge list; rooted
// variants only range over permutations keeping {0,1} in place as a set.
struct Canon {
  EdgeList edges;
  std::uint64_t automorphisms = 1;
};

Canon canonicalize(const EdgeList& edges, int v, bool rooted) {
  if (v > 9) throw ValidationError("shapes: vertex budget capped at 9 labels");
  std::vector<int> perm(static_cast<std::size_t>(v));
  std::iota(perm.begin(), perm.end(), 0);

  EdgeList best;
  bool have = false;
  do {
    if (rooted && perm[0] + perm[1] != 1) continue;  // roots must map to {0,1}
    EdgeList cand = apply_perm(edges, perm);
    if (!have || cand < best) {
      best = std::move(cand);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t aut = 0;
  do {
    if (rooted && perm[0] + perm[1] != 1) continue;
    if (apply_perm(best, perm) == best) ++aut;
  } while (std::next_permutation(perm.begin(), perm.end()));

  return Canon{std::move(best), aut};
}

// All m-edge subsets of the complete graph on {0..v-1}, filtered by a
// predicate on the resulting EdgeSubset.
template <class Keep, class Emit>
void for_each_subset(int v, int m, Keep&& keep, Emit&& emit) {
  EdgeList all;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) all.emplace_back(i, j);
  const int total = static_cast<int>(all.size());
  if (m > total) return;

  std::vector<int> pick(static_cast<std::size_t>(m));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    EdgeList chosen;
    chosen.reserve(static_cast<std::size_t>(m));
    for (int idx : pick) chosen.push_back(all[static_cast<std::size_t>(idx)]);
    EdgeSubset es(chosen);
    if (keep(es)) emit(std::move(chosen), es);

    int i = m - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - m + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

double Shape::embeddings(int n) const {
  return falling_factorial(n, vertex_count()) / static_cast<double>(automorphisms);
}

double RootedShape::embeddings(int n) const {
  return falling_factorial(n - 2, vertex_count() - 2) * 2.0 / static_cast<double>(automorphisms);
}

std::vector<Shape> enumerate_shapes(int max_edges, int vertex_budget) {
  if (max_edges < 1) throw ValidationError("enumerate_shapes: max_edges must be >= 1");
  if (vertex_budget < 2 || vertex_budget > 8)
    throw ValidationError("enumerate_shapes: vertex_budget must be in 2..8");

  std::map<std::string, Shape> found;
  for (int m = 1; m <= max_edges; ++m) {
    const int vmax = std::min(2 * m, vertex_budget);
    for (int v = 2; v <= vmax; ++v) {
      for_each_subset(
          v, m, [&](const EdgeSubset& es) { return es.vertex_count() == v; },
          [&](EdgeList chosen, const EdgeSubset&) {
            Canon c = canonicalize(chosen, v, false);
            const std::string id = id_of(c.edges);
            if (found.count(id)) return;
            Shape s;
            s.edges = EdgeSubset(c.edges);
            s.automorphisms = c.automorphisms;
            s.id = id;
            found.emplace(id, std::move(s));
          });
    }
  }

  std::vector<Shape> out;
  out.reserve(found.size());
  for (auto& [id, s] : found) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const Shape& x, const Shape& y) {
    if (x.edge_count() != y.edge_count()) return x.edge_count() < y.edge_count();
    return x.id < y.id;
  });
  return out;
}

std::vector<RootedShape> enumerate_rooted_connected(int max_edges) {
  if (max_edges < 1)
    throw ValidationError("enumerate_rooted_connected: max_edges must be >= 1");
  if (max_edges > 6) throw BudgetError("enumerate_rooted_connected: max_edges capped at 6");

  std::map<std::string, RootedShape> found;
  for (int m = 1; m <= max_edges; ++m) {
    // connected with m edges means at most m+1 vertices
    const int vmax = std::min(m + 1, 8);
    for (int v = 2; v <= vmax; ++v) {
      for_each_subset(
          v, m,
          [&](const EdgeSubset& es) {
            if (es.vertex_count() != v || es.component_count() != 1) return false;
            const auto& verts = es.vertices();
            return std::find(verts.begin(), verts.end(), 0) != verts.end() &&
                   std::find(verts.begin(), verts.end(), 1) != verts.end();
          },
          [&](EdgeList chosen, const EdgeSubset&) {
            Canon c = canonicalize(chosen, v, true);
            const std::string id = id_of(c.edges);
            if (found.count(id)) return;
            RootedShape s;
            s.edges = EdgeSubset(c.edges);
            s.automorphisms = c.automorphisms;
            s.id = id;
            found.emplace(id, std::move(s));
          });
    }
  }

  std::vector<RootedShape> out;
  out.reserve(found.size());
  for (auto& [id, s] : found) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const RootedShape& x, const RootedShape& y) {
    if (x.edge_count() != y.edge_count()) return x.edge_count() < y.edge_count();
    return x.id < y.id;
  });
  return out;
}

std::string rooted_canonical_id(const EdgeSubset& alpha) {
  // compact labels: roots keep 0 and 1, other support vertices take 2,3,...
  std::map<int, int> relabel{{0, 0}, {1, 1}};
  for (int u : alpha.vertices()) {
    if (!relabel.count(u)) {
      const int next = static_cast<int>(relabel.size());
      relabel[u] = next;
    }
  }
  const int v = static_cast<int>(relabel.size());
  if (v > 9) throw ValidationError("rooted_canonical_id: too many vertices");
  EdgeList edges;
  edges.reserve(alpha.edges().size());
  for (auto [a, b] : alpha.edges()) edges.emplace_back(relabel[a], relabel[b]);
  return id_of(canonicalize(edges, v, true).edges);
}

}  // namespace pdc
