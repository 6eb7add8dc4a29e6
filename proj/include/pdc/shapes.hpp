#pragma once
// shapes.hpp — isomorphism classes of small edge sets

#include <cstdint>
#include <string>
#include <vector>

#include "pdc/edge_subset.hpp"

namespace pdc {

// Canonical representative of an unlabeled graph with no isolated vertices,
// vertices relabeled 0..v-1. id is the canonical edge list, 1-based, e.g.
// "12.13.23" for a triangle.
struct Shape {
  EdgeSubset edges;
  std::uint64_t automorphisms = 1;
  std::string id;

  int edge_count() const { return edges.edge_count(); }
  int vertex_count() const { return edges.vertex_count(); }

  // Number of labeled copies inside a complete graph on n vertices:
  // n(n-1)...(n-v+1) / |Aut|.
  double embeddings(int n) const;
};

// All isomorphism classes with 1..max_edges edges on at most vertex_budget
// vertices (vertex_budget <= 8), sorted by (edge count, id).
std::vector<Shape> enumerate_shapes(int max_edges, int vertex_budget = 8);

// Same, but vertices 0 and 1 are a distinguished unordered root pair and the
// canonical form only ranges over root-preserving relabelings.
struct RootedShape {
  EdgeSubset edges;  // roots are vertices 0 and 1
  std::uint64_t automorphisms = 1;  // root-set-preserving automorphisms
  std::string id;

  int edge_count() const { return edges.edge_count(); }
  int vertex_count() const { return edges.vertex_count(); }

  // Labeled copies in a complete graph on n vertices with the roots pinned to
  // a fixed vertex pair: (n-2)(n-3)...(n-v+1) * 2 / |Aut|.
  double embeddings(int n) const;
};

// Connected shapes containing both roots, 1..max_edges edges, sorted by
// (edge count, id).
std::vector<RootedShape> enumerate_rooted_connected(int max_edges);

// Canonical rooted id of an arbitrary edge set over vertices {0,1,...} with
// roots {0,1}; used to look sub-shapes up in tables.
std::string rooted_canonical_id(const EdgeSubset& alpha);

}  // namespace pdc
