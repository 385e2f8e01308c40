#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pottssos {

using Vertex = std::size_t;

enum class RootMode {
  // Every vertex, the root included, has k children (the recursion tree).
  half,
  // The root has k + 1 children, as on the full Cayley tree.
  full,
};

enum class Parity { even, odd };

struct TreeOptions {
  RootMode root_mode = RootMode::half;
  // Largest tree the exhaustive oracle is allowed to see.
  std::size_t max_vertices = 20;
  // Spin states per vertex (m + 1); only used for the size-error message.
  int states = 3;
};

// Rooted Cayley tree truncated at depth n. Vertices are numbered in
// breadth-first order, so the vertices of depth <= d are exactly
// [0, level_end(d)).
class FiniteTree {
 public:
  FiniteTree(int k, int depth, RootMode root_mode = RootMode::half);

  int k() const { return k_; }
  int depth() const { return depth_; }
  RootMode root_mode() const { return root_mode_; }

  std::size_t vertex_count() const { return parent_.size(); }
  std::size_t edge_count() const { return vertex_count() - 1; }
  static constexpr Vertex root() { return 0; }

  int level(Vertex v) const { return level_.at(v); }
  // Parent of a non-root vertex.
  Vertex parent(Vertex v) const;
  const std::vector<Vertex>& children(Vertex v) const { return children_.at(v); }
  bool is_boundary(Vertex v) const { return level(v) == depth_; }

  // One past the last vertex of depth <= d.
  std::size_t level_end(int d) const;
  // W_n: vertices at maximal depth.
  std::vector<Vertex> boundary() const;

  // Graph distance along the unique path.
  int distance(Vertex a, Vertex b) const;

  // Edges as (parent, child) pairs in child order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  int k_;
  int depth_;
  RootMode root_mode_;
  std::vector<Vertex> parent_;
  std::vector<int> level_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::size_t> level_end_;
};

// Vertex count 1 + c + c k + ... without building the tree. Saturates at
// SIZE_MAX.
std::size_t tree_vertex_count(int k, int depth, RootMode root_mode = RootMode::half);

// Builds the depth-n tree, refusing anything above options.max_vertices.
// Throws SizeError carrying the configuration count (states^V).
FiniteTree build_tree(int k, int depth, const TreeOptions& options = {});

// Even iff the word length |x| (depth) is even.
Parity sublattice_parity(const FiniteTree& tree, Vertex v);

// Parity of the distance from an arbitrary origin; sublattice_parity is the
// special case origin = root.
Parity sublattice_parity_from(const FiniteTree& tree, Vertex origin, Vertex v);

std::string to_string(Parity p);

}  // namespace pottssos
