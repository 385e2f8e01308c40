#include "pottssos/tree.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "pottssos/errors.hpp"

namespace pottssos {

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  if (b > std::numeric_limits<std::size_t>::max() - a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a + b;
}

void check_shape(int k, int depth) {
  if (k < 1) throw DomainError("branching order k must be >= 1, got " + std::to_string(k));
  if (depth < 0) throw DomainError("tree depth must be >= 0, got " + std::to_string(depth));
}

}  // namespace

std::size_t tree_vertex_count(int k, int depth, RootMode root_mode) {
  check_shape(k, depth);
  const auto kk = static_cast<std::size_t>(k);
  std::size_t level_size = 1;
  std::size_t total = 1;
  for (int d = 1; d <= depth; ++d) {
    const std::size_t fanout = (d == 1 && root_mode == RootMode::full) ? kk + 1 : kk;
    level_size = saturating_mul(level_size, fanout);
    total = saturating_add(total, level_size);
  }
  return total;
}

FiniteTree::FiniteTree(int k, int depth, RootMode root_mode)
    : k_(k), depth_(depth), root_mode_(root_mode) {
  check_shape(k, depth);
  const std::size_t n = tree_vertex_count(k, depth, root_mode);
  parent_.reserve(n);
  level_.reserve(n);
  children_.reserve(n);

  parent_.push_back(0);
  level_.push_back(0);
  children_.emplace_back();
  level_end_.push_back(1);

  std::size_t level_begin = 0;
  for (int d = 1; d <= depth; ++d) {
    const std::size_t prev_end = parent_.size();
    const int fanout = (d == 1 && root_mode == RootMode::full) ? k + 1 : k;
    for (Vertex p = level_begin; p < prev_end; ++p) {
      for (int c = 0; c < fanout; ++c) {
        const Vertex child = parent_.size();
        parent_.push_back(p);
        level_.push_back(d);
        children_.emplace_back();
        children_[p].push_back(child);
      }
    }
    level_begin = prev_end;
    level_end_.push_back(parent_.size());
  }
}

Vertex FiniteTree::parent(Vertex v) const {
  if (v == root() || v >= vertex_count()) {
    throw DomainError("vertex " + std::to_string(v) + " has no parent");
  }
  return parent_[v];
}

std::size_t FiniteTree::level_end(int d) const {
  if (d < 0 || d > depth_) {
    throw DomainError("level " + std::to_string(d) + " outside [0, " + std::to_string(depth_) +
                      "]");
  }
  return level_end_[static_cast<std::size_t>(d)];
}

std::vector<Vertex> FiniteTree::boundary() const {
  const std::size_t begin = depth_ == 0 ? 0 : level_end_[static_cast<std::size_t>(depth_ - 1)];
  std::vector<Vertex> out;
  for (Vertex v = begin; v < vertex_count(); ++v) out.push_back(v);
  return out;
}

int FiniteTree::distance(Vertex a, Vertex b) const {
  int steps = 0;
  while (a != b) {
    if (level(a) >= level(b)) {
      a = parent_[a];
    } else {
      b = parent_[b];
    }
    ++steps;
  }
  return steps;
}

std::vector<std::pair<Vertex, Vertex>> FiniteTree::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex v = 1; v < vertex_count(); ++v) out.emplace_back(parent_[v], v);
  return out;
}

FiniteTree build_tree(int k, int depth, const TreeOptions& options) {
  const std::size_t n = tree_vertex_count(k, depth, options.root_mode);
  if (n > options.max_vertices) {
    std::ostringstream msg;
    msg << "tree with k=" << k << ", depth=" << depth << " has ";
    if (n == std::numeric_limits<std::size_t>::max()) {
      msg << "too many";
    } else {
      msg << n;
    }
    msg << " vertices, above the enumeration cap of " << options.max_vertices << " ("
        << options.states << "^" << n << " configurations)";
    throw SizeError(msg.str());
  }
  return FiniteTree(k, depth, options.root_mode);
}

Parity sublattice_parity(const FiniteTree& tree, Vertex v) {
  return tree.level(v) % 2 == 0 ? Parity::even : Parity::odd;
}

Parity sublattice_parity_from(const FiniteTree& tree, Vertex origin, Vertex v) {
  return tree.distance(origin, v) % 2 == 0 ? Parity::even : Parity::odd;
}

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

}  // namespace pottssos
