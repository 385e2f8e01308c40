#pragma once

// Brute-force finite-volume splitting measures. Every configuration of the
// truncated tree is enumerated, which is only feasible for tiny trees and
// is meant as an independent check of the compatibility equations.

#include <functional>
#include <vector>

#include "pottssos/model.hpp"
#include "pottssos/tree.hpp"

namespace pottssos {

// Builds the field assignment for a given tree, e.g. a constant field or a
// parity-alternating pair. Applied to both depths in consistency_gap.
using FieldRule = std::function<FieldAssignment(const FiniteTree&)>;

FieldRule constant_rule(BoundaryField h);
FieldRule parity_rule(BoundaryField h_even, BoundaryField h_odd);

struct OracleOptions {
  std::size_t max_vertices = 20;
  // 0 picks std::thread::hardware_concurrency(). The result does not depend
  // on this value.
  unsigned threads = 0;
};

// prod_edges edge_weight(s(x), s(y)) * prod_{x in W_n} exp(h_{s(x), x}).
double splitting_weight(const SpinConfiguration& config, const FieldAssignment& fields,
                        const FiniteTree& tree, const ModelParams& params);

// P(s(v) = i), i = 0..m, by full enumeration.
std::vector<double> exact_marginal(const FiniteTree& tree, const FieldAssignment& fields,
                                   const ModelParams& params, Vertex v,
                                   const OracleOptions& options = {});

// Joint law of the spins on vertices [0, level_end(inner_depth)), indexed in
// mixed radix with vertex 0 as the least significant digit.
std::vector<double> exact_inner_distribution(const FiniteTree& tree,
                                             const FieldAssignment& fields,
                                             const ModelParams& params, int inner_depth,
                                             const OracleOptions& options = {});

// Total-variation distance between the depth-n measure marginalized to the
// depth-(n-1) volume and the depth-(n-1) measure, both built from rule.
// Requires depth >= 1. Throws SizeError above the vertex cap.
double consistency_gap(int k, int depth, const FieldRule& rule, const ModelParams& params,
                       const OracleOptions& options = {});

}  // namespace pottssos
