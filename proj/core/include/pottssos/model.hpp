#pragma once

// Potts-SOS model on a Cayley tree: parameters, spin conventions, the
// Hamiltonian and the boundary-law transfer map.
//
// Spins take values in {0, ..., m} (m + 1 states). A boundary field stores
// the first m components h_0..h_{m-1}; the last one is normalized to
// h_m = 0 and never stored.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pottssos/tree.hpp"

namespace pottssos {

using Spin = int;

struct Couplings {
  double J = 0.0;
  double Jp = 0.0;
  double beta = 1.0;

  double temperature() const { return 1.0 / beta; }
};

class ModelParams {
 public:
  // theta = exp(J beta), r = exp(Jp beta). Throws OverflowError when either
  // exponential is not finite and DomainError on beta <= 0, m < 1, k < 1.
  static ModelParams from_couplings(double J, double Jp, double beta, int m = 2, int k = 2);

  // Activities given directly; couplings() is then empty.
  static ModelParams from_activities(double theta, double r, int m = 2, int k = 2);

  double theta() const { return theta_; }
  double r() const { return r_; }
  int m() const { return m_; }
  int k() const { return k_; }
  int states() const { return m_ + 1; }
  const std::optional<Couplings>& couplings() const { return couplings_; }

  ModelParams with_k(int k) const;

 private:
  ModelParams(double theta, double r, int m, int k, std::optional<Couplings> c);

  double theta_;
  double r_;
  int m_;
  int k_;
  std::optional<Couplings> couplings_;
};

class BoundaryField {
 public:
  BoundaryField() = default;
  // Throws DomainError on empty input or non-finite components.
  explicit BoundaryField(std::vector<double> h);

  // m, the number of stored components.
  std::size_t size() const { return h_.size(); }
  double operator[](std::size_t i) const { return h_[i]; }
  // Component i for i in [0, m]; i == m yields the normalization 0.
  double component(std::size_t i) const { return i < h_.size() ? h_[i] : 0.0; }
  std::span<const double> values() const { return h_; }

  friend bool operator==(const BoundaryField&, const BoundaryField&) = default;

 private:
  std::vector<double> h_;
};

// flip(h)_i = h_{m-i} - h_0: the image of h under the spin reversal i -> m - i,
// renormalized so the last component is again zero.
BoundaryField flip(const BoundaryField& h);

double max_abs_difference(const BoundaryField& a, const BoundaryField& b);

// Spin per vertex, indexed by Vertex.
class SpinConfiguration {
 public:
  SpinConfiguration() = default;
  explicit SpinConfiguration(std::vector<Spin> spins) : spins_(std::move(spins)) {}

  std::size_t size() const { return spins_.size(); }
  Spin operator[](Vertex v) const { return spins_[v]; }
  Spin& operator[](Vertex v) { return spins_[v]; }
  std::span<const Spin> spins() const { return spins_; }

 private:
  std::vector<Spin> spins_;
};

// theta^{|i-j|} r^{delta_ij}. Throws DomainError for spins outside [0, m].
double edge_weight(Spin i, Spin j, const ModelParams& params);

// -J sum |s(x)-s(y)| - Jp sum delta(s(x), s(y)) over tree edges. Needs the
// couplings; throws CouplingsUnavailable otherwise. Throws DomainError when
// the configuration does not cover the tree or holds out-of-range spins.
double hamiltonian(const SpinConfiguration& config, const FiniteTree& tree,
                   const ModelParams& params);

// Per-child contribution F(h) to the parent field. Evaluated with the
// exponents shifted by max(h_j, 0) so that large |h| cannot overflow.
BoundaryField transfer_map(const BoundaryField& h, const ModelParams& params);

// Boundary field per vertex. Entries may be absent; reading an absent entry
// throws std::out_of_range naming the vertex.
class FieldAssignment {
 public:
  FieldAssignment() = default;
  explicit FieldAssignment(std::size_t vertex_count) : fields_(vertex_count) {}

  static FieldAssignment constant(const FiniteTree& tree, const BoundaryField& h);
  // Even-depth vertices get h_even, odd-depth ones h_odd. Depth is measured
  // from origin (the root by default).
  static FieldAssignment parity_alternating(const FiniteTree& tree, const BoundaryField& h_even,
                                            const BoundaryField& h_odd,
                                            Vertex origin = FiniteTree::root());

  std::size_t size() const { return fields_.size(); }
  bool has(Vertex v) const { return v < fields_.size() && fields_[v].has_value(); }
  const BoundaryField& at(Vertex v) const;
  void set(Vertex v, BoundaryField h);
  void erase(Vertex v);

  friend bool operator==(const FieldAssignment&, const FieldAssignment&) = default;

 private:
  std::vector<std::optional<BoundaryField>> fields_;
};

// max over non-boundary x of || h_x - sum_{y in S(x)} F(h_y) ||_inf.
// Zero exactly when the compatibility equations hold on the tree.
double compatibility_residual(const FieldAssignment& fields, const FiniteTree& tree,
                              const ModelParams& params);

}  // namespace pottssos
