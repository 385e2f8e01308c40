#include "pottssos/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "pottssos/errors.hpp"

namespace pottssos {

namespace {

void check_shape(int m, int k) {
  if (m < 1) throw DomainError("state parameter m must be >= 1, got " + std::to_string(m));
  if (k < 1) throw DomainError("branching order k must be >= 1, got " + std::to_string(k));
}

double checked_exp(double x, const char* what) {
  const double v = std::exp(x);
  if (!std::isfinite(v) || v <= 0.0) {
    std::ostringstream msg;
    msg << "exp(" << what << ") overflows: " << what << " = " << x;
    throw OverflowError(msg.str());
  }
  return v;
}

void check_spin(Spin s, const ModelParams& params) {
  if (s < 0 || s > params.m()) {
    throw DomainError("spin " + std::to_string(s) + " outside [0, " + std::to_string(params.m()) +
                      "]");
  }
}

}  // namespace

ModelParams::ModelParams(double theta, double r, int m, int k, std::optional<Couplings> c)
    : theta_(theta), r_(r), m_(m), k_(k), couplings_(c) {}

ModelParams ModelParams::from_couplings(double J, double Jp, double beta, int m, int k) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("beta must be positive and finite");
  }
  if (!std::isfinite(J) || !std::isfinite(Jp)) throw DomainError("couplings must be finite");
  check_shape(m, k);
  const double theta = checked_exp(J * beta, "J*beta");
  const double r = checked_exp(Jp * beta, "Jp*beta");
  return ModelParams(theta, r, m, k, Couplings{J, Jp, beta});
}

ModelParams ModelParams::from_activities(double theta, double r, int m, int k) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw DomainError("theta must be positive and finite");
  }
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("r must be positive and finite");
  check_shape(m, k);
  return ModelParams(theta, r, m, k, std::nullopt);
}

ModelParams ModelParams::with_k(int k) const {
  check_shape(m_, k);
  return ModelParams(theta_, r_, m_, k, couplings_);
}

BoundaryField::BoundaryField(std::vector<double> h) : h_(std::move(h)) {
  if (h_.empty()) throw DomainError("boundary field needs at least one component");
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (!std::isfinite(h_[i])) {
      throw DomainError("boundary field component " + std::to_string(i) + " is not finite");
    }
  }
}

BoundaryField flip(const BoundaryField& h) {
  const std::size_t m = h.size();
  std::vector<double> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = h.component(m - i) - h.component(0);
  return BoundaryField(std::move(out));
}

double max_abs_difference(const BoundaryField& a, const BoundaryField& b) {
  if (a.size() != b.size()) throw DomainError("boundary fields differ in length");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double edge_weight(Spin i, Spin j, const ModelParams& params) {
  check_spin(i, params);
  check_spin(j, params);
  const double w = std::pow(params.theta(), std::abs(i - j));
  return i == j ? w * params.r() : w;
}

double hamiltonian(const SpinConfiguration& config, const FiniteTree& tree,
                   const ModelParams& params) {
  const auto& c = params.couplings();
  if (!c) throw CouplingsUnavailable();
  if (config.size() != tree.vertex_count()) {
    throw DomainError("configuration has " + std::to_string(config.size()) +
                      " spins for a tree with " + std::to_string(tree.vertex_count()) +
                      " vertices");
  }
  double sos = 0.0;
  double potts = 0.0;
  for (const auto& [x, y] : tree.edges()) {
    check_spin(config[x], params);
    check_spin(config[y], params);
    sos += std::abs(config[x] - config[y]);
    if (config[x] == config[y]) potts += 1.0;
  }
  return -c->J * sos - c->Jp * potts;
}

BoundaryField transfer_map(const BoundaryField& h, const ModelParams& params) {
  const int m = params.m();
  if (h.size() != static_cast<std::size_t>(m)) {
    throw DomainError("boundary field has " + std::to_string(h.size()) +
                      " components, expected m = " + std::to_string(m));
  }
  const double shift = std::max(0.0, *std::max_element(h.values().begin(), h.values().end()));

  std::vector<double> scaled(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) scaled[j] = std::exp(h.component(j) - shift);

  // Terms are added by increasing |i - j|, so rows i and m - i see the same
  // sequence of weights. At h = 0 this makes row 0 and row m bit-identical.
  const auto row_sum = [&](int i) {
    double s = params.r() * scaled[i];
    double w = 1.0;
    for (int d = 1; d <= m; ++d) {
      w *= params.theta();
      if (i - d >= 0) s += w * scaled[i - d];
      if (i + d <= m) s += w * scaled[i + d];
    }
    return s;
  };

  const double log_den = std::log(row_sum(m));
  std::vector<double> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out[i] = std::log(row_sum(i)) - log_den;
  return BoundaryField(std::move(out));
}

FieldAssignment FieldAssignment::constant(const FiniteTree& tree, const BoundaryField& h) {
  FieldAssignment f(tree.vertex_count());
  for (Vertex v = 0; v < tree.vertex_count(); ++v) f.set(v, h);
  return f;
}

FieldAssignment FieldAssignment::parity_alternating(const FiniteTree& tree,
                                                    const BoundaryField& h_even,
                                                    const BoundaryField& h_odd, Vertex origin) {
  FieldAssignment f(tree.vertex_count());
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    f.set(v, sublattice_parity_from(tree, origin, v) == Parity::even ? h_even : h_odd);
  }
  return f;
}

const BoundaryField& FieldAssignment::at(Vertex v) const {
  if (!has(v)) throw std::out_of_range("no boundary field at vertex " + std::to_string(v));
  return *fields_[v];
}

void FieldAssignment::set(Vertex v, BoundaryField h) {
  if (v >= fields_.size()) fields_.resize(v + 1);
  fields_[v] = std::move(h);
}

void FieldAssignment::erase(Vertex v) {
  if (v < fields_.size()) fields_[v].reset();
}

double compatibility_residual(const FieldAssignment& fields, const FiniteTree& tree,
                              const ModelParams& params) {
  const auto m = static_cast<std::size_t>(params.m());
  double worst = 0.0;
  for (Vertex x = 0; x < tree.vertex_count(); ++x) {
    if (tree.children(x).empty()) continue;
    std::vector<double> sum(m, 0.0);
    for (Vertex y : tree.children(x)) {
      const BoundaryField fy = transfer_map(fields.at(y), params);
      for (std::size_t i = 0; i < m; ++i) sum[i] += fy[i];
    }
    const BoundaryField& hx = fields.at(x);
    if (hx.size() != m) {
      throw DomainError("field at vertex " + std::to_string(x) + " has wrong length");
    }
    for (std::size_t i = 0; i < m; ++i) worst = std::max(worst, std::abs(hx[i] - sum[i]));
  }
  return worst;
}

}  // namespace pottssos
