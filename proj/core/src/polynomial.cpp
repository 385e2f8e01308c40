#include "pottssos/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "pottssos/errors.hpp"

namespace pottssos {

template <class T>
void BasicPolynomial<T>::trim() {
  while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
}

template <class T>
T BasicPolynomial<T>::max_abs_coeff() const {
  T m = 0;
  for (T c : c_) m = std::max(m, std::abs(c));
  return m;
}

template <class T>
T BasicPolynomial<T>::operator()(T x) const {
  T acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <class T>
BasicPolynomial<T> BasicPolynomial<T>::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<T> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<T>(i) * c_[i];
  return BasicPolynomial(std::move(d));
}

template <class T>
BasicPolynomial<T>& BasicPolynomial<T>::operator+=(const BasicPolynomial& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), T(0));
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  trim();
  return *this;
}

template <class T>
BasicPolynomial<T> BasicPolynomial<T>::multiply(const BasicPolynomial& a,
                                                const BasicPolynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return BasicPolynomial(std::move(out));
}

template <class T>
BasicDivisionResult<T> divide(const BasicPolynomial<T>& a, const BasicPolynomial<T>& b) {
  if (b.degree() < 0) throw DomainError("polynomial division by zero");
  std::vector<T> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {BasicPolynomial<T>{}, a};

  const int dq = a.degree() - db;
  std::vector<T> q(static_cast<std::size_t>(dq) + 1, T(0));
  for (int i = dq; i >= 0; --i) {
    const T factor = rem[static_cast<std::size_t>(i + db)] / b.leading();
    q[static_cast<std::size_t>(i)] = factor;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= factor * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  // The constructor only strips exact zeros, so near-zero remainder
  // coefficients survive for the caller to measure.
  return {BasicPolynomial<T>(std::move(q)), BasicPolynomial<T>(std::move(rem))};
}

template class BasicPolynomial<double>;
template class BasicPolynomial<long double>;
template BasicDivisionResult<double> divide(const BasicPolynomial<double>&,
                                            const BasicPolynomial<double>&);
template BasicDivisionResult<long double> divide(const BasicPolynomial<long double>&,
                                                 const BasicPolynomial<long double>&);

std::vector<double> positive_real_roots(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) return {};

  std::vector<double> candidates;
  if (n == 1) {
    candidates.push_back(-p.coeff(0) / p.coeff(1));
  } else {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(i) / p.leading();
    const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    for (const auto& lambda : solver.eigenvalues()) {
      if (std::abs(lambda.imag()) <= 1e-6 * std::max(1.0, std::abs(lambda))) {
        candidates.push_back(lambda.real());
      }
    }
  }

  const Polynomial dp = p.derivative();
  std::vector<double> roots;
  for (double x : candidates) {
    for (int it = 0; it < 8; ++it) {
      const double d = dp(x);
      if (d == 0.0) break;
      const double step = p(x) / d;
      const double next = x - step;
      if (!std::isfinite(next)) break;
      x = next;
      if (std::abs(step) <= 1e-15 * std::abs(x)) break;
    }
    if (x > 0.0) roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double x : roots) {
    if (out.empty() || std::abs(x - out.back()) > 1e-8 * std::max(std::abs(x), 1e-300)) {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace pottssos
