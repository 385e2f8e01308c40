#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pottssos {

// Dense real polynomial, coefficients in ascending powers. Instantiated for
// double and long double.
template <class T>
class BasicPolynomial {
 public:
  BasicPolynomial() = default;
  BasicPolynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit BasicPolynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  T coeff(std::size_t power) const { return power < c_.size() ? c_[power] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }
  T max_abs_coeff() const;

  T operator()(T x) const;
  BasicPolynomial derivative() const;

  BasicPolynomial& operator+=(const BasicPolynomial& other);
  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a + T(-1) * b;
  }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    return multiply(a, b);
  }
  friend BasicPolynomial operator*(T s, BasicPolynomial p) {
    for (T& c : p.c_) c *= s;
    p.trim();
    return p;
  }

 private:
  static BasicPolynomial multiply(const BasicPolynomial& a, const BasicPolynomial& b);
  void trim();
  std::vector<T> c_;
};

using Polynomial = BasicPolynomial<double>;

template <class T>
struct BasicDivisionResult {
  BasicPolynomial<T> quotient;
  BasicPolynomial<T> remainder;
};

// Long division a = b q + r with deg r < deg b. The remainder keeps its full
// length (no cancellation-based trimming) so callers can inspect its size.
template <class T>
BasicDivisionResult<T> divide(const BasicPolynomial<T>& a, const BasicPolynomial<T>& b);

// Positive real roots, ascending. Roots come from the companion-matrix
// eigenvalues, are kept when their imaginary part is small, and get Newton
// polishing against p itself.
std::vector<double> positive_real_roots(const Polynomial& p);

}  // namespace pottssos
