#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "thetakit/rational.hpp"

namespace thetakit {

/// Exact element of a cyclotomic field Q(zeta_N), stored as a rational
/// combination of the roots of unity zeta_N^k and kept reduced modulo the
/// N-th cyclotomic polynomial. Vanishing sums of roots of unity such as
/// 1 + zeta_3 + zeta_3^2 are therefore recognized as zero exactly.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
  Cyclotomic(const Rational& r) : order_(1), coeffs_(1, r) {}
  Cyclotomic(long n) : Cyclotomic(Rational(n)) {}

  /// e^{2 pi i turns}, turns taken mod 1.
  static Cyclotomic root_of_unity(const Rational& turns);

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws InvariantViolation if not rational

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic conjugate() const;
  Cyclotomic inverse() const;  // throws InvariantViolation on zero

  std::complex<double> to_complex() const;

  /// Reduced term list as (scalar, turn) pairs with turn = k/N in [0,1),
  /// suitable for serialization as scalar * e^{2 pi i turn}.
  std::vector<std::pair<Rational, Rational>> terms() const;

  unsigned order() const { return order_; }

 private:
  Cyclotomic(unsigned order, std::vector<Rational> coeffs);
  Cyclotomic lifted(unsigned target_order) const;
  void reduce();

  unsigned order_;
  std::vector<Rational> coeffs_;  // index k holds the coefficient of zeta_order^k
};

/// Coefficient vector of the n-th cyclotomic polynomial (index = power of x).
const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

}  // namespace thetakit
