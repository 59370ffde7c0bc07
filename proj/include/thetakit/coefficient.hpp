#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thetakit/cyclotomic.hpp"
#include "thetakit/phase.hpp"

namespace thetakit {

/// Exact complex scalar of the kernel: a finite sum
///     sum_i  c_i * e^{2 pi i (q_i . params)}
/// with cyclotomic c_i and purely linear exponents q_i. Rational constants in
/// phase exponents are folded into the cyclotomic part, so the zero test is
/// sound: for generic (algebraically independent) parameters the phase
/// monomials are linearly independent over the cyclotomics.
class Coefficient {
 public:
  Coefficient() = default;
  static Coefficient zero() { return Coefficient(); }
  static Coefficient one() { return from_rational(Rational(1)); }
  static Coefficient from_rational(const Rational& q);
  static Coefficient from_cyclotomic(const Cyclotomic& c);
  static Coefficient from_phase(const PhaseExponent& p, const Rational& scalar = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_value() const;  // throws if not a plain rational
  size_t term_count() const { return terms_.size(); }

  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }
  bool operator==(const Coefficient& o) const { return (*this - o).is_zero(); }
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

  Coefficient scaled(const Rational& q) const;
  Coefficient phase_shifted(const PhaseExponent& p) const;  // multiply by e^{2 pi i p}
  Coefficient conjugated() const;

  /// True when the value is a single term c * e^{2 pi i q.params}; such
  /// values are units of the ring.
  bool is_single_term() const { return terms_.size() == 1; }
  /// Inverse of a single-term value. Throws InvariantViolation otherwise.
  Coefficient unit_inverse() const;
  /// Single-term unit built from the leading term (smallest monomial key).
  Coefficient leading_term_unit() const;

  Coefficient substituted(const ParamSubstitution& sub) const;
  std::complex<double> to_complex() const;  // requires all parameters substituted away

  /// Canonical term list as (rational scalar, exponent) pairs; the exponent
  /// carries the cyclotomic part in its constant. Used by serialization.
  std::vector<std::pair<Rational, PhaseExponent>> canonical_terms() const;

  void collect_parameters(std::set<std::string>& out) const;

  std::string to_string() const;

 private:
  void insert(const LinearTerms& key, const Cyclotomic& value);
  std::map<LinearTerms, Cyclotomic> terms_;
};

}  // namespace thetakit
