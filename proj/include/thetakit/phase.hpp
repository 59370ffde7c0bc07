#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thetakit/rational.hpp"

namespace thetakit {

/// Integer weight vector in Z^d labeling an isotypic component.
using Weight = std::vector<int>;

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_neg(const Weight& a);
bool weight_is_zero(const Weight& a);
std::string weight_to_string(const Weight& a);

using LinearTerms = std::vector<std::pair<std::string, Rational>>;  // sorted by name

/// Substitution of parameter symbols by affine forms (constants included).
class AffineForm;
using ParamSubstitution = std::map<std::string, AffineForm>;

/// Rational-affine form c + sum_i q_i * p_i in named symbolic parameters.
/// Parameters are treated as algebraically independent generic reals.
class AffineForm {
 public:
  AffineForm() : constant_(0) {}
  AffineForm(const Rational& c) : constant_(c) {}
  AffineForm(long c) : constant_(c) {}
  static AffineForm symbol(const std::string& name, const Rational& coeff = Rational(1));

  const Rational& constant() const { return constant_; }
  const LinearTerms& terms() const { return terms_; }

  bool is_zero() const { return constant_ == 0 && terms_.empty(); }
  bool is_constant() const { return terms_.empty(); }

  AffineForm operator+(const AffineForm& o) const;
  AffineForm operator-(const AffineForm& o) const;
  AffineForm operator-() const;
  AffineForm operator*(const Rational& s) const;
  AffineForm& operator+=(const AffineForm& o) { return *this = *this + o; }
  AffineForm& operator-=(const AffineForm& o) { return *this = *this - o; }

  bool operator==(const AffineForm& o) const {
    return constant_ == o.constant_ && terms_ == o.terms_;
  }
  bool operator!=(const AffineForm& o) const { return !(*this == o); }
  bool operator<(const AffineForm& o) const;  // arbitrary total order for map keys

  AffineForm substituted(const ParamSubstitution& sub) const;
  Rational coefficient_of(const std::string& name) const;
  void collect_parameters(std::set<std::string>& out) const;

  /// Scales to coprime integer coefficients with positive leading coefficient
  /// (first parameter in name order, else the constant). Zero stays zero.
  AffineForm primitive_normalized() const;

  std::string to_string() const;
  std::string to_latex() const;

 private:
  Rational constant_;
  LinearTerms terms_;
};

/// Exponent x of a unit-modulus phase e^{2 pi i x}: an affine form whose
/// constant part is kept reduced to [0, 1). Parameter coefficients are not
/// reduced; parameters are generic reals, so only the constant lives on the
/// circle.
class PhaseExponent {
 public:
  PhaseExponent() = default;
  explicit PhaseExponent(AffineForm f) : form_(std::move(f)) { canonicalize(); }

  const AffineForm& form() const { return form_; }
  const Rational& constant() const { return form_.constant(); }
  const LinearTerms& linear_terms() const { return form_.terms(); }

  bool is_zero() const { return form_.is_zero(); }

  PhaseExponent operator+(const PhaseExponent& o) const {
    return PhaseExponent(form_ + o.form_);
  }
  PhaseExponent operator-() const { return PhaseExponent(-form_); }
  PhaseExponent operator-(const PhaseExponent& o) const { return *this + (-o); }
  PhaseExponent operator*(const Rational& s) const { return PhaseExponent(form_ * s); }

  bool operator==(const PhaseExponent& o) const { return form_ == o.form_; }
  bool operator!=(const PhaseExponent& o) const { return !(*this == o); }

  std::string to_string() const { return form_.to_string(); }

 private:
  void canonicalize();
  AffineForm form_;
};

/// Real antisymmetric matrix with rational-affine entries; the data of a
/// deformation. Entry (j,k) must equal the negation of entry (k,j).
class DeformationMatrix {
 public:
  DeformationMatrix() : dim_(0) {}
  DeformationMatrix(int dim, std::vector<AffineForm> entries);  // row-major, validated
  static DeformationMatrix zero(int dim);

  int dim() const { return dim_; }
  const AffineForm& entry(int j, int k) const { return entries_[j * dim_ + k]; }
  bool is_zero() const;
  bool operator==(const DeformationMatrix& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
  }

  /// r . (theta s) for integer weights r, s of matching dimension.
  AffineForm pairing(const Weight& r, const Weight& s) const;

  DeformationMatrix direct_sum(const DeformationMatrix& o) const;
  DeformationMatrix negated() const;
  DeformationMatrix substituted(const ParamSubstitution& sub) const;
  void collect_parameters(std::set<std::string>& out) const;

 private:
  int dim_;
  std::vector<AffineForm> entries_;
};

/// Bicharacter exponent: chi(r, s) = e^{2 pi i chi_exp} with
/// chi_exp = (1/2) r . (theta s).
PhaseExponent chi(const DeformationMatrix& theta, const Weight& r, const Weight& s);

/// Full exchange exponent r . (theta s): homogeneous a_r, b_s satisfy
/// a_r x b_s = e^{2 pi i exchange} b_s x a_r.
PhaseExponent exchange_phase(const DeformationMatrix& theta, const Weight& r, const Weight& s);

/// The 2n x 2n block matrix K (+) (-K) used to deform a rank-n group along
/// its two-sided torus translation action.
DeformationMatrix make_quantum_group_matrix(const DeformationMatrix& K);

}  // namespace thetakit
