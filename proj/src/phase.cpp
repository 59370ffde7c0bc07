#include "thetakit/phase.hpp"

#include <algorithm>
#include <sstream>

#include "thetakit/errors.hpp"

namespace thetakit {

Weight weight_add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw DimensionError("weight dimensions differ");
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight weight_neg(const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool weight_is_zero(const Weight& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

std::string weight_to_string(const Weight& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  os << ")";
  return os.str();
}

AffineForm AffineForm::symbol(const std::string& name, const Rational& coeff) {
  AffineForm f;
  if (coeff != 0) f.terms_.emplace_back(name, coeff);
  return f;
}

AffineForm AffineForm::operator+(const AffineForm& o) const {
  AffineForm r;
  r.constant_ = constant_ + o.constant_;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  while (it != terms_.end() || jt != o.terms_.end()) {
    if (jt == o.terms_.end() || (it != terms_.end() && it->first < jt->first)) {
      r.terms_.push_back(*it++);
    } else if (it == terms_.end() || jt->first < it->first) {
      r.terms_.push_back(*jt++);
    } else {
      Rational c = it->second + jt->second;
      if (c != 0) r.terms_.emplace_back(it->first, c);
      ++it;
      ++jt;
    }
  }
  return r;
}

AffineForm AffineForm::operator-() const {
  AffineForm r;
  r.constant_ = -constant_;
  r.terms_ = terms_;
  for (auto& [name, c] : r.terms_) c = -c;
  return r;
}

AffineForm AffineForm::operator-(const AffineForm& o) const { return *this + (-o); }

AffineForm AffineForm::operator*(const Rational& s) const {
  AffineForm r;
  if (s == 0) return r;
  r.constant_ = constant_ * s;
  r.terms_ = terms_;
  for (auto& [name, c] : r.terms_) c = c * s;
  return r;
}

bool AffineForm::operator<(const AffineForm& o) const {
  if (terms_ != o.terms_) return terms_ < o.terms_;
  return constant_ < o.constant_;
}

AffineForm AffineForm::substituted(const ParamSubstitution& sub) const {
  AffineForm r(constant_);
  for (const auto& [name, c] : terms_) {
    auto it = sub.find(name);
    if (it == sub.end()) {
      r += AffineForm::symbol(name, c);
    } else {
      r += it->second * c;
    }
  }
  return r;
}

Rational AffineForm::coefficient_of(const std::string& name) const {
  for (const auto& [n, c] : terms_) {
    if (n == name) return c;
  }
  return Rational(0);
}

void AffineForm::collect_parameters(std::set<std::string>& out) const {
  for (const auto& [n, c] : terms_) out.insert(n);
}

AffineForm AffineForm::primitive_normalized() const {
  if (is_zero()) return *this;
  // lcm of denominators, gcd of numerators over all coefficients
  mpz_class den(1), num(0);
  auto feed = [&](const Rational& q) {
    if (q == 0) return;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num().get_mpz_t());
  };
  feed(constant_);
  for (const auto& [n, c] : terms_) feed(c);
  Rational scale = Rational(den) / Rational(num);
  if (scale < 0) scale = -scale;
  AffineForm r = *this * scale;
  Rational lead = r.terms_.empty() ? r.constant_ : r.terms_.front().second;
  if (lead < 0) r = -r;
  return r;
}

namespace {

std::string format_terms(const AffineForm& f, bool latex) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const Rational& c, const std::string& sym) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (sym.empty()) {
      os << rational_to_string(a);
      return;
    }
    if (a != 1) os << rational_to_string(a) << (latex ? "" : "*");
    os << sym;
  };
  for (const auto& [name, c] : f.terms()) {
    put(c, latex ? [] (const std::string& n) {
      // theta -> \theta, lambda12 -> \lambda_{12}, otherwise verbatim
      std::string head, digits;
      size_t i = 0;
      while (i < n.size() && !std::isdigit(static_cast<unsigned char>(n[i]))) head += n[i++];
      while (i < n.size()) digits += n[i++];
      std::string out;
      if (head == "theta" || head == "lambda" || head == "alpha" || head == "beta") {
        out = "\\" + head;
      } else {
        out = head;
      }
      if (!digits.empty()) out += "_{" + digits + "}";
      return out;
    }(name) : name);
  }
  if (f.constant() != 0 || first) put(f.constant(), "");
  return os.str();
}

}  // namespace

std::string AffineForm::to_string() const { return format_terms(*this, false); }
std::string AffineForm::to_latex() const { return format_terms(*this, true); }

void PhaseExponent::canonicalize() {
  Rational c = mod_one(form_.constant());
  form_ = AffineForm(c) + (form_ - AffineForm(form_.constant()));
}

DeformationMatrix::DeformationMatrix(int dim, std::vector<AffineForm> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ < 0 || entries_.size() != static_cast<size_t>(dim_) * dim_) {
    throw DimensionError("deformation matrix entry count does not match dimension");
  }
  for (int j = 0; j < dim_; ++j) {
    for (int k = 0; k <= j; ++k) {
      if (entry(j, k) != -entry(k, j)) {
        throw InvariantViolation("deformation matrix must be antisymmetric");
      }
    }
  }
}

DeformationMatrix DeformationMatrix::zero(int dim) {
  return DeformationMatrix(dim, std::vector<AffineForm>(static_cast<size_t>(dim) * dim));
}

bool DeformationMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const AffineForm& e) { return e.is_zero(); });
}

AffineForm DeformationMatrix::pairing(const Weight& r, const Weight& s) const {
  if (static_cast<int>(r.size()) != dim_ || static_cast<int>(s.size()) != dim_) {
    throw DimensionError("weight dimension does not match deformation matrix");
  }
  AffineForm acc;
  for (int j = 0; j < dim_; ++j) {
    if (r[j] == 0) continue;
    for (int k = 0; k < dim_; ++k) {
      if (s[k] == 0) continue;
      acc += entry(j, k) * Rational(static_cast<long>(r[j]) * s[k]);
    }
  }
  return acc;
}

DeformationMatrix DeformationMatrix::direct_sum(const DeformationMatrix& o) const {
  int n = dim_ + o.dim_;
  std::vector<AffineForm> e(static_cast<size_t>(n) * n);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) e[j * n + k] = entry(j, k);
  for (int j = 0; j < o.dim_; ++j)
    for (int k = 0; k < o.dim_; ++k) e[(dim_ + j) * n + (dim_ + k)] = o.entry(j, k);
  return DeformationMatrix(n, std::move(e));
}

DeformationMatrix DeformationMatrix::negated() const {
  std::vector<AffineForm> e = entries_;
  for (AffineForm& x : e) x = -x;
  return DeformationMatrix(dim_, std::move(e));
}

DeformationMatrix DeformationMatrix::substituted(const ParamSubstitution& sub) const {
  std::vector<AffineForm> e = entries_;
  for (AffineForm& x : e) x = x.substituted(sub);
  return DeformationMatrix(dim_, std::move(e));
}

void DeformationMatrix::collect_parameters(std::set<std::string>& out) const {
  for (const AffineForm& e : entries_) e.collect_parameters(out);
}

PhaseExponent chi(const DeformationMatrix& theta, const Weight& r, const Weight& s) {
  return PhaseExponent(theta.pairing(r, s) * make_rational(1, 2));
}

PhaseExponent exchange_phase(const DeformationMatrix& theta, const Weight& r, const Weight& s) {
  return PhaseExponent(theta.pairing(r, s));
}

DeformationMatrix make_quantum_group_matrix(const DeformationMatrix& K) {
  return K.direct_sum(K.negated());
}

}  // namespace thetakit
