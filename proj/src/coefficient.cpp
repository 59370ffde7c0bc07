#include "thetakit/coefficient.hpp"

#include <sstream>

#include "thetakit/errors.hpp"

namespace thetakit {

namespace {

LinearTerms add_keys(const LinearTerms& a, const LinearTerms& b) {
  LinearTerms r;
  auto it = a.begin(), jt = b.begin();
  while (it != a.end() || jt != b.end()) {
    if (jt == b.end() || (it != a.end() && it->first < jt->first)) {
      r.push_back(*it++);
    } else if (it == a.end() || jt->first < it->first) {
      r.push_back(*jt++);
    } else {
      Rational c = it->second + jt->second;
      if (c != 0) r.emplace_back(it->first, c);
      ++it;
      ++jt;
    }
  }
  return r;
}

LinearTerms neg_key(const LinearTerms& a) {
  LinearTerms r = a;
  for (auto& [n, c] : r) c = -c;
  return r;
}

}  // namespace

void Coefficient::insert(const LinearTerms& key, const Cyclotomic& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Coefficient Coefficient::from_rational(const Rational& q) {
  Coefficient c;
  c.insert({}, Cyclotomic(q));
  return c;
}

Coefficient Coefficient::from_cyclotomic(const Cyclotomic& v) {
  Coefficient c;
  c.insert({}, v);
  return c;
}

Coefficient Coefficient::from_phase(const PhaseExponent& p, const Rational& scalar) {
  Coefficient c;
  Cyclotomic v = Cyclotomic::root_of_unity(p.constant()) * Cyclotomic(scalar);
  c.insert(p.linear_terms(), v);
  return c;
}

bool Coefficient::is_rational() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& [key, value] = *terms_.begin();
  return key.empty() && value.is_rational();
}

Rational Coefficient::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw InvariantViolation("coefficient is not rational");
  return terms_.begin()->second.rational_value();
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  Coefficient r = *this;
  for (const auto& [k, v] : o.terms_) r.insert(k, v);
  return r;
}

Coefficient Coefficient::operator-() const {
  Coefficient r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

Coefficient Coefficient::operator-(const Coefficient& o) const { return *this + (-o); }

Coefficient Coefficient::operator*(const Coefficient& o) const {
  Coefficient r;
  for (const auto& [k1, v1] : terms_) {
    for (const auto& [k2, v2] : o.terms_) {
      r.insert(add_keys(k1, k2), v1 * v2);
    }
  }
  return r;
}

Coefficient Coefficient::scaled(const Rational& q) const {
  if (q == 0) return Coefficient();
  Coefficient r = *this;
  Cyclotomic s{q};
  for (auto& [k, v] : r.terms_) v *= s;
  return r;
}

Coefficient Coefficient::phase_shifted(const PhaseExponent& p) const {
  Coefficient r;
  Cyclotomic torsion = Cyclotomic::root_of_unity(p.constant());
  for (const auto& [k, v] : terms_) {
    r.insert(add_keys(k, p.linear_terms()), v * torsion);
  }
  return r;
}

Coefficient Coefficient::conjugated() const {
  Coefficient r;
  for (const auto& [k, v] : terms_) {
    r.insert(neg_key(k), v.conjugate());
  }
  return r;
}

Coefficient Coefficient::unit_inverse() const {
  if (terms_.size() != 1) throw InvariantViolation("inverse of a non-unit coefficient");
  const auto& [key, value] = *terms_.begin();
  Coefficient r;
  r.insert(neg_key(key), value.inverse());
  return r;
}

Coefficient Coefficient::leading_term_unit() const {
  if (terms_.empty()) throw InvariantViolation("leading term of zero coefficient");
  const auto& [key, value] = *terms_.begin();
  Coefficient r;
  r.insert(key, value);
  return r;
}

Coefficient Coefficient::substituted(const ParamSubstitution& sub) const {
  Coefficient r;
  for (const auto& [k, v] : terms_) {
    AffineForm f;
    for (const auto& [name, c] : k) f += AffineForm::symbol(name, c);
    f = f.substituted(sub);
    PhaseExponent p{f};
    r.insert(p.linear_terms(), v * Cyclotomic::root_of_unity(p.constant()));
  }
  return r;
}

std::complex<double> Coefficient::to_complex() const {
  std::complex<double> z(0.0, 0.0);
  for (const auto& [k, v] : terms_) {
    if (!k.empty()) {
      throw InvariantViolation("numeric evaluation with unresolved parameters");
    }
    z += v.to_complex();
  }
  return z;
}

std::vector<std::pair<Rational, PhaseExponent>> Coefficient::canonical_terms() const {
  std::vector<std::pair<Rational, PhaseExponent>> out;
  for (const auto& [k, v] : terms_) {
    AffineForm lin;
    for (const auto& [name, c] : k) lin += AffineForm::symbol(name, c);
    for (const auto& [scalar, turn] : v.terms()) {
      out.emplace_back(scalar, PhaseExponent(lin + AffineForm(turn)));
    }
  }
  return out;
}

void Coefficient::collect_parameters(std::set<std::string>& out) const {
  for (const auto& [k, v] : terms_) {
    for (const auto& [name, c] : k) out.insert(name);
  }
}

std::string Coefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [scalar, exp] : canonical_terms()) {
    Rational a = scalar < 0 ? Rational(-scalar) : scalar;
    if (first) {
      if (scalar < 0) os << "-";
      first = false;
    } else {
      os << (scalar < 0 ? " - " : " + ");
    }
    if (exp.is_zero()) {
      os << rational_to_string(a);
    } else {
      if (a != 1) os << rational_to_string(a) << "*";
      os << "e^{2pi i(" << exp.to_string() << ")}";
    }
  }
  return os.str();
}

}  // namespace thetakit
