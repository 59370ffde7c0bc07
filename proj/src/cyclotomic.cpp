#include "thetakit/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "thetakit/errors.hpp"

namespace thetakit {

namespace {

using Poly = std::vector<Rational>;  // dense, index = power of x

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] += a[i] * b[j];
    }
  }
  poly_trim(r);
  return r;
}

// Division with remainder; divisor must be nonzero.
void poly_divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  rem = num;
  poly_trim(rem);
  Poly d = den;
  poly_trim(d);
  if (d.empty()) throw InvariantViolation("polynomial division by zero");
  quot.assign(rem.size() > d.size() ? rem.size() - d.size() + 1 : 1, Rational(0));
  while (rem.size() >= d.size() && !rem.empty()) {
    size_t shift = rem.size() - d.size();
    Rational factor = rem.back() / d.back();
    quot[shift] = factor;
    for (size_t i = 0; i < d.size(); ++i) {
      rem[shift + i] -= factor * d[i];
    }
    poly_trim(rem);
  }
  poly_trim(quot);
}

Poly poly_mod(const Poly& num, const Poly& den) {
  Poly q, r;
  poly_divmod(num, den, q, r);
  return r;
}

// Extended Euclid: returns g = gcd(a, b) and s with s*a == g (mod b).
Poly poly_inverse_mod(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = poly_mod(a, m);
  Poly s0 = {}, s1 = {Rational(1)};
  while (!r1.empty()) {
    Poly q, r2;
    poly_divmod(r0, r1, q, r2);
    Poly qs = poly_mul(q, s1);
    Poly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    poly_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw InvariantViolation("element not invertible in cyclotomic field");
  Poly inv = s0;
  for (Rational& c : inv) c /= r0[0];
  return poly_mod(inv, m);
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, Poly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  Poly den = {Rational(1)};
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    // recursion is fine: d < n
    std::vector<Rational> phi_d;
    {
      // temporarily release not needed: recursive call would deadlock; compute inline
      auto sub = cache.find(d);
      if (sub != cache.end()) {
        phi_d = sub->second;
      } else {
        // compute Phi_d with the same method (divisors of d are < n too)
        Poly nd(d + 1, Rational(0));
        nd[0] = -1;
        nd[d] = 1;
        Poly dd = {Rational(1)};
        for (unsigned e = 1; e < d; ++e) {
          if (d % e != 0) continue;
          auto se = cache.find(e);
          if (se == cache.end()) throw InvariantViolation("cyclotomic cache miss");
          dd = poly_mul(dd, se->second);
        }
        Poly q, r;
        poly_divmod(nd, dd, q, r);
        if (!r.empty()) throw InvariantViolation("cyclotomic polynomial division not exact");
        phi_d = q;
        cache.emplace(d, phi_d);
      }
    }
    den = poly_mul(den, phi_d);
  }
  Poly q, r;
  poly_divmod(num, den, q, r);
  if (!r.empty()) throw InvariantViolation("cyclotomic polynomial division not exact");
  auto [pos, ok] = cache.emplace(n, std::move(q));
  (void)ok;
  return pos->second;
}

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order_, Rational(0));
  reduce();
}

void Cyclotomic::reduce() {
  if (order_ == 1) return;
  Poly p = coeffs_;
  Poly r = poly_mod(p, cyclotomic_polynomial(order_));
  coeffs_.assign(order_, Rational(0));
  for (size_t i = 0; i < r.size(); ++i) coeffs_[i] = r[i];
}

Cyclotomic Cyclotomic::root_of_unity(const Rational& turns) {
  Rational t = mod_one(turns);
  unsigned den = static_cast<unsigned>(t.get_den().get_ui());
  unsigned num = static_cast<unsigned>(t.get_num().get_ui());
  std::vector<Rational> c(den, Rational(0));
  c[num % den] = 1;
  return Cyclotomic(den, std::move(c));
}

Cyclotomic Cyclotomic::lifted(unsigned target) const {
  if (target == order_) return *this;
  if (target % order_ != 0) throw InvariantViolation("cyclotomic lift to non-multiple order");
  unsigned f = target / order_;
  std::vector<Rational> c(target, Rational(0));
  for (unsigned k = 0; k < order_; ++k) c[k * f] = coeffs_[k];
  return Cyclotomic(target, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const Rational& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw InvariantViolation("cyclotomic value is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  unsigned target = std::lcm(order_, o.order_);
  Cyclotomic a = lifted(target), b = o.lifted(target);
  for (unsigned k = 0; k < target; ++k) a.coeffs_[k] += b.coeffs_[k];
  a.reduce();
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (Rational& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  unsigned target = std::lcm(order_, o.order_);
  Cyclotomic a = lifted(target), b = o.lifted(target);
  std::vector<Rational> c(target, Rational(0));
  for (unsigned i = 0; i < target; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < target; ++j) {
      if (b.coeffs_[j] == 0) continue;
      c[(i + j) % target] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclotomic(target, std::move(c));
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<Rational> c(order_, Rational(0));
  for (unsigned k = 0; k < order_; ++k) c[(order_ - k) % order_] = coeffs_[k];
  return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw InvariantViolation("inverse of zero cyclotomic");
  if (order_ == 1) {
    Cyclotomic r;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  Poly inv = poly_inverse_mod(coeffs_, cyclotomic_polynomial(order_));
  std::vector<Rational> c(order_, Rational(0));
  for (size_t i = 0; i < inv.size(); ++i) c[i] = inv[i];
  return Cyclotomic(order_, std::move(c));
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> r(0.0, 0.0);
  const double tau = 2.0 * M_PI;
  for (unsigned k = 0; k < order_; ++k) {
    if (coeffs_[k] == 0) continue;
    double a = coeffs_[k].get_d();
    double ang = tau * static_cast<double>(k) / static_cast<double>(order_);
    r += std::complex<double>(a * std::cos(ang), a * std::sin(ang));
  }
  return r;
}

std::vector<std::pair<Rational, Rational>> Cyclotomic::terms() const {
  std::vector<std::pair<Rational, Rational>> out;
  for (unsigned k = 0; k < order_; ++k) {
    if (coeffs_[k] == 0) continue;
    out.emplace_back(coeffs_[k], Rational(k) / Rational(static_cast<long>(order_)));
  }
  return out;
}

}  // namespace thetakit
