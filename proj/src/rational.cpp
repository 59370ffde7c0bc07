#include "thetakit/rational.hpp"

#include "thetakit/errors.hpp"

namespace thetakit {

Rational make_rational(long num, long den) {
  if (den == 0) throw UsageError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw UsageError("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
      throw UsageError("malformed rational literal: " + s);
    }
  }
  try {
    Rational q(s);
    if (q.get_den() == 0) throw UsageError("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed rational literal: " + s);
  }
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational floor_rational(const Rational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rational(fl);
}

Rational mod_one(const Rational& q) {
  Rational r = q - floor_rational(q);
  return r;
}

}  // namespace thetakit
