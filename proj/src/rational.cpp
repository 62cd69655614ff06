#include "hopfc/rational.hpp"

#include "hopfc/errors.hpp"

namespace hopfc {

Rational::Rational(long n, long d) {
  if (d == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw Error("malformed rational '" + s + "'");
  if (v.get_den() == 0) throw Error("rational with zero denominator: '" + s + "'");
  return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(mpq_class(f));
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Rational r = 1;
  for (int k = 0; k < exponent; ++k) r *= base;
  return r;
}

}  // namespace hopfc
