#include "witt/rational.hpp"

#include <cctype>
#include <ostream>

namespace witt {

ParseError::ParseError(const std::string& msg, std::string token, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos) + " (token '" + token + "')"),
      token_(std::move(token)),
      pos_(pos) {}

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string_view body = s.substr(b, e - b);
  if (body.empty()) throw ParseError("empty rational", std::string(s), b);
  std::size_t i = 0;
  if (body[0] == '-' || body[0] == '+') ++i;
  std::size_t slash = std::string_view::npos;
  bool digits = false;
  for (std::size_t k = i; k < body.size(); ++k) {
    char c = body[k];
    if (c == '/' && slash == std::string_view::npos && digits) {
      slash = k;
      digits = false;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
    } else {
      throw ParseError("invalid character in rational", std::string(1, c), b + k);
    }
  }
  if (!digits) throw ParseError("malformed rational", std::string(body), b);
  std::string text(body[0] == '+' ? body.substr(1) : body);
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw ParseError("malformed rational", text, b);
  if (q.get_den() == 0) throw ParseError("zero denominator", text, b);
  q.canonicalize();
  return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational inverse(const Rational& r) { return Rational(1) / r; }

Rational pow(const Rational& r, int e) {
  if (e < 0) return pow(inverse(r), -e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

Rational factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(long m, int j) {
  if (j < 0) return Rational(0);
  Rational r(1);
  for (int i = 0; i < j; ++i) r *= Rational(m - i);
  return r / factorial(j);
}

}  // namespace witt
