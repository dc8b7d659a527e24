#include "ellsub/exact/rational.hpp"

#include "ellsub/error.hpp"

#include <cctype>

namespace ellsub {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    fail(Errc::domain, "malformed rational: '" + std::string(text) + "'");

  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0)
    fail(Errc::domain, "zero denominator: '" + std::string(text) + "'");
  Rational r(negative ? Integer(-p) : p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational &q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow(const Rational &base, unsigned exp) {
  Rational result(1), b(base);
  while (exp) {
    if (exp & 1u)
      result *= b;
    exp >>= 1u;
    if (exp)
      b *= b;
  }
  return result;
}

bool rational_sqrt(const Rational &q, Rational &root) {
  if (sgn(q) < 0)
    return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) ||
      !mpz_perfect_square_p(q.get_den_mpz_t()))
    return false;
  root = Rational(Integer(sqrt(q.get_num())), Integer(sqrt(q.get_den())));
  root.canonicalize();
  return true;
}

} // namespace ellsub
