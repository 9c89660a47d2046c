#include "capelli/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace capelli {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_short_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return to_fraction_string(q);
}

namespace {

mpz_class parse_integer(std::string_view s, bool allow_sign) {
  std::size_t pos = 0;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) pos = 1;
  if (pos == s.size()) throw std::invalid_argument("malformed rational: empty integer");
  for (std::size_t k = pos; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw std::invalid_argument("malformed rational: " + std::string(s));
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return mpz_class(digits, 10);
}

}  // namespace

Rational make_rational(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r(p, 1);
  r /= q;
  return r;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  const mpz_class num = parse_integer(text.substr(0, slash), true);
  const mpz_class den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("malformed rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace capelli
