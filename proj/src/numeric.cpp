#include "gcodim/numeric.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gcodim {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt multinomial(std::span<const int> parts) {
  BigInt r = 1;
  unsigned total = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    total += static_cast<unsigned>(p);
    r *= binomial(total, static_cast<unsigned>(p));
  }
  return r;
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bare sign");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
      }
    }
    if (s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
  };
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(trim(text.substr(0, slash)));
  BigInt den = parse_int(trim(text.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_string(const BigInt& value) { return value.str(); }

double log_of(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log_of: non-positive argument");
  long exp2 = 0;
  double mantissa = mpz_get_d_2exp(&exp2, value.backend().data());
  return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

}  // namespace gcodim
