#include "gcodim/rank.hpp"

#include <stdexcept>

namespace gcodim {

RankMode parse_rank_mode(const std::string& text) {
  if (text == "modular") return RankMode::modular;
  if (text == "exact") return RankMode::exact;
  if (text == "both") return RankMode::both;
  throw std::invalid_argument("rank mode must be modular, exact or both");
}

std::string to_string(RankMode mode) {
  switch (mode) {
    case RankMode::modular: return "modular";
    case RankMode::exact: return "exact";
    case RankMode::both: return "both";
  }
  return "?";
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const noexcept {
  value_type result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

PrimeField::value_type PrimeField::from(const Rational& r) const {
  const BigInt p(p_);
  BigInt num = numerator(r) % p;
  if (num < 0) num += p;
  BigInt den = denominator(r) % p;
  if (den == 0) throw std::domain_error("prime divides a denominator");
  return mul(num.convert_to<std::uint64_t>(), inv(den.convert_to<std::uint64_t>()));
}

}  // namespace gcodim
