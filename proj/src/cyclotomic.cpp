#include "gcodim/cyclotomic.hpp"

#include <stdexcept>

namespace gcodim {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial; the remainder must vanish.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("divide_exact: degree too small");
  IntPoly q(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const BigInt c = num[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("divide_exact: non-zero remainder");
  trim(q);
  return q;
}

}  // namespace

IntPoly cyclotomic_polynomial(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_polynomial: d must be positive");
  IntPoly p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) p = divide_exact(p, cyclotomic_polynomial(e));
  }
  return p;
}

CyclotomicInt::CyclotomicInt(int d) : d_(d), modulus_(cyclotomic_polynomial(d)) {}

CyclotomicInt CyclotomicInt::constant(int d, const BigInt& c) {
  CyclotomicInt r(d);
  if (c != 0) r.coeffs_.push_back(c);
  return r;
}

CyclotomicInt CyclotomicInt::zeta_power(int d, long long k) {
  CyclotomicInt r(d);
  const long long e = ((k % d) + d) % d;
  r.coeffs_.assign(static_cast<std::size_t>(e) + 1, 0);
  r.coeffs_[e] = 1;
  r.reduce();
  return r;
}

void CyclotomicInt::reduce() {
  const std::size_t deg = modulus_.size() - 1;
  for (std::size_t i = coeffs_.size(); i-- > deg;) {
    const BigInt c = coeffs_[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) coeffs_[i - deg + j] -= c * modulus_[j];
  }
  if (coeffs_.size() > deg) coeffs_.resize(deg);
  trim(coeffs_);
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  if (other.d_ != d_) throw std::invalid_argument("cyclotomic orders differ");
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim(coeffs_);
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim(coeffs_);
  return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.d_ != b.d_) throw std::invalid_argument("cyclotomic orders differ");
  CyclotomicInt r(a.d_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.reduce();
  return r;
}

}  // namespace gcodim
