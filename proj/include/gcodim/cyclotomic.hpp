#pragma once

#include "gcodim/numeric.hpp"

#include <vector>

namespace gcodim {

/// Integer polynomial, coefficient of x^i at index i, no trailing zeros.
using IntPoly = std::vector<BigInt>;

/// The d-th cyclotomic polynomial Phi_d (monic, integer coefficients).
IntPoly cyclotomic_polynomial(int d);

/// Element of Z[zeta_d] = Z[x]/(Phi_d), kept reduced (degree < phi(d)).
/// Equality is exact: two elements are equal iff their reduced coefficient
/// vectors agree.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(int d);
  static CyclotomicInt constant(int d, const BigInt& c);
  /// zeta_d^k for any integer k.
  static CyclotomicInt zeta_power(int d, long long k);

  int order() const noexcept { return d_; }
  const IntPoly& coeffs() const noexcept { return coeffs_; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  CyclotomicInt& operator+=(const CyclotomicInt& other);
  CyclotomicInt& operator*=(const BigInt& scalar);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  friend CyclotomicInt operator*(CyclotomicInt a, const BigInt& s) { return a *= s; }
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
    return a.d_ == b.d_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void reduce();

  int d_;
  IntPoly coeffs_;
  IntPoly modulus_;
};

}  // namespace gcodim
