#pragma once

#include "gcodim/numeric.hpp"
#include "gcodim/partition.hpp"

#include <map>
#include <ostream>

namespace gcodim {

/// Symmetric power series in num_vars variables, truncated at total degree
/// trunc. Stored in the monomial basis: the coefficient of t^gamma is kept
/// under the sorted exponent of gamma. Zero coefficients are never stored.
class SymSeries {
 public:
  SymSeries(int num_vars, int trunc);

  int num_vars() const noexcept { return num_vars_; }
  int trunc() const noexcept { return trunc_; }
  const std::map<Partition, Rational>& coeffs() const noexcept { return coeffs_; }

  Rational coeff(const Partition& sorted_exponent) const;
  /// Coefficient of t_1^gamma_1 ... t_k^gamma_k.
  Rational monomial_coeff(std::span<const int> exponent) const;

  /// Adds to the coefficient at a sorted exponent. Keys beyond the height or
  /// degree bound are silently dropped (they vanish under truncation).
  void add(const Partition& sorted_exponent, const Rational& value);

  SymSeries& operator+=(const SymSeries& other);
  SymSeries& operator-=(const SymSeries& other);
  SymSeries& operator*=(const Rational& scalar);
  friend SymSeries operator+(SymSeries a, const SymSeries& b) { return a += b; }
  friend SymSeries operator-(SymSeries a, const SymSeries& b) { return a -= b; }

  /// Product truncated at min(trunc) of the operands; num_vars must agree.
  friend SymSeries operator*(const SymSeries& a, const SymSeries& b);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  friend bool operator==(const SymSeries&, const SymSeries&) = default;

  /// CSV rows "sorted_exponent,coefficient", degree ascending.
  void write_csv(std::ostream& out) const;

 private:
  int num_vars_;
  int trunc_;
  std::map<Partition, Rational> coeffs_;
};

/// Coefficients against the Schur basis s_lambda(t_1..t_k), h(lambda) <= k.
class SchurExpansion {
 public:
  SchurExpansion(int num_vars, int trunc);

  int num_vars() const noexcept { return num_vars_; }
  int trunc() const noexcept { return trunc_; }
  const std::map<Partition, Rational>& coeffs() const noexcept { return coeffs_; }

  Rational coeff(const Partition& lambda) const;
  /// Drops keys with height > num_vars (s_lambda vanishes there) or size > trunc.
  void add(const Partition& lambda, const Rational& value);
  void set(const Partition& lambda, const Rational& value);

  /// Restriction to |lambda| <= degree.
  SchurExpansion truncated(int degree) const;

  bool is_zero() const noexcept { return coeffs_.empty(); }
  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

  /// CSV rows "partition,coefficient", degree ascending.
  void write_csv(std::ostream& out) const;

 private:
  int num_vars_;
  int trunc_;
  std::map<Partition, Rational> coeffs_;
};

/// s_lambda(t_1..t_k) truncated at degree trunc. Zero when h(lambda) > k or
/// |lambda| > trunc.
SymSeries schur_poly(const Partition& lambda, int num_vars, int trunc);

/// Unique f = sum c_lambda s_lambda, solved against the unitriangular Kostka
/// matrix in lexicographic (dominance-compatible) order.
SchurExpansion expand_in_schur(const SymSeries& f);

/// Back to the monomial basis.
SymSeries to_series(const SchurExpansion& e);

/// prod_i (1 - t_i)^{-1}: every monomial of degree <= trunc has coefficient 1.
SymSeries free_poly_series(int num_vars, int trunc);

/// prod_i (1 - t_i) = sum_j (-1)^j e_j.
SymSeries alternating_elementary_product(int num_vars, int trunc);

/// m_lambda = sum over mu in lower_strip_set(lambda) of a_mu.
SchurExpansion m_from_a(const SchurExpansion& a);

/// Inverse of m_from_a through the series identity
/// sum a_mu s_mu = prod(1 - t_i) * sum m_lambda s_lambda.
/// Multiplication by a polynomial with constant term 1 never mixes in degrees
/// above the target, so the result is exact through degree trunc.
SchurExpansion a_from_m(const SchurExpansion& m);

}  // namespace gcodim
