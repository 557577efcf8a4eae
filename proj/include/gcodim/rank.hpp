#pragma once

#include "gcodim/errors.hpp"
#include "gcodim/numeric.hpp"

#include <array>
#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

namespace gcodim {

enum class RankMode { modular, exact, both };

RankMode parse_rank_mode(const std::string& text);
std::string to_string(RankMode mode);

/// Z/pZ for a prime p < 2^63.
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const noexcept { return p_; }
  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  value_type add(value_type a, value_type b) const noexcept {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  value_type pow(value_type a, std::uint64_t e) const noexcept;
  value_type inv(value_type a) const noexcept { return pow(a, p_ - 2); }

  /// Reduction of a rational; throws std::domain_error if p divides the denominator.
  value_type from(const Rational& r) const;

 private:
  std::uint64_t p_;
};

/// The rationals, for the exact verification path.
class RationalField {
 public:
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return 1 / a; }
  value_type from(const Rational& r) const { return r; }
};

/// Three 62-bit primes (the largest three below 2^62).
inline constexpr std::array<std::uint64_t, 3> kRankPrimes = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL};

/// Column-major matrix over a field; each column has rows() entries.
template <class T>
struct ColumnMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<T>> columns;

  std::size_t entries() const { return rows * columns.size(); }
};

/// Incremental row echelon form: insert vectors one at a time, keep the
/// independent ones normalised at their pivot.
template <class Field>
class Echelon {
 public:
  using value_type = typename Field::value_type;

  Echelon(const Field& field, std::size_t length) : field_(field), length_(length) {}

  /// Returns true when v was independent of everything inserted so far.
  bool insert(std::vector<value_type> v) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const value_type& c = v[pivots_[b]];
      if (field_.is_zero(c)) continue;
      const value_type coef = c;
      const auto& row = basis_[b];
      for (std::size_t i = pivots_[b]; i < length_; ++i) {
        if (!field_.is_zero(row[i])) v[i] = field_.sub(v[i], field_.mul(coef, row[i]));
      }
    }
    std::size_t pivot = 0;
    while (pivot < length_ && field_.is_zero(v[pivot])) ++pivot;
    if (pivot == length_) return false;
    const value_type scale = field_.inv(v[pivot]);
    for (std::size_t i = pivot; i < length_; ++i) {
      if (!field_.is_zero(v[i])) v[i] = field_.mul(v[i], scale);
    }
    // Entries before the pivot are zero, so the sweep above may start at it.
    pivots_.push_back(pivot);
    basis_.push_back(std::move(v));
    return true;
  }

  std::size_t rank() const noexcept { return basis_.size(); }
  bool full() const noexcept { return basis_.size() == length_; }

 private:
  const Field& field_;
  std::size_t length_;
  std::vector<std::vector<value_type>> basis_;
  std::vector<std::size_t> pivots_;
};

template <class Field>
std::size_t rank_of(const Field& field, ColumnMatrix<typename Field::value_type> m) {
  Echelon<Field> ech(field, m.rows);
  for (auto& col : m.columns) {
    if (ech.full()) break;
    ech.insert(std::move(col));
  }
  return ech.rank();
}

/// Counters for the verification work done under RankMode::both.
struct RankStats {
  std::atomic<std::size_t> matrices{0};
  std::atomic<std::size_t> exact_checks{0};
  std::atomic<std::size_t> multi_prime_checks{0};
};

/// Runs a matrix builder (a generic callable taking a field and returning a
/// ColumnMatrix over it) under the requested mode.
///   modular: first prime only.
///   exact:   rational elimination only.
///   both:    first prime, then exact elimination when the matrix has at most
///            exact_threshold entries, otherwise the two remaining primes.
///            Disagreement throws RankMismatch.
template <class Builder>
std::size_t rank_with_mode(RankMode mode, std::size_t exact_threshold, Builder&& build,
                           RankStats* stats = nullptr) {
  if (stats) ++stats->matrices;
  if (mode == RankMode::exact) return rank_of(RationalField{}, build(RationalField{}));
  PrimeField first(kRankPrimes[0]);
  auto m = build(first);
  const std::size_t entries = m.entries();
  const std::size_t r = rank_of(first, std::move(m));
  if (mode == RankMode::modular) return r;
  if (entries <= exact_threshold) {
    const std::size_t exact = rank_of(RationalField{}, build(RationalField{}));
    if (stats) ++stats->exact_checks;
    if (exact != r) {
      throw RankMismatch("modular rank " + std::to_string(r) + " disagrees with exact rank " +
                         std::to_string(exact));
    }
    return r;
  }
  for (std::size_t i = 1; i < kRankPrimes.size(); ++i) {
    PrimeField f(kRankPrimes[i]);
    const std::size_t other = rank_of(f, build(f));
    if (other != r) {
      throw RankMismatch("rank " + std::to_string(r) + " modulo the first prime disagrees with " +
                         std::to_string(other) + " modulo prime " + std::to_string(i + 1));
    }
  }
  if (stats) ++stats->multi_prime_checks;
  return r;
}

}  // namespace gcodim
