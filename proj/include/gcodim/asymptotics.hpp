#pragma once

#include "gcodim/numeric.hpp"

#include <complex>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace gcodim {

/// Integer sequence c_{first_n}, c_{first_n + 1}, ...
struct Sequence {
  int first_n = 1;
  std::vector<BigInt> values;

  int last_n() const { return first_n + static_cast<int>(values.size()) - 1; }
  const BigInt& at(int n) const { return values.at(static_cast<std::size_t>(n - first_n)); }
};

/// Inclusive index range [lo, hi].
struct Window {
  int lo = 0;
  int hi = 0;
  int length() const { return hi - lo + 1; }
};

/// Parses "LO:HI".
Window parse_window(const std::string& text);

/// The whole sequence, or `requested` after checking it lies inside.
Window resolve_window(const Sequence& c, std::optional<Window> requested);

struct ExponentEstimate {
  int l = 0;
  double raw = 0;        // averaged ratio before rounding
  double distance = 0;   // |raw - l|
  bool all_zero = false; // sequence vanishes at the end of the window
  Window used{};         // positive run the ratios were taken over
};

struct BetaEstimate {
  int num_over_2 = 0;
  double raw = 0;
  double ci_lo = 0;
  double ci_hi = 0;
  bool ambiguous = false;  // the interval rounds to two different half-integers
};

struct AlphaEstimate {
  double mean = 0;
  double stddev = 0;
  double min = 0;
  double max = 0;
  bool not_converged = false;
};

/// Geometric mean of c_{n+1}/c_n over the trailing positive run of the
/// window, rounded. Throws WindowTooShort when fewer than four positive
/// terms remain.
ExponentEstimate estimate_exponent(const Sequence& c, Window w);

/// Least-squares slope of log(c_n / l^n) against log n, rounded to a
/// half-integer. Throws DegenerateWindow.
BetaEstimate estimate_beta(const Sequence& c, int l, Window w);

/// Statistics of c_n / (n^beta l^n) over the window. Throws DegenerateWindow.
AlphaEstimate estimate_alpha(const Sequence& c, int l, int beta_num_over_2, Window w);

struct AsymptoticFit {
  int l = 0;
  int beta_num_over_2 = 0;
  /// Point estimate; absent when only the two-sided bound is claimed.
  std::optional<double> alpha;
  double alpha_lo = 0;
  double alpha_hi = 0;
  Window window{};
  std::vector<std::string> flags;
  ExponentEstimate exponent;
  BetaEstimate beta;
  AlphaEstimate alpha_stats;

  double beta_value() const { return beta_num_over_2 / 2.0; }
};

/// Composes the three estimators. `unital` selects the single-constant
/// form: true reports a point alpha, false reports only [alpha_lo, alpha_hi],
/// and nullopt (a raw sequence) reports a point unless alpha failed to settle.
AsymptoticFit fit(const Sequence& c, std::optional<Window> window = std::nullopt,
                  std::optional<bool> unital = std::nullopt);

/// "n,c_n,ratio,log_resid" over the window.
void write_fit_csv(std::ostream& out, const Sequence& c, const AsymptoticFit& f);
/// {l, beta_num_over_2, alpha, alpha_lo, alpha_hi, window, flags, diagnostics}.
std::string fit_to_json(const AsymptoticFit& f);

/// c_n = sum_s binom(n,s) delta_s.
std::vector<BigInt> binomial_lift(std::span<const BigInt> delta);

/// s^beta with 0^0 = 1; the s = 0 term is dropped for beta != 0.
struct FilterCheck {
  double direct = 0;
  std::complex<double> filtered;
  /// |filtered - direct| / |direct|, or over sum |terms| when direct is 0.
  double relative_error = 0;
  /// Set when beta is a non-negative integer and x an integer: the exact
  /// cyclotomic evaluation was run; `exact_agrees` is its verdict.
  bool exact_checked = false;
  bool exact_agrees = false;
};

/// sum over s = m (mod d), 0 <= s <= n, of binom(n,s) s^beta x^s, once
/// directly and once through the root-of-unity filter.
FilterCheck filter_sum_check(int d, int m, int n, const Rational& beta, const Rational& x);

/// sum_{t<d} zeta_d^{(s-m)t} in Z[zeta_d]; equals d when s = m (mod d), else 0.
bool filter_identity_holds(int d, int s, int m);

/// r_n = sum_s binom(n,s) s^beta x^s / (n^beta (x+1)^n) in log space.
std::vector<double> binomial_growth_check(const Rational& beta, double x, std::span<const int> n_list);

/// The same ratio exactly, for a non-negative integer beta and rational x.
Rational binomial_growth_exact(int beta, const Rational& x, int n);

/// |r_{2n}/r_n - 1| for each n in n_list.
std::vector<double> growth_flatness(const Rational& beta, double x, std::span<const int> n_list);

}  // namespace gcodim
