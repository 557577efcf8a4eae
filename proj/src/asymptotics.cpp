#include "gcodim/asymptotics.hpp"

#include "gcodim/cyclotomic.hpp"
#include "gcodim/errors.hpp"

#include <json.hpp>

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>

namespace gcodim {

namespace {

double log_or_neg_inf(const BigInt& v) {
  return v > 0 ? log_of(v) : -std::numeric_limits<double>::infinity();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void check_inside(const Sequence& c, Window w) {
  if (w.lo > w.hi) throw DegenerateWindow("window is empty");
  if (c.values.empty() || w.lo < c.first_n || w.hi > c.last_n()) {
    throw DegenerateWindow("window [" + std::to_string(w.lo) + "," + std::to_string(w.hi) +
                           "] is outside the sequence range");
  }
}

// s^beta with the conventions 0^0 = 1 and "no s = 0 term" otherwise.
bool term_present(int s, const Rational& beta) { return s > 0 || beta == 0; }

}  // namespace

Window parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("window must look like LO:HI");
  try {
    std::size_t used = 0;
    Window w;
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    w.lo = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    w.hi = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
    if (w.lo > w.hi) throw std::invalid_argument("LO > HI");
    return w;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("window must look like LO:HI, got '" + text + "'");
  }
}

Window resolve_window(const Sequence& c, std::optional<Window> requested) {
  Window w = requested.value_or(Window{c.first_n, c.last_n()});
  check_inside(c, w);
  return w;
}

ExponentEstimate estimate_exponent(const Sequence& c, Window w) {
  check_inside(c, w);
  if (w.length() < 4) throw WindowTooShort("exponent estimation needs at least 4 terms");
  for (int n = w.lo; n <= w.hi; ++n) {
    if (c.at(n) < 0) throw std::invalid_argument("sequence has a negative term at n = " + std::to_string(n));
  }
  ExponentEstimate e;
  if (c.at(w.hi) == 0) {
    e.all_zero = true;
    e.used = w;
    return e;
  }
  int start = w.hi;
  while (start > w.lo && c.at(start - 1) > 0) --start;
  e.used = {start, w.hi};
  if (e.used.length() < 4) {
    throw WindowTooShort("only " + std::to_string(e.used.length()) + " positive terms at the end of the window");
  }
  // Mean of log-ratios telescopes to the endpoints.
  e.raw = std::exp((log_of(c.at(w.hi)) - log_of(c.at(start))) / (w.hi - start));
  e.l = std::max(1, static_cast<int>(std::lround(e.raw)));
  e.distance = std::abs(e.raw - e.l);
  return e;
}

BetaEstimate estimate_beta(const Sequence& c, int l, Window w) {
  check_inside(c, w);
  if (l < 1) throw DegenerateWindow("beta needs l >= 1");
  if (w.length() < 3) throw DegenerateWindow("beta regression needs at least 3 points");
  if (w.lo < 1) throw DegenerateWindow("beta regression needs n >= 1");
  const std::size_t k = static_cast<std::size_t>(w.length());
  std::vector<double> xs, ys;
  for (int n = w.lo; n <= w.hi; ++n) {
    if (c.at(n) <= 0) throw DegenerateWindow("c_" + std::to_string(n) + " is not positive");
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(log_of(c.at(n)) - n * std::log(static_cast<double>(l)));
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / k;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / k;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  BetaEstimate b;
  b.raw = sxy / sxx;
  const double intercept = my - b.raw * mx;
  double ssr = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double r = ys[i] - intercept - b.raw * xs[i];
    ssr += r * r;
  }
  const double se = std::sqrt(ssr / static_cast<double>(k - 2) / sxx);
  const boost::math::students_t dist(static_cast<double>(k - 2));
  const double t = boost::math::quantile(boost::math::complement(dist, 0.025));
  b.ci_lo = b.raw - t * se;
  b.ci_hi = b.raw + t * se;
  b.num_over_2 = static_cast<int>(std::lround(2 * b.raw));
  b.ambiguous = std::lround(2 * b.ci_lo) != std::lround(2 * b.ci_hi);
  return b;
}

AlphaEstimate estimate_alpha(const Sequence& c, int l, int beta_num_over_2, Window w) {
  check_inside(c, w);
  if (l < 1) throw DegenerateWindow("alpha needs l >= 1");
  if (w.length() < 2) throw DegenerateWindow("alpha needs at least 2 points");
  const double beta = beta_num_over_2 / 2.0;
  std::vector<double> v;
  std::vector<double> grain;  // size of one unit of c_n after dividing by n^beta l^n
  for (int n = w.lo; n <= w.hi; ++n) {
    if (n < 1) throw DegenerateWindow("alpha needs n >= 1");
    const double log_scale = beta * std::log(static_cast<double>(n)) + n * std::log(static_cast<double>(l));
    v.push_back(std::exp(log_or_neg_inf(c.at(n)) - log_scale));
    grain.push_back(std::exp(-log_scale));
  }
  auto mean_of = [](auto first, auto last) {
    return std::accumulate(first, last, 0.0) / static_cast<double>(std::distance(first, last));
  };
  AlphaEstimate a;
  a.mean = mean_of(v.begin(), v.end());
  double ss = 0;
  for (double x : v) ss += (x - a.mean) * (x - a.mean);
  a.stddev = std::sqrt(ss / static_cast<double>(v.size() - 1));
  a.min = *std::min_element(v.begin(), v.end());
  a.max = *std::max_element(v.begin(), v.end());
  const std::size_t q = std::max<std::size_t>(1, (v.size() + 3) / 4);
  const auto tail = v.end() - static_cast<std::ptrdiff_t>(q);
  const double tail_mean = mean_of(tail, v.end());
  const auto [tail_min, tail_max] = std::minmax_element(tail, v.end());
  // A tail mean close to the full mean can hide an oscillation of even
  // period, so the spread inside the tail is checked as well. Both tests
  // allow for integer rounding of c_n, which moves each ratio by up to half
  // a grain.
  const double rounding = *std::max_element(grain.end() - static_cast<std::ptrdiff_t>(q), grain.end());
  const double band = 0.05 * a.mean;
  a.not_converged = std::abs(tail_mean - a.mean) > band + 0.5 * rounding || (*tail_max - *tail_min) > band + rounding;
  return a;
}

AsymptoticFit fit(const Sequence& c, std::optional<Window> window, std::optional<bool> unital) {
  AsymptoticFit f;
  f.window = resolve_window(c, window);
  f.exponent = estimate_exponent(c, f.window);
  if (f.exponent.all_zero) {
    f.l = 0;
    f.alpha = 0.0;
    f.flags.push_back("all_zero");
    return f;
  }
  const Window run = f.exponent.used;
  if (run.lo != f.window.lo) f.flags.push_back("window_trimmed_to_positive_run");
  if (f.exponent.distance > 0.25) f.flags.push_back("exponent_uncertain");
  f.l = f.exponent.l;
  f.beta = estimate_beta(c, f.l, run);
  f.beta_num_over_2 = f.beta.num_over_2;
  if (f.beta.ambiguous) f.flags.push_back("beta_ambiguous");
  f.alpha_stats = estimate_alpha(c, f.l, f.beta_num_over_2, run);
  f.alpha_lo = f.alpha_stats.min;
  f.alpha_hi = f.alpha_stats.max;
  if (f.alpha_stats.not_converged) f.flags.push_back("alpha_not_converged");
  const bool point = unital.value_or(!f.alpha_stats.not_converged);
  if (point) {
    f.alpha = f.alpha_stats.mean;
  } else {
    f.flags.push_back("alpha_interval_only");
  }
  return f;
}

void write_fit_csv(std::ostream& out, const Sequence& c, const AsymptoticFit& f) {
  out << "n,c_n,ratio,log_resid\n";
  const double alpha = f.alpha.value_or(f.alpha_stats.mean);
  for (int n = f.window.lo; n <= f.window.hi; ++n) {
    out << n << ',' << c.at(n).str() << ',';
    if (n > c.first_n && c.at(n - 1) > 0) {
      out << format_double(static_cast<double>(Rational(c.at(n), c.at(n - 1)).convert_to<double>()));
    }
    out << ',';
    if (f.l >= 1 && c.at(n) > 0 && alpha > 0 && n >= 1) {
      const double model = std::log(alpha) + f.beta_value() * std::log(static_cast<double>(n)) +
                           n * std::log(static_cast<double>(f.l));
      out << format_double(log_of(c.at(n)) - model);
    }
    out << '\n';
  }
}

std::string fit_to_json(const AsymptoticFit& f) {
  nlohmann::ordered_json j;
  j["l"] = f.l;
  j["beta_num_over_2"] = f.beta_num_over_2;
  j["alpha"] = f.alpha ? nlohmann::ordered_json(*f.alpha) : nlohmann::ordered_json(nullptr);
  j["alpha_lo"] = f.alpha_lo;
  j["alpha_hi"] = f.alpha_hi;
  j["window"] = {f.window.lo, f.window.hi};
  j["flags"] = f.flags;
  j["diagnostics"] = {
      {"l_raw", f.exponent.raw},
      {"l_distance", f.exponent.distance},
      {"positive_run", {f.exponent.used.lo, f.exponent.used.hi}},
      {"beta_raw", f.beta.raw},
      {"beta_ci", {f.beta.ci_lo, f.beta.ci_hi}},
      {"alpha_mean", f.alpha_stats.mean},
      {"alpha_stddev", f.alpha_stats.stddev},
  };
  return j.dump(2);
}

std::vector<BigInt> binomial_lift(std::span<const BigInt> delta) {
  std::vector<BigInt> c(delta.size());
  for (std::size_t n = 0; n < delta.size(); ++n) {
    BigInt sum = 0;
    for (std::size_t s = 0; s <= n; ++s) {
      sum += binomial(static_cast<unsigned>(n), static_cast<unsigned>(s)) * delta[s];
    }
    c[n] = sum;
  }
  return c;
}

bool filter_identity_holds(int d, int s, int m) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  CyclotomicInt sum(d);
  for (int t = 0; t < d; ++t) sum += CyclotomicInt::zeta_power(d, static_cast<long long>(s - m) * t);
  const bool same = ((s - m) % d + d) % d == 0;
  return sum == CyclotomicInt::constant(d, same ? d : 0);
}

FilterCheck filter_sum_check(int d, int m, int n, const Rational& beta, const Rational& x) {
  if (d < 1 || m < 0 || m >= d) throw std::invalid_argument("filter_sum_check needs d >= 1, 0 <= m < d");
  if (n < 0) throw std::invalid_argument("filter_sum_check needs n >= 0");
  const double b = beta.convert_to<double>();
  const double xd = x.convert_to<double>();
  std::vector<double> term(n + 1, 0.0);
  for (int s = 0; s <= n; ++s) {
    if (!term_present(s, beta)) continue;
    term[s] = binomial(n, s).convert_to<double>() * (s == 0 ? 1.0 : std::pow(s, b)) * std::pow(xd, s);
  }
  auto root = [d](long long k) {
    const long long e = ((k % d) + d) % d;
    return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(e) / d);
  };

  FilterCheck r;
  for (int s = m; s <= n; s += d) r.direct += term[s];
  for (int t = 0; t < d; ++t) {
    std::complex<double> inner = 0;
    for (int s = 0; s <= n; ++s) inner += term[s] * root(static_cast<long long>(t) * s);
    r.filtered += root(-static_cast<long long>(m) * t) * inner;
  }
  r.filtered /= static_cast<double>(d);
  // An empty residue class has direct sum 0; measure against the size of the
  // terms the filter had to cancel instead.
  double scale = std::abs(r.direct);
  if (scale == 0) {
    for (double v : term) scale += std::abs(v);
  }
  r.relative_error = scale == 0 ? std::abs(r.filtered) : std::abs(r.filtered - r.direct) / scale;

  if (is_integer(beta) && beta >= 0 && is_integer(x)) {
    const unsigned e = numerator(beta).convert_to<unsigned>();
    const BigInt xi = numerator(x);
    std::vector<BigInt> exact(n + 1, 0);
    for (int s = 0; s <= n; ++s) {
      if (!term_present(s, beta)) continue;
      exact[s] = binomial(n, s) * boost::multiprecision::pow(BigInt(s), e) * boost::multiprecision::pow(xi, s);
    }
    BigInt direct = 0;
    for (int s = m; s <= n; s += d) direct += exact[s];
    CyclotomicInt total(d);
    for (int t = 0; t < d; ++t) {
      CyclotomicInt inner(d);
      for (int s = 0; s <= n; ++s) {
        if (exact[s] != 0) inner += CyclotomicInt::zeta_power(d, static_cast<long long>(t) * s) * exact[s];
      }
      total += CyclotomicInt::zeta_power(d, -static_cast<long long>(m) * t) * inner;
    }
    r.exact_checked = true;
    r.exact_agrees = total == CyclotomicInt::constant(d, direct * d);
  }
  return r;
}

std::vector<double> binomial_growth_check(const Rational& beta, double x, std::span<const int> n_list) {
  if (!(x > 0)) throw std::invalid_argument("binomial_growth_check needs x > 0");
  const double b = beta.convert_to<double>();
  std::vector<double> out;
  for (int n : n_list) {
    if (n < 1) throw std::invalid_argument("binomial_growth_check needs n >= 1");
    std::vector<double> logs;
    for (int s = 0; s <= n; ++s) {
      if (!term_present(s, beta)) continue;
      logs.push_back(std::lgamma(n + 1.0) - std::lgamma(s + 1.0) - std::lgamma(n - s + 1.0) +
                     (s == 0 ? 0.0 : b * std::log(static_cast<double>(s))) + s * std::log(x));
    }
    const double top = *std::max_element(logs.begin(), logs.end());
    double acc = 0;
    for (double l : logs) acc += std::exp(l - top);
    const double log_sum = top + std::log(acc);
    out.push_back(std::exp(log_sum - b * std::log(static_cast<double>(n)) - n * std::log1p(x)));
  }
  return out;
}

Rational binomial_growth_exact(int beta, const Rational& x, int n) {
  if (beta < 0 || n < 1) throw std::invalid_argument("binomial_growth_exact needs beta >= 0, n >= 1");
  Rational sum = 0;
  Rational xp = 1;
  for (int s = 0; s <= n; ++s) {
    if (term_present(s, Rational(beta))) {
      sum += Rational(binomial(n, s) * boost::multiprecision::pow(BigInt(s), static_cast<unsigned>(beta))) * xp;
    }
    xp *= x;
  }
  Rational denom = Rational(boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(beta)));
  Rational base = x + 1;
  for (int i = 0; i < n; ++i) denom *= base;
  return sum / denom;
}

std::vector<double> growth_flatness(const Rational& beta, double x, std::span<const int> n_list) {
  std::vector<double> out;
  for (int n : n_list) {
    const int pair[] = {n, 2 * n};
    const auto r = binomial_growth_check(beta, x, pair);
    out.push_back(std::abs(r[1] / r[0] - 1));
  }
  return out;
}

}  // namespace gcodim
