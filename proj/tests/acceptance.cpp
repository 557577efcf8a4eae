// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include "gcodim/asymptotics.hpp"
#include "gcodim/builtin_specs.hpp"
#include "gcodim/codim.hpp"
#include "gcodim/errors.hpp"
#include "gcodim/partition.hpp"
#include "gcodim/symmetric_series.hpp"
#include "oracles/sequences.hpp"
#include "oracles/tableaux.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace gcodim;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    passed = false;
    notes.push_back("FAIL " + why);
  }
  void note(const std::string& what) { notes.push_back(what); }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

oracle::Shape shape(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

struct Computed {
  std::string name;
  GradedAlgebraSpec spec;
  int max_n;
  CodimTable table;
};

CodimTable compute_table(const GradedAlgebraSpec& spec, int max_n, const EngineConfig& config) {
  CodimEngine engine(spec, config);
  CodimTable t;
  t.unital = spec.unital();
  for (int n = 1; n <= max_n; ++n) t.rows.push_back(engine.graded_codim(n));
  return t;
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

std::vector<BigInt> codims(const CodimTable& t) {
  std::vector<BigInt> c;
  for (const auto& r : t.rows) c.push_back(r.codim);
  return c;
}

// delta_s = sum_j (-1)^{s-j} binom(s,j) c_j, written out directly.
std::vector<BigInt> deltas_by_hand(const std::vector<BigInt>& c_from_zero) {
  std::vector<BigInt> d;
  for (std::size_t s = 0; s < c_from_zero.size(); ++s) {
    BigInt acc = 0;
    for (std::size_t j = 0; j <= s; ++j) {
      const BigInt term = binomial(static_cast<int>(s), static_cast<int>(j)) * c_from_zero[j];
      if ((s - j) % 2) acc -= term;
      else acc += term;
    }
    d.push_back(acc);
  }
  return d;
}

Outcome criterion1() {
  Outcome o;
  SymSeries want(2, 3);
  want.add({2, 1}, 1);
  o.expect(schur_poly({2, 1}, 2, 3) == want, "s_(2,1)(t1,t2) != t1^2 t2 + t1 t2^2");
  int checked = 0;
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int k = 1; k <= 4; ++k) {
        const SymSeries s = schur_poly(lambda, k, n);
        ++checked;
        if (s.is_zero() != (lambda.height() > k)) o.fail("zero test for " + lambda.to_string() + ", k=" + std::to_string(k));
        for (const auto& alpha : partitions_of(n, k)) {
          const long long ssyt = oracle::count_ssyt(shape(lambda), shape(alpha));
          if (s.coeff(alpha) != ssyt) {
            o.fail("coefficient of " + alpha.to_string() + " in s_" + lambda.to_string() + " differs from tableau count");
          }
        }
      }
    }
  }
  o.note(std::to_string(checked) + " (lambda, k) pairs, coefficients matched against tableau counts");
  return o;
}

Outcome criterion2() {
  Outcome o;
  int products = 0;
  for (int n = 0; n <= 6; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (int k = 1; k <= 4; ++k) {
        const int vars = mu.height() + 1;
        const int deg = n + k;
        const SchurExpansion e = expand_in_schur(schur_poly(mu, vars, deg) * schur_poly({k}, vars, deg));
        std::set<Partition> pieri;
        for (const auto& nu : pieri_expand(mu, k)) pieri.insert(nu);
        std::set<Partition> by_oracle;
        for (const auto& nu : oracle::pieri(shape(mu), k)) by_oracle.insert(Partition(nu));
        o.expect(pieri == by_oracle, "pieri_expand(" + mu.to_string() + "," + std::to_string(k) + ") != strip enumeration");
        std::set<Partition> support;
        for (const auto& [lambda, c] : e.coeffs()) {
          support.insert(lambda);
          if (c != 1) o.fail("coefficient " + c.str() + " at " + lambda.to_string());
        }
        o.expect(support == pieri, "support of s_" + mu.to_string() + " s_(" + std::to_string(k) + ") != Pieri set");
        ++products;
      }
    }
  }
  int strips = 0;
  for (int n = 0; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      std::set<Partition> lib;
      for (const auto& mu : lower_strip_set(lambda)) lib.insert(mu);
      std::set<Partition> dual;
      for (int m = 0; m <= n; ++m) {
        for (const auto& mu : oracle::partitions(m)) {
          if (oracle::horizontal_strip(shape(lambda), mu)) dual.insert(Partition(mu));
        }
      }
      o.expect(lib == dual, "lower_strip_set(" + lambda.to_string() + ")");
      ++strips;
    }
  }
  o.note(std::to_string(products) + " Pieri products, " + std::to_string(strips) + " strip sets");
  return o;
}

Outcome criterion3(const std::vector<Computed>& computed) {
  Outcome o;
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + trial % 4;
    const int n = k + 1 + trial % 6;
    SchurExpansion a(k, n);
    const auto pool = partitions_up_to(n - k, k);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int i = 0; i < 6; ++i) a.add(pool[pick(rng)], coef(rng));
    if (!(a_from_m(m_from_a(a)) == a)) o.fail("a_from_m(m_from_a(a)) != a on trial " + std::to_string(trial));
  }
  int tables = 0;
  for (const auto& c : computed) {
    if (!c.spec.unital()) continue;
    std::vector<BigInt> from_zero{1};
    for (const auto& r : c.table.rows) from_zero.push_back(r.codim);
    o.expect(binomial_lift(proper_deltas(from_zero)) == from_zero, "lift of deltas on " + c.name);
    ++tables;
  }
  std::mt19937_64 rng64(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BigInt> delta(1 + trial % 20);
    for (auto& d : delta) d = BigInt(rng64() % 100000) * BigInt(rng64() % 100000);
    const auto c = binomial_lift(delta);
    o.expect(proper_deltas(c) == delta, "random delta trial " + std::to_string(trial));
    o.expect(binomial_lift(proper_deltas(c)) == c, "random lift trial " + std::to_string(trial));
  }
  o.note("200 Schur round trips, " + std::to_string(tables) + " computed tables, 100 random delta sequences");
  return o;
}

Outcome criterion4() {
  Outcome o;
  EngineConfig config;
  config.rank_mode = RankMode::both;
  config.exact_threshold = 2000;

  auto check = [&](const std::string& name, const GradedAlgebraSpec& spec, int max_n,
                   const std::function<bool(const CodimRow&)>& good) {
    CodimEngine engine(spec, config);
    std::vector<BigInt> c;
    for (int n = 1; n <= max_n; ++n) {
      const CodimRow row = engine.graded_codim(n);
      c.push_back(row.codim);
      if (!good(row)) o.fail(name + " at n=" + std::to_string(n) + ": c_n=" + row.codim.str());
    }
    const auto& st = engine.rank_stats();
    o.expect(st.exact_checks + st.multi_prime_checks == st.matrices, name + ": a matrix skipped the cross-check");
    o.note(name + ": c = " + join(c) + "; " + std::to_string(st.matrices.load()) + " matrices, " +
           std::to_string(st.exact_checks.load()) + " exact re-checks, " + std::to_string(st.multi_prime_checks.load()) +
           " three-prime checks");
  };

  check("F", builtin::field(), 7, [](const CodimRow& r) { return r.codim == 1; });
  check("FZ2", builtin::group_algebra_z2(), 6, [](const CodimRow& r) {
    if (r.codim != (BigInt(1) << r.n)) return false;
    for (const auto& b : r.blocks) {
      if (b.value != 1) return false;
    }
    return r.blocks.size() == static_cast<std::size_t>(r.n + 1);
  });
  check("nilpotent", builtin::nilpotent_index3(), 7, [](const CodimRow& r) { return r.n < 3 || r.codim == 0; });
  check("UT2_Z2", builtin::upper_triangular_z2(), 6,
        [](const CodimRow& r) { return r.codim == BigInt(r.n) * (BigInt(1) << (r.n - 1)) + 1; });
  return o;
}

Outcome criterion5() {
  Outcome o;
  const std::vector<std::pair<std::string, GradedAlgebraSpec>> specs{{"FZ2", builtin::group_algebra_z2()},
                                                                     {"UT2_Z2", builtin::upper_triangular_z2()}};
  const int N = 5;
  for (const auto& [name, spec] : specs) {
    CodimEngine engine(spec);
    std::vector<BigInt> c{1};
    std::vector<CocharacterRow> rows;
    for (int n = 0; n <= N; ++n) {
      if (n >= 1) c.push_back(engine.graded_codim(n).codim);
      rows.push_back(engine.cocharacter_multiplicities(n));
    }
    const auto a = engine.a_multiplicities(N);
    const auto delta = deltas_by_hand(c);
    for (int n = 0; n <= N; ++n) {
      BigInt sum = 0;
      for (const auto& [lambda, m] : rows[n].multiplicities) sum += m * oracle::count_syt(shape(lambda));
      o.expect(sum == c[n], name + ": sum m d != c_" + std::to_string(n));
      for (const auto& [lambda, m] : rows[n].multiplicities) {
        BigInt strip = 0;
        for (const auto& [mu, a_mu] : a) {
          if (oracle::horizontal_strip(shape(lambda), shape(mu))) strip += a_mu;
        }
        o.expect(strip == m, name + ": m_" + lambda.to_string() + " != sum of a over strips");
      }
      BigInt proper = 0;
      for (const auto& [lambda, a_l] : a) {
        if (lambda.size() == n) proper += a_l * oracle::count_syt(shape(lambda));
      }
      o.expect(proper == delta[n], name + ": sum a d != delta_" + std::to_string(n));
      BigInt lifted = 0;
      for (int s = 0; s <= n; ++s) lifted += binomial(n, s) * delta[s];
      o.expect(lifted == c[n], name + ": binomial identity at n=" + std::to_string(n));
    }
    o.note(name + ": c = " + join(c) + ", delta = " + join(delta));
  }
  return o;
}

Outcome criterion6(const std::vector<Computed>& computed) {
  Outcome o;
  for (const auto& c : computed) {
    const int dim = static_cast<int>(c.spec.dim());
    const int from = c.spec.unital() ? 1 : dim;
    const auto values = codims(c.table);
    int first_drop = 0;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      const int n = static_cast<int>(i) + 1;
      if (n >= from && values[i + 1] < values[i] && !first_drop) first_drop = n;
    }
    std::string line = c.name + (c.spec.unital() ? " (unital)" : " (non-unital, dim " + std::to_string(dim) + ")") +
                       ": c = " + join(values);
    if (first_drop) {
      o.fail(line + " decreases from n=" + std::to_string(first_drop) + " to n=" + std::to_string(first_drop + 1) +
             " although n >= " + std::to_string(from));
      if (!c.spec.unital()) {
        // The radical J of a non-unital algebra with J^t = 0 has t <= dim + 1.
        const int shifted = nondecreasing_from(values, 1);
        o.note(c.name + ": non-decreasing from n=" + std::to_string(shifted) + ", within the nilpotency bound dim+1=" +
               std::to_string(dim + 1) + (shifted <= dim + 1 ? " (holds)" : " (violated)"));
      }
    } else {
      o.note(line + ", non-decreasing from n=" + std::to_string(from));
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  int identities = 0;
  for (int d = 1; d <= 6; ++d) {
    for (int s = 0; s < 3 * d; ++s) {
      for (int m = 0; m < 3 * d; ++m) {
        o.expect(filter_identity_holds(d, s, m), "root-of-unity sum d=" + std::to_string(d) + " s=" + std::to_string(s) +
                                                     " m=" + std::to_string(m));
        ++identities;
      }
    }
  }
  const std::vector<Rational> betas{Rational(0), Rational(1), Rational(-1, 2)};
  int sums = 0, exact = 0;
  double worst = 0;
  for (int d = 1; d <= 4; ++d) {
    for (int m = 0; m < d; ++m) {
      for (int n = 0; n <= 30; ++n) {
        for (const auto& beta : betas) {
          for (int x = 1; x <= 2; ++x) {
            const auto r = filter_sum_check(d, m, n, beta, Rational(x));
            worst = std::max(worst, r.relative_error);
            ++sums;
            if (r.relative_error > 1e-9) {
              o.fail("relative error " + std::to_string(r.relative_error) + " at d=" + std::to_string(d) +
                     " m=" + std::to_string(m) + " n=" + std::to_string(n) + " beta=" + beta.str());
            }
            if (r.exact_checked) {
              ++exact;
              o.expect(r.exact_agrees, "exact cyclotomic check d=" + std::to_string(d) + " n=" + std::to_string(n));
            }
          }
        }
      }
    }
  }
  std::ostringstream s;
  s << identities << " cyclotomic identities, " << sums << " filtered sums (" << exact
    << " also exact), worst relative error " << std::scientific << std::setprecision(2) << worst;
  o.note(s.str());
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (int n = 1; n <= 60; ++n) {
    for (int x = 1; x <= 4; ++x) {
      o.expect(binomial_growth_exact(0, Rational(x), n) == 1, "r_n != 1 for beta=0");
    }
    o.expect(binomial_growth_exact(1, Rational(1), n) == Rational(1, 2), "r_n != 1/2 for beta=1, x=1");
  }
  const std::vector<int> ns{1, 10, 100, 1000};
  for (double r : binomial_growth_check(0, 3.0, ns)) o.expect(std::abs(r - 1) < 1e-12, "floating r_n for beta=0");
  for (double r : binomial_growth_check(1, 1.0, ns)) o.expect(std::abs(r - 0.5) < 1e-12, "floating r_n for beta=1");
  const std::vector<int> pair{1000, 2000};
  const auto r = binomial_growth_check(Rational(-3, 2), 3.0, pair);
  const double drift = std::abs(r[1] / r[0] - 1);
  o.expect(drift < 0.01, "|r_2000/r_1000 - 1| = " + std::to_string(drift));
  std::ostringstream s;
  s << "beta=-3/2, x=3: r_1000=" << r[0] << " r_2000=" << r[1] << " drift " << std::scientific << std::setprecision(2)
    << drift;
  o.note(s.str());
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::vector<std::pair<std::string, oracle::Float>> alphas{
      {"0.5", oracle::Float(0.5)}, {"1", oracle::Float(1)}, {"pi", oracle::pi()}};
  int cases = 0, failed = 0;
  // Inputs on the window, to report failures whose data coincides with
  // another profile's.
  std::map<std::vector<BigInt>, std::vector<std::string>> inputs;
  for (int l = 1; l <= 6; ++l) {
    for (int b2 = -4; b2 <= 4; ++b2) {
      for (const auto& [label, alpha] : alphas) {
        const auto s = oracle::synthetic(alpha, b2, l, 20, 60);
        inputs[s.values].push_back("l=" + std::to_string(l) + " beta=" + std::to_string(b2) + "/2 alpha=" + label);
      }
    }
  }
  for (int l = 1; l <= 6; ++l) {
    for (int b2 = -4; b2 <= 4; ++b2) {
      for (const auto& [label, alpha] : alphas) {
        ++cases;
        const double a = alpha.convert_to<double>();
        const auto s = oracle::synthetic(alpha, b2, l, 1, 60);
        std::string got;
        bool ok = false;
        try {
          const auto f = fit(s, Window{20, 60});
          const double est = f.alpha ? *f.alpha : std::numeric_limits<double>::quiet_NaN();
          ok = f.l == l && f.beta_num_over_2 == b2 && f.alpha && std::abs(est - a) <= 0.02 * a;
          std::ostringstream g;
          g << "got l=" << f.l << " beta=" << f.beta_num_over_2 << "/2 alpha=" << (f.alpha ? std::to_string(est) : "none");
          got = g.str();
        } catch (const Error& e) {
          got = std::string("error: ") + e.what();
        }
        if (!ok) {
          ++failed;
          const std::vector<BigInt> window(s.values.begin() + 19, s.values.end());
          const auto& same = inputs[window];
          std::string shared;
          if (same.size() > 1) shared = "; c_20..c_60 identical for " + std::to_string(same.size()) + " profiles";
          o.fail("l=" + std::to_string(l) + " beta=" + std::to_string(b2) + "/2 alpha=" + label + ": " + got +
                 ", c_20=" + s.at(20).str() + ", c_60=" + s.at(60).str() + shared);
        }
      }
    }
  }
  o.note(std::to_string(cases - failed) + " of " + std::to_string(cases) + " profiles recovered");
  return o;
}

Outcome criterion10(const std::vector<Computed>& computed) {
  Outcome o;
  for (const auto& c : computed) {
    const int dim = static_cast<int>(c.spec.dim());
    CodimEngine engine(c.spec);
    const int top = std::min(c.max_n, 5);
    std::string heights;
    int rows = 0;
    for (int n = 0; n <= top; ++n) {
      CocharacterRow row;
      try {
        row = engine.cocharacter_multiplicities(n);
      } catch (const InvariantViolation& e) {
        o.fail(c.name + " n=" + std::to_string(n) + ": " + e.what());
        continue;
      }
      ++rows;
      int h = 0;
      for (const auto& [lambda, m] : row.multiplicities) {
        if (m != 0) h = std::max(h, lambda.height());
        if (m != 0 && lambda.height() > dim) o.fail(c.name + ": m_" + lambda.to_string() + " = " + m.str());
      }
      const SupportSummary sum = summarize_support(row, dim);
      o.expect(sum.max_height == h, c.name + ": reported support height " + std::to_string(sum.max_height) +
                                        " != " + std::to_string(h) + " at n=" + std::to_string(n));
      o.expect(h <= dim, c.name + ": support height above dim");
      heights += (heights.empty() ? "" : ",") + std::to_string(h);
    }
    o.note(c.name + " (dim " + std::to_string(dim) + "): " + std::to_string(rows) + " rows, support heights " + heights);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_seconds;  // 0 = no runtime bound
    std::function<Outcome()> run;
  };

  std::vector<Computed> computed;
  auto add = [&](std::string name, GradedAlgebraSpec spec, int max_n) {
    CodimTable t = compute_table(spec, max_n, EngineConfig{});
    computed.push_back({std::move(name), std::move(spec), max_n, std::move(t)});
  };
  add("F", builtin::field(), 7);
  add("FZ2", builtin::group_algebra_z2(), 6);
  add("UT2_Z2", builtin::upper_triangular_z2(), 6);
  add("M2", builtin::matrix_m2(), 6);
  add("nilpotent", builtin::nilpotent_index3(), 7);
  add("upper_corner", builtin::upper_corner(), 6);

  const std::vector<Criterion> criteria{
      {1, 1, criterion1},
      {2, 10, criterion2},
      {3, 0, [&] { return criterion3(computed); }},
      {4, 120, criterion4},
      {5, 300, criterion5},
      {6, 0, [&] { return criterion6(computed); }},
      {7, 10, criterion7},
      {8, 5, criterion8},
      {9, 30, criterion9},
      {10, 0, [&] { return criterion10(computed); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      o.fail("runtime " + std::to_string(seconds) + " s exceeds " + std::to_string(c.limit_seconds) + " s");
    }
    if (!o.passed) ++failures;
    std::cout << "criterion " << c.id << ": " << (o.passed ? "PASS" : "FAIL") << " (" << std::fixed
              << std::setprecision(3) << seconds << " s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    std::cout.flush();
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << '\n';
  return failures ? 1 : 0;
}
