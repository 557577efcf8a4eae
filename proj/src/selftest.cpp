#include "gcodim/selftest.hpp"

#include "gcodim/asymptotics.hpp"
#include "gcodim/builtin_specs.hpp"
#include "gcodim/errors.hpp"
#include "gcodim/symmetric_series.hpp"

#include <functional>
#include <iomanip>

namespace gcodim {

namespace {

BigInt lookup(const std::map<Partition, BigInt>& a, const Partition& p) {
  auto it = a.find(p);
  return it == a.end() ? BigInt(0) : it->second;
}

CheckResult ok() { return {true, ""}; }
CheckResult fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

CheckResult check_cocharacter_dimension(const std::vector<CocharacterRow>& rows, const CodimTable& table) {
  for (const auto& row : rows) {
    if (row.n < 1 || row.n > static_cast<int>(table.rows.size())) continue;
    BigInt total = 0;
    for (const auto& [lambda, m] : row.multiplicities) total += m * dim_irrep(lambda);
    const BigInt& c = table.rows[row.n - 1].codim;
    if (total != c) {
      return fail("n=" + std::to_string(row.n) + ": sum m d = " + total.str() + ", c_n = " + c.str());
    }
  }
  return ok();
}

CheckResult check_m_from_a(const std::vector<CocharacterRow>& rows, const std::map<Partition, BigInt>& a) {
  int top = -1;
  for (const auto& [lambda, v] : a) top = std::max(top, lambda.size());
  for (const auto& row : rows) {
    if (row.n > top) continue;
    for (const auto& [lambda, m] : row.multiplicities) {
      BigInt sum = 0;
      for (const Partition& mu : lower_strip_set(lambda)) sum += lookup(a, mu);
      if (sum != m) {
        return fail("m" + lambda.to_string() + " = " + m.str() + " but the strip sum is " + sum.str());
      }
    }
  }
  return ok();
}

CheckResult check_delta_from_a(const std::map<Partition, BigInt>& a, const std::vector<BigInt>& delta) {
  int top = -1;
  for (const auto& [lambda, v] : a) top = std::max(top, lambda.size());
  for (int s = 0; s <= top && s < static_cast<int>(delta.size()); ++s) {
    BigInt sum = 0;
    for (const Partition& lambda : partitions_of(s)) sum += lookup(a, lambda) * dim_irrep(lambda);
    if (sum != delta[s]) {
      return fail("s=" + std::to_string(s) + ": sum a d = " + sum.str() + ", delta_s = " + delta[s].str());
    }
  }
  return ok();
}

CheckResult check_binomial_lift(const std::vector<BigInt>& delta, const CodimTable& table) {
  const auto lifted = binomial_lift(delta);
  for (std::size_t n = 0; n < lifted.size(); ++n) {
    const BigInt c = n == 0 ? BigInt(1) : table.rows.at(n - 1).codim;
    if (lifted[n] != c) {
      return fail("n=" + std::to_string(n) + ": lift gives " + lifted[n].str() + ", c_n = " + c.str());
    }
  }
  return ok();
}

CheckResult check_height_bound(const std::vector<CocharacterRow>& rows, int max_height) {
  for (const auto& row : rows) {
    for (const auto& [lambda, m] : row.multiplicities) {
      if (m != 0 && lambda.height() > max_height) {
        return fail("m" + lambda.to_string() + " = " + m.str() + " with height above " + std::to_string(max_height));
      }
    }
  }
  return ok();
}

int monotone_threshold(const GradedAlgebraSpec& spec) {
  return spec.unital() ? 1 : static_cast<int>(spec.dim()) + 1;
}

std::string monotonicity_verdict(const CodimTable& table) {
  if (table.rows.empty()) return "no rows computed";
  std::vector<BigInt> c;
  for (const auto& r : table.rows) c.push_back(r.codim);
  const int from = nondecreasing_from(c, table.rows.front().n);
  std::string verdict = "non-decreasing from n=" + std::to_string(from);
  const int last = table.rows.back().n;
  if (from > last) return "not non-decreasing at the end of the computed range (n=" + std::to_string(last) + ")";
  bool zero = true;
  for (const auto& r : table.rows) {
    if (r.n >= from && r.codim != 0) zero = false;
  }
  if (zero) verdict += " (all zero)";
  return verdict;
}

bool SelftestReport::all_passed() const {
  for (const auto& row : cells) {
    for (auto s : row) {
      if (s == Status::fail) return false;
    }
  }
  return true;
}

void SelftestReport::print(std::ostream& out) const {
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.size());
  out << std::left << std::setw(static_cast<int>(width)) << "check";
  for (const auto& s : subjects) out << "  " << std::setw(static_cast<int>(std::max<std::size_t>(s.size(), 4))) << s;
  out << '\n';
  for (std::size_t i = 0; i < checks.size(); ++i) {
    out << std::left << std::setw(static_cast<int>(width)) << checks[i];
    for (std::size_t j = 0; j < subjects.size(); ++j) {
      const char* mark = cells[i][j] == Status::pass ? "pass" : cells[i][j] == Status::fail ? "FAIL" : "-";
      out << "  " << std::setw(static_cast<int>(std::max<std::size_t>(subjects[j].size(), 4))) << mark;
    }
    out << '\n';
  }
  for (const auto& f : failures) out << "  " << f << '\n';
  out << (all_passed() ? "selftest: all checks passed" : "selftest: FAILURES") << '\n';
}

SelftestReport run_selftest(const EngineConfig& config, int max_n) {
  struct Subject {
    std::string name;
    std::optional<GradedAlgebraSpec> spec;
  };
  std::vector<Subject> subjects;
  subjects.push_back({"library", std::nullopt});
  subjects.push_back({"F", builtin::field()});
  subjects.push_back({"FZ2", builtin::group_algebra_z2()});
  subjects.push_back({"UT2_Z2", builtin::upper_triangular_z2()});
  subjects.push_back({"nilpotent", builtin::nilpotent_index3()});
  subjects.push_back({"upper_corner", builtin::upper_corner()});
  subjects.push_back({"M2", builtin::matrix_m2()});

  using Status = SelftestReport::Status;
  SelftestReport report;
  for (const auto& s : subjects) report.subjects.push_back(s.name);

  auto run = [&](const std::string& check, std::size_t subject, const std::function<CheckResult()>& fn) {
    auto it = std::find(report.checks.begin(), report.checks.end(), check);
    std::size_t row = static_cast<std::size_t>(it - report.checks.begin());
    if (it == report.checks.end()) {
      report.checks.push_back(check);
      report.cells.emplace_back(subjects.size(), Status::skipped);
    }
    CheckResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = fail(e.what());
    }
    report.cells[row][subject] = r.passed ? Status::pass : Status::fail;
    if (!r.passed) report.failures.push_back(check + " [" + subjects[subject].name + "]: " + r.detail);
  };

  // Library-level identities.
  run("schur vanishes iff height > k", 0, [] {
    for (int size = 0; size <= 6; ++size) {
      for (const auto& lambda : partitions_of(size)) {
        for (int k = 1; k <= 4; ++k) {
          const bool zero = schur_poly(lambda, k, size).is_zero();
          if (zero != (lambda.height() > k)) return fail(lambda.to_string() + " with k=" + std::to_string(k));
        }
      }
    }
    return ok();
  });
  run("pieri expansion", 0, [] {
    for (int size = 0; size <= 4; ++size) {
      for (const auto& mu : partitions_of(size)) {
        for (int k = 0; k <= 3; ++k) {
          const int vars = size + k;
          const auto e = expand_in_schur(schur_poly(mu, std::max(vars, 1), size + k) *
                                         schur_poly(Partition{std::vector<int>(k > 0 ? 1 : 0, k)},
                                                    std::max(vars, 1), size + k));
          SchurExpansion want(std::max(vars, 1), size + k);
          for (const auto& lambda : pieri_expand(mu, k)) want.set(lambda, 1);
          if (e.truncated(size + k) != want) return fail(mu.to_string() + " * s_(" + std::to_string(k) + ")");
        }
      }
    }
    return ok();
  });
  run("filter identity in Z[zeta_d]", 0, [] {
    for (int d = 1; d <= 6; ++d) {
      for (int s = 0; s < 3 * d; ++s) {
        for (int m = 0; m < 3 * d; ++m) {
          if (!filter_identity_holds(d, s, m)) return fail("d=" + std::to_string(d));
        }
      }
    }
    return ok();
  });
  run("binomial growth exact values", 0, [] {
    for (int n = 1; n <= 30; ++n) {
      if (binomial_growth_exact(0, Rational(2), n) != 1) return fail("beta=0");
      if (binomial_growth_exact(1, Rational(1), n) != Rational(1, 2)) return fail("beta=1, x=1");
    }
    return ok();
  });

  for (std::size_t i = 1; i < subjects.size(); ++i) {
    const GradedAlgebraSpec& spec = *subjects[i].spec;
    CodimEngine engine(spec, config);
    CodimTable table{spec.unital(), {}};
    std::vector<CocharacterRow> rows;
    std::optional<std::map<Partition, BigInt>> a;
    std::optional<std::vector<BigInt>> delta;
    run("engine runs", i, [&] {
      for (int n = 1; n <= max_n; ++n) table.rows.push_back(engine.graded_codim(n));
      for (int n = 0; n <= max_n; ++n) rows.push_back(engine.cocharacter_multiplicities(n));
      return ok();
    });
    if (rows.size() != static_cast<std::size_t>(max_n + 1)) continue;
    run("sum m_lambda d_lambda = c_n", i, [&] { return check_cocharacter_dimension(rows, table); });
    run("m_lambda = 0 above height dim", i,
        [&] { return check_height_bound(rows, static_cast<int>(spec.dim())); });
    run("monotone from threshold", i, [&] {
      std::vector<BigInt> c;
      for (const auto& r : table.rows) c.push_back(r.codim);
      const int from = nondecreasing_from(c, 1);
      if (from > monotone_threshold(spec)) {
        return fail(monotonicity_verdict(table) + ", threshold " + std::to_string(monotone_threshold(spec)));
      }
      return ok();
    });
    run("modular rank = exact rank", i, [&] {
      EngineConfig exact = config;
      exact.rank_mode = RankMode::exact;
      CodimEngine check(spec, exact);
      for (int n = 1; n <= std::min(max_n, 4); ++n) {
        if (check.graded_codim(n).codim != table.rows[n - 1].codim) return fail("n=" + std::to_string(n));
      }
      return ok();
    });
    if (!spec.unital()) continue;
    run("delta_s >= 0", i, [&] {
      delta = proper_deltas(table);
      return ok();
    });
    run("m_lambda = sum of a_mu over strips", i, [&] {
      a = a_multiplicities_from_rows(rows, max_n);
      return check_m_from_a(rows, *a);
    });
    if (a && delta) {
      run("delta_s = sum a_lambda d_lambda", i, [&] { return check_delta_from_a(*a, *delta); });
    }
    if (delta) {
      run("c_n = sum binom(n,s) delta_s", i, [&] { return check_binomial_lift(*delta, table); });
    }
  }
  return report;
}

}  // namespace gcodim
