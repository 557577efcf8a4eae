#pragma once

#include "gcodim/codim.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gcodim {

struct CheckResult {
  bool passed = false;
  std::string detail;
};

/// sum_lambda m_lambda d_lambda == c_n for every row with n >= 1.
CheckResult check_cocharacter_dimension(const std::vector<CocharacterRow>& rows, const CodimTable& table);
/// m_lambda == sum over mu in lower_strip_set(lambda) of a_mu.
CheckResult check_m_from_a(const std::vector<CocharacterRow>& rows, const std::map<Partition, BigInt>& a);
/// sum_{lambda |- s} a_lambda d_lambda == delta_s.
CheckResult check_delta_from_a(const std::map<Partition, BigInt>& a, const std::vector<BigInt>& delta);
/// c_n == sum_s binom(n,s) delta_s, with c_0 = 1.
CheckResult check_binomial_lift(const std::vector<BigInt>& delta, const CodimTable& table);
/// m_lambda == 0 whenever h(lambda) > max_height.
CheckResult check_height_bound(const std::vector<CocharacterRow>& rows, int max_height);

/// First n from which c_n is guaranteed non-decreasing: 1 for unital specs,
/// dim + 1 otherwise (the radical is nilpotent of index at most dim + 1, and
/// at most dim when the semisimple part is non-zero).
int monotone_threshold(const GradedAlgebraSpec& spec);

/// "non-decreasing from n=3 (all zero)" style verdict for a codim table.
std::string monotonicity_verdict(const CodimTable& table);

struct SelftestReport {
  enum class Status { pass, fail, skipped };
  std::vector<std::string> checks;
  std::vector<std::string> subjects;
  std::vector<std::vector<Status>> cells;  // [check][subject]
  std::vector<std::string> failures;       // human-readable details

  bool all_passed() const;
  void print(std::ostream& out) const;
};

/// Runs the invariant suite over the built-in specs up to degree max_n.
SelftestReport run_selftest(const EngineConfig& config, int max_n = 4);

}  // namespace gcodim
