#pragma once

#include "gcodim/algebra.hpp"
#include "gcodim/numeric.hpp"
#include "gcodim/partition.hpp"
#include "gcodim/rank.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace gcodim {

struct EngineConfig {
  /// Largest multilinear degree n (n! evaluation rows).
  int factorial_budget = 7;
  /// Largest total degree for weight-space computations.
  int weight_degree_budget = 10;
  /// Largest evaluation matrix, in entries (rows x columns).
  std::size_t column_budget = 5'000'000;
  RankMode rank_mode = RankMode::modular;
  /// Matrices up to this many entries are re-checked by exact elimination
  /// under RankMode::both.
  std::size_t exact_threshold = 2000;
  unsigned threads = 1;
};

/// c_{n_1,...,n_s} for one composition, indexed by GroupTable::composition_order().
struct CompositionBlock {
  std::vector<int> composition;
  BigInt value;
};

struct CodimRow {
  int n = 0;
  BigInt codim;
  std::vector<CompositionBlock> blocks;
};

struct CodimTable {
  bool unital = false;
  std::vector<CodimRow> rows;  // n = 1, 2, ...
};

struct CocharacterRow {
  int n = 0;
  /// Every lambda |- n, lexicographically decreasing key order on output.
  std::map<Partition, BigInt> multiplicities;
};

/// Compositions of n into `parts` non-negative entries, colexicographic
/// (last coordinate most significant).
std::vector<std::vector<int>> compositions(int n, int parts);

/// Multilinear and weight-space dimensions of the relatively free G-graded
/// algebra of a spec, computed as ranks of evaluation matrices.
///
/// A homogeneous component is described by graded variables with degrees;
/// rows are the distinct words in those variables, columns are pairs
/// (commutative monomial in the generic coordinates, output coordinate).
/// Multilinear components are the special case of degree-one variables,
/// where the monomial is simply a basis assignment. Results are cached per
/// canonical component; the engine is safe to share between threads.
class CodimEngine {
 public:
  CodimEngine(const GradedAlgebraSpec& spec, EngineConfig config = {});

  const GradedAlgebraSpec& spec() const noexcept { return spec_; }
  const EngineConfig& config() const noexcept { return config_; }
  const RankStats& rank_stats() const noexcept { return *stats_; }

  /// dim C_h for a grading vector h (n = h.size() >= 1).
  BigInt multilinear_codim(std::span<const GroupElement> h) const;

  /// One CodimRow: every composition block and their multinomial sum.
  CodimRow graded_codim(int n) const;

  /// Dimension of the weight space with content alpha.
  BigInt weight_space_dim(std::span<const int> alpha) const;

  /// m_lambda for all lambda |- n via the Kostka system on weight spaces;
  /// checks sum m_lambda d_lambda == c_n.
  CocharacterRow cocharacter_multiplicities(int n) const;

  /// a_lambda for all |lambda| <= n (unital specs only).
  std::map<Partition, BigInt> a_multiplicities(int n) const;

 private:
  struct Variable {
    GroupElement degree;
    int multiplicity;
    friend auto operator<=>(const Variable&, const Variable&) = default;
  };
  std::size_t component_dim(std::vector<Variable> vars) const;

  template <class Field>
  ColumnMatrix<typename Field::value_type> component_matrix(const Field& field,
                                                            const std::vector<Variable>& vars) const;

  GradedAlgebraSpec spec_;
  EngineConfig config_;
  std::vector<std::vector<std::size_t>> components_;  // basis indices per group element
  std::unique_ptr<RankStats> stats_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::vector<Variable>, std::size_t> cache_;
};

/// Solves H(mu) = sum_lambda m_lambda K(lambda, mu) for all mu |- n, given
/// H in the order of partitions_of(n). Throws NegativeMultiplicity.
std::map<Partition, BigInt> solve_kostka_system(int n, std::span<const BigInt> weight_dims);

/// a_lambda from cocharacter rows for degrees 0..n (rows[d].n == d).
/// Throws InsufficientTruncation when rows are missing, NegativeMultiplicity
/// or InvariantViolation on non-integral output.
std::map<Partition, BigInt> a_multiplicities_from_rows(std::span<const CocharacterRow> rows, int n);

/// delta_n = sum_s (-1)^{n-s} binom(n,s) c_s for c = c_0..c_N.
/// Throws NegativeDelta if any delta is negative.
std::vector<BigInt> proper_deltas(std::span<const BigInt> c_from_zero);

/// The same for a computed table, with c_0 = 1. Throws NotUnital.
std::vector<BigInt> proper_deltas(const CodimTable& table);

/// Smallest n0 such that the sequence (indexed from first_n) is
/// non-decreasing from n0 onward within the computed range.
int nondecreasing_from(std::span<const BigInt> values, int first_n);

/// Height and strip statistics of cocharacter supports.
struct SupportSummary {
  int n = 0;
  int max_height = 0;       // over lambda with m_lambda != 0
  int max_row_below = 0;    // max lambda_{r+1} over the support, for the requested r
};
SupportSummary summarize_support(const CocharacterRow& row, int r);

}  // namespace gcodim
