#include "gcodim/codim.hpp"

#include "gcodim/errors.hpp"
#include "gcodim/symmetric_series.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <unordered_map>

namespace gcodim {

namespace {

// Runs fn(0..count-1) on a small pool. Results are written by index, so the
// outcome does not depend on scheduling; the lowest-index failure is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> pool;
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Number of distinct words with the given letter multiplicities.
std::uint64_t word_count(const std::vector<int>& rem) {
  std::uint64_t total = 1;
  unsigned n = 0;
  for (int r : rem) {
    for (int i = 1; i <= r; ++i) {
      ++n;
      total = total * n / static_cast<unsigned>(i);
    }
  }
  return total;
}

}  // namespace

std::vector<std::vector<int>> compositions(int n, int parts) {
  std::vector<std::vector<int>> out;
  if (parts <= 0) return out;
  std::vector<int> cur(parts, 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == parts - 1) {
      cur[i] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[i] = v;
      rec(i + 1, remaining - v);
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

CodimEngine::CodimEngine(const GradedAlgebraSpec& spec, EngineConfig config)
    : spec_(spec), config_(config), stats_(std::make_unique<RankStats>()) {
  if (config_.factorial_budget < 1 || config_.weight_degree_budget < 0 || config_.column_budget == 0) {
    throw std::invalid_argument("engine budgets must be positive");
  }
  for (std::uint32_t g = 0; g < spec_.group().order(); ++g) {
    components_.push_back(spec_.homogeneous_basis(GroupElement{g}));
  }
}

template <class Field>
ColumnMatrix<typename Field::value_type> CodimEngine::component_matrix(
    const Field& field, const std::vector<Variable>& vars) const {
  using T = typename Field::value_type;
  const std::size_t k = spec_.dim();
  const std::size_t r = vars.size();

  std::vector<int> rem;
  std::vector<std::size_t> offset{0};
  int degree = 0;
  for (const auto& v : vars) {
    rem.push_back(v.multiplicity);
    degree += v.multiplicity;
    offset.push_back(offset.back() + components_[v.degree.index].size());
  }

  ColumnMatrix<T> matrix;
  matrix.rows = word_count(rem);

  std::vector<std::vector<std::pair<std::size_t, T>>> constants(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (const auto& [m, c] : spec_.product(i, j)) constants[i * k + j].emplace_back(m, field.from(c));
    }
  }

  // Column key: for each variable, how often each basis element of its
  // component was chosen (a commutative monomial in the generic coordinates).
  std::string key(offset.back(), '\0');
  std::unordered_map<std::string, std::vector<std::int64_t>> column_ids;
  std::vector<std::vector<T>> states(degree + 1, std::vector<T>(k, field.zero()));

  auto leaf = [&](std::uint64_t row) {
    auto [it, inserted] = column_ids.try_emplace(key);
    if (inserted) it->second.assign(k, -1);
    const auto& state = states[degree];
    for (std::size_t m = 0; m < k; ++m) {
      if (field.is_zero(state[m])) continue;
      auto& id = it->second[m];
      if (id < 0) {
        if ((matrix.columns.size() + 1) * matrix.rows > config_.column_budget) {
          throw BudgetExceeded("evaluation matrix exceeds the column budget of " +
                               std::to_string(config_.column_budget) + " entries");
        }
        id = static_cast<std::int64_t>(matrix.columns.size());
        matrix.columns.emplace_back(matrix.rows, field.zero());
      }
      auto& cell = matrix.columns[id][row];
      cell = field.add(cell, state[m]);
    }
  };

  // Words are generated in lexicographic order of variable indices; `row`
  // accumulates the rank of the current word among all words.
  std::function<void(int, std::uint64_t)> dfs = [&](int pos, std::uint64_t row) {
    if (pos == degree) {
      leaf(row);
      return;
    }
    std::uint64_t skipped = 0;
    for (std::size_t v = 0; v < r; ++v) {
      if (rem[v] == 0) continue;
      --rem[v];
      const std::uint64_t below = word_count(rem);
      const auto& basis = components_[vars[v].degree.index];
      for (std::size_t t = 0; t < basis.size(); ++t) {
        const std::size_t j = basis[t];
        auto& next = states[pos + 1];
        bool nonzero = false;
        if (pos == 0) {
          std::fill(next.begin(), next.end(), field.zero());
          next[j] = field.one();
          nonzero = true;
        } else {
          std::fill(next.begin(), next.end(), field.zero());
          const auto& cur = states[pos];
          for (std::size_t i = 0; i < k; ++i) {
            if (field.is_zero(cur[i])) continue;
            for (const auto& [m, c] : constants[i * k + j]) {
              next[m] = field.add(next[m], field.mul(cur[i], c));
            }
          }
          for (const auto& x : next) {
            if (!field.is_zero(x)) {
              nonzero = true;
              break;
            }
          }
        }
        if (!nonzero) continue;  // every extension of a zero product is zero
        ++key[offset[v] + t];
        dfs(pos + 1, row + skipped);
        --key[offset[v] + t];
      }
      ++rem[v];
      skipped += below;
    }
  };
  dfs(0, 0);
  return matrix;
}

std::size_t CodimEngine::component_dim(std::vector<Variable> vars) const {
  std::erase_if(vars, [](const Variable& v) { return v.multiplicity == 0; });
  std::sort(vars.begin(), vars.end());
  if (vars.empty()) return spec_.unital() ? 1 : 0;
  for (const auto& v : vars) {
    if (components_[v.degree.index].empty()) return 0;
  }
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(vars); it != cache_.end()) return it->second;
  }
  std::vector<int> mult;
  for (const auto& v : vars) mult.push_back(v.multiplicity);
  const std::uint64_t rows = word_count(mult);
  if (BigInt(rows) > factorial(static_cast<unsigned>(config_.factorial_budget))) {
    throw BudgetExceeded("component has " + std::to_string(rows) + " words, above the factorial budget " +
                         std::to_string(config_.factorial_budget) + "!");
  }
  const std::size_t dim = rank_with_mode(
      config_.rank_mode, config_.exact_threshold,
      [&](const auto& field) { return component_matrix(field, vars); }, stats_.get());
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(std::move(vars), dim);
  return dim;
}

BigInt CodimEngine::multilinear_codim(std::span<const GroupElement> h) const {
  if (h.empty()) throw std::invalid_argument("multilinear_codim: need n >= 1");
  if (static_cast<int>(h.size()) > config_.factorial_budget) {
    throw BudgetExceeded("n = " + std::to_string(h.size()) + " exceeds the factorial budget " +
                         std::to_string(config_.factorial_budget));
  }
  std::vector<Variable> vars;
  for (auto g : h) {
    if (g.index >= spec_.group().order()) throw UnknownGroupElement("grading vector uses an unknown element");
    vars.push_back({g, 1});
  }
  return component_dim(std::move(vars));
}

CodimRow CodimEngine::graded_codim(int n) const {
  if (n < 1) throw std::invalid_argument("graded_codim: need n >= 1");
  if (n > config_.factorial_budget) {
    throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the factorial budget " +
                         std::to_string(config_.factorial_budget));
  }
  const auto order = spec_.group().composition_order();
  const auto comps = compositions(n, static_cast<int>(order.size()));
  CodimRow row;
  row.n = n;
  row.blocks.resize(comps.size());
  parallel_for(comps.size(), config_.threads, [&](std::size_t c) {
    std::vector<GroupElement> h;
    for (std::size_t i = 0; i < order.size(); ++i) h.insert(h.end(), comps[c][i], order[i]);
    row.blocks[c] = {comps[c], multilinear_codim(h)};
  });
  row.codim = 0;
  for (const auto& b : row.blocks) row.codim += multinomial(b.composition) * b.value;
  return row;
}

BigInt CodimEngine::weight_space_dim(std::span<const int> alpha) const {
  std::vector<int> content;
  int degree = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("weight_space_dim: negative content");
    if (a > 0) content.push_back(a);
    degree += a;
  }
  if (degree > config_.weight_degree_budget) {
    throw BudgetExceeded("weight of total degree " + std::to_string(degree) +
                         " exceeds the degree budget " + std::to_string(config_.weight_degree_budget));
  }
  if (degree == 0) return spec_.unital() ? 1 : 0;
  // Split each variable's degree among the group elements; different splits
  // are different multihomogeneous components and add up.
  const int s = static_cast<int>(spec_.group().order());
  std::vector<std::vector<std::vector<int>>> splits;
  for (int a : content) splits.push_back(compositions(a, s));
  BigInt total = 0;
  std::vector<Variable> vars;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == content.size()) {
      total += component_dim(vars);
      return;
    }
    for (const auto& split : splits[i]) {
      const std::size_t mark = vars.size();
      for (int g = 0; g < s; ++g) {
        if (split[g] > 0) vars.push_back({GroupElement{static_cast<std::uint32_t>(g)}, split[g]});
      }
      rec(i + 1);
      vars.resize(mark);
    }
  };
  rec(0);
  return total;
}

std::map<Partition, BigInt> solve_kostka_system(int n, std::span<const BigInt> weight_dims) {
  const auto shapes = partitions_of(n);
  if (weight_dims.size() != shapes.size()) throw std::invalid_argument("weight_dims size mismatch");
  std::map<Partition, BigInt> m;
  std::vector<BigInt> solved(shapes.size());
  for (std::size_t j = 0; j < shapes.size(); ++j) {
    BigInt v = weight_dims[j];
    for (std::size_t i = 0; i < j; ++i) {
      if (solved[i] == 0 || !dominates(shapes[i], shapes[j])) continue;
      v -= solved[i] * kostka(shapes[i], shapes[j].parts());
    }
    if (v < 0) {
      throw NegativeMultiplicity("m" + shapes[j].to_string() + " = " + v.str() + " < 0");
    }
    solved[j] = v;
    m.emplace(shapes[j], v);
  }
  return m;
}

CocharacterRow CodimEngine::cocharacter_multiplicities(int n) const {
  if (n < 0) throw std::invalid_argument("cocharacter_multiplicities: negative n");
  const auto shapes = partitions_of(n);
  std::vector<BigInt> weights(shapes.size());
  parallel_for(shapes.size(), config_.threads,
               [&](std::size_t i) { weights[i] = weight_space_dim(shapes[i].parts()); });
  CocharacterRow row{n, solve_kostka_system(n, weights)};
  for (const auto& [lambda, m] : row.multiplicities) {
    if (m != 0 && lambda.height() > static_cast<int>(spec_.dim())) {
      throw InvariantViolation("m" + lambda.to_string() + " = " + m.str() + " exceeds the height bound " +
                               std::to_string(spec_.dim()));
    }
  }
  if (n >= 1) {
    BigInt total = 0;
    for (const auto& [lambda, m] : row.multiplicities) total += m * dim_irrep(lambda);
    const BigInt c = graded_codim(n).codim;
    if (total != c) {
      throw InvariantViolation("sum m_lambda d_lambda = " + total.str() + " but c_" +
                               std::to_string(n) + " = " + c.str());
    }
  }
  return row;
}

std::map<Partition, BigInt> a_multiplicities_from_rows(std::span<const CocharacterRow> rows, int n) {
  if (n < 0) throw std::invalid_argument("a_multiplicities: negative n");
  if (static_cast<int>(rows.size()) <= n) {
    throw InsufficientTruncation("a_lambda up to degree " + std::to_string(n) +
                                 " needs cocharacter rows 0.." + std::to_string(n) + ", have " +
                                 std::to_string(rows.size()));
  }
  const int vars = std::max(n, 1);
  SchurExpansion m(vars, n);
  for (int d = 0; d <= n; ++d) {
    if (rows[d].n != d) throw InsufficientTruncation("cocharacter rows must be indexed 0..n");
    for (const auto& [lambda, value] : rows[d].multiplicities) m.add(lambda, Rational(value));
  }
  const SchurExpansion a = a_from_m(m);
  if (m_from_a(a) != m) throw InvariantViolation("m_from_a does not invert a_from_m");
  std::map<Partition, BigInt> out;
  for (const Partition& lambda : partitions_up_to(n, vars)) {
    const Rational c = a.coeff(lambda);
    if (!is_integer(c)) throw InvariantViolation("a" + lambda.to_string() + " is not integral");
    if (c < 0) throw NegativeMultiplicity("a" + lambda.to_string() + " = " + to_string(c) + " < 0");
    out.emplace(lambda, numerator(c));
  }
  return out;
}

std::map<Partition, BigInt> CodimEngine::a_multiplicities(int n) const {
  if (!spec_.unital()) throw NotUnital("a_lambda are defined through the unit; spec has none");
  std::vector<CocharacterRow> rows;
  for (int d = 0; d <= n; ++d) rows.push_back(cocharacter_multiplicities(d));
  return a_multiplicities_from_rows(rows, n);
}

std::vector<BigInt> proper_deltas(std::span<const BigInt> c) {
  std::vector<BigInt> delta(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    BigInt d = 0;
    for (std::size_t s = 0; s <= n; ++s) {
      const BigInt term = binomial(static_cast<unsigned>(n), static_cast<unsigned>(s)) * c[s];
      if ((n - s) % 2 == 0) {
        d += term;
      } else {
        d -= term;
      }
    }
    if (d < 0) throw NegativeDelta("delta_" + std::to_string(n) + " = " + d.str() + " < 0");
    delta[n] = d;
  }
  return delta;
}

std::vector<BigInt> proper_deltas(const CodimTable& table) {
  if (!table.unital) throw NotUnital("proper deltas require a unital spec");
  std::vector<BigInt> c{BigInt(1)};
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (table.rows[i].n != static_cast<int>(i) + 1) throw std::invalid_argument("codim table must start at n = 1");
    c.push_back(table.rows[i].codim);
  }
  return proper_deltas(c);
}

int nondecreasing_from(std::span<const BigInt> values, int first_n) {
  int from = first_n;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i] > values[i + 1]) from = first_n + static_cast<int>(i) + 1;
  }
  return from;
}

SupportSummary summarize_support(const CocharacterRow& row, int r) {
  SupportSummary s;
  s.n = row.n;
  for (const auto& [lambda, m] : row.multiplicities) {
    if (m == 0) continue;
    s.max_height = std::max(s.max_height, lambda.height());
    s.max_row_below = std::max(s.max_row_below, lambda.row(static_cast<std::size_t>(r)));
  }
  return s;
}

}  // namespace gcodim
