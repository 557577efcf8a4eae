#include "gcodim/symmetric_series.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gcodim {

namespace {

void write_row(std::ostream& out, const Partition& key, const Rational& value) {
  out << '"' << key.to_string() << "\"," << to_string(value) << '\n';
}

template <class Map>
void write_sorted(std::ostream& out, const Map& coeffs) {
  std::vector<Partition> keys;
  for (const auto& [k, v] : coeffs) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  });
  for (const auto& k : keys) write_row(out, k, coeffs.at(k));
}

}  // namespace

SymSeries::SymSeries(int num_vars, int trunc) : num_vars_(num_vars), trunc_(trunc) {
  if (num_vars < 1) throw std::invalid_argument("SymSeries: num_vars must be positive");
  if (trunc < 0) throw std::invalid_argument("SymSeries: negative truncation degree");
}

Rational SymSeries::coeff(const Partition& sorted_exponent) const {
  auto it = coeffs_.find(sorted_exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational SymSeries::monomial_coeff(std::span<const int> exponent) const {
  if (static_cast<int>(exponent.size()) > num_vars_) {
    for (std::size_t i = num_vars_; i < exponent.size(); ++i) {
      if (exponent[i] != 0) return 0;
    }
  }
  return coeff(Partition::from_content(exponent));
}

void SymSeries::add(const Partition& key, const Rational& value) {
  if (value == 0 || key.height() > num_vars_ || key.size() > trunc_) return;
  auto [it, inserted] = coeffs_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

SymSeries& SymSeries::operator+=(const SymSeries& other) {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("SymSeries: variable count mismatch");
  trunc_ = std::min(trunc_, other.trunc_);
  std::erase_if(coeffs_, [&](const auto& kv) { return kv.first.size() > trunc_; });
  for (const auto& [k, v] : other.coeffs_) add(k, v);
  return *this;
}

SymSeries& SymSeries::operator-=(const SymSeries& other) {
  SymSeries neg = other;
  neg *= Rational(-1);
  return *this += neg;
}

SymSeries& SymSeries::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, v] : coeffs_) v *= scalar;
  return *this;
}

SymSeries operator*(const SymSeries& a, const SymSeries& b) {
  if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("SymSeries: variable count mismatch");
  SymSeries out(a.num_vars_, std::min(a.trunc_, b.trunc_));
  if (a.is_zero() || b.is_zero()) return out;
  // (fg)[lambda] = sum over alpha + beta = lambda (as exponent vectors) of
  // f[sort alpha] * g[sort beta]. Enumerate alpha componentwise under lambda.
  for (const Partition& lambda : partitions_up_to(out.trunc_, out.num_vars_)) {
    const int h = lambda.height();
    std::vector<int> alpha(h, 0), beta(h, 0);
    Rational total = 0;
    std::function<void(int)> rec = [&](int i) {
      if (i == h) {
        auto fa = a.coeffs_.find(Partition::from_content(alpha));
        if (fa == a.coeffs_.end()) return;
        auto gb = b.coeffs_.find(Partition::from_content(beta));
        if (gb == b.coeffs_.end()) return;
        total += fa->second * gb->second;
        return;
      }
      for (int v = 0; v <= lambda.row(i); ++v) {
        alpha[i] = v;
        beta[i] = lambda.row(i) - v;
        rec(i + 1);
      }
    };
    rec(0);
    out.add(lambda, total);
  }
  return out;
}

void SymSeries::write_csv(std::ostream& out) const {
  out << "sorted_exponent,coefficient\n";
  write_sorted(out, coeffs_);
}

SchurExpansion::SchurExpansion(int num_vars, int trunc) : num_vars_(num_vars), trunc_(trunc) {
  if (num_vars < 1) throw std::invalid_argument("SchurExpansion: num_vars must be positive");
  if (trunc < 0) throw std::invalid_argument("SchurExpansion: negative truncation degree");
}

Rational SchurExpansion::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SchurExpansion::add(const Partition& lambda, const Rational& value) {
  if (value == 0 || lambda.height() > num_vars_ || lambda.size() > trunc_) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void SchurExpansion::set(const Partition& lambda, const Rational& value) {
  coeffs_.erase(lambda);
  add(lambda, value);
}

SchurExpansion SchurExpansion::truncated(int degree) const {
  SchurExpansion out(num_vars_, std::min(trunc_, degree));
  for (const auto& [k, v] : coeffs_) out.add(k, v);
  return out;
}

void SchurExpansion::write_csv(std::ostream& out) const {
  out << "partition,coefficient\n";
  write_sorted(out, coeffs_);
}

SymSeries schur_poly(const Partition& lambda, int num_vars, int trunc) {
  SymSeries out(num_vars, trunc);
  if (lambda.height() > num_vars || lambda.size() > trunc) return out;
  for (const Partition& mu : partitions_of(lambda.size(), num_vars)) {
    if (!dominates(lambda, mu)) continue;
    out.add(mu, Rational(kostka(lambda, mu.parts())));
  }
  return out;
}

SchurExpansion expand_in_schur(const SymSeries& f) {
  SchurExpansion out(f.num_vars(), f.trunc());
  for (int d = 0; d <= f.trunc(); ++d) {
    // Lexicographically decreasing is a linear extension of dominance, and
    // K(lambda, mu) != 0 forces lambda to dominate mu.
    const auto shapes = partitions_of(d, f.num_vars());
    std::vector<Rational> solved(shapes.size());
    for (std::size_t j = 0; j < shapes.size(); ++j) {
      Rational c = f.coeff(shapes[j]);
      for (std::size_t i = 0; i < j; ++i) {
        if (solved[i] == 0 || !dominates(shapes[i], shapes[j])) continue;
        c -= solved[i] * Rational(kostka(shapes[i], shapes[j].parts()));
      }
      solved[j] = c;
      out.add(shapes[j], c);
    }
  }
  return out;
}

SymSeries to_series(const SchurExpansion& e) {
  SymSeries out(e.num_vars(), e.trunc());
  for (const auto& [lambda, c] : e.coeffs()) {
    SymSeries s = schur_poly(lambda, e.num_vars(), e.trunc());
    s *= c;
    out += s;
  }
  return out;
}

SymSeries free_poly_series(int num_vars, int trunc) {
  SymSeries out(num_vars, trunc);
  for (const Partition& p : partitions_up_to(trunc, num_vars)) out.add(p, Rational(1));
  return out;
}

SymSeries alternating_elementary_product(int num_vars, int trunc) {
  SymSeries out(num_vars, trunc);
  for (int j = 0; j <= std::min(num_vars, trunc); ++j) {
    out.add(Partition(std::vector<int>(j, 1)), Rational(j % 2 == 0 ? 1 : -1));
  }
  return out;
}

SchurExpansion m_from_a(const SchurExpansion& a) {
  SchurExpansion m(a.num_vars(), a.trunc());
  if (a.is_zero()) return m;
  for (const Partition& lambda : partitions_up_to(a.trunc(), a.num_vars())) {
    Rational total = 0;
    for (const Partition& mu : lower_strip_set(lambda)) total += a.coeff(mu);
    m.add(lambda, total);
  }
  return m;
}

SchurExpansion a_from_m(const SchurExpansion& m) {
  if (m.is_zero()) return SchurExpansion(m.num_vars(), m.trunc());
  SymSeries product = to_series(m) * alternating_elementary_product(m.num_vars(), m.trunc());
  return expand_in_schur(product);
}

}  // namespace gcodim
