#pragma once

#include "gcodim/numeric.hpp"

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcodim {

struct GroupElement {
  std::uint32_t index = 0;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finite group given by its multiplication table. The constructor checks the
/// group axioms exhaustively and throws GroupError with a witness.
class GroupTable {
 public:
  GroupTable(std::vector<std::string> labels, std::vector<std::vector<std::uint32_t>> table,
             std::uint32_t identity);

  /// Z_n with labels "e", "g", "g^2", ...
  static GroupTable cyclic(int n);
  static GroupTable trivial() { return cyclic(1); }

  std::size_t order() const noexcept { return labels_.size(); }
  GroupElement identity() const noexcept { return {identity_}; }
  GroupElement multiply(GroupElement a, GroupElement b) const;
  const std::string& label(GroupElement g) const;
  std::optional<GroupElement> find(std::string_view label) const;

  /// Non-identity elements in table order followed by the identity; the
  /// index order used for composition blocks.
  std::vector<GroupElement> composition_order() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::uint32_t identity_;
};

/// Sparse coordinate vector: (basis index, coefficient) pairs, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// A finite-dimensional G-graded associative algebra given by structure
/// constants on a homogeneous basis. Construction validates associativity,
/// grading compatibility and the unit (if one is claimed) on every basis
/// triple or pair; any spec that exists is valid.
///
/// Ranks downstream are computed over the rationals.
class GradedAlgebraSpec {
 public:
  struct Product {
    std::size_t left;
    std::size_t right;
    SparseVector result;
  };

  GradedAlgebraSpec(GroupTable group, std::vector<std::string> basis,
                    std::vector<GroupElement> grading, std::vector<Product> products,
                    std::optional<std::vector<Rational>> unit = std::nullopt);

  const GroupTable& group() const noexcept { return group_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::string& basis_label(std::size_t i) const { return basis_.at(i); }
  std::optional<std::size_t> find_basis(std::string_view label) const;
  GroupElement grading(std::size_t i) const { return grading_.at(i); }

  /// b_i * b_j in the basis.
  const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  bool unital() const noexcept { return unit_.has_value(); }
  const std::optional<std::vector<Rational>>& unit() const noexcept { return unit_; }

  /// Bilinear extension of the structure constants. Throws DimensionError.
  std::vector<Rational> multiply(std::span<const Rational> x, std::span<const Rational> y) const;

  /// Basis indices of the homogeneous component W_g (possibly empty).
  std::vector<std::size_t> homogeneous_basis(GroupElement g) const;
  std::vector<std::size_t> homogeneous_basis(std::string_view group_label) const;

  /// Serializes to the JSON document accepted by load_spec.
  std::string to_json() const;

 private:
  void validate() const;

  GroupTable group_;
  std::vector<std::string> basis_;
  std::vector<GroupElement> grading_;
  std::vector<SparseVector> table_;
  std::optional<std::vector<Rational>> unit_;
};

/// Parses and validates the JSON spec document:
///   { "group": {"elements": [...], "table": [[...]], "identity": "e"}
///              or {"cyclic": n},
///     "basis": ["b1", ...], "grading": {"b1": "e", ...},
///     "products": [{"left": "bi", "right": "bj", "result": [["bm", "p/q"], ...]}, ...],
///     "unit": [["bm", "p/q"], ...] (optional) }
/// Omitted products are zero.
GradedAlgebraSpec load_spec(std::string_view document);
GradedAlgebraSpec load_spec_file(const std::filesystem::path& path);

}  // namespace gcodim
