#pragma once

#include "gcodim/numeric.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gcodim {

/// A weakly decreasing sequence of positive integers. The empty partition is
/// a valid value with size and height zero.
///
/// Ordering is lexicographic on the parts, so within a fixed size "greater"
/// means lexicographically larger; lists are emitted in decreasing order.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts a non-negative content vector and drops zeros.
  static Partition from_content(std::span<const int> content);

  /// Parses "[4,3,1]" or "[]".
  static Partition parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }
  int height() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Row length with zero padding: row(i) == 0 for i >= height().
  int row(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// Column lengths of the Young diagram.
  Partition conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n, optionally of height at most max_height, in
/// lexicographically decreasing order.
std::vector<Partition> partitions_of(int n, std::optional<int> max_height = std::nullopt);

/// All partitions of every size 0..max_size with height <= max_height,
/// grouped by size ascending, each group lexicographically decreasing.
std::vector<Partition> partitions_up_to(int max_size, int max_height);

/// Number of standard Young tableaux of shape lambda (hook-length formula).
BigInt dim_irrep(const Partition& lambda);

/// Number of semistandard fillings of lambda with content[i] copies of i+1.
/// Zero when the content total differs from |lambda|.
BigInt kostka(const Partition& lambda, std::span<const int> content);

/// lambda dominates mu (equal sizes assumed).
bool dominates(const Partition& lambda, const Partition& mu);

/// mu is contained in lambda and lambda/mu has at most one box per column.
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);

/// Shapes obtained from mu by adding a horizontal strip of k boxes (Pieri's
/// rule), lexicographically decreasing.
std::vector<Partition> pieri_expand(const Partition& mu, int k);

/// { mu : lambda_{i+1} <= mu_i <= lambda_i for all i >= 1 }, zero padded.
/// Equivalently the mu for which lambda/mu is a horizontal strip.
/// Lexicographically decreasing within each size, sizes descending.
std::vector<Partition> lower_strip_set(const Partition& lambda);

}  // namespace gcodim
