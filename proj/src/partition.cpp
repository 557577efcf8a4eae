#include "gcodim/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gcodim {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::from_content(std::span<const int> content) {
  std::vector<int> parts;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("content entries must be non-negative");
    if (c > 0) parts.push_back(c);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("partition must look like [a,b,...]");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto token = text.substr(0, comma);
    std::size_t used = 0;
    int v = std::stoi(std::string(token), &used);
    if (used == 0) throw std::invalid_argument("bad partition entry");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  for (int j = 0; j < row(0); ++j) {
    int len = 0;
    while (len < height() && parts_[len] > j) ++len;
    cols.push_back(len);
  }
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ']';
  return out.str();
}

std::vector<Partition> partitions_of(int n, std::optional<int> max_height) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  const int cap = max_height.value_or(n);
  std::vector<Partition> out;
  std::vector<int> cur;
  // Largest first part first, so the output is lexicographically decreasing.
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == cap) return;
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_height) {
  std::vector<Partition> out;
  for (int s = 0; s <= max_size; ++s) {
    auto group = partitions_of(s, max_height);
    out.insert(out.end(), group.begin(), group.end());
  }
  return out;
}

BigInt dim_irrep(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  BigInt hooks = 1;
  for (int i = 0; i < lambda.height(); ++i) {
    for (int j = 0; j < lambda.row(i); ++j) {
      hooks *= (lambda.row(i) - j - 1) + (conj.row(j) - i - 1) + 1;
    }
  }
  return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  int a = 0, b = 0;
  const int h = std::max(lambda.height(), mu.height());
  for (int i = 0; i < h; ++i) {
    a += lambda.row(i);
    b += mu.row(i);
    if (a < b) return false;
  }
  return true;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
  if (mu.height() > lambda.height()) return false;
  for (int i = 0; i < lambda.height(); ++i) {
    if (mu.row(i) > lambda.row(i)) return false;
    if (mu.row(i) < lambda.row(i + 1)) return false;
  }
  return true;
}

std::vector<Partition> lower_strip_set(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur(lambda.height(), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == lambda.height()) {
      std::vector<int> parts;
      for (int v : cur) {
        if (v > 0) parts.push_back(v);
      }
      out.emplace_back(std::move(parts));
      return;
    }
    for (int v = lambda.row(i); v >= lambda.row(i + 1); --v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  });
  return out;
}

std::vector<Partition> pieri_expand(const Partition& mu, int k) {
  if (k < 0) throw std::invalid_argument("pieri_expand: negative k");
  std::vector<Partition> out;
  const int rows = mu.height() + 1;
  std::vector<int> cur(rows, 0);
  // Row i may grow up to mu_{i-1} (row 0 unbounded).
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == rows) {
      if (remaining != 0) return;
      std::vector<int> parts;
      for (int v : cur) {
        if (v > 0) parts.push_back(v);
      }
      out.emplace_back(std::move(parts));
      return;
    }
    const int cap = i == 0 ? remaining : std::min(remaining, mu.row(i - 1) - mu.row(i));
    for (int add = cap; add >= 0; --add) {
      cur[i] = mu.row(i) + add;
      rec(i + 1, remaining - add);
    }
  };
  rec(0, k);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

// K(lambda, content) by peeling the horizontal strip holding the largest
// letter. Content is consumed from the back.
class KostkaSolver {
 public:
  explicit KostkaSolver(std::vector<int> content) : content_(std::move(content)) {}

  BigInt solve(const Partition& lambda, std::size_t letters) {
    if (letters == 0) return lambda.empty() ? 1 : 0;
    if (lambda.height() > static_cast<int>(letters)) return 0;
    auto key = std::make_pair(lambda, letters);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int strip = content_[letters - 1];
    BigInt total = 0;
    for (const Partition& mu : lower_strip_set(lambda)) {
      if (lambda.size() - mu.size() == strip) total += solve(mu, letters - 1);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::vector<int> content_;
  std::map<std::pair<Partition, std::size_t>, BigInt> memo_;
};

}  // namespace

BigInt kostka(const Partition& lambda, std::span<const int> content) {
  int total = 0;
  std::vector<int> nonzero;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("kostka: negative content");
    total += c;
    if (c > 0) nonzero.push_back(c);
  }
  if (total != lambda.size()) return 0;
  // Kostka numbers are symmetric in the content; a decreasing order keeps the
  // recursion shallow on the large strips.
  std::sort(nonzero.begin(), nonzero.end(), std::greater<>());
  KostkaSolver solver(nonzero);
  return solver.solve(lambda, nonzero.size());
}

}  // namespace gcodim
