#include "gcodim/algebra.hpp"

#include "gcodim/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace gcodim {

namespace {

std::string triple_str(const std::string& a, const std::string& b, const std::string& c) {
  return "(" + a + ", " + b + ", " + c + ")";
}

}  // namespace

GroupTable::GroupTable(std::vector<std::string> labels,
                       std::vector<std::vector<std::uint32_t>> table, std::uint32_t identity)
    : labels_(std::move(labels)), table_(std::move(table)), identity_(identity) {
  const std::size_t s = labels_.size();
  if (s == 0) throw GroupError("group has no elements");
  if (identity_ >= s) throw GroupError("identity index out of range");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != s) {
    throw GroupError("duplicate group element labels");
  }
  if (table_.size() != s) {
    throw GroupError("multiplication table has " + std::to_string(table_.size()) +
                     " rows, expected " + std::to_string(s));
  }
  for (std::size_t a = 0; a < s; ++a) {
    if (table_[a].size() != s) {
      throw GroupError("row " + labels_[a] + " of the multiplication table has " +
                       std::to_string(table_[a].size()) + " entries, expected " +
                       std::to_string(s));
    }
    for (auto v : table_[a]) {
      if (v >= s) throw GroupError("table entry out of range in row " + labels_[a]);
    }
  }
  for (std::size_t a = 0; a < s; ++a) {
    if (table_[identity_][a] != a || table_[a][identity_] != a) {
      throw GroupError("identity law fails: e*" + labels_[a] + " or " + labels_[a] +
                       "*e differs from " + labels_[a]);
    }
  }
  for (std::size_t a = 0; a < s; ++a) {
    std::vector<bool> row_seen(s, false), col_seen(s, false);
    for (std::size_t b = 0; b < s; ++b) {
      if (row_seen[table_[a][b]]) {
        throw GroupError("not a Latin square: row " + labels_[a] + " repeats " +
                         labels_[table_[a][b]]);
      }
      if (col_seen[table_[b][a]]) {
        throw GroupError("not a Latin square: column " + labels_[a] + " repeats " +
                         labels_[table_[b][a]]);
      }
      row_seen[table_[a][b]] = true;
      col_seen[table_[b][a]] = true;
    }
  }
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      for (std::size_t c = 0; c < s; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw GroupError("associativity fails on " +
                           triple_str(labels_[a], labels_[b], labels_[c]));
        }
      }
    }
  }
}

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) throw GroupError("cyclic group order must be positive");
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (int i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
    for (int j = 0; j < n; ++j) table[i][j] = static_cast<std::uint32_t>((i + j) % n);
  }
  return GroupTable(std::move(labels), std::move(table), 0);
}

GroupElement GroupTable::multiply(GroupElement a, GroupElement b) const {
  return {table_.at(a.index).at(b.index)};
}

const std::string& GroupTable::label(GroupElement g) const {
  if (g.index >= labels_.size()) throw UnknownGroupElement("group element index out of range");
  return labels_[g.index];
}

std::optional<GroupElement> GroupTable::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return GroupElement{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

std::vector<GroupElement> GroupTable::composition_order() const {
  std::vector<GroupElement> out;
  for (std::uint32_t i = 0; i < labels_.size(); ++i) {
    if (i != identity_) out.push_back({i});
  }
  out.push_back({identity_});
  return out;
}

GradedAlgebraSpec::GradedAlgebraSpec(GroupTable group, std::vector<std::string> basis,
                                     std::vector<GroupElement> grading,
                                     std::vector<Product> products,
                                     std::optional<std::vector<Rational>> unit)
    : group_(std::move(group)),
      basis_(std::move(basis)),
      grading_(std::move(grading)),
      unit_(std::move(unit)) {
  const std::size_t k = basis_.size();
  if (k == 0) throw SchemaError("algebra must have a non-empty basis");
  if (std::set<std::string>(basis_.begin(), basis_.end()).size() != k) {
    throw SchemaError("duplicate basis labels");
  }
  if (grading_.size() != k) throw SchemaError("grading must assign every basis element");
  for (auto g : grading_) {
    if (g.index >= group_.order()) throw UnknownGroupElement("grading uses an unknown group element");
  }
  table_.assign(k * k, {});
  std::vector<bool> seen(k * k, false);
  for (auto& p : products) {
    if (p.left >= k || p.right >= k) throw SchemaError("product refers to an unknown basis index");
    const std::size_t slot = p.left * k + p.right;
    if (seen[slot]) {
      throw SchemaError("product " + basis_[p.left] + "*" + basis_[p.right] + " given twice");
    }
    seen[slot] = true;
    std::set<std::size_t> coords;
    for (auto& [m, c] : p.result) {
      if (m >= k) throw SchemaError("product result refers to an unknown basis index");
      if (!coords.insert(m).second) {
        throw SchemaError("product " + basis_[p.left] + "*" + basis_[p.right] +
                          " lists coordinate " + basis_[m] + " twice");
      }
      if (c != 0) table_[slot].emplace_back(m, c);
    }
    std::sort(table_[slot].begin(), table_[slot].end());
  }
  if (unit_ && unit_->size() != k) throw DimensionError("unit has the wrong length");
  validate();
}

std::optional<std::size_t> GradedAlgebraSpec::find_basis(std::string_view label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] == label) return i;
  }
  return std::nullopt;
}

std::vector<Rational> GradedAlgebraSpec::multiply(std::span<const Rational> x,
                                                  std::span<const Rational> y) const {
  const std::size_t k = dim();
  if (x.size() != k || y.size() != k) {
    throw DimensionError("multiply: vectors must have length " + std::to_string(k));
  }
  std::vector<Rational> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (y[j] == 0) continue;
      const Rational xy = x[i] * y[j];
      for (const auto& [m, c] : product(i, j)) out[m] += xy * c;
    }
  }
  return out;
}

std::vector<std::size_t> GradedAlgebraSpec::homogeneous_basis(GroupElement g) const {
  if (g.index >= group_.order()) throw UnknownGroupElement("unknown group element index");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (grading_[i] == g) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> GradedAlgebraSpec::homogeneous_basis(std::string_view group_label) const {
  auto g = group_.find(group_label);
  if (!g) throw UnknownGroupElement("unknown group element '" + std::string(group_label) + "'");
  return homogeneous_basis(*g);
}

void GradedAlgebraSpec::validate() const {
  const std::size_t k = dim();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const GroupElement expected = group_.multiply(grading_[i], grading_[j]);
      for (const auto& [m, c] : product(i, j)) {
        if (grading_[m] != expected) {
          throw GradingError("grading violated: " + basis_[i] + "*" + basis_[j] + " has a " +
                                 basis_[m] + " component of degree " + group_.label(grading_[m]) +
                                 ", expected degree " + group_.label(expected),
                             i, j, m);
        }
      }
    }
  }
  auto unit_vector = [k](std::size_t i) {
    std::vector<Rational> v(k);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto ij = multiply(unit_vector(i), unit_vector(j));
      for (std::size_t l = 0; l < k; ++l) {
        const auto left = multiply(ij, unit_vector(l));
        const auto right = multiply(unit_vector(i), multiply(unit_vector(j), unit_vector(l)));
        if (left != right) {
          throw AssociativityError("associativity fails on basis triple " +
                                       triple_str(basis_[i], basis_[j], basis_[l]),
                                   i, j, l);
        }
      }
    }
  }
  if (unit_) {
    for (std::size_t i = 0; i < k; ++i) {
      if ((*unit_)[i] != 0 && grading_[i] != group_.identity()) {
        throw UnitError("unit has a component on " + basis_[i] + " of degree " +
                        group_.label(grading_[i]) + ", not the identity");
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      const auto e = unit_vector(i);
      if (multiply(*unit_, e) != e || multiply(e, *unit_) != e) {
        throw UnitError("claimed unit fails on " + basis_[i]);
      }
    }
  }
}

namespace {

using nlohmann::json;

Rational json_rational(const json& v) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("bad rational: ") + e.what());
  }
  throw SchemaError("rationals must be \"p/q\" strings");
}

std::size_t basis_index(const std::vector<std::string>& basis, const json& v) {
  if (!v.is_string()) throw SchemaError("basis references must be strings");
  const auto label = v.get<std::string>();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] == label) return i;
  }
  throw SchemaError("unknown basis element '" + label + "'");
}

SparseVector json_vector(const std::vector<std::string>& basis, const json& v) {
  if (!v.is_array()) throw SchemaError("expected a list of [basis, coefficient] pairs");
  SparseVector out;
  for (const auto& entry : v) {
    if (!entry.is_array() || entry.size() != 2) {
      throw SchemaError("expected [basis, coefficient] pair");
    }
    out.emplace_back(basis_index(basis, entry[0]), json_rational(entry[1]));
  }
  return out;
}

GroupTable json_group(const json& g) {
  if (!g.is_object()) throw SchemaError("'group' must be an object");
  if (g.contains("cyclic")) {
    if (!g["cyclic"].is_number_integer()) throw SchemaError("'cyclic' must be an integer");
    return GroupTable::cyclic(g["cyclic"].get<int>());
  }
  for (const char* key : {"elements", "table", "identity"}) {
    if (!g.contains(key)) throw SchemaError(std::string("group is missing '") + key + "'");
  }
  if (!g["elements"].is_array() || !g["table"].is_array() || !g["identity"].is_string()) {
    throw SchemaError("group fields have the wrong types");
  }
  std::vector<std::string> labels;
  for (const auto& e : g["elements"]) {
    if (!e.is_string()) throw SchemaError("group elements must be strings");
    labels.push_back(e.get<std::string>());
  }
  auto lookup = [&](const json& v) -> std::uint32_t {
    if (!v.is_string()) throw SchemaError("group table entries must be strings");
    const auto s = v.get<std::string>();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == s) return static_cast<std::uint32_t>(i);
    }
    throw GroupError("group table uses unknown element '" + s + "'");
  };
  std::vector<std::vector<std::uint32_t>> table;
  for (const auto& row : g["table"]) {
    if (!row.is_array()) throw SchemaError("group table rows must be lists");
    std::vector<std::uint32_t> r;
    for (const auto& v : row) r.push_back(lookup(v));
    table.push_back(std::move(r));
  }
  const auto id_label = g["identity"].get<std::string>();
  std::optional<std::uint32_t> identity;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == id_label) identity = static_cast<std::uint32_t>(i);
  }
  if (!identity) throw GroupError("identity '" + id_label + "' is not a group element");
  return GroupTable(std::move(labels), std::move(table), *identity);
}

}  // namespace

GradedAlgebraSpec load_spec(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("spec must be a JSON object");
  for (const char* key : {"group", "basis", "grading"}) {
    if (!doc.contains(key)) throw SchemaError(std::string("spec is missing '") + key + "'");
  }
  GroupTable group = json_group(doc["group"]);

  if (!doc["basis"].is_array()) throw SchemaError("'basis' must be a list");
  std::vector<std::string> basis;
  for (const auto& b : doc["basis"]) {
    if (!b.is_string()) throw SchemaError("basis labels must be strings");
    basis.push_back(b.get<std::string>());
  }

  if (!doc["grading"].is_object()) throw SchemaError("'grading' must be an object");
  std::vector<GroupElement> grading;
  for (const auto& b : basis) {
    if (!doc["grading"].contains(b)) throw SchemaError("grading misses basis element '" + b + "'");
    const auto& v = doc["grading"][b];
    if (!v.is_string()) throw SchemaError("grading values must be group element labels");
    auto g = group.find(v.get<std::string>());
    if (!g) throw UnknownGroupElement("grading uses unknown group element '" + v.get<std::string>() + "'");
    grading.push_back(*g);
  }
  for (const auto& [label, _] : doc["grading"].items()) {
    if (std::find(basis.begin(), basis.end(), label) == basis.end()) {
      throw SchemaError("grading names unknown basis element '" + label + "'");
    }
  }

  std::vector<GradedAlgebraSpec::Product> products;
  if (doc.contains("products")) {
    if (!doc["products"].is_array()) throw SchemaError("'products' must be a list");
    for (const auto& p : doc["products"]) {
      if (!p.is_object() || !p.contains("left") || !p.contains("right") || !p.contains("result")) {
        throw SchemaError("each product needs 'left', 'right' and 'result'");
      }
      products.push_back({basis_index(basis, p["left"]), basis_index(basis, p["right"]),
                          json_vector(basis, p["result"])});
    }
  }

  std::optional<std::vector<Rational>> unit;
  if (doc.contains("unit") && !doc["unit"].is_null()) {
    std::vector<Rational> u(basis.size());
    for (const auto& [m, c] : json_vector(basis, doc["unit"])) u[m] += c;
    unit = std::move(u);
  }
  return GradedAlgebraSpec(std::move(group), std::move(basis), std::move(grading),
                           std::move(products), std::move(unit));
}

GradedAlgebraSpec load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open spec file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_spec(buffer.str());
}

std::string GradedAlgebraSpec::to_json() const {
  json doc;
  std::vector<std::string> elements;
  json table = json::array();
  for (std::uint32_t a = 0; a < group_.order(); ++a) {
    elements.push_back(group_.label({a}));
    json row = json::array();
    for (std::uint32_t b = 0; b < group_.order(); ++b) {
      row.push_back(group_.label(group_.multiply({a}, {b})));
    }
    table.push_back(row);
  }
  doc["group"] = {{"elements", elements}, {"table", table}, {"identity", group_.label(group_.identity())}};
  doc["basis"] = basis_;
  json grading = json::object();
  for (std::size_t i = 0; i < dim(); ++i) grading[basis_[i]] = group_.label(grading_[i]);
  doc["grading"] = grading;
  json products = json::array();
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (product(i, j).empty()) continue;
      json result = json::array();
      for (const auto& [m, c] : product(i, j)) result.push_back({basis_[m], to_string(c)});
      products.push_back({{"left", basis_[i]}, {"right", basis_[j]}, {"result", result}});
    }
  }
  doc["products"] = products;
  if (unit_) {
    json u = json::array();
    for (std::size_t i = 0; i < dim(); ++i) {
      if ((*unit_)[i] != 0) u.push_back({basis_[i], to_string((*unit_)[i])});
    }
    doc["unit"] = u;
  }
  return doc.dump(2);
}

}  // namespace gcodim
