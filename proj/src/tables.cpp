#include "gcodim/tables.hpp"

#include <json.hpp>

namespace gcodim {

namespace {

std::string composition_string(const std::vector<int>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + "]";
}

void write_marker(std::ostream& out, const std::optional<Truncation>& cut, int extra_columns) {
  if (!cut) return;
  out << cut->n << ",TRUNCATED";
  for (int i = 0; i < extra_columns; ++i) out << ',';
  out << '\n';
}

nlohmann::ordered_json truncation_json(const std::optional<Truncation>& cut) {
  if (!cut) return nullptr;
  return {{"n", cut->n}, {"reason", cut->reason}};
}

}  // namespace

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_codim_csv(std::ostream& out, const CodimTable& t, const std::optional<Truncation>& cut) {
  out << "n,c_n\n";
  for (const auto& row : t.rows) out << row.n << ',' << row.codim.str() << '\n';
  write_marker(out, cut, 0);
}

void write_blocks_csv(std::ostream& out, const CodimTable& t, const std::optional<Truncation>& cut) {
  out << "n,composition,block\n";
  for (const auto& row : t.rows) {
    for (const auto& b : row.blocks) {
      out << row.n << ',' << csv_quote(composition_string(b.composition)) << ',' << b.value.str() << '\n';
    }
  }
  write_marker(out, cut, 1);
}

void write_cocharacter_csv(std::ostream& out, const std::vector<CocharacterRow>& rows,
                           const std::optional<Truncation>& cut) {
  out << "n,lambda,m_lambda\n";
  for (const auto& row : rows) {
    for (auto it = row.multiplicities.rbegin(); it != row.multiplicities.rend(); ++it) {
      out << row.n << ',' << csv_quote(it->first.to_string()) << ',' << it->second.str() << '\n';
    }
  }
  write_marker(out, cut, 1);
}

void write_a_csv(std::ostream& out, const std::map<Partition, BigInt>& a) {
  out << "n,lambda,a_lambda\n";
  int top = 0;
  for (const auto& [lambda, v] : a) top = std::max(top, lambda.size());
  for (int n = 0; n <= top; ++n) {
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
      if (it->first.size() != n) continue;
      out << n << ',' << csv_quote(it->first.to_string()) << ',' << it->second.str() << '\n';
    }
  }
}

void write_delta_csv(std::ostream& out, const std::vector<BigInt>& delta) {
  out << "s,delta_s\n";
  for (std::size_t s = 0; s < delta.size(); ++s) out << s << ',' << delta[s].str() << '\n';
}

std::string codim_to_json(const CodimTable& t, const std::optional<Truncation>& cut) {
  nlohmann::ordered_json j;
  j["unital"] = t.unital;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    r["c_n"] = row.codim.str();
    r["blocks"] = nlohmann::ordered_json::array();
    for (const auto& b : row.blocks) r["blocks"].push_back({{"composition", b.composition}, {"value", b.value.str()}});
    j["rows"].push_back(std::move(r));
  }
  j["truncated"] = truncation_json(cut);
  return j.dump(2);
}

std::string cocharacter_to_json(const std::vector<CocharacterRow>& rows,
                                const std::optional<std::map<Partition, BigInt>>& a,
                                const std::optional<std::vector<BigInt>>& delta,
                                const std::optional<Truncation>& cut) {
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json m = nlohmann::ordered_json::array();
    for (auto it = row.multiplicities.rbegin(); it != row.multiplicities.rend(); ++it) {
      m.push_back({{"lambda", it->first.parts()}, {"m", it->second.str()}});
    }
    j["rows"].push_back({{"n", row.n}, {"multiplicities", std::move(m)}});
  }
  if (a) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    int top = 0;
    for (const auto& [lambda, v] : *a) top = std::max(top, lambda.size());
    for (int n = 0; n <= top; ++n) {
      for (auto it = a->rbegin(); it != a->rend(); ++it) {
        if (it->first.size() == n) arr.push_back({{"lambda", it->first.parts()}, {"a", it->second.str()}});
      }
    }
    j["a"] = std::move(arr);
  } else {
    j["a"] = nullptr;
  }
  if (delta) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& d : *delta) arr.push_back(d.str());
    j["delta"] = std::move(arr);
  } else {
    j["delta"] = nullptr;
  }
  j["truncated"] = truncation_json(cut);
  return j.dump(2);
}

}  // namespace gcodim
