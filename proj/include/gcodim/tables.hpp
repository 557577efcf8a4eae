#pragma once

#include "gcodim/codim.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gcodim {

/// Where a partial table stopped and why. Written as an explicit marker row.
struct Truncation {
  int n = 0;
  std::string reason;
};

/// "[4,3,1]" style, quoted for CSV.
std::string csv_quote(const std::string& field);

/// "n,c_n"
void write_codim_csv(std::ostream& out, const CodimTable& t, const std::optional<Truncation>& cut);
/// "n,composition,block"
void write_blocks_csv(std::ostream& out, const CodimTable& t, const std::optional<Truncation>& cut);
/// "n,lambda,m_lambda", every lambda |- n, lexicographically decreasing.
void write_cocharacter_csv(std::ostream& out, const std::vector<CocharacterRow>& rows,
                           const std::optional<Truncation>& cut);
/// "n,lambda,a_lambda" grouped by |lambda|.
void write_a_csv(std::ostream& out, const std::map<Partition, BigInt>& a);
/// "s,delta_s"
void write_delta_csv(std::ostream& out, const std::vector<BigInt>& delta);

/// JSON documents with the same content. Big integers are decimal strings.
std::string codim_to_json(const CodimTable& t, const std::optional<Truncation>& cut);
std::string cocharacter_to_json(const std::vector<CocharacterRow>& rows,
                                const std::optional<std::map<Partition, BigInt>>& a,
                                const std::optional<std::vector<BigInt>>& delta,
                                const std::optional<Truncation>& cut);

}  // namespace gcodim
