#include "gcodim/builtin_specs.hpp"
#include "gcodim/tables.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace gcodim;

namespace {

CodimTable table_of(const GradedAlgebraSpec& spec, int max_n) {
  CodimEngine engine(spec);
  CodimTable t;
  t.unital = spec.unital();
  for (int n = 1; n <= max_n; ++n) t.rows.push_back(engine.graded_codim(n));
  return t;
}

}  // namespace

TEST(Tables, CsvQuote) {
  EXPECT_EQ(csv_quote("[2,1]"), "\"[2,1]\"");
  EXPECT_EQ(csv_quote("a\"b"), "\"a\"\"b\"");
}

TEST(Tables, CodimAndBlocksCsv) {
  const auto t = table_of(builtin::group_algebra_z2(), 2);
  std::ostringstream codim, blocks;
  write_codim_csv(codim, t, std::nullopt);
  EXPECT_EQ(codim.str(), "n,c_n\n1,2\n2,4\n");
  write_blocks_csv(blocks, t, std::nullopt);
  EXPECT_EQ(blocks.str(),
            "n,composition,block\n"
            "1,\"[1,0]\",1\n1,\"[0,1]\",1\n"
            "2,\"[2,0]\",1\n2,\"[1,1]\",1\n2,\"[0,2]\",1\n");
}

TEST(Tables, TruncationMarker) {
  const auto t = table_of(builtin::field(), 2);
  std::ostringstream out, blocks;
  write_codim_csv(out, t, Truncation{3, "budget"});
  EXPECT_EQ(out.str(), "n,c_n\n1,1\n2,1\n3,TRUNCATED\n");
  write_blocks_csv(blocks, t, Truncation{3, "budget"});
  EXPECT_NE(blocks.str().find("\n3,TRUNCATED,\n"), std::string::npos);
  const auto j = nlohmann::json::parse(codim_to_json(t, Truncation{3, "budget"}));
  EXPECT_EQ(j["truncated"]["n"], 3);
  EXPECT_EQ(j["truncated"]["reason"], "budget");
  EXPECT_TRUE(nlohmann::json::parse(codim_to_json(t, std::nullopt))["truncated"].is_null());
}

TEST(Tables, CocharacterCsvIsLexDecreasing) {
  CodimEngine engine(builtin::group_algebra_z2());
  std::vector<CocharacterRow> rows{engine.cocharacter_multiplicities(3)};
  std::ostringstream out;
  write_cocharacter_csv(out, rows, std::nullopt);
  EXPECT_EQ(out.str(), "n,lambda,m_lambda\n3,\"[3]\",4\n3,\"[2,1]\",2\n3,\"[1,1,1]\",0\n");
}

TEST(Tables, AAndDeltaCsv) {
  std::map<Partition, BigInt> a{{Partition{}, 1}, {Partition{{1}}, 1}, {Partition{{2}}, 1}, {Partition{{1, 1}}, 0}};
  std::ostringstream out;
  write_a_csv(out, a);
  EXPECT_EQ(out.str(), "n,lambda,a_lambda\n0,\"[]\",1\n1,\"[1]\",1\n2,\"[2]\",1\n2,\"[1,1]\",0\n");
  std::ostringstream d;
  write_delta_csv(d, {1, 1, 2});
  EXPECT_EQ(d.str(), "s,delta_s\n0,1\n1,1\n2,2\n");
}

TEST(Tables, CocharacterJsonUsesDecimalStrings) {
  CodimEngine engine(builtin::field());
  std::vector<CocharacterRow> rows{engine.cocharacter_multiplicities(2)};
  const auto j = nlohmann::json::parse(cocharacter_to_json(rows, std::nullopt, std::vector<BigInt>{1, 0, 0}, std::nullopt));
  EXPECT_EQ(j["rows"][0]["multiplicities"][0]["lambda"], nlohmann::json::array({2}));
  EXPECT_EQ(j["rows"][0]["multiplicities"][0]["m"], "1");
  EXPECT_TRUE(j["a"].is_null());
  EXPECT_EQ(j["delta"][0], "1");
}
