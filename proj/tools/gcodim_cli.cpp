#include "gcodim/asymptotics.hpp"
#include "gcodim/codim.hpp"
#include "gcodim/errors.hpp"
#include "gcodim/selftest.hpp"
#include "gcodim/tables.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace gcodim;

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kBudget = 2, kInvariant = 3 };

struct RunConfig {
  std::string spec_path;
  int max_n = 6;
  int trunc = -1;  // defaults to max_n
  std::string rank_mode = "modular";
  std::string window;
  std::string out_dir;
  std::string format = "csv";
  bool format_given = false;
  std::string sequence;
  std::string sequence_file;
  int factorial_budget = EngineConfig{}.factorial_budget;
  int weight_degree_budget = EngineConfig{}.weight_degree_budget;
  std::size_t column_budget = EngineConfig{}.column_budget;
  std::size_t exact_threshold = EngineConfig{}.exact_threshold;
  unsigned threads = 1;
};

EngineConfig engine_config(const RunConfig& rc) {
  EngineConfig c;
  c.factorial_budget = rc.factorial_budget;
  c.weight_degree_budget = rc.weight_degree_budget;
  c.column_budget = rc.column_budget;
  c.exact_threshold = rc.exact_threshold;
  c.rank_mode = parse_rank_mode(rc.rank_mode);
  c.threads = std::max(1u, rc.threads);
  return c;
}

GradedAlgebraSpec require_spec(const RunConfig& rc) {
  if (rc.spec_path.empty()) throw SchemaError("--spec is required");
  return load_spec_file(rc.spec_path);
}

// Tables go to files under --out, or to stdout; messages go to stdout when
// files are written and to stderr otherwise, so stdout stays machine-readable.
class Output {
 public:
  explicit Output(const RunConfig& rc) : dir_(rc.out_dir) {
    if (!dir_.empty()) fs::create_directories(dir_);
  }
  void table(const std::string& file, const std::string& content) {
    if (dir_.empty()) {
      std::cout << content;
      if (!content.empty() && content.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream out(fs::path(dir_) / file, std::ios::binary);
    out << content;
    if (!content.empty() && content.back() != '\n') out << '\n';
    if (!out) throw std::runtime_error("cannot write " + (fs::path(dir_) / file).string());
  }
  std::ostream& msg() { return dir_.empty() ? std::cerr : std::cout; }

 private:
  std::string dir_;
};

template <class Fn>
std::string render(Fn&& fn) {
  std::ostringstream s;
  fn(s);
  return s.str();
}

const char* error_kind(const ValidationError& e) {
  if (dynamic_cast<const GroupError*>(&e)) return "GroupError";
  if (dynamic_cast<const AssociativityError*>(&e)) return "AssociativityError";
  if (dynamic_cast<const GradingError*>(&e)) return "GradingError";
  if (dynamic_cast<const UnitError*>(&e)) return "UnitError";
  if (dynamic_cast<const DimensionError*>(&e)) return "DimensionError";
  if (dynamic_cast<const UnknownGroupElement*>(&e)) return "UnknownGroupElement";
  if (dynamic_cast<const SchemaError*>(&e)) return "SchemaError";
  return "ValidationError";
}

int cmd_validate(const RunConfig& rc) {
  const auto spec = require_spec(rc);
  std::cout << "valid, " << (spec.unital() ? "unital" : "non-unital") << ", |G|=" << spec.group().order()
            << ", dim=" << spec.dim() << '\n';
  return kOk;
}

int cmd_codim(const RunConfig& rc) {
  if (rc.max_n < 1) throw std::invalid_argument("--max-n must be at least 1");
  const auto spec = require_spec(rc);
  CodimEngine engine(spec, engine_config(rc));
  Output out(rc);
  CodimTable table{spec.unital(), {}};
  std::optional<Truncation> cut;
  for (int n = 1; n <= rc.max_n; ++n) {
    try {
      table.rows.push_back(engine.graded_codim(n));
    } catch (const BudgetExceeded& e) {
      cut = Truncation{n, e.what()};
      out.msg() << "budget exceeded at n=" << n << ": " << e.what() << '\n';
      break;
    }
  }
  if (rc.format == "json") {
    out.table("codim.json", codim_to_json(table, cut));
  } else {
    out.table("codim.csv", render([&](std::ostream& s) { write_codim_csv(s, table, cut); }));
    out.table("blocks.csv", render([&](std::ostream& s) { write_blocks_csv(s, table, cut); }));
  }
  out.msg() << "monotonicity: " << monotonicity_verdict(table) << '\n';
  if (!table.rows.empty()) {
    std::vector<BigInt> c;
    for (const auto& r : table.rows) c.push_back(r.codim);
    const int from = nondecreasing_from(c, 1);
    const int bound = monotone_threshold(spec);
    if (from > bound) {
      out.msg() << "monotonicity VIOLATION: expected non-decreasing from n=" << bound << '\n';
      return kInvariant;
    }
  }
  return cut ? kBudget : kOk;
}

int cmd_cocharacter(const RunConfig& rc) {
  if (rc.max_n < 0) throw std::invalid_argument("--max-n must be non-negative");
  const auto spec = require_spec(rc);
  CodimEngine engine(spec, engine_config(rc));
  Output out(rc);
  std::vector<CocharacterRow> rows;
  CodimTable table{spec.unital(), {}};
  std::optional<Truncation> cut;
  for (int n = 0; n <= rc.max_n; ++n) {
    try {
      rows.push_back(engine.cocharacter_multiplicities(n));
      if (n >= 1) table.rows.push_back(engine.graded_codim(n));
    } catch (const BudgetExceeded& e) {
      if (rows.size() > static_cast<std::size_t>(n)) rows.pop_back();
      cut = Truncation{n, e.what()};
      out.msg() << "budget exceeded at n=" << n << ": " << e.what() << '\n';
      break;
    }
  }
  const int top = static_cast<int>(rows.size()) - 1;
  bool all_ok = true;
  auto report = [&](const std::string& name, const CheckResult& r) {
    out.msg() << "check " << name << ": " << (r.passed ? "pass" : "FAIL " + r.detail) << '\n';
    all_ok = all_ok && r.passed;
  };
  report("sum m_lambda d_lambda = c_n", check_cocharacter_dimension(rows, table));
  report("m_lambda = 0 for height > dim", check_height_bound(rows, static_cast<int>(spec.dim())));
  for (const auto& row : rows) {
    const auto s = summarize_support(row, static_cast<int>(spec.dim()));
    out.msg() << "support n=" << s.n << ": max height " << s.max_height << '\n';
  }

  std::optional<std::map<Partition, BigInt>> a;
  std::optional<std::vector<BigInt>> delta;
  if (!spec.unital()) {
    out.msg() << "a and delta tables skipped: NotUnital (the algebra has no unit)\n";
  } else if (top >= 0) {
    const int n_a = std::min(rc.trunc < 0 ? rc.max_n : rc.trunc, top);
    a = a_multiplicities_from_rows(rows, n_a);
    delta = proper_deltas(table);
    report("m_lambda = sum of a_mu over horizontal strips", check_m_from_a(rows, *a));
    report("delta_s = sum a_lambda d_lambda", check_delta_from_a(*a, *delta));
    report("c_n = sum binom(n,s) delta_s", check_binomial_lift(*delta, table));
  }

  if (rc.format == "json") {
    out.table("cocharacter.json", cocharacter_to_json(rows, a, delta, cut));
  } else {
    out.table("cocharacter.csv", render([&](std::ostream& s) { write_cocharacter_csv(s, rows, cut); }));
    if (a) out.table("a.csv", render([&](std::ostream& s) { write_a_csv(s, *a); }));
    if (delta) out.table("delta.csv", render([&](std::ostream& s) { write_delta_csv(s, *delta); }));
  }
  if (!all_ok) return kInvariant;
  return cut ? kBudget : kOk;
}

Sequence parse_sequence_list(const std::string& text) {
  Sequence s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const Rational v = parse_rational(item);
    if (!is_integer(v)) throw std::invalid_argument("sequence entries must be integers: " + item);
    s.values.push_back(numerator(v));
  }
  if (s.values.empty()) throw std::invalid_argument("empty sequence");
  return s;
}

// Either "n,c_n" rows (header optional) or one value per line starting at n = 1.
Sequence read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sequence file " + path);
  Sequence s;
  std::string line;
  std::optional<int> expected;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#' || line.rfind("n,", 0) == 0) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      s.values.push_back(numerator(parse_rational(line)));
      continue;
    }
    const int n = std::stoi(line.substr(0, comma));
    if (!expected) {
      s.first_n = n;
    } else if (n != *expected) {
      throw std::invalid_argument("sequence file indices must be consecutive");
    }
    expected = n + 1;
    s.values.push_back(numerator(parse_rational(line.substr(comma + 1))));
  }
  if (s.values.empty()) throw std::invalid_argument("sequence file " + path + " has no values");
  return s;
}

int cmd_fit(const RunConfig& rc) {
  Sequence seq;
  std::optional<bool> unital;
  int code = kOk;
  Output out(rc);
  if (!rc.sequence.empty()) {
    seq = parse_sequence_list(rc.sequence);
  } else if (!rc.sequence_file.empty()) {
    seq = read_sequence_file(rc.sequence_file);
  } else {
    const auto spec = require_spec(rc);
    CodimEngine engine(spec, engine_config(rc));
    unital = spec.unital();
    for (int n = 1; n <= rc.max_n; ++n) {
      try {
        seq.values.push_back(engine.graded_codim(n).codim);
      } catch (const BudgetExceeded& e) {
        out.msg() << "budget exceeded at n=" << n << ", fitting n=1.." << n - 1 << '\n';
        code = kBudget;
        break;
      }
    }
  }
  std::optional<Window> window;
  if (!rc.window.empty()) window = parse_window(rc.window);
  const AsymptoticFit f = fit(seq, window, unital);
  const std::string json = fit_to_json(f);
  const std::string csv = render([&](std::ostream& s) { write_fit_csv(s, seq, f); });
  if (rc.out_dir.empty()) {
    const bool as_csv = rc.format_given && rc.format == "csv";
    std::cout << (as_csv ? csv : json + "\n");
  } else {
    out.table("fit.json", json);
    out.table("fit.csv", csv);
    out.msg() << "l=" << f.l << " beta=" << f.beta_num_over_2 << "/2";
    if (f.alpha) out.msg() << " alpha=" << *f.alpha;
    out.msg() << " alpha in [" << f.alpha_lo << ", " << f.alpha_hi << "]\n";
  }
  return code;
}

int cmd_selftest(const RunConfig& rc) {
  const auto report = run_selftest(engine_config(rc), std::min(rc.max_n, 5));
  report.print(std::cout);
  return report.all_passed() ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded codimension growth toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option defaults; command-line flags win");
  RunConfig rc;
  app.add_option("--spec", rc.spec_path, "algebra spec (JSON)");
  app.add_option("--max-n", rc.max_n, "largest degree n")->check(CLI::NonNegativeNumber);
  app.add_option("--trunc", rc.trunc, "degree for the a_lambda table (default: max-n)");
  app.add_option("--rank-mode", rc.rank_mode, "rank arithmetic")
      ->check(CLI::IsMember({"modular", "exact", "both"}));
  app.add_option("--window", rc.window, "fit window LO:HI");
  app.add_option("--out", rc.out_dir, "directory for output tables (default: stdout)");
  auto* format = app.add_option("--format", rc.format, "table format (fit defaults to json)");
  format->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--sequence", rc.sequence, "comma separated sequence c_1,c_2,... for fit");
  app.add_option("--sequence-file", rc.sequence_file, "file with n,c_n rows for fit");
  app.add_option("--factorial-budget", rc.factorial_budget, "largest multilinear degree")
      ->check(CLI::PositiveNumber);
  app.add_option("--weight-budget", rc.weight_degree_budget, "largest weight-space degree")
      ->check(CLI::PositiveNumber);
  app.add_option("--column-budget", rc.column_budget, "largest evaluation matrix, in entries")
      ->check(CLI::PositiveNumber);
  app.add_option("--exact-threshold", rc.exact_threshold, "exact re-check size limit under --rank-mode both");
  app.add_option("--threads", rc.threads, "worker threads")->envname("GCODIM_THREADS");

  auto* validate = app.add_subcommand("validate", "load and validate a spec");
  auto* codim = app.add_subcommand("codim", "graded codimensions and composition blocks");
  auto* cochar = app.add_subcommand("cocharacter", "m_lambda, a_lambda and delta tables with cross-checks");
  auto* fitc = app.add_subcommand("fit", "fit alpha n^beta l^n to a computed or supplied sequence");
  auto* self = app.add_subcommand("selftest", "run the invariant suite");
  for (auto* sub : {validate, codim, cochar, fitc, self}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kValidation;
  }

  rc.format_given = format->count() > 0;
  try {
    if (*validate) return cmd_validate(rc);
    if (*codim) return cmd_codim(rc);
    if (*cochar) return cmd_cocharacter(rc);
    if (*fitc) return cmd_fit(rc);
    if (*self) return cmd_selftest(rc);
  } catch (const ValidationError& e) {
    std::cerr << "invalid (" << error_kind(e) << "): " << e.what() << '\n';
    return kValidation;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
  return kOk;
}
