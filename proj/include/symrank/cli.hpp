#pragma once

// Command-line front end. Subcommands: count, oracle, build, verify, density.
// Exit codes: 0 ok, 1 a mathematical check failed, 2 usage or validation
// error, 3 budget refusal.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symrank/codes.hpp"
#include "symrank/counting.hpp"
#include "symrank/errors.hpp"
#include "symrank/linpoly.hpp"
#include "symrank/matspace.hpp"

namespace symrank::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

enum class Format { Plain, Csv, Json };

struct RunConfig {
  std::string subcommand;
  std::uint64_t q = 0;
  std::string m_spec;
  unsigned d = 0;
  std::string t_spec;
  std::string code_path;
  std::vector<std::string> checks;
  Budgets budgets;
  Format format = Format::Plain;
  std::string out_path;
  std::optional<std::uint64_t> seed;
};

/// "4", "3,5,7" or "2..12" (inclusive).
inline std::vector<unsigned> parse_range(const std::string& spec) {
  std::vector<unsigned> out;
  auto to_uint = [&](const std::string& s) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad range '" + spec + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("bad range '" + spec + "'");
    return static_cast<unsigned>(v);
  };
  if (const auto dots = spec.find(".."); dots != std::string::npos) {
    const unsigned lo = to_uint(spec.substr(0, dots));
    const unsigned hi = to_uint(spec.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range '" + spec + "'");
    for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_uint(item));
  if (out.empty()) throw std::invalid_argument("empty range '" + spec + "'");
  return out;
}

// ---------------------------------------------------------------------------
// Tables: cells are JSON values so exact quantities keep their type.

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
};

inline nlohmann::json count_cell(const ExactCount& x) { return to_decimal(x); }

inline nlohmann::json ratio_cell(const ExactRatio& r) { return to_json(r); }

inline std::string cell_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("num")) {
    const auto den = v.at("den").get<std::string>();
    return den == "1" ? v.at("num").get<std::string>() : v.at("num").get<std::string>() + "/" + den;
  }
  if (v.is_number_float()) {
    std::ostringstream os;
    os << std::setprecision(12) << v.get<double>();
    return os.str();
  }
  return v.dump();
}

inline void write_table(const Table& t, Format format, std::ostream& out) {
  if (format == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : t.rows) {
      nlohmann::json obj;
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
      arr.push_back(obj);
    }
    out << arr.dump(2) << "\n";
    return;
  }
  if (format == Format::Csv) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cell_text(row[i]).size());
  }
  auto line = [&](auto&& text_of) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << text_of(i);
    }
    out << "\n";
  };
  line([&](std::size_t i) { return t.columns[i]; });
  for (const auto& row : t.rows) line([&](std::size_t i) { return cell_text(row[i]); });
}

/// Writes to --out when given, else to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file " + path);
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

// ---------------------------------------------------------------------------
// Subcommands

inline int cmd_count(const RunConfig& cfg, std::ostream& out) {
  counting::validate_q(cfg.q);
  const auto ms = parse_range(cfg.m_spec);
  Table table{{"q", "m", "t", "S_t", "B_t", "lower", "S_upper", "B_upper", "within_bounds"}, {}};
  bool all_within = true;
  for (unsigned m : ms) {
    counting::validate_order(m);
    std::vector<unsigned> ts;
    if (cfg.t_spec.empty()) {
      for (unsigned t = 0; t <= m; ++t) ts.push_back(t);
    } else {
      ts = parse_range(cfg.t_spec);
    }
    for (unsigned t : ts) {
      const ExactCount s = counting::sphere_size(cfg.q, m, t);
      const ExactCount b = counting::ball_size(cfg.q, m, t);
      const auto sb = counting::sphere_bounds(cfg.q, m, t);
      const auto bb = counting::ball_bounds(cfg.q, m, t);
      const bool lower_ok = t == 0 ? sb.lower <= s : sb.lower < s;
      const bool within = lower_ok && s <= sb.upper && bb.contains(ExactRatio(b));
      all_within = all_within && within;
      table.rows.push_back({cfg.q, m, t, count_cell(s), count_cell(b), ratio_cell(sb.lower), ratio_cell(sb.upper),
                            ratio_cell(bb.upper), within});
    }
  }
  Sink sink(cfg.out_path, out);
  write_table(table, cfg.format, sink.get());
  return all_within ? kOk : kCheckFailed;
}

inline int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  counting::validate_q(cfg.q);
  const auto ms = parse_range(cfg.m_spec);
  const auto field = gf::field_of_order(cfg.q);
  Table table{{"q", "m", "t", "census", "formula", "match"}, {}};
  unsigned matches = 0;
  unsigned total = 0;
  for (unsigned m : ms) {
    counting::validate_order(m);
    const auto profile = rank_census(field, m, cfg.budgets.ambient, cfg.budgets.workers);
    for (unsigned t = 0; t <= m; ++t) {
      const ExactCount formula = counting::sphere_size(cfg.q, m, t);
      const bool ok = profile.counts[t] == formula;
      matches += ok;
      ++total;
      table.rows.push_back({cfg.q, m, t, count_cell(profile.counts[t]), count_cell(formula), ok});
    }
  }
  Sink sink(cfg.out_path, out);
  write_table(table, cfg.format, sink.get());
  const bool pass = matches == total;
  if (cfg.format == Format::Plain) {
    sink.get() << (pass ? "PASS" : "FAIL") << ", " << matches << "/" << total << " ranks match\n";
  }
  return pass ? kOk : kCheckFailed;
}

inline int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  counting::validate_q(cfg.q);
  const auto ms = parse_range(cfg.m_spec);
  if (ms.size() != 1) throw std::invalid_argument("build takes a single m");
  const unsigned m = ms.front();
  counting::validate_distance(m, cfg.d);

  std::optional<SymCode> code;
  std::optional<unsigned> measured;
  std::string construction;
  if ((m - cfg.d) % 2 == 0) {
    code = build_schmidt_code(cfg.q, m, cfg.d);
    construction = "S_{q,m,d}";
    try {
      measured = min_distance(*code, cfg.budgets);
    } catch (const BudgetExceeded&) {
    }
  } else {
    auto punctured = build_punctured_code(cfg.q, m, cfg.d, cfg.budgets);
    measured = punctured.measured_distance;
    construction = "punctured S_{q,m+1,d+2}";
    code = std::move(punctured.code);
  }

  const std::string json_text = to_json(*code).dump(1);
  std::ostream& summary = cfg.out_path.empty() ? err : out;
  if (cfg.out_path.empty()) {
    out << json_text << "\n";
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) throw std::invalid_argument("cannot open output file " + cfg.out_path);
    file << json_text << "\n";
  }
  summary << "construction: " << construction << "\n"
          << "q = " << cfg.q << ", m = " << m << ", d_design = " << cfg.d << "\n"
          << "dimension: " << code->dimension() << "\n"
          << "min distance: " << (measured ? std::to_string(*measured) : std::string("not measured (over codeword budget)"))
          << "\n";
  if (measured && *measured != cfg.d) {
    summary << "measured distance differs from the design distance\n";
    return kCheckFailed;
  }
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::ifstream in(cfg.code_path);
  if (!in) throw std::invalid_argument("cannot read code file " + cfg.code_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed code file: ") + e.what());
  }
  std::optional<SymCode> code;
  try {
    code.emplace(sym_code_from_json(j));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed code file: ") + e.what());
  }

  std::set<std::string> checks;
  for (const auto& c : cfg.checks) {
    std::stringstream ss(c);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) checks.insert(item);
    }
  }
  auto report = verify_report(*code, checks, cfg.budgets);
  report.seed = cfg.seed;

  Sink sink(cfg.out_path, out);
  std::ostream& os = sink.get();
  auto opt_bool = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "not-run"; };
  auto tri = [](Tri t) { return t == Tri::NotRun ? "not-run" : (t == Tri::True ? "true" : "false"); };
  if (cfg.format == Format::Json) {
    os << to_json(report).dump(2) << "\n";
  } else if (cfg.format == Format::Csv) {
    Table t{{"bound", "satisfied", "slack", "slack_float"}, {}};
    for (const auto& b : report.bounds) t.rows.push_back({b.name, b.satisfied, ratio_cell(b.slack), to_double(b.slack)});
    write_table(t, Format::Csv, os);
  } else {
    os << "q = " << report.q << ", m = " << report.m << ", k = " << report.k << "\n"
       << "d_design = " << (report.design_distance ? std::to_string(*report.design_distance) : "-") << "\n"
       << "d_measured = " << (report.measured_distance ? std::to_string(*report.measured_distance) : "not-run") << "\n"
       << "is_mrd = " << opt_bool(report.is_mrd) << "\n"
       << "is_perfect = " << opt_bool(report.is_perfect) << "\n"
       << "density = " << (report.density ? to_fraction_string(*report.density) : "not-run") << "\n"
       << "packing_ok = " << tri(report.packing_ok) << "\n"
       << "covering_ok = " << tri(report.covering_ok) << " (exactly once: " << tri(report.covering_exact) << ")\n";
    for (const auto& b : report.bounds) {
      os << "bound " << b.name << ": " << (b.satisfied ? "satisfied" : "VIOLATED") << ", slack "
         << to_fraction_string(b.slack) << "\n";
    }
    for (const auto& [check, reason] : report.not_run) os << "not-run " << check << ": " << reason << "\n";
    for (const auto& f : report.failures()) os << "FAIL " << f << "\n";
  }
  return report.passed() ? kOk : kCheckFailed;
}

inline int cmd_density(const RunConfig& cfg, std::ostream& out) {
  counting::validate_q(cfg.q);
  const auto ms = parse_range(cfg.m_spec);
  Table table{{"q", "m", "d", "density", "density_float", "upper_bound", "equality", "verdict", "provenance"}, {}};
  bool ok = true;
  for (unsigned m : ms) {
    counting::validate_distance(m, cfg.d);
    const bool even_case = (m - cfg.d) % 2 == 0;
    const std::uint64_t k = counting::singleton_max_dim(m, cfg.d);
    const std::uint64_t ext_size = saturating_pow(cfg.q, even_case ? m : m + 1);
    const bool buildable = ext_size <= gf::kMaxFieldSize && saturating_pow(cfg.q, k) <= cfg.budgets.codewords;

    ExactRatio density;
    std::string provenance = "formulaic";
    if (buildable) {
      const SymCode code = build_mrd_code(cfg.q, m, cfg.d, cfg.budgets);
      const unsigned d = min_distance(code, cfg.budgets);
      density = covering_density_given(code, d);
      provenance = "constructed";
      if (d != cfg.d || !is_mrd(code, cfg.budgets)) ok = false;
    } else {
      density = counting::mrd_density(cfg.q, m, cfg.d);
    }
    const ExactRatio upper = counting::density_upper_bound(cfg.q, m, cfg.d);
    if (density > upper) ok = false;
    table.rows.push_back({cfg.q, m, cfg.d, ratio_cell(density), to_double(density), ratio_cell(upper),
                          density == upper, counting::to_string(counting::quasi_perfect_verdict(cfg.d)), provenance});
  }
  Sink sink(cfg.out_path, out);
  write_table(table, cfg.format, sink.get());
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Symmetric rank-metric codes: counts, constructions and verification"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "plain";
  std::uint64_t seed = 0;
  app.add_option("--budget-ambient", cfg.budgets.ambient, "Max matrices in an ambient sweep")->default_val(kDefaultAmbientBudget);
  app.add_option("--budget-codewords", cfg.budgets.codewords, "Max codewords enumerated")->default_val(kDefaultCodewordBudget);
  app.add_option("--workers", cfg.budgets.workers, "Worker threads (0 = hardware concurrency)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--out", cfg.out_path, "Output path");
  auto* seed_opt = app.add_option("--seed", seed, "Seed recorded with randomized checks");

  auto* count = app.add_subcommand("count", "Sphere and ball sizes with their power-of-q bounds");
  count->add_option("--q", cfg.q)->required();
  count->add_option("--m", cfg.m_spec)->required();
  count->add_option("--t", cfg.t_spec, "Radii (default 0..m)");

  auto* oracle = app.add_subcommand("oracle", "Rank census by enumeration against the closed form");
  oracle->add_option("--q", cfg.q)->required();
  oracle->add_option("--m", cfg.m_spec)->required();

  auto* build = app.add_subcommand("build", "Construct a symmetric MRD code and write it as JSON");
  build->add_option("--q", cfg.q)->required();
  build->add_option("--m", cfg.m_spec)->required();
  build->add_option("--d", cfg.d)->required();

  auto* verify = app.add_subcommand("verify", "Verify a code file");
  verify->add_option("code", cfg.code_path, "SymCode JSON file")->required();
  verify->add_option("--check", cfg.checks, "distance,mrd,perfect,density,bounds,packing,covering,all");

  auto* density = app.add_subcommand("density", "Covering densities of MRD codes over a range of orders");
  density->add_option("--q", cfg.q)->required();
  density->add_option("--m", cfg.m_spec)->required();
  density->add_option("--d", cfg.d)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  cfg.format = format == "csv" ? Format::Csv : (format == "json" ? Format::Json : Format::Plain);
  if (seed_opt->count()) cfg.seed = seed;

  try {
    if (count->parsed()) return cmd_count(cfg, out);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
    if (build->parsed()) return cmd_build(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (density->parsed()) return cmd_density(cfg, out);
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kBudget;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace symrank::cli
