// Command-line surface for the matroid verification workbench.
//
// Subcommands: axioms, witness, verify, crosscheck, gap. Exit codes:
// 0 all checks pass, 1 a verification or axiom check failed, 2 usage or
// parse error. Reports are deterministic for a fixed configuration.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matroidlab/combinators.hpp"
#include "matroidlab/finite_engine.hpp"
#include "matroidlab/witnesses.hpp"

namespace {

using namespace matroidlab;

struct ReportLine {
  std::string name;
  bool pass = true;
  std::string detail;
};

void emit(const std::vector<ReportLine>& lines, const std::string& format,
          const std::string& command) {
  if (format == "json") {
    Json j;
    j["command"] = command;
    j["checks"] = Json::array();
    bool all = true;
    for (const auto& l : lines) {
      j["checks"].push_back(
          Json{{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
      all = all && l.pass;
    }
    j["all_pass"] = all;
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& l : lines) {
    std::cout << l.name << ": " << (l.pass ? "PASS" : "FAIL");
    if (!l.detail.empty()) std::cout << " " << l.detail;
    std::cout << "\n";
  }
}

bool all_pass(const std::vector<ReportLine>& lines) {
  for (const auto& l : lines)
    if (!l.pass) return false;
  return true;
}

std::pair<int, int> parse_window(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw ParseError("window must look like RxC, e.g. 4x4");
  try {
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception&) {
    throw ParseError("window must look like RxC, e.g. 4x4");
  }
}

// Test-only family violating downward closure: independent iff 0 or 2 cells.
FiniteMatroid bad_family_window(int rows, int cols) {
  const int n = rows * cols;
  if (n > kMaxFiniteGround) throw WindowTooLarge("window exceeds enumeration cap");
  std::vector<std::string> labels;
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) labels.push_back(point_label(Point{r, c}));
  std::vector<bool> indep(1ull << n);
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    const int pc = std::popcount(m);
    indep[m] = pc == 0 || pc == 2;
  }
  return FiniteMatroid{std::move(labels), std::move(indep)};
}

// Sampled axiom checks for windows beyond the exhaustive cap: seeded random
// subsets for I2, greedy window-maximal sets as bases for I3.
std::vector<ReportLine> sampled_axioms(const GridOracle& oracle, int rows, int cols,
                                       long long samples, std::uint64_t seed) {
  std::vector<ReportLine> lines;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> row_dist(1, rows), col_dist(1, cols);

  const auto random_cell = [&] { return Point{row_dist(rng), col_dist(rng)}; };
  const auto random_independent = [&] {
    SetExpr s = SetExpr::empty();
    const int tries = static_cast<int>(rng() % static_cast<unsigned>(rows + 1));
    for (int i = 0; i < tries; ++i) {
      const Point p = random_cell();
      if (!oracle.ground_contains(p) || contains(s, p)) continue;
      const SetExpr grown = insert(s, p);
      if (oracle.is_independent(grown)) s = grown;
    }
    return s;
  };
  const auto grow_to_window_maximal = [&](SetExpr s) {
    for (int r = 1; r <= rows; ++r)
      for (int c = 1; c <= cols; ++c) {
        const Point p{r, c};
        if (!oracle.ground_contains(p) || contains(s, p)) continue;
        const SetExpr grown = insert(s, p);
        if (oracle.is_independent(grown)) s = grown;
      }
    return s;
  };

  lines.push_back({"I1", oracle.is_independent(SetExpr::empty()), "sampled mode"});

  ReportLine i2{"I2", true, "sampled"};
  for (long long i = 0; i < samples && i2.pass; ++i) {
    const SetExpr s = random_independent();
    for (Point p : materialize_rows(s, rows)) {
      if (!oracle.is_independent(remove(s, p))) {
        i2.pass = false;
        i2.detail = "counterexample: removing " + to_string(p) + " from " + to_string(s);
        break;
      }
    }
  }
  lines.push_back(i2);

  ReportLine i3{"I3", true, "sampled (window-maximal sets as bases)"};
  for (long long i = 0; i < samples && i3.pass; ++i) {
    const SetExpr a = random_independent();
    const SetExpr base = grow_to_window_maximal(random_independent());
    const bool a_maximal = grow_to_window_maximal(a) == a;
    if (a_maximal) continue;
    bool augmented = false;
    for (Point p : materialize_rows(base, rows)) {
      if (contains(a, p)) continue;
      if (oracle.is_independent(insert(a, p))) {
        augmented = true;
        break;
      }
    }
    if (!augmented) {
      i3.pass = false;
      i3.detail = "counterexample: A=" + to_string(a) + " B=" + to_string(base);
    }
  }
  lines.push_back(i3);

  lines.push_back({"I4", true, "structural: finite families always have maximal elements"});
  return lines;
}

std::vector<int> parse_k_range(const std::string& text) {
  const auto dots = text.find("..");
  std::vector<int> out;
  try {
    if (dots == std::string::npos) {
      out.push_back(std::stoi(text));
    } else {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      for (int k = lo; k <= hi; ++k) out.push_back(k);
    }
  } catch (const std::exception&) {
    throw ParseError("--k must be an integer or a range like 1..8");
  }
  if (out.empty() || out.front() < 1) throw ParseError("--k values must be >= 1");
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"matroidlab: oracles, axiom checks, and gap certificates for the "
               "dominant-column grid matroid"};
  app.require_subcommand(1);

  std::string oracle_text = "m1";
  std::string window_text = "8x8";
  long long samples = 1000;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string k_text = "1";
  std::string out_path;
  std::string cert_path;
  std::string set_text;
  int window_limit = 100;

  auto* axioms = app.add_subcommand("axioms", "check matroid axioms on a window restriction");
  axioms->add_option("--oracle", oracle_text, "oracle expression")->capture_default_str();
  axioms->add_option("--window", window_text, "window RxC")->capture_default_str();
  axioms->add_option("--samples", samples, "samples for non-exhaustive windows")
      ->capture_default_str();
  axioms->add_option("--seed", seed, "rng seed")->capture_default_str();
  axioms->add_option("--format", format, "text | json")->capture_default_str();

  auto* wit = app.add_subcommand("witness", "generate gap-k certificates");
  wit->add_option("--k", k_text, "k or range lo..hi")->capture_default_str();
  wit->add_option("--out", out_path, "output directory for certificate files");
  wit->add_option("--window-limit", window_limit, "augmentation window size")
      ->capture_default_str();
  wit->add_option("--format", format, "text | json")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "re-verify a certificate file");
  ver->add_option("path", cert_path, "certificate JSON file")->required();
  ver->add_option("--window-limit", window_limit, "augmentation window size")
      ->capture_default_str();
  ver->add_option("--format", format, "text | json")->capture_default_str();

  auto* cross = app.add_subcommand("crosscheck", "compare an oracle against window enumeration");
  cross->add_option("--oracle", oracle_text, "oracle expression")->capture_default_str();
  cross->add_option("--window", window_text, "window RxC")->capture_default_str();
  cross->add_option("--samples", samples, "number of random subsets")->capture_default_str();
  cross->add_option("--seed", seed, "rng seed")->capture_default_str();
  cross->add_option("--format", format, "text | json")->capture_default_str();

  auto* gap = app.add_subcommand("gap", "base gap of a base of M");
  gap->add_option("--set", set_text, "set expression (coltail C S | ray R C S | points ... | JSON)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (format != "text" && format != "json") throw ParseError("--format must be text or json");

  if (axioms->parsed()) {
    const auto [rows, cols] = parse_window(window_text);
    std::vector<ReportLine> lines;
    if (oracle_text == "badfamily") {
      const auto report = check_axioms(bad_family_window(rows, cols));
      for (const auto& c : report.checks) lines.push_back({c.axiom, c.pass, c.detail});
    } else {
      const auto expr = parse_oracle_expr(oracle_text);
      bool exhaustive = true;
      try {
        const auto report = check_axioms(restrict_window(expr, rows, cols));
        for (const auto& c : report.checks) lines.push_back({c.axiom, c.pass, c.detail});
      } catch (const WindowTooLarge&) {
        exhaustive = false;
      }
      if (!exhaustive)
        lines = sampled_axioms(GridOracle(expr), rows, cols, samples, seed);
    }
    emit(lines, format, "axioms");
    return all_pass(lines) ? 0 : 1;
  }

  if (wit->parsed()) {
    const auto ks = parse_k_range(k_text);
    std::vector<ReportLine> lines;
    bool wrote = !out_path.empty();
    if (wrote) std::filesystem::create_directories(out_path);
    for (int k : ks) {
      const Certificate cert = witness(k, window_limit);
      const bool ok = VerifyReport{cert.checks}.valid();
      if (wrote) {
        const auto file = std::filesystem::path(out_path) / ("k" + std::to_string(k) + ".json");
        std::ofstream(file) << to_json(cert).dump(2) << "\n";
        lines.push_back({"witness k=" + std::to_string(k), ok, "wrote " + file.string()});
      } else {
        std::cout << to_json(cert).dump(2) << "\n";
        lines.push_back({"witness k=" + std::to_string(k), ok, ""});
      }
    }
    if (wrote || format == "json") emit(lines, format, "witness");
    return all_pass(lines) ? 0 : 1;
  }

  if (ver->parsed()) {
    std::ifstream in(cert_path);
    if (!in) throw ParseError("cannot open certificate file: " + cert_path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("certificate file is not valid JSON");
    const Certificate cert = certificate_from_json(j);
    const VerifyReport report = verify_certificate(cert, window_limit);
    std::vector<ReportLine> lines;
    for (const auto& c : report.checks) lines.push_back({c.name, c.verdict, c.detail});
    lines.push_back({"certificate", report.valid(), report.valid() ? "VALID" : "INVALID"});
    emit(lines, format, "verify");
    return report.valid() ? 0 : 1;
  }

  if (cross->parsed()) {
    const auto [rows, cols] = parse_window(window_text);
    const auto report = crosscheck(parse_oracle_expr(oracle_text), rows, cols, samples, seed);
    std::vector<ReportLine> lines{{"crosscheck " + window_text + " samples=" +
                                       std::to_string(samples),
                                   report.ok(),
                                   report.ok() ? "" : "first mismatch " + report.first_mismatch}};
    emit(lines, format, "crosscheck");
    return report.ok() ? 0 : 1;
  }

  if (gap->parsed()) {
    std::cout << base_gap(parse_set_text(set_text)) << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const matroidlab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const matroidlab::WindowTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
