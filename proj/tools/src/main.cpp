#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "wronski/chars.hpp"
#include "wronski/harness.hpp"

namespace {

using wronski::harness::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kNumerical = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json with_schema(json body) {
  json j;
  j["schema"] = wronski::harness::kSchema;
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << '\n';
}

wronski::Partition parse_lambda(const std::string& s) {
  try {
    return wronski::Partition::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--lambda: ") + e.what());
  }
}

wronski::Composition parse_mu(const std::string& s) {
  try {
    return wronski::Composition::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--mu: ") + e.what());
  }
}

struct Flags {
  std::string lambda;
  std::string mu;
  std::string g;
  std::string epsilon = "auto";
  double tol = 1e-9;
  std::uint64_t seed = 1;
  bool exact = false;
  std::string json_path;
  int n_max = -1;
  int samples = -1;
  bool timing = false;
  std::string suite;
};

int cmd_chi(const Flags& f) {
  const auto l = parse_lambda(f.lambda);
  const auto mu = parse_mu(f.mu);
  if (l.size() != mu.size()) throw UsageError("--lambda and --mu must have the same size");
  const std::int64_t v = wronski::chi(l, mu);
  std::cout << v << '\n';
  if (!f.json_path.empty()) write_file(f.json_path, with_schema(json{{"lambda", l.str()}, {"mu", mu.str()}, {"chi", v}}));
  return kPass;
}

int cmd_fibre(const Flags& f) {
  const auto l = parse_lambda(f.lambda);
  if (f.mu.empty() == f.g.empty()) throw UsageError("fibre needs exactly one of --mu and --g");
  json body;
  if (!f.mu.empty()) {
    const auto mu = parse_mu(f.mu);
    if (l.size() != mu.size()) throw UsageError("--lambda and --mu must have the same size");
    wronski::CharacterOptions opt;
    opt.tree_seed = f.seed;
    opt.label.exact.seed = f.seed;
    opt.label.exact.allow_six = f.exact;
    if (f.epsilon != "auto") {
      try {
        opt.epsilon = wronski::parse_rational(f.epsilon);
      } catch (const std::exception& e) {
        throw UsageError(std::string("--epsilon: ") + e.what());
      }
      if (*opt.epsilon <= 0 || *opt.epsilon >= 1) throw UsageError("--epsilon must lie in (0,1)");
    }
    body = wronski::harness::to_json(wronski::character_signs(l, mu, opt));
  } else {
    wronski::QPoly g;
    try {
      g = wronski::harness::parse_poly_json(f.g);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--g: ") + e.what());
    }
    if (g.degree() != l.size()) throw UsageError("--g must have degree |lambda|");
    wronski::FibreReport rep = wronski::exact_solve(l, g, wronski::ExactOptions{f.exact, f.seed});
    body = wronski::harness::to_json(rep);
  }
  const json out = with_schema(body);
  if (f.json_path.empty()) {
    std::cout << out.dump(2) << '\n';
  } else {
    write_file(f.json_path, out);
  }
  return kPass;
}

int cmd_verify(const Flags& f) {
  wronski::harness::SuiteOptions opt;
  opt.n_max = f.n_max;
  opt.samples = f.samples;
  opt.seed = f.seed;
  opt.tol = f.tol;
  if (!f.lambda.empty()) opt.lambda = parse_lambda(f.lambda);
  if (!f.mu.empty()) opt.mu = parse_mu(f.mu);
  std::vector<int> criteria;
  try {
    criteria = wronski::harness::suite_criteria(f.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  int passed = 0;
  int failed = 0;
  json records = json::array();
  auto sink = [&](const wronski::harness::VerificationRecord& r) {
    (r.pass ? passed : failed) += 1;
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.criterion << ' ' << r.claim << ' ' << r.parameters.dump() << '\n' << std::flush;
    records.push_back(r.to_json(f.timing));
  };
  for (int c : criteria) wronski::harness::run_criterion(c, opt, sink);
  std::cout << "summary: " << passed << " passed, " << failed << " failed\n";
  if (!f.json_path.empty()) {
    json options{{"n_max", f.n_max}, {"samples", f.samples}, {"seed", f.seed}, {"tol", f.tol}};
    if (opt.lambda) options["lambda"] = opt.lambda->str();
    if (opt.mu) options["mu"] = opt.mu->str();
    write_file(f.json_path, with_schema(json{{"suite", f.suite},
                                             {"options", options},
                                             {"records", records},
                                             {"summary", {{"passed", passed}, {"failed", failed}}}}));
  }
  return failed == 0 ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wronski map fibres, tableau labels and character signs"};
  app.require_subcommand(1);
  Flags f;

  auto* chi = app.add_subcommand("chi", "Character value by rim-hook removal");
  chi->add_option("--lambda", f.lambda, "Partition, e.g. 3,2,1")->required();
  chi->add_option("--mu", f.mu, "Composition, e.g. 2,1,1")->required();
  chi->add_option("--json", f.json_path, "Also write JSON to this path");

  auto* fibre = app.add_subcommand("fibre", "Fibre report over h_mu or an explicit g");
  fibre->add_option("--lambda", f.lambda, "Partition")->required();
  fibre->add_option("--mu", f.mu, "Composition with parts in {1,2}");
  fibre->add_option("--g", f.g, "Polynomial as {\"coeffs\": [\"c0\", ...]}");
  fibre->add_option("--epsilon", f.epsilon, "Rational epsilon or auto");
  fibre->add_option("--seed", f.seed, "Seed for translations and spanning trees");
  fibre->add_flag("--exact", f.exact, "Allow the exact solver at n = 6");
  fibre->add_option("--json", f.json_path, "Write the report here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
  verify->add_option("suite", f.suite, "Suite name")->required();
  verify->add_option("--lambda", f.lambda, "Restrict to one partition");
  verify->add_option("--mu", f.mu, "Restrict to one composition");
  verify->add_option("--n-max", f.n_max, "Largest n");
  verify->add_option("--samples", f.samples, "Random targets per case");
  verify->add_option("--seed", f.seed, "Seed");
  verify->add_option("--tol", f.tol, "Residual tolerance");
  verify->add_flag("--timing", f.timing, "Include runtimes in JSON records");
  verify->add_option("--json", f.json_path, "Write all records here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (chi->parsed()) return cmd_chi(f);
    if (fibre->parsed()) return cmd_fibre(f);
    return cmd_verify(f);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cout << with_schema(json{{"error", e.what()}}).dump(2) << '\n';
    return kNumerical;
  }
}
