#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wronski/degen.hpp"
#include "wronski/solve.hpp"

namespace wronski::harness {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "wronski/1";

// Where an expected value comes from.
enum class Source {
  Reference,  // a stated constant or closed form
  Oracle,     // an independent computation
  Identity,   // holds by construction
};
std::string to_string(Source s);

struct VerificationRecord {
  std::string claim;
  int criterion = 0;
  json parameters = json::object();
  json expected;
  Source source = Source::Oracle;
  json observed;
  bool pass = false;
  double runtime = 0;

  // runtime is omitted unless requested so reports stay byte-stable.
  json to_json(bool with_runtime = false) const;
};

struct SuiteOptions {
  // Largest n; negative means the criterion default.
  int n_max = -1;
  std::optional<Partition> lambda;
  std::optional<Composition> mu;
  // Random targets per case; negative means the criterion default.
  int samples = -1;
  std::uint64_t seed = 1;
  double tol = 1e-9;
};

using RecordSink = std::function<void(const VerificationRecord&)>;

const std::vector<std::string>& suite_names();
// Criteria run by a suite; throws std::invalid_argument for an unknown name.
std::vector<int> suite_criteria(const std::string& suite);
std::string criterion_title(int criterion);

// Records of one acceptance criterion (1..13), in canonical order.
std::vector<VerificationRecord> run_criterion(int criterion, const SuiteOptions& opt, const RecordSink& sink = {});
std::vector<VerificationRecord> run_suite(const std::string& suite, const SuiteOptions& opt, const RecordSink& sink = {});

// ---- JSON views ----
json to_json(const Partition& p);
json to_json(const Composition& c);
json to_json(const Tableau& t);
json to_json(const Complex& z);
json to_json(const QPoly& p);
json to_json(const CPoly& p);
json to_json(const PathLedger& l);
json to_json(const FibreReport& r);
json to_json(const CharacterSigns& cs);

// {"coeffs": ["c0", "c1", ...]} with rational strings, lowest degree first.
QPoly parse_poly_json(const std::string& text);

}  // namespace wronski::harness
