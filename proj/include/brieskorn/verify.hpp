#pragma once

// Batch verification driver: JSON run configuration, the named suites, and
// deterministic JSON / markdown reports.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "brieskorn/gamma.hpp"
#include "brieskorn/lattice.hpp"
#include "brieskorn/matrix.hpp"
#include "brieskorn/series.hpp"

namespace brieskorn::verify {

using Json = nlohmann::json;

/// Rejected configuration; `path` points into the document (e.g. "frame.matrix[2][1]").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

enum class Family { Special, Nilpotent, Relative };

std::string to_string(Family f);

inline const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{"stability", "canonical", "theorem2", "theorem1", "gamma", "period"};
  return names;
}

struct RunConfig {
  int r = 4;
  int N = 8;  // series degree bound
  int K = 8;  // weight bound
  Family family = Family::Special;
  Series h;                 // special family (univariate, degree N)
  std::vector<Series> h_i;  // relative family: h_2..h_r
  RationalMatrix frame;     // (r+1) x (r+1), unit lower-triangular
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  int samples = 10;
  /// Debug hook: replace generator j by v_j + s1^2 dt^-(lead weight) e_k to force failures.
  std::optional<int> perturb_generator;
};

/// Parses and validates a configuration document. Missing h / h_i / frame are
/// drawn from the seed. Throws ConfigError.
RunConfig parse_config(const Json& doc);
/// Applies BRIESKORN_N / BRIESKORN_K from the environment (ConfigError when malformed).
void apply_environment(Json& doc);
/// Canonical, fully explicit form of a configuration; feeding it back to
/// parse_config yields the same run.
Json config_to_json(const RunConfig& config);

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::optional<std::string> residual;  // GMElement / series text form
  std::optional<Json> reproducer;       // set on failure
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::optional<std::string> error;
  std::vector<CaseResult> cases;
  Json artifacts = Json::object();
  double seconds = 0.0;
};

struct Report {
  Json config;
  std::vector<SuiteResult> suites;
  bool passed() const;
};

Report run(const RunConfig& config);
SuiteResult run_suite(const std::string& name, const RunConfig& config);

struct EmitOptions {
  bool timing = false;
};
std::string emit_json(const Report& report, const EmitOptions& options = {});
std::string emit_markdown(const Report& report, const EmitOptions& options = {});

/// Seeded random inputs shared by the suites and the tests.
namespace random_inputs {
/// c_k integers in [-5, 5] for k = 2..degree, c_2 != 0.
Series deformation_function(std::mt19937_64& rng, int degree);
/// ord(h_i) = i exactly, i = 2..r.
std::vector<Series> relative_functions(std::mt19937_64& rng, int r, int degree);
/// Unit lower-triangular with small rational entries below the diagonal.
RationalMatrix frame_matrix(std::mt19937_64& rng, int r);
GammaParams<Rational> params(std::mt19937_64& rng);
Rational small_rational(std::mt19937_64& rng);
}  // namespace random_inputs

/// The lattice the configuration describes (with the debug perturbation applied).
Lattice build_lattice(const RunConfig& config);

}  // namespace brieskorn::verify
