// verify: runs the named verification suites from a JSON configuration.
// Exit status: 0 all pass, 1 verification failure, 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "brieskorn/verify.hpp"

namespace bv = brieskorn::verify;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify Brieskorn-lattice deformation identities from a JSON configuration"};
  std::string config_path, suites, format = "json", out_path;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  app.add_option("--config", config_path, "Configuration document (JSON)")->required();
  app.add_option("--suite", suites,
                 "Comma-separated suites (stability,canonical,theorem2,theorem1,gamma,period); overrides the config");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--seed", seed, "Random seed; overrides the config");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_flag("--timing", timing, "Include per-suite wall time (makes reports non-reproducible)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  bv::RunConfig config;
  try {
    std::ifstream in(config_path);
    if (!in) throw bv::ConfigError("", "cannot open " + config_path);
    bv::Json doc;
    try {
      doc = bv::Json::parse(in);
    } catch (const bv::Json::parse_error& e) {
      throw bv::ConfigError("", std::string("invalid JSON: ") + e.what());
    }
    bv::apply_environment(doc);
    if (seed) doc["seed"] = *seed;
    if (!suites.empty()) doc["suites"] = split_names(suites);
    config = bv::parse_config(doc);
  } catch (const bv::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  bv::Report report = bv::run(config);
  bv::EmitOptions options{timing};
  std::string text = format == "json" ? bv::emit_json(report, options) : bv::emit_markdown(report, options);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitConfig;
    }
    out << text;
  }
  for (const auto& s : report.suites)
    std::cerr << s.name << ": " << (s.passed ? "pass" : "FAIL") << "\n";
  return report.passed() ? 0 : kExitFailure;
}
