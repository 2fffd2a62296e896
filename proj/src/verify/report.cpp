#include <sstream>

#include "brieskorn/verify.hpp"

namespace brieskorn::verify {

namespace {

Json case_to_json(const CaseResult& c) {
  Json j{{"name", c.name}, {"passed", c.passed}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (c.residual) j["residual"] = *c.residual;
  if (c.reproducer) j["reproducer"] = *c.reproducer;
  return j;
}

Json suite_to_json(const SuiteResult& s, const EmitOptions& options) {
  Json cases = Json::array();
  for (const auto& c : s.cases) cases.push_back(case_to_json(c));
  Json j{{"name", s.name}, {"passed", s.passed}, {"cases", cases}, {"artifacts", s.artifacts}};
  if (s.error) j["error"] = *s.error;
  if (options.timing) j["seconds"] = s.seconds;
  return j;
}

std::size_t failed_cases(const SuiteResult& s) {
  std::size_t n = 0;
  for (const auto& c : s.cases) n += c.passed ? 0 : 1;
  return n;
}

// Pipes would split markdown table cells.
std::string cell(const std::string& text) {
  std::string out;
  for (char ch : text) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += "<br>";
    else out += ch;
  }
  return out;
}

}  // namespace

std::string emit_json(const Report& report, const EmitOptions& options) {
  Json suites = Json::array();
  std::size_t failed = 0;
  for (const auto& s : report.suites) {
    suites.push_back(suite_to_json(s, options));
    failed += s.passed ? 0 : 1;
  }
  Json doc{{"config", report.config},
           {"passed", report.passed()},
           {"suites", suites},
           {"summary", {{"suites", report.suites.size()}, {"failed", failed}}}};
  return doc.dump(2) + "\n";
}

std::string emit_markdown(const Report& report, const EmitOptions& options) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& s : report.suites) failed += s.passed ? 0 : 1;
  out << "# Verification report\n\n";
  out << "Result: **" << (report.passed() ? "PASS" : "FAIL") << "** (" << report.suites.size() << " suites, " << failed
      << " failed)\n\n";
  out << "## Configuration\n\n```json\n" << report.config.dump(2) << "\n```\n";
  for (const auto& s : report.suites) {
    out << "\n## " << s.name << ": " << (s.passed ? "PASS" : "FAIL") << "\n\n";
    if (options.timing) out << "Time: " << s.seconds << " s\n\n";
    if (s.error) out << "Error: `" << *s.error << "`\n\n";
    out << s.cases.size() << " cases, " << failed_cases(s) << " failed.\n\n";
    if (!s.cases.empty()) {
      out << "| case | result | detail |\n|---|---|---|\n";
      for (const auto& c : s.cases)
        out << "| " << cell(c.name) << " | " << (c.passed ? "pass" : "FAIL") << " | " << cell(c.detail) << " |\n";
    }
    for (const auto& c : s.cases) {
      if (c.passed || !c.residual) continue;
      out << "\nResidual for `" << c.name << "`:\n\n```\n" << *c.residual << "\n```\n";
    }
    for (const auto& c : s.cases) {
      if (c.passed || !c.reproducer) continue;
      out << "\nReproducer for `" << c.name << "`:\n\n```json\n" << c.reproducer->dump() << "\n```\n";
      break;  // identical for every case of a suite except per-sample instances
    }
    if (!s.artifacts.empty()) {
      out << "\nArtifacts:\n\n";
      for (const auto& [key, value] : s.artifacts.items()) {
        if (value.is_string() && value.get<std::string>().find('\n') != std::string::npos)
          out << "- `" << key << "`:\n\n```\n" << value.get<std::string>() << "\n```\n";
        else if (value.is_object()) out << "- `" << key << "`: " << value.size() << " entries (see JSON report)\n";
        else out << "- `" << key << "`: `" << value.dump() << "`\n";
      }
    }
  }
  return out.str();
}

}  // namespace brieskorn::verify
