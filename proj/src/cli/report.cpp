#include "grot/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace grot::cli {

bool Report::passed() const {
  if (!checks) return true;
  return std::all_of(checks->begin(), checks->end(), [](const CheckLine& c) { return c.passed; });
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << r.result << '\n';
  if (r.certificate) {
    out << "certificate (" << r.certificate->size() << " steps):\n";
    for (const auto& step : *r.certificate) out << "  " << step << '\n';
  }
  if (r.checks) {
    for (const auto& c : *r.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.property << " [" << c.cases << " cases]";
      if (!c.passed && !c.counterexample.empty()) out << " counterexample: " << c.counterexample;
      out << '\n';
    }
  }
  return out.str();
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["scenario"] = r.scenario;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.inputs) inputs[name] = value;
  j["inputs"] = std::move(inputs);
  j["result"] = r.result;
  if (r.certificate) j["certificate"] = *r.certificate;
  if (r.checks) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : *r.checks) {
      nlohmann::ordered_json line;
      line["property"] = c.property;
      line["cases"] = c.cases;
      line["passed"] = c.passed;
      if (!c.passed) line["counterexample"] = c.counterexample;
      arr.push_back(std::move(line));
    }
    j["checks"] = std::move(arr);
  }
  return j.dump(2) + "\n";
}

}  // namespace grot::cli
