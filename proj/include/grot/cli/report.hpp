#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace grot::cli {

struct CheckLine {
  std::string property;
  std::size_t cases = 0;
  bool passed = true;
  std::string counterexample;  // first failing case, empty on pass
};

struct Report {
  std::string command;
  nlohmann::ordered_json scenario;
  std::vector<std::pair<std::string, std::string>> inputs;  // name, normalized text
  std::string result;
  std::optional<std::vector<std::string>> certificate;
  std::optional<std::vector<CheckLine>> checks;

  bool passed() const;
};

std::string render_text(const Report& r);
std::string render_json(const Report& r);

}  // namespace grot::cli
