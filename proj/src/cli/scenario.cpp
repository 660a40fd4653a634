#include "grot/cli/scenario.hpp"

#include <fstream>
#include <sstream>

#include "grot/error.hpp"

namespace grot::cli {

AlgebraContext default_scenario() { return AlgebraContext(2, {{"rho", 1, 2}}); }

namespace {

int positive_int(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ContextError(path + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < 1 || v > 1'000'000) throw ContextError(path + ": expected a positive integer");
  return static_cast<int>(v);
}

}  // namespace

AlgebraContext parse_scenario(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ContextError(std::string("malformed scenario JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ContextError("scenario: expected a JSON object");
  if (!doc.contains("d")) throw ContextError("d: missing");
  const int d = positive_int(doc["d"], "d");
  if (!doc.contains("families") || !doc["families"].is_array())
    throw ContextError("families: expected an array");

  std::vector<CuspidalFamily> families;
  const auto& arr = doc["families"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "families[" + std::to_string(i) + "]";
    const auto& f = arr[i];
    if (!f.is_object()) throw ContextError(path + ": expected an object");
    if (!f.contains("name") || !f["name"].is_string()) throw ContextError(path + ".name: expected a string");
    CuspidalFamily fam;
    fam.name = f["name"].get<std::string>();
    if (fam.name.empty() || !(std::isalpha(static_cast<unsigned char>(fam.name[0])) || fam.name[0] == '_'))
      throw ContextError(path + ".name: expected an identifier");
    for (char c : fam.name)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw ContextError(path + ".name: expected an identifier");
    if (!f.contains("p")) throw ContextError(path + ".p: missing");
    fam.p = positive_int(f["p"], path + ".p");
    if (f.contains("s") && !f["s"].is_null()) {
      fam.s = positive_int(f["s"], path + ".s");
      if ((fam.p * *fam.s) % d != 0)
        throw ContextError(path + ".s: d=" + std::to_string(d) + " does not divide p*s=" +
                           std::to_string(fam.p * *fam.s));
    }
    families.push_back(std::move(fam));
  }
  try {
    return AlgebraContext(d, std::move(families));
  } catch (const ContextError& e) {
    throw ContextError(std::string("families: ") + e.what());
  }
}

AlgebraContext load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContextError("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

nlohmann::ordered_json scenario_to_json(const AlgebraContext& ctx) {
  nlohmann::ordered_json out;
  out["d"] = ctx.d();
  out["families"] = nlohmann::ordered_json::array();
  for (const auto& f : ctx.families()) {
    nlohmann::ordered_json j;
    j["name"] = f.name;
    j["p"] = f.p;
    if (f.s) j["s"] = *f.s;
    out["families"].push_back(std::move(j));
  }
  return out;
}

}  // namespace grot::cli
