#pragma once

#include <string>
#include <string_view>

#include "grot/context.hpp"
#include "json.hpp"

namespace grot::cli {

// d = 2 and one family {name: "rho", p: 1, s: 2}.
AlgebraContext default_scenario();

// {"d": int, "families": [{"name": str, "p": int, "s": int?}]}. Throws
// ContextError naming the offending field, e.g. "families[0].s: ...".
AlgebraContext parse_scenario(std::string_view json_text);
AlgebraContext load_scenario(const std::string& path);

nlohmann::ordered_json scenario_to_json(const AlgebraContext& ctx);

}  // namespace grot::cli
