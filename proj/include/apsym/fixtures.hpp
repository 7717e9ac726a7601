#pragma once

#include "apsym/model.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace apsym {

/// Names of the built-in models ("gardner", "potential_burgers").
std::vector<std::string> builtin_model_names();

/// Source text of a built-in model; throws NameError for unknown names.
std::string_view builtin_model_text(std::string const &name);

ModelIR builtin_model(std::string const &name);

} // namespace apsym
