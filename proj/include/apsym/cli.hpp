#pragma once

#include "apsym/model.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace apsym {

enum ExitCode
{
	ExitPass = 0,
	ExitFail = 1,
	ExitUsage = 2,
	ExitResource = 3
};

/// Loads "builtin:NAME" or a model file. A missing file whose stem names a
/// built-in model (e.g. "gardner.jf") falls back to the built-in.
/// Returns the model text.
std::string load_model_text(std::string const &source);

/// Runs one CLI invocation; args excludes the program name.
int run_command(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace apsym
