#include "apsym/fixtures.hpp"

namespace apsym {

namespace detail {
extern std::string_view const gardner_jf;
extern std::string_view const potential_burgers_jf;
} // namespace detail

std::vector<std::string> builtin_model_names()
{
	return {"gardner", "potential_burgers"};
}

std::string_view builtin_model_text(std::string const &name)
{
	if (name == "gardner")
		return detail::gardner_jf;
	if (name == "potential_burgers")
		return detail::potential_burgers_jf;
	throw NameError(0, 0, name, "no built-in model named");
}

ModelIR builtin_model(std::string const &name)
{
	return parse_model(builtin_model_text(name));
}

} // namespace apsym
