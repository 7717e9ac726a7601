#include "apsym/model.hpp"

#include "apsym/format.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

namespace apsym {

namespace {

template <class Map>
auto const &find_or_throw(Map const &m, std::string const &name, char const *what)
{
	auto it = m.find(name);
	if (it == m.end())
		throw NameError(0, 0, name, std::string("no ") + what + " named");
	return it->second;
}

} // namespace

EvolutionSystem const &ModelIR::system(std::string const &name) const
{
	return find_or_throw(systems, name, "system");
}

PseudoDiffOp const &ModelIR::op(std::string const &name) const
{
	return find_or_throw(operators, name, "operator");
}

DiffPoly const &ModelIR::characteristic(std::string const &name) const
{
	return find_or_throw(characteristics, name, "characteristic");
}

Functional const &ModelIR::density(std::string const &name) const
{
	return find_or_throw(densities, name, "density");
}

bool operator==(ModelIR const &a, ModelIR const &b)
{
	if (!(a.settings == b.settings) || a.order != b.order || a.operators != b.operators ||
	    a.characteristics != b.characteristics)
		return false;
	if (a.systems.size() != b.systems.size() || a.densities.size() != b.densities.size())
		return false;
	for (auto const &[name, s] : a.systems)
	{
		auto it = b.systems.find(name);
		if (it == b.systems.end() || it->second.rhs != s.rhs)
			return false;
	}
	for (auto const &[name, d] : a.densities)
	{
		auto it = b.densities.find(name);
		if (it == b.densities.end() || it->second.density != d.density)
			return false;
	}
	return true;
}

std::string print_model(ModelIR const &M)
{
	std::ostringstream os;
	os << "set eps_order = " << M.settings.eps_order << ";\n";
	os << "set max_jet_order = " << M.settings.max_jet_order << ";\n";
	for (auto const &[kind, name] : M.order)
	{
		switch (kind)
		{
		case DeclKind::System:
			os << "system " << name << " { rhs: " << to_text(M.system(name).rhs.front()) << "; }\n";
			break;
		case DeclKind::Operator:
			os << "operator " << name << " { " << to_text(M.op(name)) << "; }\n";
			break;
		case DeclKind::Characteristic:
			os << "char " << name << " = " << to_text(M.characteristic(name)) << ";\n";
			break;
		case DeclKind::Density:
			os << "density " << name << " = " << to_text(M.density(name).density) << ";\n";
			break;
		}
	}
	return os.str();
}

std::string model_hash(std::string_view text)
{
	unsigned char digest[EVP_MAX_MD_SIZE];
	unsigned int len = 0;
	EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
	std::ostringstream os;
	for (unsigned int i = 0; i < len; ++i)
		os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
	return os.str();
}

} // namespace apsym
