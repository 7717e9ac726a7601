#pragma once

#include "apsym/errors.hpp"
#include "apsym/jet_calculus.hpp"
#include "apsym/pseudo_diff_op.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace apsym {

/// Syntax error in a model file, with 1-based position and expected tokens.
class ParseError : public Error
{
  public:
	ParseError(int line, int column, std::string const &message, std::vector<std::string> expected = {});
	int line() const { return line_; }
	int column() const { return column_; }
	std::vector<std::string> const &expected() const { return expected_; }

  private:
	int line_;
	int column_;
	std::vector<std::string> expected_;
};

/// Reference to an undeclared (or duplicate) identifier.
class NameError : public Error
{
  public:
	NameError(int line, int column, std::string const &name, std::string const &message);
	int line() const { return line_; }
	int column() const { return column_; }
	std::string const &name() const { return name_; }

  private:
	int line_;
	int column_;
	std::string name_;
};

struct ModelSettings
{
	int eps_order = 1;
	int max_jet_order = 12;

	friend bool operator==(ModelSettings const &, ModelSettings const &) = default;
};

enum class DeclKind
{
	System,
	Operator,
	Characteristic,
	Density
};

/**
 * Parsed model: named systems, operators, characteristics and densities.
 *
 * Grammar:
 *   set eps_order = 1;            set max_jet_order = 12;
 *   system gardner { rhs: 6*(u + eps*u^2)*u_x - u_xxx; }
 *   operator E { 4*u*Dx + 2*u_x + 3*eps*(u*u_x + u^2*Dx) - Dx^3 }
 *   char Q3 = 6*t*u_x + 1 - 2*eps*u;
 *   density H1 = u^3 + eps/2*u^4 + u_x^2/2;
 *
 * Jets are u, u_x, u_xx, ... or u{k}. Operator expressions compose left to
 * right: u*Dx is u Dx, a*Dxi*b is a Dx^{-1} b. Earlier declarations may be
 * referenced by name.
 */
struct ModelIR
{
	ModelSettings settings;
	std::map<std::string, EvolutionSystem> systems;
	std::map<std::string, PseudoDiffOp> operators;
	std::map<std::string, DiffPoly> characteristics;
	std::map<std::string, Functional> densities;
	/// Declaration order, used for printing and report ordering.
	std::vector<std::pair<DeclKind, std::string>> order;

	EvolutionSystem const &system(std::string const &name) const;
	PseudoDiffOp const &op(std::string const &name) const;
	DiffPoly const &characteristic(std::string const &name) const;
	Functional const &density(std::string const &name) const;

	friend bool operator==(ModelIR const &a, ModelIR const &b);
};

ModelIR parse_model(std::string_view text);

/// Canonical model text; parse_model(print_model(M)) == M.
std::string print_model(ModelIR const &M);

/// Hex SHA-256 of the model text.
std::string model_hash(std::string_view text);

} // namespace apsym
