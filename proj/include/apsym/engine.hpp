#pragma once

#include "apsym/hamiltonian.hpp"
#include "apsym/jet_calculus.hpp"
#include "apsym/multivector.hpp"
#include "apsym/pseudo_diff_op.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace apsym {

using Residual = std::variant<DiffPoly, PseudoDiffOp, MultiVector>;

struct HierarchyResult;

bool residual_is_zero(Residual const &r);

/// Outcome of one check. pass iff residual is zero mod eps^(p+1).
struct CheckReport
{
	std::string name;
	bool pass = false;
	Residual residual = DiffPoly();

	std::optional<DiffPoly> flux;
	std::optional<Functional> functional;
	std::optional<DiffPoly> obstruction;
	std::shared_ptr<HierarchyResult const> hierarchy;
	std::vector<std::string> notes;
	std::vector<CheckReport> children;
};

/// Residual of the symmetry condition dQ/dt + D_Q(K) - D_K(Q).
CheckReport check_symmetry(DiffPoly const &Q, EvolutionSystem const &sys, std::string name = {});

/// Conservation test: Dt T must be a total x-derivative; the certificate is the
/// flux X with Dt T + Dx X = 0.
CheckReport check_conservation(Functional const &T, EvolutionSystem const &sys,
                               std::string name = {});

/// Bounds for the ansatz used to invert operators other than Dx.
struct AnsatzBounds
{
	std::optional<int> max_order;
	std::optional<int> max_degree;
};

/// g with apply(D, g) == Q. Dx uses integrate_x; other local operators use a
/// bounded linear ansatz. Throws NotInImage.
DiffPoly solve_preimage(PseudoDiffOp const &D, DiffPoly const &Q, AnsatzBounds bounds = {});

/// Functional P with D E(P) == Q. Throws NotInImage or NotVariational.
Functional noether_inverse(DiffPoly const &Q, PseudoDiffOp const &D, AnsatzBounds bounds = {},
                           std::string name = {});

enum class RecursionMode
{
	Operator,
	Action
};

/// Operator mode: R_t - [D_K, R] == 0. Action mode: R maps every seed
/// symmetry to a symmetry.
CheckReport check_recursion_operator(PseudoDiffOp const &R, EvolutionSystem const &sys,
                                     RecursionMode mode, std::vector<DiffPoly> const &seeds = {},
                                     std::string name = {});

struct HierarchyOptions
{
	int max_jet_order = 12;
	AnsatzBounds bounds;
	/// Second Hamiltonian operator for the involution checks; R o D if unset.
	std::optional<PseudoDiffOp> second_operator;
};

struct HierarchyStop
{
	int index = 0;
	std::string reason;
	std::vector<DiffPoly> obstruction;
};

struct HierarchyResult
{
	std::vector<DiffPoly> flows;
	std::vector<std::optional<Functional>> functionals;
	std::optional<HierarchyStop> stopped_at;
	std::vector<CheckReport> checks;
	std::vector<std::string> assumptions;

	bool pass() const;
};

/// K_i = R K_{i-1} starting from the seed, with Hamiltonian functionals
/// D E(H_i) = K_i, symmetry and conservation checks, mutual commutation of
/// the flows, and pairwise involution under both brackets.
HierarchyResult generate_hierarchy(PseudoDiffOp const &R, DiffPoly const &seed, int steps,
                                   PseudoDiffOp const &D, EvolutionSystem const &sys,
                                   HierarchyOptions const &options = {});

} // namespace apsym
