#pragma once

#include "apsym/diff_poly.hpp"
#include "apsym/pseudo_diff_op.hpp"

#include <string>
#include <vector>

namespace apsym {

/// u_t = rhs[u, eps], one right-hand side per dependent variable.
struct EvolutionSystem
{
	std::vector<DiffPoly> rhs;
	std::string name;

	EvolutionSystem() = default;
	EvolutionSystem(std::vector<DiffPoly> rhs_, std::string name_ = {});
	explicit EvolutionSystem(DiffPoly rhs_, std::string name_ = {});

	int components() const { return static_cast<int>(rhs.size()); }
	int eps_order() const { return rhs.front().eps_order(); }
	int max_order() const;
};

/// Integral of a density modulo total x-derivatives.
struct Functional
{
	DiffPoly density;
	std::string name;
};

/// F == G modulo im Dx, decided by the Euler operator.
bool equivalent(Functional const &F, Functional const &G);
bool equivalent(DiffPoly const &density_a, DiffPoly const &density_b);

/// dP/dt + sum (dP/du^a_k) Dx^k K_a along the flow u_t = K.
DiffPoly dt_total(DiffPoly const &P, EvolutionSystem const &sys);

/// Variational derivative, one entry per component.
std::vector<DiffPoly> euler(DiffPoly const &P);
bool euler_vanishes(DiffPoly const &P);

/// Frechet derivative with respect to one component: sum_k (dP/du^c_k) Dx^k.
PseudoDiffOp frechet(DiffPoly const &P, int component = 0);

/// D_P(Q) = pr v_Q(P) = sum_{a,k} (dP/du^a_k) Dx^k Q_a.
DiffPoly prolong_apply(std::vector<DiffPoly> const &Q, DiffPoly const &P);
DiffPoly prolong_apply(DiffPoly const &Q, DiffPoly const &P);

/**
 * R with Dx R == P. Throws NotExact carrying euler(P) when P is not a total
 * derivative. The antiderivative is normalized to have no term depending on
 * t alone, which makes the result unique.
 */
DiffPoly integrate_x(DiffPoly const &P);

/// Helmholtz condition for E(T) = g: the Frechet derivative of g is self-adjoint.
bool helmholtz_selfadjoint(DiffPoly const &g);

/// Density T with E(T) == g via the homotopy formula T = int_0^1 u g[lambda u] dlambda.
/// Throws NotVariational when the Helmholtz condition fails.
Functional reconstruct_density(DiffPoly const &g, std::string name = {});

} // namespace apsym
