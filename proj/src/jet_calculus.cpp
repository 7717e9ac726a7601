#include "apsym/jet_calculus.hpp"

#include "apsym/errors.hpp"
#include "apsym/operator_algebra.hpp"

#include <algorithm>

namespace apsym {

EvolutionSystem::EvolutionSystem(std::vector<DiffPoly> rhs_, std::string name_)
    : rhs(std::move(rhs_)), name(std::move(name_))
{
	if (rhs.empty())
		throw OrderMismatch("evolution system needs at least one equation");
	for (auto const &K : rhs)
	{
		rhs.front().check_compatible(K);
		if (K.components() != components())
			throw OrderMismatch("right-hand side component count does not match the system size");
	}
}

EvolutionSystem::EvolutionSystem(DiffPoly rhs_, std::string name_)
    : EvolutionSystem(std::vector<DiffPoly>{std::move(rhs_)}, std::move(name_))
{
}

int EvolutionSystem::max_order() const
{
	int k = -1;
	for (auto const &K : rhs)
		k = std::max(k, K.max_order());
	return k;
}

bool equivalent(DiffPoly const &a, DiffPoly const &b)
{
	return euler_vanishes(a - b);
}

bool equivalent(Functional const &F, Functional const &G)
{
	return equivalent(F.density, G.density);
}

DiffPoly prolong_apply(std::vector<DiffPoly> const &Q, DiffPoly const &P)
{
	if (static_cast<int>(Q.size()) != P.components())
		throw OrderMismatch("characteristic must have one entry per component");
	DiffPoly r = P.zero();
	int top = P.max_order();
	for (int a = 0; a < P.components(); ++a)
	{
		DiffPoly dq = Q[a];
		for (int k = 0; k <= top; ++k)
		{
			DiffPoly dp = partial(P, {a, k});
			if (!dp.is_zero())
				r += dp * dq;
			if (k < top)
				dq = dx_total(dq);
		}
	}
	return r;
}

DiffPoly prolong_apply(DiffPoly const &Q, DiffPoly const &P)
{
	return prolong_apply(std::vector<DiffPoly>{Q}, P);
}

DiffPoly dt_total(DiffPoly const &P, EvolutionSystem const &sys)
{
	return partial_t(P) + prolong_apply(sys.rhs, P);
}

std::vector<DiffPoly> euler(DiffPoly const &P)
{
	std::vector<DiffPoly> r;
	int top = P.max_order();
	for (int a = 0; a < P.components(); ++a)
	{
		DiffPoly e = P.zero();
		// Horner form: sum_k (-Dx)^k f_k = f_0 - Dx(f_1 - Dx(f_2 - ...))
		for (int k = top; k >= 0; --k)
		{
			e = partial(P, {a, k}) - dx_total(e);
		}
		r.push_back(std::move(e));
	}
	return r;
}

bool euler_vanishes(DiffPoly const &P)
{
	for (auto const &e : euler(P))
		if (!e.is_zero())
			return false;
	return true;
}

PseudoDiffOp frechet(DiffPoly const &P, int component)
{
	PseudoDiffOp r(P.eps_order());
	if (P.components() != 1)
		throw Unsupported("Frechet derivative as an operator is only available for scalar systems");
	for (int k = 0; k <= P.max_order(); ++k)
		r.add_local(k, partial(P, {component, k}));
	return r;
}

DiffPoly integrate_x(DiffPoly const &P)
{
	if (!euler_vanishes(P))
		throw NotExact("expression is not a total x-derivative", euler(P));

	DiffPoly rest = P;
	DiffPoly R = P.zero();
	while (rest.depends_on_u())
	{
		// Pick a top-order jet variable; an exact expression is linear in it.
		JetVar top{0, -1};
		for (auto const &[m, c] : rest.terms())
			for (auto const &[v, e] : m.jets)
				if (v.order > top.order || (v.order == top.order && v.component < top.component))
					top = v;
		if (top.order == 0)
			throw NotExact("order-zero remainder depends on u", euler(P));
		DiffPoly coeff = partial(rest, top);
		if (partial(coeff, top) != P.zero())
			throw NotExact("expression is not linear in its top derivative", euler(P));
		DiffPoly piece = antiderivative(coeff, {top.component, top.order - 1});
		R += piece;
		rest -= dx_total(piece);
	}

	for (auto const &[m, c] : rest.terms())
	{
		Monomial n = m;
		n.x_exp += 1;
		R.add_term(n, c * make_rational(1, m.x_exp + 1));
	}
	return R;
}

bool helmholtz_selfadjoint(DiffPoly const &g)
{
	auto D = frechet(g);
	return adjoint(D) == D;
}

Functional reconstruct_density(DiffPoly const &g, std::string name)
{
	if (g.components() != 1)
		throw Unsupported("density reconstruction is implemented for scalar systems");
	if (!helmholtz_selfadjoint(g))
		throw NotVariational("Frechet derivative is not self-adjoint");
	// g[lambda u] scales a monomial of u-degree d by lambda^d, so the
	// homotopy integral contributes a factor 1/(d+1).
	DiffPoly T = g.zero();
	Monomial u = Monomial::jet({0, 0});
	for (auto const &[m, c] : g.terms())
		T.add_term(m * u, c * make_rational(1, m.u_degree() + 1));
	return Functional{std::move(T), std::move(name)};
}

} // namespace apsym
