#include "apsym/hamiltonian.hpp"

#include "apsym/errors.hpp"
#include "apsym/operator_algebra.hpp"

namespace apsym {

bool is_skew_adjoint(PseudoDiffOp const &D)
{
	return adjoint(D) == -D;
}

DiffPoly ham_vector_field(PseudoDiffOp const &D, Functional const &H)
{
	return apply(D, euler(H.density).front());
}

Functional poisson_bracket(Functional const &P, Functional const &L, PseudoDiffOp const &D)
{
	DiffPoly density = euler(P.density).front() * ham_vector_field(D, L);
	std::string name;
	if (!P.name.empty() && !L.name.empty())
		name = "{" + P.name + "," + L.name + "}";
	return Functional{std::move(density), std::move(name)};
}

bool in_involution(Functional const &P, Functional const &L, PseudoDiffOp const &D)
{
	return euler_vanishes(poisson_bracket(P, L, D).density);
}

bool is_distinguished(Functional const &G, PseudoDiffOp const &D)
{
	try
	{
		return ham_vector_field(D, G).is_zero();
	}
	catch (NotExact const &)
	{
		return false;
	}
}

PairCheck pair_check_report(PseudoDiffOp const &D, PseudoDiffOp const &E)
{
	if (!D.is_local() || !E.is_local())
		throw Unsupported("pair check is implemented for local operators only");
	if (D.eps_order() != E.eps_order())
		throw OrderMismatch("operator eps orders differ");
	if (!is_skew_adjoint(D) || !is_skew_adjoint(E))
		throw Unsupported("pair check needs skew-adjoint operators");

	PairCheck r;
	r.trivector = prolong(theta_image(D), bivector(E)) + prolong(theta_image(E), bivector(D));
	r.residual = euler_theta(r.trivector);
	r.pass = r.residual.is_zero();
	return r;
}

bool pair_check(PseudoDiffOp const &D, PseudoDiffOp const &E)
{
	return pair_check_report(D, E).pass;
}

FlowDerivativeCheck flow_derivative_report(PseudoDiffOp const &D, EvolutionSystem const &sys,
                                           Functional const &H)
{
	if (sys.components() != 1)
		throw Unsupported("flow derivative identity is implemented for scalar systems");
	FlowDerivativeCheck r;
	DiffPoly K = ham_vector_field(D, H);
	r.rhs_matches = K == sys.rhs.front();
	if (!r.rhs_matches)
		return r;
	auto DK = frechet(K);
	r.lhs = op_prolong(D, K);
	r.rhs = compose(DK, D) + compose(D, adjoint(DK));
	r.pass = r.lhs == r.rhs;
	return r;
}

bool flow_derivative_identity(PseudoDiffOp const &D, EvolutionSystem const &sys,
                              Functional const &H)
{
	return flow_derivative_report(D, sys, H).pass;
}

} // namespace apsym
