#pragma once

#include "apsym/jet_calculus.hpp"
#include "apsym/multivector.hpp"
#include "apsym/pseudo_diff_op.hpp"

namespace apsym {

bool is_skew_adjoint(PseudoDiffOp const &D);

/// Characteristic D E(H) of the Hamiltonian vector field of H.
DiffPoly ham_vector_field(PseudoDiffOp const &D, Functional const &H);

/// {P, L}_D = int E(P) D E(L) dx.
Functional poisson_bracket(Functional const &P, Functional const &L, PseudoDiffOp const &D);
bool in_involution(Functional const &P, Functional const &L, PseudoDiffOp const &D);

/// D E(G) == 0 (false when D E(G) is not even defined).
bool is_distinguished(Functional const &G, PseudoDiffOp const &D);

struct PairCheck
{
	bool pass = false;
	/// pr v_{D theta}(Theta_E) + pr v_{E theta}(Theta_D).
	MultiVector trivector{3, 1};
	/// Graded Euler operator of the tri-vector; zero iff pass.
	MultiVector residual{2, 1};
};

/// Approximately-Hamiltonian-pair criterion for two local skew-adjoint operators.
/// pair_check(D, D) is the Jacobi identity of D alone.
PairCheck pair_check_report(PseudoDiffOp const &D, PseudoDiffOp const &E);
bool pair_check(PseudoDiffOp const &D, PseudoDiffOp const &E);

struct FlowDerivativeCheck
{
	bool rhs_matches = false;
	bool pass = false;
	PseudoDiffOp lhs;
	PseudoDiffOp rhs;
};

/// pr v_K(D) == D_K o D + D o D_K^* where K = D E(H) must equal the system rhs.
FlowDerivativeCheck flow_derivative_report(PseudoDiffOp const &D, EvolutionSystem const &sys,
                                           Functional const &H);
bool flow_derivative_identity(PseudoDiffOp const &D, EvolutionSystem const &sys,
                              Functional const &H);

} // namespace apsym
