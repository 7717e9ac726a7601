#pragma once

#include "apsym/jet_calculus.hpp"
#include "apsym/pseudo_diff_op.hpp"

namespace apsym {

/// A(Q). Nonlocal terms a Dxi b contribute a * integrate_x(b Q) and throw
/// NotExact when b Q is not a total derivative.
DiffPoly apply(PseudoDiffOp const &A, DiffPoly const &Q);

/// A o B. Throws ClosureError when both factors carry nonlocal terms.
PseudoDiffOp compose(PseudoDiffOp const &A, PseudoDiffOp const &B);

/// Formal adjoint: (a Dx^j)* = (-Dx)^j o a, (a Dxi b)* = -b Dxi a.
PseudoDiffOp adjoint(PseudoDiffOp const &A);

/// [A, B] = A o B - B o A.
PseudoDiffOp commutator(PseudoDiffOp const &A, PseudoDiffOp const &B);

/// Derivative of the coefficients along u_t = K (Leibniz rule on a Dxi b).
PseudoDiffOp op_time_derivative(PseudoDiffOp const &A, EvolutionSystem const &sys);

/// Coefficient-wise pr v_Q: replaces each coefficient c by D_c(Q), no explicit t.
PseudoDiffOp op_prolong(PseudoDiffOp const &A, DiffPoly const &Q);

} // namespace apsym
