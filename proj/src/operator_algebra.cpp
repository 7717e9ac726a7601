#include "apsym/operator_algebra.hpp"

#include "apsym/errors.hpp"

namespace apsym {

namespace {

Rational binomial(int n, int k)
{
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return Rational(r);
}

/// Dx^i o f expanded by Leibniz into sum_k C(i,k) Dx^k(f) Dx^(i-k).
void add_leibniz(PseudoDiffOp &out, DiffPoly const &left, int i, DiffPoly const &f, int shift)
{
	DiffPoly df = f;
	for (int k = 0; k <= i; ++k)
	{
		if (df.is_zero())
			break;
		out.add_local(i - k + shift, left * df * binomial(i, k));
		df = dx_total(df);
	}
}

/// Dx^i o (c Dxi d): (Dx^i c) Dxi d + sum_{m<i} Dx^(i-1-m) o (Dx^m(c) d).
void add_local_nonlocal(PseudoDiffOp &out, DiffPoly const &a, int i, DiffPoly const &c,
                        DiffPoly const &d)
{
	DiffPoly dc = c;
	for (int m = 0; m < i; ++m)
	{
		add_leibniz(out, a, i - 1 - m, dc * d, 0);
		dc = dx_total(dc);
	}
	out.add_nonlocal(a * dc, d);
}

/// Dxi o (f Dx^j) = sum_{k<j} (-1)^k Dx^k(f) Dx^(j-1-k) + (-1)^j Dxi Dx^j(f).
void add_nonlocal_local(PseudoDiffOp &out, DiffPoly const &a, DiffPoly const &f, int j)
{
	DiffPoly df = f;
	for (int k = 0; k < j; ++k)
	{
		out.add_local(j - 1 - k, (k % 2 == 0 ? a * df : -(a * df)));
		df = dx_total(df);
	}
	out.add_nonlocal(j % 2 == 0 ? a : -a, df);
}

} // namespace

DiffPoly apply(PseudoDiffOp const &A, DiffPoly const &Q)
{
	DiffPoly r = Q.zero();
	DiffPoly dq = Q;
	int prev = 0;
	for (auto const &[j, a] : A.local())
	{
		dq = dx_total(dq, j - prev);
		prev = j;
		r += a * dq;
	}
	for (auto const &[a, b] : A.nonlocal_pairs())
		r += a * integrate_x(b * Q);
	return r;
}

PseudoDiffOp compose(PseudoDiffOp const &A, PseudoDiffOp const &B)
{
	if (A.eps_order() != B.eps_order())
		throw OrderMismatch("operator eps orders differ");
	PseudoDiffOp r(A.eps_order());
	for (auto const &[i, a] : A.local())
	{
		for (auto const &[j, b] : B.local())
			add_leibniz(r, a, i, b, j);
		for (auto const &[c, d] : B.nonlocal_pairs())
			add_local_nonlocal(r, a, i, c, d);
	}
	if (!A.is_local() && !B.is_local())
		throw ClosureError("composition of two nonlocal operators leaves the a*Dxi*b class");
	for (auto const &[a, b] : A.nonlocal_pairs())
		for (auto const &[j, c] : B.local())
			add_nonlocal_local(r, a, b * c, j);
	return r;
}

PseudoDiffOp adjoint(PseudoDiffOp const &A)
{
	PseudoDiffOp r(A.eps_order());
	for (auto const &[j, a] : A.local())
	{
		auto one = a.one();
		add_leibniz(r, j % 2 == 0 ? one : -one, j, a, 0);
	}
	for (auto const &[a, b] : A.nonlocal_pairs())
		r.add_nonlocal(-b, a);
	return r;
}

PseudoDiffOp commutator(PseudoDiffOp const &A, PseudoDiffOp const &B)
{
	return compose(A, B) - compose(B, A);
}

PseudoDiffOp op_time_derivative(PseudoDiffOp const &A, EvolutionSystem const &sys)
{
	PseudoDiffOp r(A.eps_order());
	for (auto const &[j, a] : A.local())
		r.add_local(j, dt_total(a, sys));
	for (auto const &[a, b] : A.nonlocal_pairs())
	{
		r.add_nonlocal(dt_total(a, sys), b);
		r.add_nonlocal(a, dt_total(b, sys));
	}
	return r;
}

PseudoDiffOp op_prolong(PseudoDiffOp const &A, DiffPoly const &Q)
{
	PseudoDiffOp r(A.eps_order());
	for (auto const &[j, a] : A.local())
		r.add_local(j, prolong_apply(Q, a));
	for (auto const &[a, b] : A.nonlocal_pairs())
	{
		r.add_nonlocal(prolong_apply(Q, a), b);
		r.add_nonlocal(a, prolong_apply(Q, b));
	}
	return r;
}

} // namespace apsym
