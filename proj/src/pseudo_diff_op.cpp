#include "apsym/pseudo_diff_op.hpp"

#include "apsym/errors.hpp"

namespace apsym {

PseudoDiffOp::PseudoDiffOp(int eps_order) : p_(eps_order)
{
	if (eps_order < 0)
		throw OrderMismatch("eps order must be non-negative");
}

PseudoDiffOp PseudoDiffOp::identity(int eps_order)
{
	return multiplication(DiffPoly::constant(Rational(1), eps_order));
}

PseudoDiffOp PseudoDiffOp::multiplication(DiffPoly const &a)
{
	return local_term(a, 0);
}

PseudoDiffOp PseudoDiffOp::dx(int eps_order, int k)
{
	return local_term(DiffPoly::constant(Rational(1), eps_order), k);
}

PseudoDiffOp PseudoDiffOp::dx_inverse(int eps_order)
{
	auto one = DiffPoly::constant(Rational(1), eps_order);
	return nonlocal_term(one, one);
}

PseudoDiffOp PseudoDiffOp::local_term(DiffPoly const &a, int j)
{
	PseudoDiffOp r(a.eps_order());
	r.add_local(j, a);
	return r;
}

PseudoDiffOp PseudoDiffOp::nonlocal_term(DiffPoly const &a, DiffPoly const &b)
{
	PseudoDiffOp r(a.eps_order());
	r.add_nonlocal(a, b);
	return r;
}

std::vector<std::pair<DiffPoly, DiffPoly>> PseudoDiffOp::nonlocal_pairs() const
{
	std::vector<std::pair<DiffPoly, DiffPoly>> r;
	for (auto const &[n, a] : nonlocal_)
		r.emplace_back(a, DiffPoly::monomial(n, EpsPoly(Rational(1), p_)));
	return r;
}

int PseudoDiffOp::order() const
{
	return local_.empty() ? -1 : local_.rbegin()->first;
}

DiffPoly PseudoDiffOp::local_coefficient(int j) const
{
	auto it = local_.find(j);
	return it == local_.end() ? DiffPoly(p_) : it->second;
}

void PseudoDiffOp::check_order(DiffPoly const &a) const
{
	if (a.eps_order() != p_)
		throw OrderMismatch("operator and coefficient eps orders differ");
	if (a.components() != 1)
		throw Unsupported("operators are scalar (one dependent variable)");
}

void PseudoDiffOp::add_local(int j, DiffPoly const &a)
{
	if (j < 0)
		throw Unsupported("negative powers of Dx must be written as a*Dxi*b");
	check_order(a);
	if (a.is_zero())
		return;
	auto [it, inserted] = local_.try_emplace(j, a);
	if (!inserted)
	{
		it->second += a;
		if (it->second.is_zero())
			local_.erase(it);
	}
}

void PseudoDiffOp::add_nonlocal(DiffPoly const &a, DiffPoly const &b)
{
	check_order(a);
	check_order(b);
	if (a.is_zero())
		return;
	for (auto const &[m, c] : b.terms())
	{
		Monomial right = m;
		Monomial left;
		left.t_exp = right.t_exp;
		right.t_exp = 0;
		DiffPoly shifted = a * DiffPoly::monomial(left, c);
		if (shifted.is_zero())
			continue;
		auto [it, inserted] = nonlocal_.try_emplace(right, shifted);
		if (!inserted)
		{
			it->second += shifted;
			if (it->second.is_zero())
				nonlocal_.erase(it);
		}
	}
}

PseudoDiffOp &PseudoDiffOp::operator+=(PseudoDiffOp const &b)
{
	if (b.p_ != p_)
		throw OrderMismatch("operator eps orders differ");
	for (auto const &[j, a] : b.local_)
		add_local(j, a);
	for (auto const &[n, a] : b.nonlocal_)
		add_nonlocal(a, DiffPoly::monomial(n, EpsPoly(Rational(1), p_)));
	return *this;
}

PseudoDiffOp &PseudoDiffOp::operator-=(PseudoDiffOp const &b)
{
	return *this += -b;
}

PseudoDiffOp PseudoDiffOp::operator-() const
{
	PseudoDiffOp r = *this;
	for (auto &[j, a] : r.local_)
		a = -a;
	for (auto &[n, a] : r.nonlocal_)
		a = -a;
	return r;
}

PseudoDiffOp operator*(DiffPoly const &c, PseudoDiffOp const &A)
{
	PseudoDiffOp r(A.p_);
	for (auto const &[j, a] : A.local_)
		r.add_local(j, c * a);
	for (auto const &[n, a] : A.nonlocal_)
		r.add_nonlocal(c * a, DiffPoly::monomial(n, EpsPoly(Rational(1), A.p_)));
	return r;
}

PseudoDiffOp operator*(Rational const &s, PseudoDiffOp const &A)
{
	return DiffPoly::constant(s, A.p_) * A;
}

bool operator==(PseudoDiffOp const &a, PseudoDiffOp const &b)
{
	if (a.p_ != b.p_)
		throw OrderMismatch("operator eps orders differ");
	return a.local_ == b.local_ && a.nonlocal_ == b.nonlocal_;
}

} // namespace apsym
