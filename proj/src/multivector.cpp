#include "apsym/multivector.hpp"

#include "apsym/errors.hpp"

#include <algorithm>

namespace apsym {

namespace {

void add_to(ThetaForm &w, int k, DiffPoly const &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = w.try_emplace(k, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			w.erase(it);
	}
}

} // namespace

ThetaForm theta_image(PseudoDiffOp const &D)
{
	if (!D.is_local())
		throw Unsupported("multi-vector calculus is implemented for local operators only");
	ThetaForm w;
	for (auto const &[j, a] : D.local())
		add_to(w, j, a);
	return w;
}

ThetaForm dx_total(ThetaForm const &w)
{
	ThetaForm r;
	for (auto const &[k, c] : w)
	{
		add_to(r, k, dx_total(c));
		add_to(r, k + 1, c);
	}
	return r;
}

MultiVector::MultiVector(int grade, int eps_order) : grade_(grade), p_(eps_order)
{
	if (grade < 0)
		throw Unsupported("negative multi-vector grade");
}

void MultiVector::add(DiffPoly const &f, std::vector<int> orders)
{
	if (static_cast<int>(orders.size()) != grade_)
		throw Unsupported("wedge factor count does not match grade");
	if (f.is_zero())
		return;
	// Insertion sort counting transpositions for the Koszul sign.
	bool odd = false;
	for (size_t i = 1; i < orders.size(); ++i)
		for (size_t j = i; j > 0 && orders[j - 1] > orders[j]; --j)
		{
			std::swap(orders[j - 1], orders[j]);
			odd = !odd;
		}
	if (std::adjacent_find(orders.begin(), orders.end()) != orders.end())
		return;
	DiffPoly g = odd ? -f : f;
	auto [it, inserted] = terms_.try_emplace(orders, g);
	if (!inserted)
	{
		it->second += g;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

MultiVector &MultiVector::operator+=(MultiVector const &b)
{
	if (b.grade_ != grade_)
		throw Unsupported("adding multi-vectors of different grade");
	for (auto const &[k, f] : b.terms_)
		add(f, k);
	return *this;
}

bool operator==(MultiVector const &a, MultiVector const &b)
{
	return a.grade_ == b.grade_ && a.terms_ == b.terms_;
}

MultiVector wedge(ThetaForm const &w, MultiVector const &V)
{
	MultiVector r(V.grade() + 1, V.eps_order());
	for (auto const &[k, c] : w)
		for (auto const &[key, f] : V.terms())
		{
			std::vector<int> orders;
			orders.reserve(key.size() + 1);
			orders.push_back(k);
			orders.insert(orders.end(), key.begin(), key.end());
			r.add(c * f, std::move(orders));
		}
	return r;
}

MultiVector dx_total(MultiVector const &V)
{
	MultiVector r(V.grade(), V.eps_order());
	for (auto const &[key, f] : V.terms())
	{
		r.add(dx_total(f), key);
		for (size_t i = 0; i < key.size(); ++i)
		{
			auto shifted = key;
			shifted[i] += 1;
			r.add(f, shifted);
		}
	}
	return r;
}

MultiVector euler_theta(MultiVector const &V)
{
	if (V.grade() == 0)
		throw Unsupported("Euler operator in theta needs grade >= 1");
	int top = 0;
	for (auto const &[key, f] : V.terms())
		top = std::max(top, key.back());

	// Horner evaluation of sum_k (-Dx)^k dV/dtheta_k.
	MultiVector e(V.grade() - 1, V.eps_order());
	for (int k = top; k >= 0; --k)
	{
		MultiVector dk(V.grade() - 1, V.eps_order());
		for (auto const &[key, f] : V.terms())
			for (size_t m = 0; m < key.size(); ++m)
				if (key[m] == k)
				{
					std::vector<int> rest = key;
					rest.erase(rest.begin() + m);
					dk.add(m % 2 == 0 ? f : -f, rest);
				}
		MultiVector next = dx_total(e);
		MultiVector neg(V.grade() - 1, V.eps_order());
		for (auto const &[key, f] : next.terms())
			neg.add(-f, key);
		e = dk + neg;
	}
	return e;
}

MultiVector bivector(PseudoDiffOp const &D)
{
	MultiVector r(2, D.eps_order());
	for (auto const &[j, a] : theta_image(D))
		r.add(a * make_rational(1, 2), {0, j});
	return r;
}

MultiVector prolong(ThetaForm const &w, MultiVector const &V)
{
	MultiVector r(V.grade() + 1, V.eps_order());
	int top = -1;
	for (auto const &[key, f] : V.terms())
		top = std::max(top, f.max_order());
	ThetaForm dw = w;
	for (int k = 0; k <= top; ++k)
	{
		MultiVector part(V.grade(), V.eps_order());
		for (auto const &[key, f] : V.terms())
			part.add(partial(f, {0, k}), key);
		r += wedge(dw, part);
		dw = dx_total(dw);
	}
	return r;
}

} // namespace apsym
