#include "apsym/diff_poly.hpp"

#include "apsym/errors.hpp"

#include <algorithm>

namespace apsym {

NotExact::NotExact(std::string const &what, std::vector<DiffPoly> obstruction)
    : Error(what), obstruction_(std::make_shared<std::vector<DiffPoly>>(std::move(obstruction)))
{
}

NotInImage::NotInImage(std::string const &what, std::vector<DiffPoly> obstruction)
    : Error(what), obstruction_(std::make_shared<std::vector<DiffPoly>>(std::move(obstruction)))
{
}

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::jet(JetVar v, int e)
{
	Monomial m;
	if (e > 0)
		m.jets.push_back({v, e});
	return m;
}

int Monomial::exponent(JetVar v) const
{
	for (auto const &[w, e] : jets)
		if (w == v)
			return e;
	return 0;
}

int Monomial::u_degree() const
{
	int d = 0;
	for (auto const &j : jets)
		d += j.second;
	return d;
}

int Monomial::max_order() const
{
	int k = -1;
	for (auto const &j : jets)
		k = std::max(k, j.first.order);
	return k;
}

Monomial Monomial::with_exponent(JetVar v, int e) const
{
	Monomial r = *this;
	auto it = std::lower_bound(r.jets.begin(), r.jets.end(), v,
	                           [](auto const &a, JetVar const &b) { return a.first < b; });
	if (it != r.jets.end() && it->first == v)
	{
		if (e == 0)
			r.jets.erase(it);
		else
			it->second = e;
	}
	else if (e != 0)
		r.jets.insert(it, {v, e});
	return r;
}

Monomial operator*(Monomial const &a, Monomial const &b)
{
	Monomial r;
	r.x_exp = a.x_exp + b.x_exp;
	r.t_exp = a.t_exp + b.t_exp;
	r.jets.reserve(a.jets.size() + b.jets.size());
	auto i = a.jets.begin(), j = b.jets.begin();
	while (i != a.jets.end() || j != b.jets.end())
	{
		if (j == b.jets.end() || (i != a.jets.end() && i->first < j->first))
			r.jets.push_back(*i++);
		else if (i == a.jets.end() || j->first < i->first)
			r.jets.push_back(*j++);
		else
		{
			r.jets.push_back({i->first, i->second + j->second});
			++i;
			++j;
		}
	}
	return r;
}

// ---- DiffPoly ---------------------------------------------------------------

DiffPoly::DiffPoly(int eps_order, int components) : p_(eps_order), q_(components)
{
	if (eps_order < 0)
		throw OrderMismatch("eps order must be non-negative");
	if (components < 1)
		throw OrderMismatch("need at least one dependent variable");
}

DiffPoly DiffPoly::constant(Rational const &c, int eps_order, int components)
{
	DiffPoly r(eps_order, components);
	r.add_term(Monomial{}, EpsPoly(c, eps_order));
	return r;
}

DiffPoly DiffPoly::constant(EpsPoly const &c, int components)
{
	DiffPoly r(c.order(), components);
	r.add_term(Monomial{}, c);
	return r;
}

DiffPoly DiffPoly::monomial(Monomial const &m, EpsPoly const &c, int components)
{
	DiffPoly r(c.order(), components);
	r.add_term(m, c);
	return r;
}

DiffPoly DiffPoly::eps(int eps_order, int components)
{
	return constant(EpsPoly::eps(eps_order), components);
}

DiffPoly DiffPoly::x(int eps_order, int components)
{
	Monomial m;
	m.x_exp = 1;
	return monomial(m, EpsPoly(Rational(1), eps_order), components);
}

DiffPoly DiffPoly::t(int eps_order, int components)
{
	Monomial m;
	m.t_exp = 1;
	return monomial(m, EpsPoly(Rational(1), eps_order), components);
}

DiffPoly DiffPoly::u(int k, int eps_order, int component, int components)
{
	if (component < 0 || component >= components)
		throw OrderMismatch("component index out of range");
	return monomial(Monomial::jet({component, k}), EpsPoly(Rational(1), eps_order), components);
}

EpsPoly DiffPoly::coefficient(Monomial const &m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? EpsPoly(p_) : it->second;
}

int DiffPoly::max_order() const
{
	int k = -1;
	for (auto const &[m, c] : terms_)
		k = std::max(k, m.max_order());
	return k;
}

int DiffPoly::u_degree() const
{
	int d = 0;
	for (auto const &[m, c] : terms_)
		d = std::max(d, m.u_degree());
	return d;
}

int DiffPoly::x_degree() const
{
	int d = 0;
	for (auto const &[m, c] : terms_)
		d = std::max(d, m.x_exp);
	return d;
}

int DiffPoly::t_degree() const
{
	int d = 0;
	for (auto const &[m, c] : terms_)
		d = std::max(d, m.t_exp);
	return d;
}

bool DiffPoly::depends_on_u() const
{
	for (auto const &[m, c] : terms_)
		if (!m.jets.empty())
			return true;
	return false;
}

DiffPoly DiffPoly::eps_part(int k) const
{
	DiffPoly r(p_, q_);
	for (auto const &[m, c] : terms_)
		if (k <= p_ && sgn(c[k]) != 0)
			r.add_term(m, EpsPoly(c[k], p_));
	return r;
}

DiffPoly DiffPoly::at_zero() const
{
	DiffPoly r(p_, q_);
	for (auto const &[m, c] : terms_)
		if (m.jets.empty())
			r.add_term(m, c);
	return r;
}

void DiffPoly::add_term(Monomial const &m, EpsPoly const &c)
{
	if (c.order() != p_)
		throw OrderMismatch("coefficient eps order does not match polynomial");
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

void DiffPoly::check_compatible(DiffPoly const &b) const
{
	if (p_ != b.p_)
		throw OrderMismatch("eps order mismatch: " + std::to_string(p_) + " vs " +
		                    std::to_string(b.p_));
	if (q_ != b.q_)
		throw OrderMismatch("component count mismatch");
}

DiffPoly &DiffPoly::operator+=(DiffPoly const &b)
{
	check_compatible(b);
	for (auto const &[m, c] : b.terms_)
		add_term(m, c);
	return *this;
}

DiffPoly &DiffPoly::operator-=(DiffPoly const &b)
{
	check_compatible(b);
	for (auto const &[m, c] : b.terms_)
		add_term(m, -c);
	return *this;
}

DiffPoly operator*(DiffPoly const &a, DiffPoly const &b)
{
	a.check_compatible(b);
	DiffPoly r(a.p_, a.q_);
	for (auto const &[ma, ca] : a.terms_)
		for (auto const &[mb, cb] : b.terms_)
			r.add_term(ma * mb, ca * cb);
	return r;
}

DiffPoly &DiffPoly::operator*=(DiffPoly const &b)
{
	*this = *this * b;
	return *this;
}

DiffPoly &DiffPoly::operator*=(EpsPoly const &s)
{
	if (s.order() != p_)
		throw OrderMismatch("eps order mismatch in scalar multiplication");
	TermMap r;
	for (auto &[m, c] : terms_)
	{
		auto v = c * s;
		if (!v.is_zero())
			r.emplace(m, std::move(v));
	}
	terms_ = std::move(r);
	return *this;
}

DiffPoly &DiffPoly::operator*=(Rational const &s)
{
	if (sgn(s) == 0)
	{
		terms_.clear();
		return *this;
	}
	for (auto &[m, c] : terms_)
		c *= s;
	return *this;
}

DiffPoly DiffPoly::operator-() const
{
	DiffPoly r = *this;
	for (auto &[m, c] : r.terms_)
		c = -c;
	return r;
}

bool operator==(DiffPoly const &a, DiffPoly const &b)
{
	a.check_compatible(b);
	return a.terms_ == b.terms_;
}

DiffPoly pow(DiffPoly const &a, int n)
{
	DiffPoly r = a.one();
	for (int i = 0; i < n; ++i)
		r *= a;
	return r;
}

DiffPoly partial_x(DiffPoly const &P)
{
	DiffPoly r = P.zero();
	for (auto const &[m, c] : P.terms())
	{
		if (m.x_exp == 0)
			continue;
		Monomial n = m;
		n.x_exp -= 1;
		r.add_term(n, c * Rational(m.x_exp));
	}
	return r;
}

DiffPoly partial_t(DiffPoly const &P)
{
	DiffPoly r = P.zero();
	for (auto const &[m, c] : P.terms())
	{
		if (m.t_exp == 0)
			continue;
		Monomial n = m;
		n.t_exp -= 1;
		r.add_term(n, c * Rational(m.t_exp));
	}
	return r;
}

DiffPoly partial(DiffPoly const &P, JetVar v)
{
	DiffPoly r = P.zero();
	for (auto const &[m, c] : P.terms())
	{
		int e = m.exponent(v);
		if (e == 0)
			continue;
		r.add_term(m.with_exponent(v, e - 1), c * Rational(e));
	}
	return r;
}

DiffPoly antiderivative(DiffPoly const &P, JetVar v)
{
	DiffPoly r = P.zero();
	for (auto const &[m, c] : P.terms())
	{
		int e = m.exponent(v);
		r.add_term(m.with_exponent(v, e + 1), c * make_rational(1, e + 1));
	}
	return r;
}

DiffPoly dx_total(DiffPoly const &P)
{
	DiffPoly r = P.zero();
	for (auto const &[m, c] : P.terms())
	{
		if (m.x_exp > 0)
		{
			Monomial n = m;
			n.x_exp -= 1;
			r.add_term(n, c * Rational(m.x_exp));
		}
		for (auto const &[v, e] : m.jets)
		{
			JetVar next{v.component, v.order + 1};
			Monomial n = m.with_exponent(v, e - 1);
			n = n.with_exponent(next, n.exponent(next) + 1);
			r.add_term(n, c * Rational(e));
		}
	}
	return r;
}

DiffPoly dx_total(DiffPoly const &P, int k)
{
	DiffPoly r = P;
	for (int i = 0; i < k; ++i)
		r = dx_total(r);
	return r;
}

} // namespace apsym
