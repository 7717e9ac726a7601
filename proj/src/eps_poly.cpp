#include "apsym/eps_poly.hpp"

#include "apsym/errors.hpp"

#include <sstream>

namespace apsym {

Rational make_rational(long num, long den)
{
	Rational r(num, den);
	r.canonicalize();
	return r;
}

EpsPoly::EpsPoly(int order)
{
	if (order < 0)
		throw OrderMismatch("eps order must be non-negative");
	coeffs_.assign(order + 1, Rational(0));
}

EpsPoly::EpsPoly(Rational const &value, int order) : EpsPoly(order)
{
	coeffs_[0] = value;
}

EpsPoly EpsPoly::eps(int order)
{
	EpsPoly r(order);
	if (order >= 1)
		r.coeffs_[1] = 1;
	return r;
}

bool EpsPoly::is_zero() const
{
	for (auto const &c : coeffs_)
		if (sgn(c) != 0)
			return false;
	return true;
}

int EpsPoly::valuation() const
{
	for (int k = 0; k <= order(); ++k)
		if (sgn(coeffs_[k]) != 0)
			return k;
	return -1;
}

void EpsPoly::check_order(EpsPoly const &b) const
{
	if (order() != b.order())
		throw OrderMismatch("eps order mismatch: " + std::to_string(order()) + " vs " +
		                    std::to_string(b.order()));
}

EpsPoly &EpsPoly::operator+=(EpsPoly const &b)
{
	check_order(b);
	for (size_t k = 0; k < coeffs_.size(); ++k)
		coeffs_[k] += b.coeffs_[k];
	return *this;
}

EpsPoly &EpsPoly::operator-=(EpsPoly const &b)
{
	check_order(b);
	for (size_t k = 0; k < coeffs_.size(); ++k)
		coeffs_[k] -= b.coeffs_[k];
	return *this;
}

EpsPoly &EpsPoly::operator*=(EpsPoly const &b)
{
	check_order(b);
	int p = order();
	std::vector<Rational> r(p + 1, Rational(0));
	for (int i = 0; i <= p; ++i)
	{
		if (sgn(coeffs_[i]) == 0)
			continue;
		for (int j = 0; i + j <= p; ++j)
			r[i + j] += coeffs_[i] * b.coeffs_[j];
	}
	coeffs_ = std::move(r);
	return *this;
}

EpsPoly &EpsPoly::operator*=(Rational const &s)
{
	for (auto &c : coeffs_)
		c *= s;
	return *this;
}

EpsPoly EpsPoly::operator-() const
{
	EpsPoly r = *this;
	for (auto &c : r.coeffs_)
		c = -c;
	return r;
}

bool operator==(EpsPoly const &a, EpsPoly const &b)
{
	a.check_order(b);
	return a.coeffs_ == b.coeffs_;
}

std::string EpsPoly::to_string() const
{
	std::ostringstream os;
	bool first = true;
	for (int k = 0; k <= order(); ++k)
	{
		auto const &c = coeffs_[k];
		if (sgn(c) == 0)
			continue;
		if (!first)
			os << (sgn(c) < 0 ? " - " : " + ");
		else if (sgn(c) < 0)
			os << "-";
		Rational a = abs(c);
		bool unit = a == 1 && k > 0;
		if (!unit)
			os << a.get_str();
		if (k > 0)
			os << (unit ? "" : "*") << "eps" << (k > 1 ? "^" + std::to_string(k) : "");
		first = false;
	}
	return first ? "0" : os.str();
}

EpsPoly truncate(EpsPoly const &a, int q)
{
	if (q < 0 || q > a.order())
		throw OrderMismatch("cannot truncate order " + std::to_string(a.order()) + " to " +
		                    std::to_string(q));
	EpsPoly r(q);
	for (int k = 0; k <= q; ++k)
		r[k] = a[k];
	return r;
}

} // namespace apsym
