#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace apsym {

/// Exact rational, always kept in canonical form by GMP.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/**
 * Truncated polynomial in eps over the rationals, i.e. an element of
 * Q[eps]/(eps^(p+1)). All arithmetic discards degrees above the order p.
 * Mixing operands of different order throws OrderMismatch.
 */
class EpsPoly
{
  public:
	explicit EpsPoly(int order = 1);
	EpsPoly(Rational const &value, int order);

	static EpsPoly eps(int order);

	int order() const { return static_cast<int>(coeffs_.size()) - 1; }
	Rational const &operator[](int k) const { return coeffs_[k]; }
	Rational &operator[](int k) { return coeffs_[k]; }

	bool is_zero() const;
	/// Lowest eps-degree with a nonzero coefficient, or -1 for zero.
	int valuation() const;

	EpsPoly &operator+=(EpsPoly const &b);
	EpsPoly &operator-=(EpsPoly const &b);
	EpsPoly &operator*=(EpsPoly const &b);
	EpsPoly &operator*=(Rational const &s);

	friend EpsPoly operator+(EpsPoly a, EpsPoly const &b) { return a += b; }
	friend EpsPoly operator-(EpsPoly a, EpsPoly const &b) { return a -= b; }
	friend EpsPoly operator*(EpsPoly a, EpsPoly const &b) { return a *= b; }
	friend EpsPoly operator*(EpsPoly a, Rational const &s) { return a *= s; }
	friend EpsPoly operator*(Rational const &s, EpsPoly a) { return a *= s; }
	EpsPoly operator-() const;

	friend bool operator==(EpsPoly const &a, EpsPoly const &b);

	std::string to_string() const;

  private:
	void check_order(EpsPoly const &b) const;
	std::vector<Rational> coeffs_;
};

/// Drops degrees above q; the result has order q.
EpsPoly truncate(EpsPoly const &a, int q);

} // namespace apsym
