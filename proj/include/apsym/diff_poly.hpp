#pragma once

#include "apsym/eps_poly.hpp"

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace apsym {

/// u^component_order: the order-th x-derivative of one dependent variable.
struct JetVar
{
	int component = 0;
	int order = 0;

	auto operator<=>(JetVar const &) const = default;
};

/**
 * Power product x^a t^b prod (u^alpha_k)^e. Jet factors are kept sorted by
 * (component, order) with positive exponents, so the default ordering is a
 * total order on canonical monomials.
 */
struct Monomial
{
	int x_exp = 0;
	int t_exp = 0;
	std::vector<std::pair<JetVar, int>> jets;

	auto operator<=>(Monomial const &) const = default;

	static Monomial jet(JetVar v, int e = 1);

	int exponent(JetVar v) const;
	/// Sum of jet exponents (polynomial degree in the dependent variables).
	int u_degree() const;
	/// Highest derivative order present, -1 when u-free.
	int max_order() const;
	bool is_one() const { return x_exp == 0 && t_exp == 0 && jets.empty(); }

	Monomial with_exponent(JetVar v, int e) const;
	friend Monomial operator*(Monomial const &a, Monomial const &b);
};

/**
 * Differential polynomial with coefficients in Q[eps]/(eps^(p+1)).
 *
 * Terms with zero coefficient are never stored, so two polynomials are
 * equal iff their term maps are equal. Operands of arithmetic must agree in
 * eps order and number of components.
 */
class DiffPoly
{
  public:
	using TermMap = std::map<Monomial, EpsPoly>;

	explicit DiffPoly(int eps_order = 1, int components = 1);

	static DiffPoly constant(Rational const &c, int eps_order, int components = 1);
	static DiffPoly constant(EpsPoly const &c, int components = 1);
	static DiffPoly monomial(Monomial const &m, EpsPoly const &c, int components = 1);
	static DiffPoly eps(int eps_order, int components = 1);
	static DiffPoly x(int eps_order, int components = 1);
	static DiffPoly t(int eps_order, int components = 1);
	/// k-th x-derivative of component alpha.
	static DiffPoly u(int k, int eps_order, int component = 0, int components = 1);

	int eps_order() const { return p_; }
	int components() const { return q_; }
	TermMap const &terms() const { return terms_; }
	size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	/// Coefficient of m (zero if absent).
	EpsPoly coefficient(Monomial const &m) const;

	/// Highest jet order present, -1 if u-free.
	int max_order() const;
	int u_degree() const;
	int x_degree() const;
	int t_degree() const;
	bool depends_on_u() const;
	/// Part of eps-degree exactly k, returned with rational coefficients at degree 0.
	DiffPoly eps_part(int k) const;
	/// Value at u == 0 (all jet variables set to zero).
	DiffPoly at_zero() const;

	void add_term(Monomial const &m, EpsPoly const &c);

	DiffPoly &operator+=(DiffPoly const &b);
	DiffPoly &operator-=(DiffPoly const &b);
	DiffPoly &operator*=(DiffPoly const &b);
	DiffPoly &operator*=(EpsPoly const &s);
	DiffPoly &operator*=(Rational const &s);

	friend DiffPoly operator+(DiffPoly a, DiffPoly const &b) { return a += b; }
	friend DiffPoly operator-(DiffPoly a, DiffPoly const &b) { return a -= b; }
	friend DiffPoly operator*(DiffPoly const &a, DiffPoly const &b);
	friend DiffPoly operator*(DiffPoly a, Rational const &s) { return a *= s; }
	friend DiffPoly operator*(Rational const &s, DiffPoly a) { return a *= s; }
	friend DiffPoly operator*(EpsPoly const &s, DiffPoly a) { return a *= s; }
	DiffPoly operator-() const;

	friend bool operator==(DiffPoly const &a, DiffPoly const &b);

	/// Same eps order and components, zero value.
	DiffPoly zero() const { return DiffPoly(p_, q_); }
	DiffPoly one() const { return constant(Rational(1), p_, q_); }
	void check_compatible(DiffPoly const &b) const;

  private:
	int p_;
	int q_;
	TermMap terms_;
};

DiffPoly pow(DiffPoly const &a, int n);

/// Partial derivatives treating x, t and each jet variable as independent.
DiffPoly partial_x(DiffPoly const &P);
DiffPoly partial_t(DiffPoly const &P);
DiffPoly partial(DiffPoly const &P, JetVar v);

/// Antiderivative of P with respect to the jet variable v (no constant added).
DiffPoly antiderivative(DiffPoly const &P, JetVar v);

/// Total x-derivative D_x.
DiffPoly dx_total(DiffPoly const &P);
/// D_x^k.
DiffPoly dx_total(DiffPoly const &P, int k);

} // namespace apsym
