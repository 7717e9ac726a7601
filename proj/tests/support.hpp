#pragma once

#include "apsym/engine.hpp"
#include "apsym/fixtures.hpp"
#include "apsym/format.hpp"
#include "apsym/model.hpp"
#include "apsym/operator_algebra.hpp"

#include <random>
#include <string>

namespace testing {

using namespace apsym;

inline DiffPoly expr(std::string const &text, int p = 1)
{
	return parse_model("set eps_order = " + std::to_string(p) + "; char e = " + text + ";").characteristic("e");
}

inline PseudoDiffOp op(std::string const &text, int p = 1)
{
	return parse_model("set eps_order = " + std::to_string(p) + "; operator e { " + text + " }").op("e");
}

inline ModelIR const &gardner()
{
	static ModelIR const m = builtin_model("gardner");
	return m;
}

inline ModelIR const &burgers()
{
	static ModelIR const m = builtin_model("potential_burgers");
	return m;
}

/// Random differential polynomials and operators from a seeded engine.
class Gen
{
  public:
	explicit Gen(unsigned seed) : rng_(seed) {}

	int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

	Rational rational()
	{
		int num = uniform(-5, 5);
		return make_rational(num == 0 ? 1 : num, uniform(1, 3));
	}

	EpsPoly coefficient(int p = 1)
	{
		EpsPoly c(p);
		for (int k = 0; k <= p; ++k)
			if (uniform(0, 2) > 0)
				c[k] = rational();
		if (c.is_zero())
			c[0] = rational();
		return c;
	}

	Monomial monomial(int max_order, int max_degree, bool xt)
	{
		Monomial m;
		if (xt)
		{
			m.x_exp = uniform(0, 3) == 0 ? uniform(1, 2) : 0;
			m.t_exp = uniform(0, 3) == 0 ? 1 : 0;
		}
		int degree = uniform(0, max_degree);
		for (int i = 0; i < degree; ++i)
			m = m * Monomial::jet(JetVar{0, uniform(0, max_order)});
		return m;
	}

	DiffPoly poly(int max_order = 4, int max_degree = 3, int max_terms = 4, bool xt = true, int p = 1)
	{
		DiffPoly P(p);
		int n = uniform(1, max_terms);
		for (int i = 0; i < n; ++i)
			P.add_term(monomial(max_order, max_degree, xt), coefficient(p));
		return P;
	}

	PseudoDiffOp local_op(int max_order = 3, int p = 1)
	{
		PseudoDiffOp A(p);
		int n = uniform(1, 3);
		for (int i = 0; i < n; ++i)
			A.add_local(uniform(0, max_order), poly(2, 2, 2, true, p));
		return A;
	}

	/// Local part plus up to two nonlocal terms a Dxi b.
	PseudoDiffOp pseudo_op(int p = 1)
	{
		PseudoDiffOp A = local_op(2, p);
		int n = uniform(0, 2);
		for (int i = 0; i < n; ++i)
			A.add_nonlocal(poly(2, 2, 2, true, p), poly(2, 1, 2, false, p));
		return A;
	}

	std::mt19937 &engine() { return rng_; }

  private:
	std::mt19937 rng_;
};

} // namespace testing
