#pragma once

#include "apsym/diff_poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace apsym {

/**
 * Scalar operator  sum_j a_j Dx^j  +  sum_n b_n Dxi n,  where Dxi = Dx^{-1}.
 *
 * Local coefficients are stored coefficient-first (all Dx pushed right).
 * The nonlocal part is a finite tensor sum of a Dxi b; it is kept in a
 * canonical form keyed by the right factor's monomial. Since eps and t
 * commute with Dxi they are always moved to the left factor, so the right
 * monomials involve only x and jet variables. Equality is map equality.
 */
class PseudoDiffOp
{
  public:
	using LocalMap = std::map<int, DiffPoly>;
	using NonlocalMap = std::map<Monomial, DiffPoly>;

	explicit PseudoDiffOp(int eps_order = 1);

	static PseudoDiffOp identity(int eps_order);
	static PseudoDiffOp multiplication(DiffPoly const &a);
	/// Dx^k.
	static PseudoDiffOp dx(int eps_order, int k = 1);
	/// Dx^{-1}, i.e. 1 Dxi 1.
	static PseudoDiffOp dx_inverse(int eps_order);
	/// a Dx^j.
	static PseudoDiffOp local_term(DiffPoly const &a, int j);
	/// a Dxi b.
	static PseudoDiffOp nonlocal_term(DiffPoly const &a, DiffPoly const &b);

	int eps_order() const { return p_; }
	LocalMap const &local() const { return local_; }
	NonlocalMap const &nonlocal() const { return nonlocal_; }
	/// Nonlocal part as explicit (a, b) pairs.
	std::vector<std::pair<DiffPoly, DiffPoly>> nonlocal_pairs() const;

	bool is_local() const { return nonlocal_.empty(); }
	bool is_zero() const { return local_.empty() && nonlocal_.empty(); }
	/// Highest power of Dx in the local part, -1 if there is none.
	int order() const;
	DiffPoly local_coefficient(int j) const;

	void add_local(int j, DiffPoly const &a);
	void add_nonlocal(DiffPoly const &a, DiffPoly const &b);

	PseudoDiffOp &operator+=(PseudoDiffOp const &b);
	PseudoDiffOp &operator-=(PseudoDiffOp const &b);
	friend PseudoDiffOp operator+(PseudoDiffOp a, PseudoDiffOp const &b) { return a += b; }
	friend PseudoDiffOp operator-(PseudoDiffOp a, PseudoDiffOp const &b) { return a -= b; }
	PseudoDiffOp operator-() const;

	/// Left multiplication by a coefficient: (c * A)(Q) = c A(Q).
	friend PseudoDiffOp operator*(DiffPoly const &c, PseudoDiffOp const &A);
	friend PseudoDiffOp operator*(Rational const &s, PseudoDiffOp const &A);

	friend bool operator==(PseudoDiffOp const &a, PseudoDiffOp const &b);

  private:
	void check_order(DiffPoly const &a) const;

	int p_;
	LocalMap local_;
	NonlocalMap nonlocal_;
};

} // namespace apsym
