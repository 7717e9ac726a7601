#pragma once

#include "apsym/diff_poly.hpp"
#include "apsym/pseudo_diff_op.hpp"

#include <map>
#include <vector>

namespace apsym {

/// theta-linear expression sum_k c_k theta_k (the image D theta of an operator).
using ThetaForm = std::map<int, DiffPoly>;

/// D theta for a local operator D.
ThetaForm theta_image(PseudoDiffOp const &D);
ThetaForm dx_total(ThetaForm const &w);

/**
 * Integrand of a functional multi-vector: sum f * theta_{k1} ^ ... ^ theta_{kg}.
 * Wedge factors are stored with strictly increasing jet order; the Koszul
 * sign of sorting is absorbed into f and repeated orders vanish.
 */
class MultiVector
{
  public:
	using Key = std::vector<int>;

	MultiVector(int grade, int eps_order);

	int grade() const { return grade_; }
	int eps_order() const { return p_; }
	std::map<Key, DiffPoly> const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	/// Adds f * theta_{orders[0]} ^ theta_{orders[1]} ^ ... in any order.
	void add(DiffPoly const &f, std::vector<int> orders);

	MultiVector &operator+=(MultiVector const &b);
	friend MultiVector operator+(MultiVector a, MultiVector const &b) { return a += b; }
	friend bool operator==(MultiVector const &a, MultiVector const &b);

  private:
	int grade_;
	int p_;
	std::map<Key, DiffPoly> terms_;
};

/// w ^ V with the one-form placed first.
MultiVector wedge(ThetaForm const &w, MultiVector const &V);

/// Total x-derivative acting on coefficients and on each theta factor.
MultiVector dx_total(MultiVector const &V);

/// Graded Euler operator with respect to theta (left derivatives).
/// The integral of V vanishes modulo total derivatives iff this is zero.
MultiVector euler_theta(MultiVector const &V);

/// Theta_D = 1/2 int theta ^ D theta for a local operator D.
MultiVector bivector(PseudoDiffOp const &D);

/// pr v_{w}(V): the evolutionary direction w = D theta acting on the
/// u-dependence of the coefficients of V.
MultiVector prolong(ThetaForm const &w, MultiVector const &V);

} // namespace apsym
