// One line per acceptance criterion; exit status is nonzero if any fails.

#include "apsym/engine.hpp"
#include "apsym/fixtures.hpp"
#include "apsym/hamiltonian.hpp"
#include "apsym/model.hpp"
#include "apsym/numeric.hpp"
#include "apsym/operator_algebra.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace apsym;

namespace {

ModelIR const G = builtin_model("gardner");
ModelIR const B = builtin_model("potential_burgers");

DiffPoly expr(std::string const &text)
{
	return parse_model("char e = " + text + ";").characteristic("e");
}

PseudoDiffOp op(std::string const &text)
{
	return parse_model("operator e { " + text + " }").op("e");
}

EvolutionSystem const &gsys() { return G.system("gardner"); }
EvolutionSystem const &bsys() { return B.system("potential_burgers"); }

/// Returns an empty string on success, otherwise the reason.
using Criterion = std::function<std::string()>;

#define EXPECT(cond)                                                                                                   \
	do                                                                                                                 \
	{                                                                                                                  \
		if (!(cond))                                                                                                   \
			return std::string("failed: ") + #cond;                                                                    \
	} while (0)

std::string c1()
{
	DiffPoly K = gsys().rhs.front();
	DiffPoly dH = euler(expr("u^3 + eps/2*u^4 + u_x^2/2")).front();
	EXPECT(dH == expr("3*u^2 + 2*eps*u^3 - u_xx"));
	EXPECT(dx_total(dH) == K);
	EXPECT(apply(G.op("E"), expr("u")) == K);
	return {};
}

std::string c2()
{
	for (int i = 1; i <= 7; ++i)
		EXPECT(check_symmetry(G.characteristic("Q" + std::to_string(i)), gsys()).pass);
	for (int i = 1; i <= 12; ++i)
		EXPECT(check_symmetry(B.characteristic("Q" + std::to_string(i)), bsys()).pass);
	return {};
}

std::string c3()
{
	for (int i : {1, 2, 4, 5, 6})
	{
		std::string n = std::to_string(i);
		Functional F = noether_inverse(G.characteristic("Q" + n), G.op("D"));
		EXPECT(equivalent(F, G.density("P" + n)));
		EXPECT(check_conservation(F, gsys()).pass);
	}
	return {};
}

std::string c4()
{
	for (int i : {2, 4, 5, 7})
	{
		std::string n = std::to_string(i);
		DiffPoly Q = G.characteristic("Q" + n);
		DiffPoly g = solve_preimage(G.op("E"), Q);
		DiffPoly printed = euler(G.density("Pt" + n).density).front();
		EXPECT(g == printed);
		EXPECT(apply(G.op("E"), printed) == Q);
		EXPECT(equivalent(noether_inverse(Q, G.op("E")), G.density("Pt" + n)));
	}
	return {};
}

std::string c5()
{
	DiffPoly Q = ham_vector_field(G.op("E"), G.density("P5"));
	EXPECT(Q == expr("eps*(u{5} - 10*u*u_xxx - 20*u_x*u_xx + 30*u^2*u_x)"));
	EXPECT(equivalent(noether_inverse(Q, G.op("D")).density, expr("eps/2*(u_xx^2 - 5*u^2*u_xx + 5*u^4)")));
	return {};
}

std::string c6()
{
	PseudoDiffOp DK = frechet(bsys().rhs.front());
	EXPECT(commutator(DK, B.op("R1")) == op("eps*u_xxx"));
	EXPECT(op_time_derivative(B.op("R1"), bsys()) == op("eps*u_xxx"));
	for (auto const &R : {"R1", "R2", "epsR1"})
		EXPECT(check_recursion_operator(B.op(R), bsys(), RecursionMode::Operator).pass);
	EXPECT(apply(B.op("R1"), B.characteristic("Q12")) ==
	       expr("eps*((x^2 + 6*t)*u_x + 2*x*(u + 2*t*u_xx) + 4*t^2*u_xxx)"));
	return {};
}

std::string c7()
{
	EXPECT(pair_check(G.op("D"), G.op("E")));
	return {};
}

std::string c8()
{
	HierarchyResult h = generate_hierarchy(G.op("R"), G.characteristic("Kbar1"), 2, G.op("D"), gsys());
	EXPECT(h.flows.size() == 3);
	EXPECT(h.flows[1] == expr("eps*(u{5} - 10*u*u_xxx - 20*u_x*u_xx + 30*u^2*u_x)"));
	EXPECT(h.flows[2] == expr("eps*(-u{7} + 14*u*u{5} + 42*u_x*u_xxxx + 70*(u_xx*u_xxx - u^2*u_xxx + 2*u^3*u_x - "
	                          "4*u*u_x*u_xx - u_x^3))"));
	EXPECT(h.functionals[1] && equivalent(h.functionals[1]->density, expr("eps/2*(u_xx^2 - 5*u^2*u_xx + 5*u^4)")));
	EXPECT(h.functionals[2] &&
	       equivalent(h.functionals[2]->density, expr("7*eps*(u_xxx^2/14 + u*u_xx^2 + 5*u^2*u_x^2 + u^5)")));
	for (auto const &K : h.flows)
		EXPECT(check_symmetry(K, gsys()).pass);
	PseudoDiffOp E = G.op("E");
	for (size_t i = 0; i < h.functionals.size(); ++i)
		for (size_t j = 0; j < h.functionals.size(); ++j)
		{
			EXPECT(in_involution(*h.functionals[i], *h.functionals[j], G.op("D")));
			EXPECT(in_involution(*h.functionals[i], *h.functionals[j], E));
		}
	EXPECT(h.pass());
	return {};
}

std::string c9()
{
	HierarchyResult h = generate_hierarchy(G.op("R"), gsys().rhs.front(), 2, G.op("D"), gsys());
	EXPECT(h.flows.size() == 2);
	EXPECT(h.flows[1].eps_part(1) == expr("55*u^3*u_x - 39*u*u_x*u_xx - 9*u^2*u_xxx - 12*u_x^3"));
	EXPECT(h.flows[1].eps_part(0) == expr("u{5} - 10*u*u_xxx - 20*u_x*u_xx + 30*u^2*u_x"));
	EXPECT(h.stopped_at && h.stopped_at->index == 2);
	EXPECT(!h.stopped_at->obstruction.empty() && !h.stopped_at->obstruction.front().is_zero());
	try
	{
		apply(G.op("R"), h.flows[1]);
		return "apply(R, K2) unexpectedly succeeded";
	}
	catch (NotExact const &)
	{
	}
	return {};
}

std::string c10()
{
	std::mt19937 rng(20261019);
	auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
	auto rational = [&] { return make_rational(pick(1, 9) * (pick(0, 1) ? 1 : -1), pick(1, 4)); };
	auto poly = [&](int order, int degree, bool xt) {
		DiffPoly P(1);
		for (int n = pick(1, 4); n > 0; --n)
		{
			Monomial m;
			if (xt)
			{
				m.x_exp = pick(0, 3) == 0 ? 1 : 0;
				m.t_exp = pick(0, 3) == 0 ? 1 : 0;
			}
			for (int d = pick(0, degree); d > 0; --d)
				m = m * Monomial::jet(JetVar{0, pick(0, order)});
			EpsPoly c(1);
			c[0] = pick(0, 2) ? rational() : Rational(0);
			c[1] = pick(0, 1) ? rational() : Rational(0);
			P.add_term(m, c);
		}
		return P;
	};
	auto local = [&] {
		PseudoDiffOp A(1);
		for (int n = pick(1, 3); n > 0; --n)
			A.add_local(pick(0, 3), poly(2, 2, true));
		return A;
	};
	auto pseudo = [&] {
		PseudoDiffOp A = local();
		for (int n = pick(0, 2); n > 0; --n)
			A.add_nonlocal(poly(2, 2, true), poly(2, 1, false));
		return A;
	};
	int const cases = 1000;
	int integrated = 0;
	for (int i = 0; i < cases; ++i)
	{
		DiffPoly R = poly(4, 3, true);
		EXPECT(euler(dx_total(R)).front().is_zero());
		DiffPoly P = poly(3, 3, true) + dx_total(R);
		try
		{
			DiffPoly S = integrate_x(P);
			EXPECT(dx_total(S) == P);
			++integrated;
		}
		catch (NotExact const &)
		{
		}
		DiffPoly S = integrate_x(dx_total(R));
		EXPECT(dx_total(S) == dx_total(R));

		PseudoDiffOp A = pseudo();
		EXPECT(adjoint(adjoint(A)) == A);

		PseudoDiffOp L = local(), M = pick(0, 1) ? pseudo() : local();
		if (pick(0, 1))
			std::swap(L, M);
		EXPECT(adjoint(compose(L, M)) == compose(adjoint(M), adjoint(L)));

		DiffPoly F = poly(3, 3, true), Q = poly(3, 3, true);
		EXPECT(prolong_apply(Q, F) == apply(frechet(F), Q));

		PseudoDiffOp X = local(), Y = local(), Z = local();
		EXPECT((commutator(commutator(X, Y), Z) + commutator(commutator(Y, Z), X) + commutator(commutator(Z, X), Y))
		           .is_zero());
	}
	EXPECT(integrated > 0);
	return {};
}

std::string c11()
{
	GridSpec g;
	auto drift = [&](char const *density, double eps) {
		GridSpec run = g;
		run.epsilon = eps;
		auto traj = integrate_pde(gsys(), run, soliton_profile(run));
		return max_drift(monitor_functional(traj, G.density(density), run));
	};
	double floor = drift("P1", 0.0);
	double big = drift("P5", 1e-2);
	double small = drift("P5", 1e-3);
	double mass = drift("M", 1e-2);
	std::printf("      noise floor %.3e, P5 drift %.3e (eps=1e-2) vs %.3e (eps=1e-3), mass drift %.3e\n", floor, big,
	            small, mass);
	EXPECT(big > floor && small > floor);
	EXPECT(small < big);
	EXPECT(mass < 1e-6);
	return {};
}

} // namespace

int main()
{
	std::pair<char const *, Criterion> criteria[] = {
	    {"1  Gardner Hamiltonian forms", c1},
	    {"2  symmetry characteristics (Gardner Q1-Q7, potential Burgers Q1-Q12)", c2},
	    {"3  Noether inverse under Dx gives P1, P2, P4, P5, P6", c3},
	    {"4  preimages under the second operator give the listed functionals", c4},
	    {"5  Hamiltonian vector field of P5 and its Dx functional", c5},
	    {"6  potential Burgers recursion operators", c6},
	    {"7  Dx and E form an approximately Hamiltonian pair", c7},
	    {"8  barred Gardner hierarchy", c8},
	    {"9  unbarred Gardner hierarchy stops with an obstruction", c9},
	    {"10 randomized property suites", c10},
	    {"11 numeric drift scaling and mass conservation", c11},
	};
	int failures = 0;
	for (auto const &[name, run] : criteria)
	{
		auto start = std::chrono::steady_clock::now();
		std::string why;
		try
		{
			why = run();
		}
		catch (std::exception const &e)
		{
			why = std::string("exception: ") + e.what();
		}
		double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		std::printf("%s  criterion %s  (%.2fs)%s%s\n", why.empty() ? "PASS" : "FAIL", name, secs,
		            why.empty() ? "" : "  ", why.c_str());
		failures += !why.empty();
	}
	std::printf("%d of %zu criteria passed\n", int(std::size(criteria)) - failures, std::size(criteria));
	return failures == 0 ? 0 : 1;
}
