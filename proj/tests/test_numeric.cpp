#include "support.hpp"

#include "apsym/numeric.hpp"

#include <doctest.h>

#include <cmath>

using namespace testing;

namespace {

EvolutionSystem const &gsys() { return gardner().system("gardner"); }

double drift_of(char const *density, GridSpec g)
{
	auto traj = integrate_pde(gsys(), g, soliton_profile(g));
	return max_drift(monitor_functional(traj, gardner().density(density), g));
}

} // namespace

TEST_SUITE("numeric_validator")
{
	TEST_CASE("grid validation")
	{
		GridSpec g;
		g.N = 100;
		CHECK_THROWS_AS(g.validate(), Unsupported);
		g.N = 8;
		CHECK_THROWS_AS(g.validate(), Unsupported);
		g = GridSpec{};
		g.dt = 0;
		CHECK_THROWS_AS(g.validate(), Unsupported);
		g = GridSpec{};
		auto x = g.points();
		CHECK(x.front() == doctest::Approx(-20.0));
		CHECK(x[1] - x[0] == doctest::Approx(40.0 / 256));
		CHECK_THROWS_AS(integrate_pde(gsys(), g, std::vector<double>(10)), Unsupported);
	}

	TEST_CASE("zero data stays zero")
	{
		GridSpec g;
		g.T_end = 0.1;
		auto traj = integrate_pde(gsys(), g, std::vector<double>(g.N, 0.0));
		for (auto const &u : traj.profiles)
			for (double v : u)
				CHECK(v == 0.0);
	}

	TEST_CASE("soliton is stable and resolution independent")
	{
		GridSpec coarse;
		coarse.T_end = 0.5;
		GridSpec fine = coarse;
		fine.N = 512;
		fine.dt = 2.5e-5;
		auto a = integrate_pde(gsys(), coarse, soliton_profile(coarse));
		auto b = integrate_pde(gsys(), fine, soliton_profile(fine));
		REQUIRE(a.times.back() == doctest::Approx(0.5));
		double err = 0;
		for (int i = 0; i < coarse.N; ++i)
			err = std::max(err, std::abs(a.profiles.back()[i] - b.profiles.back()[2 * i]));
		CHECK(err < 1e-6);
		// The pulse travels right at speed c = 1.
		auto const &u = a.profiles.back();
		auto it = std::min_element(u.begin(), u.end());
		CHECK(coarse.points()[it - u.begin()] == doctest::Approx(0.5).epsilon(0.1));
	}

	TEST_CASE("unstable time step diverges, halving it does not")
	{
		GridSpec g;
		g.dt = 8e-4;
		try
		{
			integrate_pde(gsys(), g, soliton_profile(g));
			FAIL("expected Diverged");
		}
		catch (Diverged const &e)
		{
			CHECK(e.step() > 0);
		}
		g.dt = 2e-4;
		g.T_end = 0.2;
		CHECK_NOTHROW(integrate_pde(gsys(), g, soliton_profile(g)));
	}

	TEST_CASE("mass is conserved to rounding")
	{
		GridSpec g;
		g.epsilon = 1e-2;
		CHECK(drift_of("M", g) < 1e-6);
	}

	TEST_CASE("exactly conserved functionals sit at the noise floor")
	{
		GridSpec g;
		for (double e : {0.0, 1e-3, 1e-2})
		{
			g.epsilon = e;
			CHECK(drift_of("P1", g) < 1e-12);
		}
	}

	TEST_CASE("first-order functionals drift less for smaller eps")
	{
		GridSpec g;
		g.epsilon = 0;
		double floor = drift_of("P1", g);
		for (auto const &d : {"P4", "P5"})
		{
			CAPTURE(d);
			g.epsilon = 1e-2;
			double big = drift_of(d, g);
			g.epsilon = 1e-3;
			double small = drift_of(d, g);
			if (big > floor && small > floor)
				CHECK(small < big);
		}
	}

	TEST_CASE("grid refinement changes drift by less than a factor of ten")
	{
		GridSpec a;
		a.N = 128;
		a.T_end = 0.5;
		a.epsilon = 1e-2;
		GridSpec b = a;
		b.N = 256;
		b.dt = a.dt / 2;
		double da = drift_of("P5", a), db = drift_of("P5", b);
		CHECK(da > 0);
		CHECK(db < 10 * da);
		CHECK(da < 10 * db);
	}

	TEST_CASE("monitor rows")
	{
		GridSpec g;
		g.T_end = 0.01;
		g.store_every = 50;
		auto traj = integrate_pde(gsys(), g, soliton_profile(g));
		auto rows = monitor_functional(traj, gardner().density("M"), g);
		REQUIRE(rows.size() == 3);
		CHECK(rows[0].drift == 0.0);
		CHECK(rows[0].value == doctest::Approx(-2 * std::tanh(10.0)).epsilon(1e-9));
		CHECK(rows[2].t == doctest::Approx(0.01));
		CHECK_THROWS_AS(monitor_functional(traj, Functional{expr("u{5}^2"), ""}, g), Unsupported);
	}
}
