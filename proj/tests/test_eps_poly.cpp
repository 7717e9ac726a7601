#include "support.hpp"

#include <doctest.h>

using namespace testing;

namespace {

EpsPoly ep(long a, long b, int p = 1)
{
	EpsPoly r(p);
	r[0] = a;
	if (p >= 1)
		r[1] = b;
	return r;
}

} // namespace

TEST_SUITE("coefficient_ring")
{
	TEST_CASE("rationals are canonical")
	{
		Rational a = make_rational(6, -4);
		CHECK(a.get_num() == -3);
		CHECK(a.get_den() == 2);
		CHECK(make_rational(0, 7).get_den() == 1);
	}

	TEST_CASE("truncated products")
	{
		CHECK(ep(1, 1) * ep(1, -1) == ep(1, 0));
		CHECK(EpsPoly::eps(1) * EpsPoly::eps(1) == EpsPoly(1));
		CHECK(ep(2, 3) * ep(4, 5) == ep(8, 22));
		CHECK((ep(2, 3) * ep(4, 5)).to_string() == "8 + 22*eps");
	}

	TEST_CASE("truncate")
	{
		CHECK(truncate(ep(8, 22), 0) == EpsPoly(Rational(8), 0));
		CHECK(truncate(EpsPoly::eps(1), 1) == EpsPoly::eps(1));
		CHECK(truncate(ep(3, 0), 0) == EpsPoly(Rational(3), 0));
		CHECK_THROWS_AS(truncate(ep(1, 1), 2), OrderMismatch);
	}

	TEST_CASE("mixed orders are rejected")
	{
		CHECK_THROWS_AS(EpsPoly(1) + EpsPoly(2), OrderMismatch);
		CHECK_THROWS_AS(EpsPoly(1) * EpsPoly(0), OrderMismatch);
		CHECK_THROWS_AS((void)(EpsPoly(1) == EpsPoly(2)), OrderMismatch);
	}

	TEST_CASE("valuation")
	{
		CHECK(EpsPoly(2).valuation() == -1);
		CHECK(EpsPoly::eps(2).valuation() == 1);
		CHECK(ep(1, 1).valuation() == 0);
	}

	TEST_CASE("ring axioms, truncation homomorphism, nilpotent eps")
	{
		Gen g(11);
		for (int i = 0; i < 1000; ++i)
		{
			int p = g.uniform(0, 3);
			EpsPoly a = g.coefficient(p), b = g.coefficient(p), c = g.coefficient(p);
			REQUIRE(a * b == b * a);
			REQUIRE((a * b) * c == a * (b * c));
			REQUIRE(a * (b + c) == a * b + a * c);
			REQUIRE((a + b) - b == a);
			REQUIRE(truncate(a * b, 0) == truncate(a, 0) * truncate(b, 0));
			EpsPoly e = a;
			for (int k = 0; k <= p; ++k)
				e *= EpsPoly::eps(p);
			REQUIRE(e.is_zero());
		}
	}
}
