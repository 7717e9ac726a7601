#include "support.hpp"

#include "apsym/cli.hpp"
#include "apsym/report.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace testing;

namespace {

struct Run
{
	int code;
	std::string out;
	std::string err;
};

Run run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = run_command(args, out, err);
	return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("frontend")
{
	TEST_CASE("parse declarations")
	{
		ModelIR M = parse_model("system gardner { rhs: 6*(u + eps*u^2)*u_x - u_xxx; }\n"
		                        "operator E { 4*u*Dx + 2*u_x + 3*eps*(u*u_x + u^2*Dx) - Dx^3 }\n"
		                        "char q = u{5} - u_xxxxx;\n"
		                        "density h = eps/2*u^2;\n");
		CHECK(M.system("gardner").rhs == gardner().system("gardner").rhs);
		CHECK(M.op("E") == gardner().op("E"));
		CHECK(M.characteristic("q").is_zero());
		CHECK(M.density("h").density == expr("eps*u^2/2"));
		CHECK(M.settings.eps_order == 1);
	}

	TEST_CASE("operator expressions")
	{
		CHECK(op("u*Dx") == PseudoDiffOp::local_term(expr("u"), 1));
		CHECK(op("Dx*u") == op("u*Dx + u_x"));
		CHECK(op("u*Dxi*u_x") == PseudoDiffOp::nonlocal_term(expr("u"), expr("u_x")));
		CHECK(op("(Dx + u)^2") == compose(op("Dx + u"), op("Dx + u")));
		CHECK(op("Dx^2/2") == Rational(1, 2) * op("Dx^2"));
	}

	TEST_CASE("names and errors")
	{
		try
		{
			parse_model("char bad = u_y;");
			FAIL("expected NameError");
		}
		catch (NameError const &e)
		{
			CHECK(e.line() == 1);
			CHECK(e.column() == 12);
		}
		CHECK_THROWS_AS(parse_model("char a = Q9;"), NameError);
		CHECK_THROWS_AS(parse_model("char a = u;\nchar a = u_x;"), NameError);
		try
		{
			parse_model("char a = u +;\n");
			FAIL("expected ParseError");
		}
		catch (ParseError const &e)
		{
			CHECK(e.line() == 1);
			CHECK(e.column() == 13);
			CHECK_FALSE(e.expected().empty());
		}
		CHECK_THROWS_AS(parse_model("char a = u / u_x;"), ParseError);
		CHECK_THROWS_AS(parse_model("char a = u / 0;"), ParseError);
		CHECK_THROWS_AS(parse_model("system s { rhs: Dx; }"), ParseError);
		CHECK_THROWS_AS(parse_model("char a = (u;"), ParseError);
		CHECK_THROWS_AS(parse_model("frobnicate a = u;"), ParseError);
		CHECK_THROWS_AS(parse_model("char a = u\x01;"), ParseError);
	}

	TEST_CASE("malformed input never escapes as a non-library error (randomized)")
	{
		Gen g(501);
		std::string alphabet = "u_x*+-^/(){};= 0123Dxi eps t char operator Q";
		for (int i = 0; i < 1000; ++i)
		{
			std::string text = "char a = ";
			int n = g.uniform(1, 20);
			for (int k = 0; k < n; ++k)
				text += alphabet[g.uniform(0, static_cast<int>(alphabet.size()) - 1)];
			try
			{
				parse_model(text);
			}
			catch (Error const &)
			{
			}
		}
	}

	TEST_CASE("round trip of the fixture corpus")
	{
		for (auto const &name : builtin_model_names())
		{
			CAPTURE(name);
			ModelIR M = builtin_model(name);
			std::string printed = print_model(M);
			ModelIR back = parse_model(printed);
			CHECK(back == M);
			CHECK(print_model(back) == printed);
		}
	}

	TEST_CASE("model files match the built-in fixtures")
	{
		for (auto const &name : builtin_model_names())
		{
			std::ifstream in(std::string(APSYM_MODELS_DIR) + "/" + name + ".jf");
			REQUIRE(in);
			std::stringstream ss;
			ss << in.rdbuf();
			CHECK(ss.str() == builtin_model_text(name));
		}
	}

	TEST_CASE("canonical text")
	{
		CHECK(to_text(expr("eps*(6*u*u_x - u_xxx)")) == "eps*(6*u*u_x - u_xxx)");
		CHECK(to_text(expr("u_x^2/2 + u^3 + eps/2*u^4")) == "u^3 + 1/2*u_x^2 + 1/2*eps*u^4");
		CHECK(to_text(expr("u{7} - 3")) == "u{7} - 3");
		CHECK(to_text(DiffPoly()) == "0");
		CHECK(to_text(op("u*Dxi*u_x - Dx^2")) == "-Dx^2 + u*Dxi*u_x");
		CHECK(jet_name(4) == "u_xxxx");
		CHECK(jet_name(5) == "u{5}");
	}

	TEST_CASE("latex")
	{
		CHECK(to_latex(gardner().characteristic("Kbar1")) == "\\varepsilon(6uu_x - u_{xxx})");
		CHECK(to_latex(expr("u_x^2/2")) == "\\frac{1}{2}u_x^{2}");
		CHECK(to_latex(op("Dx^3 + u*Dxi")) == "D_x^{3} + uD_x^{-1}");
	}

	TEST_CASE("json reports")
	{
		Report rep;
		rep.command = "check-symmetry";
		rep.model_hash = model_hash(builtin_model_text("gardner"));
		rep.checks.push_back(check_symmetry(gardner().characteristic("Q3"), gardner().system("gardner"), "Q3"));
		auto j = to_json(rep);
		CHECK(j["checks"][0]["verdict"] == "pass");
		CHECK(j["checks"][0]["residual"] == "0");
		CHECK(j["eps_order"] == 1);
		CHECK(j["max_jet_order"] == 12);
		CHECK(j["model_hash"].get<std::string>().size() == 64);

		CheckReport bad = check_conservation(Functional{expr("u_x^2 + x*u^2"), "T"}, gardner().system("gardner"), "T");
		auto jb = to_json(bad);
		CHECK(jb["verdict"] == "fail");
		CHECK(jb["residual"] != "0");
	}

	TEST_CASE("command line")
	{
		auto r = run({"check-symmetry", "builtin:gardner", "--char", "Q3", "--system", "gardner"});
		CHECK(r.code == ExitPass);
		r = run({"check-symmetry", "gardner.jf", "--char", "Q3", "--system", "gardner", "--format", "json"});
		CHECK(r.code == ExitPass);
		CHECK(nlohmann::json::parse(r.out)["checks"][0]["verdict"] == "pass");
		CHECK(run({"check-symmetry", "builtin:potential_burgers", "--char", "Q4_printed"}).code == ExitFail);
		CHECK(run({"check-pair", "gardner.jf", "--op1", "D", "--op2", "E"}).code == ExitPass);
		CHECK(run({"check-claw", "builtin:gardner", "--density", "P6"}).code == ExitPass);
		CHECK(run({"noether", "builtin:gardner", "--char", "Q6", "--op", "D"}).code == ExitPass);
		CHECK(run({"noether", "builtin:gardner", "--char", "Q3", "--op", "D"}).code == ExitFail);
		CHECK(run({"check-recursion", "builtin:potential_burgers", "--op", "R2"}).code == ExitPass);
		CHECK(run({"check-recursion", "builtin:potential_burgers", "--op", "R1", "--mode", "action", "--seeds", "Q1", "Q2"}).code ==
		      ExitPass);

		r = run({"hierarchy", "gardner.jf", "--op", "R", "--seed", "Kbar1", "--steps", "2", "--dop", "D", "--format", "json"});
		CHECK(r.code == ExitPass);
		auto j = nlohmann::json::parse(r.out);
		auto flows = j["checks"][0]["certificates"]["hierarchy"]["flows"];
		CHECK(flows[1] == to_text(gardner().characteristic("Kbar2")));

		r = run({"hierarchy", "gardner.jf", "--op", "R", "--seed", "Kbar1", "--steps", "1", "--dop", "D", "--format", "latex"});
		CHECK(r.out.find("\\varepsilon(6uu_x - u_{xxx})") != std::string::npos);

		r = run({"hierarchy", "builtin:gardner", "--op", "R", "--seed", "K1", "--steps", "2", "--dop", "D", "--format", "json"});
		CHECK(r.code == ExitFail);
		CHECK(nlohmann::json::parse(r.out)["checks"][0].contains("obstruction"));
	}

	TEST_CASE("numeric validation from the command line")
	{
		auto r = run({"validate-numeric", "builtin:gardner", "--density", "M", "--epsilon", "0.01", "--t-end", "0.01",
		              "--store-every", "50", "--format", "json"});
		REQUIRE(r.code == ExitPass);
		auto j = nlohmann::json::parse(r.out);
		CHECK(j["rows"].size() == 3);
		CHECK(j["rows"][0].contains("t"));
		CHECK(j["rows"][0].contains("value"));
		CHECK(j["rows"][0]["drift"] == 0.0);
		CHECK(j["eps_order"] == 1);
		r = run({"validate-numeric", "builtin:gardner", "--density", "M", "--dt", "0.001", "--format", "json"});
		CHECK(r.code == ExitFail);
		CHECK(nlohmann::json::parse(r.out).contains("diverged_at_step"));
		CHECK(run({"validate-numeric", "builtin:gardner", "--density", "M", "--N", "100"}).code == ExitUsage);
	}

	TEST_CASE("command line errors")
	{
		CHECK(run({}).code == ExitUsage);
		CHECK(run({"check-symmetry", "builtin:gardner"}).code == ExitUsage);
		CHECK(run({"check-symmetry", "builtin:gardner", "--char", "Q3", "--bogus"}).code == ExitUsage);
		CHECK(run({"check-symmetry", "builtin:gardner", "--char", "Nope"}).code == ExitUsage);
		CHECK(run({"check-symmetry", "/nonexistent/model.jf", "--char", "Q3"}).code == ExitUsage);
		CHECK(run({"check-symmetry", "builtin:gardner", "--char", "Q3", "--format", "yaml"}).code == ExitUsage);
		CHECK(run({"hierarchy", "builtin:gardner", "--op", "R", "--seed", "Kbar1", "--steps", "9", "--dop", "D"}).code ==
		      ExitResource);

		std::string path = "frontend_bad_model.jf";
		std::ofstream(path) << "set eps_order = 1;\nchar a = u +* u_x;\n";
		auto r = run({"check-symmetry", path, "--char", "a"});
		CHECK(r.code == ExitUsage);
		CHECK(r.err.find("2:") != std::string::npos);
	}
}
