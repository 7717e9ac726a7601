#include "apsym/cli.hpp"

#include "apsym/engine.hpp"
#include "apsym/fixtures.hpp"
#include "apsym/format.hpp"
#include "apsym/hamiltonian.hpp"
#include "apsym/numeric.hpp"
#include "apsym/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

namespace apsym {

std::string load_model_text(std::string const &source)
{
	if (source.rfind("builtin:", 0) == 0)
		return std::string(builtin_model_text(source.substr(8)));
	std::ifstream in(source);
	if (in)
	{
		std::ostringstream ss;
		ss << in.rdbuf();
		return ss.str();
	}
	std::string stem = std::filesystem::path(source).stem().string();
	for (auto const &name : builtin_model_names())
		if (name == stem)
			return std::string(builtin_model_text(name));
	throw Unsupported("cannot read model file '" + source + "'");
}

namespace {

struct Common
{
	std::string model;
	std::string format = "text";
};

void add_common(CLI::App *sub, Common &c)
{
	sub->add_option("model", c.model, "model file or builtin:NAME")->required();
	sub->add_option("--format", c.format, "text | json | latex")
	    ->check(CLI::IsMember({"text", "json", "latex"}));
}

EvolutionSystem const &pick_system(ModelIR const &M, std::string const &name)
{
	if (!name.empty())
		return M.system(name);
	if (M.systems.size() != 1)
		throw Unsupported("model declares " + std::to_string(M.systems.size()) +
		                  " systems; pass --system");
	return M.systems.begin()->second;
}

CheckReport pair_report(PseudoDiffOp const &D, PseudoDiffOp const &E, std::string name)
{
	PairCheck pc = pair_check_report(D, E);
	CheckReport r;
	r.name = std::move(name);
	r.pass = pc.pass;
	r.residual = pc.residual;
	return r;
}

CheckReport noether_report(DiffPoly const &Q, PseudoDiffOp const &D, std::string const &qname)
{
	CheckReport r;
	r.name = "noether " + qname;
	try
	{
		r.functional = noether_inverse(Q, D, {}, "P(" + qname + ")");
		r.pass = true;
		r.residual = DiffPoly(Q.eps_order());
	}
	catch (NotInImage const &e)
	{
		r.residual = Q;
		if (!e.obstruction().empty())
			r.obstruction = e.obstruction().front();
		r.notes.push_back(e.what());
	}
	catch (NotVariational const &e)
	{
		r.residual = Q;
		r.notes.push_back(e.what());
	}
	return r;
}

int emit(Report const &rep, std::string const &format, std::ostream &out)
{
	out << emit_report(rep, parse_report_format(format));
	return rep.pass() ? ExitPass : ExitFail;
}

} // namespace

int run_command(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Symmetries, conservation laws and Hamiltonian structure of perturbed evolution equations"};
	app.require_subcommand(1);
	Common c;
	std::string sys_name, char_name, dens_name, op_name, op2_name, seed_name, dop_name, mode = "operator";
	std::vector<std::string> seeds;
	int steps = 1;
	GridSpec grid;
	double soliton_c = 1.0;
	bool noise_floor = false;

	auto *sym = app.add_subcommand("check-symmetry", "test a characteristic against a system");
	add_common(sym, c);
	sym->add_option("--char", char_name)->required();
	sym->add_option("--system", sys_name);

	auto *claw = app.add_subcommand("check-claw", "test a conservation law and report its flux");
	add_common(claw, c);
	claw->add_option("--density", dens_name)->required();
	claw->add_option("--system", sys_name);

	auto *noe = app.add_subcommand("noether", "conserved functional of a characteristic");
	add_common(noe, c);
	noe->add_option("--char", char_name)->required();
	noe->add_option("--op", op_name)->required();

	auto *rec = app.add_subcommand("check-recursion", "test a recursion operator");
	add_common(rec, c);
	rec->add_option("--op", op_name)->required();
	rec->add_option("--system", sys_name);
	rec->add_option("--mode", mode)->check(CLI::IsMember({"operator", "action"}));
	rec->add_option("--seeds", seeds, "seed characteristics for action mode");

	auto *pair = app.add_subcommand("check-pair", "approximately Hamiltonian pair test");
	add_common(pair, c);
	pair->add_option("--op1", op_name)->required();
	pair->add_option("--op2", op2_name)->required();

	auto *hier = app.add_subcommand("hierarchy", "generate flows and Hamiltonians by recursion");
	add_common(hier, c);
	hier->add_option("--op", op_name)->required();
	hier->add_option("--seed", seed_name)->required();
	hier->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
	hier->add_option("--dop", dop_name)->required();
	hier->add_option("--system", sys_name);

	auto *num = app.add_subcommand("validate-numeric", "integrate the system and monitor a functional");
	add_common(num, c);
	num->add_option("--system", sys_name);
	num->add_option("--density", dens_name)->required();
	num->add_option("--L", grid.L, "domain length");
	num->add_option("--N", grid.N, "grid points (power of two)");
	num->add_option("--dt", grid.dt, "time step");
	num->add_option("--t-end", grid.T_end, "final time");
	num->add_option("--epsilon", grid.epsilon, "value substituted for eps");
	num->add_option("--store-every", grid.store_every, "keep every n-th step");
	num->add_option("--soliton-c", soliton_c, "speed of the initial pulse");
	num->add_flag("--noise-floor", noise_floor, "also report the eps = 0 drift");

	std::vector<std::string> argv(args.rbegin(), args.rend());
	try
	{
		app.parse(argv);
	}
	catch (CLI::CallForHelp const &)
	{
		out << app.help();
		return ExitPass;
	}
	catch (CLI::ParseError const &e)
	{
		err << "usage error: " << e.what() << "\n";
		return ExitUsage;
	}

	try
	{
		std::string text = load_model_text(c.model);
		ModelIR M = parse_model(text);
		Report rep;
		rep.model_hash = model_hash(text);
		rep.settings = M.settings;
		std::string cmd = app.get_subcommands().front()->get_name();
		rep.command = cmd;

		if (cmd == "check-symmetry")
			rep.checks.push_back(check_symmetry(M.characteristic(char_name), pick_system(M, sys_name), char_name));
		else if (cmd == "check-claw")
			rep.checks.push_back(check_conservation(M.density(dens_name), pick_system(M, sys_name), dens_name));
		else if (cmd == "noether")
			rep.checks.push_back(noether_report(M.characteristic(char_name), M.op(op_name), char_name));
		else if (cmd == "check-recursion")
		{
			std::vector<DiffPoly> qs;
			for (auto const &s : seeds)
				qs.push_back(M.characteristic(s));
			rep.checks.push_back(check_recursion_operator(M.op(op_name), pick_system(M, sys_name),
			                                              mode == "action" ? RecursionMode::Action
			                                                               : RecursionMode::Operator,
			                                              qs, op_name));
		}
		else if (cmd == "check-pair")
		{
			auto const &D = M.op(op_name), &E = M.op(op2_name);
			auto r = pair_report(D, E, "pair " + op_name + ", " + op2_name);
			// The pair criterion assumes each operator is Hamiltonian on its own;
			// report that separately instead of folding it into the verdict.
			for (auto const &[name, A] : {std::pair{op_name, &D}, std::pair{op2_name, &E}})
			{
				PairCheck j = pair_check_report(*A, *A);
				r.notes.push_back("Jacobi identity of " + name + ": " +
				                  (j.pass ? "holds" : "fails, residual " + to_text(j.residual)));
			}
			rep.checks.push_back(std::move(r));
		}
		else if (cmd == "hierarchy")
		{
			HierarchyOptions opts;
			opts.max_jet_order = M.settings.max_jet_order;
			auto h = std::make_shared<HierarchyResult>(generate_hierarchy(
			    M.op(op_name), M.characteristic(seed_name), steps, M.op(dop_name), pick_system(M, sys_name), opts));
			rep.assumptions = h->assumptions;
			CheckReport r;
			r.name = "hierarchy " + op_name + " from " + seed_name;
			r.pass = h->pass();
			r.residual = DiffPoly(M.settings.eps_order);
			r.children = h->checks;
			if (h->stopped_at)
			{
				r.notes.push_back("stopped at step " + std::to_string(h->stopped_at->index) + ": " +
				                  h->stopped_at->reason);
				if (!h->stopped_at->obstruction.empty())
					r.obstruction = h->stopped_at->obstruction.front();
			}
			r.hierarchy = h;
			rep.checks.push_back(std::move(r));
		}
		else if (cmd == "validate-numeric")
			return [&] {
				auto const &sys = pick_system(M, sys_name);
				auto const &T = M.density(dens_name);
				auto run = [&](double eps) {
					GridSpec g = grid;
					g.epsilon = eps;
					auto traj = integrate_pde(sys, g, soliton_profile(g, soliton_c));
					return monitor_functional(traj, T, g);
				};
				nlohmann::json j;
				j["command"] = cmd;
				j["model_hash"] = rep.model_hash;
				j["eps_order"] = M.settings.eps_order;
				j["max_jet_order"] = M.settings.max_jet_order;
				j["grid"] = {{"L", grid.L}, {"N", grid.N}, {"dt", grid.dt}, {"T_end", grid.T_end},
				             {"epsilon", grid.epsilon}};
				std::vector<DriftRow> rows;
				try
				{
					rows = run(grid.epsilon);
				}
				catch (Diverged const &e)
				{
					j["verdict"] = "fail";
					j["error"] = e.what();
					j["diverged_at_step"] = e.step();
					if (c.format == "json")
						out << j.dump(2) << "\n";
					else
						out << "[FAIL] " << dens_name << ": " << e.what() << "\n";
					return int(ExitFail);
				}
				j["verdict"] = "pass";
				j["max_drift"] = max_drift(rows);
				j["rows"] = nlohmann::json::array();
				for (auto const &r : rows)
					j["rows"].push_back({{"t", r.t}, {"value", r.value}, {"drift", r.drift}});
				std::optional<double> floor;
				if (noise_floor)
				{
					floor = max_drift(run(0.0));
					j["noise_floor"] = *floor;
				}
				if (c.format == "json")
					out << j.dump(2) << "\n";
				else
				{
					out << cmd << "  (eps = " << grid.epsilon << ", N = " << grid.N << ", dt = " << grid.dt
					    << ", T_end = " << grid.T_end << ", model " << rep.model_hash.substr(0, 12) << ")\n";
					for (auto const &r : rows)
						out << "t = " << r.t << "  value = " << r.value << "  drift = " << r.drift << "\n";
					out << "[pass] " << dens_name << " max drift " << max_drift(rows) << "\n";
					if (floor)
						out << "noise floor (eps = 0): " << *floor << "\n";
				}
				return int(ExitPass);
			}();
		return emit(rep, c.format, out);
	}
	catch (ParseError const &e)
	{
		err << "parse error at " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
		return ExitUsage;
	}
	catch (NameError const &e)
	{
		err << "name error: " << e.what() << "\n";
		return ExitUsage;
	}
	catch (ResourceError const &e)
	{
		err << "resource limit: " << e.what() << "\n";
		return ExitResource;
	}
	catch (Unsupported const &e)
	{
		err << "unsupported: " << e.what() << "\n";
		return ExitUsage;
	}
	catch (Error const &e)
	{
		err << "check failed: " << e.what() << "\n";
		return ExitFail;
	}
}

} // namespace apsym
