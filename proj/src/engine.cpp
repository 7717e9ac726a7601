#include "apsym/engine.hpp"

#include "apsym/errors.hpp"
#include "apsym/operator_algebra.hpp"

#include <map>

namespace apsym {

bool residual_is_zero(Residual const &r)
{
	return std::visit([](auto const &v) { return v.is_zero(); }, r);
}

namespace {

void require_scalar(EvolutionSystem const &sys)
{
	if (sys.components() != 1)
		throw Unsupported("engine checks are implemented for scalar evolution equations");
}

/// Monomials in x, t and u_0..u_order with bounded degrees.
std::vector<Monomial> ansatz_monomials(int order, int degree, int x_max, int t_max)
{
	std::vector<Monomial> jets_only;
	std::vector<int> exps(order + 1, 0);
	// Enumerate exponent vectors with total degree <= degree.
	auto rec = [&](auto &&self, int k, int left) -> void {
		if (k > order)
		{
			Monomial m;
			for (int j = 0; j <= order; ++j)
				if (exps[j] > 0)
					m.jets.push_back({{0, j}, exps[j]});
			jets_only.push_back(std::move(m));
			return;
		}
		for (int e = 0; e <= left; ++e)
		{
			exps[k] = e;
			self(self, k + 1, left - e);
		}
		exps[k] = 0;
	};
	rec(rec, 0, degree);

	std::vector<Monomial> out;
	for (int a = 0; a <= x_max; ++a)
		for (int b = 0; b <= t_max; ++b)
			for (auto m : jets_only)
			{
				m.x_exp = a;
				m.t_exp = b;
				out.push_back(std::move(m));
			}
	return out;
}

/// Sparse row-echelon solver over Q; free unknowns are set to zero.
class LinearSystem
{
  public:
	using Row = std::map<int, Rational>;

	/// Returns false when the row is inconsistent with the rows added so far.
	bool add(Row row, Rational rhs)
	{
		for (;;)
		{
			auto hit = row.end();
			for (auto it = row.begin(); it != row.end(); ++it)
				if (pivots_.count(it->first))
				{
					hit = it;
					break;
				}
			if (hit == row.end())
				break;
			auto const &[prow, prhs] = pivots_.at(hit->first);
			Rational f = hit->second;
			for (auto const &[c, v] : prow)
			{
				auto &slot = row[c];
				slot -= f * v;
				if (sgn(slot) == 0)
					row.erase(c);
			}
			rhs -= f * prhs;
		}
		if (row.empty())
			return sgn(rhs) == 0;
		int col = row.begin()->first;
		Rational inv = 1 / row.begin()->second;
		for (auto &[c, v] : row)
			v *= inv;
		rhs *= inv;
		pivots_.emplace(col, std::make_pair(std::move(row), std::move(rhs)));
		return true;
	}

	std::map<int, Rational> solve() const
	{
		std::map<int, Rational> x;
		for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it)
		{
			auto const &[row, rhs] = it->second;
			Rational v = rhs;
			for (auto const &[c, a] : row)
				if (c != it->first)
					if (auto found = x.find(c); found != x.end())
						v -= a * found->second;
			if (sgn(v) != 0)
				x[it->first] = v;
		}
		return x;
	}

  private:
	std::map<int, std::pair<Row, Rational>> pivots_;
};

} // namespace

CheckReport check_symmetry(DiffPoly const &Q, EvolutionSystem const &sys, std::string name)
{
	require_scalar(sys);
	DiffPoly const &K = sys.rhs.front();
	CheckReport r;
	r.name = std::move(name);
	DiffPoly res = partial_t(Q) + prolong_apply(K, Q) - prolong_apply(Q, K);
	r.pass = res.is_zero();
	r.residual = std::move(res);
	return r;
}

CheckReport check_conservation(Functional const &T, EvolutionSystem const &sys, std::string name)
{
	require_scalar(sys);
	CheckReport r;
	r.name = name.empty() ? T.name : std::move(name);
	DiffPoly rate = dt_total(T.density, sys);
	DiffPoly res = euler(rate).front();
	r.pass = res.is_zero();
	r.residual = std::move(res);
	if (r.pass)
		r.flux = -integrate_x(rate);
	r.functional = T;
	return r;
}

DiffPoly solve_preimage(PseudoDiffOp const &D, DiffPoly const &Q, AnsatzBounds bounds)
{
	int p = Q.eps_order();
	if (D == PseudoDiffOp::dx(p))
	{
		try
		{
			return integrate_x(Q);
		}
		catch (NotExact const &e)
		{
			throw NotInImage("characteristic is not a total x-derivative", e.obstruction());
		}
	}
	if (!D.is_local())
		throw Unsupported("preimage search is implemented for Dx and local operators");

	int order = bounds.max_order.value_or(std::max(Q.max_order(), 0));
	int degree = bounds.max_degree.value_or(Q.u_degree() + 1);
	auto monos = ansatz_monomials(order, degree, Q.x_degree(), Q.t_degree());

	// Unknown (m, l) is the coefficient of eps^l * monos[m].
	std::vector<DiffPoly> images;
	images.reserve(monos.size());
	for (auto const &m : monos)
		images.push_back(apply(D, DiffPoly::monomial(m, EpsPoly(Rational(1), p))));

	std::map<std::pair<Monomial, int>, LinearSystem::Row> rows;
	for (size_t m = 0; m < monos.size(); ++m)
		for (auto const &[n, c] : images[m].terms())
			for (int k = 0; k <= p; ++k)
				if (sgn(c[k]) != 0)
					for (int l = 0; k + l <= p; ++l)
						rows[{n, k + l}][static_cast<int>(m * (p + 1) + l)] += c[k];
	for (auto const &[n, c] : Q.terms())
		for (int k = 0; k <= p; ++k)
			if (sgn(c[k]) != 0)
				rows.try_emplace({n, k});

	LinearSystem sys;
	for (auto &[key, row] : rows)
	{
		Rational rhs = Q.coefficient(key.first)[key.second];
		for (auto it = row.begin(); it != row.end();)
			it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
		if (!sys.add(std::move(row), std::move(rhs)))
			throw NotInImage("no preimage within the ansatz bounds (order <= " +
			                     std::to_string(order) + ", degree <= " + std::to_string(degree) + ")",
			                 {});
	}

	DiffPoly g = Q.zero();
	for (auto const &[col, v] : sys.solve())
	{
		EpsPoly c(p);
		c[col % (p + 1)] = v;
		g.add_term(monos[col / (p + 1)], c);
	}
	return g;
}

Functional noether_inverse(DiffPoly const &Q, PseudoDiffOp const &D, AnsatzBounds bounds,
                           std::string name)
{
	DiffPoly g = solve_preimage(D, Q, bounds);
	if (!helmholtz_selfadjoint(g))
		throw NotVariational("preimage of the characteristic is not a variational derivative");
	return reconstruct_density(g, std::move(name));
}

CheckReport check_recursion_operator(PseudoDiffOp const &R, EvolutionSystem const &sys,
                                     RecursionMode mode, std::vector<DiffPoly> const &seeds,
                                     std::string name)
{
	require_scalar(sys);
	CheckReport r;
	r.name = std::move(name);
	if (mode == RecursionMode::Operator)
	{
		PseudoDiffOp res;
		try
		{
			res = op_time_derivative(R, sys) - commutator(frechet(sys.rhs.front()), R);
		}
		catch (ClosureError const &e)
		{
			throw ClosureError(std::string(e.what()) + "; use action mode with seed symmetries");
		}
		r.pass = res.is_zero();
		r.residual = std::move(res);
		r.notes.push_back("mode: operator");
		return r;
	}

	if (seeds.empty())
		throw Unsupported("action mode needs at least one seed symmetry");
	r.notes.push_back("mode: action");
	r.pass = true;
	r.residual = sys.rhs.front().zero();
	for (size_t i = 0; i < seeds.size(); ++i)
	{
		auto seed_check = check_symmetry(seeds[i], sys, "seed " + std::to_string(i));
		auto image_check = check_symmetry(apply(R, seeds[i]), sys, "R(seed " + std::to_string(i) + ")");
		if (!seed_check.pass)
			image_check.notes.push_back("seed is not itself a symmetry");
		bool ok = seed_check.pass && image_check.pass;
		if (!ok && r.pass)
			r.residual = seed_check.pass ? image_check.residual : seed_check.residual;
		r.pass = r.pass && ok;
		r.children.push_back(std::move(seed_check));
		r.children.push_back(std::move(image_check));
	}
	return r;
}

bool HierarchyResult::pass() const
{
	if (stopped_at)
		return false;
	for (auto const &c : checks)
		if (!c.pass)
			return false;
	return true;
}

HierarchyResult generate_hierarchy(PseudoDiffOp const &R, DiffPoly const &seed, int steps,
                                   PseudoDiffOp const &D, EvolutionSystem const &sys,
                                   HierarchyOptions const &options)
{
	require_scalar(sys);
	HierarchyResult h;
	h.assumptions.push_back("first Hamiltonian operator is nondegenerate (assumed, not checked)");

	auto check_cap = [&](DiffPoly const &K) {
		if (K.max_order() > options.max_jet_order)
			throw ResourceError("flow exceeds the jet-order cap of " +
			                    std::to_string(options.max_jet_order));
	};

	check_cap(seed);
	DiffPoly K = seed;
	for (int i = 0; i <= steps; ++i)
	{
		if (i > 0)
		{
			try
			{
				K = apply(R, h.flows.back());
			}
			catch (NotExact const &e)
			{
				h.stopped_at = HierarchyStop{i, "recursion operator cannot be applied: flow " +
				                                    std::to_string(i - 1) +
				                                    " is not a total x-derivative",
				                             e.obstruction()};
				break;
			}
			check_cap(K);
		}
		h.flows.push_back(K);
		try
		{
			h.functionals.push_back(noether_inverse(K, D, options.bounds, "H" + std::to_string(i)));
		}
		catch (NotInImage const &e)
		{
			h.functionals.push_back(std::nullopt);
			if (i == steps)
				h.stopped_at = HierarchyStop{i, std::string("no Hamiltonian functional: ") + e.what(),
				                             e.obstruction()};
		}
		catch (NotVariational const &e)
		{
			h.functionals.push_back(std::nullopt);
			if (i == steps)
				h.stopped_at = HierarchyStop{i, std::string("no Hamiltonian functional: ") + e.what(), {}};
		}
	}

	size_t n = h.flows.size();
	for (size_t i = 0; i < n; ++i)
		h.checks.push_back(check_symmetry(h.flows[i], sys, "symmetry K" + std::to_string(i)));
	for (size_t i = 0; i < n; ++i)
		if (h.functionals[i])
		{
			auto c = check_conservation(*h.functionals[i], sys, "conservation H" + std::to_string(i));
			auto image = ham_vector_field(D, *h.functionals[i]);
			if (image != h.flows[i])
			{
				c.pass = false;
				c.notes.push_back("D E(H) does not reproduce the flow");
			}
			h.checks.push_back(std::move(c));
		}
	for (size_t i = 0; i < n; ++i)
		for (size_t j = i + 1; j < n; ++j)
			h.checks.push_back(check_symmetry(h.flows[j], EvolutionSystem(h.flows[i]),
			                                  "commute K" + std::to_string(i) + " K" + std::to_string(j)));

	std::optional<PseudoDiffOp> E = options.second_operator;
	if (!E)
	{
		try
		{
			E = compose(R, D);
		}
		catch (ClosureError const &)
		{
			h.assumptions.push_back("R o D does not close; involution checked for D only");
		}
	}
	for (size_t i = 0; i < n; ++i)
		for (size_t j = i; j < n; ++j)
		{
			if (!h.functionals[i] || !h.functionals[j])
				continue;
			auto const &Hi = *h.functionals[i];
			auto const &Hj = *h.functionals[j];
			std::string tag = "H" + std::to_string(i) + " H" + std::to_string(j);
			for (auto const &[label, op] :
			     std::vector<std::pair<std::string, PseudoDiffOp const *>>{{"D", &D}, {"E", E ? &*E : nullptr}})
			{
				if (!op)
					continue;
				CheckReport c;
				c.name = "involution " + label + " " + tag;
				try
				{
					DiffPoly res = euler(poisson_bracket(Hi, Hj, *op).density).front();
					c.pass = res.is_zero();
					c.residual = std::move(res);
				}
				catch (NotExact const &e)
				{
					c.pass = false;
					c.residual = e.obstruction().front();
					c.notes.push_back("bracket not defined: operator image is not integrable");
				}
				h.checks.push_back(std::move(c));
			}
		}
	return h;
}

} // namespace apsym
