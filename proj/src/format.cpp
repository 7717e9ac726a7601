#include "apsym/format.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace apsym {

namespace {

struct Style
{
	bool latex = false;
};

std::string derivative_suffix(int order, bool latex)
{
	if (order == 0)
		return "";
	if (latex)
	{
		std::string xs(order, 'x');
		return order == 1 ? "_x" : "_{" + xs + "}";
	}
	if (order <= 4)
		return "_" + std::string(order, 'x');
	return "{" + std::to_string(order) + "}";
}

std::string base_name(int component, int components)
{
	if (components == 1)
		return "u";
	return "u" + std::to_string(component);
}

std::string power(std::string const &base, int e, Style s)
{
	if (e == 1)
		return base;
	if (s.latex)
		return base + "^{" + std::to_string(e) + "}";
	return base + "^" + std::to_string(e);
}

std::string monomial_str(Monomial const &m, int components, Style s)
{
	std::vector<std::string> f;
	if (m.x_exp > 0)
		f.push_back(power("x", m.x_exp, s));
	if (m.t_exp > 0)
		f.push_back(power("t", m.t_exp, s));
	for (auto const &[v, e] : m.jets)
		f.push_back(power(base_name(v.component, components) + derivative_suffix(v.order, s.latex), e, s));
	std::string out;
	for (size_t i = 0; i < f.size(); ++i)
	{
		if (i > 0 && !s.latex)
			out += "*";
		out += f[i];
	}
	return out;
}

std::string rational_str(Rational const &c, Style s)
{
	if (s.latex && c.get_den() != 1)
		return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
	return c.get_str();
}

std::string eps_str(int k, Style s)
{
	std::string e = s.latex ? "\\varepsilon" : "eps";
	if (k == 1)
		return e;
	return s.latex ? e + "^{" + std::to_string(k) + "}" : e + "^" + std::to_string(k);
}

/// |c| * extra * mono, without sign.
std::string term_body(Rational const &c, std::string const &extra, std::string const &mono, Style s)
{
	Rational a = abs(c);
	std::vector<std::string> parts;
	if (a != 1 || (extra.empty() && mono.empty()))
		parts.push_back(rational_str(a, s));
	if (!extra.empty())
		parts.push_back(extra);
	if (!mono.empty())
		parts.push_back(mono);
	std::string out;
	for (size_t i = 0; i < parts.size(); ++i)
	{
		if (i > 0)
		{
			if (!s.latex)
				out += "*";
			else if (parts[i - 1].rfind("\\varepsilon", 0) == 0 && parts[i][0] != '^')
				out += " ";
		}
		out += parts[i];
	}
	return out;
}

/// Display order: higher u-degree first, then jets, then x and t powers.
bool display_less(Monomial const &a, Monomial const &b)
{
	if (a.u_degree() != b.u_degree())
		return a.u_degree() > b.u_degree();
	if (a.jets != b.jets)
		return a.jets < b.jets;
	if (a.x_exp != b.x_exp)
		return a.x_exp < b.x_exp;
	return a.t_exp < b.t_exp;
}

using Group = std::vector<std::pair<Monomial, Rational>>;

std::vector<std::pair<int, Group>> eps_groups(DiffPoly const &P)
{
	std::vector<std::pair<int, Group>> out;
	for (int k = 0; k <= P.eps_order(); ++k)
	{
		Group g;
		for (auto const &[m, c] : P.terms())
			if (sgn(c[k]) != 0)
				g.emplace_back(m, c[k]);
		std::sort(g.begin(), g.end(), [](auto const &a, auto const &b) { return display_less(a.first, b.first); });
		if (!g.empty())
			out.emplace_back(k, std::move(g));
	}
	return out;
}

/// Joins signed items: each is (negative?, body).
std::string join_signed(std::vector<std::pair<bool, std::string>> const &items)
{
	std::string out;
	for (size_t i = 0; i < items.size(); ++i)
	{
		auto const &[neg, body] = items[i];
		if (i == 0)
			out += neg ? "-" + body : body;
		else
			out += (neg ? " - " : " + ") + body;
	}
	return out.empty() ? "0" : out;
}

std::vector<std::pair<bool, std::string>> signed_items(DiffPoly const &P, Style s)
{
	std::vector<std::pair<bool, std::string>> items;
	for (auto const &[k, g] : eps_groups(P))
	{
		if (k == 0)
		{
			for (auto const &[m, c] : g)
				items.emplace_back(sgn(c) < 0, term_body(c, "", monomial_str(m, P.components(), s), s));
			continue;
		}
		if (g.size() == 1)
		{
			auto const &[m, c] = g.front();
			items.emplace_back(sgn(c) < 0, term_body(c, eps_str(k, s), monomial_str(m, P.components(), s), s));
			continue;
		}
		std::vector<std::pair<bool, std::string>> inner;
		for (auto const &[m, c] : g)
			inner.emplace_back(sgn(c) < 0, term_body(c, "", monomial_str(m, P.components(), s), s));
		std::string e = eps_str(k, s);
		items.emplace_back(false, e + (s.latex ? "(" : "*(") + join_signed(inner) + ")");
	}
	return items;
}

std::string poly_str(DiffPoly const &P, Style s)
{
	return join_signed(signed_items(P, s));
}

/// Coefficient in front of an operator symbol: returns (negative?, prefix).
/// The prefix is empty for +-1 and is a parenthesized sum for multi-term coefficients.
std::pair<bool, std::string> coefficient_prefix(DiffPoly const &a, Style s)
{
	auto items = signed_items(a, s);
	if (items.size() == 1 && items.front().second == "1")
		return {items.front().first, ""};
	if (items.size() == 1)
		return {items.front().first, items.front().second + (s.latex ? "" : "*")};
	return {false, "(" + join_signed(items) + ")" + (s.latex ? "" : "*")};
}

std::string op_str(PseudoDiffOp const &A, Style s)
{
	std::vector<std::pair<bool, std::string>> items;
	for (auto const &[j, a] : A.local())
	{
		if (j == 0)
		{
			auto sub = signed_items(a, s);
			items.insert(items.end(), sub.begin(), sub.end());
			continue;
		}
		auto [neg, prefix] = coefficient_prefix(a, s);
		std::string d = s.latex ? (j == 1 ? "D_x" : "D_x^{" + std::to_string(j) + "}")
		                        : (j == 1 ? "Dx" : "Dx^" + std::to_string(j));
		items.emplace_back(neg, prefix + d);
	}
	for (auto const &[a, b] : A.nonlocal_pairs())
	{
		auto [neg, prefix] = coefficient_prefix(a, s);
		std::string right = monomial_str(b.terms().begin()->first, 1, s);
		std::string body = prefix + (s.latex ? "D_x^{-1}" : "Dxi");
		if (!right.empty())
			body += (s.latex ? "" : "*") + right;
		items.emplace_back(neg, body);
	}
	return join_signed(items);
}

std::string theta_name(int k, Style s)
{
	return (s.latex ? "\\theta" : "theta") + derivative_suffix(k, s.latex);
}

std::string multivector_str(MultiVector const &V, Style s)
{
	std::vector<std::pair<bool, std::string>> items;
	for (auto const &[key, f] : V.terms())
	{
		std::string wedge;
		for (size_t i = 0; i < key.size(); ++i)
		{
			if (i > 0)
				wedge += s.latex ? "\\wedge " : "^";
			wedge += theta_name(key[i], s);
		}
		auto [neg, prefix] = coefficient_prefix(f, s);
		items.emplace_back(neg, prefix + wedge);
	}
	return join_signed(items);
}

} // namespace

std::string jet_name(int order, int component, int components)
{
	return base_name(component, components) + derivative_suffix(order, false);
}

std::string to_text(DiffPoly const &P) { return poly_str(P, Style{false}); }
std::string to_latex(DiffPoly const &P) { return poly_str(P, Style{true}); }
std::string to_text(PseudoDiffOp const &A) { return op_str(A, Style{false}); }
std::string to_latex(PseudoDiffOp const &A) { return op_str(A, Style{true}); }
std::string to_text(MultiVector const &V) { return multivector_str(V, Style{false}); }
std::string to_latex(MultiVector const &V) { return multivector_str(V, Style{true}); }

} // namespace apsym
