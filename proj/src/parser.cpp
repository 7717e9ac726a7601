#include "apsym/model.hpp"
#include "apsym/operator_algebra.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <variant>

namespace apsym {

ParseError::ParseError(int line, int column, std::string const &message,
                       std::vector<std::string> expected)
    : Error([&] {
	      std::string m = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
	      if (!expected.empty())
	      {
		      m += " (expected one of:";
		      for (auto const &e : expected)
			      m += " " + e;
		      m += ")";
	      }
	      return m;
      }()),
      line_(line), column_(column), expected_(std::move(expected))
{
}

NameError::NameError(int line, int column, std::string const &name, std::string const &message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message + " '" + name + "'"),
      line_(line), column_(column), name_(name)
{
}

namespace {

// ---- lexer ------------------------------------------------------------------

struct Token
{
	enum Kind
	{
		Ident,
		Int,
		Sym,
		End
	} kind = End;
	std::string text;
	int line = 1;
	int col = 1;
};

std::string describe(Token const &t)
{
	switch (t.kind)
	{
	case Token::Ident:
		return "identifier '" + t.text + "'";
	case Token::Int:
		return "number '" + t.text + "'";
	case Token::Sym:
		return "'" + t.text + "'";
	case Token::End:
		break;
	}
	return "end of input";
}

std::vector<Token> lex(std::string_view src)
{
	std::vector<Token> out;
	int line = 1, col = 1;
	size_t i = 0;
	auto advance = [&](size_t n) {
		for (size_t k = 0; k < n; ++k)
		{
			if (src[i] == '\n')
			{
				++line;
				col = 1;
			}
			else
				++col;
			++i;
		}
	};
	while (i < src.size())
	{
		char c = src[i];
		if (std::isspace(static_cast<unsigned char>(c)))
		{
			advance(1);
			continue;
		}
		if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/'))
		{
			while (i < src.size() && src[i] != '\n')
				advance(1);
			continue;
		}
		Token t;
		t.line = line;
		t.col = col;
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
		{
			size_t j = i;
			while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
				++j;
			t.kind = Token::Ident;
			t.text = std::string(src.substr(i, j - i));
			advance(j - i);
		}
		else if (std::isdigit(static_cast<unsigned char>(c)))
		{
			size_t j = i;
			while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
				++j;
			t.kind = Token::Int;
			t.text = std::string(src.substr(i, j - i));
			advance(j - i);
		}
		else if (std::string_view("+-*/^(){};:=").find(c) != std::string_view::npos)
		{
			t.kind = Token::Sym;
			t.text = std::string(1, c);
			advance(1);
		}
		else
			throw ParseError(line, col, std::string("unexpected character '") + c + "'");
		out.push_back(std::move(t));
	}
	Token end;
	end.line = line;
	end.col = col;
	out.push_back(end);
	return out;
}

// ---- syntax tree ------------------------------------------------------------

struct Node
{
	enum Kind
	{
		Num,
		X,
		T,
		Eps,
		Jet,
		Dx,
		Dxi,
		Ref,
		Neg,
		Add,
		Sub,
		Mul,
		Div,
		Pow
	} kind;
	std::string text;
	int value = 0;
	int line = 0;
	int col = 0;
	std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

struct Decl
{
	DeclKind kind;
	std::string name;
	int line, col;
	NodePtr expr;
};

struct Setting
{
	std::string name;
	int value;
	int line, col;
};

std::optional<int> jet_order(std::string const &id)
{
	if (id == "u")
		return 0;
	if (id.size() >= 3 && id.rfind("u_", 0) == 0 && id.find_first_not_of('x', 2) == std::string::npos)
		return static_cast<int>(id.size()) - 2;
	return std::nullopt;
}

class Parser
{
  public:
	explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

	void parse(std::vector<Decl> &decls, std::vector<Setting> &settings)
	{
		while (peek().kind != Token::End)
		{
			Token const &kw = peek();
			if (kw.kind != Token::Ident)
				fail({"system", "operator", "char", "density", "set"});
			if (kw.text == "set")
			{
				next();
				Token name = expect_ident("setting name");
				expect_sym("=");
				Token v = peek();
				if (v.kind != Token::Int)
					fail({"integer"});
				next();
				expect_sym(";");
				settings.push_back({name.text, std::stoi(v.text), name.line, name.col});
			}
			else if (kw.text == "system")
			{
				next();
				Token name = expect_ident("system name");
				expect_sym("{");
				Token r = peek();
				if (r.kind != Token::Ident || r.text != "rhs")
					fail({"rhs"});
				next();
				expect_sym(":");
				auto e = expression();
				expect_sym(";");
				expect_sym("}");
				decls.push_back({DeclKind::System, name.text, name.line, name.col, std::move(e)});
			}
			else if (kw.text == "operator")
			{
				next();
				Token name = expect_ident("operator name");
				expect_sym("{");
				auto e = expression();
				if (is_sym(";"))
					next();
				expect_sym("}");
				decls.push_back({DeclKind::Operator, name.text, name.line, name.col, std::move(e)});
			}
			else if (kw.text == "char" || kw.text == "density")
			{
				DeclKind k = kw.text == "char" ? DeclKind::Characteristic : DeclKind::Density;
				next();
				Token name = expect_ident("name");
				expect_sym("=");
				auto e = expression();
				expect_sym(";");
				decls.push_back({k, name.text, name.line, name.col, std::move(e)});
			}
			else
				fail({"system", "operator", "char", "density", "set"});
		}
	}

  private:
	Token const &peek(size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
	Token const &next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
	bool is_sym(char const *s) const { return peek().kind == Token::Sym && peek().text == s; }

	[[noreturn]] void fail(std::vector<std::string> expected) const
	{
		throw ParseError(peek().line, peek().col, "unexpected " + describe(peek()), std::move(expected));
	}

	void expect_sym(char const *s)
	{
		if (!is_sym(s))
			fail({std::string("'") + s + "'"});
		next();
	}

	Token expect_ident(char const *what)
	{
		if (peek().kind != Token::Ident)
			fail({what});
		return next();
	}

	NodePtr make(Node::Kind k, Token const &at)
	{
		auto n = std::make_unique<Node>();
		n->kind = k;
		n->line = at.line;
		n->col = at.col;
		return n;
	}

	NodePtr binary(Node::Kind k, Token const &at, NodePtr a, NodePtr b)
	{
		auto n = make(k, at);
		n->lhs = std::move(a);
		n->rhs = std::move(b);
		return n;
	}

	NodePtr expression()
	{
		auto lhs = term();
		while (is_sym("+") || is_sym("-"))
		{
			Token op = next();
			lhs = binary(op.text == "+" ? Node::Add : Node::Sub, op, std::move(lhs), term());
		}
		return lhs;
	}

	NodePtr term()
	{
		auto lhs = unary();
		while (is_sym("*") || is_sym("/"))
		{
			Token op = next();
			lhs = binary(op.text == "*" ? Node::Mul : Node::Div, op, std::move(lhs), unary());
		}
		return lhs;
	}

	NodePtr unary()
	{
		if (is_sym("-"))
		{
			Token op = next();
			auto n = make(Node::Neg, op);
			n->lhs = unary();
			return n;
		}
		if (is_sym("+"))
		{
			next();
			return unary();
		}
		return power();
	}

	NodePtr power()
	{
		auto base = atom();
		if (is_sym("^"))
		{
			Token op = next();
			if (peek().kind != Token::Int)
				fail({"non-negative integer exponent"});
			auto n = make(Node::Pow, op);
			n->value = std::stoi(next().text);
			n->lhs = std::move(base);
			return n;
		}
		return base;
	}

	NodePtr atom()
	{
		Token const &t = peek();
		if (t.kind == Token::Int)
		{
			auto n = make(Node::Num, t);
			n->text = t.text;
			next();
			return n;
		}
		if (t.kind == Token::Sym && t.text == "(")
		{
			next();
			auto e = expression();
			expect_sym(")");
			return e;
		}
		if (t.kind == Token::Ident)
		{
			Token id = next();
			if (id.text == "x")
				return make(Node::X, id);
			if (id.text == "t")
				return make(Node::T, id);
			if (id.text == "eps")
				return make(Node::Eps, id);
			if (id.text == "Dx")
				return make(Node::Dx, id);
			if (id.text == "Dxi")
				return make(Node::Dxi, id);
			if (id.text == "u" && is_sym("{") && peek(1).kind == Token::Int && peek(2).kind == Token::Sym &&
			    peek(2).text == "}")
			{
				next();
				auto n = make(Node::Jet, id);
				n->value = std::stoi(next().text);
				next();
				return n;
			}
			if (auto k = jet_order(id.text))
			{
				auto n = make(Node::Jet, id);
				n->value = *k;
				return n;
			}
			auto n = make(Node::Ref, id);
			n->text = id.text;
			return n;
		}
		fail({"number", "identifier", "'('", "'-'"});
	}

	std::vector<Token> toks_;
	size_t pos_ = 0;
};

// ---- evaluation -------------------------------------------------------------

using Value = std::variant<DiffPoly, PseudoDiffOp>;

class Evaluator
{
  public:
	explicit Evaluator(ModelIR &M) : M_(M), p_(M.settings.eps_order) {}

	Value eval(Node const &n)
	{
		switch (n.kind)
		{
		case Node::Num:
			return DiffPoly::constant(Rational(mpz_class(n.text)), p_);
		case Node::X:
			return DiffPoly::x(p_);
		case Node::T:
			return DiffPoly::t(p_);
		case Node::Eps:
			return DiffPoly::eps(p_);
		case Node::Jet:
			return DiffPoly::u(n.value, p_);
		case Node::Dx:
			return PseudoDiffOp::dx(p_);
		case Node::Dxi:
			return PseudoDiffOp::dx_inverse(p_);
		case Node::Ref:
			return lookup(n);
		case Node::Neg:
			return std::visit([](auto const &v) -> Value { return -v; }, eval(*n.lhs));
		case Node::Add:
		case Node::Sub:
		{
			Value a = eval(*n.lhs), b = eval(*n.rhs);
			if (auto *pa = std::get_if<DiffPoly>(&a))
				if (auto *pb = std::get_if<DiffPoly>(&b))
					return n.kind == Node::Add ? *pa + *pb : *pa - *pb;
			auto A = as_op(a), B = as_op(b);
			return n.kind == Node::Add ? A + B : A - B;
		}
		case Node::Mul:
		{
			Value a = eval(*n.lhs), b = eval(*n.rhs);
			if (auto *pa = std::get_if<DiffPoly>(&a))
				if (auto *pb = std::get_if<DiffPoly>(&b))
					return *pa * *pb;
			try
			{
				return compose(as_op(a), as_op(b));
			}
			catch (ClosureError const &e)
			{
				throw ParseError(n.line, n.col, e.what());
			}
		}
		case Node::Div:
		{
			Value a = eval(*n.lhs), b = eval(*n.rhs);
			auto const *pb = std::get_if<DiffPoly>(&b);
			if (!pb || pb->size() != 1 || !pb->terms().begin()->first.is_one())
				throw ParseError(n.line, n.col, "division is only allowed by a nonzero rational constant");
			EpsPoly const &c = pb->terms().begin()->second;
			if (c != EpsPoly(c[0], p_) || sgn(c[0]) == 0)
				throw ParseError(n.line, n.col, "division is only allowed by a nonzero rational constant");
			Rational inv = 1 / c[0];
			if (auto *pa = std::get_if<DiffPoly>(&a))
				return *pa * inv;
			return inv * std::get<PseudoDiffOp>(a);
		}
		case Node::Pow:
		{
			Value a = eval(*n.lhs);
			if (auto *pa = std::get_if<DiffPoly>(&a))
				return pow(*pa, n.value);
			auto const &A = std::get<PseudoDiffOp>(a);
			PseudoDiffOp r = PseudoDiffOp::identity(p_);
			try
			{
				for (int i = 0; i < n.value; ++i)
					r = compose(r, A);
			}
			catch (ClosureError const &e)
			{
				throw ParseError(n.line, n.col, e.what());
			}
			return r;
		}
		}
		throw ParseError(n.line, n.col, "unhandled expression");
	}

	DiffPoly scalar(Node const &n)
	{
		Value v = eval(n);
		if (auto *p = std::get_if<DiffPoly>(&v))
			return *p;
		throw ParseError(n.line, n.col, "operator expression where a differential polynomial is expected");
	}

	PseudoDiffOp as_op(Value const &v) const
	{
		if (auto *p = std::get_if<DiffPoly>(&v))
			return PseudoDiffOp::multiplication(*p);
		return std::get<PseudoDiffOp>(v);
	}

  private:
	Value lookup(Node const &n) const
	{
		if (auto it = M_.characteristics.find(n.text); it != M_.characteristics.end())
			return it->second;
		if (auto it = M_.densities.find(n.text); it != M_.densities.end())
			return it->second.density;
		if (auto it = M_.operators.find(n.text); it != M_.operators.end())
			return it->second;
		throw NameError(n.line, n.col, n.text, "undeclared identifier");
	}

	ModelIR &M_;
	int p_;
};

} // namespace

ModelIR parse_model(std::string_view text)
{
	std::vector<Decl> decls;
	std::vector<Setting> settings;
	Parser(lex(text)).parse(decls, settings);

	ModelIR M;
	for (auto const &s : settings)
	{
		if (s.name == "eps_order")
			M.settings.eps_order = s.value;
		else if (s.name == "max_jet_order")
			M.settings.max_jet_order = s.value;
		else
			throw NameError(s.line, s.col, s.name, "unknown setting");
	}

	Evaluator ev(M);
	for (auto const &d : decls)
	{
		auto dup = [&](auto const &map) {
			if (map.count(d.name))
				throw NameError(d.line, d.col, d.name, "duplicate declaration");
		};
		switch (d.kind)
		{
		case DeclKind::System:
			dup(M.systems);
			M.systems.emplace(d.name, EvolutionSystem(ev.scalar(*d.expr), d.name));
			break;
		case DeclKind::Operator:
			dup(M.operators);
			M.operators.emplace(d.name, ev.as_op(ev.eval(*d.expr)));
			break;
		case DeclKind::Characteristic:
			dup(M.characteristics);
			M.characteristics.emplace(d.name, ev.scalar(*d.expr));
			break;
		case DeclKind::Density:
			dup(M.densities);
			M.densities.emplace(d.name, Functional{ev.scalar(*d.expr), d.name});
			break;
		}
		M.order.emplace_back(d.kind, d.name);
	}
	return M;
}

} // namespace apsym
