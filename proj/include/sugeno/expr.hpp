#ifndef SUGENO_EXPR_HPP
#define SUGENO_EXPR_HPP

// A small piecewise expression language for shape functions, custom fusion
// operations and survival (level) functions.
//
//   expr      := sum
//   sum       := product (('+' | '-') product)*
//   product   := unary (('*' | '/') unary)*
//   unary     := '-' unary | power
//   power     := atom ('^' unary)?
//   atom      := NUMBER | 'inf' | VARIABLE
//              | ('sqrt' | 'abs' | 'pos') '(' expr ')'
//              | ('min' | 'max') '(' expr (',' expr)+ ')'
//              | 'ind' interval '(' expr ')'
//              | 'piecewise' ('(' VARIABLE ')')? '{' segment (';' segment)* ';'? '}'
//              | '(' expr ')'
//   segment   := interval ':' expr
//   interval  := ('[' | '(') bound ',' bound (']' | ')')
//   bound     := '-'? (NUMBER | 'inf')
//
// pos(e) is the positive part max(e, 0). ind I(e) is 1 when e lies in I and
// 0 otherwise. A piecewise without an explicit variable guards the first
// declared variable.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sugeno/error.hpp"
#include "sugeno/extended.hpp"

namespace sugeno {

/// Interval of the real line with independently open or closed ends.
struct Interval
{
	double lo = 0.0;
	double hi = 0.0;
	bool lo_closed = true;
	bool hi_closed = true;

	static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }
	static Interval left_open(double lo, double hi) { return {lo, hi, false, true}; }

	bool contains(double x) const noexcept
	{
		const bool above = lo_closed ? x >= lo : x > lo;
		const bool below = hi_closed ? x <= hi : x < hi;
		return above && below;
	}

	bool empty() const noexcept
	{
		return lo > hi || (lo == hi && !(lo_closed && hi_closed));
	}

	/// Assumes this->lo <= other.lo.
	bool overlaps_later(const Interval& other) const noexcept
	{
		return hi > other.lo || (hi == other.lo && hi_closed && other.lo_closed);
	}

	std::string to_string() const
	{
		return std::string(lo_closed ? "[" : "(") + format_number(lo) + ", " + format_number(hi) +
		       (hi_closed ? "]" : ")");
	}

	friend bool operator==(const Interval&, const Interval&) = default;
};

/// First point of [lo, hi] not covered by the union of `parts`, if any.
inline std::optional<double> first_gap(std::vector<Interval> parts, double lo, double hi)
{
	std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
		if (a.lo != b.lo)
			return a.lo < b.lo;
		return a.lo_closed && !b.lo_closed;
	});
	double pos = lo;
	bool pos_covered = false;
	for (const auto& part : parts) {
		if (pos > hi || (pos == hi && pos_covered))
			return std::nullopt;
		if (part.hi < pos)
			continue;
		if (part.lo > pos)
			return pos_covered ? std::min(0.5 * (pos + part.lo), hi) : pos;
		if (part.lo == pos && !pos_covered && !part.lo_closed)
			return pos;
		if (part.hi > pos) {
			pos = part.hi;
			pos_covered = part.hi_closed;
		} else if (part.hi == pos) {
			pos_covered = pos_covered || part.hi_closed;
		}
	}
	if (pos < hi)
		return pos_covered ? 0.5 * (pos + hi) : pos;
	if (pos == hi && !pos_covered)
		return hi;
	return std::nullopt;
}

/// Abstract syntax tree nodes. Nodes are immutable and shared.
namespace ast {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Func { Sqrt, Min, Max, Abs, Pos };

struct Number { double value; };
struct Variable { std::size_t index; };
struct Negate { NodePtr operand; };
struct Binary { BinaryOp op; NodePtr lhs; NodePtr rhs; };
struct Call { Func fn; std::vector<NodePtr> args; };
struct Indicator { Interval guard; NodePtr arg; };
struct Segment { Interval guard; NodePtr body; };
struct Piecewise { std::size_t var; std::vector<Segment> segments; };

struct Node
{
	std::variant<Number, Variable, Negate, Binary, Call, Indicator, Piecewise> data;
};

inline NodePtr number(double v) { return std::make_shared<const Node>(Node{Number{v}}); }
inline NodePtr variable(std::size_t i) { return std::make_shared<const Node>(Node{Variable{i}}); }
inline NodePtr negate(NodePtr e) { return std::make_shared<const Node>(Node{Negate{std::move(e)}}); }
inline NodePtr binary(BinaryOp op, NodePtr l, NodePtr r)
{
	return std::make_shared<const Node>(Node{Binary{op, std::move(l), std::move(r)}});
}
inline NodePtr call(Func fn, std::vector<NodePtr> args)
{
	return std::make_shared<const Node>(Node{Call{fn, std::move(args)}});
}
inline NodePtr indicator(Interval guard, NodePtr arg)
{
	return std::make_shared<const Node>(Node{Indicator{guard, std::move(arg)}});
}
inline NodePtr piecewise(std::size_t var, std::vector<Segment> segments)
{
	return std::make_shared<const Node>(Node{Piecewise{var, std::move(segments)}});
}

inline bool equal(const Node& a, const Node& b);

inline bool equal(const NodePtr& a, const NodePtr& b)
{
	if (a == b)
		return true;
	if (!a || !b)
		return false;
	return equal(*a, *b);
}

inline bool equal(const Node& a, const Node& b)
{
	if (a.data.index() != b.data.index())
		return false;
	return std::visit(
	    [&](const auto& x) -> bool {
		    using T = std::decay_t<decltype(x)>;
		    const auto& y = std::get<T>(b.data);
		    if constexpr (std::is_same_v<T, Number>)
			    return x.value == y.value || (std::isnan(x.value) && std::isnan(y.value));
		    else if constexpr (std::is_same_v<T, Variable>)
			    return x.index == y.index;
		    else if constexpr (std::is_same_v<T, Negate>)
			    return equal(x.operand, y.operand);
		    else if constexpr (std::is_same_v<T, Binary>)
			    return x.op == y.op && equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
		    else if constexpr (std::is_same_v<T, Call>) {
			    if (x.fn != y.fn || x.args.size() != y.args.size())
				    return false;
			    for (std::size_t i = 0; i < x.args.size(); ++i)
				    if (!equal(x.args[i], y.args[i]))
					    return false;
			    return true;
		    } else if constexpr (std::is_same_v<T, Indicator>)
			    return x.guard == y.guard && equal(x.arg, y.arg);
		    else {
			    if (x.var != y.var || x.segments.size() != y.segments.size())
				    return false;
			    for (std::size_t i = 0; i < x.segments.size(); ++i)
				    if (!(x.segments[i].guard == y.segments[i].guard) ||
				        !equal(x.segments[i].body, y.segments[i].body))
					    return false;
			    return true;
		    }
	    },
	    a.data);
}

inline const char* func_name(Func fn)
{
	switch (fn) {
	case Func::Sqrt: return "sqrt";
	case Func::Min: return "min";
	case Func::Max: return "max";
	case Func::Abs: return "abs";
	case Func::Pos: return "pos";
	}
	return "?";
}

inline char op_symbol(BinaryOp op)
{
	switch (op) {
	case BinaryOp::Add: return '+';
	case BinaryOp::Sub: return '-';
	case BinaryOp::Mul: return '*';
	case BinaryOp::Div: return '/';
	case BinaryOp::Pow: return '^';
	}
	return '?';
}

} // namespace ast

/**
 * A parsed expression over a fixed, ordered list of variables.
 *
 * Evaluation is pure: identical bindings give bit-identical results, and a
 * single Expr may be evaluated from several threads at once.
 */
class Expr
{
public:
	Expr() : Expr(ast::number(0.0), {}) {}

	Expr(ast::NodePtr root, std::vector<std::string> variables)
	    : root_(std::move(root)),
	      vars_(std::make_shared<const std::vector<std::string>>(std::move(variables)))
	{
		validate(*root_);
	}

	const ast::Node& root() const noexcept { return *root_; }
	const std::vector<std::string>& variables() const noexcept { return *vars_; }

	std::optional<std::size_t> variable_index(std::string_view name) const
	{
		for (std::size_t i = 0; i < vars_->size(); ++i)
			if ((*vars_)[i] == name)
				return i;
		return std::nullopt;
	}

	/// Value at the positional bindings; negative or indeterminate results throw EvalError.
	double operator()(std::span<const double> args) const
	{
		if (args.size() < vars_->size())
			throw EvalError("unbound variable '" + (*vars_)[args.size()] + "'");
		const double v = eval_node(*root_, args);
		if (v < 0.0)
			throw EvalError("negative result " + format_number(v) + " (wrap in pos() to clamp)");
		return v == 0.0 ? 0.0 : v;
	}

	double operator()(double x) const { return (*this)(std::span<const double>(&x, 1)); }

	double operator()(double a, double b) const
	{
		const double args[2] = {a, b};
		return (*this)(std::span<const double>(args, 2));
	}

	NonNegExt eval(const std::map<std::string, NonNegExt>& bindings) const
	{
		std::vector<double> args;
		args.reserve(vars_->size());
		for (const auto& name : *vars_) {
			auto it = bindings.find(name);
			if (it == bindings.end())
				throw EvalError("unbound variable '" + name + "'");
			args.push_back(it->second.value());
		}
		return NonNegExt((*this)(args));
	}

	/// Canonical, fully parenthesised text that parses back to an equal tree.
	std::string to_string() const
	{
		std::string out;
		print(*root_, out);
		return out;
	}

	friend bool operator==(const Expr& a, const Expr& b)
	{
		return *a.vars_ == *b.vars_ && ast::equal(a.root_, b.root_);
	}

	/// Indices of the variables that actually occur.
	std::vector<std::size_t> used_variables() const
	{
		std::vector<bool> used(vars_->size(), false);
		collect(*root_, used);
		std::vector<std::size_t> out;
		for (std::size_t i = 0; i < used.size(); ++i)
			if (used[i])
				out.push_back(i);
		return out;
	}

	/// For a top-level piecewise, the first point of [lo, hi] left uncovered.
	std::optional<double> piecewise_gap(double lo, double hi) const
	{
		const auto* pw = std::get_if<ast::Piecewise>(&root_->data);
		if (!pw)
			return std::nullopt;
		std::vector<Interval> guards;
		for (const auto& s : pw->segments)
			guards.push_back(s.guard);
		return first_gap(std::move(guards), lo, hi);
	}

private:
	void validate(const ast::Node& n) const
	{
		std::visit(
		    [&](const auto& x) {
			    using T = std::decay_t<decltype(x)>;
			    if constexpr (std::is_same_v<T, ast::Variable>) {
				    if (x.index >= vars_->size())
					    throw InputError("variable index out of range");
			    } else if constexpr (std::is_same_v<T, ast::Negate>) {
				    validate(*x.operand);
			    } else if constexpr (std::is_same_v<T, ast::Binary>) {
				    validate(*x.lhs);
				    validate(*x.rhs);
			    } else if constexpr (std::is_same_v<T, ast::Call>) {
				    for (const auto& a : x.args)
					    validate(*a);
			    } else if constexpr (std::is_same_v<T, ast::Indicator>) {
				    if (x.guard.empty())
					    throw InputError("empty indicator interval " + x.guard.to_string());
				    validate(*x.arg);
			    } else if constexpr (std::is_same_v<T, ast::Piecewise>) {
				    if (x.var >= vars_->size())
					    throw InputError("piecewise variable index out of range");
				    std::vector<Interval> guards;
				    for (const auto& s : x.segments) {
					    if (s.guard.empty())
						    throw InputError("empty piecewise interval " + s.guard.to_string());
					    guards.push_back(s.guard);
					    validate(*s.body);
				    }
				    std::sort(guards.begin(), guards.end(),
				              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
				    for (std::size_t i = 1; i < guards.size(); ++i)
					    if (guards[i - 1].overlaps_later(guards[i]))
						    throw InputError("overlapping piecewise intervals " +
						                     guards[i - 1].to_string() + " and " +
						                     guards[i].to_string());
			    }
		    },
		    n.data);
	}

	static void collect(const ast::Node& n, std::vector<bool>& used)
	{
		std::visit(
		    [&](const auto& x) {
			    using T = std::decay_t<decltype(x)>;
			    if constexpr (std::is_same_v<T, ast::Variable>)
				    used[x.index] = true;
			    else if constexpr (std::is_same_v<T, ast::Negate>)
				    collect(*x.operand, used);
			    else if constexpr (std::is_same_v<T, ast::Binary>) {
				    collect(*x.lhs, used);
				    collect(*x.rhs, used);
			    } else if constexpr (std::is_same_v<T, ast::Call>) {
				    for (const auto& a : x.args)
					    collect(*a, used);
			    } else if constexpr (std::is_same_v<T, ast::Indicator>)
				    collect(*x.arg, used);
			    else if constexpr (std::is_same_v<T, ast::Piecewise>) {
				    used[x.var] = true;
				    for (const auto& s : x.segments)
					    collect(*s.body, used);
			    }
		    },
		    n.data);
	}

	static double checked(double v, const char* what)
	{
		if (std::isnan(v))
			throw EvalError(std::string("indeterminate form in ") + what);
		return v;
	}

	static double eval_node(const ast::Node& n, std::span<const double> args)
	{
		using namespace ast;
		return std::visit(
		    [&](const auto& x) -> double {
			    using T = std::decay_t<decltype(x)>;
			    if constexpr (std::is_same_v<T, Number>) {
				    return x.value;
			    } else if constexpr (std::is_same_v<T, Variable>) {
				    return args[x.index];
			    } else if constexpr (std::is_same_v<T, Negate>) {
				    return -eval_node(*x.operand, args);
			    } else if constexpr (std::is_same_v<T, Binary>) {
				    const double l = eval_node(*x.lhs, args);
				    const double r = eval_node(*x.rhs, args);
				    switch (x.op) {
				    case BinaryOp::Add:
					    return checked(l + r, "addition");
				    case BinaryOp::Sub:
					    return checked(l - r, "subtraction");
				    case BinaryOp::Mul:
					    return ext_mul(l, r);
				    case BinaryOp::Div:
					    if (r == 0.0)
						    throw EvalError("division by zero");
					    return checked(l / r, "division");
				    case BinaryOp::Pow:
					    if (l < 0.0 && r != std::floor(r))
						    throw EvalError("non-integer power of a negative number");
					    if (l == 0.0 && r < 0.0)
						    throw EvalError("negative power of zero");
					    return checked(std::pow(l, r), "power");
				    }
				    return 0.0;
			    } else if constexpr (std::is_same_v<T, Call>) {
				    switch (x.fn) {
				    case Func::Sqrt: {
					    const double v = eval_node(*x.args[0], args);
					    if (v < 0.0)
						    throw EvalError("sqrt of negative number " + format_number(v));
					    return std::sqrt(v);
				    }
				    case Func::Abs:
					    return std::fabs(eval_node(*x.args[0], args));
				    case Func::Pos:
					    return std::max(eval_node(*x.args[0], args), 0.0);
				    case Func::Min: {
					    double v = eval_node(*x.args[0], args);
					    for (std::size_t i = 1; i < x.args.size(); ++i)
						    v = std::min(v, eval_node(*x.args[i], args));
					    return v;
				    }
				    case Func::Max: {
					    double v = eval_node(*x.args[0], args);
					    for (std::size_t i = 1; i < x.args.size(); ++i)
						    v = std::max(v, eval_node(*x.args[i], args));
					    return v;
				    }
				    }
				    return 0.0;
			    } else if constexpr (std::is_same_v<T, Indicator>) {
				    return x.guard.contains(eval_node(*x.arg, args)) ? 1.0 : 0.0;
			    } else {
				    const double at = args[x.var];
				    for (const auto& s : x.segments)
					    if (s.guard.contains(at))
						    return eval_node(*s.body, args);
				    throw EvalError("point " + format_number(at) + " outside every piecewise interval");
			    }
		    },
		    n.data);
	}

	void print(const ast::Node& n, std::string& out) const
	{
		using namespace ast;
		std::visit(
		    [&](const auto& x) {
			    using T = std::decay_t<decltype(x)>;
			    if constexpr (std::is_same_v<T, Number>) {
				    out += format_number(x.value);
			    } else if constexpr (std::is_same_v<T, Variable>) {
				    out += (*vars_)[x.index];
			    } else if constexpr (std::is_same_v<T, Negate>) {
				    out += "(-";
				    print(*x.operand, out);
				    out += ")";
			    } else if constexpr (std::is_same_v<T, Binary>) {
				    out += "(";
				    print(*x.lhs, out);
				    out += ' ';
				    out += op_symbol(x.op);
				    out += ' ';
				    print(*x.rhs, out);
				    out += ")";
			    } else if constexpr (std::is_same_v<T, Call>) {
				    out += func_name(x.fn);
				    out += "(";
				    for (std::size_t i = 0; i < x.args.size(); ++i) {
					    if (i)
						    out += ", ";
					    print(*x.args[i], out);
				    }
				    out += ")";
			    } else if constexpr (std::is_same_v<T, Indicator>) {
				    out += "ind" + x.guard.to_string() + "(";
				    print(*x.arg, out);
				    out += ")";
			    } else {
				    out += "piecewise(" + (*vars_)[x.var] + "){";
				    for (std::size_t i = 0; i < x.segments.size(); ++i) {
					    if (i)
						    out += "; ";
					    out += x.segments[i].guard.to_string() + ": ";
					    print(*x.segments[i].body, out);
				    }
				    out += "}";
			    }
		    },
		    n.data);
	}

	ast::NodePtr root_;
	std::shared_ptr<const std::vector<std::string>> vars_;
};

namespace detail {

class Parser
{
public:
	Parser(std::string_view src, const std::vector<std::string>& vars) : src_(src), vars_(vars)
	{
		advance();
	}

	ast::NodePtr parse_all()
	{
		auto e = parse_sum();
		if (tok_.kind != Kind::End)
			fail("unexpected '" + tok_.text + "'");
		return e;
	}

private:
	enum class Kind { Number, Ident, Punct, End };

	struct Token
	{
		Kind kind = Kind::End;
		std::string text;
		double number = 0.0;
		std::size_t line = 1;
		std::size_t column = 1;
	};

	[[noreturn]] void fail(const std::string& what) const
	{
		throw ParseError(what, tok_.line, tok_.column);
	}

	void advance()
	{
		while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
			if (src_[pos_] == '\n') {
				++line_;
				col_ = 1;
			} else {
				++col_;
			}
			++pos_;
		}
		tok_ = Token{};
		tok_.line = line_;
		tok_.column = col_;
		if (pos_ >= src_.size()) {
			tok_.kind = Kind::End;
			tok_.text = "end of input";
			return;
		}
		const std::size_t start = pos_;
		const char c = src_[pos_];
		if (std::isdigit(static_cast<unsigned char>(c)) ||
		    (c == '.' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
			while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
				++pos_;
			if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
				std::size_t p = pos_ + 1;
				if (p < src_.size() && (src_[p] == '+' || src_[p] == '-'))
					++p;
				if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
					pos_ = p;
					while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
						++pos_;
				}
			}
			tok_.kind = Kind::Number;
			tok_.text = std::string(src_.substr(start, pos_ - start));
			auto res = std::from_chars(tok_.text.data(), tok_.text.data() + tok_.text.size(), tok_.number);
			if (res.ec != std::errc() || res.ptr != tok_.text.data() + tok_.text.size())
				fail("malformed number '" + tok_.text + "'");
		} else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			while (pos_ < src_.size() &&
			       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
				++pos_;
			tok_.kind = Kind::Ident;
			tok_.text = std::string(src_.substr(start, pos_ - start));
		} else if (std::string_view("+-*/^()[]{},;:").find(c) != std::string_view::npos) {
			++pos_;
			tok_.kind = Kind::Punct;
			tok_.text = std::string(1, c);
		} else {
			fail(std::string("unexpected character '") + c + "'");
		}
		col_ += pos_ - start;
	}

	bool is_punct(char c) const { return tok_.kind == Kind::Punct && tok_.text[0] == c; }

	void expect(char c)
	{
		if (!is_punct(c))
			fail(std::string("expected '") + c + "' but found '" + tok_.text + "'");
		advance();
	}

	ast::NodePtr parse_sum()
	{
		auto lhs = parse_product();
		while (is_punct('+') || is_punct('-')) {
			const auto op = is_punct('+') ? ast::BinaryOp::Add : ast::BinaryOp::Sub;
			advance();
			lhs = ast::binary(op, lhs, parse_product());
		}
		return lhs;
	}

	ast::NodePtr parse_product()
	{
		auto lhs = parse_unary();
		while (is_punct('*') || is_punct('/')) {
			const auto op = is_punct('*') ? ast::BinaryOp::Mul : ast::BinaryOp::Div;
			advance();
			lhs = ast::binary(op, lhs, parse_unary());
		}
		return lhs;
	}

	ast::NodePtr parse_unary()
	{
		if (is_punct('-')) {
			advance();
			return ast::negate(parse_unary());
		}
		return parse_power();
	}

	ast::NodePtr parse_power()
	{
		auto base = parse_atom();
		if (is_punct('^')) {
			advance();
			return ast::binary(ast::BinaryOp::Pow, base, parse_unary());
		}
		return base;
	}

	double parse_bound()
	{
		bool negative = false;
		if (is_punct('-')) {
			negative = true;
			advance();
		}
		double v = 0.0;
		if (tok_.kind == Kind::Number)
			v = tok_.number;
		else if (tok_.kind == Kind::Ident && tok_.text == "inf")
			v = infinity;
		else
			fail("expected an interval bound but found '" + tok_.text + "'");
		advance();
		return negative ? -v : v;
	}

	Interval parse_interval()
	{
		Interval iv;
		if (is_punct('['))
			iv.lo_closed = true;
		else if (is_punct('('))
			iv.lo_closed = false;
		else
			fail("expected '[' or '(' to open an interval");
		const std::size_t line = tok_.line, column = tok_.column;
		advance();
		iv.lo = parse_bound();
		expect(',');
		iv.hi = parse_bound();
		if (is_punct(']'))
			iv.hi_closed = true;
		else if (is_punct(')'))
			iv.hi_closed = false;
		else
			fail("expected ']' or ')' to close an interval");
		advance();
		if (iv.empty())
			throw ParseError("empty interval " + iv.to_string(), line, column);
		return iv;
	}

	std::size_t variable_or_fail(const std::string& name) const
	{
		for (std::size_t i = 0; i < vars_.size(); ++i)
			if (vars_[i] == name)
				return i;
		fail("unknown identifier '" + name + "'");
	}

	ast::NodePtr parse_atom()
	{
		if (tok_.kind == Kind::Number) {
			auto n = ast::number(tok_.number);
			advance();
			return n;
		}
		if (is_punct('(')) {
			advance();
			auto e = parse_sum();
			expect(')');
			return e;
		}
		if (tok_.kind != Kind::Ident)
			fail("unexpected '" + tok_.text + "'");

		const std::string name = tok_.text;
		const std::size_t line = tok_.line, column = tok_.column;
		if (name == "inf") {
			advance();
			return ast::number(infinity);
		}
		if (name == "sqrt" || name == "abs" || name == "pos" || name == "min" || name == "max") {
			advance();
			expect('(');
			std::vector<ast::NodePtr> args{parse_sum()};
			while (is_punct(',')) {
				advance();
				args.push_back(parse_sum());
			}
			expect(')');
			ast::Func fn = ast::Func::Sqrt;
			if (name == "abs")
				fn = ast::Func::Abs;
			else if (name == "pos")
				fn = ast::Func::Pos;
			else if (name == "min")
				fn = ast::Func::Min;
			else if (name == "max")
				fn = ast::Func::Max;
			const bool variadic = fn == ast::Func::Min || fn == ast::Func::Max;
			if (variadic ? args.size() < 2 : args.size() != 1)
				throw ParseError(name + (variadic ? " needs at least two arguments" : " takes one argument"),
				                 line, column);
			return ast::call(fn, std::move(args));
		}
		if (name == "ind") {
			advance();
			const Interval guard = parse_interval();
			expect('(');
			auto arg = parse_sum();
			expect(')');
			return ast::indicator(guard, std::move(arg));
		}
		if (name == "piecewise") {
			advance();
			if (vars_.empty())
				throw ParseError("piecewise needs a variable", line, column);
			std::size_t var = 0;
			if (is_punct('(')) {
				advance();
				if (tok_.kind != Kind::Ident)
					fail("expected a variable name");
				var = variable_or_fail(tok_.text);
				advance();
				expect(')');
			}
			expect('{');
			std::vector<ast::Segment> segments;
			for (;;) {
				const std::size_t seg_line = tok_.line, seg_col = tok_.column;
				const Interval guard = parse_interval();
				expect(':');
				auto body = parse_sum();
				for (const auto& s : segments) {
					const bool overlap = s.guard.lo <= guard.lo ? s.guard.overlaps_later(guard)
					                                            : guard.overlaps_later(s.guard);
					if (overlap)
						throw ParseError("overlapping piecewise intervals " + s.guard.to_string() +
						                     " and " + guard.to_string(),
						                 seg_line, seg_col);
				}
				segments.push_back({guard, std::move(body)});
				if (is_punct(';')) {
					advance();
					if (is_punct('}'))
						break;
					continue;
				}
				break;
			}
			expect('}');
			return ast::piecewise(var, std::move(segments));
		}
		const std::size_t index = variable_or_fail(name);
		advance();
		return ast::variable(index);
	}

	std::string_view src_;
	const std::vector<std::string>& vars_;
	std::size_t pos_ = 0;
	std::size_t line_ = 1;
	std::size_t col_ = 1;
	Token tok_;
};

} // namespace detail

/// Parses `source` over the given variables. Throws ParseError with a location.
inline Expr parse(std::string_view source, std::vector<std::string> variables = {"x"})
{
	static const char* const reserved[] = {"inf", "sqrt", "abs", "pos", "min", "max", "ind", "piecewise"};
	for (const auto& v : variables)
		for (const char* r : reserved)
			if (v == r)
				throw InputError("variable name '" + v + "' is reserved");
	detail::Parser parser(source, variables);
	auto root = parser.parse_all();
	return Expr(std::move(root), std::move(variables));
}

/// Canonical text of an expression.
inline std::string pretty_print(const Expr& e) { return e.to_string(); }

} // namespace sugeno

#endif
