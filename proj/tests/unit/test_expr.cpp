#include <catch_amalgamated.hpp>

#include <cmath>
#include <bit>
#include <cstdint>

#include "sugeno/expr.hpp"
#include "sugeno/monotone.hpp"
#include "sugeno/random.hpp"

using namespace sugeno;

TEST_CASE("min(a, b) parses to a call over two variables")
{
	const auto e = parse("min(a, b)", {"a", "b"});
	const auto expected = Expr(ast::call(ast::Func::Min, {ast::variable(0), ast::variable(1)}), {"a", "b"});
	CHECK(e == expected);
	CHECK(e.to_string() == "min(a, b)");
}

TEST_CASE("two-segment piecewise")
{
	const auto e = parse("piecewise{ [0,0.5]: 1 ; (0.5,1]: 0.5 }");
	const auto* pw = std::get_if<ast::Piecewise>(&e.root().data);
	REQUIRE(pw);
	REQUIRE(pw->segments.size() == 2);
	CHECK(pw->segments[0].guard == Interval::closed(0.0, 0.5));
	CHECK(pw->segments[1].guard == Interval::left_open(0.5, 1.0));
	CHECK(e(0.5) == 1.0);
	CHECK(e(0.50001) == 0.5);
	CHECK(e(0.0) == 1.0);
	CHECK_FALSE(e.piecewise_gap(0.0, 1.0));
	CHECK(e.piecewise_gap(0.0, 2.0));
}

TEST_CASE("Lukasiewicz expression")
{
	const auto e = parse("max(a + b - 1, 0)", {"a", "b"});
	CHECK(e(0.25, 0.9) == Catch::Approx(0.15).margin(1e-15));
	CHECK(e(0.5, 0.5) == 0.0);
	CHECK(e.eval({{"a", NonNegExt(0.5)}, {"b", NonNegExt(0.75)}}).value() == 0.25);
}

TEST_CASE("extended arithmetic")
{
	const auto prod = parse("a * b", {"a", "b"});
	CHECK(prod(0.0, infinity) == 0.0);
	CHECK(prod(infinity, 0.0) == 0.0);
	CHECK(prod(2.0, infinity) == infinity);
	CHECK(parse("x + inf")(1.0) == infinity);
	CHECK_THROWS_AS(parse("x - inf")(infinity), EvalError);
	CHECK_THROWS_AS(parse("x / 0")(1.0), EvalError);
	CHECK_THROWS_AS(parse("sqrt(x - 1)")(0.5), EvalError);
}

TEST_CASE("negative results need an explicit positive part")
{
	CHECK_THROWS_AS(parse("x - 1")(0.5), EvalError);
	CHECK(parse("pos(x - 1)")(0.5) == 0.0);
	CHECK(parse("abs(x - 1)")(0.5) == 0.5);
	CHECK(parse("-x + 1")(0.25) == 0.75);
}

TEST_CASE("points outside every piecewise guard are domain errors")
{
	const auto e = parse("piecewise{ [0, 0.5): x ; (0.5, 1]: 1 - x }");
	CHECK_THROWS_AS(e(0.5), EvalError);
	CHECK_THROWS_AS(e(2.0), EvalError);
	CHECK(e(0.25) == 0.25);
}

TEST_CASE("indicator of an interval guard")
{
	const auto phi = parse("0.5 * (x + 1) * ind[0, 1](x)");
	CHECK(phi(0.0) == 0.5);
	CHECK(phi(1.0) == 1.0);
	CHECK(phi(1.5) == 0.0);
	CHECK(parse("ind(0.5, 1](x)")(0.5) == 0.0);
}

TEST_CASE("precedence and associativity")
{
	CHECK(parse("2 + 3 * 4")(0.0) == 14.0);
	CHECK(parse("2 ^ 3 ^ 2")(0.0) == 512.0);
	CHECK(parse("-2 ^ 2 + 8")(0.0) == 4.0);
	CHECK(parse("8 / 2 / 2")(0.0) == 2.0);
	CHECK(parse("10 - 4 - 3")(0.0) == 3.0);
	CHECK(parse("1.5e-1 * 2")(0.0) == Catch::Approx(0.3));
}

TEST_CASE("parse errors carry line and column")
{
	auto fails_at = [](std::string_view src, std::size_t line, std::size_t column, const char* fragment) {
		try {
			(void)parse(src);
			FAIL("no error for " << src);
		} catch (const ParseError& e) {
			CHECK(e.line() == line);
			CHECK(e.column() == column);
			CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring(fragment));
		}
	};
	fails_at("x +", 1, 4, "unexpected");
	fails_at("y * 2", 1, 1, "unknown identifier 'y'");
	fails_at("x\n  + z", 2, 5, "unknown identifier 'z'");
	fails_at("piecewise{ [0, 0.6]: 1 ; [0.5, 1]: 0 }", 1, 26, "overlapping");
	fails_at("piecewise{ [0, 0.5]: 1 ; [0.5, 1]: 0 }", 1, 26, "overlapping");
	fails_at("sqrt(x, x)", 1, 1, "one argument");
	fails_at("min(x)", 1, 1, "at least two");
	fails_at("x $ 1", 1, 3, "unexpected character");
	fails_at("ind[1, 0](x)", 1, 4, "empty interval");
	CHECK_THROWS_AS(parse("x", {"min"}), InputError);
}

TEST_CASE("touching half-open guards are not an overlap")
{
	CHECK_NOTHROW(parse("piecewise{ [0, 0.5): 1 ; [0.5, 1]: 0 }"));
	CHECK_NOTHROW(parse("piecewise{ (0.5, 1]: 0 ; [0, 0.5]: 1 }"));
}

TEST_CASE("piecewise over a named variable")
{
	const auto e = parse("piecewise(b){ [0, 0.5]: a ; (0.5, 1]: 1 }", {"a", "b"});
	CHECK(e(0.3, 0.2) == 0.3);
	CHECK(e(0.3, 0.7) == 1.0);
	CHECK_THROWS_AS(e.eval({{"a", NonNegExt(0.1)}}), EvalError);
}

namespace {

ast::NodePtr random_tree(Rng& rng, int depth, std::size_t vars)
{
	if (depth == 0 || rng.below(4) == 0) {
		if (rng.coin())
			return ast::variable(rng.below(vars));
		static const double literals[] = {0.0, 0.5, 1.0, 2.0, 0.125, 1e-5, 3.75, infinity};
		return ast::number(literals[rng.below(8)]);
	}
	auto sub = [&] { return random_tree(rng, depth - 1, vars); };
	auto guard = [&] {
		const double lo = rng.on_grid(0.25);
		return Interval{lo, lo + 0.5, rng.coin(), rng.coin()};
	};
	switch (rng.below(6)) {
	case 0:
		return ast::negate(sub());
	case 1:
		return ast::binary(static_cast<ast::BinaryOp>(rng.below(5)), sub(), sub());
	case 2: {
		const auto fn = static_cast<ast::Func>(rng.below(5));
		std::vector<ast::NodePtr> args{sub()};
		if (fn == ast::Func::Min || fn == ast::Func::Max)
			for (std::size_t i = rng.between(1, 2); i > 0; --i)
				args.push_back(sub());
		return ast::call(fn, std::move(args));
	}
	case 3:
		return ast::indicator(guard(), sub());
	case 4: {
		std::vector<ast::Segment> segs;
		double lo = -1.0;
		for (std::size_t i = rng.between(1, 3); i > 0; --i) {
			segs.push_back({Interval{lo, lo + 0.5, true, false}, sub()});
			lo += 0.5;
		}
		return ast::piecewise(rng.below(vars), std::move(segs));
	}
	default:
		return ast::call(ast::Func::Abs, {sub()});
	}
}

} // namespace

TEST_CASE("pretty printing round-trips through the parser")
{
	Rng rng(11);
	for (int i = 0; i < 2000; ++i) {
		const std::vector<std::string> vars = rng.coin() ? std::vector<std::string>{"x"}
		                                                 : std::vector<std::string>{"a", "b"};
		const Expr e(random_tree(rng, 4, vars.size()), vars);
		const auto text = pretty_print(e);
		INFO(text);
		const auto back = parse(text, vars);
		REQUIRE(back == e);
		CHECK(pretty_print(back) == text);
	}
}

TEST_CASE("evaluation is deterministic")
{
	const auto e = parse("piecewise{ [0, 0.25]: sqrt(x) * 3 ; (0.25, 1]: 1 - x ^ 1.5 }");
	for (double x = 0.0; x <= 1.0; x += 0.01)
		CHECK(std::bit_cast<std::uint64_t>(e(x)) == std::bit_cast<std::uint64_t>(e(x)));
}

TEST_CASE("bundled expressions agree with closed forms")
{
	struct Case
	{
		const char* src;
		const char* var;
		double lo, hi;
		double (*fn)(double);
	};
	const Case cases[] = {
	    {"0.5 * (x + 1)", "x", 0.0, 1.0, [](double x) { return 0.5 * (x + 1); }},
	    {"2 * x - 1", "x", 0.5, 1.0, [](double x) { return 2 * x - 1; }},
	    {"2 * x ^ 2 - 2 * x + 1", "x", 0.0, 1.0, [](double x) { return 2 * x * x - 2 * x + 1; }},
	    {"1 - 2 * sqrt(0.5 * (t - 0.5))", "t", 0.5, 1.0, [](double t) { return 1 - 2 * std::sqrt(0.5 * (t - 0.5)); }},
	    {"2 * sqrt(0.5 * (0.5 - t))", "t", 0.0, 0.5, [](double t) { return 2 * std::sqrt(0.5 * (0.5 - t)); }},
	    {"1 - 2 * t", "t", 0.0, 0.5, [](double t) { return 1 - 2 * t; }},
	    {"1 - sqrt(t)", "t", 0.0, 1.0, [](double t) { return 1 - std::sqrt(t); }},
	    {"1 - t", "t", 0.0, 1.0, [](double t) { return 1 - t; }},
	};
	for (const auto& c : cases) {
		const auto e = parse(c.src, {c.var});
		for (int i = 0; i <= 100; ++i) {
			const double x = c.lo + (c.hi - c.lo) * i / 100.0;
			CHECK(std::fabs(e(x) - c.fn(x)) <= 1e-12);
		}
	}
	const auto cubic = parse("a * b * b", {"a", "b"});
	for (int i = 0; i <= 10; ++i)
		for (int j = 0; j <= 10; ++j)
			CHECK(std::fabs(cubic(i / 10.0, j / 10.0) - i / 10.0 * (j / 10.0) * (j / 10.0)) <= 1e-12);
}

TEST_CASE("monotonicity on a grid")
{
	CHECK(check_monotone(parse("x ^ 2"), "x", 0.0, 1.0, Direction::Increasing, 0.01).holds);
	CHECK(check_monotone(parse("0.5 * (x + 1)"), "x", 0.0, 1.0, Direction::Increasing, 0.01).holds);
	const auto v = check_monotone(parse("-2 * x ^ 2 + 2 * x"), "x", 0.0, 1.0, Direction::Increasing, 0.01);
	REQUIRE_FALSE(v.holds);
	CHECK(v.x1 >= 0.49);
	CHECK(v.x2 > v.x1);
	CHECK(v.y2 <= v.y1);
	CHECK(v.evidence.describe() == "grid(0.01)");
	CHECK_THROWS_AS(check_monotone(parse("x - 2"), "x", 0.0, 1.0, Direction::Increasing, 0.01), EvalError);
	CHECK_THROWS_AS(check_monotone(parse("x"), "x", 0.0, 1.0, Direction::Increasing, 0.0), InputError);
}
