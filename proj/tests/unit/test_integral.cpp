#include <catch_amalgamated.hpp>

#include <cmath>

#include "sugeno/integral.hpp"
#include "sugeno/random.hpp"

using namespace sugeno;

namespace {

SurvivalScenario survival(std::vector<std::pair<Interval, const char*>> parts)
{
	std::vector<SurvivalSegment> segs;
	for (const auto& [iv, src] : parts)
		segs.push_back({iv, parse(src, {"t"})});
	return SurvivalScenario(1.0, std::move(segs));
}

// brute force over t in [0, bound] for a plain function of t
double dense_sup(const FusionOp& op, const SurvivalScenario& sc, int n)
{
	double best = 0.0;
	for (int i = 0; i <= n; ++i) {
		const double t = sc.bound() * i / n;
		best = std::max(best, op(t, sc(t)));
	}
	return best;
}

} // namespace

TEST_CASE("exact integrals of simple functions")
{
	SECTION("opposite-Sugeno of a scaled indicator")
	{
		const auto m = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.9, 0.9, 1});
		const auto f = SimpleFunction::indicator(2, 1, 0.25);
		const auto r = integrate_simple(FusionOp::lukasiewicz(), m, 1, f);
		CHECK(r.value == Catch::Approx(0.15).margin(1e-15));
		CHECK(r.method == IntegralMethod::ExactCandidates);
		CHECK(r.evidence.describe() == "exact");
		CHECK(opposite_sugeno(m, 1, SimpleFunction::indicator(2, 1, 0.5)).value == Catch::Approx(0.4));
	}
	SECTION("zero function")
	{
		const auto m = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.3, 0.6, 1});
		for (const auto& op : {FusionOp::min(), FusionOp::prod(), FusionOp::lukasiewicz()})
			CHECK(integrate_simple(op, m, 3, SimpleFunction({0, 0})).value == 0.0);
	}
	SECTION("two atoms under min")
	{
		const auto m = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.3, 0.6, 1});
		const SimpleFunction f({0.2, 0.7});
		const auto r = sugeno::sugeno(m, 3, f);
		CHECK(r.value == 0.6);
		CHECK(r.argmax == 0.7);
		REQUIRE(r.candidates.size() >= 2);
		CHECK(r.candidates[0].term == 0.2);
		CHECK(r.candidates[1].term == 0.6);
		CHECK(oracle_grid_integral(FusionOp::min(), m, 3, f, 0.01) == Catch::Approx(0.6).margin(0.01));
	}
	SECTION("named wrappers")
	{
		const auto m = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.4, 0.5, 1});
		CHECK(shilkret(m, 3, SimpleFunction({0.7, 0.7})).value == Catch::Approx(0.7));
		CHECK(seminormed(FusionOp::prod(), m, 3, SimpleFunction({0.7, 0.7})).value == Catch::Approx(0.7));
		CHECK(sugeno::sugeno(m, 1, SimpleFunction({0.7, 0.9})).value == 0.4);
	}
	SECTION("finite discretisation of the two-level function")
	{
		// atoms stand for [0, 0.5] and (0.5, 1]; necessity with possibility (1, 0.75)
		const auto m = necessity_from_possibility(FiniteSpace::numbered(2), {1.0, 0.75});
		CHECK(sugeno::sugeno(m, 3, SimpleFunction({1.0, 0.25})).value == 0.25);
	}
	SECTION("infinite bound")
	{
		const auto m = MonotoneMeasure::from_table(FiniteSpace::numbered(1), {0, infinity});
		const auto r = integrate_simple(FusionOp::prod(infinity), m, 1, SimpleFunction({0.0}, infinity));
		CHECK(r.value == 0.0);
		CHECK(integrate_simple(FusionOp::prod(infinity), m, 1, SimpleFunction({2.0}, infinity)).value == infinity);
	}
	SECTION("domain errors")
	{
		const auto m = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.3, 0.6, 1});
		CHECK_THROWS_AS(sugeno::sugeno(m, 4, SimpleFunction({0.1, 0.2})), InputError);
		CHECK_THROWS_AS(sugeno::sugeno(m, 3, SimpleFunction({0.1})), InputError);
		CHECK_THROWS_AS(SimpleFunction({1.2}), InputError);
	}
}

TEST_CASE("non-left-continuous operations fall back to the grid")
{
	FusionFlags f;
	f.non_decreasing = true;
	const auto op = FusionOp::custom("prod-nolc", parse("a * b", {"a", "b"}), 1.0, f);
	const auto m = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.3, 0.6, 1});
	const auto r = integrate_simple(op, m, 3, SimpleFunction({0.2, 0.7}));
	CHECK(r.method == IntegralMethod::Grid);
	CHECK_FALSE(r.notes.empty());
	CHECK(r.value == Catch::Approx(0.42).margin(0.01));
}

TEST_CASE("q-integrals")
{
	const auto m = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.7, 0.2, 1});
	const auto ind = SimpleFunction::indicator(2, 1, 1.0);
	CHECK(q_integral(FusionOp::godel(), m, ind).value == 1.0);
	CHECK(q_integral(FusionOp::godel(), m, SimpleFunction({0, 0})).value == 0.0);
	CHECK(q_integral(FusionOp::godel_contra(), m, SimpleFunction({0, 0})).value == 0.0);
	CHECK_THROWS_AS(q_integral(FusionOp::godel(), MonotoneMeasure::from_table(FiniteSpace::numbered(1), {0, 0.5}),
	                           SimpleFunction({0.2})),
	                InputError);
	CHECK_THROWS_AS(q_integral(FusionOp::godel().with_flags({}), m, ind), InputError);

	Rng rng(31);
	for (int t = 0; t < 100; ++t) {
		const std::size_t n = rng.between(1, 4);
		const auto cap = random_capacity(rng, n);
		const auto f = random_function(rng, n, n, 1.0);
		for (const auto& s : {FusionOp::min(), FusionOp::prod(), FusionOp::lukasiewicz()}) {
			const double q = q_integral(s.swapped(), cap, f).value;
			const double direct = seminormed(s, cap, cap.space().universe(), f).value;
			REQUIRE(q == Catch::Approx(direct).margin(1e-15));
		}
	}
}

TEST_CASE("survival integrals")
{
	SECTION("bisection reproduces the continuum values")
	{
		const auto g1 = survival({{Interval::closed(0, 0.25), "1 - t"},
		                          {Interval::left_open(0.25, 0.5), "1 - 2 * t"},
		                          {Interval::left_open(0.5, 1), "0"}});
		const auto g2 = survival({{Interval::closed(0, 0.25), "1"}, {Interval::left_open(0.25, 1), "0"}});
		const auto g3 = survival({{Interval::closed(0, 1), "1 - sqrt(t)"}});
		const auto r1 = integrate_survival(FusionOp::min(), g1);
		CHECK(r1.method == IntegralMethod::Bisection);
		CHECK(std::fabs(r1.value - 1.0 / 3.0) <= 1e-8);
		CHECK(std::fabs(integrate_survival(FusionOp::min(), g2).value - 0.25) <= 1e-8);
		CHECK(std::fabs(integrate_survival(FusionOp::min(), g3).value - (3 - std::sqrt(5.0)) / 2) <= 1e-8);
	}
	SECTION("quadratic with a flat top")
	{
		const auto f = survival({{Interval::closed(0, 0.5), "1"},
		                         {Interval::left_open(0.5, 1), "1 - 2 * sqrt(0.5 * (t - 0.5))"}});
		const auto g = survival({{Interval::closed(0, 0.5), "2 * sqrt(0.5 * (0.5 - t))"},
		                         {Interval::left_open(0.5, 1), "0"}});
		CHECK(std::fabs(integrate_survival(FusionOp::min(), f).value - (2 - std::sqrt(2.0))) <= 1e-8);
		CHECK(std::fabs(integrate_survival(FusionOp::min(), g).value - (std::sqrt(2.0) - 1)) <= 1e-8);
	}
	SECTION("zero survival function")
	{
		const auto zero = survival({{Interval::closed(0, 1), "0"}});
		CHECK(integrate_survival(FusionOp::min(), zero).value == 0.0);
		CHECK(integrate_survival(FusionOp::prod(), zero).value == 0.0);
	}
	SECTION("other operations use grid plus refinement")
	{
		const auto g3 = survival({{Interval::closed(0, 1), "1 - sqrt(t)"}});
		const auto r = integrate_survival(FusionOp::prod(), g3);
		CHECK(r.method == IntegralMethod::Grid);
		// t (1 - sqrt t) peaks at t = 4/9 with value 4/27
		CHECK(r.value == Catch::Approx(4.0 / 27.0).margin(1e-9));
		CHECK(r.value >= dense_sup(FusionOp::prod(), g3, 100000) - 1e-12);
	}
}

TEST_CASE("candidate set agrees with the level-grid oracle")
{
	Rng rng(32);
	for (int t = 0; t < 300; ++t) {
		const std::size_t n = rng.between(1, 6);
		const auto m = random_measure(rng, n, rng.uniform(0.2, 1.0));
		const auto f = random_function(rng, n, 6, 1.0);
		const Mask d = static_cast<Mask>(rng.below(std::size_t{1} << n));
		for (const auto& op : {FusionOp::min(), FusionOp::prod(), FusionOp::lukasiewicz()}) {
			const double exact = integrate_simple(op, m, d, f).value;
			const double oracle = oracle_grid_integral(op, m, d, f, 1e-3);
			REQUIRE(oracle <= exact + 1e-12);
			REQUIRE(exact - oracle <= 1e-3 + 1e-12);
		}
	}
}

TEST_CASE("monotone in the function and in the measure")
{
	Rng rng(33);
	for (int t = 0; t < 300; ++t) {
		const std::size_t n = rng.between(1, 5);
		const auto m = random_measure(rng, n, 1.0);
		const auto f = random_function(rng, n, n, 1.0);
		std::vector<double> up = f.values();
		for (auto& x : up)
			x = std::min(1.0, x + rng.on_grid(0.1) * rng.coin());
		std::vector<double> bigger = m.table();
		for (std::size_t a = 1; a < bigger.size(); ++a)
			bigger[a] = std::min(1.0, bigger[a] * 1.2);
		const auto m2 = MonotoneMeasure::from_table(m.space(), bigger);
		for (const auto& op : {FusionOp::min(), FusionOp::prod(), FusionOp::lukasiewicz()}) {
			const Mask u = m.space().universe();
			REQUIRE(integrate_simple(op, m, u, f).value <= integrate_simple(op, m, u, SimpleFunction(up)).value);
			REQUIRE(integrate_simple(op, m, u, f).value <= integrate_simple(op, m2, u, f).value);
		}
	}
}

TEST_CASE("indicator law and restriction identity")
{
	Rng rng(34);
	for (int t = 0; t < 300; ++t) {
		const std::size_t n = rng.between(1, 5);
		const auto m = random_capacity(rng, n);
		const Mask a = random_nonempty_set(rng, n);
		const double c = rng.on_grid(0.01);
		const auto h = random_function(rng, n, n, 1.0);
		std::vector<double> restricted(n);
		const Mask d = random_nonempty_set(rng, n);
		for (std::size_t i = 0; i < n; ++i)
			restricted[i] = d & (Mask{1} << i) ? h[i] : 0.0;
		for (const auto& s : {FusionOp::min(), FusionOp::prod(), FusionOp::lukasiewicz()}) {
			REQUIRE(seminormed(s, m, m.space().universe(), SimpleFunction::indicator(n, a, c)).value == s(c, m(a)));
			REQUIRE(seminormed(s, m, m.space().universe(), SimpleFunction(restricted)).value ==
			        seminormed(s, m, d, h).value);
		}
	}
}

TEST_CASE("monotone transforms commute with the supremum")
{
	// psi(sup terms) = sup psi(terms) for non-decreasing continuous psi
	Rng rng(35);
	const auto psi = [](double x) { return std::sqrt(x); };
	for (int t = 0; t < 200; ++t) {
		const std::size_t n = rng.between(1, 5);
		const auto m = random_capacity(rng, n);
		const auto f = random_function(rng, n, n, 1.0);
		const auto r = sugeno::sugeno(m, m.space().universe(), f);
		double sup_psi = 0.0;
		for (const auto& c : r.candidates)
			sup_psi = std::max(sup_psi, psi(c.term));
		REQUIRE(std::fabs(psi(r.value) - sup_psi) <= 1e-12);
	}
}
