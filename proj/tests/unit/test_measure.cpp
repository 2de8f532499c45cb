#include <catch_amalgamated.hpp>

#include <cmath>

#include "sugeno/measure.hpp"
#include "sugeno/random.hpp"

using namespace sugeno;

namespace {

bool tables_close(const MonotoneMeasure& a, const MonotoneMeasure& b, double tol = 1e-12)
{
	if (a.table().size() != b.table().size())
		return false;
	for (std::size_t i = 0; i < a.table().size(); ++i)
		if (std::fabs(a.table()[i] - b.table()[i]) > tol)
			return false;
	return true;
}

} // namespace

TEST_CASE("spaces and masks")
{
	const FiniteSpace s({"w1", "w2", "w3"});
	CHECK(s.universe() == 7u);
	CHECK(s.mask_of({"w1", "w3"}) == 5u);
	CHECK(s.describe(5) == "{w1, w3}");
	CHECK(s.index_of("w2") == 1u);
	CHECK_FALSE(s.index_of("w4"));
	CHECK_THROWS_AS(FiniteSpace({"a", "a"}), InputError);
	CHECK_THROWS_AS(FiniteSpace(std::vector<std::string>{}), InputError);
	CHECK_THROWS_AS(FiniteSpace::numbered(25), InputError);
}

TEST_CASE("table validation")
{
	CHECK(MonotoneMeasure::from_table(FiniteSpace::numbered(1), {0, 1}).is_capacity());
	const double p = 0.3;
	const auto m = MonotoneMeasure::from_table(FiniteSpace({"w1", "w2"}), {0, 0.8, p, 1});
	CHECK(m(2) == p);
	CHECK(m.total() == 1.0);

	CHECK_THROWS_AS(MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.5, 1.2, 1}), InputError);
	CHECK_THROWS_AS(MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.5, 1}), InputError);
	CHECK_THROWS_AS(MonotoneMeasure::from_table(FiniteSpace::numbered(1), {0, 0}), InputError);
	CHECK_THROWS_AS(MonotoneMeasure::from_table(FiniteSpace::numbered(1), {0.1, 1}), InputError);
	try {
		(void)MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.5, 1.2, 1});
	} catch (const InputError& e) {
		CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("m({2}) = 1.2 > m({1, 2}) = 1"));
	}
	CHECK_THROWS_AS(MonotoneMeasure::from_entries(FiniteSpace::numbered(2), {{0, 0}, {1, 0.5}, {3, 1}}), InputError);
	CHECK(MonotoneMeasure::from_entries(FiniteSpace::numbered(1), {{0, 0}, {1, infinity}}).total() == infinity);
}

TEST_CASE("necessity measures")
{
	const auto all = necessity_from_possibility(FiniteSpace::numbered(3), {1, 1, 1});
	for (Mask a = 0; a < 7; ++a)
		CHECK(all(a) == 0.0);
	CHECK(all(7) == 1.0);

	const auto m = necessity_from_possibility(FiniteSpace::numbered(2), {1, 0.4});
	CHECK(m(1) == Catch::Approx(0.6).margin(1e-15));
	CHECK(m(2) == 0.0);
	CHECK(m(3) == 1.0);
	CHECK(is_minitive(m));
	CHECK_THROWS_AS(necessity_from_possibility(FiniteSpace::numbered(2), {0.9, 0.4}), InputError);

	Rng rng(21);
	for (int t = 0; t < 50; ++t) {
		const auto r = random_necessity(rng, rng.between(1, 5));
		REQUIRE(is_minitive(r));
		REQUIRE(r.is_capacity());
	}
}

TEST_CASE("distorted probabilities")
{
	const auto id = distorted_probability(FiniteSpace::numbered(3), {0.2, 0.3, 0.5}, parse("x"));
	CHECK(id(3) == Catch::Approx(0.5));
	CHECK(id(6) == Catch::Approx(0.8));

	const auto sq = distorted_probability(FiniteSpace::numbered(2), {0.5, 0.5}, parse("x ^ 2"));
	CHECK(sq(1) == 0.25);
	CHECK(sq(2) == 0.25);
	CHECK(sq(3) == 1.0);
	CHECK(is_supermodular(sq));
	CHECK(is_supermodular(id));

	CHECK_THROWS_WITH(distorted_probability(FiniteSpace::numbered(2), {0.5, 0.5}, parse("sqrt(x)")),
	                  Catch::Matchers::ContainsSubstring("not convex"));
	CHECK_THROWS_AS(distorted_probability(FiniteSpace::numbered(2), {0.5, 0.4}, parse("x")), InputError);
	CHECK_THROWS_AS(distorted_probability(FiniteSpace::numbered(2), {0.5, 0.5}, parse("0.5 * x")), InputError);
}

TEST_CASE("dual capacities")
{
	const auto uniform = distorted_probability(FiniteSpace::numbered(3), {0.25, 0.25, 0.5}, parse("x"));
	CHECK(tables_close(dual(uniform), uniform));

	const std::vector<double> pi{1, 0.4, 0.7};
	const auto nec = necessity_from_possibility(FiniteSpace::numbered(3), pi);
	const auto pos = dual(nec);
	for (Mask a = 1; a < 8; ++a) {
		double expected = 0.0;
		for (std::size_t i = 0; i < 3; ++i)
			if (a & (Mask{1} << i))
				expected = std::max(expected, pi[i]);
		CHECK(pos(a) == Catch::Approx(expected).margin(1e-15));
	}

	Rng rng(22);
	for (int t = 0; t < 100; ++t) {
		const auto m = random_capacity(rng, rng.between(1, 5));
		REQUIRE(tables_close(dual(dual(m)), m));
	}
	CHECK_THROWS_AS(dual(MonotoneMeasure::from_table(FiniteSpace::numbered(1), {0, 0.5})), InputError);
}

TEST_CASE("structural predicates")
{
	const auto two_valued = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0, 1, 1});
	CHECK(two_valued.range() == std::vector<double>{0.0, 1.0});

	const auto additive = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.5, 0.5, 1});
	CHECK(is_subadditive(additive));
	CHECK(is_supermodular(additive));
	const auto mv = check_minitive(additive);
	REQUIRE_FALSE(mv.holds);
	CHECK(mv.first == 1u);
	CHECK(mv.second == 2u);
	CHECK(mv.lhs == 0.0);
	CHECK(mv.rhs == 0.5);

	const auto spiky = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.1, 0.1, 1});
	CHECK_FALSE(is_subadditive(spiky));
	CHECK(is_supermodular(spiky));

	const auto range = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.3, 0.3 + 1e-14, 1}).range();
	CHECK(range.size() == 3);
	Rng rng(1);
	CHECK_THROWS_AS(is_minitive(random_capacity(rng, 13)), InputError);
}

TEST_CASE("supermodular capacities have subadditive duals")
{
	Rng rng(23);
	for (int t = 0; t < 200; ++t) {
		const auto m = random_supermodular(rng, rng.between(1, 5));
		REQUIRE(is_supermodular(m));
		REQUIRE(is_subadditive(dual(m)));
	}
}

TEST_CASE("random constructors produce valid measures")
{
	Rng rng(24);
	for (int t = 0; t < 200; ++t) {
		const std::size_t n = rng.between(1, 6);
		const auto m = random_measure(rng, n, rng.uniform(0.1, 2.0));
		REQUIRE_NOTHROW(MonotoneMeasure::from_table(m.space(), m.table()));
	}
}

TEST_CASE("survival scenarios")
{
	const SurvivalScenario sc(1.0, {{Interval::closed(0.0, 0.25), parse("1 - t", {"t"})},
	                                {Interval::left_open(0.25, 0.5), parse("1 - 2 * t", {"t"})},
	                                {Interval::left_open(0.5, 1.0), parse("0", {"t"})}});
	CHECK(sc(0.25) == 0.75);
	CHECK(sc(0.3) == Catch::Approx(0.4));
	CHECK(sc(1.0) == 0.0);
	CHECK_THROWS_AS(sc(1.5), EvalError);

	CHECK_THROWS_WITH(SurvivalScenario(1.0, {{Interval::closed(0.0, 1.0), parse("t", {"t"})}}),
	                  Catch::Matchers::ContainsSubstring("increases"));
	CHECK_THROWS_WITH(SurvivalScenario(1.0, {{Interval::closed(0.0, 0.5), parse("1", {"t"})}}),
	                  Catch::Matchers::ContainsSubstring("uncovered"));
	CHECK_THROWS_WITH(SurvivalScenario(1.0, {{Interval::closed(0.0, 0.6), parse("1", {"t"})},
	                                         {Interval::closed(0.5, 1.0), parse("1", {"t"})}}),
	                  Catch::Matchers::ContainsSubstring("overlapping"));
	CHECK_THROWS_AS(SurvivalScenario(1.0, {{Interval::closed(0.0, 1.0), parse("0.5 - t", {"t"})}}), EvalError);
}
