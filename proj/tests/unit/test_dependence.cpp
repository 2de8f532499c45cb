#include <catch_amalgamated.hpp>

#include "sugeno/dependence.hpp"
#include "sugeno/random.hpp"

using namespace sugeno;

TEST_CASE("comonotonicity")
{
	const SimpleFunction f({0.1, 0.5, 0.5, 0.9});
	CHECK(is_comonotone(f, f, 15));
	CHECK(is_comonotone(SimpleFunction::indicator(2, 1, 0.5), SimpleFunction::indicator(2, 1, 0.8), 3));
	const auto v = is_comonotone(SimpleFunction({1, 0}), SimpleFunction({0, 1}), 3);
	REQUIRE_FALSE(v.holds);
	CHECK(v.x == 0u);
	CHECK(v.y == 1u);
	CHECK(is_comonotone(SimpleFunction({1, 0}), SimpleFunction({0, 1}), 1));
	CHECK_THROWS_AS(is_comonotone(SimpleFunction({1}), SimpleFunction({0, 1}), 1), InputError);
}

TEST_CASE("m-positive dependence")
{
	SECTION("minitive measures support any pair")
	{
		const auto m = necessity_from_possibility(FiniteSpace::numbered(3), {1, 0.3, 0.6});
		const SimpleFunction f({0.9, 0.1, 0.4}), g({0.2, 0.8, 0.5});
		for (const auto& tri : {FusionOp::min(), FusionOp::prod(), FusionOp::lukasiewicz()})
			for (Mask a = 1; a < 8; ++a)
				for (Mask b = 1; b < 8; ++b)
					REQUIRE(is_m_positively_dependent({m, f, g, a, b, tri, 1.0, true}).holds);
	}
	SECTION("Godel triangle with small total mass")
	{
		const auto m = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.2, 0.3, 0.5});
		CHECK(is_m_positively_dependent({m, SimpleFunction({1, 0}), SimpleFunction({0, 1}), 3, 3,
		                                 FusionOp::godel(), 1.0, true})
		          .holds);
	}
	SECTION("product triangle and disjoint indicators")
	{
		const auto m = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.5, 0.5, 1});
		const auto v = is_m_positively_dependent(
		    {m, SimpleFunction({1, 0}), SimpleFunction({0, 1}), 3, 3, FusionOp::prod(), 1.0, true});
		REQUIRE_FALSE(v.holds);
		CHECK(v.witness == std::vector<double>{1.0, 1.0});
		CHECK(v.lhs == 0.0);
		CHECK(v.rhs == 0.25);
		CHECK_FALSE(v.warnings.empty());
	}
	SECTION("range escape is an error unless allowed")
	{
		const auto m = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.5, 0.5, 1});
		CHECK_THROWS_WITH(is_m_positively_dependent({m, SimpleFunction({1, 0}), SimpleFunction({0, 1}), 3, 3,
		                                             FusionOp::prod(), 1.0, false}),
		                  Catch::Matchers::ContainsSubstring("--allow-range-escape"));
	}
	SECTION("bad queries")
	{
		const auto m = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.5, 0.5, 1});
		CHECK_THROWS_AS(is_m_positively_dependent({m, SimpleFunction({1, 0}), SimpleFunction({0, 1}), 3, 3,
		                                           FusionOp::min(), 0.5, false}),
		                InputError);
		CHECK_THROWS_AS(is_m_positively_dependent({m, SimpleFunction({1}), SimpleFunction({0, 1}), 3, 3,
		                                           FusionOp::min(), 1.0, false}),
		                InputError);
	}
}

TEST_CASE("set-pair support")
{
	CHECK(measure_supports_all_pairs(necessity_from_possibility(FiniteSpace::numbered(3), {0.2, 1, 0.7}),
	                                 FusionOp::min())
	          .holds);
	const auto sq = distorted_probability(FiniteSpace::numbered(3), {0.2, 0.3, 0.5}, parse("x ^ 2"));
	CHECK(measure_supports_all_pairs(sq, FusionOp::lukasiewicz(), true).holds);
	const auto uniform = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.5, 0.5, 1});
	const auto v = measure_supports_all_pairs(uniform, FusionOp::min());
	REQUIRE_FALSE(v.holds);
	CHECK(v.first == 1u);
	CHECK(v.second == 2u);
	CHECK(v.lhs == 0.0);
	CHECK(v.rhs == 0.5);
}

TEST_CASE("condition Z1")
{
	CHECK(condition_z1(necessity_from_possibility(FiniteSpace::numbered(3), {1, 0.4, 0.7}), FusionOp::min()).holds);
	CHECK(condition_z1(MonotoneMeasure::from_table(FiniteSpace::numbered(1), {0, 0.7}), FusionOp::min()).holds);
	const auto m = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.3, 0.6, 1});
	const auto v = condition_z1(m, FusionOp::min());
	REQUIRE_FALSE(v.holds);
	CHECK(v.witness == std::vector<double>{0.3, 0.6});
}

TEST_CASE("comonotone pairs are dependent under min")
{
	Rng rng(41);
	for (int t = 0; t < 500; ++t) {
		const std::size_t n = rng.between(1, 5);
		const auto m = random_measure(rng, n, rng.uniform(0.2, 1.0));
		const auto [f, g] = random_comonotone_pair(rng, n, 1.0);
		const Mask a = random_nonempty_set(rng, n);
		REQUIRE(is_comonotone(f, g, a));
		REQUIRE(is_m_positively_dependent({m, f, g, a, a, FusionOp::min(), 1.0, false}).holds);
	}
}

TEST_CASE("set-pair support implies dependence")
{
	Rng rng(42);
	std::size_t exercised = 0;
	for (int t = 0; t < 400; ++t) {
		const std::size_t n = rng.between(1, 4);
		const auto m = random_capacity(rng, n);
		const auto& tri = t % 2 ? FusionOp::prod() : FusionOp::lukasiewicz();
		if (!measure_supports_all_pairs(m, tri, true).holds)
			continue;
		++exercised;
		const auto f = random_function(rng, n, n, 1.0);
		const auto g = random_function(rng, n, n, 1.0);
		const Mask a = random_nonempty_set(rng, n), b = random_nonempty_set(rng, n);
		REQUIRE(is_m_positively_dependent({m, f, g, a, b, tri, 1.0, true}).holds);
	}
	CHECK(exercised > 20);
}
