#ifndef SUGENO_PROPERTIES_HPP
#define SUGENO_PROPERTIES_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sugeno/chebyshev.hpp"
#include "sugeno/dependence.hpp"
#include "sugeno/fusion.hpp"
#include "sugeno/integral.hpp"
#include "sugeno/measure.hpp"
#include "sugeno/random.hpp"

namespace sugeno {

/// Outcome of a seeded randomized property run.
struct PropertyReport
{
	std::string name;
	std::size_t trials = 0;
	std::size_t exercised = 0; ///< trials whose premises held
	std::size_t failures = 0;
	std::string first_failure;
	std::uint64_t seed = 0;
	Evidence evidence;

	bool passed() const { return failures == 0 && trials > 0; }

	void fail(std::string what)
	{
		if (failures++ == 0)
			first_failure = std::move(what);
	}
};

namespace detail {

inline FusionOp pick_op(Rng& rng)
{
	switch (rng.below(3)) {
	case 0: return FusionOp::min();
	case 1: return FusionOp::prod();
	default: return FusionOp::lukasiewicz();
	}
}

inline ShapeFunction pick_power(Rng& rng)
{
	static const double exps[] = {0.5, 1.0, 2.0, 3.0};
	return ShapeFunction::power(exps[rng.below(4)]);
}

inline std::string describe(const SimpleFunction& f)
{
	std::string s = "(";
	for (std::size_t i = 0; i < f.size(); ++i)
		s += (i ? ", " : "") + format_number(f[i]);
	return s + ")";
}

} // namespace detail

/// Exact candidate-set integral against the brute-force level grid.
inline PropertyReport property_exact_vs_oracle(std::size_t trials = 1000, std::uint64_t seed = 1,
                                               double oracle_step = 1e-4)
{
	PropertyReport r{"exact-vs-oracle", trials, 0, 0, {}, seed, Evidence::random_trials(trials, seed)};
	Rng rng(seed);
	for (std::size_t t = 0; t < trials; ++t) {
		const std::size_t n = rng.between(1, 5);
		const auto m = random_measure(rng, n, rng.uniform(0.2, 1.0));
		const auto f = random_function(rng, n, n, 1.0);
		const Mask d = static_cast<Mask>(rng.below(std::size_t{1} << n));
		const auto op = detail::pick_op(rng);
		const double exact = integrate_simple(op, m, d, f).value;
		const double oracle = oracle_grid_integral(op, m, d, f, oracle_step);
		++r.exercised;
		if (oracle > exact + 1e-12 || exact - oracle > oracle_step + 1e-12)
			r.fail(op.name() + " on f = " + detail::describe(f) + ": exact " + format_number(exact) + ", oracle " +
			       format_number(oracle));
	}
	return r;
}

/// The two-variable and one-variable scalar conditions reach the same verdict.
inline PropertyReport property_condition_forms_agree(std::size_t trials = 200, std::uint64_t seed = 2,
                                                     double step = 0.05)
{
	PropertyReport r{"condition-forms-agree", trials, 0, 0, {}, seed, Evidence::random_trials(trials, seed)};
	Rng rng(seed);
	CheckOptions opt;
	opt.step = step;
	for (std::size_t t = 0; t < trials; ++t) {
		InequalityConfig cfg;
		cfg.inner = detail::pick_op(rng);
		cfg.outer = detail::pick_op(rng);
		for (auto& c : cfg.circ)
			c = detail::pick_op(rng);
		for (int i = 0; i < 3; ++i) {
			cfg.phi[i] = detail::pick_power(rng);
			cfg.psi[i] = detail::pick_power(rng);
		}
		if (rng.coin()) {
			std::vector<double> v{0.0, 1.0};
			for (std::size_t i = rng.between(0, 3); i > 0; --i)
				v.push_back(rng.on_grid(0.05));
			cfg.cd = CdDomain::of_values(v);
		}
		const auto rep = c1_iff_c2(cfg, opt);
		++r.exercised;
		if (!rep.agree)
			r.fail("circ " + cfg.circ[0].name() + "/" + cfg.circ[1].name() + "/" + cfg.circ[2].name() + " on " +
			       cfg.cd.describe() + ": " + to_string(rep.c1.status) + " vs " + to_string(rep.c2.status));
	}
	return r;
}

/// Chebyshev inequality for the Sugeno integral on random comonotone pairs.
inline PropertyReport property_comonotone_chebyshev(std::size_t trials = 1000, std::uint64_t seed = 3)
{
	PropertyReport r{"comonotone-chebyshev", trials, 0, 0, {}, seed, Evidence::random_trials(trials, seed)};
	Rng rng(seed);
	const FusionOp inners[] = {FusionOp::prod(), FusionOp::lukasiewicz(), FusionOp::min()};
	for (std::size_t t = 0; t < trials; ++t) {
		const std::size_t n = rng.between(1, 5);
		const auto m = random_capacity(rng, n);
		const auto [f, g] = random_comonotone_pair(rng, n, 1.0);
		const Mask a = random_nonempty_set(rng, n);
		const auto& inner = inners[t % 3];
		const auto phi = detail::pick_power(rng);
		const ShapeTriple phis{phi, phi, phi};
		const auto psi = phi.inverse();
		const ShapeTriple psis{psi, psi, psi};
		const auto rep = sugeno_chebyshev(m, f, g, a, phis, psis, inner);
		++r.exercised;
		if (rep.outcome != Outcome::Holds)
			r.fail(inner.name() + " with " + phi.name() + " on f = " + detail::describe(f) + ", g = " +
			       detail::describe(g) + ": " + to_string(rep.outcome));
	}
	return r;
}

/// Inequality for arbitrary functions under necessity measures (min circ, product inner).
inline PropertyReport property_necessity_any_functions(std::size_t measures = 500, std::uint64_t seed = 4,
                                                       std::size_t functions_per_measure = 4)
{
	PropertyReport r{"necessity-any-functions", measures, 0, 0, {}, seed, Evidence::random_trials(measures, seed)};
	Rng rng(seed);
	InequalityConfig cfg;
	for (std::size_t t = 0; t < measures; ++t) {
		const auto m = random_necessity(rng, rng.between(1, 4));
		const auto rep = any_functions_check(cfg, m, functions_per_measure, seed * 1000 + t);
		++r.exercised;
		if (rep.outcome != Outcome::Holds)
			r.fail("necessity measure #" + std::to_string(t) + ": " + to_string(rep.outcome));
	}
	return r;
}

/**
 * Sufficient conditions for m-positive dependence:
 *  - "pairs": m(C and D) >= m(C) min m(D) for all sets (minitive measures);
 *  - "dual-subadditive": subadditive dual under the Lukasiewicz triangle;
 *  - "godel-small": Godel triangle with m(X) <= 0.5, A = B.
 */
inline std::array<PropertyReport, 3> property_dependence_examples(std::size_t trials = 300, std::uint64_t seed = 5)
{
	std::array<PropertyReport, 3> out{
	    PropertyReport{"dependence-all-pairs", trials, 0, 0, {}, seed, Evidence::random_trials(trials, seed)},
	    PropertyReport{"dependence-dual-subadditive", trials, 0, 0, {}, seed + 1,
	                   Evidence::random_trials(trials, seed + 1)},
	    PropertyReport{"dependence-godel-small", trials, 0, 0, {}, seed + 2, Evidence::random_trials(trials, seed + 2)}};
	auto run = [&](PropertyReport& r, auto&& make_measure, const FusionOp& triangle, bool same_set) {
		Rng rng(r.seed);
		for (std::size_t t = 0; t < r.trials; ++t) {
			const std::size_t n = rng.between(1, 4);
			const auto m = make_measure(rng, n);
			if (!m)
				continue;
			++r.exercised;
			const auto f = random_function(rng, n, n, 1.0);
			const auto g = random_function(rng, n, n, 1.0);
			const Mask a = random_nonempty_set(rng, n);
			const Mask b = same_set ? a : random_nonempty_set(rng, n);
			const auto v = is_m_positively_dependent({*m, f, g, a, b, triangle, 1.0, true});
			if (!v.holds)
				r.fail("f = " + detail::describe(f) + ", g = " + detail::describe(g) + " at levels (" +
				       format_number(v.witness[0]) + ", " + format_number(v.witness[1]) + ")");
		}
	};
	run(out[0],
	    [](Rng& rng, std::size_t n) -> std::optional<MonotoneMeasure> {
		    auto m = random_necessity(rng, n);
		    if (!measure_supports_all_pairs(m, FusionOp::min()).holds)
			    return std::nullopt;
		    return m;
	    },
	    FusionOp::min(), false);
	run(out[1],
	    [](Rng& rng, std::size_t n) -> std::optional<MonotoneMeasure> {
		    auto m = random_supermodular(rng, n);
		    if (!is_subadditive(dual(m)))
			    return std::nullopt;
		    return m;
	    },
	    FusionOp::lukasiewicz(), false);
	run(out[2],
	    [](Rng& rng, std::size_t n) -> std::optional<MonotoneMeasure> {
		    return random_measure(rng, n, rng.uniform(0.05, 0.5));
	    },
	    FusionOp::godel(), true);
	return out;
}

/// Min dominates the Lukasiewicz operation on the grid.
inline PropertyReport property_min_dominates_w(double step = 0.01)
{
	PropertyReport r{"min-dominates-lukasiewicz", 1, 1, 0, {}, 0, Evidence::grid(step)};
	CheckOptions opt;
	opt.step = step;
	const auto v = dominates(FusionOp::min(), FusionOp::lukasiewicz(), opt);
	if (!v.holds) {
		std::string w;
		for (double x : v.witness)
			w += (w.empty() ? "" : ", ") + format_number(x);
		r.fail("violated at (" + w + ")");
	}
	return r;
}

/**
 * Whenever every stage of the forward pipeline passes, the integral
 * inequality holds. Random configurations with comonotone pairs on A = B.
 */
inline PropertyReport property_forward_soundness(std::size_t trials = 1000, std::uint64_t seed = 6)
{
	PropertyReport r{"forward-soundness", trials, 0, 0, {}, seed, Evidence::random_trials(trials, seed)};
	Rng rng(seed);
	CheckOptions opt;
	opt.step = 0.1;
	for (std::size_t t = 0; t < trials; ++t) {
		InequalityConfig cfg;
		cfg.inner = detail::pick_op(rng);
		cfg.outer = detail::pick_op(rng);
		for (auto& c : cfg.circ)
			c = detail::pick_op(rng);
		for (int i = 0; i < 3; ++i) {
			cfg.phi[i] = detail::pick_power(rng);
			cfg.psi[i] = detail::pick_power(rng);
		}
		const std::size_t n = rng.between(1, 3);
		const auto m = random_capacity(rng, n);
		const auto [f, g] = random_comonotone_pair(rng, n, 1.0);
		const Mask a = random_nonempty_set(rng, n);
		const auto rep = forward_check(cfg, m, f, g, a, a, opt, true);
		bool all = true;
		for (const auto& s : rep.stages)
			if (s.name != "inequality")
				all = all && s.passed;
		if (!all)
			continue;
		++r.exercised;
		if (rep.outcome != Outcome::Holds)
			r.fail("trial " + std::to_string(t) + ": inequality fails after all stages passed");
	}
	return r;
}

/// Every property run with its default size.
inline std::vector<PropertyReport> run_all_properties()
{
	std::vector<PropertyReport> out;
	out.push_back(property_exact_vs_oracle());
	out.push_back(property_condition_forms_agree());
	out.push_back(property_comonotone_chebyshev());
	out.push_back(property_necessity_any_functions());
	for (auto& r : property_dependence_examples())
		out.push_back(std::move(r));
	out.push_back(property_min_dominates_w());
	out.push_back(property_forward_soundness());
	return out;
}

} // namespace sugeno

#endif
