#ifndef SUGENO_CHEBYSHEV_HPP
#define SUGENO_CHEBYSHEV_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sugeno/dependence.hpp"
#include "sugeno/error.hpp"
#include "sugeno/fusion.hpp"
#include "sugeno/grid.hpp"
#include "sugeno/integral.hpp"
#include "sugeno/measure.hpp"
#include "sugeno/random.hpp"
#include "sugeno/shape.hpp"

namespace sugeno {

/// Where the measure arguments c, d of a scalar condition range.
struct CdDomain
{
	bool finite = false;
	std::vector<double> values; ///< sorted, when finite
	double lo = 0.0;            ///< interval bounds otherwise
	double hi = 1.0;

	static CdDomain of_values(std::vector<double> v)
	{
		if (v.empty())
			throw InputError("value domain for c, d is empty");
		for (double x : v)
			if (std::isnan(x) || x < 0.0)
				throw InputError("values for c, d must be non-negative");
		std::sort(v.begin(), v.end());
		v.erase(std::unique(v.begin(), v.end()), v.end());
		return {true, std::move(v), 0.0, 0.0};
	}

	static CdDomain interval(double lo, double hi)
	{
		if (!(lo >= 0.0 && lo <= hi))
			throw InputError("invalid interval for c, d");
		return {false, {}, lo, hi};
	}

	double top() const { return finite ? values.back() : hi; }

	std::vector<double> points(const CheckOptions& opt) const { return finite ? values : make_axis(lo, hi, opt).points; }

	std::string describe() const
	{
		if (!finite)
			return Interval::closed(lo, hi).to_string();
		std::string s = "{";
		for (std::size_t i = 0; i < values.size(); ++i)
			s += (i ? ", " : "") + format_number(values[i]);
		return s + "}";
	}
};

/**
 * The operations, shapes and bounds of a Chebyshev-type condition
 *   psi1(phi1(a * b) o1 (c tri d)) >= psi2(phi2(a) o2 c) star psi3(phi3(b) o3 d)
 * and of the matching integral inequality.
 */
struct InequalityConfig
{
	FusionOp inner = FusionOp::prod();                  ///< combines f and g
	FusionOp outer = FusionOp::prod();                  ///< combines the two right-hand integrals
	std::array<FusionOp, 3> circ{FusionOp::min(), FusionOp::min(), FusionOp::min()};
	FusionOp triangle = FusionOp::min();
	ShapeTriple phi{};
	ShapeTriple psi{};
	double k = 1.0;
	double ybar = 1.0;
	CdDomain cd = CdDomain::interval(0.0, 1.0);
};

enum class Status { HoldsOnGrid, Violated, HypothesisFailed };

inline const char* to_string(Status s)
{
	switch (s) {
	case Status::HoldsOnGrid: return "holds_on_grid";
	case Status::Violated: return "violated";
	case Status::HypothesisFailed: return "hypothesis_failed";
	}
	return "?";
}

/// Verdict of a scalar condition scan. Violated carries a directly re-evaluated witness.
struct Verdict
{
	Status status = Status::HoldsOnGrid;
	std::vector<double> witness;
	double lhs = 0.0;
	double rhs = 0.0;
	std::string detail;
	Evidence evidence;
	std::size_t points = 0;
	bool budget_exhausted = false;
	std::vector<std::string> notes;
};

namespace detail {

inline double eval_ybar(double ybar, const CheckOptions& opt) { return std::isinf(ybar) ? opt.infinity_cap : ybar; }

inline Verdict hypothesis_failed(std::string detail)
{
	Verdict v;
	v.status = Status::HypothesisFailed;
	v.detail = std::move(detail);
	return v;
}

} // namespace detail

/// First violated structural hypothesis of a configuration, if any.
inline std::optional<std::string> validate_config(const InequalityConfig& cfg, const CheckOptions& opt = {})
{
	if (!(cfg.k > 0.0) || cfg.k > cfg.ybar)
		return "need 0 < k <= ybar (k = " + format_number(cfg.k) + ", ybar = " + format_number(cfg.ybar) + ")";
	const double y = detail::eval_ybar(cfg.ybar, opt);
	const double top = cfg.cd.top();
	try {
		for (int i = 0; i < 3; ++i) {
			const double py = cfg.phi[i](y);
			const double v = cfg.circ[i](py, top);
			if (v > py + opt.tolerance)
				return "phi" + std::to_string(i + 1) + "(ybar) o" + std::to_string(i + 1) + " " +
				       format_number(top) + " = " + format_number(v) + " exceeds phi" + std::to_string(i + 1) +
				       "(ybar) = " + format_number(py);
		}
		for (int j = 1; j < 3; ++j)
			if (cfg.circ[j](y, 0.0) > opt.tolerance)
				return "ybar o" + std::to_string(j + 1) + " 0 = " + format_number(cfg.circ[j](y, 0.0)) +
				       " is not 0";
	} catch (const EvalError& e) {
		return std::string(e.what());
	}
	return std::nullopt;
}

/// Both sides of the scalar condition at one point, evaluated directly.
inline std::pair<double, double> scalar_sides(const InequalityConfig& cfg, double a, double b, double c, double d)
{
	const double lhs = cfg.psi[0](cfg.circ[0](cfg.phi[0](cfg.inner(a, b)), cfg.triangle(c, d)));
	const double rhs = cfg.outer(cfg.psi[1](cfg.circ[1](cfg.phi[1](a), c)), cfg.psi[2](cfg.circ[2](cfg.phi[2](b), d)));
	return {lhs, rhs};
}

/// Both sides of the one-variable form with d fixed at the top of the domain.
inline std::pair<double, double> c2_sides(const InequalityConfig& cfg, double a, double b, double c)
{
	const double dbar = cfg.cd.top();
	const double lhs = cfg.psi[0](cfg.circ[0](cfg.phi[0](cfg.inner(a, b)), c));
	const double r1 = cfg.outer(cfg.psi[1](cfg.circ[1](cfg.phi[1](a), c)), cfg.psi[2](cfg.circ[2](cfg.phi[2](b), dbar)));
	const double r2 = cfg.outer(cfg.psi[1](cfg.circ[1](cfg.phi[1](a), dbar)), cfg.psi[2](cfg.circ[2](cfg.phi[2](b), c)));
	return {lhs, std::max(r1, r2)};
}

/**
 * Scans the scalar condition over a, b in a grid of [0, k] (plus any extra
 * levels) and c, d over the configured domain, in lexicographic order of
 * (a, b, c, d). `max_points` = 0 means no budget.
 */
inline Verdict check_scalar_condition(const InequalityConfig& cfg, const CheckOptions& opt = {},
                                      const std::vector<double>& extra_a = {}, const std::vector<double>& extra_b = {},
                                      std::size_t max_points = 0)
{
	if (auto problem = validate_config(cfg, opt))
		return detail::hypothesis_failed(*problem);
	const Axis ax = make_axis(0.0, cfg.k, opt);
	auto keep = [&](std::vector<double> v) {
		std::erase_if(v, [&](double x) { return x < 0.0 || x > ax.points.back(); });
		return v;
	};
	const auto as = merge_values(ax.points, keep(extra_a));
	const auto bs = merge_values(ax.points, keep(extra_b));
	const auto cs = cfg.cd.points(opt);
	Verdict v;
	v.evidence = Evidence::grid(ax.step);
	if (!ax.note.empty())
		v.notes.push_back(ax.note);
	if (!cfg.cd.finite)
		v.notes.push_back("c, d gridded on " + cfg.cd.describe());
	try {
		const std::size_t na = as.size(), nb = bs.size(), nc = cs.size();
		std::vector<double> left(na * nc), right(nb * nc), tri(nc * nc), phi1(na * nb);
		for (std::size_t i = 0; i < na; ++i)
			for (std::size_t c = 0; c < nc; ++c)
				left[i * nc + c] = cfg.psi[1](cfg.circ[1](cfg.phi[1](as[i]), cs[c]));
		for (std::size_t j = 0; j < nb; ++j)
			for (std::size_t d = 0; d < nc; ++d)
				right[j * nc + d] = cfg.psi[2](cfg.circ[2](cfg.phi[2](bs[j]), cs[d]));
		for (std::size_t c = 0; c < nc; ++c)
			for (std::size_t d = 0; d < nc; ++d)
				tri[c * nc + d] = cfg.triangle(cs[c], cs[d]);
		for (std::size_t i = 0; i < na; ++i)
			for (std::size_t j = 0; j < nb; ++j)
				phi1[i * nb + j] = cfg.phi[0](cfg.inner(as[i], bs[j]));
		for (std::size_t i = 0; i < na; ++i)
			for (std::size_t j = 0; j < nb; ++j) {
				const double x = phi1[i * nb + j];
				for (std::size_t c = 0; c < nc; ++c)
					for (std::size_t d = 0; d < nc; ++d) {
						if (max_points && v.points >= max_points) {
							v.budget_exhausted = true;
							return v;
						}
						++v.points;
						const double rhs = cfg.outer(left[i * nc + c], right[j * nc + d]);
						const double lhs = cfg.psi[0](cfg.circ[0](x, tri[c * nc + d]));
						if (lhs < rhs - opt.tolerance) {
							const auto [l, r] = scalar_sides(cfg, as[i], bs[j], cs[c], cs[d]);
							v.status = Status::Violated;
							v.witness = {as[i], bs[j], cs[c], cs[d]};
							v.lhs = l;
							v.rhs = r;
							if (!(l < r - opt.tolerance))
								v.detail = "table and direct evaluation disagree at the witness";
							return v;
						}
					}
			}
	} catch (const EvalError& e) {
		return detail::hypothesis_failed(e.what());
	}
	return v;
}

/// The one-variable form: c over the domain, d replaced by the domain's top.
inline Verdict check_condition_C2(const InequalityConfig& cfg, const CheckOptions& opt = {})
{
	if (auto problem = validate_config(cfg, opt))
		return detail::hypothesis_failed(*problem);
	const Axis ax = make_axis(0.0, cfg.k, opt);
	const auto cs = cfg.cd.points(opt);
	Verdict v;
	v.evidence = Evidence::grid(ax.step);
	try {
		for (double a : ax.points)
			for (double b : ax.points)
				for (double c : cs) {
					++v.points;
					const auto [lhs, rhs] = c2_sides(cfg, a, b, c);
					if (lhs < rhs - opt.tolerance) {
						v.status = Status::Violated;
						v.witness = {a, b, c};
						v.lhs = lhs;
						v.rhs = rhs;
						return v;
					}
				}
	} catch (const EvalError& e) {
		return detail::hypothesis_failed(e.what());
	}
	return v;
}

struct EquivalenceReport
{
	Verdict c1;
	Verdict c2;
	bool agree = true;
	std::string note;
};

/// Runs both forms with the triangle fixed to min; they must reach the same verdict.
inline EquivalenceReport c1_iff_c2(InequalityConfig cfg, const CheckOptions& opt = {})
{
	EquivalenceReport r;
	if (!cfg.triangle.is_min()) {
		cfg.triangle = FusionOp::min(cfg.triangle.bound());
		r.note = "triangle replaced by min";
	}
	r.c1 = check_scalar_condition(cfg, opt);
	r.c2 = check_condition_C2(cfg, opt);
	r.agree = r.c1.status == r.c2.status;
	if (!r.agree)
		r.note += std::string(r.note.empty() ? "" : "; ") + "verdicts disagree: the two forms are equivalent, so this is a defect";
	return r;
}

enum class Outcome { Holds, Violated, HypothesisFailed };

inline const char* to_string(Outcome o)
{
	switch (o) {
	case Outcome::Holds: return "holds";
	case Outcome::Violated: return "violated";
	case Outcome::HypothesisFailed: return "hypothesis_failed";
	}
	return "?";
}

/// Exit-code convention: holds 0, violated 1, hypothesis failure 2.
inline int exit_code(Outcome o) { return o == Outcome::Holds ? 0 : o == Outcome::Violated ? 1 : 2; }

inline Outcome outcome_of(Status s)
{
	return s == Status::HoldsOnGrid ? Outcome::Holds : s == Status::Violated ? Outcome::Violated : Outcome::HypothesisFailed;
}

/// Both sides of an integral inequality and the three integrals behind them.
struct InequalityResult
{
	Outcome outcome = Outcome::Holds;
	double lhs = 0.0;
	double rhs = 0.0;
	std::array<IntegralResult, 3> integrals{};
	std::string detail;
	double failed_at = 0.0; ///< argument of the failing psi, for hypothesis failures
};

namespace detail {

inline void finish(InequalityResult& r, const InequalityConfig& cfg, const CheckOptions& opt)
{
	const char* names[3] = {"psi1", "psi2", "psi3"};
	std::array<double, 3> v{};
	for (int i = 0; i < 3; ++i) {
		try {
			v[i] = cfg.psi[i](r.integrals[i].value);
		} catch (const ShapeDomainError& e) {
			r.outcome = Outcome::HypothesisFailed;
			r.failed_at = e.argument();
			r.detail = std::string(names[i]) + " is undefined at " + format_number(e.argument()) + ": " + e.what();
			return;
		}
	}
	r.lhs = v[0];
	r.rhs = cfg.outer(v[1], v[2]);
	r.outcome = r.lhs >= r.rhs - opt.tolerance ? Outcome::Holds : Outcome::Violated;
}

inline SimpleFunction apply_shape(const ShapeFunction& s, const SimpleFunction& f, double bound)
{
	return f.map([&](double x) { return s(x); }, bound);
}

} // namespace detail

/**
 * psi1(I_{o1, A and B}(phi1(f * g))) >= psi2(I_{o2, A}(phi2(f))) star psi3(I_{o3, B}(phi3(g)))
 * with every integral computed exactly on the candidate set.
 */
inline InequalityResult check_integral_inequality(const InequalityConfig& cfg, const MonotoneMeasure& m,
                                                  const SimpleFunction& f, const SimpleFunction& g, Mask a, Mask b,
                                                  const CheckOptions& opt = {})
{
	for (double x : f.values())
		if (x > cfg.k)
			throw InputError("f exceeds k = " + format_number(cfg.k));
	for (double x : g.values())
		if (x > cfg.k)
			throw InputError("g exceeds k = " + format_number(cfg.k));
	InequalityResult r;
	try {
		const auto fg = combine(f, g, cfg.inner);
		r.integrals[0] = integrate_simple(cfg.circ[0], m, a & b, detail::apply_shape(cfg.phi[0], fg, cfg.ybar), opt);
		r.integrals[1] = integrate_simple(cfg.circ[1], m, a, detail::apply_shape(cfg.phi[1], f, cfg.ybar), opt);
		r.integrals[2] = integrate_simple(cfg.circ[2], m, b, detail::apply_shape(cfg.phi[2], g, cfg.ybar), opt);
	} catch (const ShapeDomainError& e) {
		r.outcome = Outcome::HypothesisFailed;
		r.failed_at = e.argument();
		r.detail = e.what();
		return r;
	}
	detail::finish(r, cfg, opt);
	return r;
}

/// The same inequality for continuum examples given by their level functions.
inline InequalityResult check_survival_inequality(const InequalityConfig& cfg, const SurvivalScenario& joint,
                                                  const SurvivalScenario& first, const SurvivalScenario& second,
                                                  const CheckOptions& opt = {})
{
	InequalityResult r;
	r.integrals[0] = integrate_survival(cfg.circ[0], joint, opt);
	r.integrals[1] = integrate_survival(cfg.circ[1], first, opt);
	r.integrals[2] = integrate_survival(cfg.circ[2], second, opt);
	detail::finish(r, cfg, opt);
	return r;
}

/// One step of a staged report.
struct Stage
{
	std::string name;
	bool passed = true;
	std::string detail;
	std::vector<double> witness;
	std::string evidence;
};

struct ChebyshevReport
{
	Outcome outcome = Outcome::Holds;
	std::vector<Stage> stages;
	std::optional<InequalityResult> inequality;
	bool contradiction = false; ///< all hypotheses passed yet the inequality failed
	std::vector<std::string> notes;
	std::size_t trials = 0;
	std::size_t violations = 0;

	const Stage* find(const std::string& name) const
	{
		for (const auto& s : stages)
			if (s.name == name)
				return &s;
		return nullptr;
	}
};

namespace detail {

inline Stage stage_from(std::string name, const Verdict& v)
{
	Stage s;
	s.name = std::move(name);
	s.passed = v.status == Status::HoldsOnGrid;
	s.witness = v.witness;
	s.evidence = v.evidence.describe();
	if (v.status == Status::Violated)
		s.detail = "lhs " + format_number(v.lhs) + " < rhs " + format_number(v.rhs);
	else
		s.detail = v.detail;
	return s;
}

inline Stage shape_stage(const InequalityConfig& cfg, const CheckOptions& opt)
{
	Stage s{"hypotheses", true, {}, {}, Evidence::grid(opt.step).describe()};
	if (auto problem = validate_config(cfg, opt)) {
		s.passed = false;
		s.detail = *problem;
		return s;
	}
	auto fail = [&](std::string msg) {
		s.passed = false;
		s.detail = std::move(msg);
	};
	if (!cfg.inner.flags().non_decreasing || !cfg.outer.flags().non_decreasing)
		return fail("the inner and outer operations must be declared non-decreasing"), s;
	if (!cfg.outer.flags().left_continuous_first || !cfg.outer.flags().left_continuous_second)
		return fail("the outer operation must be declared left-continuous"), s;
	for (int i = 0; i < 3; ++i)
		if (!cfg.circ[i].flags().non_decreasing)
			return fail("o" + std::to_string(i + 1) + " must be declared non-decreasing"), s;
	const double y = eval_ybar(cfg.ybar, opt);
	try {
		for (int i = 0; i < 3; ++i) {
			const Direction dir = i == 0 ? Direction::NonDecreasing : Direction::Increasing;
			const auto v = check_monotone_fn(cfg.phi[i], 0.0, y, dir, opt);
			if (!v)
				return fail("phi" + std::to_string(i + 1) + " is not " + to_string(dir) + " between " +
				            format_number(v.x1) + " and " + format_number(v.x2)),
				       s;
			if (i > 0 && !cfg.phi[i].flags().right_continuous)
				return fail("phi" + std::to_string(i + 1) + " is not declared right-continuous"), s;
			if (i > 0 && !cfg.psi[i].flags().left_continuous)
				return fail("psi" + std::to_string(i + 1) + " is not declared left-continuous"), s;
			const double hi = std::min(cfg.psi[i].domain().hi, cfg.phi[i](y));
			const double lo = cfg.psi[i].domain().lo;
			if (lo <= hi) {
				const auto w = check_monotone_fn(cfg.psi[i], lo, hi, Direction::NonDecreasing, opt);
				if (!w)
					return fail("psi" + std::to_string(i + 1) + " is not non-decreasing between " +
					            format_number(w.x1) + " and " + format_number(w.x2)),
					       s;
			}
		}
	} catch (const EvalError& e) {
		fail(e.what());
	}
	return s;
}

} // namespace detail

/**
 * Forward direction for m-positively dependent functions: checks the
 * hypotheses, the dependence of f on A and g on B, the scalar condition on
 * c, d in range(m) (a, b including the levels of f and g), then the integral
 * inequality. An inequality failure after all stages passed is flagged as a
 * contradiction.
 */
inline ChebyshevReport forward_check(const InequalityConfig& config, const MonotoneMeasure& m,
                                     const SimpleFunction& f, const SimpleFunction& g, Mask a, Mask b,
                                     const CheckOptions& opt = {}, bool allow_range_escape = false)
{
	ChebyshevReport rep;
	InequalityConfig cfg = config;
	cfg.cd = CdDomain::of_values(m.range());
	rep.stages.push_back(detail::shape_stage(cfg, opt));
	if (!rep.stages.back().passed) {
		rep.outcome = Outcome::HypothesisFailed;
		return rep;
	}

	DependenceQuery q{m, f, g, a, b, cfg.triangle, cfg.k, allow_range_escape};
	Stage dep{"dependence", true, {}, {}, Evidence::exact().describe()};
	try {
		const auto d = is_m_positively_dependent(q);
		dep.passed = d.holds;
		dep.witness = d.witness;
		if (!d.holds)
			dep.detail = "level sets at (alpha, beta) give " + format_number(d.lhs) + " < " + format_number(d.rhs);
		for (const auto& w : d.warnings)
			rep.notes.push_back(w);
	} catch (const InputError& e) {
		dep.passed = false;
		dep.detail = e.what();
	}
	rep.stages.push_back(dep);

	const auto scalar = check_scalar_condition(cfg, opt, f.distinct_values(a), g.distinct_values(b));
	rep.stages.push_back(detail::stage_from("scalar-condition", scalar));

	rep.inequality = check_integral_inequality(cfg, m, f, g, a, b, opt);
	Stage ineq{"inequality", rep.inequality->outcome == Outcome::Holds, rep.inequality->detail, {}, "exact"};
	rep.stages.push_back(ineq);
	rep.outcome = rep.inequality->outcome;
	rep.contradiction = rep.outcome == Outcome::Violated && rep.stages[1].passed && rep.stages[2].passed;
	if (rep.contradiction)
		rep.notes.push_back("all hypotheses hold yet the inequality fails: a defect or a misdeclared flag");
	return rep;
}

/**
 * Chebyshev inequality for the Sugeno integral of comonotone functions on A
 * (all o_i = min, star = inner, B = A). Hypotheses: inner <= min, equal
 * phi values at ybar, psi1 >= psi_j, and psi_j(phi_j(x)) <= x <= psi1(phi1(x)).
 */
inline ChebyshevReport sugeno_chebyshev(const MonotoneMeasure& m, const SimpleFunction& f, const SimpleFunction& g,
                                        Mask a, const ShapeTriple& phi, const ShapeTriple& psi, const FusionOp& inner,
                                        const CheckOptions& opt = {}, double ybar = 1.0)
{
	ChebyshevReport rep;
	const double y = detail::eval_ybar(ybar, opt);
	const std::string ev = Evidence::grid(opt.step).describe();
	auto add = [&](std::string name, bool ok, std::string detail = {}, std::vector<double> w = {}) {
		rep.stages.push_back({std::move(name), ok, std::move(detail), std::move(w), ev});
		return ok;
	};
	auto hypotheses = [&]() -> bool {
		const auto lm = leq_min(inner, opt);
		if (!add("inner-below-min", lm.holds, lm.holds ? "" : inner.name() + " exceeds min", lm.witness))
			return false;
		try {
			for (int j = 1; j < 3; ++j)
				if (std::fabs(phi[0](y) - phi[j](y)) > measure_tolerance)
					return add("phi-top-equal", false,
					           "phi1(ybar) = " + format_number(phi[0](y)) + " differs from phi" + std::to_string(j + 1) +
					               "(ybar) = " + format_number(phi[j](y)));
			add("phi-top-equal", true);
			for (int j = 1; j < 3; ++j) {
				const double lo = std::max(psi[0].domain().lo, psi[j].domain().lo);
				const double hi = std::min({psi[0].domain().hi, psi[j].domain().hi, phi[0](y)});
				if (lo > hi)
					continue;
				for (double x : make_axis(lo, hi, opt).points)
					if (psi[0](x) < psi[j](x) - opt.tolerance)
						return add("psi1-dominates", false, "psi1 < psi" + std::to_string(j + 1), {x});
			}
			add("psi1-dominates", true);
			for (double x : make_axis(0.0, y, opt).points) {
				for (int j = 1; j < 3; ++j)
					if (psi[j](phi[j](x)) > x + opt.tolerance)
						return add("sandwich", false, "psi" + std::to_string(j + 1) + "(phi" + std::to_string(j + 1) + "(x)) > x", {x});
				if (psi[0](phi[0](x)) < x - opt.tolerance)
					return add("sandwich", false, "psi1(phi1(x)) < x", {x});
			}
			add("sandwich", true);
		} catch (const ShapeDomainError& e) {
			return add("shapes", false, e.what(), {e.argument()});
		}
		const auto co = is_comonotone(f, g, a);
		return add("comonotone", co.holds,
		           co.holds ? "" : "atoms " + m.space().label(co.x) + " and " + m.space().label(co.y) + " are discordant");
	};
	if (!hypotheses()) {
		rep.outcome = Outcome::HypothesisFailed;
		return rep;
	}
	try {
		const double phi0 = phi[0](0.0);
		if (phi0 != 0.0)
			rep.notes.push_back("phi1(0) = " + format_number(phi0) + " is not 0; psi may be undefined below it");
	} catch (const EvalError&) {
	}
	InequalityConfig cfg;
	cfg.inner = inner;
	cfg.outer = inner;
	cfg.circ = {FusionOp::min(ybar), FusionOp::min(ybar), FusionOp::min(ybar)};
	cfg.triangle = FusionOp::min(ybar);
	cfg.phi = phi;
	cfg.psi = psi;
	cfg.k = ybar;
	cfg.ybar = ybar;
	rep.inequality = check_integral_inequality(cfg, m, f, g, a, a, opt);
	rep.stages.push_back({"inequality", rep.inequality->outcome == Outcome::Holds, rep.inequality->detail, {}, "exact"});
	rep.outcome = rep.inequality->outcome;
	rep.contradiction = rep.outcome == Outcome::Violated;
	return rep;
}

/// psi1(I_M(phi1(f))) >= psi2(I_M(phi2(f))) on A, via the comonotone pair (f, f).
inline ChebyshevReport liapunov_check(const MonotoneMeasure& m, const SimpleFunction& f, Mask a, const ShapeFunction& phi1,
                                      const ShapeFunction& phi2, const ShapeFunction& psi1, const ShapeFunction& psi2,
                                      const CheckOptions& opt = {}, double ybar = 1.0)
{
	return sugeno_chebyshev(m, f, f, a, {phi1, phi2, phi2}, {psi1, psi2, psi2}, FusionOp::min(ybar), opt, ybar);
}

/**
 * Inequality for arbitrary functions when m(C and D) >= m(C) tri m(D) for all
 * sets: checks that measure condition and the scalar condition on range(m),
 * then the integral inequality on `trials` random f, g, A, B.
 */
inline ChebyshevReport any_functions_check(const InequalityConfig& config, const MonotoneMeasure& m, std::size_t trials,
                                           std::uint64_t seed, const CheckOptions& opt = {},
                                           bool allow_range_escape = true)
{
	ChebyshevReport rep;
	if (!config.outer.same_operation(config.inner)) {
		rep.outcome = Outcome::HypothesisFailed;
		rep.stages.push_back({"hypotheses", false, "outer operation must equal the inner one", {}, "exact"});
		return rep;
	}
	InequalityConfig cfg = config;
	cfg.cd = CdDomain::of_values(m.range());
	const auto pairs = measure_supports_all_pairs(m, cfg.triangle, allow_range_escape);
	rep.stages.push_back({"measure-supports-all-pairs", pairs.holds,
	                      pairs.holds ? "" : m.space().describe(pairs.first) + ", " + m.space().describe(pairs.second),
	                      pairs.witness, "exact"});
	for (const auto& w : pairs.warnings)
		rep.notes.push_back(w);
	rep.stages.push_back(detail::stage_from("scalar-condition", check_scalar_condition(cfg, opt)));
	if (!rep.stages[0].passed || !rep.stages[1].passed) {
		rep.outcome = Outcome::HypothesisFailed;
		return rep;
	}
	Rng rng(seed);
	const std::size_t n = m.space().size();
	const double k = std::isinf(cfg.k) ? 1.0 : cfg.k;
	for (std::size_t t = 0; t < trials; ++t) {
		const auto f = random_function(rng, n, n, k);
		const auto g = random_function(rng, n, n, k);
		const Mask a = random_nonempty_set(rng, n), b = random_nonempty_set(rng, n);
		auto r = check_integral_inequality(cfg, m, f, g, a, b, opt);
		++rep.trials;
		if (r.outcome != Outcome::Holds) {
			++rep.violations;
			if (!rep.inequality)
				rep.inequality = std::move(r);
		}
	}
	rep.stages.push_back({"random-functions", rep.violations == 0,
	                      std::to_string(rep.violations) + " of " + std::to_string(rep.trials) + " trials failed", {},
	                      Evidence::random_trials(trials, seed).describe()});
	rep.outcome = rep.violations == 0 ? Outcome::Holds : Outcome::Violated;
	rep.contradiction = rep.violations > 0;
	return rep;
}

/**
 * The two-bracket condition for comonotone inequalities with a seminormed
 * integral:
 *   psi1(S(phi1(a * b), c)) >= [psi2(S(phi2(a), c)) * b] v [a * psi3(S(phi3(b), c))]
 * With `swapped`, S takes c as its first argument instead.
 */
inline Verdict check_seminormed_condition(const FusionOp& s, const FusionOp& star, const ShapeTriple& phi,
                                          const ShapeTriple& psi, bool swapped, const CheckOptions& opt = {})
{
	auto S = [&](double x, double c) { return swapped ? s(c, x) : s(x, c); };
	const auto xs = make_axis(0.0, 1.0, opt).points;
	Verdict v;
	v.evidence = Evidence::grid(make_axis(0.0, 1.0, opt).step);
	try {
		for (double a : xs)
			for (double b : xs)
				for (double c : xs) {
					++v.points;
					const double lhs = psi[0](S(phi[0](star(a, b)), c));
					const double rhs = std::max(star(psi[1](S(phi[1](a), c)), b), star(a, psi[2](S(phi[2](b), c))));
					if (lhs < rhs - opt.tolerance) {
						v.status = Status::Violated;
						v.witness = {a, b, c};
						v.lhs = lhs;
						v.rhs = rhs;
						return v;
					}
				}
	} catch (const EvalError& e) {
		return detail::hypothesis_failed(e.what());
	}
	return v;
}

/// Sides of the q-integral product condition at (a, b, c), with psi_i = phi_i^-1.
inline std::pair<double, double> q_condition_sides(const FusionOp& conj, const ShapeTriple& phi, const ShapeTriple& inv,
                                                  const FusionOp& star, double a, double b, double c)
{
	const double lhs = inv[0](conj(a, phi[0](star(b, c))));
	const double r1 = star(inv[1](conj(a, phi[1](b))), inv[2](conj(1.0, phi[2](c))));
	const double r2 = star(inv[1](conj(1.0, phi[1](b))), inv[2](conj(a, phi[2](c))));
	return {lhs, std::max(r1, r2)};
}

/**
 * Condition for the q-integral Chebyshev inequality of comonotone functions.
 * Scan order: b descending from 1, then a and c ascending, so the b = 1
 * family is examined first.
 */
inline Verdict q_condition(const FusionOp& conj, const ShapeTriple& phi, const FusionOp& star,
                           const CheckOptions& opt = {})
{
	if (!conj.flags().fuzzy_conjunction)
		return detail::hypothesis_failed(conj.name() + " is not declared a fuzzy conjunction");
	ShapeTriple inv;
	try {
		for (int i = 0; i < 3; ++i) {
			if (phi[i](0.0) != 0.0)
				return detail::hypothesis_failed("phi" + std::to_string(i + 1) + "(0) = " + format_number(phi[i](0.0)) +
				                                 " is not 0");
			if (conj(1.0, phi[i](1.0)) > phi[i](1.0) + opt.tolerance)
				return detail::hypothesis_failed("1 (x) phi" + std::to_string(i + 1) + "(1) exceeds phi" +
				                                 std::to_string(i + 1) + "(1)");
			inv[i] = phi[i].inverse();
		}
	} catch (const Error& e) {
		return detail::hypothesis_failed(e.what());
	}
	const auto xs = make_axis(0.0, 1.0, opt).points;
	Verdict v;
	v.evidence = Evidence::grid(make_axis(0.0, 1.0, opt).step);
	try {
		for (auto bi = xs.rbegin(); bi != xs.rend(); ++bi)
			for (double a : xs)
				for (double c : xs) {
					++v.points;
					const auto [lhs, rhs] = q_condition_sides(conj, phi, inv, star, a, *bi, c);
					if (lhs < rhs - opt.tolerance) {
						v.status = Status::Violated;
						v.witness = {a, *bi, c};
						v.lhs = lhs;
						v.rhs = rhs;
						return v;
					}
				}
	} catch (const EvalError& e) {
		return detail::hypothesis_failed(e.what());
	}
	return v;
}

/**
 * Coarse-to-fine search for a scalar-condition violation: grids 0.1, 0.05,
 * 0.02, then the configured step, within a budget of evaluated points.
 */
inline Verdict search_counterexample(const InequalityConfig& cfg, const CheckOptions& opt, std::size_t budget)
{
	if (budget == 0)
		throw InputError("search budget must be positive");
	std::vector<double> steps;
	for (double s : {0.1, 0.05, 0.02})
		if (s > opt.step)
			steps.push_back(s);
	steps.push_back(opt.step);
	std::size_t used = 0;
	Verdict last;
	for (double s : steps) {
		CheckOptions o = opt;
		o.step = s;
		last = check_scalar_condition(cfg, o, {}, {}, budget - used);
		used += last.points;
		last.points = used;
		if (last.status != Status::HoldsOnGrid)
			return last;
		if (last.budget_exhausted || used >= budget) {
			last.budget_exhausted = true;
			last.notes.push_back("budget of " + std::to_string(budget) + " points exhausted at step " + format_number(s));
			return last;
		}
	}
	return last;
}

struct GapWitness
{
	std::vector<double> point; ///< (a, b, c)
	bool first_form_holds = true;
	bool second_form_holds = true;
};

/**
 * First (a, b, c) where the condition with S(x, c) and the one with S(c, x)
 * reach different verdicts; both agree for commutative S.
 */
inline std::optional<GapWitness> search_commutativity_gap(const FusionOp& s, const FusionOp& star,
                                                          const CheckOptions& opt = {})
{
	const auto xs = make_axis(0.0, 1.0, opt).points;
	for (double a : xs)
		for (double b : xs)
			for (double c : xs) {
				const double ab = star(a, b);
				const bool first = s(ab, c) >= std::max(star(s(a, c), b), star(a, s(b, c))) - opt.tolerance;
				const bool second = s(c, ab) >= std::max(star(s(c, a), b), star(a, s(c, b))) - opt.tolerance;
				if (first != second)
					return GapWitness{{a, b, c}, first, second};
			}
	return std::nullopt;
}

struct ProbeResult
{
	bool found = false;
	std::string construction; ///< which indicator pair exposed the failure
	InequalityResult inequality;
	double c = 0.0;
};

/**
 * Turns a scalar-condition failure into integral data: on two atoms with
 * m({1}) = c and m(X) = top of the domain, tries f = a 1_{1}, g = b 1_X and
 * then f = a 1_X, g = b 1_{1}, both comonotone.
 */
inline ProbeResult indicator_probe(const InequalityConfig& cfg, double a, double b, double c, const CheckOptions& opt = {})
{
	const double top = cfg.cd.top();
	if (c > top)
		throw InputError("probe value c exceeds the top of the domain");
	const auto m = MonotoneMeasure::from_table(FiniteSpace({"in", "out"}), {0.0, c, 0.0, top});
	const Mask in = 1, all = 3;
	ProbeResult p;
	p.c = c;
	const std::pair<SimpleFunction, SimpleFunction> tries[2] = {
	    {SimpleFunction::indicator(2, in, a, cfg.k), SimpleFunction::indicator(2, all, b, cfg.k)},
	    {SimpleFunction::indicator(2, all, a, cfg.k), SimpleFunction::indicator(2, in, b, cfg.k)}};
	const char* names[2] = {"f = a 1_A, g = b 1_X", "f = a 1_X, g = b 1_A"};
	for (int i = 0; i < 2; ++i) {
		auto r = check_integral_inequality(cfg, m, tries[i].first, tries[i].second, all, all, opt);
		if (r.outcome == Outcome::Violated) {
			p.found = true;
			p.construction = names[i];
			p.inequality = std::move(r);
			return p;
		}
		if (i == 0)
			p.inequality = std::move(r);
	}
	return p;
}

} // namespace sugeno

#endif
