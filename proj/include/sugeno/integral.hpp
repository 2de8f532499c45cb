#ifndef SUGENO_INTEGRAL_HPP
#define SUGENO_INTEGRAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sugeno/error.hpp"
#include "sugeno/extended.hpp"
#include "sugeno/fusion.hpp"
#include "sugeno/grid.hpp"
#include "sugeno/measure.hpp"

namespace sugeno {

/// A function on the atoms of a finite space with values in [0, bound].
class SimpleFunction
{
public:
	SimpleFunction() = default;

	explicit SimpleFunction(std::vector<double> values, double bound = 1.0)
	    : values_(std::move(values)), bound_(bound)
	{
		if (!(bound_ > 0.0))
			throw InputError("function bound must be positive");
		for (double v : values_)
			if (std::isnan(v) || v < 0.0 || v > bound_)
				throw InputError("function value " + format_number(v) + " outside [0, " +
				                 format_number(bound_) + "]");
	}

	/// c on the atoms of `set`, 0 elsewhere.
	static SimpleFunction indicator(std::size_t atoms, Mask set, double c, double bound = 1.0)
	{
		std::vector<double> v(atoms, 0.0);
		for (std::size_t i = 0; i < atoms; ++i)
			if (set & (Mask{1} << i))
				v[i] = c;
		return SimpleFunction(std::move(v), bound);
	}

	std::size_t size() const noexcept { return values_.size(); }
	double operator[](std::size_t i) const { return values_.at(i); }
	const std::vector<double>& values() const noexcept { return values_; }
	double bound() const noexcept { return bound_; }

	/// {x : f(x) >= t}
	Mask level_set(double t) const
	{
		Mask m = 0;
		for (std::size_t i = 0; i < values_.size(); ++i)
			if (values_[i] >= t)
				m |= Mask{1} << i;
		return m;
	}

	/// Distinct values taken on `d`, ascending (exact equality).
	std::vector<double> distinct_values(Mask d) const
	{
		std::vector<double> out;
		for (std::size_t i = 0; i < values_.size(); ++i)
			if (d & (Mask{1} << i))
				out.push_back(values_[i]);
		std::sort(out.begin(), out.end());
		out.erase(std::unique(out.begin(), out.end()), out.end());
		return out;
	}

	/// x -> fn(f(x)) with a new bound.
	template <class F>
	SimpleFunction map(F&& fn, double new_bound) const
	{
		std::vector<double> out;
		out.reserve(values_.size());
		for (double v : values_)
			out.push_back(fn(v));
		return SimpleFunction(std::move(out), new_bound);
	}

	friend bool operator==(const SimpleFunction&, const SimpleFunction&) = default;

private:
	std::vector<double> values_;
	double bound_ = 1.0;
};

/// x -> op(f(x), g(x))
inline SimpleFunction combine(const SimpleFunction& f, const SimpleFunction& g, const FusionOp& op)
{
	if (f.size() != g.size())
		throw InputError("functions live on spaces of different size");
	std::vector<double> out(f.size());
	for (std::size_t i = 0; i < f.size(); ++i)
		out[i] = op(f[i], g[i]);
	return SimpleFunction(std::move(out), op.bound());
}

enum class IntegralMethod { ExactCandidates, Grid, Bisection };

inline const char* to_string(IntegralMethod m)
{
	switch (m) {
	case IntegralMethod::ExactCandidates: return "exact-candidate-set";
	case IntegralMethod::Grid: return "grid";
	case IntegralMethod::Bisection: return "bisection";
	}
	return "?";
}

/// One term t o m(level) of the supremum.
struct Candidate
{
	double t = 0.0;
	double level = 0.0;
	double term = 0.0;
};

struct IntegralResult
{
	double value = 0.0;
	IntegralMethod method = IntegralMethod::ExactCandidates;
	std::vector<Candidate> candidates;
	std::vector<std::string> notes;
	Evidence evidence;
	double argmax = 0.0; ///< t of the first maximal term

	NonNegExt ext() const { return NonNegExt(value); }
};

namespace detail {

inline void take_max(IntegralResult& r)
{
	r.value = 0.0;
	r.argmax = 0.0;
	bool first = true;
	for (const auto& c : r.candidates)
		if (first || c.term > r.value) {
			r.value = c.term;
			r.argmax = c.t;
			first = false;
		}
}

inline void check_domain(const MonotoneMeasure& m, Mask d, const SimpleFunction& f)
{
	if (!m.space().contains(d))
		throw InputError("integration set is not a subset of the space");
	if (f.size() != m.space().size())
		throw InputError("function has " + std::to_string(f.size()) + " values for a space of " +
		                 std::to_string(m.space().size()) + " atoms");
}

} // namespace detail

/// Brute-force sup over t in {0, step, ..., bound} of t o m(D and {f >= t}).
inline double oracle_grid_integral(const FusionOp& op, const MonotoneMeasure& m, Mask d, const SimpleFunction& f,
                                   double grid_step)
{
	detail::check_domain(m, d, f);
	CheckOptions opt;
	opt.step = grid_step;
	opt.max_segments = std::max<std::size_t>(opt.max_segments, 1000000);
	const Axis axis = make_axis(0.0, op.bound(), opt);
	double best = 0.0;
	for (double t : axis.points)
		best = std::max(best, op(t, m(d & f.level_set(t))));
	return best;
}

/**
 * Generalized upper Sugeno integral sup_t t o m(D and {f >= t}) of a simple
 * function, evaluated on the candidate set of its values on D plus the
 * bound-o-0 term. Ops not declared left-continuous in the first argument are
 * integrated on a grid instead, with a note.
 */
inline IntegralResult integrate_simple(const FusionOp& op, const MonotoneMeasure& m, Mask d,
                                       const SimpleFunction& f, const CheckOptions& opt = {})
{
	detail::check_domain(m, d, f);
	if (!op.flags().non_decreasing)
		throw InputError("integration needs a non-decreasing operation (" + op.name() + ")");
	if (f.bound() > op.bound())
		throw InputError("function bound exceeds the operation bound");
	IntegralResult r;
	if (!op.flags().left_continuous_first) {
		r.method = IntegralMethod::Grid;
		const Axis axis = make_axis(0.0, op.bound(), opt);
		r.evidence = Evidence::grid(axis.step);
		r.notes.push_back("operation not declared left-continuous in its first argument; grid supremum");
		if (!axis.note.empty())
			r.notes.push_back(axis.note);
		for (double t : axis.points) {
			const double level = m(d & f.level_set(t));
			r.candidates.push_back({t, level, op(t, level)});
		}
		detail::take_max(r);
		return r;
	}
	r.method = IntegralMethod::ExactCandidates;
	r.evidence = Evidence::exact();
	const auto values = f.distinct_values(d);
	for (double v : values) {
		const double level = m(d & f.level_set(v));
		r.candidates.push_back({v, level, op(v, level)});
	}
	if (values.empty() || values.back() < op.bound())
		r.candidates.push_back({op.bound(), 0.0, op(op.bound(), 0.0)});
	detail::take_max(r);
	return r;
}

/// Sugeno integral (min).
inline IntegralResult sugeno(const MonotoneMeasure& m, Mask d, const SimpleFunction& f)
{
	return integrate_simple(FusionOp::min(infinity), m, d, f);
}

/// Shilkret integral (product).
inline IntegralResult shilkret(const MonotoneMeasure& m, Mask d, const SimpleFunction& f)
{
	return integrate_simple(FusionOp::prod(infinity), m, d, f);
}

/// Opposite-Sugeno integral (Lukasiewicz).
inline IntegralResult opposite_sugeno(const MonotoneMeasure& m, Mask d, const SimpleFunction& f)
{
	return integrate_simple(FusionOp::lukasiewicz(), m, d, f);
}

/// Seminormed fuzzy integral for a semicopula.
inline IntegralResult seminormed(const FusionOp& s, const MonotoneMeasure& m, Mask d, const SimpleFunction& f)
{
	if (!s.flags().semicopula)
		throw InputError("seminormed integral needs a semicopula (" + s.name() + ")");
	return integrate_simple(s, m, d, f);
}

/**
 * q-integral sup_t m({f >= t}) (x) t for a fuzzy conjunction. The measure is
 * the first argument. The m(empty) (x) 1 term is added only when max f < 1.
 */
inline IntegralResult q_integral(const FusionOp& conj, const MonotoneMeasure& m, const SimpleFunction& f)
{
	if (!conj.flags().fuzzy_conjunction || !conj.flags().left_continuous_second)
		throw InputError("q-integral needs a fuzzy conjunction left-continuous in its second argument (" +
		                 conj.name() + ")");
	if (!m.is_capacity())
		throw InputError("q-integral is defined for capacities");
	if (f.bound() > 1.0)
		throw InputError("q-integral needs a function with values in [0, 1]");
	detail::check_domain(m, m.space().universe(), f);
	IntegralResult r;
	r.evidence = Evidence::exact();
	const Mask u = m.space().universe();
	const auto values = f.distinct_values(u);
	for (double v : values) {
		const double level = m(f.level_set(v));
		r.candidates.push_back({v, level, conj(level, v)});
	}
	if (values.back() < 1.0) {
		r.candidates.push_back({1.0, 0.0, conj(0.0, 1.0)});
		r.notes.push_back("m(empty) (x) 1 term included since max f < 1");
	} else {
		r.notes.push_back("no m(empty) (x) 1 term since max f = 1");
	}
	detail::take_max(r);
	return r;
}

/**
 * sup_t t o G(t) for a survival scenario. Min is solved per segment by
 * bisection on t - G(t); other operations use a dense grid followed by
 * repeated local refinement around the best point.
 */
inline IntegralResult integrate_survival(const FusionOp& op, const SurvivalScenario& sc,
                                         const CheckOptions& opt = {})
{
	if (!op.flags().non_decreasing)
		throw InputError("integration needs a non-decreasing operation (" + op.name() + ")");
	if (sc.bound() > op.bound())
		throw InputError("survival bound exceeds the operation bound");
	IntegralResult r;
	if (op.is_min()) {
		constexpr double tol = 1e-13;
		r.method = IntegralMethod::Bisection;
		r.evidence = Evidence::bisection(tol);
		for (const auto& s : sc.segments()) {
			// open ends are approached by the adjacent double
			double lo = s.interval.lo_closed ? s.interval.lo : std::nextafter(s.interval.lo, infinity);
			double hi = s.interval.hi_closed ? s.interval.hi : std::nextafter(s.interval.hi, -infinity);
			lo = std::max(0.0, lo);
			hi = std::min(sc.bound(), hi);
			if (lo > hi)
				continue;
			const double g_lo = sc(lo), g_hi = sc(hi);
			if (lo >= g_lo) {
				r.candidates.push_back({lo, g_lo, std::min(lo, g_lo)});
				continue;
			}
			if (hi <= g_hi) {
				r.candidates.push_back({hi, g_hi, std::min(hi, g_hi)});
				continue;
			}
			double a = lo, b = hi;
			for (int it = 0; it < 200 && b - a > tol; ++it) {
				const double mid = 0.5 * (a + b);
				if (mid < sc(mid))
					a = mid;
				else
					b = mid;
			}
			const double ga = sc(a), gb = sc(b);
			if (std::min(a, ga) >= std::min(b, gb))
				r.candidates.push_back({a, ga, std::min(a, ga)});
			else
				r.candidates.push_back({b, gb, std::min(b, gb)});
		}
		detail::take_max(r);
		return r;
	}
	r.method = IntegralMethod::Grid;
	const Axis axis = make_axis(0.0, sc.bound(), opt);
	r.evidence = Evidence::grid(axis.step);
	if (!axis.note.empty())
		r.notes.push_back(axis.note);
	for (double t : axis.points) {
		const double g = sc(t);
		r.candidates.push_back({t, g, op(t, g)});
	}
	detail::take_max(r);
	const double centre = r.argmax;
	CheckOptions fine = opt;
	for (double width = axis.step; width > 1e-10; width = fine.step) {
		fine.step = width / 100.0;
		const double c = r.argmax;
		const Axis local = make_axis(std::max(0.0, c - width), std::min(sc.bound(), c + width), fine);
		for (double t : local.points) {
			const double g = sc(t);
			const double term = op(t, g);
			if (term > r.value) {
				r.value = term;
				r.argmax = t;
				r.candidates.push_back({t, g, term});
			}
		}
	}
	r.notes.push_back("refined around t = " + format_number(centre));
	return r;
}

} // namespace sugeno

#endif
