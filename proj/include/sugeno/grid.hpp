#ifndef SUGENO_GRID_HPP
#define SUGENO_GRID_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sugeno/error.hpp"
#include "sugeno/extended.hpp"

namespace sugeno {

/// Knobs shared by every grid scan and numerical comparison.
struct CheckOptions
{
	double step = 0.01;           ///< grid resolution on each axis
	double tolerance = 1e-9;      ///< lhs < rhs - tolerance counts as a violation
	double infinity_cap = 1e6;    ///< stand-in for an infinite bound on a grid
	std::size_t max_segments = 10000; ///< per-axis cap; coarser step beyond it
};

/// How a number or verdict was obtained.
struct Evidence
{
	enum class Kind { Exact, Grid, Bisection, RandomTrials };

	Kind kind = Kind::Exact;
	double step = 0.0;
	double tolerance = 0.0;
	std::size_t trials = 0;
	std::uint64_t seed = 0;

	static Evidence exact() { return {}; }
	static Evidence grid(double step) { return {Kind::Grid, step, 0.0, 0, 0}; }
	static Evidence bisection(double tol) { return {Kind::Bisection, 0.0, tol, 0, 0}; }
	static Evidence random_trials(std::size_t n, std::uint64_t seed)
	{
		return {Kind::RandomTrials, 0.0, 0.0, n, seed};
	}

	std::string describe() const
	{
		switch (kind) {
		case Kind::Exact:
			return "exact";
		case Kind::Grid:
			return "grid(" + format_number(step) + ")";
		case Kind::Bisection:
			return "bisection(" + format_number(tolerance) + ")";
		case Kind::RandomTrials:
			return "random-trials(" + std::to_string(trials) + ", " + std::to_string(seed) + ")";
		}
		return "exact";
	}
};

/// Sample points of [lo, hi] plus a note when the axis had to be capped or coarsened.
struct Axis
{
	std::vector<double> points;
	double step = 0.0;
	std::string note;
};

/**
 * Evenly spaced points lo, ..., hi. Point i is lo + (hi - lo) * i / n so that
 * decimal grids such as 0.01 * i land on the nearest double of the literal.
 */
inline Axis make_axis(double lo, double hi, const CheckOptions& opt)
{
	if (!(opt.step > 0.0))
		throw InputError("grid step must be positive");
	if (std::isnan(lo) || std::isnan(hi) || lo > hi)
		throw InputError("invalid grid interval");
	Axis axis;
	if (std::isinf(hi)) {
		hi = std::max(lo, opt.infinity_cap);
		axis.note = "infinite bound capped at " + format_number(hi);
	}
	const double width = hi - lo;
	std::size_t n = static_cast<std::size_t>(std::llround(width / opt.step));
	if (width > 0.0 && n == 0)
		n = 1;
	if (n > opt.max_segments) {
		n = opt.max_segments;
		if (!axis.note.empty())
			axis.note += "; ";
		axis.note += "grid coarsened to " + std::to_string(n) + " segments";
	}
	axis.step = n == 0 ? 0.0 : width / static_cast<double>(n);
	axis.points.reserve(n + 1);
	for (std::size_t i = 0; i < n; ++i)
		axis.points.push_back(lo + width * static_cast<double>(i) / static_cast<double>(n));
	axis.points.push_back(hi);
	return axis;
}

/// Sorted union of two value lists with exact duplicates removed.
inline std::vector<double> merge_values(std::vector<double> a, const std::vector<double>& b)
{
	a.insert(a.end(), b.begin(), b.end());
	std::sort(a.begin(), a.end());
	a.erase(std::unique(a.begin(), a.end()), a.end());
	return a;
}

} // namespace sugeno

#endif
