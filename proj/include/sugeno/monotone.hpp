#ifndef SUGENO_MONOTONE_HPP
#define SUGENO_MONOTONE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "sugeno/error.hpp"
#include "sugeno/expr.hpp"
#include "sugeno/grid.hpp"

namespace sugeno {

enum class Direction { NonDecreasing, Increasing, NonIncreasing, Decreasing };

inline const char* to_string(Direction d)
{
	switch (d) {
	case Direction::NonDecreasing: return "non-decreasing";
	case Direction::Increasing: return "increasing";
	case Direction::NonIncreasing: return "non-increasing";
	case Direction::Decreasing: return "decreasing";
	}
	return "?";
}

/// Grid evidence for monotonicity. Never a proof; a witness is a proof of failure.
struct MonotoneVerdict
{
	bool holds = true;
	double x1 = 0.0, x2 = 0.0;   ///< violating consecutive grid points, x1 < x2
	double y1 = 0.0, y2 = 0.0;
	std::size_t points = 0;
	Evidence evidence;

	explicit operator bool() const noexcept { return holds; }
};

/// Compares consecutive grid samples of `fn` on [lo, hi].
template <class F>
MonotoneVerdict check_monotone_fn(F&& fn, double lo, double hi, Direction dir, const CheckOptions& opt)
{
	constexpr double slack = 1e-12;
	const Axis axis = make_axis(lo, hi, opt);
	MonotoneVerdict v;
	v.evidence = Evidence::grid(axis.step);
	v.points = axis.points.size();
	double prev = fn(axis.points.front());
	for (std::size_t i = 1; i < axis.points.size(); ++i) {
		const double cur = fn(axis.points[i]);
		bool ok = true;
		switch (dir) {
		case Direction::NonDecreasing: ok = cur >= prev - slack; break;
		case Direction::Increasing: ok = cur > prev; break;
		case Direction::NonIncreasing: ok = cur <= prev + slack; break;
		case Direction::Decreasing: ok = cur < prev; break;
		}
		if (!ok) {
			v.holds = false;
			v.x1 = axis.points[i - 1];
			v.x2 = axis.points[i];
			v.y1 = prev;
			v.y2 = cur;
			return v;
		}
		prev = cur;
	}
	return v;
}

/// Samples a one-variable expression on [lo, hi] at `grid_step`.
inline MonotoneVerdict check_monotone(const Expr& e, std::string_view var, double lo, double hi,
                                      Direction dir, double grid_step)
{
	const auto index = e.variable_index(var);
	if (!index)
		throw InputError("expression has no variable '" + std::string(var) + "'");
	for (std::size_t used : e.used_variables())
		if (used != *index)
			throw InputError("expression depends on '" + e.variables()[used] + "' besides '" +
			                 std::string(var) + "'");
	std::vector<double> args(e.variables().size(), 0.0);
	CheckOptions opt;
	opt.step = grid_step;
	return check_monotone_fn(
	    [&](double x) {
		    args[*index] = x;
		    return e(args);
	    },
	    lo, hi, dir, opt);
}

} // namespace sugeno

#endif
