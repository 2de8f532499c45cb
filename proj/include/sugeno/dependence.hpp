#ifndef SUGENO_DEPENDENCE_HPP
#define SUGENO_DEPENDENCE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sugeno/error.hpp"
#include "sugeno/fusion.hpp"
#include "sugeno/integral.hpp"
#include "sugeno/measure.hpp"

namespace sugeno {

struct ComonotoneVerdict
{
	bool holds = true;
	std::size_t x = 0; ///< atom indices of a discordant pair
	std::size_t y = 0;

	explicit operator bool() const noexcept { return holds; }
};

/// (f(x) - f(y)) (g(x) - g(y)) >= 0 for all x, y in D; first discordant pair on failure.
inline ComonotoneVerdict is_comonotone(const SimpleFunction& f, const SimpleFunction& g, Mask d)
{
	if (f.size() != g.size())
		throw InputError("functions live on spaces of different size");
	auto sign = [](double u, double v) { return (u > v) - (u < v); };
	ComonotoneVerdict v;
	for (std::size_t i = 0; i < f.size(); ++i) {
		if (!(d & (Mask{1} << i)))
			continue;
		for (std::size_t j = i + 1; j < f.size(); ++j) {
			if (!(d & (Mask{1} << j)))
				continue;
			if (sign(f[i], f[j]) * sign(g[i], g[j]) < 0) {
				v.holds = false;
				v.x = i;
				v.y = j;
				return v;
			}
		}
	}
	return v;
}

/// Result of a dependence decision. Witness meaning depends on the check.
struct DependenceVerdict
{
	bool holds = true;
	std::vector<double> witness; ///< (alpha, beta) levels or (c, d) values
	Mask first = 0;              ///< sets, for set-pair scans
	Mask second = 0;
	double lhs = 0.0;
	double rhs = 0.0;
	std::vector<std::string> warnings;
	std::size_t checked = 0;

	explicit operator bool() const noexcept { return holds; }
};

/**
 * Checks that the triangle operation maps range(m) x range(m) into range(m).
 * Throws InputError on the first escape unless `allow_escape`, in which case
 * a warning is appended instead.
 */
inline void check_triangle_range(const MonotoneMeasure& m, const FusionOp& triangle, bool allow_escape,
                                 std::vector<std::string>& warnings)
{
	const auto r = m.range();
	for (double c : r)
		for (double d : r) {
			const double out = triangle(c, d);
			if (m.in_range(out))
				continue;
			const std::string msg = triangle.name() + "(" + format_number(c) + ", " + format_number(d) +
			                        ") = " + format_number(out) + " is not a value of the measure";
			if (!allow_escape)
				throw InputError(msg + " (use --allow-range-escape to continue)");
			warnings.push_back("range escape: " + msg);
			return;
		}
}

struct DependenceQuery
{
	MonotoneMeasure measure;
	SimpleFunction f;
	SimpleFunction g;
	Mask a = 0;
	Mask b = 0;
	FusionOp triangle = FusionOp::min();
	double k = 1.0;
	bool allow_range_escape = false;
};

/**
 * Decides m(A and B and {f >= alpha} and {g >= beta}) >=
 * m(A and {f >= alpha}) triangle m(B and {g >= beta}) for all alpha, beta in
 * [0, k]. The level sets only change at values of f (on A) and g (on B), so
 * the levels 0, those values, and k (empty level set when k exceeds the
 * maximum) decide the continuum exactly.
 */
inline DependenceVerdict is_m_positively_dependent(const DependenceQuery& q)
{
	const auto& m = q.measure;
	const std::size_t n = m.space().size();
	if (q.f.size() != n || q.g.size() != n)
		throw InputError("functions must have one value per atom");
	if (!m.space().contains(q.a) || !m.space().contains(q.b))
		throw InputError("sets A and B must be subsets of the space");
	if (!(q.k > 0.0))
		throw InputError("bound k must be positive");
	for (std::size_t i = 0; i < n; ++i)
		if (q.f[i] > q.k || q.g[i] > q.k)
			throw InputError("function values exceed k = " + format_number(q.k));
	DependenceVerdict v;
	check_triangle_range(m, q.triangle, q.allow_range_escape, v.warnings);
	const auto alphas = merge_values(q.f.distinct_values(q.a), {0.0, q.k});
	const auto betas = merge_values(q.g.distinct_values(q.b), {0.0, q.k});
	for (double alpha : alphas) {
		const Mask fa = q.a & q.f.level_set(alpha);
		for (double beta : betas) {
			++v.checked;
			const Mask gb = q.b & q.g.level_set(beta);
			const double lhs = m(fa & gb);
			const double rhs = q.triangle(m(fa), m(gb));
			if (lhs < rhs - measure_tolerance) {
				v.holds = false;
				v.witness = {alpha, beta};
				v.first = fa;
				v.second = gb;
				v.lhs = lhs;
				v.rhs = rhs;
				return v;
			}
		}
	}
	return v;
}

/// m(C and D) >= m(C) triangle m(D) for all sets C, D.
inline DependenceVerdict measure_supports_all_pairs(const MonotoneMeasure& m, const FusionOp& triangle,
                                                    bool allow_range_escape = false)
{
	DependenceVerdict v;
	check_triangle_range(m, triangle, allow_range_escape, v.warnings);
	const auto scan = detail::scan_set_pairs(m, [&](Mask c, Mask d, double& lhs, double& rhs) {
		++v.checked;
		lhs = m(c & d);
		rhs = triangle(m(c), m(d));
		return lhs < rhs - measure_tolerance;
	});
	if (!scan) {
		v.holds = false;
		v.first = scan.first;
		v.second = scan.second;
		v.lhs = scan.lhs;
		v.rhs = scan.rhs;
		v.witness = {m(scan.first), m(scan.second)};
	}
	return v;
}

/**
 * Condition Z1: every pair (c, d) of measure values is realised by sets C, D
 * with m(C) = c, m(D) = d and m(C and D) = c triangle d. Reports the first
 * unrealised pair in ascending order.
 */
inline DependenceVerdict condition_z1(const MonotoneMeasure& m, const FusionOp& triangle,
                                      bool allow_range_escape = false)
{
	detail::require_pair_scan(m.space());
	DependenceVerdict v;
	check_triangle_range(m, triangle, allow_range_escape, v.warnings);
	const auto r = m.range();
	const std::size_t sets = m.space().subset_count();
	std::vector<std::size_t> index(sets);
	for (std::size_t s = 0; s < sets; ++s) {
		const double x = m(static_cast<Mask>(s));
		std::size_t i = 0;
		while (i + 1 < r.size() && std::fabs(r[i] - x) > measure_tolerance)
			++i;
		index[s] = i;
	}
	std::vector<char> realised(r.size() * r.size(), 0);
	std::vector<Mask> example_c(r.size() * r.size(), 0), example_d(r.size() * r.size(), 0);
	for (std::size_t c = 0; c < sets; ++c)
		for (std::size_t d = 0; d < sets; ++d) {
			const std::size_t cell = index[c] * r.size() + index[d];
			if (realised[cell])
				continue;
			const double target = triangle(m(static_cast<Mask>(c)), m(static_cast<Mask>(d)));
			if (std::fabs(m(static_cast<Mask>(c & d)) - target) <= measure_tolerance) {
				realised[cell] = 1;
				example_c[cell] = static_cast<Mask>(c);
				example_d[cell] = static_cast<Mask>(d);
			}
		}
	for (std::size_t i = 0; i < r.size(); ++i)
		for (std::size_t j = 0; j < r.size(); ++j) {
			++v.checked;
			if (!realised[i * r.size() + j]) {
				v.holds = false;
				v.witness = {r[i], r[j]};
				v.rhs = triangle(r[i], r[j]);
				return v;
			}
		}
	return v;
}

} // namespace sugeno

#endif
