#ifndef SUGENO_MEASURE_HPP
#define SUGENO_MEASURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sugeno/error.hpp"
#include "sugeno/expr.hpp"
#include "sugeno/extended.hpp"
#include "sugeno/grid.hpp"
#include "sugeno/monotone.hpp"

namespace sugeno {

/// Subset of a finite space; bit i set means atom i is a member.
using Mask = std::uint32_t;

inline constexpr std::size_t max_atoms = 24;
inline constexpr std::size_t max_pair_scan_atoms = 12;
inline constexpr double measure_tolerance = 1e-12;

/// A finite set of labelled atoms with the full power set as sigma-algebra.
class FiniteSpace
{
public:
	FiniteSpace() : FiniteSpace(std::vector<std::string>{"x"}) {}

	explicit FiniteSpace(std::vector<std::string> labels) : labels_(std::move(labels))
	{
		if (labels_.empty() || labels_.size() > max_atoms)
			throw InputError("a space needs between 1 and " + std::to_string(max_atoms) + " atoms");
		for (std::size_t i = 0; i < labels_.size(); ++i)
			for (std::size_t j = 0; j < i; ++j)
				if (labels_[i] == labels_[j])
					throw InputError("duplicate atom label '" + labels_[i] + "'");
	}

	/// Atoms labelled "1".."n".
	static FiniteSpace numbered(std::size_t n)
	{
		std::vector<std::string> labels;
		for (std::size_t i = 1; i <= n; ++i)
			labels.push_back(std::to_string(i));
		return FiniteSpace(std::move(labels));
	}

	std::size_t size() const noexcept { return labels_.size(); }
	std::size_t subset_count() const noexcept { return std::size_t{1} << labels_.size(); }
	Mask universe() const noexcept { return static_cast<Mask>(subset_count() - 1); }
	const std::vector<std::string>& labels() const noexcept { return labels_; }
	const std::string& label(std::size_t i) const { return labels_.at(i); }

	bool contains(Mask m) const noexcept { return (m & ~universe()) == 0; }

	std::optional<std::size_t> index_of(const std::string& label) const
	{
		for (std::size_t i = 0; i < labels_.size(); ++i)
			if (labels_[i] == label)
				return i;
		return std::nullopt;
	}

	Mask mask_of(const std::vector<std::string>& members) const
	{
		Mask m = 0;
		for (const auto& s : members) {
			const auto i = index_of(s);
			if (!i)
				throw InputError("unknown atom '" + s + "'");
			m |= Mask{1} << *i;
		}
		return m;
	}

	std::string describe(Mask m) const
	{
		std::string out = "{";
		for (std::size_t i = 0; i < labels_.size(); ++i)
			if (m & (Mask{1} << i)) {
				if (out.size() > 1)
					out += ", ";
				out += labels_[i];
			}
		return out + "}";
	}

	friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

private:
	std::vector<std::string> labels_;
};

/// Outcome of an exhaustive scan over pairs of sets.
struct SetPairVerdict
{
	bool holds = true;
	Mask first = 0;
	Mask second = 0;
	double lhs = 0.0;
	double rhs = 0.0;

	explicit operator bool() const noexcept { return holds; }
};

/**
 * A monotone measure on the power set of a finite space, stored as a full
 * table indexed by subset mask.
 */
class MonotoneMeasure
{
public:
	static MonotoneMeasure from_table(FiniteSpace space, std::vector<double> table)
	{
		if (table.size() != space.subset_count())
			throw InputError("measure table has " + std::to_string(table.size()) + " entries, expected " +
			                 std::to_string(space.subset_count()) + " (one per subset)");
		for (std::size_t a = 0; a < table.size(); ++a)
			if (std::isnan(table[a]) || table[a] < 0.0)
				throw InputError("measure value of " + space.describe(static_cast<Mask>(a)) +
				                 " outside [0, inf]");
		if (table[0] != 0.0)
			throw InputError("measure of the empty set must be 0");
		if (!(table.back() > 0.0))
			throw InputError("measure of the whole space must be positive");
		for (std::size_t a = 0; a < table.size(); ++a)
			for (std::size_t i = 0; i < space.size(); ++i) {
				const std::size_t b = a | (std::size_t{1} << i);
				if (b != a && table[a] > table[b])
					throw InputError("monotonicity violated: m(" + space.describe(static_cast<Mask>(a)) +
					                 ") = " + format_number(table[a]) + " > m(" +
					                 space.describe(static_cast<Mask>(b)) + ") = " +
					                 format_number(table[b]));
			}
		return MonotoneMeasure(std::move(space), std::move(table));
	}

	/// Table given as a sparse map; every subset must be present.
	static MonotoneMeasure from_entries(FiniteSpace space, const std::map<Mask, double>& entries)
	{
		std::vector<double> table(space.subset_count());
		for (std::size_t a = 0; a < table.size(); ++a) {
			auto it = entries.find(static_cast<Mask>(a));
			if (it == entries.end())
				throw InputError("missing measure value for " + space.describe(static_cast<Mask>(a)));
			table[a] = it->second;
		}
		for (const auto& [mask, value] : entries)
			if (!space.contains(mask))
				throw InputError("measure entry for a set outside the space");
		return from_table(std::move(space), std::move(table));
	}

	double operator()(Mask a) const { return table_.at(a); }
	NonNegExt value(Mask a) const { return NonNegExt(table_.at(a)); }

	const FiniteSpace& space() const noexcept { return space_; }
	const std::vector<double>& table() const noexcept { return table_; }
	double total() const noexcept { return table_.back(); }
	bool is_capacity() const noexcept { return std::fabs(total() - 1.0) <= measure_tolerance; }

	/// Distinct values of the measure, ascending; values closer than 1e-12 are merged.
	std::vector<double> range() const
	{
		std::vector<double> v = table_;
		std::sort(v.begin(), v.end());
		std::vector<double> out;
		for (double x : v)
			if (out.empty() || x - out.back() > measure_tolerance)
				out.push_back(x);
		return out;
	}

	/// Whether `v` is a value of the measure (to 1e-12).
	bool in_range(double v) const
	{
		return std::any_of(table_.begin(), table_.end(),
		                   [&](double x) { return std::fabs(x - v) <= measure_tolerance; });
	}

private:
	MonotoneMeasure(FiniteSpace space, std::vector<double> table)
	    : space_(std::move(space)), table_(std::move(table))
	{
	}

	FiniteSpace space_;
	std::vector<double> table_;
};

namespace detail {

inline void require_pair_scan(const FiniteSpace& s)
{
	if (s.size() > max_pair_scan_atoms)
		throw InputError("exhaustive set-pair scans are limited to " + std::to_string(max_pair_scan_atoms) +
		                 " atoms");
}

template <class Violates>
SetPairVerdict scan_set_pairs(const MonotoneMeasure& m, Violates&& violates)
{
	require_pair_scan(m.space());
	const std::size_t n = m.space().subset_count();
	SetPairVerdict v;
	for (std::size_t c = 0; c < n; ++c)
		for (std::size_t d = 0; d < n; ++d) {
			double lhs = 0.0, rhs = 0.0;
			if (violates(static_cast<Mask>(c), static_cast<Mask>(d), lhs, rhs)) {
				v.holds = false;
				v.first = static_cast<Mask>(c);
				v.second = static_cast<Mask>(d);
				v.lhs = lhs;
				v.rhs = rhs;
				return v;
			}
		}
	return v;
}

} // namespace detail

/// m(C and D) = min(m(C), m(D)) for all C, D.
inline SetPairVerdict check_minitive(const MonotoneMeasure& m)
{
	return detail::scan_set_pairs(m, [&](Mask c, Mask d, double& lhs, double& rhs) {
		lhs = m(c & d);
		rhs = std::min(m(c), m(d));
		return std::fabs(lhs - rhs) > measure_tolerance;
	});
}

/// m(A or B) <= m(A) + m(B) for all A, B.
inline SetPairVerdict check_subadditive(const MonotoneMeasure& m)
{
	return detail::scan_set_pairs(m, [&](Mask a, Mask b, double& lhs, double& rhs) {
		lhs = m(a | b);
		rhs = m(a) + m(b);
		return lhs > rhs + measure_tolerance;
	});
}

/// m(A or B) + m(A and B) >= m(A) + m(B) for all A, B.
inline SetPairVerdict check_supermodular(const MonotoneMeasure& m)
{
	return detail::scan_set_pairs(m, [&](Mask a, Mask b, double& lhs, double& rhs) {
		lhs = m(a | b) + m(a & b);
		rhs = m(a) + m(b);
		return lhs < rhs - measure_tolerance;
	});
}

inline bool is_minitive(const MonotoneMeasure& m) { return check_minitive(m).holds; }
inline bool is_subadditive(const MonotoneMeasure& m) { return check_subadditive(m).holds; }
inline bool is_supermodular(const MonotoneMeasure& m) { return check_supermodular(m).holds; }

/// Necessity measure m(A) = 1 - max of the possibility distribution outside A.
inline MonotoneMeasure necessity_from_possibility(FiniteSpace space, const std::vector<double>& pi)
{
	if (pi.size() != space.size())
		throw InputError("possibility distribution needs one value per atom");
	double top = 0.0;
	for (double p : pi) {
		if (!(p >= 0.0 && p <= 1.0))
			throw InputError("possibility values must lie in [0, 1]");
		top = std::max(top, p);
	}
	if (top != 1.0)
		throw InputError("possibility distribution is not normalised (max must be 1)");
	std::vector<double> table(space.subset_count());
	for (std::size_t a = 0; a < table.size(); ++a) {
		double outside = 0.0;
		for (std::size_t i = 0; i < space.size(); ++i)
			if (!(a & (std::size_t{1} << i)))
				outside = std::max(outside, pi[i]);
		table[a] = 1.0 - outside;
	}
	return MonotoneMeasure::from_table(std::move(space), std::move(table));
}

/// m(B) = h(P(B)) for a probability vector p and an increasing convex h with h(0)=0, h(1)=1.
inline MonotoneMeasure distorted_probability(FiniteSpace space, const std::vector<double>& p, const Expr& h,
                                             const CheckOptions& opt = {})
{
	if (p.size() != space.size())
		throw InputError("probability vector needs one value per atom");
	double sum = 0.0;
	for (double x : p) {
		if (!(x >= 0.0 && x <= 1.0))
			throw InputError("probabilities must lie in [0, 1]");
		sum += x;
	}
	if (std::fabs(sum - 1.0) > 1e-9)
		throw InputError("probabilities must sum to 1 (got " + format_number(sum) + ")");
	if (h.variables().size() != 1)
		throw InputError("distortion must be a function of one variable");
	if (std::fabs(h(0.0)) > measure_tolerance || std::fabs(h(1.0) - 1.0) > measure_tolerance)
		throw InputError("distortion must satisfy h(0) = 0 and h(1) = 1");
	const auto inc = check_monotone_fn([&](double x) { return h(x); }, 0.0, 1.0, Direction::Increasing, opt);
	if (!inc)
		throw InputError("distortion is not increasing near x = " + format_number(inc.x1));
	const Axis axis = make_axis(0.0, 1.0, opt);
	for (std::size_t i = 1; i + 1 < axis.points.size(); ++i) {
		const double l = h(axis.points[i - 1]), c = h(axis.points[i]), r = h(axis.points[i + 1]);
		if (l + r < 2.0 * c - measure_tolerance)
			throw InputError("distortion is not convex near x = " + format_number(axis.points[i]));
	}
	std::vector<double> table(space.subset_count());
	for (std::size_t a = 0; a < table.size(); ++a) {
		double pa = 0.0;
		for (std::size_t i = 0; i < space.size(); ++i)
			if (a & (std::size_t{1} << i))
				pa += p[i];
		table[a] = h(std::min(pa, 1.0));
	}
	table[0] = 0.0;
	table.back() = 1.0;
	auto m = MonotoneMeasure::from_table(std::move(space), std::move(table));
	if (m.space().size() <= max_pair_scan_atoms) {
		const auto sm = check_supermodular(m);
		if (!sm)
			throw InputError("distorted probability is not supermodular at " + m.space().describe(sm.first) +
			                 ", " + m.space().describe(sm.second));
	}
	return m;
}

/// Dual capacity m^d(C) = 1 - m(complement of C).
inline MonotoneMeasure dual(const MonotoneMeasure& m)
{
	if (!m.is_capacity())
		throw InputError("the dual is defined for capacities (m(X) = 1)");
	const Mask u = m.space().universe();
	std::vector<double> table(m.space().subset_count());
	for (std::size_t a = 0; a < table.size(); ++a)
		table[a] = 1.0 - m(u & ~static_cast<Mask>(a));
	table[0] = 0.0;
	return MonotoneMeasure::from_table(m.space(), std::move(table));
}

/// One piece of a survival scenario: G(t) = body(t) for t in `interval`.
struct SurvivalSegment
{
	Interval interval;
	Expr body;
};

/**
 * The level function G(t) = m(D and {f >= t}) of a continuum example given
 * piecewise in closed form on [0, bound].
 */
class SurvivalScenario
{
public:
	SurvivalScenario(double bound, std::vector<SurvivalSegment> segments, const CheckOptions& opt = {})
	    : bound_(bound), segments_(std::move(segments))
	{
		if (!(bound > 0.0) || std::isinf(bound))
			throw InputError("survival scenario bound must be finite and positive");
		if (segments_.empty())
			throw InputError("survival scenario needs at least one segment");
		std::sort(segments_.begin(), segments_.end(), [](const SurvivalSegment& a, const SurvivalSegment& b) {
			if (a.interval.lo != b.interval.lo)
				return a.interval.lo < b.interval.lo;
			return a.interval.lo_closed && !b.interval.lo_closed;
		});
		std::vector<Interval> guards;
		for (std::size_t i = 0; i < segments_.size(); ++i) {
			const auto& s = segments_[i];
			if (s.interval.empty())
				throw InputError("empty survival interval " + s.interval.to_string());
			if (s.body.variables().size() != 1)
				throw InputError("survival expressions take exactly one variable (t)");
			if (i > 0 && segments_[i - 1].interval.overlaps_later(s.interval))
				throw InputError("overlapping survival intervals " + segments_[i - 1].interval.to_string() +
				                 " and " + s.interval.to_string());
			guards.push_back(s.interval);
		}
		if (auto gap = first_gap(guards, 0.0, bound_))
			throw InputError("survival segments leave t = " + format_number(*gap) + " uncovered");
		const auto v = check_monotone_fn([&](double t) { return (*this)(t); }, 0.0, bound_,
		                                 Direction::NonIncreasing, opt);
		if (!v)
			throw InputError("survival function increases between t = " + format_number(v.x1) + " and t = " +
			                 format_number(v.x2));
		for (const auto& s : segments_) {
			// endpoints of each piece, approached from inside
			const double lo = s.interval.lo_closed ? s.interval.lo : std::nextafter(s.interval.lo, infinity);
			const double hi = s.interval.hi_closed ? s.interval.hi : std::nextafter(s.interval.hi, -infinity);
			if (lo <= bound_)
				(void)(*this)(std::max(0.0, lo));
			if (hi >= 0.0)
				(void)(*this)(std::min(bound_, hi));
		}
	}

	/// G(t); throws EvalError outside every segment or when the body fails.
	double operator()(double t) const
	{
		for (const auto& s : segments_)
			if (s.interval.contains(t))
				return s.body(t);
		throw EvalError("t = " + format_number(t) + " is outside every survival segment");
	}

	double bound() const noexcept { return bound_; }
	const std::vector<SurvivalSegment>& segments() const noexcept { return segments_; }

private:
	double bound_;
	std::vector<SurvivalSegment> segments_;
};

} // namespace sugeno

#endif
