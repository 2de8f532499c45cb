#ifndef SUGENO_FUSION_HPP
#define SUGENO_FUSION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sugeno/error.hpp"
#include "sugeno/expr.hpp"
#include "sugeno/extended.hpp"
#include "sugeno/grid.hpp"

namespace sugeno {

enum class Builtin { Min, Prod, Lukasiewicz, Godel, GodelContra, Custom };

/// Regularity properties a fusion function is declared to have.
struct FusionFlags
{
	bool non_decreasing = false;
	bool left_continuous_first = false;
	bool left_continuous_second = false;
	bool right_continuous_first = false;
	bool right_continuous_second = false;
	bool commutative = false;
	bool semicopula = false;
	bool fuzzy_conjunction = false;

	FusionFlags swapped() const
	{
		FusionFlags f = *this;
		std::swap(f.left_continuous_first, f.left_continuous_second);
		std::swap(f.right_continuous_first, f.right_continuous_second);
		return f;
	}

	friend bool operator==(const FusionFlags&, const FusionFlags&) = default;
};

/**
 * A binary operation on [0, bound]^2 (a fusion function).
 *
 * The five builtins are evaluated in closed form; anything else carries an
 * expression body in the variables a and b. Immutable after construction.
 */
class FusionOp
{
public:
	FusionOp() : FusionOp(min()) {}

	static FusionOp min(double bound = 1.0) { return FusionOp("min", Builtin::Min, bound); }
	static FusionOp prod(double bound = 1.0) { return FusionOp("prod", Builtin::Prod, bound); }
	static FusionOp lukasiewicz() { return FusionOp("lukasiewicz", Builtin::Lukasiewicz, 1.0); }
	static FusionOp godel() { return FusionOp("godel", Builtin::Godel, 1.0); }
	static FusionOp godel_contra() { return FusionOp("godel_contra", Builtin::GodelContra, 1.0); }

	/// Builtin by its scenario name: min, prod, lukasiewicz, godel, godel_contra.
	static FusionOp builtin(std::string_view name, double bound = 1.0)
	{
		if (name == "min")
			return min(bound);
		if (name == "prod")
			return prod(bound);
		if (name == "lukasiewicz")
			return lukasiewicz();
		if (name == "godel")
			return godel();
		if (name == "godel_contra")
			return godel_contra();
		throw InputError("unknown fusion builtin '" + std::string(name) + "'");
	}

	static FusionOp custom(std::string name, Expr body, double bound, FusionFlags declared)
	{
		if (body.variables().size() != 2)
			throw InputError("fusion body '" + name + "' must use exactly two variables (a, b)");
		FusionOp op(std::move(name), Builtin::Custom, bound);
		op.body_ = std::move(body);
		op.flags_ = declared;
		return op;
	}

	/// The flags a builtin provably has on [0, bound]^2.
	static FusionFlags known_flags(Builtin kind, double bound)
	{
		FusionFlags f;
		switch (kind) {
		case Builtin::Min:
		case Builtin::Prod:
		case Builtin::Lukasiewicz:
			f.non_decreasing = true;
			f.left_continuous_first = f.left_continuous_second = true;
			f.right_continuous_first = f.right_continuous_second = true;
			f.commutative = true;
			f.semicopula = f.fuzzy_conjunction = bound == 1.0;
			break;
		case Builtin::Godel:
		case Builtin::GodelContra:
			f.non_decreasing = true;
			f.left_continuous_first = f.left_continuous_second = true;
			f.fuzzy_conjunction = true;
			break;
		case Builtin::Custom:
			break;
		}
		return f;
	}

	/// The operation (a, b) -> this(b, a).
	FusionOp swapped() const
	{
		FusionOp op = *this;
		op.swapped_ = !swapped_;
		op.flags_ = flags_.swapped();
		op.name_ = swapped_ ? name_.substr(5, name_.size() - 6) : "swap(" + name_ + ")";
		return op;
	}

	/// Same operation, different declarations. Builtins keep their closed form.
	FusionOp with_flags(FusionFlags declared) const
	{
		FusionOp op = *this;
		op.flags_ = declared;
		return op;
	}

	/// Closed-form value without range checks; the hot path of every scan.
	double operator()(double a, double b) const
	{
		if (swapped_)
			std::swap(a, b);
		switch (kind_) {
		case Builtin::Min:
			return std::min(a, b);
		case Builtin::Prod:
			return ext_mul(a, b);
		case Builtin::Lukasiewicz: {
			// lo - (1 - hi) is exact at hi = 1 and never exceeds lo
			const double lo = std::min(a, b), hi = std::max(a, b);
			return lo + hi > 1.0 ? lo - (1.0 - hi) : 0.0;
		}
		case Builtin::Godel:
			return a > 1.0 - b ? b : 0.0;
		case Builtin::GodelContra:
			return a > 1.0 - b ? a : 0.0;
		case Builtin::Custom:
			return (*body_)(a, b);
		}
		return 0.0;
	}

	/// Checked evaluation: both arguments must lie in [0, bound].
	NonNegExt eval(NonNegExt a, NonNegExt b) const
	{
		if (a.value() > bound_ || b.value() > bound_)
			throw InputError("argument of " + name_ + " outside [0, " + format_number(bound_) + "]");
		return NonNegExt((*this)(a.value(), b.value()));
	}

	const std::string& name() const noexcept { return name_; }
	Builtin kind() const noexcept { return kind_; }
	bool is_builtin() const noexcept { return kind_ != Builtin::Custom; }
	bool is_swapped() const noexcept { return swapped_; }
	double bound() const noexcept { return bound_; }
	const FusionFlags& flags() const noexcept { return flags_; }
	const std::optional<Expr>& body() const noexcept { return body_; }

	/// True for min that is not argument-swapped (swapping min is harmless but keep it literal).
	bool is_min() const noexcept { return kind_ == Builtin::Min; }

	/// Same closed form, orientation and bound.
	bool same_operation(const FusionOp& other) const
	{
		if (kind_ != other.kind_ || swapped_ != other.swapped_ || bound_ != other.bound_)
			return false;
		if (kind_ == Builtin::Custom)
			return *body_ == *other.body_;
		return true;
	}

private:
	FusionOp(std::string name, Builtin kind, double bound)
	    : name_(std::move(name)), kind_(kind), bound_(bound), flags_(known_flags(kind, bound))
	{
		if (!(bound > 0.0))
			throw InputError("fusion bound must be in (0, inf]");
	}

	std::string name_;
	Builtin kind_;
	double bound_;
	FusionFlags flags_;
	std::optional<Expr> body_;
	bool swapped_ = false;
};

/// eval_op: checked evaluation of a fusion operation.
inline NonNegExt eval_op(const FusionOp& op, NonNegExt a, NonNegExt b) { return op.eval(a, b); }

/// Outcome of a grid scan: either no violation on the grid or the first one in scan order.
struct GridVerdict
{
	bool holds = true;
	std::vector<double> witness;
	double lhs = 0.0;
	double rhs = 0.0;
	std::size_t points = 0;
	Evidence evidence;
	std::string note;

	explicit operator bool() const noexcept { return holds; }
};

enum class FlagStatus { NotDeclared, ConfirmedExact, ConfirmedOnGrid, Violated };

inline const char* to_string(FlagStatus s)
{
	switch (s) {
	case FlagStatus::NotDeclared: return "not_declared";
	case FlagStatus::ConfirmedExact: return "confirmed_exact";
	case FlagStatus::ConfirmedOnGrid: return "confirmed_on_grid";
	case FlagStatus::Violated: return "violated";
	}
	return "?";
}

struct FlagCheck
{
	std::string flag;
	FlagStatus status = FlagStatus::NotDeclared;
	std::vector<double> witness;
	std::string detail;
};

struct FlagReport
{
	std::string op;
	std::vector<FlagCheck> checks;
	std::string note;
	Evidence evidence;

	bool all_confirmed() const
	{
		return std::none_of(checks.begin(), checks.end(),
		                    [](const FlagCheck& c) { return c.status == FlagStatus::Violated; });
	}

	const FlagCheck* find(std::string_view flag) const
	{
		for (const auto& c : checks)
			if (c.flag == flag)
				return &c;
		return nullptr;
	}
};

namespace detail {

inline std::optional<std::vector<double>> scan_pairs(const std::vector<double>& xs, auto&& violates)
{
	for (double a : xs)
		for (double b : xs)
			if (violates(a, b))
				return std::vector<double>{a, b};
	return std::nullopt;
}

} // namespace detail

/**
 * Checks each declared flag of `op` on a grid of [0, bound]^2.
 *
 * Builtins whose declaration matches their known properties are confirmed
 * exactly; a declared flag a builtin does not have is reported with the
 * first grid counterexample when the grid exposes one.
 */
inline FlagReport validate_flags(const FusionOp& op, const CheckOptions& opt = {})
{
	constexpr double eq_tol = 1e-12;
	constexpr double delta = 1e-9;
	constexpr double jump_tol = 1e-6;

	FlagReport report;
	report.op = op.name();
	const Axis axis = make_axis(0.0, op.bound(), opt);
	report.note = axis.note;
	report.evidence = Evidence::grid(axis.step);
	const auto& xs = axis.points;
	const double top = xs.back();

	const FusionFlags declared = op.flags();
	const FusionFlags known = op.is_builtin()
	                              ? (op.is_swapped() ? FusionOp::known_flags(op.kind(), op.bound()).swapped()
	                                                 : FusionOp::known_flags(op.kind(), op.bound()))
	                              : FusionFlags{};

	auto run = [&](const char* flag, bool is_declared, bool is_known, auto&& grid_check) {
		FlagCheck c;
		c.flag = flag;
		if (!is_declared) {
			report.checks.push_back(std::move(c));
			return;
		}
		if (op.is_builtin() && is_known) {
			c.status = FlagStatus::ConfirmedExact;
			c.detail = "closed-form builtin";
			report.checks.push_back(std::move(c));
			return;
		}
		std::optional<std::vector<double>> witness = grid_check();
		if (witness) {
			c.status = FlagStatus::Violated;
			c.witness = *witness;
		} else if (op.is_builtin()) {
			c.status = FlagStatus::Violated;
			c.detail = "builtin lacks this property; grid found no witness";
		} else {
			c.status = FlagStatus::ConfirmedOnGrid;
		}
		report.checks.push_back(std::move(c));
	};

	run("non_decreasing", declared.non_decreasing, known.non_decreasing, [&] {
		std::optional<std::vector<double>> w;
		for (std::size_t i = 0; i < xs.size() && !w; ++i)
			for (std::size_t j = 0; j < xs.size() && !w; ++j) {
				const double v = op(xs[i], xs[j]);
				if (i + 1 < xs.size() && op(xs[i + 1], xs[j]) < v - eq_tol)
					w = std::vector<double>{xs[i], xs[j], xs[i + 1], xs[j]};
				else if (j + 1 < xs.size() && op(xs[i], xs[j + 1]) < v - eq_tol)
					w = std::vector<double>{xs[i], xs[j], xs[i], xs[j + 1]};
			}
		return w;
	});
	run("left_continuous_first", declared.left_continuous_first, known.left_continuous_first, [&] {
		return detail::scan_pairs(xs, [&](double a, double b) {
			return a > 0.0 && std::fabs(op(a, b) - op(a - delta, b)) > jump_tol;
		});
	});
	run("left_continuous_second", declared.left_continuous_second, known.left_continuous_second, [&] {
		return detail::scan_pairs(xs, [&](double a, double b) {
			return b > 0.0 && std::fabs(op(a, b) - op(a, b - delta)) > jump_tol;
		});
	});
	run("right_continuous_first", declared.right_continuous_first, known.right_continuous_first, [&] {
		return detail::scan_pairs(xs, [&](double a, double b) {
			return a < top && std::fabs(op(a, b) - op(a + delta, b)) > jump_tol;
		});
	});
	run("right_continuous_second", declared.right_continuous_second, known.right_continuous_second, [&] {
		return detail::scan_pairs(xs, [&](double a, double b) {
			return b < top && std::fabs(op(a, b) - op(a, b + delta)) > jump_tol;
		});
	});
	run("commutative", declared.commutative, known.commutative, [&] {
		return detail::scan_pairs(
		    xs, [&](double a, double b) { return std::fabs(op(a, b) - op(b, a)) > eq_tol; });
	});
	run("semicopula", declared.semicopula, known.semicopula, [&]() -> std::optional<std::vector<double>> {
		if (op.bound() != 1.0)
			return std::vector<double>{};
		for (double a : xs) {
			if (std::fabs(op(a, 1.0) - a) > eq_tol)
				return std::vector<double>{a, 1.0};
			if (std::fabs(op(1.0, a) - a) > eq_tol)
				return std::vector<double>{1.0, a};
		}
		return std::nullopt;
	});
	run("fuzzy_conjunction", declared.fuzzy_conjunction, known.fuzzy_conjunction,
	    [&]() -> std::optional<std::vector<double>> {
		    if (op.bound() != 1.0)
			    return std::vector<double>{};
		    if (op(1.0, 1.0) != 1.0)
			    return std::vector<double>{1.0, 1.0};
		    const double zeros[3][2] = {{0.0, 1.0}, {1.0, 0.0}, {0.0, 0.0}};
		    for (const auto& z : zeros)
			    if (op(z[0], z[1]) != 0.0)
				    return std::vector<double>{z[0], z[1]};
		    return std::nullopt;
	    });
	return report;
}

/**
 * Whether `outer` dominates `inner` on the grid:
 * outer(inner(a,b), inner(c,d)) >= inner(outer(a,c), outer(b,d)).
 * Reports the first violating (a, b, c, d) in lexicographic order.
 */
inline GridVerdict dominates(const FusionOp& outer, const FusionOp& inner, const CheckOptions& opt = {})
{
	if (outer.bound() != 1.0 || inner.bound() != 1.0)
		throw InputError("domination is checked for operations on [0, 1]");
	const Axis axis = make_axis(0.0, 1.0, opt);
	const auto& xs = axis.points;
	const std::size_t n = xs.size();
	std::vector<double> in(n * n), out(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			in[i * n + j] = inner(xs[i], xs[j]);
			out[i * n + j] = outer(xs[i], xs[j]);
		}
	GridVerdict v;
	v.evidence = Evidence::grid(axis.step);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c)
				for (std::size_t d = 0; d < n; ++d) {
					++v.points;
					const double lhs = outer(in[a * n + b], in[c * n + d]);
					const double rhs = inner(out[a * n + c], out[b * n + d]);
					if (lhs < rhs - opt.tolerance) {
						v.holds = false;
						v.witness = {xs[a], xs[b], xs[c], xs[d]};
						v.lhs = lhs;
						v.rhs = rhs;
						return v;
					}
				}
	return v;
}

/// Whether op(a, b) <= min(a, b) on the grid of [0, bound]^2.
inline GridVerdict leq_min(const FusionOp& op, const CheckOptions& opt = {})
{
	const Axis axis = make_axis(0.0, op.bound(), opt);
	GridVerdict v;
	v.evidence = Evidence::grid(axis.step);
	v.note = axis.note;
	for (double a : axis.points)
		for (double b : axis.points) {
			++v.points;
			const double lhs = op(a, b);
			const double rhs = std::min(a, b);
			if (lhs > rhs + opt.tolerance) {
				v.holds = false;
				v.witness = {a, b};
				v.lhs = lhs;
				v.rhs = rhs;
				return v;
			}
		}
	return v;
}

} // namespace sugeno

#endif
