#ifndef SUGENO_SHAPE_HPP
#define SUGENO_SHAPE_HPP

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sugeno/error.hpp"
#include "sugeno/expr.hpp"
#include "sugeno/grid.hpp"
#include "sugeno/monotone.hpp"

namespace sugeno {

struct ShapeFlags
{
	bool non_decreasing = false;
	bool increasing = false;
	bool left_continuous = false;
	bool right_continuous = false;

	static ShapeFlags all() { return {true, true, true, true}; }
	friend bool operator==(const ShapeFlags&, const ShapeFlags&) = default;
};

/**
 * A one-variable function used to transform integrands (phi) or integral
 * values (psi). Applying it outside its domain throws ShapeDomainError;
 * nothing is clamped beyond a 1e-12 rounding allowance.
 */
class ShapeFunction
{
public:
	enum class Kind { Identity, Power, Custom };

	ShapeFunction() : ShapeFunction(identity()) {}

	static ShapeFunction identity(Interval domain = Interval::closed(0.0, infinity))
	{
		return ShapeFunction("id", Kind::Identity, 1.0, domain, ShapeFlags::all());
	}

	static ShapeFunction power(double p, Interval domain = Interval::closed(0.0, infinity))
	{
		if (!(p > 0.0) || std::isinf(p))
			throw InputError("power exponent must be positive and finite");
		if (p == 1.0)
			return identity(domain);
		std::string name = p == 2.0 ? "square" : p == 0.5 ? "sqrt" : "x^" + format_number(p);
		return ShapeFunction(std::move(name), Kind::Power, p, domain, ShapeFlags::all());
	}

	/// Expression in one variable; `inverse` (if any) is defined on `inverse_domain`,
	/// which defaults to the image of `domain` under an increasing body.
	static ShapeFunction custom(std::string name, Expr body, Interval domain, ShapeFlags flags,
	                            std::optional<Expr> inverse = std::nullopt,
	                            std::optional<Interval> inverse_domain = std::nullopt)
	{
		if (body.variables().size() != 1)
			throw InputError("shape '" + name + "' must be a function of one variable");
		if (inverse && inverse->variables().size() != 1)
			throw InputError("inverse of shape '" + name + "' must be a function of one variable");
		ShapeFunction s(std::move(name), Kind::Custom, 1.0, domain, flags);
		s.body_ = std::move(body);
		s.inverse_ = std::move(inverse);
		s.inverse_domain_ = inverse_domain;
		return s;
	}

	double operator()(double x) const
	{
		constexpr double slack = 1e-12;
		if (!(x >= domain_.lo - slack && x <= domain_.hi + slack) ||
		    (!domain_.lo_closed && x <= domain_.lo) || (!domain_.hi_closed && x >= domain_.hi))
			throw ShapeDomainError(name_ + " is not defined at " + format_number(x) + " (domain " +
			                           domain_.to_string() + ")",
			                       name_, x);
		x = std::min(std::max(x, domain_.lo), domain_.hi);
		switch (kind_) {
		case Kind::Identity:
			return x;
		case Kind::Power:
			return x == 0.0 ? 0.0 : std::pow(x, p_);
		case Kind::Custom:
			return (*body_)(x);
		}
		return x;
	}

	bool has_inverse() const noexcept { return kind_ != Kind::Custom || inverse_.has_value(); }

	/// The declared inverse, defined on the image of the domain.
	ShapeFunction inverse() const
	{
		if (!has_inverse())
			throw InputError("shape '" + name_ + "' has no declared inverse");
		Interval image = inverse_domain_.value_or(Interval{(*this)(domain_.lo), std::isinf(domain_.hi) ? infinity : (*this)(domain_.hi),
		                                                   domain_.lo_closed, domain_.hi_closed});
		switch (kind_) {
		case Kind::Identity:
			return identity(image);
		case Kind::Power:
			return power(1.0 / p_, image);
		case Kind::Custom:
			break;
		}
		const std::string inv_name = name_.rfind("^-1") == name_.size() - 3 && name_.size() > 3
		                                 ? name_.substr(0, name_.size() - 3)
		                                 : name_ + "^-1";
		return custom(inv_name, *inverse_, image, flags_, body_, domain_);
	}

	const std::string& name() const noexcept { return name_; }
	Kind kind() const noexcept { return kind_; }
	double exponent() const noexcept { return p_; }
	const Interval& domain() const noexcept { return domain_; }
	const ShapeFlags& flags() const noexcept { return flags_; }
	const std::optional<Expr>& body() const noexcept { return body_; }
	const std::optional<Expr>& inverse_body() const noexcept { return inverse_; }

	/// Same function restricted to `d`.
	ShapeFunction restricted(Interval d) const
	{
		ShapeFunction s = *this;
		s.domain_ = d;
		return s;
	}

	std::string to_string() const
	{
		switch (kind_) {
		case Kind::Identity: return "x";
		case Kind::Power: return "x^" + format_number(p_);
		case Kind::Custom: return body_->to_string();
		}
		return "?";
	}

private:
	ShapeFunction(std::string name, Kind kind, double p, Interval domain, ShapeFlags flags)
	    : name_(std::move(name)), kind_(kind), p_(p), domain_(domain), flags_(flags)
	{
		if (domain_.empty() || domain_.lo < 0.0)
			throw InputError("shape domain must be a non-empty subset of [0, inf]");
	}

	std::string name_;
	Kind kind_;
	double p_;
	Interval domain_;
	ShapeFlags flags_;
	std::optional<Expr> body_;
	std::optional<Expr> inverse_;
	std::optional<Interval> inverse_domain_;
};

using ShapeTriple = std::array<ShapeFunction, 3>;

/// Problems with a shape's declared flags and inverse, checked on a grid of its domain.
inline std::vector<std::string> validate_shape(const ShapeFunction& s, const CheckOptions& opt = {})
{
	std::vector<std::string> problems;
	const double lo = s.domain().lo_closed ? s.domain().lo : s.domain().lo + opt.step;
	const double hi_raw = std::isinf(s.domain().hi) ? 1.0 : s.domain().hi;
	const double hi = s.domain().hi_closed ? hi_raw : hi_raw - opt.step;
	if (lo > hi)
		return problems;
	try {
		if (s.flags().increasing) {
			const auto v = check_monotone_fn(s, lo, hi, Direction::Increasing, opt);
			if (!v)
				problems.push_back(s.name() + " is not increasing between " + format_number(v.x1) + " and " +
				                   format_number(v.x2));
		} else if (s.flags().non_decreasing) {
			const auto v = check_monotone_fn(s, lo, hi, Direction::NonDecreasing, opt);
			if (!v)
				problems.push_back(s.name() + " is not non-decreasing between " + format_number(v.x1) + " and " +
				                   format_number(v.x2));
		}
		if (s.kind() == ShapeFunction::Kind::Custom && s.has_inverse()) {
			const auto inv = s.inverse();
			for (double x : make_axis(lo, hi, opt).points) {
				const double back = inv(s(x));
				if (std::fabs(back - x) > 1e-9) {
					problems.push_back("declared inverse of " + s.name() + " fails at x = " + format_number(x));
					break;
				}
			}
		}
	} catch (const EvalError& e) {
		problems.push_back(e.what());
	}
	return problems;
}

} // namespace sugeno

#endif
