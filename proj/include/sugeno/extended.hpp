#ifndef SUGENO_EXTENDED_HPP
#define SUGENO_EXTENDED_HPP

#include <charconv>
#include <cmath>
#include <compare>
#include <limits>
#include <string>

#include "sugeno/error.hpp"

namespace sugeno {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// Product on [0, inf] with the convention 0 * inf = inf * 0 = 0.
inline double ext_mul(double a, double b) noexcept
{
	if (a == 0.0 || b == 0.0)
		return 0.0;
	return a * b;
}

/// Shortest decimal text that reads back to the same double; "inf" for infinity.
inline std::string format_number(double v)
{
	if (std::isinf(v))
		return v > 0 ? "inf" : "-inf";
	if (std::isnan(v))
		return "nan";
	if (v == 0.0)
		return "0";
	char buf[64];
	auto res = std::to_chars(buf, buf + sizeof buf, v);
	return std::string(buf, res.ptr);
}

/**
 * An element of the extended half-line [0, inf].
 *
 * Values are binary64; infinity is the IEEE infinity. Multiplication
 * follows the measure-theoretic convention 0 * inf = 0.
 */
class NonNegExt
{
public:
	constexpr NonNegExt() noexcept = default;

	explicit NonNegExt(double v) : value_(v)
	{
		if (std::isnan(v) || v < 0.0)
			throw InputError("value outside [0, inf]: " + format_number(v));
		if (v == 0.0)
			value_ = 0.0; // normalise -0
	}

	static NonNegExt inf() noexcept
	{
		NonNegExt r;
		r.value_ = infinity;
		return r;
	}

	constexpr double value() const noexcept { return value_; }
	bool is_infinite() const noexcept { return std::isinf(value_); }

	friend auto operator<=>(NonNegExt a, NonNegExt b) noexcept
	{
		return a.value_ <=> b.value_;
	}
	friend bool operator==(NonNegExt a, NonNegExt b) noexcept
	{
		return a.value_ == b.value_;
	}

	friend NonNegExt operator*(NonNegExt a, NonNegExt b)
	{
		return NonNegExt(ext_mul(a.value_, b.value_));
	}
	friend NonNegExt operator+(NonNegExt a, NonNegExt b)
	{
		return NonNegExt(a.value_ + b.value_);
	}

	std::string to_string() const { return format_number(value_); }

private:
	double value_ = 0.0;
};

} // namespace sugeno

#endif
