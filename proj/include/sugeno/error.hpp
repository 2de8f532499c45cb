#ifndef SUGENO_ERROR_HPP
#define SUGENO_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sugeno {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// A precondition on the caller's input was not met.
class InputError : public Error
{
public:
	using Error::Error;
};

/// Syntax or static error in an expression source, with a 1-based location.
class ParseError : public Error
{
public:
	ParseError(const std::string& what, std::size_t line, std::size_t column)
	    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
	      line_(line), column_(column)
	{
	}

	std::size_t line() const noexcept { return line_; }
	std::size_t column() const noexcept { return column_; }

private:
	std::size_t line_;
	std::size_t column_;
};

/// Evaluation left the domain of an expression or function.
class EvalError : public Error
{
public:
	using Error::Error;
};

/// A shape function was applied outside its declared domain.
class ShapeDomainError : public EvalError
{
public:
	ShapeDomainError(const std::string& what, std::string shape, double argument)
	    : EvalError(what), shape_(std::move(shape)), argument_(argument)
	{
	}

	const std::string& shape() const noexcept { return shape_; }
	double argument() const noexcept { return argument_; }

private:
	std::string shape_;
	double argument_;
};

} // namespace sugeno

#endif
