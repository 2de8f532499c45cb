// Sugeno, Shilkret and opposite-Sugeno integrals of one function on a
// three-point space, then a continuum integral from its level function.

#include <iostream>

#include "sugeno.hpp"

using namespace sugeno;

int main()
{
	const FiniteSpace space({"a", "b", "c"});
	// values by subset bit mask: {}, {a}, {b}, {a,b}, {c}, {a,c}, {b,c}, X
	const auto m = MonotoneMeasure::from_table(space, {0, 0.2, 0.3, 0.6, 0.1, 0.4, 0.5, 1});
	const SimpleFunction f({0.9, 0.5, 0.2});
	const Mask all = space.universe();

	std::cout << "sugeno      " << sugeno::sugeno(m, all, f).value << '\n';
	std::cout << "shilkret    " << shilkret(m, all, f).value << '\n';
	std::cout << "opposite    " << opposite_sugeno(m, all, f).value << '\n';
	std::cout << "godel q     " << q_integral(FusionOp::godel(), m, f).value << '\n';

	const auto r = sugeno::sugeno(m, space.mask_of({"b", "c"}), f);
	std::cout << "on " << space.describe(space.mask_of({"b", "c"})) << "  " << r.value << " at t = " << r.argmax
	          << " [" << r.evidence.describe() << "]\n";

	// f(x) = x^2 on [0, 1] under m(A) = 1 - sup of the complement:
	// the level function is t -> 1 - sqrt(t)
	const SurvivalScenario levels(1.0, {{Interval::closed(0, 1), parse("1 - sqrt(t)", {"t"})}});
	const auto c = integrate_survival(FusionOp::min(), levels);
	std::cout.precision(15);
	std::cout << "continuum   " << c.value << " [" << c.evidence.describe() << "]\n";
}
