// Decides positive dependence of two functions for a necessity measure and
// for an additive one, then runs the staged inequality check.

#include <iostream>

#include "sugeno.hpp"

using namespace sugeno;

int main()
{
	const FiniteSpace space({"a", "b", "c"});
	const SimpleFunction f({0.9, 0.1, 0.5}), g({0.2, 0.8, 0.6});
	const Mask all = space.universe();

	const auto nec = necessity_from_possibility(space, {1, 0.4, 0.7});
	const auto v = is_m_positively_dependent({nec, f, g, all, all, FusionOp::min()});
	std::cout << "necessity: " << (v.holds ? "dependent" : "not dependent") << " (" << v.checked
	          << " level pairs)\n";

	const auto uniform = distorted_probability(space, {0.25, 0.25, 0.5}, parse("x"));
	const auto w = is_m_positively_dependent({uniform, f, g, all, all, FusionOp::min()});
	std::cout << "additive:  " << (w.holds ? "dependent" : "not dependent");
	if (!w.holds)
		std::cout << " at levels (" << w.witness[0] << ", " << w.witness[1] << "): " << w.lhs << " < " << w.rhs;
	std::cout << '\n';

	InequalityConfig cfg;
	cfg.inner = cfg.outer = FusionOp::min();
	const auto rep = forward_check(cfg, nec, f, g, all, all);
	for (const auto& s : rep.stages)
		std::cout << "  stage " << s.name << ": " << (s.passed ? "passed" : "failed") << '\n';
	std::cout << "outcome: " << to_string(rep.outcome) << '\n';
}
