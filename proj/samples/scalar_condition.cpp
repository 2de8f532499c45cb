// Scans the scalar condition for Lukasiewicz circ operations, first with
// two-valued measure values and then with the whole interval.

#include <iostream>

#include "sugeno.hpp"

using namespace sugeno;

namespace {

void show(const char* label, const Verdict& v)
{
	std::cout << label << ": " << to_string(v.status) << " [" << v.evidence.describe() << "]";
	if (v.status == Status::Violated) {
		std::cout << " at (";
		for (std::size_t i = 0; i < v.witness.size(); ++i)
			std::cout << (i ? ", " : "") << v.witness[i];
		std::cout << ") with " << v.lhs << " < " << v.rhs;
	}
	std::cout << '\n';
}

} // namespace

int main()
{
	InequalityConfig cfg;
	cfg.inner = cfg.outer = FusionOp::prod();
	cfg.circ = {FusionOp::lukasiewicz(), FusionOp::lukasiewicz(), FusionOp::lukasiewicz()};

	cfg.cd = CdDomain::of_values({0, 1});
	show("c, d in {0, 1}", check_scalar_condition(cfg));

	cfg.cd = CdDomain::interval(0, 1);
	show("c, d in [0, 1]", check_scalar_condition(cfg));

	const auto [lhs, rhs] = scalar_sides(cfg, 0.5, 0.5, 0.75, 0.75);
	std::cout << "at (0.5, 0.5, 0.75, 0.75): " << lhs << " vs " << rhs << '\n';

	CheckOptions coarse;
	coarse.step = 0.1;
	show("c, d in [0, 1], step 0.1", check_scalar_condition(cfg, coarse));
}
