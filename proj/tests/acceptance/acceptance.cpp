// One [PASS]/[FAIL] line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sugeno/cli/app.hpp"

using namespace sugeno;
using nlohmann::json;

namespace {

struct Criterion
{
	bool ok = true;
	std::vector<std::string> why;

	void require(bool cond, const std::string& what)
	{
		if (!cond) {
			ok = false;
			why.push_back(what);
		}
	}
};

struct CliRun
{
	int code;
	std::string out;
	double seconds;
};

CliRun cli_run(std::vector<std::string> args)
{
	args.insert(args.begin(), "sugeno");
	std::vector<const char*> argv;
	for (const auto& a : args)
		argv.push_back(a.c_str());
	std::ostringstream out, err;
	const auto t0 = std::chrono::steady_clock::now();
	const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
	const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
	return {code, out.str() + err.str(), dt.count()};
}

std::string fmt(double v)
{
	std::ostringstream s;
	s.precision(17);
	s << v;
	return s.str();
}

int failures = 0;

void report(int id, const std::string& title, const Criterion& c, const std::string& summary)
{
	std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << "AC" << id << " " << title << ": " << summary << '\n';
	for (const auto& w : c.why)
		std::cout << "       - " << w << '\n';
	failures += !c.ok;
}

void ac1()
{
	Criterion c;
	const auto r = cli_run({"repro", "counterexample-daraby-ghadimi", "--json"});
	const auto j = json::parse(r.out);
	const double lhs = j["inequality"]["lhs"].get<double>();
	const double rhs = j["inequality"]["rhs"].get<double>();
	const double expected = std::sqrt(0.15) + std::sqrt(0.54) - 1.0;
	c.require(lhs == 0.0, "lhs is " + fmt(lhs) + ", not exactly 0");
	c.require(std::fabs(rhs - expected) <= 1e-6 && std::fabs(rhs - 0.1221452) <= 1e-6, "rhs is " + fmt(rhs));
	c.require(j["verdict_summary"] == "inequality violated", "verdict is " + j["verdict_summary"].dump());
	c.require(r.code == 1, "exit code " + std::to_string(r.code));
	c.require(r.seconds < 1.0, "took " + fmt(r.seconds) + " s");
	report(1, "falsified square-root inequality", c,
	       "lhs = " + fmt(lhs) + ", rhs = " + fmt(rhs) + ", " + fmt(r.seconds) + " s");
}

void ac2()
{
	Criterion c;
	const auto r = cli_run({"repro", "minitive-sugeno-values", "--json"});
	const auto j = json::parse(r.out);
	const double expected[] = {1.0 / 3.0, 0.25, (3.0 - std::sqrt(5.0)) / 2.0};
	std::string values;
	c.require(j["integrals"].size() == 3, "expected three integrals");
	for (std::size_t i = 0; i < 3 && i < j["integrals"].size(); ++i) {
		const auto& res = j["integrals"][i]["result"];
		const double v = res["value"].get<double>();
		values += (i ? ", " : "") + fmt(v);
		c.require(std::fabs(v - expected[i]) <= 1e-8, "integral " + std::to_string(i) + " = " + fmt(v));
		c.require(res["method"] == "bisection", "integral " + std::to_string(i) + " did not use bisection");
	}
	c.require(r.code == 0, "exit code " + std::to_string(r.code));
	c.require(r.seconds < 1.0, "took " + fmt(r.seconds) + " s");
	report(2, "minitive capacity Sugeno integrals", c, values + ", " + fmt(r.seconds) + " s");
}

void ac3()
{
	Criterion c;
	const auto r = cli_run({"repro", "lebesgue-lukasiewicz-equality", "--json"});
	const auto j = json::parse(r.out);
	const auto& ints = j["inequality"]["integrals"];
	const double joint = ints[0]["value"].get<double>();
	const double f = ints[1]["value"].get<double>();
	const double g = ints[2]["value"].get<double>();
	const double lhs = j["inequality"]["lhs"].get<double>();
	const double rhs = j["inequality"]["rhs"].get<double>();
	c.require(std::fabs(f - (2.0 - std::sqrt(2.0))) <= 1e-8, "I(f) = " + fmt(f));
	c.require(std::fabs(g - (std::sqrt(2.0) - 1.0)) <= 1e-8, "I(g) = " + fmt(g));
	c.require(joint == 0.0, "I(W(f, g)) = " + fmt(joint));
	// independent right-hand side: W(I(f)^2, I(g)^2)
	const double oracle_rhs = std::max(f * f + g * g - 1.0, 0.0);
	c.require(std::fabs(rhs - oracle_rhs) <= 1e-12, "rhs " + fmt(rhs) + " vs " + fmt(oracle_rhs));
	c.require(std::fabs(lhs - rhs) <= 1e-9, "gap " + fmt(lhs - rhs));
	c.require(r.code == 0, "exit code " + std::to_string(r.code));
	report(3, "Lebesgue equality case", c,
	       "I(f) = " + fmt(f) + ", I(g) = " + fmt(g) + ", I(W(f,g)) = " + fmt(joint) + ", lhs - rhs = " +
	           fmt(lhs - rhs));
}

void ac4()
{
	Criterion c;
	InequalityConfig cfg;
	cfg.circ = {FusionOp::lukasiewicz(), FusionOp::lukasiewicz(), FusionOp::lukasiewicz()};
	cfg.cd = CdDomain::of_values({0.0, 1.0});
	const auto two = check_scalar_condition(cfg);
	c.require(two.status == Status::HoldsOnGrid, std::string("{0,1}: ") + to_string(two.status));
	cfg.cd = CdDomain::interval(0.0, 1.0);
	const auto iv = check_scalar_condition(cfg);
	c.require(iv.status == Status::Violated, std::string("[0,1]: ") + to_string(iv.status));
	if (iv.status == Status::Violated) {
		const auto [l, r] = scalar_sides(cfg, iv.witness[0], iv.witness[1], iv.witness[2], iv.witness[3]);
		c.require(l == iv.lhs && r == iv.rhs && l < r - 1e-9, "first witness does not re-check");
		const std::vector<double> quoted{0.5, 0.5, 0.75, 0.75};
		c.require(std::lexicographical_compare(iv.witness.begin(), iv.witness.end(), quoted.begin(), quoted.end()),
		          "first witness comes after (0.5, 0.5, 0.75, 0.75) in scan order");
	}
	// the quoted point, evaluated in closed form and by the library
	const double w_lhs = std::max(0.5 * 0.5 + 0.75 - 1.0, 0.0);
	const double w_rhs = std::max(0.5 + 0.75 - 1.0, 0.0) * std::max(0.5 + 0.75 - 1.0, 0.0);
	const auto [pl, pr] = scalar_sides(cfg, 0.5, 0.5, 0.75, 0.75);
	c.require(pl == 0.0 && w_lhs == 0.0, "lhs at (0.5, 0.5, 0.75, 0.75) is " + fmt(pl));
	c.require(pr == 0.0625 && w_rhs == 0.0625, "rhs at (0.5, 0.5, 0.75, 0.75) is " + fmt(pr));
	const auto probe = cli_run({"repro", "lukasiewicz-circ-interval", "--json"});
	const auto pj = json::parse(probe.out);
	c.require(probe.code == 1, "bundled scenario exit code " + std::to_string(probe.code));
	c.require(pj["verdict"]["witness"] == json(iv.witness), "bundled scenario witness " + pj["verdict"]["witness"].dump());
	c.require(pj["probe"]["violated"] == true && pj["probe"]["lhs"] == 0.0 && pj["probe"]["rhs"] == 0.0625,
	          "bundled probe " + pj["probe"].dump());
	std::string w;
	for (double x : iv.witness)
		w += (w.empty() ? "" : ", ") + fmt(x);
	report(4, "Lukasiewicz scalar condition", c,
	       std::string("{0,1} ") + to_string(two.status) + " (" + two.evidence.describe() + "); [0,1] " +
	           to_string(iv.status) + " first at (" + w + "); (0.5, 0.5, 0.75, 0.75) gives " + fmt(pl) + " < " +
	           fmt(pr));
}

void ac5()
{
	Criterion c;
	const ShapeTriple id{ShapeFunction::identity(), ShapeFunction::identity(), ShapeFunction::identity()};
	std::string summary;
	for (const auto& conj : {FusionOp::godel(), FusionOp::godel_contra()}) {
		const auto v = q_condition(conj, id, FusionOp::prod());
		const bool violated = v.status == Status::Violated && v.witness.size() == 3;
		c.require(violated, conj.name() + ": " + to_string(v.status));
		if (!violated)
			continue;
		const double a = v.witness[0], b = v.witness[1], cc = v.witness[2];
		c.require(b == 1.0 && a > 0.0 && cc > 0.0 && a + cc <= 1.0 + 1e-12,
		          conj.name() + " witness outside the b = 1 family");
		// lhs = a (x) c is 0 on the family; rhs = (a (x) 1)(1 (x) c)
		const double lhs = conj(a, cc), rhs = conj(a, 1.0) * conj(1.0, cc);
		c.require(lhs < rhs - 1e-9, conj.name() + " witness does not re-check");
		c.require(v.evidence.describe() == "grid(0.01)", conj.name() + " evidence " + v.evidence.describe());
		summary += (summary.empty() ? "" : "; ") + conj.name() + " at (" + fmt(a) + ", " + fmt(b) + ", " + fmt(cc) +
		           ") " + fmt(lhs) + " < " + fmt(rhs);
	}
	report(5, "Godel q-integral condition", c, summary);
}

void ac6()
{
	Criterion c;
	const auto r = cli_run({"repro", "shifted-shape-undefined", "--json"});
	const auto j = json::parse(r.out);
	c.require(j["outcome"] == "hypothesis_failed", "outcome " + j["outcome"].dump());
	c.require(r.code == 2, "exit code " + std::to_string(r.code));
	const auto& ineq = j["report"]["inequality"];
	c.require(ineq["failed_at"] == 0.4, "failed_at " + ineq["failed_at"].dump());
	const std::string detail = ineq["detail"].get<std::string>();
	c.require(detail.find("undefined at 0.4") != std::string::npos, "detail: " + detail);

	// same through the library
	const auto phi = ShapeFunction::custom("half-shift", parse("0.5 * (x + 1)"), Interval::closed(0, 1), ShapeFlags::all(),
	                                       parse("2 * x - 1"), Interval::closed(0.5, 1));
	const auto m = MonotoneMeasure::from_table(FiniteSpace::numbered(2), {0, 0.4, 0.4, 1});
	const auto rep = sugeno_chebyshev(m, SimpleFunction({0.5, 0}), SimpleFunction({0.5, 0}), 1, {phi, phi, phi},
	                                  {phi.inverse(), phi.inverse(), phi.inverse()}, FusionOp::prod());
	c.require(rep.outcome == Outcome::HypothesisFailed, std::string("library outcome ") + to_string(rep.outcome));
	report(6, "shifted shape without phi(0) = 0", c, detail);
}

void ac7()
{
	Criterion c;
	const auto t0 = std::chrono::steady_clock::now();
	const auto props = run_all_properties();
	const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
	std::string summary;
	std::size_t failed = 0;
	const std::vector<std::pair<std::string, std::size_t>> sizes{
	    {"exact-vs-oracle", 1000},           {"condition-forms-agree", 200},      {"comonotone-chebyshev", 1000},
	    {"necessity-any-functions", 500},    {"dependence-all-pairs", 300},       {"dependence-dual-subadditive", 300},
	    {"dependence-godel-small", 300},     {"min-dominates-lukasiewicz", 1},    {"forward-soundness", 1000}};
	for (const auto& [name, trials] : sizes) {
		const PropertyReport* p = nullptr;
		for (const auto& r : props)
			if (r.name == name)
				p = &r;
		if (!p) {
			c.require(false, name + " missing");
			continue;
		}
		failed += p->failures;
		c.require(p->passed(), name + ": " + std::to_string(p->failures) + " failures, first: " + p->first_failure);
		c.require(p->trials >= trials, name + " ran " + std::to_string(p->trials) + " trials");
		c.require(p->exercised > 0, name + " exercised no trial");
		summary += (summary.empty() ? "" : ", ") + name + " " + std::to_string(p->exercised) + "/" +
		           std::to_string(p->trials);
	}
	c.require(dt.count() < 60.0, "took " + fmt(dt.count()) + " s");
	report(7, "property suite", c, std::to_string(failed) + " failures, exercised/trials " + summary + "; " + fmt(dt.count()) + " s");
}

void ac8()
{
	Criterion c;
	const auto a = cli_run({"repro", "--all", "--json"});
	const auto b = cli_run({"repro", "--all", "--json"});
	c.require(a.out == b.out, "outputs differ");
	c.require(a.code == 0 && b.code == 0, "some bundled expectation was not met");
	const auto j = json::parse(a.out);
	report(8, "deterministic bundled suite", c,
	       std::to_string(j["reports"].size()) + " reports, " + std::to_string(a.out.size()) +
	           " bytes, identical: " + (a.out == b.out ? "yes" : "no"));
}

} // namespace

int main()
{
	const std::vector<void (*)()> all{ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8};
	for (std::size_t i = 0; i < all.size(); ++i) {
		try {
			all[i]();
		} catch (const std::exception& e) {
			Criterion c;
			c.require(false, e.what());
			report(static_cast<int>(i + 1), "criterion", c, "threw");
		}
	}
	std::cout << (all.size() - failures) << " of " << all.size() << " criteria pass\n";
	return failures ? 1 : 0;
}
