#ifndef SUGENO_CLI_RUNNER_HPP
#define SUGENO_CLI_RUNNER_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sugeno/chebyshev.hpp"
#include "sugeno/cli/report.hpp"
#include "sugeno/cli/scenario.hpp"
#include "sugeno/dependence.hpp"
#include "sugeno/integral.hpp"
#include "sugeno/properties.hpp"

namespace sugeno::cli {

/// Command-line overrides of scenario defaults.
struct RunOptions
{
	std::optional<double> step;
	std::optional<double> tolerance;
	std::optional<std::uint64_t> seed;
	std::optional<std::size_t> budget;
	bool allow_range_escape = false;
};

struct RunResult
{
	Outcome outcome = Outcome::Holds;
	ojson report;
	std::vector<std::string> lines; ///< human-readable summary
};

namespace detail {

struct Context
{
	const Scenario& sc;
	const json& b;
	const RunOptions& ro;
	CheckOptions opt;
	RunResult res;

	Context(const Scenario& s, const RunOptions& r) : sc(s), b(s.body), ro(r)
	{
		const std::string p = s.name;
		opt.step = ro.step.value_or(number_or(b, "grid", opt.step, p));
		opt.tolerance = ro.tolerance.value_or(number_or(b, "tolerance", opt.tolerance, p));
		if (!(opt.step > 0.0 && opt.step <= 1.0))
			throw ScenarioError(p, "grid step must lie in (0, 1]");
		if (!(opt.tolerance >= 0.0))
			throw ScenarioError(p, "tolerance must be non-negative");
	}

	std::string path(const std::string& key) const { return sc.name + "." + key; }

	bool escape() const { return ro.allow_range_escape || flag(b, "allow_range_escape"); }

	std::uint64_t seed() const
	{
		if (ro.seed)
			return *ro.seed;
		const double s = number_or(b, "seed", 1.0, sc.name);
		if (s < 0 || s != std::floor(s))
			throw ScenarioError(path("seed"), "seed must be a non-negative integer");
		return static_cast<std::uint64_t>(s);
	}

	std::size_t count(const std::string& key, std::size_t fallback) const
	{
		const double v = number_or(b, key, static_cast<double>(fallback), sc.name);
		if (v < 1 || v != std::floor(v))
			throw ScenarioError(path(key), "expected a positive integer");
		return static_cast<std::size_t>(v);
	}

	FiniteSpace space() const
	{
		if (b.contains("space"))
			return cli::space(b.at("space"), path("space"));
		if (b.contains("measure") && b.at("measure").contains("table")) {
			const auto n = b.at("measure").at("table").size();
			std::size_t atoms = 0;
			while ((std::size_t{1} << atoms) < n)
				++atoms;
			if (atoms > 0 && (std::size_t{1} << atoms) == n)
				return FiniteSpace::numbered(atoms);
		}
		throw ScenarioError(sc.name, "missing field 'space'");
	}

	MonotoneMeasure measure(const FiniteSpace& sp) const
	{
		return cli::measure(need(b, "measure", sc.name), sp, path("measure"));
	}

	SimpleFunction function(const std::string& key, const FiniteSpace& sp, double bound) const
	{
		return cli::function(need(b, key, sc.name), sp, bound, path(key));
	}

	InequalityConfig config() const
	{
		return b.contains("config") ? cli::config(b.at("config"), path("config")) : InequalityConfig{};
	}

	void line(std::string s) { res.lines.push_back(std::move(s)); }
};

inline std::string vec(const std::vector<double>& v)
{
	std::string s = "(";
	for (std::size_t i = 0; i < v.size(); ++i)
		s += (i ? ", " : "") + format_number(v[i]);
	return s + ")";
}

inline void describe_verdict(Context& c, const Verdict& v)
{
	c.line("verdict: " + std::string(to_string(v.status)) + " [" + v.evidence.describe() + ", " +
	       std::to_string(v.points) + " points]");
	if (v.status == Status::Violated)
		c.line("witness " + vec(v.witness) + ": lhs " + format_number(v.lhs) + " < rhs " + format_number(v.rhs));
	if (!v.detail.empty())
		c.line(v.detail);
	for (const auto& n : v.notes)
		c.line("note: " + n);
}

inline void describe_inequality(Context& c, const InequalityResult& r)
{
	const char* names[3] = {"joint", "first", "second"};
	for (int i = 0; i < 3; ++i)
		c.line(std::string(names[i]) + " integral: " + format_number(r.integrals[i].value) + " [" +
		       r.integrals[i].evidence.describe() + "]");
	if (r.outcome == Outcome::HypothesisFailed)
		c.line("hypothesis failed: " + r.detail);
	else
		c.line("lhs " + format_number(r.lhs) + (r.outcome == Outcome::Holds ? " >= " : " < ") + "rhs " +
		       format_number(r.rhs));
}

inline void describe_report(Context& c, const ChebyshevReport& r)
{
	for (const auto& s : r.stages)
		c.line("stage " + s.name + ": " + (s.passed ? "passed" : "failed") + (s.detail.empty() ? "" : " (" + s.detail + ")") +
		       (s.witness.empty() ? "" : " at " + vec(s.witness)));
	if (r.inequality)
		describe_inequality(c, *r.inequality);
	for (const auto& n : r.notes)
		c.line("note: " + n);
}

inline void run_integrate(Context& c)
{
	const auto& items = c.b.contains("integrals") ? c.b.at("integrals") : json::array({c.b});
	std::optional<FiniteSpace> sp;
	std::optional<MonotoneMeasure> m;
	ojson out = ojson::array();
	bool all_match = true;
	for (std::size_t i = 0; i < items.size(); ++i) {
		const auto& it = items[i];
		const auto p = c.b.contains("integrals") ? at(c.path("integrals"), i) : c.sc.name;
		const std::string label = it.contains("label") ? text(it.at("label"), p + ".label") : "integral " + std::to_string(i + 1);
		IntegralResult r;
		std::string what;
		if (it.contains("survival")) {
			const auto op = it.contains("op") ? fusion(it.at("op"), p + ".op") : FusionOp::min();
			r = integrate_survival(op, survival(it.at("survival"), p + ".survival"), c.opt);
			what = op.name();
		} else {
			if (!sp) {
				sp = c.space();
				m = c.measure(*sp);
			}
			if (it.contains("q_conjunction")) {
				const auto conj = fusion(it.at("q_conjunction"), p + ".q_conjunction");
				r = q_integral(conj, *m, cli::function(need(it, "function", p), *sp, 1.0, p + ".function"));
				what = "q-integral with " + conj.name();
			} else {
				const auto op = it.contains("op") ? fusion(it.at("op"), p + ".op") : FusionOp::min();
				const auto f = cli::function(need(it, "function", p), *sp, op.bound(), p + ".function");
				r = integrate_simple(op, *m, set_field(it, "set", *sp, p), f, c.opt);
				what = op.name();
			}
		}
		ojson j;
		j["label"] = label;
		j["operation"] = what;
		j["result"] = to_json(r);
		std::string line = label + ": " + format_number(r.value) + " [" + r.evidence.describe() + "]";
		if (it.contains("expected")) {
			const double e = number(it.at("expected"), p + ".expected");
			const bool ok = std::fabs(e - r.value) <= 1e-8;
			all_match = all_match && ok;
			j["expected"] = num(e);
			j["matches"] = ok;
			line += ok ? " matches " : " differs from expected ";
			line += format_number(e);
		}
		c.line(line);
		out.push_back(j);
	}
	c.res.report["integrals"] = out;
	c.res.outcome = all_match ? Outcome::Holds : Outcome::Violated;
}

inline void run_dependence(Context& c)
{
	const auto sp = c.space();
	const auto m = c.measure(sp);
	const auto triangle = c.b.contains("triangle") ? fusion(c.b.at("triangle"), c.path("triangle")) : FusionOp::min();
	const std::string check = c.b.contains("check") ? text(c.b.at("check"), c.path("check")) : "level-sets";
	DependenceVerdict v;
	if (check == "level-sets") {
		const double k = number_or(c.b, "k", 1.0, c.sc.name);
		DependenceQuery q{m,
		                  c.function("f", sp, k),
		                  c.function("g", sp, k),
		                  set_field(c.b, "A", sp, c.sc.name),
		                  set_field(c.b, "B", sp, c.sc.name),
		                  triangle,
		                  k,
		                  c.escape()};
		v = is_m_positively_dependent(q);
	} else if (check == "all-pairs") {
		v = measure_supports_all_pairs(m, triangle, c.escape());
	} else if (check == "z1") {
		v = condition_z1(m, triangle, c.escape());
	} else {
		throw ScenarioError(c.path("check"), "check is level-sets, all-pairs or z1");
	}
	c.res.report["check"] = check;
	c.res.report["triangle"] = triangle.name();
	c.res.report["dependence"] = to_json(v, sp);
	c.res.outcome = v.holds ? Outcome::Holds : Outcome::Violated;
	c.line(check + " with " + triangle.name() + ": " + (v.holds ? "holds" : "fails") + " [exact, " +
	       std::to_string(v.checked) + " checks]");
	if (!v.holds)
		c.line("witness " + vec(v.witness) + ": " + format_number(v.lhs) + " < " + format_number(v.rhs));
	for (const auto& w : v.warnings)
		c.line("warning: " + w);
}

inline void run_condition(Context& c)
{
	const std::string form = c.b.contains("form") ? text(c.b.at("form"), c.path("form")) : "c1";
	c.res.report["form"] = form;
	auto op_field = [&](const char* key, FusionOp fallback) {
		return c.b.contains(key) ? fusion(c.b.at(key), c.path(key)) : fallback;
	};
	Verdict v;
	if (form == "c1" || form == "c2" || form == "both") {
		const auto cfg = c.config();
		if (form == "both") {
			const auto r = c1_iff_c2(cfg, c.opt);
			c.res.report["c1"] = to_json(r.c1);
			c.res.report["c2"] = to_json(r.c2);
			c.res.report["agree"] = r.agree;
			c.res.report["note"] = r.note;
			v = r.c1;
			c.line("forms agree: " + std::string(r.agree ? "yes" : "no"));
			if (!r.agree)
				v.status = Status::HypothesisFailed;
		} else {
			v = form == "c1" ? check_scalar_condition(cfg, c.opt) : check_condition_C2(cfg, c.opt);
		}
		c.res.report["cd"] = cfg.cd.describe();
		if (c.b.contains("probe")) {
			const auto pt = numbers(c.b.at("probe"), c.path("probe"));
			if (pt.size() != 4)
				throw ScenarioError(c.path("probe"), "probe needs (a, b, c, d)");
			const auto [lhs, rhs] = scalar_sides(cfg, pt[0], pt[1], pt[2], pt[3]);
			const bool fails = lhs < rhs - c.opt.tolerance;
			c.res.report["probe"] = {{"point", nums(pt)}, {"lhs", num(lhs)}, {"rhs", num(rhs)}, {"violated", fails}};
			c.line("probe " + vec(pt) + ": lhs " + format_number(lhs) + (fails ? " < " : " >= ") + "rhs " +
			       format_number(rhs));
			if (flag(c.b, "indicator_probe") && fails) {
				const auto p = indicator_probe(cfg, pt[0], pt[1], pt[2], c.opt);
				c.res.report["indicator_probe"] = {{"found", p.found},
				                                   {"construction", p.construction},
				                                   {"measure_value", num(p.c)},
				                                   {"inequality", to_json(p.inequality)}};
				c.line("indicator probe: " + std::string(p.found ? p.construction + " breaks the integral inequality"
				                                                : "no integral violation"));
			}
		}
	} else if (form == "seminormed") {
		v = check_seminormed_condition(op_field("s", FusionOp::min()), op_field("star", FusionOp::prod()),
		                               shapes_field(c.b, "phi", c.sc.name), shapes_field(c.b, "psi", c.sc.name),
		                               flag(c.b, "swapped"), c.opt);
	} else if (form == "q-integral") {
		v = q_condition(op_field("conj", FusionOp::godel()), shapes_field(c.b, "phi", c.sc.name),
		                          op_field("star", FusionOp::prod()), c.opt);
	} else if (form == "commutativity-gap") {
		const auto gap = search_commutativity_gap(op_field("s", FusionOp::min()), op_field("star", FusionOp::prod()), c.opt);
		v.evidence = Evidence::grid(c.opt.step);
		if (gap) {
			v.status = Status::Violated;
			v.witness = gap->point;
			v.detail = std::string("first form ") + (gap->first_form_holds ? "holds" : "fails") + ", second form " +
			           (gap->second_form_holds ? "holds" : "fails");
		}
	} else {
		throw ScenarioError(c.path("form"), "form is c1, c2, both, seminormed, q-integral or commutativity-gap");
	}
	c.res.report["verdict"] = to_json(v);
	c.res.outcome = outcome_of(v.status);
	describe_verdict(c, v);
}

/// With "equality": true a holding inequality must also be tight to 1e-9.
inline void require_equality(Context& c, InequalityResult& r)
{
	if (!flag(c.b, "equality") || r.outcome != Outcome::Holds)
		return;
	const bool tight = std::fabs(r.lhs - r.rhs) <= 1e-9;
	c.res.report["equality"] = tight;
	c.line(tight ? "equality holds to 1e-9" : "expected equality, gap " + format_number(r.lhs - r.rhs));
	if (!tight)
		r.outcome = Outcome::Violated;
}

inline void run_inequality(Context& c)
{
	const std::string mode = c.b.contains("mode") ? text(c.b.at("mode"), c.path("mode")) : "direct";
	c.res.report["mode"] = mode;
	auto cfg = c.config();
	if (mode == "survival") {
		const auto& s = need(c.b, "survival", c.sc.name);
		const auto p = c.path("survival");
		auto r = check_survival_inequality(cfg, survival(need(s, "joint", p), p + ".joint"),
		                                   survival(need(s, "first", p), p + ".first"),
		                                   survival(need(s, "second", p), p + ".second"), c.opt);
		c.res.report["inequality"] = to_json(r);
		describe_inequality(c, r);
		require_equality(c, r);
		c.res.outcome = r.outcome;
		return;
	}
	const auto sp = c.space();
	const auto m = c.measure(sp);
	if (mode == "any-functions") {
		const auto r = any_functions_check(cfg, m, c.count("trials", 100), c.seed(), c.opt, c.escape());
		c.res.report["report"] = to_json(r);
		c.res.outcome = r.outcome;
		describe_report(c, r);
		return;
	}
	const double k = std::isinf(cfg.k) ? c.opt.infinity_cap : cfg.k;
	const auto f = c.function("f", sp, k);
	const Mask a = set_field(c.b, "A", sp, c.sc.name);
	if (mode == "liapunov") {
		const auto r = liapunov_check(m, f, a, cfg.phi[0], cfg.phi[1], cfg.psi[0], cfg.psi[1], c.opt, cfg.ybar);
		c.res.report["report"] = to_json(r);
		c.res.outcome = r.outcome;
		describe_report(c, r);
		return;
	}
	const auto g = c.function("g", sp, k);
	if (mode == "comonotone") {
		const auto r = sugeno_chebyshev(m, f, g, a, cfg.phi, cfg.psi, cfg.inner, c.opt, cfg.ybar);
		c.res.report["report"] = to_json(r);
		c.res.outcome = r.outcome;
		describe_report(c, r);
		return;
	}
	const Mask bset = set_field(c.b, "B", sp, c.sc.name);
	if (mode == "forward") {
		const auto r = forward_check(cfg, m, f, g, a, bset, c.opt, c.escape());
		c.res.report["report"] = to_json(r);
		c.res.outcome = r.outcome;
		describe_report(c, r);
		return;
	}
	if (mode != "direct")
		throw ScenarioError(c.path("mode"), "mode is direct, forward, comonotone, liapunov, any-functions or survival");
	auto r = check_integral_inequality(cfg, m, f, g, a, bset, c.opt);
	c.res.report["inequality"] = to_json(r);
	describe_inequality(c, r);
	require_equality(c, r);
	c.res.outcome = r.outcome;
}

inline void run_search(Context& c)
{
	const auto budget = c.ro.budget.value_or(c.count("budget", 1'000'000));
	const auto v = search_counterexample(c.config(), c.opt, budget);
	c.res.report["budget"] = budget;
	c.res.report["verdict"] = to_json(v);
	c.res.outcome = outcome_of(v.status);
	describe_verdict(c, v);
}

inline void run_property(Context& c)
{
	const auto name = text(need(c.b, "property", c.sc.name), c.path("property"));
	const auto seed = c.seed();
	std::vector<PropertyReport> reps;
	if (name == "exact-vs-oracle")
		reps.push_back(property_exact_vs_oracle(c.count("trials", 1000), seed));
	else if (name == "condition-forms-agree")
		reps.push_back(property_condition_forms_agree(c.count("trials", 200), seed, c.opt.step));
	else if (name == "comonotone-chebyshev")
		reps.push_back(property_comonotone_chebyshev(c.count("trials", 1000), seed));
	else if (name == "necessity-any-functions")
		reps.push_back(property_necessity_any_functions(c.count("trials", 500), seed));
	else if (name == "dependence-examples")
		for (auto& r : property_dependence_examples(c.count("trials", 300), seed))
			reps.push_back(std::move(r));
	else if (name == "min-dominates-lukasiewicz")
		reps.push_back(property_min_dominates_w(c.opt.step));
	else if (name == "forward-soundness")
		reps.push_back(property_forward_soundness(c.count("trials", 1000), seed));
	else
		throw ScenarioError(c.path("property"), "unknown property '" + name + "'");
	ojson arr = ojson::array();
	bool ok = true;
	for (const auto& r : reps) {
		arr.push_back(to_json(r));
		ok = ok && r.passed();
		c.line(r.name + ": " + std::to_string(r.failures) + " failures in " + std::to_string(r.trials) + " trials (" +
		       std::to_string(r.exercised) + " exercised) [" + r.evidence.describe() + "]");
		if (!r.first_failure.empty())
			c.line("first failure: " + r.first_failure);
	}
	c.res.report["properties"] = arr;
	c.res.outcome = ok ? Outcome::Holds : Outcome::Violated;
}

} // namespace detail

/// Runs one scenario. Input problems propagate as InputError.
inline RunResult run_scenario(const Scenario& sc, const RunOptions& ro = {})
{
	detail::Context c(sc, ro);
	c.res.report["report_version"] = report_version;
	c.res.report["scenario"] = sc.name;
	c.res.report["kind"] = sc.kind;
	c.res.report["source"] = sc.source;
	c.res.report["grid"] = num(c.opt.step);
	c.res.report["tolerance"] = num(c.opt.tolerance);
	c.line("scenario " + sc.name + " (" + sc.kind + ")");
	if (!sc.source.empty())
		c.line(sc.source);
	try {
		if (sc.kind == "integrate")
			detail::run_integrate(c);
		else if (sc.kind == "dependence")
			detail::run_dependence(c);
		else if (sc.kind == "condition")
			detail::run_condition(c);
		else if (sc.kind == "inequality")
			detail::run_inequality(c);
		else if (sc.kind == "search")
			detail::run_search(c);
		else
			detail::run_property(c);
	} catch (const Error& e) {
		c.res.outcome = Outcome::HypothesisFailed;
		c.res.report["error"] = e.what();
		c.line(std::string("error: ") + e.what());
	}
	std::string summary = to_string(c.res.outcome);
	if (sc.kind == "inequality" && c.res.outcome != Outcome::HypothesisFailed)
		summary = c.res.outcome == Outcome::Holds ? "inequality holds" : "inequality violated";
	c.res.report["outcome"] = to_string(c.res.outcome);
	c.res.report["verdict_summary"] = summary;
	c.res.report["exit_code"] = exit_code(c.res.outcome);
	if (sc.expect) {
		c.res.report["expected"] = *sc.expect;
		c.res.report["matches_expectation"] = *sc.expect == to_string(c.res.outcome);
	}
	c.line("result: " + summary);
	return c.res;
}

} // namespace sugeno::cli

#endif
