#ifndef SUGENO_CLI_APP_HPP
#define SUGENO_CLI_APP_HPP

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bundled_scenarios.hpp"
#include "sugeno/cli/runner.hpp"
#include "sugeno/cli/scenario.hpp"

namespace sugeno::cli {

/// Every bundled scenario, in file order then declaration order.
inline const std::vector<Scenario>& bundled_scenarios()
{
	static const std::vector<Scenario> all = [] {
		std::vector<Scenario> out;
		for (const auto& [file, content] : bundled::files)
			for (auto& s : parse_scenarios(std::string(content), "bundled/" + std::string(file)))
				out.push_back(std::move(s));
		return out;
	}();
	return all;
}

inline const Scenario* find_bundled(const std::string& name)
{
	for (const auto& s : bundled_scenarios())
		if (s.name == name)
			return &s;
	return nullptr;
}

namespace detail {

inline void print(std::ostream& out, const RunResult& r)
{
	for (const auto& l : r.lines)
		out << l << '\n';
}

/// Runs scenarios and prints them; exit code is the largest single code.
inline int run_each(const std::vector<const Scenario*>& list, const RunOptions& ro, bool as_json, std::ostream& out)
{
	int code = 0;
	std::vector<ojson> reports;
	for (std::size_t i = 0; i < list.size(); ++i) {
		auto r = run_scenario(*list[i], ro);
		code = std::max(code, exit_code(r.outcome));
		if (as_json) {
			reports.push_back(std::move(r.report));
		} else {
			if (i)
				out << '\n';
			print(out, r);
		}
	}
	if (as_json) {
		if (reports.size() == 1) {
			out << reports[0].dump(2) << '\n';
		} else {
			ojson j;
			j["report_version"] = report_version;
			j["reports"] = reports;
			out << j.dump(2) << '\n';
		}
	}
	return code;
}

/// Runs scenarios against their "expect" fields: 0 when all match, 1 otherwise.
inline int run_suite(const std::vector<const Scenario*>& list, const RunOptions& ro, bool as_json, std::ostream& out)
{
	std::size_t matched = 0, with_expectation = 0;
	ojson reports = ojson::array();
	for (const auto* s : list) {
		auto r = run_scenario(*s, ro);
		const bool ok = !s->expect || *s->expect == to_string(r.outcome);
		with_expectation += s->expect.has_value();
		matched += s->expect && ok;
		if (as_json)
			reports.push_back(std::move(r.report));
		else
			out << (ok ? "ok       " : "MISMATCH ") << s->name << ": " << to_string(r.outcome)
			    << (s->expect ? " (expected " + *s->expect + ")" : "") << '\n';
	}
	const bool all = matched == with_expectation;
	if (as_json) {
		ojson j;
		j["report_version"] = report_version;
		j["reports"] = reports;
		j["summary"] = {{"scenarios", list.size()}, {"with_expectation", with_expectation}, {"matched", matched}};
		out << j.dump(2) << '\n';
	} else {
		out << matched << " of " << with_expectation << " expectations met\n";
	}
	return all ? 0 : 1;
}

} // namespace detail

/**
 * Command-line entry point. Exit codes: 0 holds or success, 1 violated or
 * refuted, 2 hypothesis failure or input error.
 */
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
	CLI::App app{"Chebyshev-type inequalities for generalized Sugeno integrals", "sugeno"};
	app.require_subcommand(1);
	app.set_help_all_flag("--help-all", "Show help for every subcommand");

	RunOptions ro;
	bool as_json = false;
	std::optional<double> step, tol;
	std::optional<std::uint64_t> seed;
	std::optional<std::size_t> budget;
	std::string file, name;
	bool all = false;

	auto common = [&](CLI::App* s) {
		s->add_flag("--json", as_json, "Emit the JSON report");
		s->add_option("--grid", step, "Grid step for scans (default 0.01)")->check(CLI::PositiveNumber);
		s->add_option("--tolerance", tol, "Comparison tolerance (default 1e-9)")->check(CLI::NonNegativeNumber);
		s->add_option("--seed", seed, "Seed for random trials");
		s->add_option("--budget", budget, "Point budget for searches")->check(CLI::PositiveNumber);
		s->add_flag("--allow-range-escape", ro.allow_range_escape,
		            "Warn instead of failing when the triangle operation leaves the measure's range");
	};

	const std::map<std::string, std::string> kind_of{{"integrate", "integrate"},
	                                                 {"check-dependence", "dependence"},
	                                                 {"check-condition", "condition"},
	                                                 {"check-inequality", "inequality"},
	                                                 {"search-counterexample", "search"}};
	const std::map<std::string, std::string> help{
	    {"integrate", "Compute integrals described by a scenario file"},
	    {"check-dependence", "Decide m-positive dependence and measure conditions"},
	    {"check-condition", "Scan a scalar condition on a grid"},
	    {"check-inequality", "Check an integral inequality with its hypotheses"},
	    {"search-counterexample", "Coarse-to-fine search for a scalar-condition violation"}};
	std::vector<CLI::App*> typed;
	for (const auto& [cmd, kind] : kind_of) {
		auto* s = app.add_subcommand(cmd, help.at(cmd));
		s->add_option("file", file, "Scenario file")->required()->check(CLI::ExistingFile);
		s->add_option("--name", name, "Scenario to run when the file declares several");
		common(s);
		typed.push_back(s);
	}
	auto* run_cmd = app.add_subcommand("run", "Run every scenario in a file and compare with its expectations");
	run_cmd->add_option("file", file, "Scenario file")->required()->check(CLI::ExistingFile);
	common(run_cmd);
	auto* repro = app.add_subcommand("repro", "Run a bundled scenario by name");
	repro->add_option("name", name, "Bundled scenario name (see list-scenarios)");
	repro->add_flag("--all", all, "Run every bundled scenario and compare with its expectations");
	common(repro);
	auto* list = app.add_subcommand("list-scenarios", "List the bundled scenarios");
	list->add_flag("--json", as_json, "Emit JSON");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		return e.get_exit_code() == 0 ? app.exit(e, out, err) : (app.exit(e, out, err), 2);
	}
	ro.step = step;
	ro.tolerance = tol;
	ro.seed = seed;
	ro.budget = budget;

	try {
		if (list->parsed()) {
			if (as_json) {
				ojson arr = ojson::array();
				for (const auto& s : bundled_scenarios())
					arr.push_back({{"name", s.name},
					               {"kind", s.kind},
					               {"expect", s.expect ? ojson(*s.expect) : ojson(nullptr)},
					               {"source", s.source}});
				out << ojson{{"report_version", report_version}, {"scenarios", arr}}.dump(2) << '\n';
			} else {
				for (const auto& s : bundled_scenarios())
					out << s.name << "  [" << s.kind << "]  " << s.source << '\n';
			}
			return 0;
		}
		if (repro->parsed()) {
			if (all) {
				std::vector<const Scenario*> l;
				for (const auto& s : bundled_scenarios())
					l.push_back(&s);
				return detail::run_suite(l, ro, as_json, out);
			}
			if (name.empty())
				throw InputError("repro needs a scenario name or --all");
			const auto* s = find_bundled(name);
			if (!s)
				throw InputError("unknown scenario '" + name + "' (see list-scenarios)");
			return detail::run_each({s}, ro, as_json, out);
		}
		const auto scenarios = load_scenarios(file);
		if (run_cmd->parsed()) {
			std::vector<const Scenario*> l;
			for (const auto& s : scenarios)
				l.push_back(&s);
			return detail::run_suite(l, ro, as_json, out);
		}
		for (auto* s : typed) {
			if (!s->parsed())
				continue;
			const auto& kind = kind_of.at(s->get_name());
			std::vector<const Scenario*> l;
			for (const auto& sc : scenarios)
				if (sc.kind == kind && (name.empty() || sc.name == name))
					l.push_back(&sc);
			if (l.empty())
				throw InputError("no " + kind + " scenario" + (name.empty() ? "" : " named '" + name + "'") + " in " +
				                 file);
			return detail::run_each(l, ro, as_json, out);
		}
	} catch (const Error& e) {
		err << "error: " << e.what() << '\n';
		return 2;
	} catch (const nlohmann::json::exception& e) {
		err << "error: " << e.what() << '\n';
		return 2;
	}
	return 2;
}

} // namespace sugeno::cli

#endif
