#ifndef SUGENO_CLI_REPORT_HPP
#define SUGENO_CLI_REPORT_HPP

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "sugeno/chebyshev.hpp"
#include "sugeno/dependence.hpp"
#include "sugeno/integral.hpp"
#include "sugeno/properties.hpp"

namespace sugeno::cli {

using ojson = nlohmann::ordered_json;

inline constexpr int report_version = 1;

/// Numbers as JSON; infinity becomes the string "inf".
inline ojson num(double v)
{
	if (std::isinf(v))
		return v > 0 ? "inf" : "-inf";
	if (std::isnan(v))
		return "nan";
	return v;
}

inline ojson nums(const std::vector<double>& v)
{
	ojson a = ojson::array();
	for (double x : v)
		a.push_back(num(x));
	return a;
}

inline ojson strings(const std::vector<std::string>& v)
{
	ojson a = ojson::array();
	for (const auto& s : v)
		a.push_back(s);
	return a;
}

inline ojson to_json(const IntegralResult& r)
{
	ojson j;
	j["value"] = num(r.value);
	j["method"] = to_string(r.method);
	j["evidence"] = r.evidence.describe();
	j["argmax"] = num(r.argmax);
	ojson c = ojson::array();
	for (const auto& x : r.candidates)
		c.push_back({{"t", num(x.t)}, {"level", num(x.level)}, {"term", num(x.term)}});
	j["candidates"] = c;
	j["notes"] = strings(r.notes);
	return j;
}

inline ojson to_json(const Verdict& v)
{
	ojson j;
	j["status"] = to_string(v.status);
	j["witness"] = nums(v.witness);
	if (v.status == Status::Violated) {
		j["lhs"] = num(v.lhs);
		j["rhs"] = num(v.rhs);
	}
	j["detail"] = v.detail;
	j["evidence"] = v.evidence.describe();
	j["points"] = v.points;
	j["budget_exhausted"] = v.budget_exhausted;
	j["notes"] = strings(v.notes);
	return j;
}

inline ojson to_json(const InequalityResult& r)
{
	ojson j;
	j["outcome"] = to_string(r.outcome);
	if (r.outcome != Outcome::HypothesisFailed) {
		j["lhs"] = num(r.lhs);
		j["rhs"] = num(r.rhs);
	} else {
		j["failed_at"] = num(r.failed_at);
	}
	ojson ints = ojson::array();
	for (const auto& i : r.integrals)
		ints.push_back(to_json(i));
	j["integrals"] = ints;
	j["detail"] = r.detail;
	return j;
}

inline ojson to_json(const Stage& s)
{
	return {{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}, {"witness", nums(s.witness)},
	        {"evidence", s.evidence}};
}

inline ojson to_json(const ChebyshevReport& r)
{
	ojson j;
	j["outcome"] = to_string(r.outcome);
	ojson st = ojson::array();
	for (const auto& s : r.stages)
		st.push_back(to_json(s));
	j["stages"] = st;
	j["inequality"] = r.inequality ? to_json(*r.inequality) : ojson(nullptr);
	j["contradiction"] = r.contradiction;
	if (r.trials) {
		j["trials"] = r.trials;
		j["violations"] = r.violations;
	}
	j["notes"] = strings(r.notes);
	return j;
}

inline ojson to_json(const DependenceVerdict& v, const FiniteSpace& sp)
{
	ojson j;
	j["holds"] = v.holds;
	j["witness"] = nums(v.witness);
	if (!v.holds) {
		j["first_set"] = sp.describe(v.first);
		j["second_set"] = sp.describe(v.second);
		j["lhs"] = num(v.lhs);
		j["rhs"] = num(v.rhs);
	}
	j["checked"] = v.checked;
	j["warnings"] = strings(v.warnings);
	return j;
}

inline ojson to_json(const PropertyReport& r)
{
	return {{"name", r.name},         {"trials", r.trials},   {"exercised", r.exercised},
	        {"failures", r.failures}, {"first_failure", r.first_failure}, {"seed", r.seed},
	        {"evidence", r.evidence.describe()}};
}

} // namespace sugeno::cli

#endif
