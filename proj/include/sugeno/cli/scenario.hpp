#ifndef SUGENO_CLI_SCENARIO_HPP
#define SUGENO_CLI_SCENARIO_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sugeno/chebyshev.hpp"
#include "sugeno/error.hpp"
#include "sugeno/expr.hpp"
#include "sugeno/fusion.hpp"
#include "sugeno/integral.hpp"
#include "sugeno/measure.hpp"
#include "sugeno/shape.hpp"

namespace sugeno::cli {

using json = nlohmann::json;

/// Scenario kinds, in the order the subcommands list them.
inline const std::vector<std::string>& scenario_kinds()
{
	static const std::vector<std::string> kinds{"integrate", "dependence", "condition",
	                                            "inequality", "search", "property-run"};
	return kinds;
}

/// One named scenario: its metadata plus the raw block the runner interprets.
struct Scenario
{
	std::string name;
	std::string kind;
	std::string source;
	std::optional<std::string> expect; ///< holds | violated | hypothesis_failed
	json body;
	std::string origin; ///< file it came from
};

/// Scenario-level input problem; `path` locates the offending field.
class ScenarioError : public InputError
{
public:
	ScenarioError(const std::string& path, const std::string& what)
	    : InputError(path.empty() ? what : path + ": " + what)
	{
	}
};

namespace detail {

inline const json& need(const json& j, const std::string& key, const std::string& path)
{
	if (!j.is_object() || !j.contains(key))
		throw ScenarioError(path, "missing field '" + key + "'");
	return j.at(key);
}

inline std::string join(const std::string& path, const std::string& key)
{
	return path.empty() ? key : path + "." + key;
}

inline std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

} // namespace detail

/// A finite number or the literal "inf".
inline double number(const json& j, const std::string& path)
{
	if (j.is_string() && j.get<std::string>() == "inf")
		return infinity;
	if (!j.is_number())
		throw ScenarioError(path, "expected a number or \"inf\"");
	const double v = j.get<double>();
	if (!std::isfinite(v))
		throw ScenarioError(path, "number must be finite");
	return v;
}

inline double number_or(const json& j, const std::string& key, double fallback, const std::string& path)
{
	return j.contains(key) ? number(j.at(key), detail::join(path, key)) : fallback;
}

inline std::vector<double> numbers(const json& j, const std::string& path)
{
	if (!j.is_array())
		throw ScenarioError(path, "expected an array of numbers");
	std::vector<double> v;
	for (std::size_t i = 0; i < j.size(); ++i)
		v.push_back(number(j[i], detail::at(path, i)));
	return v;
}

inline std::string text(const json& j, const std::string& path)
{
	if (!j.is_string())
		throw ScenarioError(path, "expected a string");
	return j.get<std::string>();
}

inline bool flag(const json& j, const std::string& key, bool fallback = false)
{
	return j.contains(key) && j.at(key).is_boolean() ? j.at(key).get<bool>() : fallback;
}

/// Parses an expression, prefixing errors with the field path.
inline Expr expression(const json& j, const std::vector<std::string>& vars, const std::string& path)
{
	const auto src = text(j, path);
	try {
		return parse(src, vars);
	} catch (const Error& e) {
		throw ScenarioError(path, e.what());
	}
}

/// Interval written as "[lo, hi]", "(lo, hi]", ... or [lo, hi] (closed).
inline Interval interval(const json& j, const std::string& path)
{
	if (j.is_array()) {
		const auto v = numbers(j, path);
		if (v.size() != 2 || v[0] > v[1])
			throw ScenarioError(path, "interval needs [lo, hi] with lo <= hi");
		return Interval::closed(v[0], v[1]);
	}
	const auto s = text(j, path);
	const auto comma = s.find(',');
	if (s.size() < 5 || comma == std::string::npos || (s.front() != '[' && s.front() != '(') ||
	    (s.back() != ']' && s.back() != ')'))
		throw ScenarioError(path, "interval must look like \"[0, 0.5]\" or \"(0.5, 1]\"");
	auto bound = [&](std::string part) {
		if (part.find("inf") != std::string::npos)
			return infinity;
		try {
			std::size_t used = 0;
			const double v = std::stod(part, &used);
			if (part.find_first_not_of(" \t", used) != std::string::npos)
				throw std::invalid_argument(part);
			return v;
		} catch (const std::exception&) {
			throw ScenarioError(path, "bad interval bound '" + part + "'");
		}
	};
	Interval out{bound(s.substr(1, comma - 1)), bound(s.substr(comma + 1, s.size() - comma - 2)), s.front() == '[',
	             s.back() == ']'};
	if (out.lo > out.hi)
		throw ScenarioError(path, "interval bounds are reversed");
	return out;
}

/// Space from "space": ["a", "b"] or {"atoms": n}; defaults to the measure table size.
inline FiniteSpace space(const json& s, const std::string& path)
{
	try {
		if (s.is_array()) {
			std::vector<std::string> labels;
			for (std::size_t i = 0; i < s.size(); ++i)
				labels.push_back(text(s[i], detail::at(path, i)));
			return FiniteSpace(std::move(labels));
		}
		const double n = number(detail::need(s, "atoms", path), detail::join(path, "atoms"));
		if (n < 1 || n != std::floor(n))
			throw ScenarioError(path, "atoms must be a positive integer");
		return FiniteSpace::numbered(static_cast<std::size_t>(n));
	} catch (const ScenarioError&) {
		throw;
	} catch (const Error& e) {
		throw ScenarioError(path, e.what());
	}
}

/// Set as a list of atom labels; "all" or absence means the whole space.
inline Mask set(const json* j, const FiniteSpace& sp, const std::string& path)
{
	if (!j || (j->is_string() && j->get<std::string>() == "all"))
		return sp.universe();
	if (!j->is_array())
		throw ScenarioError(path, "a set is a list of atom labels or \"all\"");
	std::vector<std::string> labels;
	for (std::size_t i = 0; i < j->size(); ++i)
		labels.push_back(text((*j)[i], detail::at(path, i)));
	try {
		return sp.mask_of(labels);
	} catch (const Error& e) {
		throw ScenarioError(path, e.what());
	}
}

inline Mask set_field(const json& parent, const std::string& key, const FiniteSpace& sp, const std::string& path)
{
	return set(parent.contains(key) ? &parent.at(key) : nullptr, sp, detail::join(path, key));
}

/**
 * Measure block, one of
 *   {"table": [m(0), m(1), ...]}                      values by subset bit mask
 *   {"sets": {"": 0, "a": 0.3, "a,b": 1}}             unlisted sets get the largest
 *                                                     value of a listed subset
 *   {"necessity": [pi_1, ..., pi_n]}                  from a possibility distribution
 *   {"distorted": {"probability": [...], "distortion": "x^2"}}
 * An optional "dual": true replaces the measure by its dual.
 */
inline MonotoneMeasure measure(const json& j, const FiniteSpace& sp, const std::string& path)
{
	try {
		MonotoneMeasure m = [&] {
			if (j.contains("table"))
				return MonotoneMeasure::from_table(sp, numbers(j.at("table"), detail::join(path, "table")));
			if (j.contains("sets")) {
				const auto& sets = j.at("sets");
				if (!sets.is_object())
					throw ScenarioError(detail::join(path, "sets"), "expected an object of set -> value");
				std::vector<double> t(sp.subset_count(), 0.0);
				std::vector<char> given(sp.subset_count(), 0);
				given[0] = 1;
				for (auto it = sets.begin(); it != sets.end(); ++it) {
					std::vector<std::string> labels;
					std::stringstream ss(it.key());
					for (std::string part; std::getline(ss, part, ',');) {
						const auto b = part.find_first_not_of(' '), e = part.find_last_not_of(' ');
						if (b != std::string::npos)
							labels.push_back(part.substr(b, e - b + 1));
					}
					const Mask s = sp.mask_of(labels);
					t[s] = number(it.value(), detail::join(path, "sets." + it.key()));
					given[s] = 1;
				}
				for (std::size_t s = 1; s < t.size(); ++s)
					if (!given[s])
						for (std::size_t sub = (s - 1) & s;; sub = (sub - 1) & s) {
							if (given[sub])
								t[s] = std::max(t[s], t[sub]);
							if (sub == 0)
								break;
						}
				return MonotoneMeasure::from_table(sp, std::move(t));
			}
			if (j.contains("necessity"))
				return necessity_from_possibility(sp, numbers(j.at("necessity"), detail::join(path, "necessity")));
			if (j.contains("distorted")) {
				const auto& d = j.at("distorted");
				const auto dp = detail::join(path, "distorted");
				return distorted_probability(sp, numbers(detail::need(d, "probability", dp), dp + ".probability"),
				                             expression(detail::need(d, "distortion", dp), {"x"}, dp + ".distortion"));
			}
			throw ScenarioError(path, "measure needs one of table, sets, necessity, distorted");
		}();
		return flag(j, "dual") ? dual(m) : m;
	} catch (const ScenarioError&) {
		throw;
	} catch (const Error& e) {
		throw ScenarioError(path, e.what());
	}
}

/**
 * Function block: [v_1, ..., v_n] per atom, {"indicator": [...], "value": c},
 * or {"values": {"label": v}} with unlisted atoms at 0.
 */
inline SimpleFunction function(const json& j, const FiniteSpace& sp, double bound, const std::string& path)
{
	try {
		if (j.is_array()) {
			auto v = numbers(j, path);
			if (v.size() != sp.size())
				throw ScenarioError(path, "expected " + std::to_string(sp.size()) + " values, one per atom");
			return SimpleFunction(std::move(v), bound);
		}
		if (j.contains("indicator"))
			return SimpleFunction::indicator(sp.size(), set(&j.at("indicator"), sp, detail::join(path, "indicator")),
			                                 number_or(j, "value", 1.0, path), bound);
		if (j.contains("values")) {
			std::vector<double> v(sp.size(), 0.0);
			for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it) {
				const auto i = sp.index_of(it.key());
				if (!i)
					throw ScenarioError(detail::join(path, "values"), "unknown atom '" + it.key() + "'");
				v[*i] = number(it.value(), detail::join(path, "values." + it.key()));
			}
			return SimpleFunction(std::move(v), bound);
		}
		throw ScenarioError(path, "function needs a value array, an indicator or values");
	} catch (const ScenarioError&) {
		throw;
	} catch (const Error& e) {
		throw ScenarioError(path, e.what());
	}
}

inline FusionFlags fusion_flags(const json& j, const std::string& path)
{
	FusionFlags f;
	const std::map<std::string, bool FusionFlags::*> names{
	    {"non_decreasing", &FusionFlags::non_decreasing},
	    {"left_continuous_first", &FusionFlags::left_continuous_first},
	    {"left_continuous_second", &FusionFlags::left_continuous_second},
	    {"right_continuous_first", &FusionFlags::right_continuous_first},
	    {"right_continuous_second", &FusionFlags::right_continuous_second},
	    {"commutative", &FusionFlags::commutative},
	    {"semicopula", &FusionFlags::semicopula},
	    {"fuzzy_conjunction", &FusionFlags::fuzzy_conjunction}};
	if (!j.is_array())
		throw ScenarioError(path, "flags are a list of names");
	for (std::size_t i = 0; i < j.size(); ++i) {
		const auto n = text(j[i], detail::at(path, i));
		if (n == "left_continuous") {
			f.left_continuous_first = f.left_continuous_second = true;
			continue;
		}
		if (n == "right_continuous") {
			f.right_continuous_first = f.right_continuous_second = true;
			continue;
		}
		const auto it = names.find(n);
		if (it == names.end())
			throw ScenarioError(detail::at(path, i), "unknown flag '" + n + "'");
		f.*(it->second) = true;
	}
	return f;
}

/**
 * Fusion operation: a builtin name ("min", "prod", "lukasiewicz", "godel",
 * "godel_contra"), or {"builtin": "min", "bound": "inf"}, or
 * {"name": "s", "expr": "a * b * b", "flags": [...], "bound": 1}.
 * "swap": true exchanges the arguments.
 */
inline FusionOp fusion(const json& j, const std::string& path)
{
	try {
		if (j.is_string())
			return FusionOp::builtin(j.get<std::string>());
		if (!j.is_object())
			throw ScenarioError(path, "fusion operation is a builtin name or an object");
		const double bound = number_or(j, "bound", 1.0, path);
		FusionOp op = [&] {
			if (j.contains("builtin"))
				return FusionOp::builtin(text(j.at("builtin"), detail::join(path, "builtin")), bound);
			const auto name = j.contains("name") ? text(j.at("name"), detail::join(path, "name")) : "custom";
			return FusionOp::custom(name, expression(detail::need(j, "expr", path), {"a", "b"}, detail::join(path, "expr")),
			                        bound,
			                        j.contains("flags") ? fusion_flags(j.at("flags"), detail::join(path, "flags"))
			                                            : FusionFlags{});
		}();
		return flag(j, "swap") ? op.swapped() : op;
	} catch (const ScenarioError&) {
		throw;
	} catch (const Error& e) {
		throw ScenarioError(path, e.what());
	}
}

inline ShapeFlags shape_flags(const json& j, const std::string& path)
{
	ShapeFlags f;
	if (!j.is_array())
		throw ScenarioError(path, "flags are a list of names");
	for (std::size_t i = 0; i < j.size(); ++i) {
		const auto n = text(j[i], detail::at(path, i));
		if (n == "non_decreasing")
			f.non_decreasing = true;
		else if (n == "increasing")
			f.increasing = f.non_decreasing = true;
		else if (n == "left_continuous")
			f.left_continuous = true;
		else if (n == "right_continuous")
			f.right_continuous = true;
		else if (n == "continuous")
			f.left_continuous = f.right_continuous = true;
		else
			throw ScenarioError(detail::at(path, i), "unknown flag '" + n + "'");
	}
	return f;
}

/**
 * Shape function: "id", "square", "sqrt", {"power": p}, {"inverse_of": shape},
 * or {"name", "expr" in x, "domain", "flags", "inverse", "inverse_domain"}.
 * Custom shapes default to all flags declared.
 */
inline ShapeFunction shape(const json& j, const std::string& path)
{
	try {
		if (j.is_string()) {
			const auto s = j.get<std::string>();
			if (s == "id" || s == "identity")
				return ShapeFunction::identity();
			if (s == "square")
				return ShapeFunction::power(2.0);
			if (s == "sqrt")
				return ShapeFunction::power(0.5);
			throw ScenarioError(path, "unknown shape '" + s + "'");
		}
		if (!j.is_object())
			throw ScenarioError(path, "shape is a name or an object");
		if (j.contains("inverse_of"))
			return shape(j.at("inverse_of"), detail::join(path, "inverse_of")).inverse();
		const Interval domain =
		    j.contains("domain") ? interval(j.at("domain"), detail::join(path, "domain")) : Interval::closed(0.0, infinity);
		if (j.contains("power"))
			return ShapeFunction::power(number(j.at("power"), detail::join(path, "power")), domain);
		const auto name = j.contains("name") ? text(j.at("name"), detail::join(path, "name")) : "shape";
		const ShapeFlags flags =
		    j.contains("flags") ? shape_flags(j.at("flags"), detail::join(path, "flags")) : ShapeFlags::all();
		std::optional<Expr> inv;
		if (j.contains("inverse"))
			inv = expression(j.at("inverse"), {"x"}, detail::join(path, "inverse"));
		std::optional<Interval> inv_domain;
		if (j.contains("inverse_domain"))
			inv_domain = interval(j.at("inverse_domain"), detail::join(path, "inverse_domain"));
		return ShapeFunction::custom(name, expression(detail::need(j, "expr", path), {"x"}, detail::join(path, "expr")),
		                             domain, flags, std::move(inv), inv_domain);
	} catch (const ScenarioError&) {
		throw;
	} catch (const Error& e) {
		throw ScenarioError(path, e.what());
	}
}

/// Three shapes from a list, or one shape used for all three.
inline ShapeTriple shapes(const json* j, const std::string& path)
{
	if (!j)
		return {};
	if (j->is_array()) {
		if (j->size() != 3)
			throw ScenarioError(path, "expected three shapes");
		return {shape((*j)[0], detail::at(path, 0)), shape((*j)[1], detail::at(path, 1)),
		        shape((*j)[2], detail::at(path, 2))};
	}
	const auto s = shape(*j, path);
	return {s, s, s};
}

inline ShapeTriple shapes_field(const json& parent, const std::string& key, const std::string& path)
{
	return shapes(parent.contains(key) ? &parent.at(key) : nullptr, detail::join(path, key));
}

/**
 * Inequality configuration. Every field is optional:
 *   inner, outer, triangle: fusion (default prod, prod, min)
 *   circ: fusion or list of three (default min)
 *   phi, psi: shapes (default identity)
 *   k, ybar: numbers (default 1)
 *   cd: "interval" for [0, ybar] capped, {"interval": [lo, hi]}, or a value list
 */
inline InequalityConfig config(const json& j, const std::string& path)
{
	InequalityConfig cfg;
	if (!j.is_object())
		throw ScenarioError(path, "config must be an object");
	if (j.contains("inner"))
		cfg.inner = fusion(j.at("inner"), detail::join(path, "inner"));
	cfg.outer = j.contains("outer") ? fusion(j.at("outer"), detail::join(path, "outer")) : cfg.inner;
	if (j.contains("triangle"))
		cfg.triangle = fusion(j.at("triangle"), detail::join(path, "triangle"));
	if (j.contains("circ")) {
		const auto& c = j.at("circ");
		const auto cp = detail::join(path, "circ");
		if (c.is_array()) {
			if (c.size() != 3)
				throw ScenarioError(cp, "expected three operations");
			for (std::size_t i = 0; i < 3; ++i)
				cfg.circ[i] = fusion(c[i], detail::at(cp, i));
		} else {
			const auto op = fusion(c, cp);
			cfg.circ = {op, op, op};
		}
	}
	cfg.phi = shapes_field(j, "phi", path);
	cfg.psi = shapes_field(j, "psi", path);
	cfg.ybar = number_or(j, "ybar", 1.0, path);
	cfg.k = number_or(j, "k", cfg.ybar, path);
	const double top = std::isinf(cfg.ybar) ? CheckOptions{}.infinity_cap : cfg.ybar;
	cfg.cd = CdDomain::interval(0.0, top);
	if (j.contains("cd")) {
		const auto& c = j.at("cd");
		const auto cp = detail::join(path, "cd");
		try {
			if (c.is_array())
				cfg.cd = CdDomain::of_values(numbers(c, cp));
			else if (c.is_object())
				cfg.cd = [&] {
					const auto iv = interval(detail::need(c, "interval", cp), cp + ".interval");
					return CdDomain::interval(iv.lo, iv.hi);
				}();
			else if (!(c.is_string() && c.get<std::string>() == "interval"))
				throw ScenarioError(cp, "cd is \"interval\", {\"interval\": [lo, hi]} or a list of values");
		} catch (const ScenarioError&) {
			throw;
		} catch (const Error& e) {
			throw ScenarioError(cp, e.what());
		}
	}
	return cfg;
}

/**
 * Level function t -> m(D and {f >= t}) for continuum examples:
 *   {"bound": 1, "segments": [{"on": "[0, 0.25]", "expr": "1 - t"}, ...]}
 */
inline SurvivalScenario survival(const json& j, const std::string& path)
{
	const double bound = number_or(j, "bound", 1.0, path);
	const auto& segs = detail::need(j, "segments", path);
	if (!segs.is_array())
		throw ScenarioError(detail::join(path, "segments"), "expected a list");
	std::vector<SurvivalSegment> out;
	for (std::size_t i = 0; i < segs.size(); ++i) {
		const auto sp = detail::at(detail::join(path, "segments"), i);
		out.push_back({interval(detail::need(segs[i], "on", sp), sp + ".on"),
		               expression(detail::need(segs[i], "expr", sp), {"t"}, sp + ".expr")});
	}
	try {
		return SurvivalScenario(bound, std::move(out));
	} catch (const Error& e) {
		throw ScenarioError(path, e.what());
	}
}

/**
 * Scenario document: either a single scenario object or
 * {"scenarios": [ ... ]}. Each scenario has "name", "kind", optional
 * "source" and "expect"; the remaining fields depend on the kind.
 */
inline std::vector<Scenario> parse_scenarios(const std::string& content, const std::string& origin)
{
	json doc;
	try {
		doc = json::parse(content);
	} catch (const json::parse_error& e) {
		throw ScenarioError(origin, e.what());
	}
	std::vector<json> blocks;
	if (doc.is_object() && doc.contains("scenarios")) {
		if (!doc.at("scenarios").is_array())
			throw ScenarioError(origin, "'scenarios' must be a list");
		for (const auto& s : doc.at("scenarios"))
			blocks.push_back(s);
	} else {
		blocks.push_back(doc);
	}
	std::vector<Scenario> out;
	for (std::size_t i = 0; i < blocks.size(); ++i) {
		const auto& b = blocks[i];
		const auto path = origin + ":scenarios[" + std::to_string(i) + "]";
		Scenario s;
		s.name = text(detail::need(b, "name", path), path + ".name");
		s.kind = text(detail::need(b, "kind", path), path + ".kind");
		if (std::find(scenario_kinds().begin(), scenario_kinds().end(), s.kind) == scenario_kinds().end())
			throw ScenarioError(path + ".kind", "unknown kind '" + s.kind + "'");
		if (b.contains("source"))
			s.source = text(b.at("source"), path + ".source");
		if (b.contains("expect")) {
			s.expect = text(b.at("expect"), path + ".expect");
			if (*s.expect != "holds" && *s.expect != "violated" && *s.expect != "hypothesis_failed")
				throw ScenarioError(path + ".expect", "expect is holds, violated or hypothesis_failed");
		}
		s.body = b;
		s.origin = origin;
		out.push_back(std::move(s));
	}
	return out;
}

inline std::vector<Scenario> load_scenarios(const std::string& file)
{
	std::ifstream in(file);
	if (!in)
		throw InputError("cannot open scenario file '" + file + "'");
	std::stringstream ss;
	ss << in.rdbuf();
	return parse_scenarios(ss.str(), file);
}

} // namespace sugeno::cli

#endif
