#ifndef SUGENO_RANDOM_HPP
#define SUGENO_RANDOM_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "sugeno/integral.hpp"
#include "sugeno/measure.hpp"

namespace sugeno {

/**
 * Seeded generator whose draws are identical on every platform: the engine
 * is fully specified by the standard and the conversions below avoid the
 * implementation-defined std distributions.
 */
class Rng
{
public:
	explicit Rng(std::uint64_t seed) : engine_(seed) {}

	/// Uniform on [0, 1).
	double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

	double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

	/// Uniform on {0, ..., n - 1}.
	std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

	/// Uniform on {lo, ..., hi}.
	std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

	bool coin() { return (engine_() >> 63) != 0; }

	/// Fisher-Yates shuffle driven by below().
	template <class T>
	void shuffle(std::vector<T>& v)
	{
		for (std::size_t i = v.size(); i > 1; --i)
			std::swap(v[i - 1], v[below(i)]);
	}

	/// A multiple of `step` in [0, 1].
	double on_grid(double step)
	{
		const auto n = static_cast<std::size_t>(std::llround(1.0 / step));
		return static_cast<double>(below(n + 1)) / static_cast<double>(n);
	}

private:
	std::mt19937_64 engine_;
};

/// Capacity from uniform draws made monotone by closing each set under the max of its subsets.
inline MonotoneMeasure random_capacity(Rng& rng, std::size_t atoms)
{
	FiniteSpace space = FiniteSpace::numbered(atoms);
	std::vector<double> t(space.subset_count());
	for (auto& x : t)
		x = rng.uniform();
	t[0] = 0.0;
	t.back() = 1.0;
	for (std::size_t a = 1; a < t.size(); ++a)
		for (std::size_t i = 0; i < atoms; ++i)
			if (a & (std::size_t{1} << i))
				t[a] = std::max(t[a], t[a & ~(std::size_t{1} << i)]);
	return MonotoneMeasure::from_table(std::move(space), std::move(t));
}

/// Monotone measure with total mass `total` (scaled random capacity).
inline MonotoneMeasure random_measure(Rng& rng, std::size_t atoms, double total)
{
	auto c = random_capacity(rng, atoms);
	std::vector<double> t = c.table();
	for (auto& x : t)
		x *= total;
	t.back() = total;
	return MonotoneMeasure::from_table(c.space(), std::move(t));
}

/// Necessity measure of a random normalised possibility distribution.
inline MonotoneMeasure random_necessity(Rng& rng, std::size_t atoms)
{
	std::vector<double> pi(atoms);
	for (auto& p : pi)
		p = rng.uniform();
	pi[rng.below(atoms)] = 1.0;
	return necessity_from_possibility(FiniteSpace::numbered(atoms), pi);
}

/// Random probability vector on `atoms` atoms.
inline std::vector<double> random_probability(Rng& rng, std::size_t atoms)
{
	std::vector<double> p(atoms);
	double sum = 0.0;
	for (auto& x : p) {
		x = rng.uniform() + 1e-3;
		sum += x;
	}
	for (auto& x : p)
		x /= sum;
	return p;
}

/// Supermodular capacity: a probability distorted by x^r with r in [1, 3].
inline MonotoneMeasure random_supermodular(Rng& rng, std::size_t atoms)
{
	const auto p = random_probability(rng, atoms);
	const double r = rng.uniform(1.0, 3.0);
	FiniteSpace space = FiniteSpace::numbered(atoms);
	std::vector<double> t(space.subset_count());
	for (std::size_t a = 0; a < t.size(); ++a) {
		double pa = 0.0;
		for (std::size_t i = 0; i < atoms; ++i)
			if (a & (std::size_t{1} << i))
				pa += p[i];
		t[a] = std::pow(std::min(pa, 1.0), r);
	}
	t[0] = 0.0;
	t.back() = 1.0;
	return MonotoneMeasure::from_table(std::move(space), std::move(t));
}

/// Sorted ladder of `count` values in [0, k].
inline std::vector<double> random_ladder(Rng& rng, std::size_t count, double k)
{
	std::vector<double> v(count);
	for (auto& x : v)
		x = k * rng.uniform();
	if (rng.coin())
		v[0] = 0.0;
	if (rng.coin())
		v.back() = k;
	std::sort(v.begin(), v.end());
	return v;
}

/// Function with at most `max_distinct` distinct values in [0, k].
inline SimpleFunction random_function(Rng& rng, std::size_t atoms, std::size_t max_distinct, double k)
{
	const auto ladder = random_ladder(rng, rng.between(1, max_distinct), k);
	std::vector<double> v(atoms);
	for (auto& x : v)
		x = ladder[rng.below(ladder.size())];
	return SimpleFunction(std::move(v), k);
}

/// Comonotone pair: non-decreasing ladders composed with one shared atom ordering.
inline std::pair<SimpleFunction, SimpleFunction> random_comonotone_pair(Rng& rng, std::size_t atoms, double k)
{
	std::vector<std::size_t> order(atoms);
	std::iota(order.begin(), order.end(), std::size_t{0});
	rng.shuffle(order);
	const auto lf = random_ladder(rng, atoms, k);
	const auto lg = random_ladder(rng, atoms, k);
	std::vector<double> f(atoms), g(atoms);
	for (std::size_t r = 0; r < atoms; ++r) {
		f[order[r]] = lf[r];
		g[order[r]] = lg[r];
	}
	return {SimpleFunction(std::move(f), k), SimpleFunction(std::move(g), k)};
}

/// Random non-empty subset of a space with `atoms` atoms.
inline Mask random_nonempty_set(Rng& rng, std::size_t atoms)
{
	const std::size_t all = (std::size_t{1} << atoms) - 1;
	return static_cast<Mask>(1 + rng.below(all));
}

} // namespace sugeno

#endif
