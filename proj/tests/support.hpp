#pragma once

// Shared fixtures for the unit tests: seeded generators of random words and
// series, and small brute-force enumerations used as oracles.

#include "loopmagnus/monomial.hpp"
#include "loopmagnus/series.hpp"
#include "loopmagnus/term.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace loopmagnus::testing {

inline constexpr std::uint64_t kSeed = 20240517;

inline NSeries ser(const char *text, int n, RewriteMode mode = RewriteMode::NonCommutative)
{
	return parse_series(text, n, mode);
}

inline LoopTerm term(const char *text)
{
	return parse_term(text, 9);
}

inline Monomial X(int i)
{
	return Monomial::generator(i);
}

inline Monomial mono(const Monomial &a, const Monomial &b, bool commutative = false)
{
	return Monomial::product(a, b, commutative);
}

/// Every tree monomial of degree d over x_1..x_k, duplicates included in
/// commutative mode.
inline std::vector<Monomial> all_monomials(int d, int k, bool commutative)
{
	std::vector<Monomial> out;
	if (d == 1) {
		for (int i = 1; i <= k; ++i)
			out.push_back(X(i));
		return out;
	}
	for (int l = 1; l < d; ++l)
		for (const auto &a : all_monomials(l, k, commutative))
			for (const auto &b : all_monomials(d - l, k, commutative))
				out.push_back(mono(a, b, commutative));
	return out;
}

/// Every word (reduced or not) with exactly `leaves` leaves over x_1..x_k
/// and no identity leaf.
inline std::vector<LoopTerm> all_trees(int leaves, int k)
{
	std::vector<LoopTerm> out;
	if (leaves == 1) {
		for (int i = 1; i <= k; ++i)
			out.push_back(LoopTerm::generator(i));
		return out;
	}
	for (int l = 1; l < leaves; ++l)
		for (const auto &a : all_trees(l, k))
			for (const auto &b : all_trees(leaves - l, k))
				for (auto kind : {TermKind::Mul, TermKind::LDiv, TermKind::RDiv})
					out.push_back(LoopTerm::binary(kind, a, b));
	return out;
}

/// Unit series 1 + (random terms of degree 1..N over x_1..x_k), integer
/// coefficients in [-3, 3].
inline NSeries random_unit(std::mt19937_64 &rng, int n, int k, RewriteMode mode, int terms_per_degree = 3)
{
	const bool comm = mode == RewriteMode::Commutative;
	NSeries s = NSeries::constant(1, n, mode);
	std::uniform_int_distribution<int> coeff(-3, 3);
	for (int d = 1; d <= n; ++d) {
		const auto pool = all_monomials(d, k, comm);
		std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
		for (int t = 0; t < terms_per_degree; ++t)
			s.add_term(pool[pick(rng)], Rational(coeff(rng)));
	}
	return s;
}

/// Random word with `leaves` leaves; identity leaves allowed with small
/// probability.
inline LoopTerm random_word(std::mt19937_64 &rng, int leaves, int k)
{
	if (leaves == 1) {
		std::uniform_int_distribution<int> g(0, 4 * k);
		const int i = g(rng);
		return i == 0 ? LoopTerm::identity() : LoopTerm::generator(1 + (i - 1) % k);
	}
	std::uniform_int_distribution<int> split(1, leaves - 1);
	std::uniform_int_distribution<int> op(0, 2);
	const int l = split(rng);
	const TermKind kinds[] = {TermKind::Mul, TermKind::LDiv, TermKind::RDiv};
	return LoopTerm::binary(kinds[op(rng)], random_word(rng, l, k), random_word(rng, leaves - l, k));
}

} // namespace loopmagnus::testing
