#pragma once

// Truncated power series in the free non-associative algebra Q{X} and the
// free commutative non-associative algebra Q_c{X}, plus the associative
// series reached by forgetting parentheses.

#include "loopmagnus/error.hpp"
#include "loopmagnus/monomial.hpp"
#include "loopmagnus/rational.hpp"
#include "loopmagnus/term.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace loopmagnus {

/// Process-wide cap on the number of stored terms of any series produced
/// by an arithmetic operation (0 = unlimited). Exceeding it throws
/// ResourceLimit.
void set_max_series_terms(std::size_t limit);
std::size_t max_series_terms();

/// Truncated non-associative series: constant + sum of c_m m over
/// monomials of degree 1..N. Zero coefficients are never stored.
class NSeries {
public:
	using Terms = std::unordered_map<Monomial, Rational, MonomialHash>;

	NSeries(int truncation, RewriteMode mode);

	static NSeries constant(const Rational &c, int truncation, RewriteMode mode);
	/// X_i.
	static NSeries generator(int index, int truncation, RewriteMode mode);
	static NSeries monomial(const Monomial &m, const Rational &c, int truncation, RewriteMode mode);

	int truncation() const noexcept { return n_; }
	RewriteMode mode() const noexcept { return mode_; }
	bool commutative() const noexcept { return mode_ == RewriteMode::Commutative; }

	const Rational &constant_term() const noexcept { return c0_; }
	/// Degree-d terms, 1 <= d <= N.
	const Terms &homogeneous(int d) const { return by_degree_.at(static_cast<std::size_t>(d)); }
	Rational coefficient(const Monomial &m) const;
	std::size_t term_count() const;
	bool is_zero() const;

	/// Adds c*m. The monomial is canonicalized in commutative mode; terms of
	/// degree > N are dropped.
	void add_term(const Monomial &m, const Rational &c);
	void set_constant(const Rational &c) { c0_ = c; }

	/// All terms (constant first under the unit monomial) in monomial order.
	std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

	NSeries homogeneous_part(int d) const;

	NSeries &operator+=(const NSeries &other);
	NSeries &operator-=(const NSeries &other);
	NSeries &operator*=(const Rational &c);

	friend bool operator==(const NSeries &a, const NSeries &b);

private:
	void check_compatible(const NSeries &other) const;
	void drop_zeros();

	friend NSeries mul(const NSeries &, const NSeries &);
	friend NSeries left_divide(const NSeries &, const NSeries &);
	friend NSeries right_divide(const NSeries &, const NSeries &);

	int n_;
	RewriteMode mode_;
	Rational c0_;
	std::vector<Terms> by_degree_; // index 0 unused
};

NSeries add(const NSeries &a, const NSeries &b);
NSeries subtract(const NSeries &a, const NSeries &b);
NSeries scale(const Rational &c, const NSeries &a);
NSeries mul(const NSeries &a, const NSeries &b);
/// b\a: the q with b*q = a, solved degree by degree. Needs b to be a unit.
NSeries left_divide(const NSeries &b, const NSeries &a);
/// a/b: the q with q*b = a, solved degree by degree. Needs b to be a unit.
NSeries right_divide(const NSeries &a, const NSeries &b);

inline NSeries operator+(const NSeries &a, const NSeries &b) { return add(a, b); }
inline NSeries operator-(const NSeries &a, const NSeries &b) { return subtract(a, b); }
inline NSeries operator-(const NSeries &a) { return scale(Rational(-1), a); }
inline NSeries operator*(const NSeries &a, const NSeries &b) { return mul(a, b); }
inline NSeries operator*(const Rational &c, const NSeries &a) { return scale(c, a); }

/// Smallest degree with a non-zero coefficient in a - constant_term(a).
/// nullopt when no such degree exists up to the truncation: the true value
/// is then >= N+1 (or infinite).
std::optional<int> low_degree(const NSeries &a);

/// "1 + 1*(x1*x2) + -1*(x2*x1)"; the zero series renders as "0".
std::string render(const NSeries &a);
/// Parses the text format produced by render(NSeries). Throws ParseError.
NSeries parse_series(std::string_view text, int truncation, RewriteMode mode);

// ---------------------------------------------------------------------------

/// Truncated series in the free associative algebra; words are strings of
/// generator bytes.
class ASeries {
public:
	using Word = std::string; // generator bytes
	using Terms = std::unordered_map<Word, Rational>;

	explicit ASeries(int truncation);
	static ASeries constant(const Rational &c, int truncation);
	static ASeries generator(int index, int truncation);

	int truncation() const noexcept { return n_; }
	const Rational &constant_term() const noexcept { return c0_; }
	const Terms &terms() const noexcept { return terms_; }
	Rational coefficient(const Word &w) const;
	void add_term(const Word &w, const Rational &c);

	friend bool operator==(const ASeries &, const ASeries &) = default;

private:
	int n_;
	Rational c0_;
	Terms terms_;
};

ASeries add(const ASeries &a, const ASeries &b);
ASeries mul(const ASeries &a, const ASeries &b);
/// Multiplicative inverse of a unit.
ASeries inverse(const ASeries &a);
std::string render(const ASeries &a);

/// Associative Magnus image of the group word x_{g1}^{s1} ... x_{gk}^{sk}
/// (x_i -> 1 + X_i, x_i^{-1} -> 1 - X_i + X_i^2 - ...).
ASeries associative_magnus(const std::vector<std::pair<int, int>> &letters, int truncation);

/// The algebra map Q{X} -> Q<X> forgetting parentheses. Rejects
/// commutative input.
ASeries drop_parens(const NSeries &a);

// ---------------------------------------------------------------------------

/// Algebra homomorphism determined by X_i -> images[i-1], applied to `s`.
/// `Algebra` needs `truncation()`, `constant_term()`, `operator+=`, `operator*` and scaling
/// by a Rational. Every image must have zero constant term; `one` is the
/// unit of the target algebra.
template <class Algebra>
Algebra substitute(const NSeries &s, const std::vector<Algebra> &images, const Algebra &one)
{
	for (const Algebra &z : images)
		if (z.constant_term() != 0)
			throw DomainError("substituted elements must have zero constant term");
	Algebra result = s.constant_term() * one;
	std::unordered_map<Monomial, Algebra, MonomialHash> memo;
	auto eval = [&](auto &&self, const Monomial &m) -> const Algebra & {
		if (auto it = memo.find(m); it != memo.end())
			return it->second;
		if (m.is_generator()) {
			const auto i = static_cast<std::size_t>(m.index());
			if (i > images.size())
				throw DomainError("no image supplied for generator X" + std::to_string(i));
			return memo.emplace(m, images[i - 1]).first->second;
		}
		auto [l, r] = m.factors();
		Algebra value = self(self, l) * self(self, r);
		return memo.emplace(m, std::move(value)).first->second;
	};
	// Images have positive degree, so degree-d monomials land in degree >= d.
	const int top = std::min(s.truncation(), one.truncation());
	for (int d = 1; d <= top; ++d)
		for (const auto &[m, c] : s.homogeneous(d))
			result += c * eval(eval, m);
	return result;
}

/// Substitutes z for the single variable X_1 of `s`.
template <class Algebra>
Algebra eval_univariate(const NSeries &s, const Algebra &z, const Algebra &one)
{
	return substitute(s, std::vector<Algebra>{z}, one);
}

} // namespace loopmagnus
