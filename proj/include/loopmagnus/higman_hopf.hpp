#pragma once

// The polynomial algebra Q[T] on symbols t_i (degree 1) and t(m1,m2)
// (degree |m1|+|m2|), the maps t and t*, and the algebra Q{X} (x) Q[T] with
// the twisted product
//   (x (x) a)(y (x) b) = sum x_(1) y_(1) (x) t*(x_(2) (x) y_(2)) a b.
// Everything is truncated at total degree N.

#include "loopmagnus/magnus.hpp"
#include "loopmagnus/monomial.hpp"
#include "loopmagnus/rational.hpp"
#include "loopmagnus/series.hpp"
#include "loopmagnus/term.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace loopmagnus {

/// t_i when index > 0, otherwise t(m1, m2) with non-unit m1, m2.
struct TSymbol {
	int index = 0;
	Monomial m1;
	Monomial m2;

	bool is_pair() const noexcept { return index == 0; }
	int degree() const noexcept { return is_pair() ? m1.degree() + m2.degree() : 1; }

	static TSymbol generator(int i);
	/// t(m1, m2), or nullopt when either factor is the unit (t vanishes
	/// there). Commutative mode stores m1 >= m2.
	static std::optional<TSymbol> pair(const Monomial &m1, const Monomial &m2, bool commutative);

	friend bool operator==(const TSymbol &, const TSymbol &) = default;
	friend std::strong_ordering operator<=>(const TSymbol &a, const TSymbol &b);
};

std::string render(const TSymbol &s);

/// Commutative monomial in T: a sorted list of symbols with repetition.
using TMonomial = std::vector<TSymbol>;

int degree(const TMonomial &m);

/// Truncated polynomial in Q[T]: terms of degree <= N.
class TPoly {
public:
	using Terms = std::map<TMonomial, Rational>;

	explicit TPoly(int truncation) : n_(truncation) {}
	static TPoly constant(const Rational &c, int truncation);
	static TPoly symbol(const TSymbol &s, int truncation);

	int truncation() const noexcept { return n_; }
	const Terms &terms() const noexcept { return terms_; }
	Rational constant_term() const;
	Rational coefficient(const TMonomial &m) const;
	bool is_zero() const noexcept { return terms_.empty(); }
	/// Adds c*m, dropping it if deg m > N.
	void add_term(const TMonomial &m, const Rational &c);

	TPoly &operator+=(const TPoly &o);
	TPoly &operator-=(const TPoly &o);
	TPoly &operator*=(const Rational &c);
	friend bool operator==(const TPoly &a, const TPoly &b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

private:
	int n_;
	Terms terms_;
};

TPoly operator+(TPoly a, const TPoly &b);
TPoly operator-(TPoly a, const TPoly &b);
TPoly operator*(const Rational &c, TPoly a);
/// Product truncated at the smaller truncation.
TPoly operator*(const TPoly &a, const TPoly &b);
/// exp(a) for a with zero constant term.
TPoly exp(const TPoly &a);
/// Multiplicative inverse; needs a non-zero constant term.
TPoly inverse(const TPoly &a);
/// a^k for any integer k (negative powers through the inverse).
TPoly power(const TPoly &a, int k);

std::string render(const TPoly &a);

/// Element of Q[T] (x) Q[T], truncated at total degree N.
class TTensor {
public:
	using Terms = std::map<std::pair<TMonomial, TMonomial>, Rational>;

	explicit TTensor(int truncation) : n_(truncation) {}
	const Terms &terms() const noexcept { return terms_; }
	void add_term(const TMonomial &a, const TMonomial &b, const Rational &c);
	friend bool operator==(const TTensor &, const TTensor &) = default;

private:
	int n_;
	Terms terms_;
};

/// The algebra morphism with every symbol primitive.
TTensor coproduct(const TPoly &a);
TTensor tensor(const TPoly &a, const TPoly &b);

/// t(u (x) v): bilinear, zero on any pair involving the unit monomial.
TPoly t_map(const NSeries &u, const NSeries &v, int truncation);

/// t*(m (x) m') for monomials (unit allowed).
TPoly t_star(const Monomial &m, const Monomial &m2, bool commutative, int truncation);
/// t*(u (x) v), bilinear extension.
TPoly t_star(const NSeries &u, const NSeries &v, int truncation);

/// Delta_T(t*(m (x) m')) == sum over Delta m, Delta m' of
/// t*(m_(1) (x) m'_(1)) (x) t*(m_(2) (x) m'_(2)), at truncation N.
bool t_star_is_comultiplicative(const Monomial &m, const Monomial &m2, bool commutative, int truncation);

/// The k-fold iterated coproduct of a monomial, one entry per assignment of
/// leaves to k slots; slot j holds the restriction to the leaves sent to j.
std::vector<std::vector<Monomial>> iterated_coproduct(const Monomial &m, int k, bool commutative);

// ---------------------------------------------------------------------------

/// Truncated element of Q{X} (x) Q[T]: for each X-monomial (the unit
/// included) a non-zero polynomial in T with degrees <= N - deg m.
class MixedSeries {
public:
	using Terms = std::map<Monomial, TPoly>;

	MixedSeries(int truncation, RewriteMode mode) : n_(truncation), mode_(mode) {}
	static MixedSeries constant(const Rational &c, int truncation, RewriteMode mode);
	/// x (x) a, truncated at total degree N.
	static MixedSeries tensor(const NSeries &x, const TPoly &a);

	int truncation() const noexcept { return n_; }
	RewriteMode mode() const noexcept { return mode_; }
	bool commutative() const noexcept { return mode_ == RewriteMode::Commutative; }
	const Terms &terms() const noexcept { return terms_; }
	Rational constant_term() const;
	/// Coefficient polynomial of an X-monomial.
	TPoly coefficient(const Monomial &m) const;
	void add(const Monomial &m, const TPoly &a);
	/// Part of total degree d.
	MixedSeries homogeneous_part(int d) const;

	MixedSeries &operator+=(const MixedSeries &o);
	MixedSeries &operator-=(const MixedSeries &o);
	MixedSeries &operator*=(const Rational &c);
	friend bool operator==(const MixedSeries &a, const MixedSeries &b)
	{
		return a.n_ == b.n_ && a.mode_ == b.mode_ && a.terms_ == b.terms_;
	}

private:
	void check_compatible(const MixedSeries &o) const;
	int n_;
	RewriteMode mode_;
	Terms terms_;
};

MixedSeries operator+(MixedSeries a, const MixedSeries &b);
MixedSeries operator-(MixedSeries a, const MixedSeries &b);
MixedSeries operator*(const Rational &c, MixedSeries a);
MixedSeries mixed_mul(const MixedSeries &a, const MixedSeries &b);
inline MixedSeries operator*(const MixedSeries &a, const MixedSeries &b) { return mixed_mul(a, b); }
/// q with b*q = a, solved degree by degree; b needs a non-zero constant.
MixedSeries mixed_left_divide(const MixedSeries &b, const MixedSeries &a);
/// q with q*b = a.
MixedSeries mixed_right_divide(const MixedSeries &a, const MixedSeries &b);

std::string render(const MixedSeries &a);

/// e(X_i) (x) exp(t_i). The base defaults to the right-normed exponential.
MixedSeries tilde_generator_image(int index, const MagnusConfig &cfg);

/// Memoizing evaluator of x_i -> e(X_i) (x) exp(t_i) on loop words.
class MagnusTildeEvaluator {
public:
	explicit MagnusTildeEvaluator(MagnusConfig cfg);
	const MixedSeries &operator()(const LoopTerm &w);

private:
	MagnusConfig cfg_;
	std::vector<MixedSeries> generators_;
	std::unordered_map<LoopTerm, MixedSeries, LoopTermHash> memo_;
};

MixedSeries magnus_tilde(const LoopTerm &w, const MagnusConfig &cfg);

/// The algebra map X_i -> log_e(e(X_i) (x) exp(t_i)) for i <= alphabet.
class PhiMap {
public:
	explicit PhiMap(MagnusConfig cfg);
	const MixedSeries &generator_image(int index) const;
	MixedSeries operator()(const NSeries &s) const;

private:
	MagnusConfig cfg_;
	std::vector<MixedSeries> images_;
};

MixedSeries phi_apply(const NSeries &s, const MagnusConfig &cfg);

struct LemmaAResult {
	std::size_t vectors_checked = 0;
	std::optional<std::vector<int>> relation; // non-zero exponents with product 1
	bool commute = true;

	bool passed() const { return !relation && commute; }
};

/// Every non-zero exponent vector in [-bound, bound]^k gives a product of
/// powers different from 1; the generators commute pairwise.
LemmaAResult lemma_a_check(const std::vector<TPoly> &generators, int bound);

} // namespace loopmagnus
