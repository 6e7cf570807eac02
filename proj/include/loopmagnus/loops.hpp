#pragma once

// Concrete computable loops, words in left translations acting on them, and
// the polynomial embeddings of the two integer-pair loops into truncated
// one-variable series algebras.

#include "loopmagnus/rational.hpp"
#include "loopmagnus/series.hpp"
#include "loopmagnus/term.hpp"

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace loopmagnus {

/// A loop given by its operations. ldiv(a, b) = a\b solves a*x = b and
/// rdiv(a, b) = a/b solves x*b = a.
template <class L>
concept LoopOps = requires(const L &loop, const typename L::Element &a) {
	{ loop.identity() } -> std::convertible_to<typename L::Element>;
	{ loop.mul(a, a) } -> std::convertible_to<typename L::Element>;
	{ loop.ldiv(a, a) } -> std::convertible_to<typename L::Element>;
	{ loop.rdiv(a, a) } -> std::convertible_to<typename L::Element>;
	{ a == a } -> std::convertible_to<bool>;
	{ a < a } -> std::convertible_to<bool>;
};

struct IntPair {
	Integer p;
	Integer q;

	friend bool operator==(const IntPair &a, const IntPair &b) { return a.p == b.p && a.q == b.q; }
	friend bool operator!=(const IntPair &a, const IntPair &b) { return !(a == b); }
	friend bool operator<(const IntPair &a, const IntPair &b)
	{
		return a.p != b.p ? a.p < b.p : a.q < b.q;
	}
};

std::string render(const IntPair &x);

/// (p,q)(p',q') = (p+p', q+q'+C(p,2)C(p',2)); commutative.
struct IntPairCommLoop {
	using Element = IntPair;
	static constexpr bool commutative = true;

	IntPair identity() const { return {0, 0}; }
	IntPair mul(const IntPair &a, const IntPair &b) const;
	IntPair ldiv(const IntPair &a, const IntPair &b) const;
	IntPair rdiv(const IntPair &a, const IntPair &b) const;
};

/// (p,q)(p',q') = (p+p', q+q'+C(p,2)p').
struct IntPairLoop {
	using Element = IntPair;
	static constexpr bool commutative = false;

	IntPair identity() const { return {0, 0}; }
	IntPair mul(const IntPair &a, const IntPair &b) const;
	IntPair ldiv(const IntPair &a, const IntPair &b) const;
	IntPair rdiv(const IntPair &a, const IntPair &b) const;
};

/// Z^rank under addition. Elements are coordinate vectors of length rank.
class FreeAbelianGroup {
public:
	using Element = std::vector<Integer>;
	static constexpr bool commutative = true;

	explicit FreeAbelianGroup(int rank);

	int rank() const noexcept { return rank_; }
	Element identity() const { return Element(static_cast<std::size_t>(rank_), Integer(0)); }
	/// The i-th basis vector, 1-based.
	Element basis(int i) const;
	Element mul(const Element &a, const Element &b) const;
	Element ldiv(const Element &a, const Element &b) const;
	Element rdiv(const Element &a, const Element &b) const;

private:
	void check(const Element &a) const;
	int rank_;
};

/// "x1+x2-2*x3"; the zero vector renders as "e".
std::string render(const FreeAbelianGroup::Element &a);

/// Loop axioms on one triple; returns the name of the first failing law.
template <LoopOps L>
std::optional<std::string> loop_axiom_failure(const L &loop, const typename L::Element &a,
                                              const typename L::Element &b)
{
	const auto e = loop.identity();
	if (!(loop.ldiv(a, loop.mul(a, b)) == b))
		return "a\\(a*b) = b";
	if (!(loop.mul(a, loop.ldiv(a, b)) == b))
		return "a*(a\\b) = b";
	if (!(loop.rdiv(loop.mul(a, b), b) == a))
		return "(a*b)/b = a";
	if (!(loop.mul(loop.rdiv(a, b), b) == a))
		return "(a/b)*b = a";
	if (!(loop.mul(e, a) == a) || !(loop.mul(a, e) == a))
		return "e*a = a = a*e";
	return std::nullopt;
}

// ---------------------------------------------------------------------------
// Words in left translations. A word [l1, ..., lk] is the composition
// l1 o ... o lk, so it is applied right to left. Sign +1 is L_a, sign -1 is
// its inverse x -> a\x.

template <class T>
struct Translation {
	T element;
	int sign = 1;

	friend bool operator==(const Translation &, const Translation &) = default;
};

template <class T>
using LMltWord = std::vector<Translation<T>>;

template <class T>
LMltWord<T> inverse(const LMltWord<T> &f)
{
	LMltWord<T> r(f.rbegin(), f.rend());
	for (auto &t : r)
		t.sign = -t.sign;
	return r;
}

/// [f, g] = f^-1 g^-1 f g.
template <class T>
LMltWord<T> commutator(const LMltWord<T> &f, const LMltWord<T> &g)
{
	LMltWord<T> r = inverse(f);
	const LMltWord<T> gi = inverse(g);
	r.insert(r.end(), gi.begin(), gi.end());
	r.insert(r.end(), f.begin(), f.end());
	r.insert(r.end(), g.begin(), g.end());
	return r;
}

template <class T>
LMltWord<T> translation(T element)
{
	return {Translation<T>{std::move(element), 1}};
}

template <LoopOps L>
typename L::Element lmlt_apply(const L &loop, const LMltWord<typename L::Element> &word,
                               typename L::Element x)
{
	for (auto it = word.rbegin(); it != word.rend(); ++it)
		x = it->sign > 0 ? loop.mul(it->element, x) : loop.ldiv(it->element, x);
	return x;
}

/// Left-translation word by generators of the free loop: (i, +1) is L_{x_i}.
using GeneratorWord = LMltWord<int>;

/// The symbolic action in the free loop: (i,+1) sends w to x_i*w and (i,-1)
/// to x_i\w. The result is not reduced.
LoopTerm lmlt_term_apply(const GeneratorWord &word, const LoopTerm &w);

/// [L_{x_1}, [L_{x_2}, ..., [L_{x_{n-1}}, L_{x_n}]]]; for n = 1 just L_{x_1}.
GeneratorWord nested_commutator(int n);

/// Associative group word of F(a): the letters of F followed by a.
std::vector<std::pair<int, int>> group_word(const GeneratorWord &f, int a);

struct LemmaFirstReport {
	int n = 0;
	int truncation = 0;
	LoopTerm word;                  // F(a), a = x_{n+1}
	std::optional<int> low_degree;  // of M(F(a)) - M(a); nullopt if zero to N
	std::string leading_term;       // lowest-degree part of the difference
	bool degree_ok = false;         // low degree >= n
	bool right_normed = false;      // M(F(a)) has right-normed monomials only
	bool associative_bridge = false; // drop_parens(M(F(a))) = Magnus of the group word

	bool passed() const { return degree_ok && right_normed && associative_bridge; }
};

/// F is the n-fold commutator of L_{x_1}, ..., L_{x_n} acting on a = x_{n+1}
/// in the free loop on n+1 generators, evaluated by the classical Magnus map
/// at truncation N. Throws DomainError unless 1 <= n <= N.
LemmaFirstReport lemma_first_check(int n, int truncation);

// ---------------------------------------------------------------------------
// Embeddings into one-variable series. X^2 = XX, X^3 = X^2 X.

/// 1 + pX + C(p,2)X^2 + C(p,3)X^3 + (C(p,4)-q) X^3X + q X^2X^2 in the
/// commutative algebra, truncated at degree 4.
NSeries embed_prop3(const IntPair &x);

/// 1 + pX + C(p,2)X^2 + (C(p,3)-q) X(XX) + q (XX)X in the non-commutative
/// algebra, truncated at degree 3.
NSeries embed_prop4(const IntPair &x);

// ---------------------------------------------------------------------------
// Expression language over integer pairs:
//   expr    := operand | operand op operand        op in  *  \  /
//   operand := (p,q) | ( expr ) | lspec @ operand
//   lspec   := L(p,q) | [ lspec , lspec ]
// Binary operators do not associate; nest with parentheses.

enum class PairLoopKind { Prop3, Prop4 };

/// Evaluates an expression in the chosen loop. Throws ParseError.
IntPair eval_pair_expression(std::string_view text, PairLoopKind kind);

} // namespace loopmagnus
