#pragma once

// Higman's loop (L,A): A is free abelian on symbols x_i and <l1,l2>
// (l1, l2 non-identity elements of a loop L), and
//   (l1,a1)(l2,a2) = (l1 l2, a1 + a2 + <l1,l2>)
//   (l1,a1)/(l2,a2) = (l1/l2, a1 - a2 - <l1/l2, l2>)
//   (l2,a2)\(l1,a1) = (l2\l1, a1 - a2 - <l2, l2\l1>)
// with <l,e> = <e,l> = 0. delta(w) = (alpha(w), psi(w)) for an assignment
// alpha of the generators into L.

#include "loopmagnus/error.hpp"
#include "loopmagnus/loops.hpp"
#include "loopmagnus/term.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace loopmagnus {

/// Gen(i) when gen > 0, otherwise Pair(l1, l2). Gen symbols sort first.
template <class E>
struct ASymbol {
	int gen = 0;
	E l1{};
	E l2{};

	bool is_pair() const noexcept { return gen == 0; }

	static ASymbol generator(int i) { return ASymbol{i, E{}, E{}}; }
	static ASymbol pair(E a, E b) { return ASymbol{0, std::move(a), std::move(b)}; }

	friend bool operator==(const ASymbol &a, const ASymbol &b)
	{
		return a.gen == b.gen && a.l1 == b.l1 && a.l2 == b.l2;
	}
	friend bool operator<(const ASymbol &a, const ASymbol &b)
	{
		if (a.is_pair() != b.is_pair())
			return !a.is_pair();
		if (!a.is_pair())
			return a.gen < b.gen;
		if (!(a.l1 == b.l1))
			return a.l1 < b.l1;
		return a.l2 < b.l2;
	}
};

/// Element of the free abelian group A; zero coefficients are never stored.
template <class E>
class AElement {
public:
	using Terms = std::map<ASymbol<E>, Integer>;

	const Terms &terms() const noexcept { return terms_; }
	bool is_zero() const noexcept { return terms_.empty(); }

	Integer coefficient(const ASymbol<E> &s) const
	{
		auto it = terms_.find(s);
		return it == terms_.end() ? Integer(0) : it->second;
	}

	void add(const ASymbol<E> &s, const Integer &c)
	{
		if (c == 0)
			return;
		auto [it, inserted] = terms_.try_emplace(s, c);
		if (!inserted) {
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	AElement &operator+=(const AElement &o)
	{
		for (const auto &[s, c] : o.terms_)
			add(s, c);
		return *this;
	}
	AElement &operator-=(const AElement &o)
	{
		for (const auto &[s, c] : o.terms_)
			add(s, -c);
		return *this;
	}

	friend AElement operator+(AElement a, const AElement &b) { return a += b; }
	friend AElement operator-(AElement a, const AElement &b) { return a -= b; }
	friend bool operator==(const AElement &a, const AElement &b) { return a.terms_ == b.terms_; }
	friend bool operator<(const AElement &a, const AElement &b) { return a.terms_ < b.terms_; }

private:
	Terms terms_;
};

template <class E>
struct LAElement {
	E l{};
	AElement<E> a;

	friend bool operator==(const LAElement &x, const LAElement &y) { return x.l == y.l && x.a == y.a; }
	friend bool operator<(const LAElement &x, const LAElement &y)
	{
		if (!(x.l == y.l))
			return x.l < y.l;
		return x.a < y.a;
	}
};

/// The loop (L,A). In commutative mode L must be commutative and <l1,l2> is
/// stored with l1 <= l2.
template <LoopOps L>
class HigmanLoop {
public:
	using Base = typename L::Element;
	using Element = LAElement<Base>;
	using Symbol = ASymbol<Base>;

	HigmanLoop(L base, RewriteMode mode) : base_(std::move(base)), mode_(mode)
	{
		if (mode == RewriteMode::Commutative && !L::commutative)
			throw DomainError("commutative mode needs a commutative loop L");
	}

	const L &base() const noexcept { return base_; }
	RewriteMode mode() const noexcept { return mode_; }

	/// <l1,l2>, or nullopt when either entry is the identity of L.
	std::optional<Symbol> pair(const Base &l1, const Base &l2) const
	{
		const Base e = base_.identity();
		if (l1 == e || l2 == e)
			return std::nullopt;
		if (mode_ == RewriteMode::Commutative && l2 < l1)
			return Symbol::pair(l2, l1);
		return Symbol::pair(l1, l2);
	}

	/// a + c <l1,l2>.
	void add_pair(AElement<Base> &a, const Base &l1, const Base &l2, const Integer &c) const
	{
		if (auto s = pair(l1, l2))
			a.add(*s, c);
	}

	Element identity() const { return {base_.identity(), {}}; }

	Element mul(const Element &x, const Element &y) const
	{
		Element r{base_.mul(x.l, y.l), x.a + y.a};
		add_pair(r.a, x.l, y.l, 1);
		return r;
	}

	/// x/y.
	Element rdiv(const Element &x, const Element &y) const
	{
		Element r{base_.rdiv(x.l, y.l), x.a - y.a};
		add_pair(r.a, r.l, y.l, -1);
		return r;
	}

	/// y\x, written ldiv(y, x).
	Element ldiv(const Element &y, const Element &x) const
	{
		Element r{base_.ldiv(y.l, x.l), x.a - y.a};
		add_pair(r.a, y.l, r.l, -1);
		return r;
	}

private:
	L base_;
	RewriteMode mode_;
};

/// alpha(w): the homomorphic image of w under x_i -> images[i-1].
template <LoopOps L>
typename L::Element alpha_eval(const L &loop, const LoopTerm &w, const std::vector<typename L::Element> &images)
{
	switch (w.kind()) {
	case TermKind::Identity: return loop.identity();
	case TermKind::Generator:
		if (w.index() > static_cast<int>(images.size()))
			throw DomainError("alpha assigns no image to x" + std::to_string(w.index()));
		return images[static_cast<std::size_t>(w.index() - 1)];
	case TermKind::Mul: return loop.mul(alpha_eval(loop, w.left(), images), alpha_eval(loop, w.right(), images));
	case TermKind::LDiv: return loop.ldiv(alpha_eval(loop, w.left(), images), alpha_eval(loop, w.right(), images));
	default: return loop.rdiv(alpha_eval(loop, w.left(), images), alpha_eval(loop, w.right(), images));
	}
}

/// Memoized (alpha(w), psi(w)). psi follows the recursion
///   psi(e) = 0, psi(x_i) = x_i,
///   psi(uv)  = psi(u) + psi(v) + <alpha(u), alpha(v)>,
///   psi(u/v) = psi(u) - psi(v) - <alpha(u)/alpha(v), alpha(v)>,
///   psi(u\v) = psi(v) - psi(u) - <alpha(u), alpha(u)\alpha(v)>.
template <LoopOps L>
class DeltaEvaluator {
public:
	using Base = typename L::Element;

	DeltaEvaluator(const HigmanLoop<L> &loop, std::vector<Base> alpha)
	    : loop_(loop), alpha_(std::move(alpha))
	{
	}

	const LAElement<Base> &operator()(const LoopTerm &w)
	{
		if (auto it = memo_.find(w); it != memo_.end())
			return it->second;
		const L &base = loop_.base();
		LAElement<Base> r;
		switch (w.kind()) {
		case TermKind::Identity: r.l = base.identity(); break;
		case TermKind::Generator:
			if (w.index() > static_cast<int>(alpha_.size()))
				throw DomainError("alpha assigns no image to x" + std::to_string(w.index()));
			r.l = alpha_[static_cast<std::size_t>(w.index() - 1)];
			r.a.add(ASymbol<Base>::generator(w.index()), 1);
			break;
		default: {
			const LAElement<Base> u = (*this)(w.left());
			const LAElement<Base> v = (*this)(w.right());
			if (w.kind() == TermKind::Mul) {
				r.l = base.mul(u.l, v.l);
				r.a = u.a + v.a;
				loop_.add_pair(r.a, u.l, v.l, 1);
			} else if (w.kind() == TermKind::RDiv) {
				r.l = base.rdiv(u.l, v.l);
				r.a = u.a - v.a;
				loop_.add_pair(r.a, r.l, v.l, -1);
			} else {
				r.l = base.ldiv(u.l, v.l);
				r.a = v.a - u.a;
				loop_.add_pair(r.a, u.l, r.l, -1);
			}
		}
		}
		return memo_.emplace(w, std::move(r)).first->second;
	}

private:
	const HigmanLoop<L> &loop_;
	std::vector<Base> alpha_;
	std::unordered_map<LoopTerm, LAElement<Base>, LoopTermHash> memo_;
};

template <LoopOps L>
LAElement<typename L::Element> delta(const HigmanLoop<L> &loop, const LoopTerm &w,
                                     const std::vector<typename L::Element> &alpha)
{
	DeltaEvaluator<L> eval(loop, alpha);
	return eval(w);
}

template <LoopOps L>
AElement<typename L::Element> psi(const HigmanLoop<L> &loop, const LoopTerm &w,
                                  const std::vector<typename L::Element> &alpha)
{
	return delta(loop, w, alpha).a;
}

// ---------------------------------------------------------------------------
// Free abelian targets.

using AbelianVector = FreeAbelianGroup::Element;
using AbelianSymbol = ASymbol<AbelianVector>;
using AbelianA = AElement<AbelianVector>;
using AbelianHigman = HigmanLoop<FreeAbelianGroup>;

/// "x2" or "<x2,x1>".
std::string render(const AbelianSymbol &s);
/// "x1 + <x2,x1> - 2*<x3,x1>"; zero renders as "0".
std::string render(const AbelianA &a);

/// x_i -> i-th basis vector of Z^n.
std::vector<AbelianVector> abelianization(int n);

struct Prop5Witness {
	int n = 0;
	LoopTerm y;
	Integer coefficient;   // of <x2,x1> in psi(y)
	bool alpha_is_x1 = false;
	std::string psi;       // rendering of psi(y)
};

/// y = [L_{x_n}, [L_{x_{n-1}}, ... [L_{x_3}, L_{x_2}]]](x_1) with alpha the
/// abelianization into Z^n. Throws DomainError for n < 3.
Prop5Witness prop5_witness(int n);

enum class Lemma6Status { Witness, InComponents, AlphaDiffers, NotInjective, NoWitness };

std::string to_string(Lemma6Status s);

struct Lemma6Result {
	Lemma6Status status = Lemma6Status::NoWitness;
	std::optional<AbelianSymbol> witness;  // coefficient 0 in psi(w), +-1 in psi(w')
	std::optional<std::pair<LoopTerm, LoopTerm>> collapsed; // offending pair for NotInjective
};

/// Checks the three hypotheses and, when they hold, searches for a generator
/// of A with coefficient 0 in psi(w) and +-1 in psi(w'). Throws DomainError
/// if w or w' is not reduced in the loop's mode.
Lemma6Result lemma6_check(const LoopTerm &w, const LoopTerm &w2, const AbelianHigman &loop,
                          const std::vector<AbelianVector> &alpha);

/// Variant reusing a caller-owned evaluator.
Lemma6Result lemma6_check(const LoopTerm &w, const LoopTerm &w2, DeltaEvaluator<FreeAbelianGroup> &eval,
                          RewriteMode mode);

struct Corollary1Result {
	std::size_t size = 0;
	std::size_t alpha_images = 0;
	std::size_t delta_images = 0;
	bool applicable = false; // alpha not injective on S
	bool holds = true;       // applicable implies delta_images > alpha_images
};

/// Throws DomainError if S is not closed under components.
Corollary1Result corollary1_check(const std::vector<LoopTerm> &S, DeltaEvaluator<FreeAbelianGroup> &eval);
Corollary1Result corollary1_check(const std::vector<LoopTerm> &S, const AbelianHigman &loop,
                                  const std::vector<AbelianVector> &alpha);

struct Lemma6Scan {
	std::size_t words = 0;
	std::size_t ordered_pairs = 0;     // pairs with equal alpha, w != w'
	std::size_t hypotheses_hold = 0;
	std::size_t witnesses = 0;
	std::vector<std::pair<LoopTerm, LoopTerm>> counterexamples;
};

/// All ordered pairs of reduced words with <= max_leaves leaves over
/// `alphabet` generators, alpha = abelianization.
Lemma6Scan lemma6_scan(int alphabet, int max_leaves, RewriteMode mode);

struct Corollary1Scan {
	std::size_t sets = 0;
	std::size_t applicable = 0;
	std::vector<std::vector<LoopTerm>> counterexamples;
};

/// Component-closed sets drawn from the reduced words with <= max_leaves
/// leaves: Comp(w) for each w, Comp(w) u Comp(w') for every pair with equal
/// abelian image, and the full enumerations up to k leaves, k <= max_leaves.
Corollary1Scan corollary1_scan(int alphabet, int max_leaves, RewriteMode mode);

} // namespace loopmagnus
