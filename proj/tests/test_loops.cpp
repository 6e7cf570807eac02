#include "support.hpp"

#include "loopmagnus/error.hpp"
#include "loopmagnus/loops.hpp"
#include "loopmagnus/magnus.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace loopmagnus;
using loopmagnus::testing::ser;
using loopmagnus::testing::term;

namespace {

IntPair P(long p, long q)
{
	return {Integer(p), Integer(q)};
}

// Plain 64-bit reference implementation of the two product laws, with the
// divisions solved by hand from them.
struct Ref {
	bool comm;
	static long c2(long p) { return p * (p - 1) / 2; }
	long twist(long p, long p2) const { return comm ? c2(p) * c2(p2) : c2(p) * p2; }
	std::pair<long, long> mul(std::pair<long, long> a, std::pair<long, long> b) const
	{
		return {a.first + b.first, a.second + b.second + twist(a.first, b.first)};
	}
	// a\b
	std::pair<long, long> ldiv(std::pair<long, long> a, std::pair<long, long> b) const
	{
		const long p = b.first - a.first;
		return {p, b.second - a.second - twist(a.first, p)};
	}
};

IntPair to_pair(std::pair<long, long> x)
{
	return P(x.first, x.second);
}

template <class L>
void sample_axioms(const L &loop, std::mt19937_64 &rng, int samples)
{
	std::uniform_int_distribution<long> d(-40, 40);
	for (int i = 0; i < samples; ++i) {
		const IntPair a = P(d(rng), d(rng)), b = P(d(rng), d(rng));
		const auto fail = loop_axiom_failure(loop, a, b);
		ASSERT_FALSE(fail) << *fail << " at " << render(a) << ", " << render(b);
	}
}

LMltWord<IntPair> L(long p, long q = 0)
{
	return translation(P(p, q));
}

} // namespace

TEST(LoopsIntPair, ProductLaws)
{
	const IntPairCommLoop c;
	const IntPairLoop n;
	EXPECT_EQ(c.mul(P(2, 0), P(2, 0)), P(4, 1));
	EXPECT_EQ(c.mul(P(3, 1), P(2, 5)), P(5, 9));
	EXPECT_EQ(c.mul(P(-1, 0), P(-1, 0)), P(-2, 1));
	EXPECT_EQ(n.mul(P(2, 0), P(1, 0)), P(3, 1));
	EXPECT_EQ(n.mul(P(1, 0), P(2, 0)), P(3, 0));
	EXPECT_EQ(n.mul(P(-2, 1), P(3, 0)), P(1, 10));
}

TEST(LoopsIntPair, AgreesWithReference)
{
	for (bool comm : {true, false}) {
		const Ref ref{comm};
		for (long p = -5; p <= 5; ++p)
			for (long q = -2; q <= 2; ++q)
				for (long r = -5; r <= 5; ++r)
					for (long s = -2; s <= 2; ++s) {
						const IntPair a = P(p, q), b = P(r, s);
						const IntPair mul = comm ? IntPairCommLoop{}.mul(a, b) : IntPairLoop{}.mul(a, b);
						const IntPair ld = comm ? IntPairCommLoop{}.ldiv(a, b) : IntPairLoop{}.ldiv(a, b);
						ASSERT_EQ(mul, to_pair(ref.mul({p, q}, {r, s})));
						ASSERT_EQ(ld, to_pair(ref.ldiv({p, q}, {r, s})));
					}
	}
}

TEST(LoopsIntPair, LoopAxiomsSampled)
{
	std::mt19937_64 rng(loopmagnus::testing::kSeed + 20);
	sample_axioms(IntPairCommLoop{}, rng, 1000);
	sample_axioms(IntPairLoop{}, rng, 1000);
}

TEST(LoopsIntPair, Prop4IsNotCommutative)
{
	const IntPairLoop n;
	EXPECT_NE(n.mul(P(2, 0), P(1, 0)), n.mul(P(1, 0), P(2, 0)));
}

TEST(LoopsIntPair, Render)
{
	EXPECT_EQ(render(P(3, 3)), "(3,3)");
	EXPECT_EQ(render(P(1, -1)), "(1,-1)");
}

TEST(LoopsFreeAbelian, Operations)
{
	const FreeAbelianGroup z(3);
	std::mt19937_64 rng(loopmagnus::testing::kSeed + 21);
	std::uniform_int_distribution<long> d(-9, 9);
	for (int i = 0; i < 1000; ++i) {
		FreeAbelianGroup::Element a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
		ASSERT_FALSE(loop_axiom_failure(z, a, b));
	}
	const auto v = z.mul(z.basis(1), z.mul(z.basis(2), z.ldiv(z.mul(z.basis(3), z.basis(3)), z.identity())));
	EXPECT_EQ(render(v), "x1+x2-2*x3");
	EXPECT_EQ(render(z.identity()), "e");
	EXPECT_THROW(z.basis(4), DomainError);
	EXPECT_THROW(z.mul({1, 2}, {1, 2}), DomainError);
}

TEST(LoopsLMlt, ApplyExamples)
{
	const IntPairCommLoop c;
	const IntPair a = P(2, 7), x = P(-3, 4);
	EXPECT_EQ(lmlt_apply(c, L(2, 7), c.identity()), a);
	EXPECT_EQ(lmlt_apply(c, inverse(L(2, 7)), lmlt_apply(c, L(2, 7), x)), x);
	LMltWord<IntPair> both = inverse(L(2, 7));
	both.push_back({a, 1});
	EXPECT_EQ(lmlt_apply(c, both, x), x);
	EXPECT_EQ(lmlt_apply(c, L(1), P(1, 0)), P(2, 0));
}

TEST(LoopsLMlt, RightToLeftOrder)
{
	const IntPairLoop n;
	LMltWord<IntPair> w{{P(2, 0), 1}, {P(1, 0), 1}};
	EXPECT_EQ(lmlt_apply(n, w, P(0, 0)), n.mul(P(2, 0), P(1, 0)));
}

TEST(LoopsLMlt, CommutatorExamples)
{
	const IntPairCommLoop c;
	EXPECT_EQ(lmlt_apply(c, commutator(L(2), L(1)), P(3, 0)), P(3, 3));
	const auto triple = commutator(L(1), commutator(L(2), L(1)));
	for (long a = -5; a <= 5; ++a)
		for (long b = -5; b <= 5; ++b)
			ASSERT_EQ(lmlt_apply(c, triple, P(a, b)), P(a, b - 1));
	const auto ff = commutator(L(3, 1), L(3, 1));
	for (long a = -5; a <= 5; ++a)
		ASSERT_EQ(lmlt_apply(c, ff, P(a, 2)), P(a, 2));
}

TEST(LoopsLMlt, Prop3WeightTwoClosedForm)
{
	// Reference: f^-1 g^-1 f g applied right to left with the plain loop.
	const Ref ref{true};
	const IntPairCommLoop c;
	for (long p = -5; p <= 5; ++p)
		for (long r = -5; r <= 5; ++r)
			for (long a = -5; a <= 5; ++a) {
				const long b = 2 * a - r;
				auto x = std::make_pair(a, b);
				x = ref.mul({r, 0}, x);
				x = ref.mul({p, 0}, x);
				x = ref.ldiv({r, 0}, x);
				x = ref.ldiv({p, 0}, x);
				ASSERT_EQ((a * p * r * (p - r)) % 2, 0);
				ASSERT_EQ(x, std::make_pair(a, b + a * p * r * (p - r) / 2));
				ASSERT_EQ(lmlt_apply(c, commutator(L(p), L(r)), P(a, b)), to_pair(x));
			}
}

TEST(LoopsLMlt, Prop4WeightTwoIsCentral)
{
	const IntPairLoop n;
	for (long p = -4; p <= 4; ++p)
		for (long r = -4; r <= 4; ++r) {
			const auto k = commutator(L(p), L(r));
			for (long a = -3; a <= 3; ++a) {
				const long shift = Ref::c2(p) * r - Ref::c2(r) * p;
				ASSERT_EQ(lmlt_apply(n, k, P(a, 1)), P(a, 1 + shift));
				for (long s = -3; s <= 3; ++s)
					ASSERT_EQ(lmlt_apply(n, commutator(L(s, 1), k), P(a, 0)), P(a, 0));
			}
		}
}

TEST(LoopsTerms, LMltTermApply)
{
	EXPECT_EQ(lmlt_term_apply({{1, 1}}, term("x2")), term("x1*x2"));
	const LoopTerm w = term("(x1/x2)*x3");
	EXPECT_EQ(reduce(lmlt_term_apply({{1, -1}, {1, 1}}, w), RewriteMode::NonCommutative), w);
	const GeneratorWord k = commutator(translation(3), translation(2));
	EXPECT_EQ(lmlt_term_apply(k, term("x1")), term("x3\\(x2\\(x3*(x2*x1)))"));
}

TEST(LoopsTerms, NestedCommutator)
{
	EXPECT_EQ(nested_commutator(1).size(), 1u);
	EXPECT_EQ(nested_commutator(2), commutator(translation(1), translation(2)));
	EXPECT_EQ(nested_commutator(3), commutator(translation(1), commutator(translation(2), translation(3))));
	EXPECT_THROW(nested_commutator(0), DomainError);
	const auto gw = group_word(nested_commutator(2), 3);
	EXPECT_EQ(gw, (std::vector<std::pair<int, int>>{{1, -1}, {2, -1}, {1, 1}, {2, 1}, {3, 1}}));
}

TEST(LoopsLemmaFirst, SmallCases)
{
	for (int n = 2; n <= 3; ++n) {
		const LemmaFirstReport r = lemma_first_check(n, n + 2);
		EXPECT_TRUE(r.passed()) << n;
		ASSERT_TRUE(r.low_degree);
		EXPECT_GE(*r.low_degree, n);
	}
	const LemmaFirstReport one = lemma_first_check(1, 3);
	ASSERT_TRUE(one.low_degree);
	EXPECT_EQ(*one.low_degree, 1);
	EXPECT_THROW(lemma_first_check(5, 4), DomainError);
	EXPECT_THROW(lemma_first_check(0, 4), DomainError);
}

TEST(LoopsLemmaFirst, OracleWordForNTwo)
{
	// The n = 2 commutator [L_x2,L_x1] on a: low degree of the difference is
	// at least 2 at N = 4, computed directly.
	const MagnusConfig cfg{3, 4, RewriteMode::NonCommutative, std::nullopt};
	const NSeries d = magnus(term("x2\\(x1\\(x2*(x1*x3)))"), cfg) - magnus(term("x3"), cfg);
	const auto low = low_degree(d + NSeries::constant(1, 4, RewriteMode::NonCommutative));
	ASSERT_TRUE(low);
	EXPECT_GE(*low, 2);
}

TEST(LoopsEmbed, Prop3Values)
{
	const auto C = RewriteMode::Commutative;
	EXPECT_EQ(embed_prop3(P(1, 0)), ser("1 + x1", 4, C));
	EXPECT_EQ(embed_prop3(P(0, 1)), ser("1 + -1*((x1*x1)*x1)*x1 + (x1*x1)*(x1*x1)", 4, C));
	EXPECT_EQ(embed_prop3(P(0, 0)), ser("1", 4, C));
	EXPECT_EQ(embed_prop3(P(4, 0)), ser("1 + 4*x1 + 6*(x1*x1) + 4*((x1*x1)*x1) + ((x1*x1)*x1)*x1", 4, C));
}

TEST(LoopsEmbed, Prop3MultiplicativeAndInjective)
{
	const IntPairCommLoop c;
	std::set<std::string> images;
	for (long p = -3; p <= 3; ++p)
		for (long q = -3; q <= 3; ++q) {
			const NSeries e = embed_prop3(P(p, q));
			images.insert(render(e));
			EXPECT_EQ(e == NSeries::constant(1, 4, RewriteMode::Commutative), p == 0 && q == 0);
			for (long r = -3; r <= 3; ++r)
				for (long s = -3; s <= 3; ++s)
					ASSERT_EQ(e * embed_prop3(P(r, s)), embed_prop3(c.mul(P(p, q), P(r, s))));
		}
	EXPECT_EQ(images.size(), 49u);
}

TEST(LoopsEmbed, Prop4Values)
{
	EXPECT_EQ(embed_prop4(P(1, 0)), ser("1 + x1", 3));
	EXPECT_EQ(embed_prop4(P(0, 1)), ser("1 + -1*(x1*(x1*x1)) + ((x1*x1)*x1)", 3));
}

TEST(LoopsEmbed, Prop4MultiplicativeOnGrid)
{
	const IntPairLoop n;
	for (long p = -4; p <= 4; ++p)
		for (long q = -4; q <= 4; ++q) {
			const NSeries e = embed_prop4(P(p, q));
			for (long r = -4; r <= 4; ++r)
				for (long s = -4; s <= 4; ++s)
					ASSERT_EQ(e * embed_prop4(P(r, s)), embed_prop4(n.mul(P(p, q), P(r, s))));
		}
}

TEST(LoopsEmbed, Prop4DimensionThreeWitness)
{
	const NSeries x = ser("1 + x1", 3);
	const NSeries diff = embed_prop4(P(3, 1)) - embed_prop4(P(3, 0));
	EXPECT_EQ(diff, (x * x) * x - x * (x * x));
	EXPECT_EQ(IntPairLoop{}.mul(P(3, 0), P(0, 1)), P(3, 1));
	const NSeries one = NSeries::constant(1, 3, RewriteMode::NonCommutative);
	EXPECT_EQ(embed_prop4(P(0, 1)) - one, left_divide(embed_prop4(P(3, 0)), embed_prop4(P(3, 1))) - one);
	EXPECT_EQ(low_degree(diff + one), 3);
}

TEST(LoopsExpression, Evaluate)
{
	EXPECT_EQ(eval_pair_expression("[L(2,0),L(1,0)]@(3,0)", PairLoopKind::Prop3), P(3, 3));
	EXPECT_EQ(eval_pair_expression("(1,0)*(1,0)", PairLoopKind::Prop3), P(2, 0));
	EXPECT_EQ(eval_pair_expression("(2,0)*(1,0)", PairLoopKind::Prop4), P(3, 1));
	EXPECT_EQ(eval_pair_expression("(2,0)\\((2,0)*(5,-3))", PairLoopKind::Prop4), P(5, -3));
	EXPECT_EQ(eval_pair_expression("((2,1)/(3,4))*(3,4)", PairLoopKind::Prop3), P(2, 1));
	EXPECT_EQ(eval_pair_expression("[L(1,0),[L(2,0),L(1,0)]]@(4,2)", PairLoopKind::Prop3), P(4, 1));
	EXPECT_EQ(eval_pair_expression(" L(1,0) @ (0, -7) ", PairLoopKind::Prop3), P(1, -7));
}

TEST(LoopsExpression, Errors)
{
	EXPECT_THROW(eval_pair_expression("(1,0)*(1,0)*(1,0)", PairLoopKind::Prop3), ParseError);
	EXPECT_THROW(eval_pair_expression("(1,0", PairLoopKind::Prop3), ParseError);
	EXPECT_THROW(eval_pair_expression("L@(1,0)", PairLoopKind::Prop3), ParseError);
	EXPECT_THROW(eval_pair_expression("", PairLoopKind::Prop3), ParseError);
	EXPECT_THROW(eval_pair_expression("(1,0) junk", PairLoopKind::Prop3), ParseError);
}
