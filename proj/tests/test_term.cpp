#include "support.hpp"

#include "loopmagnus/error.hpp"
#include "loopmagnus/term.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace loopmagnus;
using loopmagnus::testing::all_trees;
using loopmagnus::testing::term;

namespace {

constexpr auto NC = RewriteMode::NonCommutative;
constexpr auto C = RewriteMode::Commutative;

LoopTerm g(int i)
{
	return LoopTerm::generator(i);
}

// All words with 1..max leaves over k generators.
std::vector<LoopTerm> trees_upto(int max, int k)
{
	std::vector<LoopTerm> out;
	for (int l = 1; l <= max; ++l) {
		auto t = all_trees(l, k);
		out.insert(out.end(), t.begin(), t.end());
	}
	return out;
}

} // namespace

TEST(TermParse, Identity)
{
	EXPECT_TRUE(parse_term("e", 2).is_identity());
}

TEST(TermParse, LeftDivisionOfProduct)
{
	const LoopTerm t = parse_term("x1\\(x1*x2)", 2);
	EXPECT_EQ(t, LoopTerm::ldiv(g(1), LoopTerm::mul(g(1), g(2))));
}

TEST(TermParse, RedundantOuterParentheses)
{
	EXPECT_EQ(parse_term("((x1*x2)/x2)", 2), LoopTerm::rdiv(LoopTerm::mul(g(1), g(2)), g(2)));
}

TEST(TermParse, WhitespaceIgnored)
{
	EXPECT_EQ(parse_term("  ( x1 * x2 ) / x2 ", 2), parse_term("(x1*x2)/x2", 2));
}

TEST(TermParse, Errors)
{
	EXPECT_THROW(parse_term("x1*x2*x3", 3), ParseError);
	EXPECT_THROW(parse_term("(x1*x2", 2), ParseError);
	EXPECT_THROW(parse_term("", 2), ParseError);
	EXPECT_THROW(parse_term("x3", 2), ParseError);
	EXPECT_THROW(parse_term("x0", 2), ParseError);
	EXPECT_THROW(parse_term("x1 + x2", 2), ParseError);
	EXPECT_THROW(parse_term("x1 x2", 2), ParseError);
}

TEST(TermParse, ErrorPosition)
{
	try {
		parse_term("(x1*x2)*q", 2);
		FAIL() << "no exception";
	} catch (const ParseError &e) {
		EXPECT_EQ(e.position(), 8u);
	}
}

TEST(TermParse, RenderRoundTrip)
{
	for (const auto &w : trees_upto(3, 2))
		EXPECT_EQ(parse_term(render(w), 2), w) << render(w);
	EXPECT_EQ(render(LoopTerm::identity()), "e");
	EXPECT_EQ(render(term("(x1*x2)*x3")), "((x1*x2)*x3)");
}

TEST(TermOrder, LeafCountThenConstructorThenChildren)
{
	EXPECT_LT(LoopTerm::identity(), g(1));
	EXPECT_LT(g(1), g(2));
	EXPECT_LT(g(9), LoopTerm::mul(g(1), g(1)));
	EXPECT_LT(LoopTerm::mul(g(2), g(2)), LoopTerm::ldiv(g(1), g(1)));
	EXPECT_LT(LoopTerm::ldiv(g(2), g(2)), LoopTerm::rdiv(g(1), g(1)));
	EXPECT_LT(LoopTerm::mul(g(1), g(2)), LoopTerm::mul(g(2), g(1)));
	EXPECT_LT(LoopTerm::mul(g(1), g(1)), LoopTerm::mul(g(1), g(2)));
}

TEST(TermOrder, TotalOnSmallWords)
{
	const auto ws = trees_upto(3, 2);
	for (const auto &a : ws)
		for (const auto &b : ws) {
			const bool lt = a < b, gt = b < a, eq = a == b;
			EXPECT_EQ(int(lt) + int(gt) + int(eq), 1);
		}
}

TEST(TermComponents, Examples)
{
	EXPECT_EQ(components(LoopTerm::identity()), std::vector<LoopTerm>{LoopTerm::identity()});
	EXPECT_EQ(components(g(1)), (std::vector<LoopTerm>{LoopTerm::identity(), g(1)}));
	const LoopTerm w = LoopTerm::mul(g(1), g(2));
	EXPECT_EQ(components(w), (std::vector<LoopTerm>{LoopTerm::identity(), g(1), g(2), w}));
}

TEST(TermComponents, RepeatedSubwordsCountedOnce)
{
	const LoopTerm w = term("(x1*x2)*(x1*x2)");
	EXPECT_EQ(components(w).size(), 5u);
}

TEST(TermLeaves, Counts)
{
	EXPECT_EQ(leaf_count(LoopTerm::identity()), 0);
	EXPECT_EQ(leaf_count(g(3)), 1);
	EXPECT_EQ(leaf_count(term("x1*(x2\\x1)")), 3);
	EXPECT_EQ(leaf_count(term("e*x1")), 1);
}

TEST(TermReduced, ForbiddenPatterns)
{
	EXPECT_FALSE(is_reduced(term("x1*(x1\\x2)"), NC));
	EXPECT_TRUE(is_reduced(term("x1/x2"), NC));
	EXPECT_FALSE(is_reduced(term("x1/x2"), C));
	EXPECT_FALSE(is_reduced(term("e*x1"), NC));
	EXPECT_FALSE(is_reduced(term("x1/x1"), NC));
	EXPECT_FALSE(is_reduced(term("(x1/x2)*x2"), NC));
	EXPECT_FALSE(is_reduced(term("x1*x2"), C));
	EXPECT_TRUE(is_reduced(term("x2*x1"), C));
	EXPECT_TRUE(is_reduced(term("x1*x2"), NC));
}

TEST(TermReduce, Examples)
{
	EXPECT_EQ(reduce(term("x1\\(x1*x2)"), NC), g(2));
	EXPECT_EQ(reduce(term("x1/x1"), NC), LoopTerm::identity());
	EXPECT_EQ(reduce(term("x1/(x2\\x1)"), NC), g(2));
	EXPECT_EQ(reduce(term("(x1*x2)/x2"), NC), g(1));
	EXPECT_EQ(reduce(term("(x1/x2)*x2"), NC), g(1));
	EXPECT_EQ(reduce(term("x1*(x1\\x2)"), NC), g(2));
	EXPECT_EQ(reduce(term("(e*x1)/e"), NC), g(1));
}

TEST(TermReduce, CommutativeCollapses)
{
	EXPECT_EQ(reduce(term("x1*x2"), C), reduce(term("x2*x1"), C));
	EXPECT_EQ(reduce(term("x1/x2"), C), reduce(term("x2\\x1"), C));
	EXPECT_EQ(reduce(term("(x2*x1)/x2"), C), g(1));
	EXPECT_EQ(reduce(term("x1\\(x2*x1)"), C), g(2));
}

TEST(TermReduce, EqualInFreeLoop)
{
	EXPECT_TRUE(equal_in_free_loop(term("(x1*x2)/x2"), g(1), NC));
	EXPECT_FALSE(equal_in_free_loop(term("x1*x2"), term("x2*x1"), NC));
	EXPECT_TRUE(equal_in_free_loop(term("x1*x2"), term("x2*x1"), C));
}

TEST(TermReduce, IdempotentAndReduced)
{
	for (auto mode : {NC, C})
		for (const auto &w : trees_upto(4, 2)) {
			const LoopTerm r = reduce(w, mode);
			ASSERT_TRUE(is_reduced(r, mode)) << render(w);
			ASSERT_EQ(reduce(r, mode), r) << render(w);
		}
}

TEST(TermReduce, IdempotentOnRandomLargerWords)
{
	std::mt19937_64 rng(loopmagnus::testing::kSeed);
	for (auto mode : {NC, C})
		for (int i = 0; i < 400; ++i) {
			const LoopTerm w = loopmagnus::testing::random_word(rng, 5 + i % 3, 3);
			const LoopTerm r = reduce(w, mode);
			ASSERT_TRUE(is_reduced(r, mode)) << render(w);
			ASSERT_EQ(reduce(r, mode), r) << render(w);
		}
}

TEST(TermReduce, LeftmostAndRightmostStrategiesAgree)
{
	for (const auto &w : trees_upto(4, 2)) {
		LoopTerm a = w, b = w;
		while (auto n = rewrite_step(a, NC, RedexChoice::LeftmostInnermost))
			a = *n;
		while (auto n = rewrite_step(b, NC, RedexChoice::RightmostInnermost))
			b = *n;
		ASSERT_EQ(a, b) << render(w);
		ASSERT_EQ(a, reduce(w, NC)) << render(w);
	}
}

TEST(TermReduce, StepsDecreaseSizeExceptCommutation)
{
	for (auto mode : {NC, C})
		for (const auto &w : trees_upto(4, 2)) {
			LoopTerm cur = w;
			int guard = 0;
			while (auto next = rewrite_step(cur, mode, RedexChoice::LeftmostInnermost)) {
				const auto before = std::make_pair(cur.leaf_count(), cur.node_count());
				const auto after = std::make_pair(next->leaf_count(), next->node_count());
				if (mode == NC)
					ASSERT_LT(after, before) << render(cur);
				else
					ASSERT_LE(after, before) << render(cur);
				cur = *next;
				ASSERT_LT(++guard, 100);
			}
		}
}

TEST(TermReduce, ComponentsOfReducedWordsAreReduced)
{
	for (auto mode : {NC, C})
		for (const auto &w : enumerate_reduced(2, 4, mode))
			for (const auto &c : components(w))
				ASSERT_TRUE(is_reduced(c, mode)) << render(w) << " / " << render(c);
}

TEST(TermEnumerate, Examples)
{
	EXPECT_EQ(enumerate_reduced(1, 1, NC), (std::vector<LoopTerm>{LoopTerm::identity(), g(1)}));
	EXPECT_EQ(enumerate_reduced(2, 1, NC), (std::vector<LoopTerm>{LoopTerm::identity(), g(1), g(2)}));
	EXPECT_EQ(enumerate_reduced(1, 2, NC),
	          (std::vector<LoopTerm>{LoopTerm::identity(), g(1), LoopTerm::mul(g(1), g(1))}));
	EXPECT_EQ(enumerate_reduced(2, 0, NC), std::vector<LoopTerm>{LoopTerm::identity()});
}

TEST(TermEnumerate, MatchesFilterOverAllTrees)
{
	for (auto mode : {NC, C}) {
		std::set<LoopTerm> expected{LoopTerm::identity()};
		for (const auto &w : trees_upto(4, 2))
			if (is_reduced(w, mode))
				expected.insert(w);
		const auto got = enumerate_reduced(2, 4, mode);
		EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
		EXPECT_EQ(std::set<LoopTerm>(got.begin(), got.end()).size(), got.size());
		EXPECT_EQ(std::set<LoopTerm>(got.begin(), got.end()), expected);
	}
}

TEST(TermEnumerate, ResourceCap)
{
	EXPECT_THROW(enumerate_reduced(2, 4, NC, 10), ResourceLimit);
	EXPECT_THROW(enumerate_reduced(2, -1, NC), DomainError);
}

TEST(TermConstruct, Errors)
{
	EXPECT_THROW(LoopTerm::generator(0), DomainError);
	EXPECT_THROW(g(1).left(), DomainError);
	EXPECT_THROW(LoopTerm::binary(TermKind::Generator, g(1), g(2)), DomainError);
}
