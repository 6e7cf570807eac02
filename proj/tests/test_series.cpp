#include "support.hpp"

#include "loopmagnus/error.hpp"
#include "loopmagnus/hopf.hpp"
#include "loopmagnus/series.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace loopmagnus;
using loopmagnus::testing::all_monomials;
using loopmagnus::testing::mono;
using loopmagnus::testing::random_unit;
using loopmagnus::testing::ser;
using loopmagnus::testing::X;

namespace {

constexpr auto NC = RewriteMode::NonCommutative;
constexpr auto C = RewriteMode::Commutative;

// Plain associative product of word->coefficient maps, truncated at n.
using Flat = std::map<std::string, Rational>;

Flat flat(const ASeries &a)
{
	Flat f;
	if (a.constant_term() != 0)
		f[""] = a.constant_term();
	for (const auto &[w, c] : a.terms())
		f[w] += c;
	return f;
}

Flat flat_mul(const Flat &a, const Flat &b, std::size_t n)
{
	Flat r;
	for (const auto &[u, x] : a)
		for (const auto &[v, y] : b)
			if (u.size() + v.size() <= n)
				r[u + v] += x * y;
	std::erase_if(r, [](const auto &kv) { return kv.second == 0; });
	return r;
}

Integer catalan(int n)
{
	return binomial(2 * n, static_cast<unsigned>(n)) / (n + 1);
}

} // namespace

TEST(SeriesRing, AddAndScale)
{
	EXPECT_TRUE((ser("1", 3) + ser("-1", 3)).is_zero());
	EXPECT_EQ(ser("1 + x1", 3) + ser("1 + x2", 3), ser("2 + x1 + x2", 3));
	const NSeries h = scale(Rational(1, 2), ser("(x1*x2) + -1*(x2*x1)", 3));
	EXPECT_EQ(h.coefficient(mono(X(1), X(2))), Rational(1, 2));
	EXPECT_EQ(h.coefficient(mono(X(2), X(1))), Rational(-1, 2));
	EXPECT_EQ(h.term_count(), 2u);
}

TEST(SeriesRing, ZeroCoefficientsAreDropped)
{
	NSeries s = ser("x1 + -1*x1 + (x1*x2)", 3);
	EXPECT_EQ(s.term_count(), 1u);
	s.add_term(mono(X(1), X(2)), -1);
	EXPECT_TRUE(s.is_zero());
}

TEST(SeriesRing, TruncationDropsHighDegrees)
{
	const NSeries s = ser("1 + (x1*(x1*x1))", 2);
	EXPECT_EQ(s, ser("1", 2));
}

TEST(SeriesRing, MismatchRejected)
{
	EXPECT_THROW(ser("x1", 3) + ser("x1", 4), DomainError);
	EXPECT_THROW(ser("x1", 3) * ser("x1", 3, C), DomainError);
}

TEST(SeriesMul, Examples)
{
	EXPECT_EQ(ser("1 + x1", 3) * ser("1 + x2", 3), ser("1 + x1 + x2 + (x1*x2)", 3));
	EXPECT_EQ(ser("1 + x1", 3, C) * ser("1 + x1", 3, C), ser("1 + 2*x1 + (x1*x1)", 3, C));
}

TEST(SeriesMul, AssociatorOfThreeGenerators)
{
	const NSeries a = ser("1 + x1", 3), b = ser("1 + x2", 3), c = ser("1 + x3", 3);
	EXPECT_EQ((a * b) * c - a * (b * c), ser("((x1*x2)*x3) + -1*(x1*(x2*x3))", 3));
}

TEST(SeriesMul, CommutativeProductsCommute)
{
	std::mt19937_64 rng(loopmagnus::testing::kSeed);
	for (int i = 0; i < 20; ++i) {
		const NSeries a = random_unit(rng, 4, 2, C), b = random_unit(rng, 4, 2, C);
		EXPECT_EQ(a * b, b * a);
	}
}

TEST(SeriesDivide, LeftExamples)
{
	const NSeries s = ser("1 + x1 + 3*(x1*x2)", 4);
	EXPECT_EQ(left_divide(s, s), ser("1", 4));
	EXPECT_EQ(left_divide(ser("1 + x1", 4), ser("1 + x1", 4) * ser("1 + x2", 4)), ser("1 + x2", 4));
	// 1 + (X2-X1) - X1(X2-X1) + X1(X1(X2-X1)) at N=3.
	const NSeries expected = ser("1 + x2 + -1*x1 + -1*(x1*x2) + (x1*x1) + (x1*(x1*x2)) + -1*(x1*(x1*x1))", 3);
	EXPECT_EQ(left_divide(ser("1 + x1", 3), ser("1 + x2", 3)), expected);
}

TEST(SeriesDivide, RightExamples)
{
	const NSeries s = ser("1 + x1 + 3*(x1*x2)", 4);
	EXPECT_EQ(right_divide(s, s), ser("1", 4));
	EXPECT_EQ(right_divide(ser("1 + x1", 4) * ser("1 + x2", 4), ser("1 + x2", 4)), ser("1 + x1", 4));
	const NSeries q = right_divide(ser("1 + x1", 2) * ser("1 + x2", 2), ser("1 + x2", 2) * ser("1 + x1", 2));
	EXPECT_EQ(q, ser("1 + (x1*x2) + -1*(x2*x1)", 2));
}

TEST(SeriesDivide, MatchesAlternatingFormula)
{
	// (1+B)\(1+A) = 1 + D - B D + B(B D) - ..., D = A - B.
	std::mt19937_64 rng(loopmagnus::testing::kSeed + 1);
	for (auto mode : {NC, C})
		for (int i = 0; i < 15; ++i) {
			const int n = 5;
			const NSeries a = random_unit(rng, n, 2, mode), b = random_unit(rng, n, 2, mode);
			const NSeries one = NSeries::constant(1, n, mode);
			const NSeries B = b - one;
			NSeries step = a - b;
			NSeries sum = one;
			for (int k = 0; k <= n; ++k) {
				sum += step;
				step = -(B * step);
			}
			EXPECT_EQ(left_divide(b, a), sum);
		}
}

TEST(SeriesDivide, NonUnitRejected)
{
	EXPECT_THROW(left_divide(ser("x1", 3), ser("1", 3)), DomainError);
	EXPECT_THROW(right_divide(ser("1", 3), ser("x1 + x2", 3)), DomainError);
}

TEST(SeriesDivide, GeneralUnitConstant)
{
	const NSeries b = ser("2 + x1", 4), a = ser("3 + (x2*x1)", 4);
	EXPECT_EQ(b * left_divide(b, a), a);
	EXPECT_EQ(right_divide(a, b) * b, a);
}

TEST(SeriesDivide, LoopAxiomsOnRandomUnits)
{
	std::mt19937_64 rng(loopmagnus::testing::kSeed + 2);
	for (auto mode : {NC, C})
		for (int i = 0; i < 25; ++i) {
			const NSeries a = random_unit(rng, 5, 2, mode), b = random_unit(rng, 5, 2, mode);
			ASSERT_EQ(b * left_divide(b, a), a);
			ASSERT_EQ(right_divide(a, b) * b, a);
			ASSERT_EQ(left_divide(b, b * a), a);
			ASSERT_EQ(right_divide(a * b, b), a);
		}
}

TEST(SeriesLowDegree, Examples)
{
	EXPECT_EQ(low_degree(ser("1", 4)), std::nullopt);
	EXPECT_EQ(low_degree(ser("1 + (x1*x2) + -1*(x2*x1)", 4)), 2);
	const NSeries a = ser("1 + x1", 3), b = ser("1 + x2", 3), c = ser("1 + x3", 3);
	EXPECT_EQ(low_degree(right_divide((a * b) * c, a * (b * c))), 3);
	EXPECT_EQ(low_degree(ser("5 + x1", 4)), 1);
}

TEST(SeriesDropParens, Examples)
{
	const ASeries z = drop_parens(ser("((x1*x2)*x3) + -1*(x1*(x2*x3))", 4));
	EXPECT_TRUE(z.terms().empty());
	const ASeries r = drop_parens(ser("(x1*(x2*x3))", 4));
	EXPECT_EQ(r.coefficient(std::string{1, 2, 3}), 1);
	EXPECT_EQ(r.terms().size(), 1u);
	EXPECT_THROW(drop_parens(ser("x1", 3, C)), DomainError);
}

TEST(SeriesDropParens, MultiplicativeAgainstPlainProduct)
{
	std::mt19937_64 rng(loopmagnus::testing::kSeed + 3);
	for (int i = 0; i < 30; ++i) {
		const NSeries a = random_unit(rng, 4, 2, NC), b = random_unit(rng, 4, 2, NC);
		EXPECT_EQ(flat(drop_parens(a * b)), flat_mul(flat(drop_parens(a)), flat(drop_parens(b)), 4));
	}
}

TEST(SeriesDropParens, InjectiveOnRightNormedMonomials)
{
	for (int d = 1; d <= 6; ++d) {
		std::set<Monomial> rn;
		for (const auto &m : all_monomials(d, 2, false))
			if (m.is_right_normed())
				rn.insert(m);
		ASSERT_EQ(rn.size(), std::size_t(1) << d);
		std::set<std::string> images;
		for (const auto &m : rn) {
			const ASeries f = drop_parens(NSeries::monomial(m, 1, 6, NC));
			ASSERT_EQ(f.terms().size(), 1u);
			images.insert(f.terms().begin()->first);
		}
		EXPECT_EQ(images.size(), rn.size());
	}
}

TEST(SeriesDropParens, AssociativeMagnusOfInverseLetter)
{
	const ASeries inv = associative_magnus({{1, -1}}, 3);
	EXPECT_EQ(flat(inv), (Flat{{"", 1}, {"\x01", -1}, {"\x01\x01", 1}, {"\x01\x01\x01", -1}}));
	const ASeries one = mul(associative_magnus({{1, 1}}, 3), inv);
	EXPECT_EQ(flat(one), (Flat{{"", 1}}));
}

TEST(SeriesLeftDivide, RightNormedStaysRightNormed)
{
	// A series with right-normed terms only, divided on the left by 1+X_i.
	for (int n = 2; n <= 6; ++n)
		for (int i = 1; i <= 2; ++i) {
			NSeries s = NSeries::constant(1, n, NC);
			for (int d = 1; d <= n; ++d)
				for (const auto &m : all_monomials(d, 2, false))
					if (m.is_right_normed())
						s.add_term(m, Rational(static_cast<long>(m.code().size() % 5) - 2));
			const NSeries q = left_divide(NSeries::constant(1, n, NC) + NSeries::generator(i, n, NC), s);
			for (int d = 1; d <= n; ++d)
				for (const auto &[m, c] : q.homogeneous(d))
					ASSERT_TRUE(m.is_right_normed()) << render(m);
		}
}

TEST(SeriesMonomials, CatalanCensus)
{
	for (int k = 1; k <= 2; ++k)
		for (int d = 1; d <= 6; ++d) {
			const auto all = all_monomials(d, k, false);
			const std::set<Monomial> distinct(all.begin(), all.end());
			Integer kd = 1;
			for (int j = 0; j < d; ++j)
				kd *= k;
			EXPECT_EQ(Integer(static_cast<unsigned long>(distinct.size())), catalan(d - 1) * kd)
			    << "d=" << d << " k=" << k;
		}
}

TEST(SeriesMonomials, CommutativeCanonicalization)
{
	std::vector<Monomial> ms;
	for (int d = 1; d <= 3; ++d)
		for (const auto &m : all_monomials(d, 2, true))
			ms.push_back(m);
	for (const auto &a : ms)
		for (const auto &b : ms) {
			if (a.degree() + b.degree() > 4)
				continue;
			const Monomial ab = Monomial::product(a, b, true), ba = Monomial::product(b, a, true);
			ASSERT_EQ(ab, ba);
			ASSERT_TRUE(ab.is_canonical_commutative());
			ASSERT_EQ(Monomial::product(a, b, false).canonical_commutative(), ab);
		}
}

TEST(SeriesText, RoundTrip)
{
	std::mt19937_64 rng(loopmagnus::testing::kSeed + 4);
	for (auto mode : {NC, C})
		for (int i = 0; i < 10; ++i) {
			const NSeries a = scale(Rational(1, 3), random_unit(rng, 4, 2, mode));
			EXPECT_EQ(parse_series(render(a), 4, mode), a) << render(a);
		}
	EXPECT_EQ(render(ser("1 + (x1*x2) + -1*(x2*x1)", 2)), "1 + 1*(x1*x2) + -1*(x2*x1)");
	EXPECT_EQ(render(NSeries(3, NC)), "0");
}

TEST(SeriesText, Errors)
{
	EXPECT_THROW(ser("1 + ", 3), ParseError);
	EXPECT_THROW(ser("1 + (x1*x2", 3), ParseError);
	EXPECT_THROW(ser("1 + 2/0*x1", 3), ParseError);
	EXPECT_THROW(ser("1 + x0", 3), ParseError);
}

TEST(SeriesEval, Univariate)
{
	const NSeries one = NSeries::constant(1, 4, NC);
	const NSeries z = ser("x1 + x2", 4);
	EXPECT_EQ(eval_univariate(ser("1 + x1", 4), z, one), one + z);
	EXPECT_EQ(eval_univariate(ser("(x1*x1)", 4), z, one), ser("(x1*x1) + (x1*x2) + (x2*x1) + (x2*x2)", 4));
	EXPECT_THROW(eval_univariate(ser("x1", 4), ser("1 + x1", 4), one), DomainError);
}

TEST(SeriesEval, LogOfExpIsIdentity)
{
	const NSeries e = exp_base(6);
	const NSeries one = NSeries::constant(1, 6, NC);
	EXPECT_EQ(eval_univariate(log_base(e), e - one, one), NSeries::generator(1, 6, NC));
}

TEST(SeriesLimits, TermCapRaisesResourceLimit)
{
	const std::size_t old = max_series_terms();
	set_max_series_terms(20);
	const NSeries a = ser("1 + x1 + x2", 6), one = ser("1", 6);
	EXPECT_THROW(left_divide(a, one), ResourceLimit);
	set_max_series_terms(old);
	EXPECT_NO_THROW(left_divide(a, one));
}
