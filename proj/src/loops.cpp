#include "loopmagnus/loops.hpp"

#include "loopmagnus/error.hpp"
#include "loopmagnus/magnus.hpp"

#include <cctype>

namespace loopmagnus {

std::string render(const IntPair &x)
{
	return "(" + x.p.get_str() + "," + x.q.get_str() + ")";
}

namespace {

Integer c2(const Integer &n)
{
	return binomial(n, 2);
}

} // namespace

IntPair IntPairCommLoop::mul(const IntPair &a, const IntPair &b) const
{
	return {a.p + b.p, a.q + b.q + c2(a.p) * c2(b.p)};
}

IntPair IntPairCommLoop::ldiv(const IntPair &a, const IntPair &b) const
{
	const Integer x = b.p - a.p;
	return {x, b.q - a.q - c2(a.p) * c2(x)};
}

IntPair IntPairCommLoop::rdiv(const IntPair &a, const IntPair &b) const
{
	const Integer x = a.p - b.p;
	return {x, a.q - b.q - c2(x) * c2(b.p)};
}

IntPair IntPairLoop::mul(const IntPair &a, const IntPair &b) const
{
	return {a.p + b.p, a.q + b.q + c2(a.p) * b.p};
}

IntPair IntPairLoop::ldiv(const IntPair &a, const IntPair &b) const
{
	const Integer x = b.p - a.p;
	return {x, b.q - a.q - c2(a.p) * x};
}

IntPair IntPairLoop::rdiv(const IntPair &a, const IntPair &b) const
{
	const Integer x = a.p - b.p;
	return {x, a.q - b.q - c2(x) * b.p};
}

FreeAbelianGroup::FreeAbelianGroup(int rank) : rank_(rank)
{
	if (rank < 0)
		throw DomainError("free abelian group rank must be >= 0");
}

FreeAbelianGroup::Element FreeAbelianGroup::basis(int i) const
{
	if (i < 1 || i > rank_)
		throw DomainError("basis index " + std::to_string(i) + " outside [1, " + std::to_string(rank_) + "]");
	Element v = identity();
	v[static_cast<std::size_t>(i - 1)] = 1;
	return v;
}

void FreeAbelianGroup::check(const Element &a) const
{
	if (a.size() != static_cast<std::size_t>(rank_))
		throw DomainError("vector length differs from the group rank");
}

FreeAbelianGroup::Element FreeAbelianGroup::mul(const Element &a, const Element &b) const
{
	check(a);
	check(b);
	Element r = a;
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] += b[i];
	return r;
}

FreeAbelianGroup::Element FreeAbelianGroup::ldiv(const Element &a, const Element &b) const
{
	check(a);
	check(b);
	Element r = b;
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] -= a[i];
	return r;
}

FreeAbelianGroup::Element FreeAbelianGroup::rdiv(const Element &a, const Element &b) const
{
	check(a);
	check(b);
	Element r = a;
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] -= b[i];
	return r;
}

std::string render(const FreeAbelianGroup::Element &a)
{
	std::string out;
	for (std::size_t i = 0; i < a.size(); ++i) {
		if (a[i] == 0)
			continue;
		const std::string x = "x" + std::to_string(i + 1);
		if (a[i] < 0)
			out += "-";
		else if (!out.empty())
			out += "+";
		const Integer m = abs(a[i]);
		out += m == 1 ? x : m.get_str() + "*" + x;
	}
	return out.empty() ? "e" : out;
}

LoopTerm lmlt_term_apply(const GeneratorWord &word, const LoopTerm &w)
{
	LoopTerm r = w;
	for (auto it = word.rbegin(); it != word.rend(); ++it) {
		const LoopTerm x = LoopTerm::generator(it->element);
		r = it->sign > 0 ? LoopTerm::mul(x, r) : LoopTerm::ldiv(x, r);
	}
	return r;
}

GeneratorWord nested_commutator(int n)
{
	if (n < 1)
		throw DomainError("commutator weight must be >= 1");
	GeneratorWord g = translation(n);
	for (int i = n - 1; i >= 1; --i)
		g = commutator(translation(i), g);
	return g;
}

std::vector<std::pair<int, int>> group_word(const GeneratorWord &f, int a)
{
	std::vector<std::pair<int, int>> letters;
	for (const auto &t : f)
		letters.emplace_back(t.element, t.sign);
	letters.emplace_back(a, 1);
	return letters;
}

LemmaFirstReport lemma_first_check(int n, int truncation)
{
	if (n < 1 || n > truncation)
		throw DomainError("lemma check needs 1 <= n <= N");
	LemmaFirstReport rep;
	rep.n = n;
	rep.truncation = truncation;
	const GeneratorWord f = nested_commutator(n);
	const LoopTerm a = LoopTerm::generator(n + 1);
	rep.word = lmlt_term_apply(f, a);

	MagnusEvaluator eval(MagnusConfig{n + 1, truncation, RewriteMode::NonCommutative, std::nullopt});
	const NSeries image = eval(rep.word);
	const NSeries diff = image - eval(a);
	rep.low_degree = low_degree(diff);
	rep.degree_ok = !rep.low_degree || *rep.low_degree >= n;
	rep.leading_term = rep.low_degree ? render(diff.homogeneous_part(*rep.low_degree)) : "0";

	rep.right_normed = true;
	for (int d = 1; d <= truncation; ++d)
		for (const auto &kv : image.homogeneous(d))
			if (!kv.first.is_right_normed())
				rep.right_normed = false;
	rep.associative_bridge = drop_parens(image) == associative_magnus(group_word(f, n + 1), truncation);
	return rep;
}

NSeries embed_prop3(const IntPair &x)
{
	constexpr int N = 4;
	constexpr auto mode = RewriteMode::Commutative;
	const Monomial X = Monomial::generator(1);
	const Monomial X2 = Monomial::product(X, X, true);
	const Monomial X3 = Monomial::product(X2, X, true);
	NSeries s = NSeries::constant(1, N, mode);
	s.add_term(X, x.p);
	s.add_term(X2, binomial(x.p, 2));
	s.add_term(X3, binomial(x.p, 3));
	s.add_term(Monomial::product(X3, X, true), binomial(x.p, 4) - x.q);
	s.add_term(Monomial::product(X2, X2, true), x.q);
	return s;
}

NSeries embed_prop4(const IntPair &x)
{
	constexpr int N = 3;
	constexpr auto mode = RewriteMode::NonCommutative;
	const Monomial X = Monomial::generator(1);
	const Monomial X2 = Monomial::product(X, X, false);
	NSeries s = NSeries::constant(1, N, mode);
	s.add_term(X, x.p);
	s.add_term(X2, binomial(x.p, 2));
	s.add_term(Monomial::product(X, X2, false), binomial(x.p, 3) - x.q);
	s.add_term(Monomial::product(X2, X, false), x.q);
	return s;
}

namespace {

class PairExpressionParser {
public:
	PairExpressionParser(std::string_view text, PairLoopKind kind) : text_(text), kind_(kind) {}

	IntPair parse()
	{
		IntPair v = expr();
		skip_ws();
		if (pos_ != text_.size())
			throw ParseError("unexpected trailing input", pos_);
		return v;
	}

private:
	char peek()
	{
		skip_ws();
		return pos_ < text_.size() ? text_[pos_] : '\0';
	}

	void skip_ws()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	void expect(char c)
	{
		if (peek() != c)
			throw ParseError(std::string("expected '") + c + "'", pos_);
		++pos_;
	}

	IntPair mul(const IntPair &a, const IntPair &b) const
	{
		return kind_ == PairLoopKind::Prop3 ? IntPairCommLoop{}.mul(a, b) : IntPairLoop{}.mul(a, b);
	}
	IntPair ldiv(const IntPair &a, const IntPair &b) const
	{
		return kind_ == PairLoopKind::Prop3 ? IntPairCommLoop{}.ldiv(a, b) : IntPairLoop{}.ldiv(a, b);
	}
	IntPair rdiv(const IntPair &a, const IntPair &b) const
	{
		return kind_ == PairLoopKind::Prop3 ? IntPairCommLoop{}.rdiv(a, b) : IntPairLoop{}.rdiv(a, b);
	}

	IntPair expr()
	{
		const IntPair lhs = operand();
		const char op = peek();
		if (op != '*' && op != '\\' && op != '/')
			return lhs;
		++pos_;
		const IntPair rhs = operand();
		const char next = peek();
		if (next == '*' || next == '\\' || next == '/')
			throw ParseError("operators are non-associative; parenthesize nested operations", pos_);
		return op == '*' ? mul(lhs, rhs) : op == '\\' ? ldiv(lhs, rhs) : rdiv(lhs, rhs);
	}

	IntPair operand()
	{
		const char c = peek();
		if (c == 'L' || c == '[') {
			const LMltWord<IntPair> f = lspec();
			expect('@');
			const IntPair x = operand();
			return kind_ == PairLoopKind::Prop3 ? lmlt_apply(IntPairCommLoop{}, f, x)
			                                    : lmlt_apply(IntPairLoop{}, f, x);
		}
		if (c != '(')
			throw ParseError(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'",
			                 pos_);
		if (auto pair = try_pair())
			return *pair;
		++pos_;
		const IntPair v = expr();
		expect(')');
		return v;
	}

	LMltWord<IntPair> lspec()
	{
		if (peek() == 'L') {
			++pos_;
			if (peek() != '(')
				throw ParseError("expected '(' after 'L'", pos_);
			auto pair = try_pair();
			if (!pair)
				throw ParseError("expected an integer pair after 'L'", pos_);
			return translation(*pair);
		}
		expect('[');
		const LMltWord<IntPair> f = lspec();
		expect(',');
		const LMltWord<IntPair> g = lspec();
		expect(']');
		return commutator(f, g);
	}

	/// "(p,q)" at the current position; restores the position otherwise.
	std::optional<IntPair> try_pair()
	{
		const std::size_t start = pos_;
		expect('(');
		auto p = integer();
		if (p && peek() == ',') {
			++pos_;
			auto q = integer();
			if (q && peek() == ')') {
				++pos_;
				return IntPair{*p, *q};
			}
		}
		pos_ = start;
		return std::nullopt;
	}

	std::optional<Integer> integer()
	{
		skip_ws();
		const std::size_t start = pos_;
		if (pos_ < text_.size() && text_[pos_] == '-')
			++pos_;
		const std::size_t digits = pos_;
		while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
			++pos_;
		if (pos_ == digits) {
			pos_ = start;
			return std::nullopt;
		}
		return Integer{std::string(text_.substr(start, pos_ - start))};
	}

	std::string_view text_;
	PairLoopKind kind_;
	std::size_t pos_ = 0;
};

} // namespace

IntPair eval_pair_expression(std::string_view text, PairLoopKind kind)
{
	return PairExpressionParser(text, kind).parse();
}

} // namespace loopmagnus
