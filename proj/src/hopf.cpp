#include "loopmagnus/hopf.hpp"

namespace loopmagnus {

Rational TensorSeries::coefficient(const Monomial &left, const Monomial &right) const
{
	auto it = terms_.find({left, right});
	return it == terms_.end() ? Rational(0) : it->second;
}

void TensorSeries::add_term(const Monomial &left, const Monomial &right, const Rational &c)
{
	if (c == 0 || left.degree() + right.degree() > n_)
		return;
	auto [it, inserted] = terms_.try_emplace({left, right}, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

namespace {

template <class F>
void for_each_term(const NSeries &a, F &&f)
{
	if (a.constant_term() != 0)
		f(Monomial(), a.constant_term());
	for (int d = 1; d <= a.truncation(); ++d)
		for (const auto &[m, c] : a.homogeneous(d))
			f(m, c);
}

} // namespace

TensorSeries tensor(const NSeries &a, const NSeries &b)
{
	if (a.truncation() != b.truncation() || a.mode() != b.mode())
		throw DomainError("tensor factors must share truncation and mode");
	TensorSeries r(a.truncation(), a.mode());
	for_each_term(a, [&](const Monomial &ma, const Rational &ca) {
		for_each_term(b, [&](const Monomial &mb, const Rational &cb) {
			if (ma.degree() + mb.degree() <= a.truncation())
				r.add_term(ma, mb, ca * cb);
		});
	});
	return r;
}

std::vector<std::pair<Monomial, Monomial>> monomial_coproduct(const Monomial &m, bool commutative)
{
	thread_local std::unordered_map<Monomial, std::vector<std::pair<Monomial, Monomial>>, MonomialHash> cache[2];
	auto &memo = cache[commutative ? 1 : 0];
	if (auto it = memo.find(m); it != memo.end())
		return it->second;
	const int d = m.degree();
	if (d > 24)
		throw DomainError("monomial too large for the coproduct");
	std::vector<std::pair<Monomial, Monomial>> out;
	const std::uint32_t full = d == 0 ? 0U : (1U << d) - 1U;
	out.reserve(std::size_t{1} << d);
	for (std::uint32_t mask = 0; mask <= full; ++mask)
		out.emplace_back(m.restrict(mask, commutative), m.restrict(full & ~mask, commutative));
	memo.emplace(m, out);
	return out;
}

TensorSeries coproduct(const NSeries &a)
{
	TensorSeries r(a.truncation(), a.mode());
	for_each_term(a, [&](const Monomial &m, const Rational &c) {
		for (const auto &[l, rt] : monomial_coproduct(m, a.commutative()))
			r.add_term(l, rt, c);
	});
	return r;
}

bool is_primitive(const NSeries &a)
{
	const NSeries one = NSeries::constant(1, a.truncation(), a.mode());
	TensorSeries expected = tensor(a, one);
	const TensorSeries right = tensor(one, a);
	for (const auto &[k, c] : right.terms())
		expected.add_term(k.first, k.second, c);
	return coproduct(a) == expected;
}

bool is_grouplike(const NSeries &g)
{
	return g.constant_term() == 1 && coproduct(g) == tensor(g, g);
}

NSeries exp_base(int truncation, RewriteMode mode)
{
	if (truncation < 1)
		throw DomainError("exp_base needs truncation >= 1");
	const NSeries x = NSeries::generator(1, truncation, mode);
	NSeries sum = NSeries::constant(1, truncation, mode);
	NSeries power = x;
	sum += x;
	for (int d = 2; d <= truncation; ++d) {
		power = mul(x, power);
		sum += scale(factorial_inverse(static_cast<unsigned>(d)), power);
	}
	return sum;
}

void check_base(const NSeries &base)
{
	if (base.constant_term() != 1)
		throw DomainError("a base for logarithms has constant term 1");
	if (base.truncation() < 1 || base.coefficient(Monomial::generator(1)) == 0)
		throw DomainError("a base for logarithms has a non-zero coefficient at X");
	for (int d = 1; d <= base.truncation(); ++d)
		for (const auto &kv : base.homogeneous(d))
			for (int leaf : kv.first.leaves())
				if (leaf != 1)
					throw DomainError("a base for logarithms is a series in the single variable X");
}

NSeries log_base(const NSeries &base)
{
	check_base(base);
	const int n = base.truncation();
	const RewriteMode mode = base.mode();
	const Rational linear = base.coefficient(Monomial::generator(1));
	const NSeries one = NSeries::constant(1, n, mode);
	const NSeries shifted = base - one; // e(X) - 1
	NSeries log(n, mode);
	Rational linear_power = 1;
	for (int d = 1; d <= n; ++d) {
		linear_power *= linear;
		// Degree-d monomials m of `log` contribute linear^d * m plus higher
		// degrees to log(e(X) - 1); fix them so that the degree-d part is
		// X for d = 1 and 0 otherwise.
		const NSeries current = eval_univariate(log, shifted, one);
		NSeries residual = current.homogeneous_part(d);
		if (d == 1)
			residual -= NSeries::generator(1, n, mode);
		for (const auto &[m, c] : residual.homogeneous(d))
			log.add_term(m, -c / linear_power);
	}
	return log;
}

} // namespace loopmagnus
