#include "loopmagnus/higman_hopf.hpp"

#include "loopmagnus/error.hpp"
#include "loopmagnus/hopf.hpp"

#include <algorithm>

namespace loopmagnus {

TSymbol TSymbol::generator(int i)
{
	if (i < 1)
		throw DomainError("t_i needs i >= 1");
	return TSymbol{i, {}, {}};
}

std::optional<TSymbol> TSymbol::pair(const Monomial &m1, const Monomial &m2, bool commutative)
{
	if (m1.is_one() || m2.is_one())
		return std::nullopt;
	if (commutative && m1 < m2)
		return TSymbol{0, m2, m1};
	return TSymbol{0, m1, m2};
}

std::strong_ordering operator<=>(const TSymbol &a, const TSymbol &b)
{
	if (a.is_pair() != b.is_pair())
		return a.is_pair() ? std::strong_ordering::greater : std::strong_ordering::less;
	if (!a.is_pair())
		return a.index <=> b.index;
	if (auto c = a.m1 <=> b.m1; c != 0)
		return c;
	return a.m2 <=> b.m2;
}

std::string render(const TSymbol &s)
{
	if (!s.is_pair())
		return "t" + std::to_string(s.index);
	return "t(" + render(s.m1) + "," + render(s.m2) + ")";
}

int degree(const TMonomial &m)
{
	int d = 0;
	for (const TSymbol &s : m)
		d += s.degree();
	return d;
}

namespace {

TMonomial merge(const TMonomial &a, const TMonomial &b)
{
	TMonomial r;
	r.reserve(a.size() + b.size());
	std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
	return r;
}

/// a*b keeping degrees <= limit.
TPoly mul_truncated(const TPoly &a, const TPoly &b, int limit)
{
	TPoly r(limit);
	for (const auto &[ma, ca] : a.terms()) {
		const int da = degree(ma);
		if (da > limit)
			continue;
		for (const auto &[mb, cb] : b.terms())
			if (da + degree(mb) <= limit)
				r.add_term(merge(ma, mb), ca * cb);
	}
	return r;
}

} // namespace

TPoly TPoly::constant(const Rational &c, int truncation)
{
	TPoly r(truncation);
	r.add_term({}, c);
	return r;
}

TPoly TPoly::symbol(const TSymbol &s, int truncation)
{
	TPoly r(truncation);
	r.add_term({s}, 1);
	return r;
}

Rational TPoly::constant_term() const
{
	return coefficient({});
}

Rational TPoly::coefficient(const TMonomial &m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Rational(0) : it->second;
}

void TPoly::add_term(const TMonomial &m, const Rational &c)
{
	if (c == 0 || degree(m) > n_)
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

TPoly &TPoly::operator+=(const TPoly &o)
{
	for (const auto &[m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

TPoly &TPoly::operator-=(const TPoly &o)
{
	for (const auto &[m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

TPoly &TPoly::operator*=(const Rational &c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto &kv : terms_)
		kv.second *= c;
	return *this;
}

TPoly operator+(TPoly a, const TPoly &b)
{
	return a += b;
}

TPoly operator-(TPoly a, const TPoly &b)
{
	return a -= b;
}

TPoly operator*(const Rational &c, TPoly a)
{
	return a *= c;
}

TPoly operator*(const TPoly &a, const TPoly &b)
{
	return mul_truncated(a, b, std::min(a.truncation(), b.truncation()));
}

TPoly exp(const TPoly &a)
{
	if (a.constant_term() != 0)
		throw DomainError("exp needs a zero constant term");
	const int n = a.truncation();
	TPoly sum = TPoly::constant(1, n);
	TPoly power = TPoly::constant(1, n);
	for (int k = 1; k <= n; ++k) {
		power = power * a;
		sum += factorial_inverse(static_cast<unsigned>(k)) * power;
	}
	return sum;
}

TPoly inverse(const TPoly &a)
{
	const Rational c = a.constant_term();
	if (c == 0)
		throw DomainError("inverse needs a non-zero constant term");
	const int n = a.truncation();
	// a = c(1 + u), a^-1 = c^-1 sum (-u)^k.
	TPoly u = Rational(1 / c) * a;
	u -= TPoly::constant(1, n);
	const TPoly neg = Rational(-1) * u;
	TPoly sum = TPoly::constant(1, n);
	TPoly power = TPoly::constant(1, n);
	for (int k = 1; k <= n; ++k) {
		power = power * neg;
		sum += power;
	}
	return Rational(1 / c) * sum;
}

TPoly power(const TPoly &a, int k)
{
	const TPoly base = k < 0 ? inverse(a) : a;
	TPoly r = TPoly::constant(1, a.truncation());
	for (int i = 0; i < (k < 0 ? -k : k); ++i)
		r = r * base;
	return r;
}

std::string render(const TPoly &a)
{
	if (a.is_zero())
		return "0";
	std::string out;
	for (const auto &[m, c] : a.terms()) {
		if (!out.empty())
			out += " + ";
		out += c.get_str();
		for (std::size_t i = 0; i < m.size();) {
			std::size_t j = i;
			while (j < m.size() && m[j] == m[i])
				++j;
			out += "*" + render(m[i]);
			if (j - i > 1)
				out += "^" + std::to_string(j - i);
			i = j;
		}
	}
	return out;
}

void TTensor::add_term(const TMonomial &a, const TMonomial &b, const Rational &c)
{
	if (c == 0 || degree(a) + degree(b) > n_)
		return;
	auto [it, inserted] = terms_.try_emplace({a, b}, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

TTensor coproduct(const TPoly &a)
{
	TTensor r(a.truncation());
	for (const auto &[m, c] : a.terms()) {
		if (m.size() > 24)
			throw DomainError("T-monomial too long for the coproduct");
		const std::uint32_t full = (1U << m.size()) - 1U;
		for (std::uint32_t mask = 0; mask <= full; ++mask) {
			TMonomial left;
			TMonomial right;
			for (std::size_t i = 0; i < m.size(); ++i)
				(mask >> i & 1U ? left : right).push_back(m[i]);
			r.add_term(left, right, c);
		}
	}
	return r;
}

TTensor tensor(const TPoly &a, const TPoly &b)
{
	TTensor r(std::min(a.truncation(), b.truncation()));
	for (const auto &[ma, ca] : a.terms())
		for (const auto &[mb, cb] : b.terms())
			r.add_term(ma, mb, ca * cb);
	return r;
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

void check_same_mode(const NSeries &u, const NSeries &v)
{
	if (u.mode() != v.mode())
		throw DomainError("t and t* take arguments of one mode");
}

} // namespace

TPoly t_map(const NSeries &u, const NSeries &v, int truncation)
{
	check_same_mode(u, v);
	TPoly r(truncation);
	for_each_term(u, [&](const Monomial &mu, const Rational &cu) {
		for_each_term(v, [&](const Monomial &mv, const Rational &cv) {
			if (auto s = TSymbol::pair(mu, mv, u.commutative()))
				r.add_term({*s}, cu * cv);
		});
	});
	return r;
}

std::vector<std::vector<Monomial>> iterated_coproduct(const Monomial &m, int k, bool commutative)
{
	if (k < 1)
		throw DomainError("iterated coproduct needs k >= 1");
	const int d = m.degree();
	std::vector<std::vector<Monomial>> out;
	std::vector<int> slot(static_cast<std::size_t>(d), 0);
	while (true) {
		std::vector<std::uint32_t> masks(static_cast<std::size_t>(k), 0);
		for (int i = 0; i < d; ++i)
			masks[static_cast<std::size_t>(slot[static_cast<std::size_t>(i)])] |= 1U << i;
		std::vector<Monomial> parts;
		for (std::uint32_t mask : masks)
			parts.push_back(m.restrict(mask, commutative));
		out.push_back(std::move(parts));
		int i = 0;
		while (i < d && ++slot[static_cast<std::size_t>(i)] == k)
			slot[static_cast<std::size_t>(i++)] = 0;
		if (i == d)
			break;
	}
	return out;
}

TPoly t_star(const Monomial &m, const Monomial &m2, bool commutative, int truncation)
{
	thread_local std::unordered_map<std::string, TPoly> cache;
	std::string key = m.code();
	key += '\xff';
	key += m2.code();
	key += commutative ? 'c' : 'n';
	key += std::to_string(truncation);
	if (auto it = cache.find(key); it != cache.end())
		return it->second;

	TPoly r(truncation);
	if (m.is_one() || m2.is_one()) {
		// epsilon(m) epsilon(m'); every t-factor vanishes.
		if (m.is_one() && m2.is_one())
			r.add_term({}, 1);
	} else if (m.degree() + m2.degree() <= truncation) {
		// Only assignments with no empty slot on either side contribute.
		const int top = std::min(m.degree(), m2.degree());
		for (int k = 1; k <= top; ++k) {
			const Rational weight = factorial_inverse(static_cast<unsigned>(k));
			const auto left = iterated_coproduct(m, k, commutative);
			const auto right = iterated_coproduct(m2, k, commutative);
			for (const auto &a : left) {
				if (std::any_of(a.begin(), a.end(), [](const Monomial &x) { return x.is_one(); }))
					continue;
				for (const auto &b : right) {
					if (std::any_of(b.begin(), b.end(), [](const Monomial &x) { return x.is_one(); }))
						continue;
					TMonomial mono;
					for (int j = 0; j < k; ++j)
						mono.push_back(*TSymbol::pair(a[static_cast<std::size_t>(j)],
						                              b[static_cast<std::size_t>(j)], commutative));
					std::sort(mono.begin(), mono.end());
					r.add_term(mono, weight);
				}
			}
		}
	}
	cache.emplace(std::move(key), r);
	return r;
}

TPoly t_star(const NSeries &u, const NSeries &v, int truncation)
{
	check_same_mode(u, v);
	TPoly r(truncation);
	for_each_term(u, [&](const Monomial &mu, const Rational &cu) {
		for_each_term(v, [&](const Monomial &mv, const Rational &cv) {
			r += (cu * cv) * t_star(mu, mv, u.commutative(), truncation);
		});
	});
	return r;
}

bool t_star_is_comultiplicative(const Monomial &m, const Monomial &m2, bool commutative, int truncation)
{
	const TTensor lhs = coproduct(t_star(m, m2, commutative, truncation));
	TTensor rhs(truncation);
	for (const auto &[a1, a2] : monomial_coproduct(m, commutative))
		for (const auto &[b1, b2] : monomial_coproduct(m2, commutative))
		{
			const TTensor part =
			    tensor(t_star(a1, b1, commutative, truncation), t_star(a2, b2, commutative, truncation));
			for (const auto &[k, c] : part.terms())
				rhs.add_term(k.first, k.second, c);
		}
	return lhs == rhs;
}

// ---------------------------------------------------------------------------

MixedSeries MixedSeries::constant(const Rational &c, int truncation, RewriteMode mode)
{
	MixedSeries r(truncation, mode);
	r.add(Monomial(), TPoly::constant(c, truncation));
	return r;
}

MixedSeries MixedSeries::tensor(const NSeries &x, const TPoly &a)
{
	MixedSeries r(x.truncation(), x.mode());
	for_each_term(x, [&](const Monomial &m, const Rational &c) { r.add(m, c * a); });
	return r;
}

Rational MixedSeries::constant_term() const
{
	auto it = terms_.find(Monomial());
	return it == terms_.end() ? Rational(0) : it->second.constant_term();
}

TPoly MixedSeries::coefficient(const Monomial &m) const
{
	auto it = terms_.find(commutative() ? m.canonical_commutative() : m);
	return it == terms_.end() ? TPoly(n_) : it->second;
}

void MixedSeries::add(const Monomial &m, const TPoly &a)
{
	const Monomial key = commutative() ? m.canonical_commutative() : m;
	const int limit = n_ - key.degree();
	if (limit < 0)
		return;
	auto it = terms_.try_emplace(key, TPoly(n_)).first;
	for (const auto &[t, c] : a.terms())
		if (degree(t) <= limit)
			it->second.add_term(t, c);
	if (it->second.is_zero())
		terms_.erase(it);
}

MixedSeries MixedSeries::homogeneous_part(int d) const
{
	MixedSeries r(n_, mode_);
	for (const auto &[m, a] : terms_) {
		TPoly part(n_);
		for (const auto &[t, c] : a.terms())
			if (m.degree() + degree(t) == d)
				part.add_term(t, c);
		r.add(m, part);
	}
	return r;
}

void MixedSeries::check_compatible(const MixedSeries &o) const
{
	if (n_ != o.n_ || mode_ != o.mode_)
		throw DomainError("mixed series differ in truncation or mode");
}

MixedSeries &MixedSeries::operator+=(const MixedSeries &o)
{
	check_compatible(o);
	for (const auto &[m, a] : o.terms_)
		add(m, a);
	return *this;
}

MixedSeries &MixedSeries::operator-=(const MixedSeries &o)
{
	check_compatible(o);
	for (const auto &[m, a] : o.terms_)
		add(m, Rational(-1) * a);
	return *this;
}

MixedSeries &MixedSeries::operator*=(const Rational &c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto &kv : terms_)
		kv.second *= c;
	return *this;
}

MixedSeries operator+(MixedSeries a, const MixedSeries &b)
{
	return a += b;
}

MixedSeries operator-(MixedSeries a, const MixedSeries &b)
{
	return a -= b;
}

MixedSeries operator*(const Rational &c, MixedSeries a)
{
	return a *= c;
}

MixedSeries mixed_mul(const MixedSeries &a, const MixedSeries &b)
{
	if (a.truncation() != b.truncation() || a.mode() != b.mode())
		throw DomainError("mixed series differ in truncation or mode");
	const int n = a.truncation();
	const bool comm = a.commutative();
	MixedSeries r(n, a.mode());
	for (const auto &[x, alpha] : a.terms()) {
		const int dx = x.degree();
		for (const auto &[y, beta] : b.terms()) {
			const int dy = y.degree();
			if (dx + dy > n)
				continue;
			const TPoly ab = mul_truncated(alpha, beta, n - dx - dy);
			if (ab.is_zero())
				continue;
			for (const auto &[x1, x2] : monomial_coproduct(x, comm))
				for (const auto &[y1, y2] : monomial_coproduct(y, comm)) {
					const TPoly ts = t_star(x2, y2, comm, n);
					if (ts.is_zero())
						continue;
					// t* carries the degree of x2 and y2, so only x1 and y1 reduce the budget.
					r.add(Monomial::product(x1, y1, comm), mul_truncated(ts, ab, n - x1.degree() - y1.degree()));
				}
		}
	}
	return r;
}

namespace {

template <class Residual>
MixedSeries solve_by_degree(const MixedSeries &divisor, const MixedSeries &target, Residual &&residual)
{
	if (divisor.truncation() != target.truncation() || divisor.mode() != target.mode())
		throw DomainError("mixed series differ in truncation or mode");
	const Rational b0 = divisor.constant_term();
	if (b0 == 0)
		throw DomainError("division by a mixed series with zero constant term");
	MixedSeries q(target.truncation(), target.mode());
	for (int d = 0; d <= target.truncation(); ++d) {
		MixedSeries step = residual(q).homogeneous_part(d);
		step *= Rational(1 / b0);
		q += step;
	}
	return q;
}

} // namespace

MixedSeries mixed_left_divide(const MixedSeries &b, const MixedSeries &a)
{
	return solve_by_degree(b, a, [&](const MixedSeries &q) { return a - mixed_mul(b, q); });
}

MixedSeries mixed_right_divide(const MixedSeries &a, const MixedSeries &b)
{
	return solve_by_degree(b, a, [&](const MixedSeries &q) { return a - mixed_mul(q, b); });
}

std::string render(const MixedSeries &a)
{
	if (a.terms().empty())
		return "0";
	std::string out;
	for (const auto &[m, p] : a.terms()) {
		if (!out.empty())
			out += " + ";
		out += render(m) + " (x) (" + render(p) + ")";
	}
	return out;
}

namespace {

MagnusConfig with_base(MagnusConfig cfg)
{
	if (!cfg.base)
		cfg.base = exp_base(cfg.truncation, cfg.mode);
	validate(cfg);
	return cfg;
}

} // namespace

MixedSeries tilde_generator_image(int index, const MagnusConfig &cfg)
{
	const MagnusConfig c = with_base(cfg);
	const TPoly t = TPoly::symbol(TSymbol::generator(index), c.truncation);
	return MixedSeries::tensor(generator_image(index, c), exp(t));
}

MagnusTildeEvaluator::MagnusTildeEvaluator(MagnusConfig cfg) : cfg_(with_base(std::move(cfg)))
{
	for (int i = 1; i <= cfg_.alphabet_size; ++i)
		generators_.push_back(tilde_generator_image(i, cfg_));
}

const MixedSeries &MagnusTildeEvaluator::operator()(const LoopTerm &w)
{
	if (auto it = memo_.find(w); it != memo_.end())
		return it->second;
	MixedSeries value(cfg_.truncation, cfg_.mode);
	switch (w.kind()) {
	case TermKind::Identity: value = MixedSeries::constant(1, cfg_.truncation, cfg_.mode); break;
	case TermKind::Generator:
		if (w.index() > cfg_.alphabet_size)
			throw DomainError("generator x" + std::to_string(w.index()) + " outside the configured alphabet");
		value = generators_[static_cast<std::size_t>(w.index() - 1)];
		break;
	default: {
		const MixedSeries &l = (*this)(w.left());
		const MixedSeries &r = (*this)(w.right());
		if (w.kind() == TermKind::Mul)
			value = mixed_mul(l, r);
		else if (w.kind() == TermKind::LDiv)
			value = mixed_left_divide(l, r);
		else
			value = mixed_right_divide(l, r);
	}
	}
	return memo_.emplace(w, std::move(value)).first->second;
}

MixedSeries magnus_tilde(const LoopTerm &w, const MagnusConfig &cfg)
{
	MagnusConfig local = cfg;
	local.alphabet_size = std::max(cfg.alphabet_size, w.max_generator());
	MagnusTildeEvaluator eval(std::move(local));
	return eval(w);
}

PhiMap::PhiMap(MagnusConfig cfg) : cfg_(with_base(std::move(cfg)))
{
	const NSeries log = log_base(*cfg_.base);
	const MixedSeries one = MixedSeries::constant(1, cfg_.truncation, cfg_.mode);
	for (int i = 1; i <= cfg_.alphabet_size; ++i)
		images_.push_back(eval_univariate(log, tilde_generator_image(i, cfg_) - one, one));
}

const MixedSeries &PhiMap::generator_image(int index) const
{
	if (index < 1 || index > static_cast<int>(images_.size()))
		throw DomainError("no image for X" + std::to_string(index));
	return images_[static_cast<std::size_t>(index - 1)];
}

MixedSeries PhiMap::operator()(const NSeries &s) const
{
	if (s.mode() != cfg_.mode)
		throw DomainError("series mode differs from the configured mode");
	return substitute(s, images_, MixedSeries::constant(1, cfg_.truncation, cfg_.mode));
}

MixedSeries phi_apply(const NSeries &s, const MagnusConfig &cfg)
{
	return PhiMap(cfg)(s);
}

LemmaAResult lemma_a_check(const std::vector<TPoly> &generators, int bound)
{
	LemmaAResult res;
	if (generators.empty())
		return res;
	const int n = generators.front().truncation();
	const std::size_t k = generators.size();
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = i + 1; j < k; ++j)
			if (!(generators[i] * generators[j] == generators[j] * generators[i]))
				res.commute = false;

	std::vector<std::vector<TPoly>> powers(k);
	for (std::size_t j = 0; j < k; ++j)
		for (int e = -bound; e <= bound; ++e)
			powers[j].push_back(power(generators[j], e));
	const TPoly one = TPoly::constant(1, n);
	std::vector<int> exps(k, -bound);
	while (true) {
		if (std::any_of(exps.begin(), exps.end(), [](int e) { return e != 0; })) {
			++res.vectors_checked;
			TPoly prod = one;
			for (std::size_t j = 0; j < k; ++j)
				prod = prod * powers[j][static_cast<std::size_t>(exps[j] + bound)];
			if (prod == one && !res.relation)
				res.relation = exps;
		}
		std::size_t j = 0;
		while (j < k && ++exps[j] > bound)
			exps[j++] = -bound;
		if (j == k)
			break;
	}
	return res;
}

} // namespace loopmagnus
