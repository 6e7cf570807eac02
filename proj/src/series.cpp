#include "loopmagnus/series.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

namespace loopmagnus {

namespace {

std::atomic<std::size_t> g_max_terms{0};

void enforce_limit(std::size_t count)
{
	const std::size_t limit = g_max_terms.load(std::memory_order_relaxed);
	if (limit != 0 && count > limit)
		throw ResourceLimit("series exceeds " + std::to_string(limit) + " terms");
}

// out += scale * (x * y), keeping only products of degree <= n (all of x and
// y are homogeneous of fixed degree, so the caller guarantees this).
void accumulate_product(NSeries::Terms &out, const NSeries::Terms &x, const NSeries::Terms &y,
                        const Rational &factor, bool commutative)
{
	Rational prod;
	for (const auto &[mx, cx] : x) {
		for (const auto &[my, cy] : y) {
			const Monomial m = Monomial::product(mx, my, commutative);
			mpq_mul(prod.get_mpq_t(), cx.get_mpq_t(), cy.get_mpq_t());
			if (factor != 1)
				prod *= factor;
			out[m] += prod;
		}
	}
}

void erase_zeros(NSeries::Terms &terms)
{
	std::erase_if(terms, [](const auto &kv) { return kv.second == 0; });
}

} // namespace

void set_max_series_terms(std::size_t limit) { g_max_terms.store(limit); }
std::size_t max_series_terms() { return g_max_terms.load(); }

NSeries::NSeries(int truncation, RewriteMode mode)
    : n_(truncation), mode_(mode), c0_(0), by_degree_(static_cast<std::size_t>(std::max(truncation, 0)) + 1)
{
	if (truncation < 0)
		throw DomainError("truncation degree must be >= 0");
}

NSeries NSeries::constant(const Rational &c, int truncation, RewriteMode mode)
{
	NSeries s(truncation, mode);
	s.c0_ = c;
	return s;
}

NSeries NSeries::generator(int index, int truncation, RewriteMode mode)
{
	return monomial(Monomial::generator(index), Rational(1), truncation, mode);
}

NSeries NSeries::monomial(const Monomial &m, const Rational &c, int truncation, RewriteMode mode)
{
	NSeries s(truncation, mode);
	if (m.is_one())
		s.c0_ = c;
	else
		s.add_term(m, c);
	return s;
}

Rational NSeries::coefficient(const Monomial &m) const
{
	if (m.is_one())
		return c0_;
	const Monomial key = commutative() ? m.canonical_commutative() : m;
	if (key.degree() > n_)
		return 0;
	const auto &bucket = by_degree_[static_cast<std::size_t>(key.degree())];
	auto it = bucket.find(key);
	return it == bucket.end() ? Rational(0) : it->second;
}

std::size_t NSeries::term_count() const
{
	std::size_t count = c0_ != 0 ? 1 : 0;
	for (const auto &b : by_degree_)
		count += b.size();
	return count;
}

bool NSeries::is_zero() const { return term_count() == 0; }

void NSeries::add_term(const Monomial &m, const Rational &c)
{
	if (m.is_one()) {
		c0_ += c;
		return;
	}
	if (m.degree() > n_ || c == 0)
		return;
	const Monomial key = commutative() ? m.canonical_commutative() : m;
	auto &bucket = by_degree_[static_cast<std::size_t>(key.degree())];
	auto [it, inserted] = bucket.try_emplace(key, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			bucket.erase(it);
	}
}

std::vector<std::pair<Monomial, Rational>> NSeries::sorted_terms() const
{
	std::vector<std::pair<Monomial, Rational>> out;
	if (c0_ != 0)
		out.emplace_back(Monomial(), c0_);
	for (int d = 1; d <= n_; ++d) {
		const std::size_t first = out.size();
		for (const auto &kv : by_degree_[static_cast<std::size_t>(d)])
			out.push_back(kv);
		std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
		          [](const auto &a, const auto &b) { return a.first < b.first; });
	}
	return out;
}

NSeries NSeries::homogeneous_part(int d) const
{
	NSeries s(n_, mode_);
	if (d == 0)
		s.c0_ = c0_;
	else if (d >= 1 && d <= n_)
		s.by_degree_[static_cast<std::size_t>(d)] = by_degree_[static_cast<std::size_t>(d)];
	return s;
}

void NSeries::check_compatible(const NSeries &other) const
{
	if (n_ != other.n_)
		throw DomainError("series truncation degrees differ (" + std::to_string(n_) + " vs " +
		                  std::to_string(other.n_) + ")");
	if (mode_ != other.mode_)
		throw DomainError("series mix commutative and non-commutative modes");
}

void NSeries::drop_zeros()
{
	for (auto &b : by_degree_)
		erase_zeros(b);
}

NSeries &NSeries::operator+=(const NSeries &other)
{
	check_compatible(other);
	c0_ += other.c0_;
	for (int d = 1; d <= n_; ++d) {
		auto &mine = by_degree_[static_cast<std::size_t>(d)];
		for (const auto &[m, c] : other.by_degree_[static_cast<std::size_t>(d)])
			mine[m] += c;
		erase_zeros(mine);
	}
	return *this;
}

NSeries &NSeries::operator-=(const NSeries &other)
{
	check_compatible(other);
	c0_ -= other.c0_;
	for (int d = 1; d <= n_; ++d) {
		auto &mine = by_degree_[static_cast<std::size_t>(d)];
		for (const auto &[m, c] : other.by_degree_[static_cast<std::size_t>(d)])
			mine[m] -= c;
		erase_zeros(mine);
	}
	return *this;
}

NSeries &NSeries::operator*=(const Rational &c)
{
	if (c == 0) {
		*this = NSeries(n_, mode_);
		return *this;
	}
	c0_ *= c;
	for (auto &b : by_degree_)
		for (auto &kv : b)
			kv.second *= c;
	return *this;
}

bool operator==(const NSeries &a, const NSeries &b)
{
	return a.n_ == b.n_ && a.mode_ == b.mode_ && a.c0_ == b.c0_ && a.by_degree_ == b.by_degree_;
}

NSeries add(const NSeries &a, const NSeries &b)
{
	NSeries r = a;
	r += b;
	return r;
}

NSeries subtract(const NSeries &a, const NSeries &b)
{
	NSeries r = a;
	r -= b;
	return r;
}

NSeries scale(const Rational &c, const NSeries &a)
{
	NSeries r = a;
	r *= c;
	return r;
}

NSeries mul(const NSeries &a, const NSeries &b)
{
	a.check_compatible(b);
	const int n = a.n_;
	const bool comm = a.commutative();
	NSeries r(n, a.mode_);
	r.c0_ = a.c0_ * b.c0_;
	for (int d = 1; d <= n; ++d) {
		auto &out = r.by_degree_[static_cast<std::size_t>(d)];
		const auto &ad = a.by_degree_[static_cast<std::size_t>(d)];
		const auto &bd = b.by_degree_[static_cast<std::size_t>(d)];
		if (b.c0_ != 0)
			for (const auto &[m, c] : ad)
				out[m] += c * b.c0_;
		if (a.c0_ != 0)
			for (const auto &[m, c] : bd)
				out[m] += a.c0_ * c;
		for (int i = 1; i < d; ++i)
			accumulate_product(out, a.by_degree_[static_cast<std::size_t>(i)],
			                   b.by_degree_[static_cast<std::size_t>(d - i)], Rational(1), comm);
		erase_zeros(out);
	}
	enforce_limit(r.term_count());
	return r;
}

NSeries left_divide(const NSeries &b, const NSeries &a)
{
	b.check_compatible(a);
	if (b.c0_ == 0)
		throw DomainError("left division by a series with zero constant term");
	const int n = a.n_;
	const bool comm = a.commutative();
	const Rational inv_b0 = 1 / b.c0_;
	NSeries q(n, a.mode_);
	q.c0_ = a.c0_ * inv_b0;
	// b*q = a in degree d:  b0 q_d + sum_{j>=1} B_j q_{d-j} = a_d.
	for (int d = 1; d <= n; ++d) {
		NSeries::Terms acc = a.by_degree_[static_cast<std::size_t>(d)];
		if (q.c0_ != 0)
			for (const auto &[m, c] : b.by_degree_[static_cast<std::size_t>(d)])
				acc[m] -= c * q.c0_;
		for (int j = 1; j < d; ++j)
			accumulate_product(acc, b.by_degree_[static_cast<std::size_t>(j)],
			                   q.by_degree_[static_cast<std::size_t>(d - j)], Rational(-1), comm);
		erase_zeros(acc);
		if (inv_b0 != 1)
			for (auto &kv : acc)
				kv.second *= inv_b0;
		q.by_degree_[static_cast<std::size_t>(d)] = std::move(acc);
	}
	enforce_limit(q.term_count());
	return q;
}

NSeries right_divide(const NSeries &a, const NSeries &b)
{
	a.check_compatible(b);
	if (b.c0_ == 0)
		throw DomainError("right division by a series with zero constant term");
	const int n = a.n_;
	const bool comm = a.commutative();
	const Rational inv_b0 = 1 / b.c0_;
	NSeries q(n, a.mode_);
	q.c0_ = a.c0_ * inv_b0;
	// q*b = a in degree d:  q_d b0 + sum_{j>=1} q_{d-j} B_j = a_d.
	for (int d = 1; d <= n; ++d) {
		NSeries::Terms acc = a.by_degree_[static_cast<std::size_t>(d)];
		if (q.c0_ != 0)
			for (const auto &[m, c] : b.by_degree_[static_cast<std::size_t>(d)])
				acc[m] -= q.c0_ * c;
		for (int j = 1; j < d; ++j)
			accumulate_product(acc, q.by_degree_[static_cast<std::size_t>(d - j)],
			                   b.by_degree_[static_cast<std::size_t>(j)], Rational(-1), comm);
		erase_zeros(acc);
		if (inv_b0 != 1)
			for (auto &kv : acc)
				kv.second *= inv_b0;
		q.by_degree_[static_cast<std::size_t>(d)] = std::move(acc);
	}
	enforce_limit(q.term_count());
	return q;
}

std::optional<int> low_degree(const NSeries &a)
{
	for (int d = 1; d <= a.truncation(); ++d)
		if (!a.homogeneous(d).empty())
			return d;
	return std::nullopt;
}

std::string render(const NSeries &a)
{
	const auto terms = a.sorted_terms();
	if (terms.empty())
		return "0";
	std::string out;
	for (const auto &[m, c] : terms) {
		if (!out.empty())
			out += " + ";
		out += to_string(c);
		if (!m.is_one()) {
			out += '*';
			out += render(m);
		}
	}
	return out;
}

// ---------------------------------------------------------------------------
// Series text parser

namespace {

class SeriesParser {
public:
	SeriesParser(std::string_view text, int truncation, RewriteMode mode)
	    : text_(text), result_(truncation, mode)
	{
	}

	NSeries parse()
	{
		skip_ws();
		if (peek() == '0' && rest_is_blank(pos_ + 1)) // the zero series
			return result_;
		term();
		while (true) {
			skip_ws();
			if (pos_ == text_.size())
				break;
			expect('+');
			term();
		}
		return result_;
	}

private:
	char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

	bool rest_is_blank(std::size_t from) const
	{
		for (std::size_t i = from; i < text_.size(); ++i)
			if (!std::isspace(static_cast<unsigned char>(text_[i])))
				return false;
		return true;
	}

	void skip_ws()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	void expect(char c)
	{
		skip_ws();
		if (peek() != c)
			throw ParseError(std::string("expected '") + c + "'", pos_);
		++pos_;
	}

	void term()
	{
		skip_ws();
		Rational coeff(1);
		if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
			coeff = rational();
			skip_ws();
			if (peek() != '*') {
				result_.add_term(Monomial(), coeff);
				return;
			}
			++pos_;
		}
		result_.add_term(monomial_expr(), coeff);
	}

	Rational rational()
	{
		const std::size_t start = pos_;
		if (peek() == '-')
			++pos_;
		auto digits = [&] {
			const std::size_t from = pos_;
			while (std::isdigit(static_cast<unsigned char>(peek())))
				++pos_;
			if (pos_ == from)
				throw ParseError("expected digits", pos_);
		};
		digits();
		if (peek() == '/') {
			++pos_;
			digits();
		}
		try {
			return parse_rational(text_.substr(start, pos_ - start));
		} catch (const DomainError &e) {
			throw ParseError(e.what(), start);
		}
	}

	Monomial monomial_expr()
	{
		Monomial lhs = monomial_primary();
		skip_ws();
		if (peek() != '*')
			return lhs;
		++pos_;
		Monomial rhs = monomial_primary();
		return Monomial::product(lhs, rhs, result_.commutative());
	}

	Monomial monomial_primary()
	{
		skip_ws();
		if (peek() == 'x') {
			const std::size_t start = pos_++;
			int value = 0;
			if (!std::isdigit(static_cast<unsigned char>(peek())))
				throw ParseError("expected generator index after 'x'", pos_);
			while (std::isdigit(static_cast<unsigned char>(peek()))) {
				value = value * 10 + (text_[pos_++] - '0');
				if (value > 255)
					throw ParseError("generator index too large", start);
			}
			if (value < 1)
				throw ParseError("generator index must be >= 1", start);
			return Monomial::generator(value);
		}
		if (peek() == '(') {
			++pos_;
			Monomial inner = monomial_expr();
			expect(')');
			return inner;
		}
		throw ParseError("expected a monomial", pos_);
	}

	std::string_view text_;
	std::size_t pos_ = 0;
	NSeries result_;
};

} // namespace

NSeries parse_series(std::string_view text, int truncation, RewriteMode mode)
{
	return SeriesParser(text, truncation, mode).parse();
}

// ---------------------------------------------------------------------------
// Associative series

ASeries::ASeries(int truncation) : n_(truncation), c0_(0)
{
	if (truncation < 0)
		throw DomainError("truncation degree must be >= 0");
}

ASeries ASeries::constant(const Rational &c, int truncation)
{
	ASeries s(truncation);
	s.c0_ = c;
	return s;
}

ASeries ASeries::generator(int index, int truncation)
{
	ASeries s(truncation);
	s.add_term(Word(1, static_cast<char>(index)), Rational(1));
	return s;
}

Rational ASeries::coefficient(const Word &w) const
{
	if (w.empty())
		return c0_;
	auto it = terms_.find(w);
	return it == terms_.end() ? Rational(0) : it->second;
}

void ASeries::add_term(const Word &w, const Rational &c)
{
	if (w.empty()) {
		c0_ += c;
		return;
	}
	if (static_cast<int>(w.size()) > n_ || c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(w, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

ASeries add(const ASeries &a, const ASeries &b)
{
	if (a.truncation() != b.truncation())
		throw DomainError("associative series truncation degrees differ");
	ASeries r = a;
	r.add_term({}, b.constant_term());
	for (const auto &[w, c] : b.terms())
		r.add_term(w, c);
	return r;
}

ASeries mul(const ASeries &a, const ASeries &b)
{
	if (a.truncation() != b.truncation())
		throw DomainError("associative series truncation degrees differ");
	ASeries r(a.truncation());
	r.add_term({}, a.constant_term() * b.constant_term());
	for (const auto &[w, c] : a.terms())
		r.add_term(w, c * b.constant_term());
	for (const auto &[w, c] : b.terms())
		r.add_term(w, a.constant_term() * c);
	for (const auto &[wa, ca] : a.terms())
		for (const auto &[wb, cb] : b.terms())
			if (static_cast<int>(wa.size() + wb.size()) <= a.truncation())
				r.add_term(wa + wb, ca * cb);
	return r;
}

ASeries inverse(const ASeries &a)
{
	if (a.constant_term() == 0)
		throw DomainError("inverse of a series with zero constant term");
	// a = c(1 + u) with u of positive degree: a^{-1} = c^{-1} sum_k (-u)^k.
	const Rational c = a.constant_term();
	ASeries minus_u(a.truncation());
	for (const auto &[w, coeff] : a.terms())
		minus_u.add_term(w, -coeff / c);
	ASeries power = ASeries::constant(1, a.truncation());
	ASeries sum = power;
	for (int k = 1; k <= a.truncation(); ++k) {
		power = mul(power, minus_u);
		sum = add(sum, power);
	}
	ASeries r(a.truncation());
	r.add_term({}, sum.constant_term() / c);
	for (const auto &[w, coeff] : sum.terms())
		r.add_term(w, coeff / c);
	return r;
}

std::string render(const ASeries &a)
{
	std::vector<std::pair<ASeries::Word, Rational>> terms(a.terms().begin(), a.terms().end());
	std::sort(terms.begin(), terms.end(), [](const auto &x, const auto &y) {
		return x.first.size() != y.first.size() ? x.first.size() < y.first.size() : x.first < y.first;
	});
	std::string out;
	if (a.constant_term() != 0)
		out = to_string(a.constant_term());
	for (const auto &[w, c] : terms) {
		if (!out.empty())
			out += " + ";
		out += to_string(c);
		out += '*';
		for (std::size_t i = 0; i < w.size(); ++i) {
			if (i)
				out += '.';
			out += 'x' + std::to_string(static_cast<unsigned char>(w[i]));
		}
	}
	return out.empty() ? "0" : out;
}

ASeries associative_magnus(const std::vector<std::pair<int, int>> &letters, int truncation)
{
	ASeries r = ASeries::constant(1, truncation);
	for (const auto &[gen, sign] : letters) {
		ASeries factor = add(ASeries::constant(1, truncation), ASeries::generator(gen, truncation));
		if (sign < 0)
			factor = inverse(factor);
		r = mul(r, factor);
	}
	return r;
}

ASeries drop_parens(const NSeries &a)
{
	if (a.commutative())
		throw DomainError("drop_parens needs a non-commutative series");
	ASeries r = ASeries::constant(a.constant_term(), a.truncation());
	for (int d = 1; d <= a.truncation(); ++d)
		for (const auto &[m, c] : a.homogeneous(d)) {
			ASeries::Word w;
			for (int leaf : m.leaves())
				w.push_back(static_cast<char>(leaf));
			r.add_term(w, c);
		}
	return r;
}

} // namespace loopmagnus
