#pragma once

// Coalgebra structure on truncated free (commutative) non-associative
// algebras. Generators are primitive; the counit is the constant term.

#include "loopmagnus/monomial.hpp"
#include "loopmagnus/rational.hpp"
#include "loopmagnus/series.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace loopmagnus {

struct MonomialPairHash {
	std::size_t operator()(const std::pair<Monomial, Monomial> &p) const noexcept
	{
		const std::size_t h = MonomialHash{}(p.first);
		return h ^ (MonomialHash{}(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
	}
};

/// Element of the tensor square, truncated by total degree. The unit
/// monomial stands for the factor 1.
class TensorSeries {
public:
	using Terms = std::unordered_map<std::pair<Monomial, Monomial>, Rational, MonomialPairHash>;

	TensorSeries(int truncation, RewriteMode mode) : n_(truncation), mode_(mode) {}

	int truncation() const noexcept { return n_; }
	RewriteMode mode() const noexcept { return mode_; }
	const Terms &terms() const noexcept { return terms_; }
	Rational coefficient(const Monomial &left, const Monomial &right) const;
	void add_term(const Monomial &left, const Monomial &right, const Rational &c);

	friend bool operator==(const TensorSeries &, const TensorSeries &) = default;

private:
	int n_;
	RewriteMode mode_;
	Terms terms_;
};

/// a (x) b, truncated at total degree N.
TensorSeries tensor(const NSeries &a, const NSeries &b);

/// Delta(m) for one monomial: sum over leaf subsets S of m|S (x) m|S^c.
std::vector<std::pair<Monomial, Monomial>> monomial_coproduct(const Monomial &m, bool commutative);

/// The algebra morphism with Delta(X_i) = X_i (x) 1 + 1 (x) X_i.
TensorSeries coproduct(const NSeries &a);

/// Delta(a) == a (x) 1 + 1 (x) a up to the truncation.
bool is_primitive(const NSeries &a);
/// constant term 1 and Delta(g) == g (x) g up to the truncation.
bool is_grouplike(const NSeries &g);

/// sum_{d <= N} X^[d] / d!, with X^[d] = X(X(...X)) right-normed.
NSeries exp_base(int truncation, RewriteMode mode = RewriteMode::NonCommutative);

/// Constant 1 and non-zero linear coefficient; throws DomainError otherwise.
void check_base(const NSeries &base);

/// The univariate series l with l(e(X) - 1) = X (and hence e(l(X)) = 1 + X),
/// solved degree by degree. Throws DomainError if `base` has zero linear
/// coefficient.
NSeries log_base(const NSeries &base);

} // namespace loopmagnus
