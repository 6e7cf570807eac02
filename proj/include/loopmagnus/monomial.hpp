#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace loopmagnus {

/// Non-associative monomial: a binary tree whose leaves are generators
/// X_1..X_255. The empty monomial stands for the unit 1 and appears only as
/// a tensor factor.
///
/// Stored as a preorder code: byte 0 marks an internal node, byte i > 0 the
/// leaf X_i. Degree-8 trees take 15 bytes and stay within the small-string
/// buffer.
///
/// Ordering matches the word order of `LoopTerm`: degree, then leaf before
/// product, then generator index, then left factor, then right factor.
class Monomial {
public:
	Monomial() = default;

	static Monomial generator(int index);
	/// Product of two non-unit monomials; in commutative mode the factors are
	/// swapped so that left >= right (canonical form).
	static Monomial product(const Monomial &a, const Monomial &b, bool commutative);

	bool is_one() const noexcept { return code_.empty(); }
	bool is_generator() const noexcept { return code_.size() == 1; }
	int degree() const noexcept { return static_cast<int>((code_.size() + 1) / 2); }
	/// Generator index of a degree-1 monomial.
	int index() const noexcept { return is_generator() ? static_cast<unsigned char>(code_[0]) : 0; }
	std::pair<Monomial, Monomial> factors() const;

	/// Leaf labels from left to right.
	std::vector<int> leaves() const;
	/// Shape X_{i1}(X_{i2}(...(X_{ik-1} X_{ik}))).
	bool is_right_normed() const;
	/// True if every internal node has left factor >= right factor.
	bool is_canonical_commutative() const;
	/// Re-canonicalizes every node for the commutative algebra.
	Monomial canonical_commutative() const;

	/// The monomial obtained by keeping the leaves whose bit is set in
	/// `mask` (bit i = i-th leaf from the left), collapsing 1*m = m*1 = m.
	Monomial restrict(std::uint32_t mask, bool commutative) const;

	const std::string &code() const noexcept { return code_; }

	friend bool operator==(const Monomial &, const Monomial &) = default;
	friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b);

private:
	explicit Monomial(std::string code) : code_(std::move(code)) {}
	std::string code_;
};

struct MonomialHash {
	std::size_t operator()(const Monomial &m) const noexcept
	{
		return std::hash<std::string>{}(m.code());
	}
};

/// "x1", "(x1*x2)", ...; the unit renders as "1".
std::string render(const Monomial &m);

} // namespace loopmagnus
