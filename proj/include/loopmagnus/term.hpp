#pragma once

// Words of the free loop: syntax trees over e, x_i, and the three binary
// operations u*v, u\v, u/v, together with rewriting to the reduced
// (Evans) normal form.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace loopmagnus {

enum class TermKind : std::uint8_t { Identity, Generator, Mul, LDiv, RDiv };

enum class RewriteMode : std::uint8_t { NonCommutative, Commutative };

/// Immutable loop word. Copies share structure.
///
/// The total order (`<=>`) compares leaf count, then constructor rank
/// (Identity < Generator < Mul < LDiv < RDiv), then generator index, then
/// the left child and finally the right child. The commutative rewrite
/// `uv -> vu (u < v)` is taken with respect to this order, so commutative
/// normal forms have left factor >= right factor.
class LoopTerm {
public:
	LoopTerm();

	static LoopTerm identity();
	static LoopTerm generator(int index);
	static LoopTerm mul(LoopTerm left, LoopTerm right);
	static LoopTerm ldiv(LoopTerm left, LoopTerm right);
	static LoopTerm rdiv(LoopTerm left, LoopTerm right);
	static LoopTerm binary(TermKind kind, LoopTerm left, LoopTerm right);

	TermKind kind() const noexcept;
	bool is_identity() const noexcept { return kind() == TermKind::Identity; }
	bool is_generator() const noexcept { return kind() == TermKind::Generator; }
	bool is_binary() const noexcept { return kind() >= TermKind::Mul; }

	/// Generator index (1-based); 0 for non-generators.
	int index() const noexcept;
	const LoopTerm &left() const;
	const LoopTerm &right() const;

	int leaf_count() const noexcept;
	int node_count() const noexcept;
	/// Largest generator index occurring in the word (0 if none).
	int max_generator() const noexcept;
	std::size_t hash() const noexcept;

	friend bool operator==(const LoopTerm &a, const LoopTerm &b);
	friend std::strong_ordering operator<=>(const LoopTerm &a, const LoopTerm &b);

	struct Node;

private:
	explicit LoopTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

	std::shared_ptr<const Node> node_;
};

struct LoopTerm::Node {
	TermKind kind = TermKind::Identity;
	int index = 0;
	int leaves = 0;
	int nodes = 1;
	int max_gen = 0;
	std::size_t hash = 0;
	std::optional<LoopTerm> left;
	std::optional<LoopTerm> right;
};

inline TermKind LoopTerm::kind() const noexcept { return node_->kind; }
inline int LoopTerm::index() const noexcept { return node_->index; }
inline int LoopTerm::leaf_count() const noexcept { return node_->leaves; }
inline int LoopTerm::node_count() const noexcept { return node_->nodes; }
inline int LoopTerm::max_generator() const noexcept { return node_->max_gen; }
inline std::size_t LoopTerm::hash() const noexcept { return node_->hash; }

struct LoopTermHash {
	std::size_t operator()(const LoopTerm &t) const noexcept { return t.hash(); }
};

/// Parses the textual word grammar. Binary operators are non-associative
/// and of equal precedence, so nested binary operations must be
/// parenthesized. Generator indices must lie in [1, alphabet_size].
/// Throws ParseError.
LoopTerm parse_term(std::string_view text, int alphabet_size);

/// Fully parenthesized rendering; parse_term(render(t)) == t.
std::string render(const LoopTerm &t);

/// Comp(w): e, every subword, and w itself. Sorted by the term order.
std::vector<LoopTerm> components(const LoopTerm &w);

inline int leaf_count(const LoopTerm &w) { return w.leaf_count(); }

/// The single rewrite applicable at the root of `t`, if any.
std::optional<LoopTerm> rewrite_root(const LoopTerm &t, RewriteMode mode);

/// True iff no component of `w` is a left-hand side of a rewrite rule.
bool is_reduced(const LoopTerm &w, RewriteMode mode);

/// Innermost normalization to the reduced word representing `w`.
LoopTerm reduce(const LoopTerm &w, RewriteMode mode);

enum class RedexChoice : std::uint8_t { LeftmostInnermost, RightmostInnermost };

/// One rewrite step at the chosen innermost redex; nullopt if `w` is reduced.
std::optional<LoopTerm> rewrite_step(const LoopTerm &w, RewriteMode mode, RedexChoice choice);

bool equal_in_free_loop(const LoopTerm &a, const LoopTerm &b, RewriteMode mode);

/// All reduced words with at most `max_leaves` leaves over x_1..x_n, in
/// term order. `e` occurs only as the word `e` itself; every other word is
/// built from generators and the binary operations. Throws ResourceLimit
/// when more than `max_words` words would be produced.
std::vector<LoopTerm> enumerate_reduced(int alphabet_size, int max_leaves, RewriteMode mode,
                                        std::size_t max_words = 5'000'000);

} // namespace loopmagnus
