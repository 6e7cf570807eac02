#include "loopmagnus/term.hpp"

#include "loopmagnus/error.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace loopmagnus {

namespace {

std::size_t mix(std::size_t seed, std::size_t v)
{
	return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const std::shared_ptr<const LoopTerm::Node> &identity_node()
{
	static const auto node = [] {
		auto n = std::make_shared<LoopTerm::Node>();
		n->kind = TermKind::Identity;
		n->leaves = 0;
		n->nodes = 1;
		n->hash = 0x51ed2701;
		return std::shared_ptr<const LoopTerm::Node>(std::move(n));
	}();
	return node;
}

} // namespace

LoopTerm::LoopTerm() : node_(identity_node()) {}

LoopTerm LoopTerm::identity() { return LoopTerm(); }

LoopTerm LoopTerm::generator(int index)
{
	if (index < 1)
		throw DomainError("generator index must be >= 1");
	auto n = std::make_shared<Node>();
	n->kind = TermKind::Generator;
	n->index = index;
	n->leaves = 1;
	n->nodes = 1;
	n->max_gen = index;
	n->hash = mix(0x9a7e, static_cast<std::size_t>(index));
	return LoopTerm(std::move(n));
}

LoopTerm LoopTerm::binary(TermKind kind, LoopTerm left, LoopTerm right)
{
	if (kind < TermKind::Mul)
		throw DomainError("binary() needs Mul, LDiv or RDiv");
	auto n = std::make_shared<Node>();
	n->kind = kind;
	n->leaves = left.leaf_count() + right.leaf_count();
	n->nodes = left.node_count() + right.node_count() + 1;
	n->max_gen = std::max(left.max_generator(), right.max_generator());
	n->hash = mix(mix(static_cast<std::size_t>(kind) * 0x1f3d5b79, left.hash()), right.hash());
	n->left = std::move(left);
	n->right = std::move(right);
	return LoopTerm(std::move(n));
}

LoopTerm LoopTerm::mul(LoopTerm l, LoopTerm r) { return binary(TermKind::Mul, std::move(l), std::move(r)); }
LoopTerm LoopTerm::ldiv(LoopTerm l, LoopTerm r) { return binary(TermKind::LDiv, std::move(l), std::move(r)); }
LoopTerm LoopTerm::rdiv(LoopTerm l, LoopTerm r) { return binary(TermKind::RDiv, std::move(l), std::move(r)); }

const LoopTerm &LoopTerm::left() const
{
	if (!node_->left)
		throw DomainError("left() of a non-binary term");
	return *node_->left;
}

const LoopTerm &LoopTerm::right() const
{
	if (!node_->right)
		throw DomainError("right() of a non-binary term");
	return *node_->right;
}

bool operator==(const LoopTerm &a, const LoopTerm &b)
{
	if (a.node_ == b.node_)
		return true;
	if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind ||
	    a.node_->leaves != b.node_->leaves || a.node_->nodes != b.node_->nodes ||
	    a.node_->index != b.node_->index)
		return false;
	if (!a.is_binary())
		return true;
	return *a.node_->left == *b.node_->left && *a.node_->right == *b.node_->right;
}

std::strong_ordering operator<=>(const LoopTerm &a, const LoopTerm &b)
{
	if (a.node_ == b.node_)
		return std::strong_ordering::equal;
	if (auto c = a.leaf_count() <=> b.leaf_count(); c != 0)
		return c;
	if (auto c = a.kind() <=> b.kind(); c != 0)
		return c;
	if (auto c = a.index() <=> b.index(); c != 0)
		return c;
	if (!a.is_binary())
		return std::strong_ordering::equal;
	if (auto c = *a.node_->left <=> *b.node_->left; c != 0)
		return c;
	return *a.node_->right <=> *b.node_->right;
}

// ---------------------------------------------------------------------------
// Parsing and rendering

namespace {

class TermParser {
public:
	TermParser(std::string_view text, int alphabet_size) : text_(text), n_(alphabet_size) {}

	LoopTerm parse()
	{
		LoopTerm t = expr();
		skip_ws();
		if (pos_ != text_.size())
			throw ParseError("unexpected trailing input", pos_);
		return t;
	}

private:
	void skip_ws()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	std::optional<TermKind> peek_op()
	{
		skip_ws();
		if (pos_ >= text_.size())
			return std::nullopt;
		switch (text_[pos_]) {
		case '*': return TermKind::Mul;
		case '\\': return TermKind::LDiv;
		case '/': return TermKind::RDiv;
		default: return std::nullopt;
		}
	}

	LoopTerm expr()
	{
		LoopTerm lhs = primary();
		auto op = peek_op();
		if (!op)
			return lhs;
		++pos_;
		LoopTerm rhs = primary();
		if (peek_op())
			throw ParseError("operators are non-associative; parenthesize nested operations", pos_);
		return LoopTerm::binary(*op, std::move(lhs), std::move(rhs));
	}

	LoopTerm primary()
	{
		skip_ws();
		if (pos_ >= text_.size())
			throw ParseError("unexpected end of input", pos_);
		const char c = text_[pos_];
		if (c == 'e') {
			++pos_;
			return LoopTerm::identity();
		}
		if (c == 'x') {
			const std::size_t start = pos_++;
			if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
				throw ParseError("expected generator index after 'x'", pos_);
			long value = 0;
			while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
				value = value * 10 + (text_[pos_] - '0');
				if (value > 1'000'000)
					throw ParseError("generator index too large", start);
				++pos_;
			}
			if (value < 1 || value > n_)
				throw ParseError("generator index x" + std::to_string(value) + " outside [1, " +
				                     std::to_string(n_) + "]",
				                 start);
			return LoopTerm::generator(static_cast<int>(value));
		}
		if (c == '(') {
			++pos_;
			LoopTerm inner = expr();
			skip_ws();
			if (pos_ >= text_.size() || text_[pos_] != ')')
				throw ParseError("expected ')'", pos_);
			++pos_;
			return inner;
		}
		throw ParseError(std::string("unexpected character '") + c + "'", pos_);
	}

	std::string_view text_;
	int n_;
	std::size_t pos_ = 0;
};

void render_into(const LoopTerm &t, std::string &out)
{
	switch (t.kind()) {
	case TermKind::Identity: out += 'e'; return;
	case TermKind::Generator:
		out += 'x';
		out += std::to_string(t.index());
		return;
	default: break;
	}
	out += '(';
	render_into(t.left(), out);
	out += t.kind() == TermKind::Mul ? '*' : t.kind() == TermKind::LDiv ? '\\' : '/';
	render_into(t.right(), out);
	out += ')';
}

} // namespace

LoopTerm parse_term(std::string_view text, int alphabet_size)
{
	return TermParser(text, alphabet_size).parse();
}

std::string render(const LoopTerm &t)
{
	std::string out;
	render_into(t, out);
	return out;
}

std::vector<LoopTerm> components(const LoopTerm &w)
{
	std::unordered_set<LoopTerm, LoopTermHash> seen;
	seen.insert(LoopTerm::identity());
	std::vector<LoopTerm> stack{w};
	while (!stack.empty()) {
		LoopTerm t = std::move(stack.back());
		stack.pop_back();
		if (!seen.insert(t).second)
			continue;
		if (t.is_binary()) {
			stack.push_back(t.left());
			stack.push_back(t.right());
		}
	}
	std::vector<LoopTerm> out(seen.begin(), seen.end());
	std::sort(out.begin(), out.end());
	return out;
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

bool is(const LoopTerm &t, TermKind k) { return t.kind() == k; }

std::optional<LoopTerm> root_noncommutative(const LoopTerm &t)
{
	if (!t.is_binary())
		return std::nullopt;
	const LoopTerm &a = t.left();
	const LoopTerm &b = t.right();
	switch (t.kind()) {
	case TermKind::Mul:
		if (a.is_identity()) // ev
			return b;
		if (b.is_identity()) // ue
			return a;
		if (is(b, TermKind::LDiv) && b.left() == a) // u(u\v)
			return b.right();
		if (is(a, TermKind::RDiv) && a.right() == b) // (u/v)v
			return a.left();
		return std::nullopt;
	case TermKind::LDiv:
		if (a.is_identity()) // e\v
			return b;
		if (a == b) // v\v
			return LoopTerm::identity();
		if (is(b, TermKind::Mul) && b.left() == a) // u\(uv)
			return b.right();
		if (is(a, TermKind::RDiv) && a.left() == b) // (u/v)\u
			return a.right();
		return std::nullopt;
	case TermKind::RDiv:
		if (b.is_identity()) // u/e
			return a;
		if (a == b) // u/u
			return LoopTerm::identity();
		if (is(a, TermKind::Mul) && a.right() == b) // (uv)/v
			return a.left();
		if (is(b, TermKind::LDiv) && b.right() == a) // u/(v\u)
			return b.left();
		return std::nullopt;
	default: return std::nullopt;
	}
}

std::optional<LoopTerm> root_commutative(const LoopTerm &t)
{
	if (!t.is_binary())
		return std::nullopt;
	const LoopTerm &a = t.left();
	const LoopTerm &b = t.right();
	switch (t.kind()) {
	case TermKind::Mul:
		if (a.is_identity()) // ev
			return b;
		if (b.is_identity()) // ue
			return a;
		if (is(b, TermKind::LDiv) && b.left() == a) // u(u\v)
			return b.right();
		if (is(a, TermKind::LDiv) && a.left() == b) // (u\v)u
			return a.right();
		if (a < b) // uv with u < v
			return LoopTerm::mul(b, a);
		return std::nullopt;
	case TermKind::LDiv:
		if (a.is_identity()) // e\v
			return b;
		if (a == b) // v\v
			return LoopTerm::identity();
		if (is(b, TermKind::Mul) && b.left() == a) // u\(uv)
			return b.right();
		if (is(b, TermKind::Mul) && b.right() == a) // v\(uv)
			return b.left();
		if (is(a, TermKind::LDiv) && a.right() == b) // (v\u)\u
			return a.left();
		return std::nullopt;
	case TermKind::RDiv: // u/v = v\u
		return LoopTerm::ldiv(b, a);
	default: return std::nullopt;
	}
}

// Normalizes a term whose children are already reduced.
LoopTerm normalize_root(LoopTerm t, RewriteMode mode)
{
	while (auto next = rewrite_root(t, mode))
		t = std::move(*next);
	return t;
}

LoopTerm normalize(const LoopTerm &t, RewriteMode mode)
{
	if (!t.is_binary())
		return t;
	LoopTerm l = normalize(t.left(), mode);
	LoopTerm r = normalize(t.right(), mode);
	return normalize_root(LoopTerm::binary(t.kind(), std::move(l), std::move(r)), mode);
}

std::optional<LoopTerm> step(const LoopTerm &t, RewriteMode mode, RedexChoice choice)
{
	if (t.is_binary()) {
		const bool left_first = choice == RedexChoice::LeftmostInnermost;
		const LoopTerm &first = left_first ? t.left() : t.right();
		if (auto r = step(first, mode, choice)) {
			return left_first ? LoopTerm::binary(t.kind(), std::move(*r), t.right())
			                  : LoopTerm::binary(t.kind(), t.left(), std::move(*r));
		}
		const LoopTerm &second = left_first ? t.right() : t.left();
		if (auto r = step(second, mode, choice)) {
			return left_first ? LoopTerm::binary(t.kind(), t.left(), std::move(*r))
			                  : LoopTerm::binary(t.kind(), std::move(*r), t.right());
		}
	}
	return rewrite_root(t, mode);
}

} // namespace

std::optional<LoopTerm> rewrite_root(const LoopTerm &t, RewriteMode mode)
{
	return mode == RewriteMode::Commutative ? root_commutative(t) : root_noncommutative(t);
}

bool is_reduced(const LoopTerm &w, RewriteMode mode)
{
	if (!w.is_binary())
		return true;
	return !rewrite_root(w, mode) && is_reduced(w.left(), mode) && is_reduced(w.right(), mode);
}

LoopTerm reduce(const LoopTerm &w, RewriteMode mode) { return normalize(w, mode); }

std::optional<LoopTerm> rewrite_step(const LoopTerm &w, RewriteMode mode, RedexChoice choice)
{
	return step(w, mode, choice);
}

bool equal_in_free_loop(const LoopTerm &a, const LoopTerm &b, RewriteMode mode)
{
	return reduce(a, mode) == reduce(b, mode);
}

std::vector<LoopTerm> enumerate_reduced(int alphabet_size, int max_leaves, RewriteMode mode,
                                        std::size_t max_words)
{
	if (max_leaves < 0)
		throw DomainError("max_leaves must be >= 0");
	if (alphabet_size < 0)
		throw DomainError("alphabet_size must be >= 0");
	std::vector<std::vector<LoopTerm>> by_leaves(static_cast<std::size_t>(max_leaves) + 1);
	std::size_t total = 1;
	auto push = [&](std::vector<LoopTerm> &level, LoopTerm t) {
		if (++total > max_words)
			throw ResourceLimit("word enumeration exceeds " + std::to_string(max_words) + " words");
		level.push_back(std::move(t));
	};
	if (max_leaves >= 1)
		for (int i = 1; i <= alphabet_size; ++i)
			push(by_leaves[1], LoopTerm::generator(i));
	static constexpr TermKind ops[] = {TermKind::Mul, TermKind::LDiv, TermKind::RDiv};
	for (int k = 2; k <= max_leaves; ++k) {
		auto &level = by_leaves[static_cast<std::size_t>(k)];
		for (int i = 1; i < k; ++i)
			for (const LoopTerm &a : by_leaves[static_cast<std::size_t>(i)])
				for (const LoopTerm &b : by_leaves[static_cast<std::size_t>(k - i)])
					for (TermKind op : ops) {
						LoopTerm t = LoopTerm::binary(op, a, b);
						// Children are reduced, so only the root can be a redex.
						if (!rewrite_root(t, mode))
							push(level, std::move(t));
					}
	}
	std::vector<LoopTerm> out{LoopTerm::identity()};
	for (auto &level : by_leaves) {
		std::sort(level.begin(), level.end());
		for (auto &t : level)
			out.push_back(std::move(t));
	}
	return out;
}

} // namespace loopmagnus
