#include "loopmagnus/monomial.hpp"

#include "loopmagnus/error.hpp"

namespace loopmagnus {

namespace {

using Code = std::string_view;

// One past the end of the subtree starting at `pos`.
std::size_t subtree_end(Code code, std::size_t pos)
{
	int need = 1;
	while (need > 0) {
		need += code[pos] == 0 ? 1 : -1;
		++pos;
	}
	return pos;
}

std::strong_ordering compare(Code a, Code b)
{
	if (auto c = a.size() <=> b.size(); c != 0)
		return c;
	if (a.size() == 1)
		return static_cast<unsigned char>(a[0]) <=> static_cast<unsigned char>(b[0]);
	const std::size_t la = subtree_end(a, 1);
	const std::size_t lb = subtree_end(b, 1);
	if (auto c = compare(a.substr(1, la - 1), b.substr(1, lb - 1)); c != 0)
		return c;
	return compare(a.substr(la), b.substr(lb));
}

std::string join(Code l, Code r, bool commutative)
{
	if (commutative && compare(l, r) < 0)
		std::swap(l, r);
	std::string out;
	out.reserve(1 + l.size() + r.size());
	out.push_back('\0');
	out.append(l);
	out.append(r);
	return out;
}

// Restricts the subtree at `pos`; `leaf` counts leaves seen so far.
std::string restrict_at(Code code, std::size_t &pos, int &leaf, std::uint32_t mask, bool commutative)
{
	if (code[pos] != 0) {
		const bool keep = (mask >> leaf) & 1U;
		++leaf;
		return keep ? std::string(1, code[pos++]) : (++pos, std::string());
	}
	++pos;
	std::string l = restrict_at(code, pos, leaf, mask, commutative);
	std::string r = restrict_at(code, pos, leaf, mask, commutative);
	if (l.empty())
		return r;
	if (r.empty())
		return l;
	return join(l, r, commutative);
}

std::string canonical_at(Code code, std::size_t &pos)
{
	if (code[pos] != 0)
		return std::string(1, code[pos++]);
	++pos;
	std::string l = canonical_at(code, pos);
	std::string r = canonical_at(code, pos);
	return join(l, r, true);
}

void render_at(Code code, std::size_t &pos, std::string &out)
{
	if (code[pos] != 0) {
		out += 'x';
		out += std::to_string(static_cast<unsigned char>(code[pos++]));
		return;
	}
	++pos;
	out += '(';
	render_at(code, pos, out);
	out += '*';
	render_at(code, pos, out);
	out += ')';
}

} // namespace

Monomial Monomial::generator(int index)
{
	if (index < 1 || index > 255)
		throw DomainError("monomial generator index must lie in [1, 255]");
	return Monomial(std::string(1, static_cast<char>(index)));
}

Monomial Monomial::product(const Monomial &a, const Monomial &b, bool commutative)
{
	if (a.is_one())
		return b;
	if (b.is_one())
		return a;
	return Monomial(join(a.code_, b.code_, commutative));
}

std::pair<Monomial, Monomial> Monomial::factors() const
{
	if (code_.size() < 3)
		throw DomainError("factors() of a monomial of degree < 2");
	const std::size_t mid = subtree_end(code_, 1);
	return {Monomial(code_.substr(1, mid - 1)), Monomial(code_.substr(mid))};
}

std::vector<int> Monomial::leaves() const
{
	std::vector<int> out;
	out.reserve(static_cast<std::size_t>(degree()));
	for (char c : code_)
		if (c != 0)
			out.push_back(static_cast<unsigned char>(c));
	return out;
}

bool Monomial::is_right_normed() const
{
	// Preorder code of a right comb: 0 g 0 g ... 0 g g.
	if (code_.size() <= 1)
		return true;
	for (std::size_t i = 0; i + 1 < code_.size(); i += 2)
		if (code_[i] != 0 || code_[i + 1] == 0)
			return false;
	return code_.back() != 0;
}

bool Monomial::is_canonical_commutative() const { return is_one() || canonical_commutative() == *this; }

Monomial Monomial::canonical_commutative() const
{
	if (is_one())
		return *this;
	std::size_t pos = 0;
	return Monomial(canonical_at(code_, pos));
}

Monomial Monomial::restrict(std::uint32_t mask, bool commutative) const
{
	if (is_one())
		return *this;
	std::size_t pos = 0;
	int leaf = 0;
	return Monomial(restrict_at(code_, pos, leaf, mask, commutative));
}

std::strong_ordering operator<=>(const Monomial &a, const Monomial &b)
{
	if (a.is_one() || b.is_one())
		return a.code_.size() <=> b.code_.size();
	return compare(a.code_, b.code_);
}

std::string render(const Monomial &m)
{
	if (m.is_one())
		return "1";
	std::string out;
	std::size_t pos = 0;
	render_at(m.code(), pos, out);
	return out;
}

} // namespace loopmagnus
