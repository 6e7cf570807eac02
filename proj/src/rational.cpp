#include "loopmagnus/rational.hpp"

#include "loopmagnus/error.hpp"

#include <cctype>

namespace loopmagnus {

namespace {

bool all_digits(std::string_view s)
{
	if (s.empty())
		return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
	std::string_view body = text;
	const bool negative = !body.empty() && body.front() == '-';
	if (negative)
		body.remove_prefix(1);
	const auto slash = body.find('/');
	const std::string_view num = body.substr(0, slash);
	const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
	if (!all_digits(num) || !all_digits(den))
		throw DomainError("malformed rational '" + std::string(text) + "'");
	const Integer n{std::string(num)};
	const Integer d{std::string(den)};
	if (d == 0)
		throw DomainError("zero denominator in '" + std::string(text) + "'");
	Rational q(n, d);
	q.canonicalize();
	return negative ? Rational(-q) : q;
}

Integer binomial(const Integer &n, unsigned k)
{
	Integer num = 1;
	Integer den = 1;
	for (unsigned i = 0; i < k; ++i) {
		num *= n - i;
		den *= i + 1;
	}
	return num / den;
}

Rational factorial_inverse(unsigned k)
{
	Integer f = 1;
	for (unsigned i = 2; i <= k; ++i)
		f *= i;
	return Rational(Integer(1), f);
}

} // namespace loopmagnus
