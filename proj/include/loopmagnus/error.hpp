#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loopmagnus {

/// Malformed textual input. `position()` is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
	ParseError(const std::string &what, std::size_t position)
	    : std::runtime_error(what + " at position " + std::to_string(position)),
	      position_(position)
	{
	}

	std::size_t position() const noexcept { return position_; }

private:
	std::size_t position_;
};

/// A precondition on the mathematical input failed (mode or degree
/// mismatch, division by a non-unit, generator out of range, ...).
class DomainError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// A configured size cap (series terms, enumerated words) was exceeded.
class ResourceLimit : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

} // namespace loopmagnus
