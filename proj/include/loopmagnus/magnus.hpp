#pragma once

// The Magnus map x_i -> 1 + X_i, the modified map x_i -> e(X_i) for a base
// for logarithms e, and the dimension-filtration tests built on them.

#include "loopmagnus/series.hpp"
#include "loopmagnus/term.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace loopmagnus {

struct MagnusConfig {
	int alphabet_size = 1;
	int truncation = 6;
	RewriteMode mode = RewriteMode::NonCommutative;
	/// Univariate base e(X); absent selects the classical map.
	std::optional<NSeries> base;
};

/// Validates the configuration (N >= 1, base valid and of matching degree
/// and mode). Throws DomainError.
void validate(const MagnusConfig &cfg);

/// Image of x_i: 1 + X_i, or e(X_i) when a base is configured.
NSeries generator_image(int index, const MagnusConfig &cfg);

/// Memoizing evaluator; subterm images are cached by structure.
class MagnusEvaluator {
public:
	explicit MagnusEvaluator(MagnusConfig cfg);

	const MagnusConfig &config() const noexcept { return cfg_; }
	const NSeries &operator()(const LoopTerm &w);
	std::size_t cached() const noexcept { return memo_.size(); }

private:
	MagnusConfig cfg_;
	std::vector<NSeries> generators_;
	std::unordered_map<LoopTerm, NSeries, LoopTermHash> memo_;
};

NSeries magnus(const LoopTerm &w, const MagnusConfig &cfg);

/// Lowest degree of M(w) - 1. When every term up to N vanishes the value is
/// only a lower bound (N + 1).
struct DimensionDegree {
	int degree = 0;
	bool lower_bound = false;
};

DimensionDegree dimension_degree(const LoopTerm &w, const MagnusConfig &cfg);

enum class Membership { Yes, No, Unknown };

/// w in D_n: M(w) - 1 has no terms below degree n. Unknown when n > N and
/// every computed term vanishes.
Membership in_dimension_subloop(const LoopTerm &w, int n, const MagnusConfig &cfg);

std::string to_string(Membership m);

struct Collision {
	LoopTerm first;
	LoopTerm second;
};

struct CollisionReport {
	int alphabet_size = 0;
	int max_leaves = 0;
	int truncation = 0;
	RewriteMode mode = RewriteMode::NonCommutative;
	bool modified = false;
	std::size_t words = 0;
	std::vector<Collision> collisions;

	std::string to_json() const;
};

/// Evaluates the map on every reduced word with <= max_leaves leaves and
/// reports pairs with equal truncated images.
CollisionReport injectivity_scan(int max_leaves, const MagnusConfig &cfg,
                                 std::size_t max_words = 5'000'000);

/// Hash of the term set of a series (independent of storage order), used
/// to bucket equal images.
std::size_t series_fingerprint(const NSeries &s);

} // namespace loopmagnus
