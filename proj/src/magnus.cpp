#include "loopmagnus/magnus.hpp"

#include "loopmagnus/hopf.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace loopmagnus {

void validate(const MagnusConfig &cfg)
{
	if (cfg.truncation < 1)
		throw DomainError("truncation degree N must be >= 1");
	if (cfg.alphabet_size < 0 || cfg.alphabet_size > 255)
		throw DomainError("alphabet size must lie in [0, 255]");
	if (cfg.base) {
		check_base(*cfg.base);
		if (cfg.base->truncation() < cfg.truncation)
			throw DomainError("base series is truncated below the requested degree");
		if (cfg.base->mode() != cfg.mode)
			throw DomainError("base series mode differs from the configured mode");
	}
}

NSeries generator_image(int index, const MagnusConfig &cfg)
{
	const NSeries x = NSeries::generator(index, cfg.truncation, cfg.mode);
	const NSeries one = NSeries::constant(1, cfg.truncation, cfg.mode);
	if (!cfg.base)
		return one + x;
	// e(X_i): substitute X_i for the variable of the base.
	return eval_univariate(*cfg.base, x, one);
}

MagnusEvaluator::MagnusEvaluator(MagnusConfig cfg) : cfg_(std::move(cfg))
{
	validate(cfg_);
	for (int i = 1; i <= cfg_.alphabet_size; ++i)
		generators_.push_back(generator_image(i, cfg_));
}

const NSeries &MagnusEvaluator::operator()(const LoopTerm &w)
{
	if (auto it = memo_.find(w); it != memo_.end())
		return it->second;
	NSeries value(cfg_.truncation, cfg_.mode);
	switch (w.kind()) {
	case TermKind::Identity: value = NSeries::constant(1, cfg_.truncation, cfg_.mode); break;
	case TermKind::Generator:
		if (w.index() > cfg_.alphabet_size)
			throw DomainError("generator x" + std::to_string(w.index()) + " outside the configured alphabet");
		value = generators_[static_cast<std::size_t>(w.index() - 1)];
		break;
	default: {
		// Evaluate the children first; references into the node-based map
		// stay valid across insertions.
		const NSeries &l = (*this)(w.left());
		const NSeries &r = (*this)(w.right());
		if (w.kind() == TermKind::Mul)
			value = mul(l, r);
		else if (w.kind() == TermKind::LDiv)
			value = left_divide(l, r);
		else
			value = right_divide(l, r);
	}
	}
	return memo_.emplace(w, std::move(value)).first->second;
}

NSeries magnus(const LoopTerm &w, const MagnusConfig &cfg)
{
	MagnusConfig local = cfg;
	local.alphabet_size = std::max(cfg.alphabet_size, w.max_generator());
	MagnusEvaluator eval(std::move(local));
	return eval(w);
}

DimensionDegree dimension_degree(const LoopTerm &w, const MagnusConfig &cfg)
{
	const auto low = low_degree(magnus(w, cfg));
	if (!low)
		return {cfg.truncation + 1, true};
	return {*low, false};
}

Membership in_dimension_subloop(const LoopTerm &w, int n, const MagnusConfig &cfg)
{
	// The identity lies in every D_n, whatever the truncation.
	if (reduce(w, cfg.mode).is_identity())
		return Membership::Yes;
	const DimensionDegree d = dimension_degree(w, cfg);
	if (n <= d.degree)
		return Membership::Yes;
	return d.lower_bound ? Membership::Unknown : Membership::No;
}

std::string to_string(Membership m)
{
	switch (m) {
	case Membership::Yes: return "yes";
	case Membership::No: return "no";
	default: return "unknown (raise N)";
	}
}

namespace {

std::size_t hash_integer(mpz_srcptr z)
{
	std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) + 0x27d4eb2f165667c5ULL;
	for (std::size_t i = 0; i < mpz_size(z); ++i)
		h = h * 1099511628211ULL ^ static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i)));
	return h;
}

std::size_t hash_rational(const Rational &q)
{
	return hash_integer(q.get_num_mpz_t()) * 31 + hash_integer(q.get_den_mpz_t());
}

} // namespace

std::size_t series_fingerprint(const NSeries &s)
{
	// Sum of per-term hashes: independent of the hash-map iteration order.
	std::size_t h = hash_rational(s.constant_term());
	for (int d = 1; d <= s.truncation(); ++d)
		for (const auto &[m, c] : s.homogeneous(d)) {
			std::size_t t = MonomialHash{}(m) * 0x9e3779b97f4a7c15ULL ^ hash_rational(c);
			t ^= t >> 29;
			h += t * 0xbf58476d1ce4e5b9ULL;
		}
	return h;
}

CollisionReport injectivity_scan(int max_leaves, const MagnusConfig &cfg, std::size_t max_words)
{
	const std::vector<LoopTerm> words = enumerate_reduced(cfg.alphabet_size, max_leaves, cfg.mode, max_words);
	MagnusEvaluator eval(cfg);
	CollisionReport report;
	report.alphabet_size = cfg.alphabet_size;
	report.max_leaves = max_leaves;
	report.truncation = cfg.truncation;
	report.mode = cfg.mode;
	report.modified = cfg.base.has_value();
	report.words = words.size();

	// Words are in term order, so each word's components are evaluated
	// before the word itself and hit the cache.
	std::map<std::size_t, std::vector<std::size_t>> buckets;
	for (std::size_t i = 0; i < words.size(); ++i)
		buckets[series_fingerprint(eval(words[i]))].push_back(i);
	for (const auto &[fp, idx] : buckets)
		for (std::size_t a = 0; a < idx.size(); ++a)
			for (std::size_t b = a + 1; b < idx.size(); ++b)
				if (eval(words[idx[a]]) == eval(words[idx[b]]))
					report.collisions.push_back({words[idx[a]], words[idx[b]]});
	std::sort(report.collisions.begin(), report.collisions.end(), [](const Collision &x, const Collision &y) {
		return x.first != y.first ? x.first < y.first : x.second < y.second;
	});
	return report;
}

std::string CollisionReport::to_json() const
{
	nlohmann::ordered_json j;
	j["alphabet_size"] = alphabet_size;
	j["max_leaves"] = max_leaves;
	j["truncation"] = truncation;
	j["mode"] = mode == RewriteMode::Commutative ? "commutative" : "non-commutative";
	j["map"] = modified ? "modified" : "classical";
	j["words"] = words;
	auto list = nlohmann::ordered_json::array();
	for (const auto &c : collisions)
		list.push_back({{"first", render(c.first)},
		                {"second", render(c.second)},
		                {"note", "collision at truncation - raise N"}});
	j["collisions"] = std::move(list);
	j["collision_count"] = collisions.size();
	return j.dump(2);
}

} // namespace loopmagnus
