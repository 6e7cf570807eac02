#include "loopmagnus/verify.hpp"

#include "loopmagnus/error.hpp"
#include "loopmagnus/higman.hpp"
#include "loopmagnus/higman_hopf.hpp"
#include "loopmagnus/hopf.hpp"
#include "loopmagnus/loops.hpp"
#include "loopmagnus/magnus.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace loopmagnus {

std::string to_string(CheckStatus s)
{
	switch (s) {
	case CheckStatus::Pass: return "PASS";
	case CheckStatus::Fail: return "FAIL";
	default: return "SKIP";
	}
}

bool SuiteReport::passed() const
{
	for (const auto &c : checks)
		if (c.status == CheckStatus::Fail)
			return false;
	return true;
}

namespace {

class Suite {
public:
	explicit Suite(std::string name) { report_.suite = std::move(name); }

	void check(std::string id, int criterion, bool ok, std::string detail)
	{
		report_.checks.push_back({std::move(id), criterion, ok ? CheckStatus::Pass : CheckStatus::Fail,
		                          std::move(detail)});
	}

	SuiteReport finish() { return std::move(report_); }

private:
	SuiteReport report_;
};

std::string mode_tag(RewriteMode m)
{
	return m == RewriteMode::Commutative ? "comm" : "noncomm";
}

std::vector<RewriteMode> modes(const SuiteOptions &o)
{
	if (o.mode)
		return {*o.mode};
	return {RewriteMode::NonCommutative, RewriteMode::Commutative};
}

std::vector<IntPair> grid_pairs(int b)
{
	std::vector<IntPair> g;
	for (int p = -b; p <= b; ++p)
		for (int q = -b; q <= b; ++q)
			g.push_back({p, q});
	return g;
}

IntPair pair_of(long p, long q)
{
	return {Integer(p), Integer(q)};
}

/// Uniform draw from [-b, b]; mt19937_64 output is fixed by the standard.
long draw(std::mt19937_64 &rng, int b)
{
	return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * b + 1)) - b;
}

template <LoopOps L>
std::string axiom_scan(const L &loop, const std::vector<IntPair> &grid, bool &ok)
{
	ok = true;
	for (const auto &a : grid)
		for (const auto &b : grid)
			if (auto f = loop_axiom_failure(loop, a, b)) {
				ok = false;
				return *f + " fails at a=" + render(a) + ", b=" + render(b);
			}
	return std::to_string(grid.size() * grid.size()) + " pairs";
}

template <class Embed, LoopOps L>
void embedding_checks(Suite &s, const std::string &prefix, int criterion, const L &loop, Embed embed,
                      const std::vector<IntPair> &grid)
{
	bool mult = true;
	std::string where;
	for (const auto &a : grid)
		for (const auto &b : grid)
			if (mult && !(embed(a) * embed(b) == embed(loop.mul(a, b)))) {
				mult = false;
				where = "fails at " + render(a) + ", " + render(b);
			}
	s.check(prefix + ".embed-multiplicative", criterion, mult,
	        mult ? std::to_string(grid.size() * grid.size()) + " pairs" : where);

	std::set<std::string> images;
	bool kernel = true;
	const IntPair e = loop.identity();
	for (const auto &a : grid) {
		const NSeries im = embed(a);
		images.insert(render(im));
		if ((im == NSeries::constant(1, im.truncation(), im.mode())) != (a == e))
			kernel = false;
	}
	const bool injective = images.size() == grid.size() && kernel;
	s.check(prefix + ".embed-injective", criterion, injective,
	        std::to_string(images.size()) + " distinct images of " + std::to_string(grid.size()) +
	            " points; only (0,0) maps to 1");
}

SuiteReport suite_prop3(const SuiteOptions &o)
{
	Suite s("prop3");
	const IntPairCommLoop loop;
	const auto grid = grid_pairs(o.grid);
	const int b = o.grid;

	bool ok = true;
	std::string d = axiom_scan(loop, grid, ok);
	s.check("prop3.loop-axioms", 1, ok, d);
	bool comm = true;
	for (const auto &x : grid)
		for (const auto &y : grid)
			comm = comm && loop.mul(x, y) == loop.mul(y, x);
	s.check("prop3.commutative", 1, comm, "x*y = y*x on the grid");

	embedding_checks(s, "prop3", 1, loop, embed_prop3, grid);
	const NSeries e01 = parse_series("1 + -1*(((x1*x1)*x1)*x1) + 1*((x1*x1)*(x1*x1))", 4, RewriteMode::Commutative);
	s.check("prop3.embed-(0,1)", 1, embed_prop3(pair_of(0, 1)) == e01, "(0,1) -> " + render(e01));

	// (0,1) - 1 = (4,0) \ (X^2X^2 - X^3X).
	const NSeries D = parse_series("1*((x1*x1)*(x1*x1)) + -1*(((x1*x1)*x1)*x1)", 4, RewriteMode::Commutative);
	const NSeries one = NSeries::constant(1, 4, RewriteMode::Commutative);
	const bool diff_ok = embed_prop3(pair_of(4, 1)) - embed_prop3(pair_of(4, 0)) == D;
	const bool div_ok = left_divide(embed_prop3(pair_of(4, 0)), D) == embed_prop3(pair_of(0, 1)) - one;
	const auto low = low_degree(D);
	const bool rel_ok = loop.mul(pair_of(4, 0), pair_of(0, 1)) == pair_of(4, 1);
	s.check("prop3.d4-witness", 1, diff_ok && div_ok && rel_ok && low && *low == 4,
	        "(4,1)-(4,0) = X^2X^2 - X^3X, (4,0)\\(X^2X^2 - X^3X) = (0,1) - 1, low degree " +
	            (low ? std::to_string(*low) : std::string("none")));

	// Weight 2: [L_(p,0), L_(r,0)](a,b) = (a, b + apr(p-r)/2).
	bool w2 = true;
	bool integral = true;
	std::string w2where;
	for (long p = -b; p <= b; ++p)
		for (long r = -b; r <= b; ++r) {
			const auto f = commutator(translation(pair_of(p, 0)), translation(pair_of(r, 0)));
			for (const auto &x : grid) {
				const Integer num = x.p * p * r * (p - r);
				if (num % 2 != 0)
					integral = false;
				const IntPair expect{x.p, x.q + num / 2};
				if (w2 && !(lmlt_apply(loop, f, x) == expect)) {
					w2 = false;
					w2where = "p=" + std::to_string(p) + " r=" + std::to_string(r) + " at " + render(x);
				}
			}
		}
	s.check("prop3.weight2", 2, w2 && integral,
	        w2 ? (integral ? "(a, b + apr(p-r)/2), apr(p-r) even" : "apr(p-r) odd somewhere") : w2where);

	// Weight 3: [L_(s,0), [L_(p,0), L_(r,0)]](a,b) = (a, b - prs(p-r)/2).
	bool w3 = true;
	std::string w3where;
	for (long sv = -b; sv <= b; ++sv)
		for (long p = -b; p <= b; ++p)
			for (long r = -b; r <= b; ++r) {
				const auto f = commutator(translation(pair_of(sv, 0)),
				                          commutator(translation(pair_of(p, 0)), translation(pair_of(r, 0))));
				const Integer shift = Integer(p * r * sv * (p - r)) / 2;
				for (const auto &x : grid)
					if (w3 && !(lmlt_apply(loop, f, x) == IntPair{x.p, x.q - shift})) {
						w3 = false;
						w3where = "s=" + std::to_string(sv) + " p=" + std::to_string(p) + " r=" +
						          std::to_string(r) + " at " + render(x);
					}
			}
	s.check("prop3.weight3", 2, w3, w3 ? "(a, b - prs(p-r)/2)" : w3where);

	// L_(p,q) = L_(p,0) L_(0,q) and L_(0,q) central.
	bool split = true;
	bool central = true;
	for (const auto &y : grid) {
		const LMltWord<IntPair> f{{IntPair{y.p, 0}, 1}, {IntPair{0, y.q}, 1}};
		for (const auto &x : grid)
			split = split && lmlt_apply(loop, f, x) == loop.mul(y, x);
	}
	for (long q = -b; q <= b; ++q)
		for (const auto &y : grid) {
			const auto f = commutator(translation(pair_of(0, q)), translation(y));
			for (const auto &x : grid)
				central = central && lmlt_apply(loop, f, x) == x;
		}
	s.check("prop3.translation-split", 2, split, "L_(p,q) = L_(p,0) L_(0,q)");
	s.check("prop3.centre", 2, central, "[L_(0,q), L_y] acts trivially");

	// Weight 4 on random samples of three bracket shapes.
	std::mt19937_64 rng(o.seed);
	bool w4 = true;
	std::string w4where;
	const int samples = 3000;
	for (int i = 0; i < samples && w4; ++i) {
		std::vector<LMltWord<IntPair>> t;
		for (int j = 0; j < 4; ++j)
			t.push_back(translation(pair_of(draw(rng, b), draw(rng, b))));
		const IntPair x = pair_of(draw(rng, b), draw(rng, b));
		const LMltWord<IntPair> shapes[] = {
		    commutator(t[0], commutator(t[1], commutator(t[2], t[3]))),
		    commutator(commutator(commutator(t[0], t[1]), t[2]), t[3]),
		    commutator(commutator(t[0], t[1]), commutator(t[2], t[3])),
		};
		for (const auto &f : shapes)
			if (!(lmlt_apply(loop, f, x) == x)) {
				w4 = false;
				w4where = "non-trivial at sample " + std::to_string(i);
			}
	}
	s.check("prop3.weight4-trivial", 2, w4, w4 ? std::to_string(3 * samples) + " sampled weight-4 commutators" : w4where);

	// Class exactly 3.
	const auto c2 = commutator(translation(pair_of(2, 0)), translation(pair_of(1, 0)));
	const auto c3 = commutator(translation(pair_of(1, 0)), c2);
	const IntPair y2 = lmlt_apply(loop, c2, pair_of(3, 0));
	const IntPair y3 = lmlt_apply(loop, c3, pair_of(1, 0));
	s.check("prop3.class-3-witnesses", 2, y2 == pair_of(3, 3) && y3 == pair_of(1, -1),
	        "[L_(2,0),L_(1,0)](3,0) = " + render(y2) + ", [L_(1,0),[L_(2,0),L_(1,0)]](1,0) = " + render(y3));
	return s.finish();
}

SuiteReport suite_prop4(const SuiteOptions &o)
{
	Suite s("prop4");
	const IntPairLoop loop;
	const auto grid = grid_pairs(o.grid);
	const int b = o.grid;

	bool ok = true;
	std::string d = axiom_scan(loop, grid, ok);
	s.check("prop4.loop-axioms", 3, ok, d);

	// [L_(p,0), L_(r,0)](a,b) = (a, b + C(p,2)r - C(r,2)p).
	bool w2 = true;
	std::string where;
	for (long p = -b; p <= b; ++p)
		for (long r = -b; r <= b; ++r) {
			const auto f = commutator(translation(pair_of(p, 0)), translation(pair_of(r, 0)));
			const Integer shift = binomial(p, 2) * r - binomial(r, 2) * p;
			for (const auto &x : grid)
				if (w2 && !(lmlt_apply(loop, f, x) == IntPair{x.p, x.q + shift})) {
					w2 = false;
					where = "p=" + std::to_string(p) + " r=" + std::to_string(r) + " at " + render(x);
				}
		}
	s.check("prop4.weight2", 3, w2, w2 ? "(a, b + C(p,2)r - C(r,2)p)" : where);

	// Weight-2 commutators of arbitrary translations are central.
	std::mt19937_64 rng(o.seed);
	bool central = true;
	const int samples = 3000;
	for (int i = 0; i < samples; ++i) {
		std::vector<LMltWord<IntPair>> t;
		for (int j = 0; j < 3; ++j)
			t.push_back(translation(pair_of(draw(rng, b), draw(rng, b))));
		const IntPair x = pair_of(draw(rng, b), draw(rng, b));
		const auto c = commutator(t[0], t[1]);
		central = central && lmlt_apply(loop, commutator(c, t[2]), x) == x &&
		          lmlt_apply(loop, commutator(t[2], c), x) == x;
	}
	s.check("prop4.weight2-central", 3, central, std::to_string(2 * samples) + " sampled weight-3 commutators");
	const IntPair y = lmlt_apply(loop, commutator(translation(pair_of(2, 0)), translation(pair_of(1, 0))), pair_of(0, 0));
	s.check("prop4.class-2-witness", 3, y == pair_of(0, 1), "[L_(2,0),L_(1,0)](0,0) = " + render(y));

	embedding_checks(s, "prop4", 3, loop, embed_prop4, grid);

	// (0,1) - 1 = (3,0) \ ((3,1) - (3,0)), with (3,1) - (3,0) in I^3.
	const NSeries u = NSeries::constant(1, 3, RewriteMode::NonCommutative) + NSeries::generator(1, 3, RewriteMode::NonCommutative);
	const NSeries D = (u * u) * u - u * (u * u);
	const bool rel = loop.mul(pair_of(2, 0), pair_of(1, 0)) == pair_of(3, 1) &&
	                 loop.mul(pair_of(1, 0), pair_of(2, 0)) == pair_of(3, 0) &&
	                 loop.mul(pair_of(3, 0), pair_of(0, 1)) == pair_of(3, 1);
	const bool diff = embed_prop4(pair_of(3, 1)) - embed_prop4(pair_of(3, 0)) == D;
	const NSeries one = NSeries::constant(1, 3, RewriteMode::NonCommutative);
	const bool div = left_divide(embed_prop4(pair_of(3, 0)), D) == embed_prop4(pair_of(0, 1)) - one;
	const auto low = low_degree(D);
	s.check("prop4.d3-witness", 3, rel && diff && div && low && *low >= 3,
	        "(3,1)-(3,0) = ((1+X)(1+X))(1+X) - (1+X)((1+X)(1+X)) = " + render(D));
	return s.finish();
}

/// A non-reduced word equal to w in the free loop: one expansion at the
/// root by a loop law with auxiliary word u.
LoopTerm expand(const LoopTerm &w, const LoopTerm &u, int pattern)
{
	using T = LoopTerm;
	switch (pattern % 8) {
	case 0: return T::ldiv(u, T::mul(u, w));
	case 1: return T::mul(u, T::ldiv(u, w));
	case 2: return T::rdiv(T::mul(w, u), u);
	case 3: return T::mul(T::rdiv(w, u), u);
	case 4: return T::rdiv(u, T::ldiv(w, u));
	case 5: return T::ldiv(T::rdiv(u, w), u);
	case 6: return T::mul(T::identity(), w);
	default: return T::mul(w, T::identity());
	}
}

/// Magnus image of `t`, recursing until a word already known to `eval`
/// (an input word or the auxiliary word) is reached; intermediates are not
/// cached.
NSeries magnus_transient(const LoopTerm &t, const std::set<LoopTerm> &known, MagnusEvaluator &eval)
{
	if (!t.is_binary() || known.count(t))
		return eval(t);
	const NSeries l = magnus_transient(t.left(), known, eval);
	const NSeries r = magnus_transient(t.right(), known, eval);
	switch (t.kind()) {
	case TermKind::Mul: return mul(l, r);
	case TermKind::LDiv: return left_divide(l, r);
	default: return right_divide(l, r);
	}
}

SuiteReport suite_lemma1(const SuiteOptions &o)
{
	Suite s("lemma1");
	const int n = o.degree.value_or(8);
	const int leaves = o.leaves.value_or(4);
	std::mt19937_64 rng(o.seed);
	for (RewriteMode mode : modes(o)) {
		const std::string tag = mode_tag(mode);
		const auto words = enumerate_reduced(2, leaves, mode);
		std::vector<LoopTerm> aux;
		for (const auto &w : words)
			if (w.leaf_count() <= 2 && !w.is_identity())
				aux.push_back(w);

		MagnusEvaluator eval(MagnusConfig{2, n, mode, std::nullopt});
		bool sound = true;
		std::string where;
		for (std::size_t i = 0; i < words.size(); ++i) {
			const LoopTerm &w = words[i];
			const LoopTerm &u = aux[rng() % aux.size()];
			const LoopTerm v = expand(w, u, static_cast<int>(i));
			if (!sound)
				continue;
			if (!(reduce(v, mode) == w) || !(magnus_transient(v, {w, u}, eval) == eval(w))) {
				sound = false;
				where = render(v) + " vs " + render(w);
			}
		}
		s.check("lemma1.reduce-sound." + tag, 4, sound,
		        sound ? std::to_string(words.size()) + " words, magnus(v) = magnus(reduce(v)) = magnus(w) at N=" +
		                    std::to_string(n)
		              : where);

		MagnusEvaluator mod(MagnusConfig{2, 4, mode, exp_base(4, mode)});
		bool grouplike = true;
		for (const auto &w : words)
			if (grouplike && !is_grouplike(mod(w))) {
				grouplike = false;
				where = render(w);
			}
		s.check("lemma1.grouplike." + tag, 4, grouplike,
		        grouplike ? std::to_string(words.size()) + " modified images group-like at N=4" : "not group-like: " + where);
	}
	if (!o.mode || *o.mode == RewriteMode::NonCommutative) {
		const MagnusConfig cfg{3, n, RewriteMode::NonCommutative, std::nullopt};
		const auto dc = dimension_degree(parse_term("(x2*x1)\\(x1*x2)", 3), cfg);
		const auto da = dimension_degree(parse_term("((x1*x2)*x3)/(x1*(x2*x3))", 3), cfg);
		s.check("lemma1.commutator-degree", 4, dc.degree == 2 && !dc.lower_bound,
		        "(x2*x1)\\(x1*x2): degree " + std::to_string(dc.degree));
		s.check("lemma1.associator-degree", 4, da.degree == 3 && !da.lower_bound,
		        "((x1*x2)*x3)/(x1*(x2*x3)): degree " + std::to_string(da.degree));
	}
	return s.finish();
}

SuiteReport suite_injectivity(const SuiteOptions &o)
{
	Suite s("injectivity");
	const int n = o.degree.value_or(8);
	const int leaves = o.leaves.value_or(4);
	for (RewriteMode mode : modes(o)) {
		const CollisionReport r = injectivity_scan(leaves, MagnusConfig{2, n, mode, std::nullopt});
		std::string detail = std::to_string(r.words) + " words, " + std::to_string(r.collisions.size()) +
		                     " collisions at N=" + std::to_string(n);
		if (!r.collisions.empty())
			detail += "; first: " + render(r.collisions.front().first) + " = " + render(r.collisions.front().second);
		s.check("injectivity.scan." + mode_tag(mode), 5, r.collisions.empty(), detail);
	}
	return s.finish();
}

SuiteReport suite_lemma_first(const SuiteOptions &o)
{
	Suite s("lemma-first");
	for (int n = 2; n <= 4; ++n) {
		const int N = o.degree.value_or(n + 2);
		if (N < n) {
			s.check("lemma-first.n" + std::to_string(n), 6, false, "N < n");
			continue;
		}
		const LemmaFirstReport r = lemma_first_check(n, N);
		std::string detail = "low degree " + (r.low_degree ? std::to_string(*r.low_degree) : "> N") +
		                     ", right-normed " + (r.right_normed ? "yes" : "no") + ", bridge " +
		                     (r.associative_bridge ? "yes" : "no") + ", leading " + r.leading_term;
		s.check("lemma-first.n" + std::to_string(n), 6, r.passed(), detail);
	}
	return s.finish();
}

SuiteReport suite_prop5(const SuiteOptions &)
{
	Suite s("prop5");
	for (int n = 3; n <= 6; ++n) {
		const Prop5Witness w = prop5_witness(n);
		s.check("prop5.n" + std::to_string(n), 7, w.coefficient == 1 && w.alpha_is_x1,
		        "coefficient of <x2,x1>: " + w.coefficient.get_str() + ", alpha(y) = x1: " +
		            (w.alpha_is_x1 ? "yes" : "no"));
	}
	return s.finish();
}

SuiteReport suite_lemma6(const SuiteOptions &o)
{
	Suite s("lemma6");
	const int leaves = o.leaves.value_or(4);
	for (RewriteMode mode : modes(o)) {
		const Lemma6Scan r = lemma6_scan(2, leaves, mode);
		std::string detail = std::to_string(r.ordered_pairs) + " pairs with equal alpha, " +
		                     std::to_string(r.hypotheses_hold) + " satisfy the hypotheses, " +
		                     std::to_string(r.witnesses) + " witnesses, " + std::to_string(r.counterexamples.size()) +
		                     " counterexamples";
		if (!r.counterexamples.empty())
			detail += "; first: " + render(r.counterexamples.front().first) + ", " +
			          render(r.counterexamples.front().second);
		s.check("lemma6.scan." + mode_tag(mode), 8, r.counterexamples.empty() && r.hypotheses_hold > 0, detail);
	}
	return s.finish();
}

SuiteReport suite_hc1(const SuiteOptions &o)
{
	Suite s("hc1");
	const int leaves = o.leaves.value_or(4);
	for (RewriteMode mode : modes(o)) {
		const Corollary1Scan r = corollary1_scan(2, leaves, mode);
		s.check("hc1.scan." + mode_tag(mode), 9, r.counterexamples.empty() && r.applicable > 0,
		        std::to_string(r.sets) + " component-closed sets, " + std::to_string(r.applicable) +
		            " with non-injective alpha, " + std::to_string(r.counterexamples.size()) + " counterexamples");
	}
	return s.finish();
}

SuiteReport suite_hopf_higman(const SuiteOptions &o)
{
	Suite s("hopf-higman");
	const int n = o.degree.value_or(4);
	const int leaves = o.leaves.value_or(3);
	for (RewriteMode mode : modes(o)) {
		const std::string tag = mode_tag(mode);
		const NSeries e6 = exp_base(6, mode);
		s.check("hopf.exp-grouplike." + tag, 10, is_grouplike(e6), "exp base group-like at N=6");
		const NSeries one6 = NSeries::constant(1, 6, mode);
		const NSeries x6 = NSeries::generator(1, 6, mode);
		const NSeries l6 = log_base(e6);
		const bool log_exp = eval_univariate(l6, e6 - one6, one6) == x6;
		const bool exp_log = eval_univariate(e6, l6, one6) == one6 + x6;
		s.check("hopf.log-exp." + tag, 10, log_exp && exp_log, "log_e(e(X)) = X and e(log_e(1+X)) = 1+X at N=6");

		const MagnusConfig cfg{2, n, mode, exp_base(n, mode)};
		MagnusEvaluator M(cfg);
		const auto words = enumerate_reduced(2, leaves, mode);
		bool ts = true;
		std::size_t pairs = 0;
		for (const auto &w : words)
			for (const auto &w2 : words)
				if (w.leaf_count() <= 2 && w2.leaf_count() <= 2) {
					++pairs;
					ts = ts && t_star(M(w), M(w2), n) == exp(t_map(M(w), M(w2), n));
				}
		s.check("hh.tstar-exp." + tag, 10, ts,
		        std::to_string(pairs) + " group-like pairs, t*(g(x)g') = exp(t(g(x)g')) at N=" + std::to_string(n));

		MagnusTildeEvaluator MT(cfg);
		const PhiMap phi(cfg);
		bool bridge = true;
		bool iff = true;
		std::string where;
		for (const auto &w : words)
			if (bridge && !(phi(M(w)) == MT(w))) {
				bridge = false;
				where = render(w);
			}
		for (std::size_t i = 0; i < words.size(); ++i)
			for (std::size_t j = i + 1; j < words.size(); ++j)
				iff = iff && ((M(words[i]) == M(words[j])) == (MT(words[i]) == MT(words[j])));
		s.check("hh.phi-bridge." + tag, 10, bridge && iff,
		        bridge ? std::to_string(words.size()) + " words, phi(M'(w)) = M~'(w); equal M' iff equal M~'"
		               : "differs at " + where);

		const NSeries g1 = M(parse_term("x1", 2));
		const NSeries g2 = M(parse_term("x2", 2));
		const NSeries g3 = M(parse_term("x1*x2", 2));
		const std::vector<TPoly> gens{exp(TPoly::symbol(TSymbol::generator(1), n)),
		                              exp(TPoly::symbol(TSymbol::generator(2), n)), t_star(g1, g2, n),
		                              t_star(g3, g1, n)};
		const LemmaAResult la = lemma_a_check(gens, 2);
		s.check("hh.lemma-a." + tag, 10, la.passed(),
		        la.passed() ? "no relation found up to bound 2 among " + std::to_string(la.vectors_checked) +
		                          " non-zero exponent vectors"
		                    : "relation or non-commuting generators found");

		bool comult = true;
		const int nc = std::min(n, 3);
		std::vector<Monomial> monos{Monomial()};
		for (const auto &w : enumerate_reduced(2, 2, mode))
			for (int d = 1; d <= nc; ++d)
				for (const auto &kv : M(w).homogeneous(d))
					monos.push_back(kv.first);
		std::sort(monos.begin(), monos.end());
		monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
		for (const auto &a : monos)
			for (const auto &b : monos)
				if (a.degree() + b.degree() <= nc)
					comult = comult && t_star_is_comultiplicative(a, b, mode == RewriteMode::Commutative, nc);
		s.check("hh.tstar-coalgebra." + tag, 0, comult,
		        std::to_string(monos.size()) + " monomials, t* comultiplicative at N=" + std::to_string(nc));
		if (mode == RewriteMode::Commutative) {
			bool c = true;
			for (const auto &w : words)
				for (const auto &w2 : words)
					if (w.leaf_count() + w2.leaf_count() <= 3)
						c = c && mixed_mul(MT(w), MT(w2)) == mixed_mul(MT(w2), MT(w));
			s.check("hh.mixed-commutative", 0, c, "mixed product commutative on M~' images");
		}
	}
	return s.finish();
}

using SuiteFn = SuiteReport (*)(const SuiteOptions &);

const std::vector<std::pair<std::string, SuiteFn>> &registry()
{
	static const std::vector<std::pair<std::string, SuiteFn>> r{
	    {"prop3", suite_prop3},   {"prop4", suite_prop4}, {"lemma1", suite_lemma1},
	    {"injectivity", suite_injectivity}, {"lemma-first", suite_lemma_first}, {"prop5", suite_prop5},
	    {"lemma6", suite_lemma6}, {"hc1", suite_hc1},     {"hopf-higman", suite_hopf_higman},
	};
	return r;
}

} // namespace

const std::vector<std::string> &suite_names()
{
	static const std::vector<std::string> names = [] {
		std::vector<std::string> v;
		for (const auto &kv : registry())
			v.push_back(kv.first);
		return v;
	}();
	return names;
}

SuiteReport run_suite(const std::string &name, const SuiteOptions &opts)
{
	for (const auto &[n, fn] : registry())
		if (n == name) {
			const auto t0 = std::chrono::steady_clock::now();
			SuiteReport r = fn(opts);
			r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
			return r;
		}
	throw DomainError("unknown suite '" + name + "'");
}

std::string to_text(const SuiteReport &r, bool timing)
{
	std::ostringstream out;
	std::size_t pass = 0;
	for (const auto &c : r.checks) {
		out << "  " << to_string(c.status) << " " << c.id << ": " << c.detail << "\n";
		pass += c.status == CheckStatus::Pass;
	}
	out << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << pass << "/" << r.checks.size()
	    << " checks)";
	if (timing)
		out << " in " << r.seconds << " s";
	out << "\n";
	return out.str();
}

namespace {

nlohmann::ordered_json report_json(const SuiteReport &r, bool timing)
{
	nlohmann::ordered_json j;
	j["suite"] = r.suite;
	j["passed"] = r.passed();
	auto checks = nlohmann::ordered_json::array();
	for (const auto &c : r.checks)
		checks.push_back({{"id", c.id}, {"criterion", c.criterion}, {"status", to_string(c.status)}, {"detail", c.detail}});
	j["checks"] = std::move(checks);
	if (timing)
		j["seconds"] = r.seconds;
	return j;
}

} // namespace

std::string to_json(const SuiteReport &r, bool timing)
{
	return report_json(r, timing).dump(2);
}

std::string to_json(const std::vector<SuiteReport> &reports, bool timing)
{
	nlohmann::ordered_json j;
	bool all = true;
	auto arr = nlohmann::ordered_json::array();
	for (const auto &r : reports) {
		all = all && r.passed();
		arr.push_back(report_json(r, timing));
	}
	j["passed"] = all;
	j["suites"] = std::move(arr);
	return j.dump(2);
}

} // namespace loopmagnus
