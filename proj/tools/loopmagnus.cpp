// Command-line front end. Exit codes: 0 success, 1 a check failed,
// 2 usage or input error, 3 resource cap exceeded.

#include "loopmagnus/error.hpp"
#include "loopmagnus/higman.hpp"
#include "loopmagnus/hopf.hpp"
#include "loopmagnus/loops.hpp"
#include "loopmagnus/magnus.hpp"
#include "loopmagnus/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

using namespace loopmagnus;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct Globals {
	int degree = 6;
	bool commutative = false;
	bool json = false;
	int grid = 5;
	int leaves = 4;
	std::uint64_t seed = 20240517;
	CLI::Option *degree_opt = nullptr;
	CLI::Option *leaves_opt = nullptr;

	RewriteMode mode() const { return commutative ? RewriteMode::Commutative : RewriteMode::NonCommutative; }
};

/// Generator indices up to 255 are accepted; the alphabet is inferred.
LoopTerm read_term(const std::string &text)
{
	return parse_term(text, 255);
}

MagnusConfig make_config(const Globals &g, int alphabet, const std::string &base)
{
	MagnusConfig cfg{alphabet, g.degree, g.mode(), std::nullopt};
	if (base == "exp")
		cfg.base = exp_base(g.degree, g.mode());
	else if (!base.empty())
		cfg.base = parse_series(base, g.degree, g.mode());
	return cfg;
}

int cmd_reduce(const Globals &g, const std::string &text)
{
	const LoopTerm r = reduce(read_term(text), g.mode());
	if (g.json) {
		nlohmann::ordered_json j{{"input", text}, {"reduced", render(r)}};
		std::cout << j.dump(2) << "\n";
	} else {
		std::cout << render(r) << "\n";
	}
	return kOk;
}

int cmd_magnus(const Globals &g, const std::string &text, const std::string &base)
{
	const LoopTerm w = read_term(text);
	const NSeries s = magnus(w, make_config(g, w.max_generator(), base));
	if (g.json) {
		nlohmann::ordered_json j{{"word", render(w)}, {"truncation", g.degree},
		                         {"map", base.empty() ? "classical" : "modified"}, {"series", render(s)}};
		std::cout << j.dump(2) << "\n";
	} else {
		std::cout << render(s) << "\n";
	}
	return kOk;
}

int cmd_dimension(const Globals &g, const std::string &text, std::optional<int> n, const std::string &base)
{
	const LoopTerm w = read_term(text);
	const MagnusConfig cfg = make_config(g, w.max_generator(), base);
	const DimensionDegree d = dimension_degree(w, cfg);
	std::optional<Membership> member;
	if (n)
		member = in_dimension_subloop(w, *n, cfg);
	if (g.json) {
		nlohmann::ordered_json j{{"word", render(w)}, {"truncation", g.degree}, {"degree", d.degree},
		                         {"lower_bound", d.lower_bound}};
		if (n) {
			j["n"] = *n;
			j["member"] = to_string(*member);
		}
		std::cout << j.dump(2) << "\n";
	} else {
		const std::string k = std::to_string(d.degree);
		if (d.lower_bound)
			std::cout << "degree >= " << k << ": in D_" << k << "; terms vanish up to N=" << g.degree
			          << ", raise N to locate it\n";
		else
			std::cout << "degree " << k << ": in D_" << k << ", not in D_" << d.degree + 1 << "\n";
		if (member && *member != Membership::Yes)
			std::cout << "in D_" << *n << ": " << to_string(*member) << "\n";
	}
	return member && *member != Membership::Yes ? kCheckFailed : kOk;
}

int cmd_scan(const Globals &g, int alphabet, const std::string &base)
{
	const CollisionReport r = injectivity_scan(g.leaves, make_config(g, alphabet, base));
	if (g.json) {
		std::cout << r.to_json() << "\n";
	} else {
		std::cout << r.words << " reduced words, " << r.collisions.size() << " collisions at N=" << g.degree << "\n";
		for (const auto &c : r.collisions)
			std::cout << "  " << render(c.first) << " = " << render(c.second)
			          << " (collision at truncation - raise N)\n";
	}
	return r.collisions.empty() ? kOk : kCheckFailed;
}

int cmd_loop_eval(const Globals &g, const std::string &loop, const std::string &expr)
{
	const IntPair v = eval_pair_expression(expr, loop == "prop3" ? PairLoopKind::Prop3 : PairLoopKind::Prop4);
	if (g.json) {
		nlohmann::ordered_json j{{"loop", loop}, {"p", v.p.get_str()}, {"q", v.q.get_str()}};
		std::cout << j.dump(2) << "\n";
	} else {
		std::cout << render(v) << "\n";
	}
	return kOk;
}

int cmd_higman_delta(const Globals &g, const std::string &target, const std::string &text)
{
	const std::string prefix = "abelian:";
	if (target.rfind(prefix, 0) != 0)
		throw DomainError("--target must be abelian:n");
	int n = 0;
	try {
		n = std::stoi(target.substr(prefix.size()));
	} catch (const std::exception &) {
		throw DomainError("--target must be abelian:n");
	}
	const LoopTerm w = read_term(text);
	if (w.max_generator() > n)
		throw DomainError("the word uses x" + std::to_string(w.max_generator()) + " but the target has rank " +
		                  std::to_string(n));
	const AbelianHigman loop(FreeAbelianGroup(n), g.mode());
	const auto d = delta(loop, w, abelianization(n));
	nlohmann::ordered_json j;
	j["word"] = render(w);
	j["alpha"] = render(d.l);
	j["psi"] = render(d.a);
	auto terms = nlohmann::ordered_json::array();
	for (const auto &[s, c] : d.a.terms())
		terms.push_back({{"symbol", render(s)}, {"coefficient", c.get_str()}});
	j["psi_terms"] = std::move(terms);
	std::cout << j.dump(2) << "\n";
	return kOk;
}

int cmd_verify(const Globals &g, std::vector<std::string> suites, bool all, bool timing)
{
	if (all)
		suites = suite_names();
	if (suites.empty())
		throw CLI::ValidationError("verify", "give --suite NAME or --all");
	SuiteOptions opts;
	if (g.degree_opt->count())
		opts.degree = g.degree;
	if (g.leaves_opt->count())
		opts.leaves = g.leaves;
	opts.grid = g.grid;
	opts.seed = g.seed;
	if (g.commutative)
		opts.mode = RewriteMode::Commutative;
	std::vector<SuiteReport> reports;
	for (const auto &name : suites)
		reports.push_back(run_suite(name, opts));
	bool ok = true;
	for (const auto &r : reports)
		ok = ok && r.passed();
	if (g.json) {
		std::cout << (reports.size() == 1 ? to_json(reports.front(), timing) : to_json(reports, timing)) << "\n";
	} else {
		for (const auto &r : reports)
			std::cout << to_text(r, timing);
		if (reports.size() > 1)
			std::cout << (ok ? "all suites PASS" : "some suites FAIL") << "\n";
	}
	return ok ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Free loops, non-associative Magnus maps and exact checks of their identities"};
	app.require_subcommand(1);
	app.fallthrough();
	Globals g;
	g.degree_opt = app.add_option("--degree", g.degree, "truncation degree N")->check(CLI::Range(1, 64));
	app.add_flag("--commutative", g.commutative, "commutative loops and algebras");
	app.add_flag("--json", g.json, "JSON output");
	app.add_option("--grid", g.grid, "integer box [-B, B] for loop checks")->check(CLI::Range(0, 1000));
	g.leaves_opt = app.add_option("--leaves", g.leaves, "maximal number of leaves")->check(CLI::Range(1, 12));
	app.add_option("--seed", g.seed, "seed for sampled checks");

	std::string term;
	std::string base;
	std::optional<int> n;
	int alphabet = 2;
	std::string loop = "prop3";
	std::string target;
	std::vector<std::string> suites;
	bool all = false;
	bool timing = false;

	auto *reduce_cmd = app.add_subcommand("reduce", "reduced form of a word");
	reduce_cmd->add_option("term", term, "loop word")->required();

	auto *magnus_cmd = app.add_subcommand("magnus", "truncated Magnus image of a word");
	magnus_cmd->add_option("term", term, "loop word")->required();
	magnus_cmd->add_option("--base", base, "'exp' or a series in x1 for the modified map");

	auto *dim_cmd = app.add_subcommand("dimension", "dimension degree of a word");
	dim_cmd->add_option("term", term, "loop word")->required();
	dim_cmd->add_option("--n", n, "also decide membership in D_n")->check(CLI::Range(1, 1000));
	dim_cmd->add_option("--base", base, "'exp' or a series in x1 for the modified map");

	auto *scan_cmd = app.add_subcommand("scan", "search for collisions of the Magnus map");
	scan_cmd->add_option("--alphabet", alphabet, "number of generators")->check(CLI::Range(1, 255));
	scan_cmd->add_option("--base", base, "'exp' or a series in x1 for the modified map");

	auto *eval_cmd = app.add_subcommand("loop-eval", "evaluate an expression in an integer-pair loop");
	eval_cmd->add_option("--loop", loop, "prop3 or prop4")->check(CLI::IsMember({"prop3", "prop4"}));
	eval_cmd->add_option("expr", term, "expression")->required();

	auto *delta_cmd = app.add_subcommand("higman-delta", "(alpha(w), psi(w)) in Higman's loop");
	delta_cmd->add_option("--target", target, "abelian:n")->required();
	delta_cmd->add_option("term", term, "loop word")->required();

	auto *verify_cmd = app.add_subcommand("verify", "run verification suites");
	verify_cmd->add_option("--suite", suites, "suite name (repeatable)")->check(CLI::IsMember(suite_names()));
	verify_cmd->add_flag("--all", all, "run every suite");
	verify_cmd->add_flag("--timing", timing, "report wall time");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		const int rc = app.exit(e);
		return rc == 0 ? kOk : kUsage;
	}

	if (const char *cap = std::getenv("LOOPMAGNUS_MAX_TERMS")) {
		try {
			set_max_series_terms(std::stoull(cap));
		} catch (const std::exception &) {
			std::cerr << "error: LOOPMAGNUS_MAX_TERMS must be a non-negative integer\n";
			return kUsage;
		}
	}

	try {
		if (*reduce_cmd)
			return cmd_reduce(g, term);
		if (*magnus_cmd)
			return cmd_magnus(g, term, base);
		if (*dim_cmd)
			return cmd_dimension(g, term, n, base);
		if (*scan_cmd)
			return cmd_scan(g, alphabet, base);
		if (*eval_cmd)
			return cmd_loop_eval(g, loop, term);
		if (*delta_cmd)
			return cmd_higman_delta(g, target, term);
		if (*verify_cmd)
			return cmd_verify(g, suites, all, timing);
	} catch (const ResourceLimit &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kResource;
	} catch (const CLI::Error &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kUsage;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kUsage;
	}
	return kUsage;
}
