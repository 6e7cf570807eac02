#pragma once

// Named verification suites. Each check carries the acceptance criterion it
// supports (0 when it supports none directly).

#include "loopmagnus/term.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace loopmagnus {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
	std::string id;
	int criterion = 0;
	CheckStatus status = CheckStatus::Pass;
	std::string detail; // witness, count, or counterexample
};

struct SuiteReport {
	std::string suite;
	std::vector<CheckResult> checks;
	double seconds = 0;

	bool passed() const;
};

struct SuiteOptions {
	std::optional<int> degree;      // suite default when absent
	std::optional<int> leaves;      // suite default when absent
	int grid = 5;                   // integer box [-grid, grid]
	std::optional<RewriteMode> mode; // absent: every mode the suite covers
	std::uint64_t seed = 20240517;
};

/// prop3, prop4, lemma1, injectivity, lemma-first, prop5, lemma6, hc1,
/// hopf-higman.
const std::vector<std::string> &suite_names();

/// Throws DomainError for an unknown name.
SuiteReport run_suite(const std::string &name, const SuiteOptions &opts);

std::string to_text(const SuiteReport &r, bool timing = false);
/// JSON object for one report.
std::string to_json(const SuiteReport &r, bool timing = false);
/// JSON array wrapper with an overall flag.
std::string to_json(const std::vector<SuiteReport> &reports, bool timing = false);

} // namespace loopmagnus
