#pragma once

// Command-line front end: argument parsing into a JobSpec, dispatch, and the
// on-disk result cache.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hldecomp/decomposition.hpp"
#include "hldecomp/functional_oracle.hpp"
#include "hldecomp/hl_category.hpp"

namespace hldecomp::cli {

enum class Command { Decompose, Oracle, Crosscheck, HlInfo, Character };

struct JobSpec {
  Command command = Command::Decompose;
  int n = 0;
  /// From --pi, or derived from --kappa/--interval.
  std::optional<DrinfeldWord> word;
  std::optional<HeightFunction> kappa;
  std::optional<IntervalJ> interval;
  std::optional<XiTuple> xi;
  std::optional<Weight> lambda;
  std::optional<RootLatticeElement> gamma;
  OracleMode mode = OracleMode::Pair;
  ReportFormat format = ReportFormat::Plain;
  std::optional<std::string> cache_dir;
  bool relaxed_empty_groups = false;
  /// character: V(lambda)^{(x) power} when set.
  std::optional<int> power;
};

struct ParseResult {
  std::optional<JobSpec> job;
  /// 0 for a job or --help, 2 for an input error.
  int exit_code = 0;
  /// Diagnostic or help text.
  std::string message;
};

/// `args` excludes the program name. HLDECOMP_CACHE, when set and non-empty,
/// replaces --cache.
ParseResult parse_args(const std::vector<std::string>& args);

/// Exit status: 0 success, 1 internal inconsistency or crosscheck mismatch,
/// 2 input error.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Input parsers; each throws InputError.
DrinfeldWord parse_word(int n, const std::string& text);
std::vector<std::int64_t> parse_int_list(const std::string& text);
IntervalJ parse_interval(const std::string& text);
/// "i-j:v,..."; every positive root must be listed. Result is normalized.
XiTuple parse_xi(int n, const std::string& text);

/// Canonical cache key of a decompose or oracle job.
std::string cache_key(const JobSpec& job);

std::optional<GradedDecomposition> cache_lookup(const std::string& dir, const std::string& key,
                                                std::ostream& warn);
/// Atomic write (temp file then rename). Returns false, after a warning, on IO
/// failure.
bool cache_store(const std::string& dir, const std::string& key, const GradedDecomposition& dec,
                 std::ostream& warn);

}  // namespace hldecomp::cli
