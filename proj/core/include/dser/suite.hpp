#pragma once

// The verification runner behind the `verify` command: configuration,
// case scheduling, aggregation and report emission.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dser/identities.hpp"

namespace dser {

enum class Mode { Symbolic, Random, Both };
enum class Format { Json, Markdown };

struct Config {
  std::string ring = "zmod:10007";
  int m = 4;
  int n = 3;
  std::uint64_t seed = 1;
  int trials = 50;
  std::vector<LemmaId> lemmas;  // empty after parsing is a ConfigError
  Mode mode = Mode::Random;
  Format format = Format::Json;
  std::string out;  // empty: stdout
  Fault fault = Fault::None;
  unsigned threads = 1;
};

std::string_view to_string(Mode m);
std::string_view to_string(Format f);

/// Parses `verify [flags]` (the leading subcommand word is optional).
/// DSER_THREADS caps the worker count. Throws Error(ConfigError).
/// Returns nullopt after printing help or the version to `out`.
std::optional<Config> parse_config(const std::vector<std::string>& args, std::ostream& out);

struct BranchSummary {
  std::string predicate;
  std::size_t cases = 0;
  std::size_t matches_both = 0, proof_only = 0, statement_only = 0, neither = 0, statement_absent = 0;
};

struct LemmaSummary {
  LemmaId id;
  std::string hypothesis;
  std::size_t tuples = 0;
  std::vector<BranchSummary> branches;
  std::vector<std::string> unreachable;
  std::size_t star_checks = 0, star_failures = 0;
};

/// One Verdict in printable form.
struct VerdictRecord {
  LemmaId lemma;
  std::string indices, branch, origin;
  int trial = -1;  // -1 for symbolic cases
  Status status;
  std::string lhs;
  std::optional<std::string> statement, proof;
  std::optional<std::string> scalars;
};

struct Report {
  Config config;
  std::string version, timestamp;
  std::vector<LemmaSummary> lemmas;
  std::vector<VerdictRecord> failures;  // MatchesNeither only, capped
  std::size_t failure_count = 0;
  std::size_t verdicts = 0;

  bool passed() const;
};

inline constexpr std::size_t kMaxFailureDumps = 25;

/// Throws ConfigError on an unusable configuration and RankTooSmall when m
/// is below a selected lemma's arity.
Report verify_suite(const Config& config);

std::string to_json(const Report& r);
std::string to_markdown(const Report& r);

/// Full command: parse, verify, emit. Returns 0 (no MatchesNeither),
/// 1 (some MatchesNeither) or 2 (configuration error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dser
