#include "dser/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ctime>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "dser/ring_descriptor.hpp"

namespace dser {

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Symbolic: return "symbolic";
    case Mode::Random: return "random";
    case Mode::Both: return "both";
  }
  return "?";
}

std::string_view to_string(Format f) { return f == Format::Json ? "json" : "markdown"; }

bool Report::passed() const {
  if (failure_count != 0) return false;
  for (const auto& l : lemmas)
    if (l.star_failures != 0) return false;
  return true;
}

namespace {

std::vector<LemmaId> parse_lemma_filter(const std::vector<std::string>& items) {
  std::vector<LemmaId> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      if (tok == "all" || tok == "ALL") {
        out.assign(kAllLemmas.begin(), kAllLemmas.end());
        continue;
      }
      try {
        out.push_back(parse_lemma(tok));
      } catch (const Error& e) {
        raise(ErrorCode::ConfigError, "unknown lemma '" + tok + "'");
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

unsigned thread_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("DSER_THREADS");
  if (!env || !*env) return hw;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) raise(ErrorCode::ConfigError, std::string("DSER_THREADS must be a positive integer, got '") + env + "'");
  return static_cast<unsigned>(std::min<long>(v, 64));
}

}  // namespace

std::optional<Config> parse_config(const std::vector<std::string>& args_in, std::ostream& out) {
  std::vector<std::string> args = args_in;
  if (!args.empty() && args.front() == "verify") args.erase(args.begin());

  Config cfg;
  std::vector<std::string> lemma_items{"all"};
  std::string mode = "random", format = "json", fault = "none";
  long long m = cfg.m, n = cfg.n, trials = cfg.trials;

  CLI::App app{"Checks the DSER commutator identities against brute-force matrix products", "verify"};
  app.set_version_flag("--version", std::string(DSER_VERSION));
  app.add_option("--lemma", lemma_items, "lemma ids (L01..L13, C01..C07, R01), comma separated, or 'all'")
      ->delimiter(',');
  app.add_option("--ring", cfg.ring, "rational | zmod:<p> | poly:<vars>[/<inverted>]");
  app.add_option("--m", m, "rank of P");
  app.add_option("--n", n, "rank of Q");
  app.add_option("--seed", cfg.seed, "64-bit seed");
  app.add_option("--trials", trials, "random instances per index tuple");
  app.add_option("--mode", mode, "symbolic | random | both");
  app.add_option("--format", format, "json | markdown");
  app.add_option("--out", cfg.out, "write the report here instead of stdout");
  app.add_option("--inject-fault", fault, "none | l01-sign (negative control)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForVersion&) {
    out << DSER_VERSION << "\n";
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    raise(ErrorCode::ConfigError, e.what());
  }

  cfg.lemmas = parse_lemma_filter(lemma_items);
  if (cfg.lemmas.empty()) raise(ErrorCode::ConfigError, "empty lemma filter");

  if (mode == "symbolic") cfg.mode = Mode::Symbolic;
  else if (mode == "random") cfg.mode = Mode::Random;
  else if (mode == "both") cfg.mode = Mode::Both;
  else raise(ErrorCode::ConfigError, "unknown mode '" + mode + "'");

  if (format == "json") cfg.format = Format::Json;
  else if (format == "markdown" || format == "md") cfg.format = Format::Markdown;
  else raise(ErrorCode::ConfigError, "unknown format '" + format + "'");

  cfg.fault = parse_fault(fault);

  if (m < 1 || m > 9) raise(ErrorCode::ConfigError, "--m must be in 1..9");
  if (n < 1 || n > 9) raise(ErrorCode::ConfigError, "--n must be in 1..9");
  if (trials < 0) raise(ErrorCode::ConfigError, "--trials must be non-negative");
  cfg.m = static_cast<int>(m);
  cfg.n = static_cast<int>(n);
  cfg.trials = static_cast<int>(trials);
  if (cfg.mode != Mode::Symbolic && cfg.trials < 1) raise(ErrorCode::ConfigError, "random mode needs --trials >= 1");

  auto ring = parse_ring(cfg.ring);  // ConfigError on bad descriptors
  if (cfg.mode != Mode::Symbolic && std::holds_alternative<LocalizedPolyRing>(ring))
    raise(ErrorCode::ConfigError, "random sampling needs --ring rational or zmod:<p>");
  cfg.threads = thread_cap();
  return cfg;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t pack(const Indices& x) {
  std::uint64_t v = 0;
  for (int t : {x.i, x.j, x.k, x.l, x.p, x.q, x.r, x.s}) v = (v << 4) | static_cast<std::uint64_t>(t & 0xf);
  return v;
}

struct JobResult {
  std::vector<std::size_t> status_counts = std::vector<std::size_t>(5, 0);
  std::vector<VerdictRecord> failures;  // at most kMaxFailureDumps
  std::size_t failure_count = 0;
  std::size_t star_checks = 0, star_failures = 0;
};

struct Job {
  std::size_t lemma_slot;
  CaseSkeleton skel;
  bool symbolic;
};

template <Ring R>
std::string scalar_text(const IdentityCase<R>& c) {
  if (!c.scalars) return {};
  const char* names = "abcdef";
  std::string out;
  for (int s = 0; s < 6; ++s) {
    if (c.spec().scalars == ScalarShape::Pair && s >= 4) break;
    if (s) out += ", ";
    out += std::string(1, names[s]) + "=" + c.ring().to_string((*c.scalars)[s]);
  }
  return out;
}

template <Ring R>
void record(const IdentityCase<R>& c, int trial, Fault fault, JobResult& out) {
  Verdict<R> v = check_case(c, fault);
  out.status_counts[static_cast<std::size_t>(v.status)]++;
  if (c.spec().arity == 3 && !c.spec().auxiliaries.empty()) {
    for (const auto& s : composite_star_checks(c)) {
      out.star_checks++;
      if (!s.matches) out.star_failures++;
    }
  }
  if (v.status != Status::MatchesNeither) return;
  out.failure_count++;
  if (out.failures.size() >= kMaxFailureDumps) return;
  VerdictRecord rec{c.skeleton.lemma,
                    c.skeleton.idx.to_string(),
                    c.spec().branches.at(c.skeleton.branch).predicate,
                    c.origin,
                    trial,
                    v.status,
                    dump(v.lhs.matrix()),
                    std::nullopt,
                    std::nullopt,
                    std::nullopt};
  if (v.rhs_statement) rec.statement = dump(*v.rhs_statement);
  if (v.rhs_proof) rec.proof = dump(*v.rhs_proof);
  if (c.scalars) rec.scalars = scalar_text(c);
  out.failures.push_back(std::move(rec));
}

JobResult run_job(const Job& job, const Config& cfg, const RingDescriptor& ring) {
  JobResult res;
  if (job.symbolic) {
    record(symbolic_instance(job.skel, cfg.m, cfg.n), -1, cfg.fault, res);
    return res;
  }
  const std::uint64_t lemma_word = static_cast<std::uint64_t>(job.skel.lemma);
  const std::uint64_t tuple_word = pack(job.skel.idx);
  std::visit(
      [&](const auto& r) {
        using RT = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<RT, LocalizedPolyRing>) {
          raise(ErrorCode::ConfigError, "random sampling over a polynomial ring");
        } else {
          for (int t = 0; t < cfg.trials; ++t) {
            Rng rng(derive_seed(cfg.seed, {lemma_word, tuple_word, static_cast<std::uint64_t>(t)}));
            record(random_instance(job.skel, r, cfg.m, cfg.n, rng), t, cfg.fault, res);
          }
        }
      },
      ring);
  return res;
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Report verify_suite(const Config& cfg) {
  if (cfg.lemmas.empty()) raise(ErrorCode::ConfigError, "empty lemma filter");
  if (cfg.mode != Mode::Symbolic && cfg.trials < 1) raise(ErrorCode::ConfigError, "random mode needs trials >= 1");
  const RingDescriptor ring = parse_ring(cfg.ring);
  if (cfg.mode != Mode::Symbolic && std::holds_alternative<LocalizedPolyRing>(ring))
    raise(ErrorCode::ConfigError, "random sampling needs a rational or prime-field ring");

  Report rep;
  rep.config = cfg;
  rep.version = DSER_VERSION;
  rep.timestamp = utc_timestamp();

  std::vector<Job> jobs;
  for (std::size_t slot = 0; slot < cfg.lemmas.size(); ++slot) {
    const LemmaId id = cfg.lemmas[slot];
    const auto& spec = lemma_spec(id);
    LemmaSummary sum{id, spec.hypothesis, 0, {}, unreachable_branches(cfg.m, cfg.n, id), 0, 0};
    for (const auto& b : spec.branches) sum.branches.push_back({b.predicate});
    auto skeletons = enumerate_cases(cfg.m, cfg.n, id);
    sum.tuples = skeletons.size();
    rep.lemmas.push_back(std::move(sum));
    for (const auto& s : skeletons) {
      if (cfg.mode != Mode::Random) jobs.push_back({slot, s, true});
      if (cfg.mode != Mode::Symbolic) jobs.push_back({slot, s, false});
    }
  }

  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t t = next++; t < jobs.size(); t = next++) {
      try {
        results[t] = run_job(jobs[t], cfg, ring);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(jobs.size())));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  // Jobs were created in (lemma, tuple) order, so folding in job order is deterministic.
  for (std::size_t t = 0; t < jobs.size(); ++t) {
    auto& sum = rep.lemmas[jobs[t].lemma_slot];
    auto& br = sum.branches.at(jobs[t].skel.branch);
    const auto& r = results[t];
    std::size_t total = 0;
    for (auto c : r.status_counts) total += c;
    br.cases += total;
    br.matches_both += r.status_counts[static_cast<std::size_t>(Status::MatchesBoth)];
    br.proof_only += r.status_counts[static_cast<std::size_t>(Status::MatchesProofOnly)];
    br.statement_only += r.status_counts[static_cast<std::size_t>(Status::MatchesStatementOnly)];
    br.neither += r.status_counts[static_cast<std::size_t>(Status::MatchesNeither)];
    br.statement_absent += r.status_counts[static_cast<std::size_t>(Status::StatementAbsent)];
    sum.star_checks += r.star_checks;
    sum.star_failures += r.star_failures;
    rep.verdicts += total;
    rep.failure_count += r.failure_count;
    for (const auto& f : r.failures)
      if (rep.failures.size() < kMaxFailureDumps) rep.failures.push_back(f);
  }
  return rep;
}

}  // namespace dser
