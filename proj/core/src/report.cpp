#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "dser/suite.hpp"

namespace dser {

namespace {

using nlohmann::ordered_json;

ordered_json record_json(const VerdictRecord& v) {
  ordered_json j;
  j["lemma"] = to_string(v.lemma);
  j["indices"] = v.indices;
  j["branch"] = v.branch;
  j["origin"] = v.origin;
  j["trial"] = v.trial;
  j["status"] = to_string(v.status);
  j["scalars"] = v.scalars ? ordered_json(*v.scalars) : ordered_json(nullptr);
  j["lhs"] = v.lhs;
  j["rhs_statement"] = v.statement ? ordered_json(*v.statement) : ordered_json(nullptr);
  j["rhs_proof"] = v.proof ? ordered_json(*v.proof) : ordered_json(nullptr);
  return j;
}

}  // namespace

std::string to_json(const Report& r) {
  ordered_json meta;
  meta["tool"] = "dser-verify";
  meta["version"] = r.version;
  meta["timestamp"] = r.timestamp;
  ordered_json cfg;
  cfg["ring"] = r.config.ring;
  cfg["m"] = r.config.m;
  cfg["n"] = r.config.n;
  cfg["seed"] = r.config.seed;
  cfg["trials"] = r.config.trials;
  cfg["mode"] = to_string(r.config.mode);
  cfg["fault"] = r.config.fault == Fault::None ? "none" : "l01-sign";
  ordered_json ids = ordered_json::array();
  for (auto id : r.config.lemmas) ids.push_back(to_string(id));
  cfg["lemmas"] = ids;
  meta["config"] = cfg;

  ordered_json lemmas = ordered_json::array();
  for (const auto& l : r.lemmas) {
    ordered_json lj;
    lj["id"] = to_string(l.id);
    lj["hypothesis"] = l.hypothesis;
    lj["tuples"] = l.tuples;
    ordered_json branches = ordered_json::array();
    for (const auto& b : l.branches) {
      ordered_json bj;
      bj["predicate"] = b.predicate;
      bj["cases"] = b.cases;
      bj["matches_both"] = b.matches_both;
      bj["proof_only"] = b.proof_only;
      bj["statement_only"] = b.statement_only;
      bj["neither"] = b.neither;
      bj["statement_absent"] = b.statement_absent;
      branches.push_back(bj);
    }
    lj["branches"] = branches;
    lj["unreachable_branches"] = l.unreachable;
    if (l.star_checks) lj["star_checks"] = {{"checked", l.star_checks}, {"failed", l.star_failures}};
    lemmas.push_back(lj);
  }

  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures) failures.push_back(record_json(f));

  ordered_json root;
  root["meta"] = meta;
  root["summary"] = {{"verdicts", r.verdicts}, {"neither", r.failure_count}, {"passed", r.passed()}};
  root["lemmas"] = lemmas;
  root["failures"] = failures;
  return root.dump(2) + "\n";
}

std::string to_markdown(const Report& r) {
  std::ostringstream os;
  os << "# DSER identity verification\n\n";
  os << "- version: " << r.version << "\n- timestamp: " << r.timestamp << "\n";
  os << "- ring: `" << r.config.ring << "`, m=" << r.config.m << ", n=" << r.config.n << ", seed=" << r.config.seed
     << ", trials=" << r.config.trials << ", mode=" << to_string(r.config.mode) << "\n";
  if (r.config.fault != Fault::None) os << "- fault injected: l01-sign\n";
  os << "- verdicts: " << r.verdicts << ", MatchesNeither: " << r.failure_count << " -> "
     << (r.passed() ? "PASS" : "FAIL") << "\n\n";
  os << "| lemma | branch | cases | both | proof only | statement only | neither | statement absent |\n";
  os << "|---|---|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& l : r.lemmas)
    for (const auto& b : l.branches)
      os << "| " << to_string(l.id) << " | " << b.predicate << " | " << b.cases << " | " << b.matches_both << " | "
         << b.proof_only << " | " << b.statement_only << " | " << b.neither << " | " << b.statement_absent << " |\n";
  bool stars = false;
  for (const auto& l : r.lemmas)
    if (l.star_checks) {
      if (!stars) os << "\nComposite duals:\n\n";
      stars = true;
      os << "- " << to_string(l.id) << ": " << l.star_checks - l.star_failures << "/" << l.star_checks << " match\n";
    }
  if (!r.failures.empty()) {
    os << "\n## Failures (" << r.failures.size() << " of " << r.failure_count << ")\n";
    for (const auto& f : r.failures) {
      os << "\n### " << to_string(f.lemma) << " " << f.indices << " [" << f.branch << "] " << f.origin;
      if (f.trial >= 0) os << " trial " << f.trial;
      os << "\n\n";
      if (f.scalars) os << "- scalars: " << *f.scalars << "\n";
      os << "- lhs: `" << f.lhs << "`\n";
      os << "- statement: " << (f.statement ? "`" + *f.statement + "`" : "absent") << "\n";
      os << "- proof: " << (f.proof ? "`" + *f.proof + "`" : "absent") << "\n";
    }
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    auto cfg = parse_config(args, out);
    if (!cfg) return 0;
    Report rep = verify_suite(*cfg);
    std::string text = cfg->format == Format::Json ? to_json(rep) : to_markdown(rep);
    if (cfg->out.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg->out, std::ios::binary);
      if (!f) raise(ErrorCode::ConfigError, "cannot write " + cfg->out);
      f << text;
    }
    return rep.passed() ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ConfigError || e.code() == ErrorCode::RankTooSmall ||
                   e.code() == ErrorCode::ParseError
               ? 2
               : 1;
  }
}

}  // namespace dser
