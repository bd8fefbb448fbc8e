#include "puritylab/harness.hpp"

#include <cstdlib>
#include <fstream>

#include "puritylab/error.hpp"

namespace puritylab {

CheckOptions RunSettings::options() const {
  CheckOptions o;
  o.threads = threads;
  o.budget = budget;
  o.endBudget = endBudget;
  o.seed = seed;
  o.oracle = oracle;
  return o;
}

Json RunSettings::toJson() const {
  return Json{{"budget", budget}, {"upTo", upTo}, {"seed", seed}, {"endBudget", endBudget}, {"oracle", oracle}};
}

void SettingsOverride::applyTo(RunSettings& s) const {
  if (threads) s.threads = *threads;
  if (budget) s.budget = *budget;
  if (upTo) s.upTo = *upTo;
  if (seed) s.seed = *seed;
  if (endBudget) s.endBudget = *endBudget;
  if (oracle) s.oracle = *oracle;
}

namespace {

std::optional<std::uint64_t> envNumber(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0') throw Error(ErrorCode::ParseError, std::string(name) + " is not a number: " + raw);
  return v;
}

}  // namespace

std::uint64_t budgetCap() { return envNumber("PURITYLAB_BUDGET_CAP").value_or(std::uint64_t{1} << 36); }

void validateSettings(const RunSettings& s) {
  const auto cap = budgetCap();
  if (s.budget > cap)
    throw Error(ErrorCode::BudgetCap, "budget " + std::to_string(s.budget) + " exceeds cap " + std::to_string(cap));
  if (s.endBudget > cap)
    throw Error(ErrorCode::BudgetCap,
                "end_budget " + std::to_string(s.endBudget) + " exceeds cap " + std::to_string(cap));
  if (s.threads > kMaxThreads)
    throw Error(ErrorCode::BudgetCap, "threads " + std::to_string(s.threads) + " exceeds " +
                                          std::to_string(kMaxThreads));
  if (s.upTo == 0 || s.upTo > kMaxUpTo)
    throw Error(ErrorCode::BudgetCap, "up_to must be between 1 and " + std::to_string(kMaxUpTo));
}

SettingsOverride environmentOverride() {
  SettingsOverride o;
  o.budget = envNumber("PURITYLAB_BUDGET");
  return o;
}

Verdict SuiteResult::verdict() const {
  Verdict v = Verdict::Pass;
  for (const auto& c : claims) v = combine(v, c.verdict);
  return v;
}

Json toJson(const SuiteResult& r, bool includeTiming) {
  Json claims = Json::array();
  std::size_t passed = 0, failed = 0, undecided = 0;
  for (const auto& c : r.claims) {
    Json j{{"id", c.id}, {"anchor", c.anchor}, {"verdict", verdictName(c.verdict)}, {"details", c.details},
           {"witness", c.witness}};
    if (includeTiming) j["elapsedSeconds"] = c.elapsedSeconds;
    claims.push_back(std::move(j));
    switch (c.verdict) {
      case Verdict::Pass: ++passed; break;
      case Verdict::Fail: ++failed; break;
      case Verdict::Undecided: ++undecided; break;
    }
  }
  return Json{{"suite", r.name},
              {"verdict", verdictName(r.verdict())},
              {"settings", r.settings.toJson()},
              {"claims", std::move(claims)},
              {"summary", {{"claims", r.claims.size()}, {"passed", passed}, {"failed", failed}, {"undecided", undecided}}}};
}

std::string canonicalReport(const SuiteResult& r) { return canonicalDump(toJson(r)); }

void emitReport(const SuiteResult& r, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << canonicalReport(r);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write to " + path.string() + " failed");
}

int exitCode(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    case Verdict::Undecided: return 2;
  }
  return 2;
}

}  // namespace puritylab
