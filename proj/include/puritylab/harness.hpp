#pragma once

// Run settings, claim and suite results, and canonical report output shared by
// workspace runs and the named suites.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "puritylab/checkers.hpp"
#include "puritylab/report.hpp"

namespace puritylab {

struct RunSettings {
  unsigned threads = 1;
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::size_t upTo = 3;
  std::uint64_t seed = 0x5eed;
  std::uint64_t endBudget = std::uint64_t{1} << 16;
  bool oracle = false;

  CheckOptions options() const;
  /// The parts that influence results; threads are left out on purpose.
  Json toJson() const;
};

/// Partially specified settings, layered file < environment < flags.
struct SettingsOverride {
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> budget;
  std::optional<std::size_t> upTo;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> endBudget;
  std::optional<bool> oracle;

  void applyTo(RunSettings& s) const;
};

/// Hard caps: PURITYLAB_BUDGET_CAP (default 2^36) bounds both budgets.
std::uint64_t budgetCap();
constexpr unsigned kMaxThreads = 256;
constexpr std::size_t kMaxUpTo = 16;
/// Throws BudgetCap when a setting is outside its cap.
void validateSettings(const RunSettings& s);
/// PURITYLAB_BUDGET, if set.
SettingsOverride environmentOverride();

struct ClaimResult {
  std::string id;
  std::string anchor;
  Verdict verdict = Verdict::Pass;
  Json details = Json::object();
  Json witness;  // null unless a failure produced one
  double elapsedSeconds = 0.0;
};

struct SuiteResult {
  std::string name;
  RunSettings settings;
  std::vector<ClaimResult> claims;

  Verdict verdict() const;
  bool passed() const { return verdict() == Verdict::Pass; }
};

/// Canonical document. Timing is only included on request since it breaks
/// byte-for-byte reproducibility.
Json toJson(const SuiteResult& r, bool includeTiming = false);
std::string canonicalReport(const SuiteResult& r);
/// Writes canonicalReport(r); throws IoError when the file cannot be written.
void emitReport(const SuiteResult& r, const std::filesystem::path& path);

/// 0 pass, 1 fail, 2 undecided.
int exitCode(Verdict v);

}  // namespace puritylab
