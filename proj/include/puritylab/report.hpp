#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

namespace puritylab {

using Json = nlohmann::json;

enum class Verdict { Pass, Fail, Undecided };

std::string_view verdictName(Verdict v);
Verdict parseVerdict(std::string_view name);

/// Conjunction with Fail dominating Undecided.
Verdict combine(Verdict a, Verdict b);

struct CheckReport {
  std::string check;   // purity, flat, injective, end-local, fitting, free, ...
  std::string method;  // which decision route produced the verdict
  Verdict verdict = Verdict::Pass;
  Json bounds = Json::object();
  Json witness;  // null unless verdict == Fail
  bool exhaustive = true;
  bool vacuous = false;
  std::string detail;  // human-readable note, e.g. the budget message

  bool passed() const { return verdict == Verdict::Pass; }
  bool failed() const { return verdict == Verdict::Fail; }
};

Json toJson(const CheckReport& r);
CheckReport reportFromJson(const Json& j);

/// Deterministic serialization: sorted keys, two-space indent, trailing newline.
std::string canonicalDump(const Json& j);

}  // namespace puritylab
