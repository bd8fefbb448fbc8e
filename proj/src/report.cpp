#include "puritylab/report.hpp"

#include "puritylab/error.hpp"

namespace puritylab {

std::string_view verdictName(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

Verdict parseVerdict(std::string_view name) {
  if (name == "pass") return Verdict::Pass;
  if (name == "fail") return Verdict::Fail;
  if (name == "undecided") return Verdict::Undecided;
  throw Error(ErrorCode::ParseError, "unknown verdict '" + std::string(name) + "'");
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Undecided || b == Verdict::Undecided) return Verdict::Undecided;
  return Verdict::Pass;
}

Json toJson(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["method"] = r.method;
  j["verdict"] = verdictName(r.verdict);
  j["bounds"] = r.bounds;
  j["witness"] = r.witness;
  j["exhaustive"] = r.exhaustive;
  j["vacuous"] = r.vacuous;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

CheckReport reportFromJson(const Json& j) {
  CheckReport r;
  r.check = j.at("check").get<std::string>();
  r.method = j.at("method").get<std::string>();
  r.verdict = parseVerdict(j.at("verdict").get<std::string>());
  r.bounds = j.value("bounds", Json::object());
  r.witness = j.value("witness", Json());
  r.exhaustive = j.value("exhaustive", true);
  r.vacuous = j.value("vacuous", false);
  r.detail = j.value("detail", std::string());
  return r;
}

std::string canonicalDump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace puritylab
