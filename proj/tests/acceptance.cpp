// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>

#include "puritylab/constructions.hpp"
#include "puritylab/corpus.hpp"
#include "puritylab/error.hpp"
#include "puritylab/suites.hpp"

using namespace puritylab;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

std::map<std::string, Json> suiteCache;

/// Claims of a suite run with default settings, keyed by id.
const Json& suiteClaims(const std::string& name) {
  auto it = suiteCache.find(name);
  if (it != suiteCache.end()) return it->second;
  Json claims = Json::object();
  const Json doc = toJson(runSuite(name, {}));
  for (const auto& c : doc["claims"]) claims[c["id"].get<std::string>()] = c;
  return suiteCache[name] = claims;
}

void requireClaim(Outcome& o, const std::string& suite, const std::string& id) {
  const auto& claims = suiteClaims(suite);
  const bool found = claims.contains(id);
  o.require(found, suite + " has no claim " + id);
  if (found) o.require(claims[id]["verdict"] == "pass", suite + "/" + id + " is " + claims[id]["verdict"].dump());
}

int failures = 0;

void criterion(int number, double limitSeconds, const std::string& title, const std::function<void(Outcome&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < limitSeconds, "took " + std::to_string(secs) + " s, limit " + std::to_string(limitSeconds));
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << secs << " s)";
  if (!o.ok) std::cout << " -- " << o.note;
  std::cout << std::endl;
}

Verdict flat(const Module& m, std::size_t n, std::size_t k) {
  return checkFlat(m, Bound::exact(n), Bound::exact(k)).verdict;
}
Verdict injective(const Module& m, std::size_t n, std::size_t k) {
  return checkInjective(m, Bound::exact(n), Bound::exact(k)).verdict;
}

}  // namespace

int main() {
  criterion(1, 10, "one-relation module over squareZero(2,2)", [](Outcome& o) {
    const auto r = squareZero(2, 2);
    RelationMatrix rel(2, 1, *r);
    rel.at(0, 0) = r->parseElement("a");
    rel.at(1, 0) = r->parseElement("b");
    const Module m = fromPresentation(r, 2, rel);
    const Module d = fqDual(m);
    for (std::size_t n = 1; n <= 3; ++n) {
      o.require(flat(m, n, 1) == Verdict::Pass, "flat(" + std::to_string(n) + ",1)");
      o.require(injective(d, n, 1) == Verdict::Pass, "dual injective(" + std::to_string(n) + ",1)");
    }
    o.require(flat(m, 1, 2) == Verdict::Fail, "flat(1,2) should fail");
    o.require(injective(d, 1, 2) == Verdict::Fail, "dual injective(1,2) should fail");
    requireClaim(o, "prop-4-8", "flat");
    requireClaim(o, "prop-4-8", "dual-injective");
  });

  criterion(2, 120, "three-term relation module over squareZero(2,3)", [](Outcome& o) {
    const auto r = squareZero(2, 3);
    RelationMatrix rel(3, 1, *r);
    rel.at(0, 0) = r->parseElement("a");
    rel.at(1, 0) = r->parseElement("b");
    rel.at(2, 0) = r->parseElement("c");
    const Module m = fromPresentation(r, 3, rel);
    for (std::size_t n = 1; n <= 2; ++n) o.require(flat(m, n, 2) == Verdict::Pass, "flat(" + std::to_string(n) + ",2)");
    o.require(flat(m, 1, 3) == Verdict::Fail, "flat(1,3) should fail");
    requireClaim(o, "prop-4-9", "flat");
  });

  criterion(3, 60, "staircase modules: gen, rel, local End", [](Outcome& o) {
    requireClaim(o, "prop-3-3", "p1-square-zero");
    requireClaim(o, "prop-3-3", "p2-square-zero");
    const auto& rows = suiteClaims("prop-3-3")["p1-square-zero"]["details"]["modules"];
    o.require(rows.size() == 4, "expected W(1,1,1), W(1,1,2), W(1,2,2), W(1,2,3)");
  });

  criterion(4, 60, "Auslander-Bridger double dual and exchange", [](Outcome& o) {
    requireClaim(o, "prop-3-1", "double-dual");
    requireClaim(o, "prop-3-1", "dual-of-staircase");
    std::set<std::string> fixtures;
    for (const auto& f : suiteClaims("prop-3-1")["double-dual"]["details"]["fixtures"]) fixtures.insert(f.get<std::string>());
    o.require(fixtures.size() >= 5, "fewer than 5 fixtures");
    for (const char* need : {"squareZero(2,2): k", "squareZero(2,2): diagonal", "squareZero(2,2): W(1,2,3)"})
      o.require(fixtures.count(need) == 1, std::string("missing fixture ") + need);
  });

  criterion(5, 300, "equation and tensor purity routes agree", [](Outcome& o) {
    requireClaim(o, "thm-1-1-oracle", "chain-exhaustive");
    requireClaim(o, "thm-1-1-oracle", "square-zero-seeded");
    const auto& c = suiteClaims("thm-1-1-oracle");
    o.require(c["square-zero-seeded"]["details"]["inclusions"].get<std::size_t>() >= 200, "fewer than 200 inclusions");
    o.require(c["square-zero-seeded"]["details"]["checked"] == 4 * 200, "not every (n,m) pair compared");
  });

  criterion(6, 300, "purity collapse and generator bound for p = 2", [](Outcome& o) {
    requireClaim(o, "prop-2-2", "one-equation-collapse");
    requireClaim(o, "lemma-2-1", "submodule-generators");
    o.require(suiteClaims("prop-2-2")["one-equation-collapse"]["details"]["pureAtBase"].get<std::size_t>() > 0,
              "no (1,2)-pure inclusions");
  });

  criterion(7, 300, "square-zero promotion of (1,q) flatness and injectivity", [](Outcome& o) {
    requireClaim(o, "cor-4-7", "flat-square-zero-2");
    requireClaim(o, "cor-4-7", "injective-square-zero-2");
  });

  criterion(8, 120, "cyclic modules over truncated(2,2,2)", [](Outcome& o) {
    requireClaim(o, "cor-5-6", "cyclic-truncated");
    const auto& d = suiteClaims("cor-5-6")["cyclic-truncated"]["details"];
    for (const char* k : {"R/(a) flat(1,1)", "R/(a) free", "R/(a) injective(1,1)"}) o.require(d[k] == "fail", k);
    for (const char* k : {"R flat(1,1)", "R free", "R injective(1,1)"}) o.require(d[k] == "pass", k);
  });

  criterion(9, 60, "double annihilator against self injectivity", [](Outcome& o) {
    const auto& c = suiteClaims("prop-4-10");
    for (const char* ring : {"chain(2,2)", "chain(2,3)", "truncated(2,2,2)"}) {
      requireClaim(o, "prop-4-10", ring);
      o.require(c[ring]["details"]["doubleAnnihilator"] == "pass", std::string(ring) + " should hold");
    }
    requireClaim(o, "prop-4-10", "squareZero(2,2)");
    o.require(c["squareZero(2,2)"]["details"]["doubleAnnihilator"] == "fail", "squareZero(2,2) should fail");
    o.require(c["squareZero(2,2)"]["witness"]["ideal"] == Json::array({"a"}), "witness ideal should be span(a)");
  });

  criterion(10, 120, "residue invertibility and Fitting modules", [](Outcome& o) {
    requireClaim(o, "lemma-3-2", "residue-invertibility");
    requireClaim(o, "lemma-2-5", "corpus-fitting");
  });

  criterion(11, 600, "reports identical across 1, 4 and 8 threads", [](Outcome& o) {
    for (const auto& name : suiteNames()) {
      std::string first;
      for (unsigned t : {1u, 4u, 8u}) {
        clearEnumerationCache();
        RunSettings s;
        s.threads = t;
        const auto text = canonicalReport(runSuite(name, s));
        if (first.empty()) first = text;
        o.require(text == first, name + " differs at " + std::to_string(t) + " threads");
      }
    }
  });

  return failures == 0 ? 0 : 1;
}
