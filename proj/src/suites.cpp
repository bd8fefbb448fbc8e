#include "puritylab/suites.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "puritylab/constructions.hpp"
#include "puritylab/corpus.hpp"
#include "puritylab/error.hpp"

namespace puritylab {

namespace {

struct ClaimSpec {
  std::string id;
  std::string anchor;
  std::function<void(ClaimResult&)> body;
};

struct SuiteSpec {
  std::string name;
  std::string summary;
  std::function<std::vector<ClaimSpec>(const RunSettings&)> claims;
};

/// Counts comparisons and keeps the first disagreement as the witness.
struct Tally {
  std::size_t checked = 0;
  std::size_t undecided = 0;
  std::size_t disagreements = 0;
  Json first;

  void undecidedOne() { ++checked, ++undecided; }
  void agree() { ++checked; }
  void disagree(Json what) {
    ++checked;
    if (disagreements++ == 0) first = std::move(what);
  }
  void expect(bool ok, const std::function<Json()>& what) { ok ? agree() : disagree(what()); }

  Verdict verdict() const {
    if (disagreements) return Verdict::Fail;
    return undecided ? Verdict::Undecided : Verdict::Pass;
  }
  void finish(ClaimResult& c) const {
    c.verdict = combine(c.verdict, verdict());
    c.details["checked"] = checked;
    c.details["undecided"] = undecided;
    c.details["disagreements"] = disagreements;
    if (disagreements) c.witness = first;
  }
};

Json pairJson(std::size_t n, std::size_t m) { return Json::array({n, m}); }

std::string moduleLabel(const std::string& ring, const std::string& name) { return ring + ": " + name; }

/// Records a single expected verdict; Undecided never counts as agreement.
void requireVerdict(ClaimResult& c, const std::string& key, const CheckReport& rep, Verdict expected) {
  c.details[key] = verdictName(rep.verdict);
  if (rep.verdict == expected) return;
  c.verdict = combine(c.verdict, rep.verdict == Verdict::Undecided ? Verdict::Undecided : Verdict::Fail);
  if (c.witness.is_null()) c.witness = Json{{"check", key}, {"expected", verdictName(expected)}, {"report", toJson(rep)}};
}

void requireTrue(ClaimResult& c, const std::string& key, bool ok) {
  c.details[key] = ok;
  if (!ok) {
    c.verdict = Verdict::Fail;
    if (c.witness.is_null()) c.witness = Json{{"check", key}};
  }
}

std::vector<NamedModule> corpusFor(const std::vector<AlgebraPtr>& rings, std::vector<std::string>* ringNames = nullptr) {
  std::vector<NamedModule> out;
  for (const auto& r : rings)
    for (auto& nm : corpusModules(r)) {
      if (ringNames) ringNames->push_back(r->name());
      out.push_back({moduleLabel(r->name(), nm.name), nm.module});
    }
  return out;
}

/// q^(d*n*m) tuples, or nullopt when that overflows.
std::optional<std::uint64_t> tupleCount(const Algebra& r, std::size_t n, std::size_t m) {
  return TupleSpace{r.field().order(), n, m, r.dim()}.size();
}

Submodule coverKernel(const Module& m) {
  const auto mp = minimalPresentation(m);
  return Submodule(mp.cover.source(), mp.kernel);
}

/// R^(g+1) -> M sending the last generator to zero; a non-minimal cover.
ModuleMap paddedCover(const Module& m) {
  const auto mp = minimalPresentation(m);
  const Module& f = mp.cover.source();
  const Module padded = freeModule(m.ringPtr(), mp.profile.gen + 1);
  Matrix mat(m.dim(), padded.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j) mat(i, j) = mp.cover.matrix()(i, j);
  return ModuleMap(padded, m, std::move(mat));
}

// ---------------------------------------------------------------------------

std::vector<ClaimSpec> thmOracle(const RunSettings& s) {
  auto compare = [s](const std::vector<Submodule>& incs, ClaimResult& c) {
    const auto opts = s.options();
    Tally t;
    std::size_t impure = 0;
    for (std::size_t i = 0; i < incs.size(); ++i)
      for (std::size_t n = 1; n <= 2; ++n)
        for (std::size_t m = 1; m <= 2; ++m) {
          const auto a = checkPurity(incs[i], Bound::exact(n), Bound::exact(m), opts);
          const auto b = checkPurityViaTensor(incs[i], Bound::exact(n), Bound::exact(m), opts);
          if (a.verdict == Verdict::Undecided || b.verdict == Verdict::Undecided) {
            t.undecidedOne();
            continue;
          }
          if (a.failed()) ++impure;
          t.expect(a.verdict == b.verdict, [&] {
            return Json{{"inclusion", i},
                        {"indices", pairJson(n, m)},
                        {"equations", verdictName(a.verdict)},
                        {"tensor", verdictName(b.verdict)}};
          });
        }
    c.details["inclusions"] = incs.size();
    c.details["impure"] = impure;
    t.finish(c);
  };
  return {
      {"chain-exhaustive",
       "equation solvability and tensor injectivity agree on every inclusion of dimension <= 4 over chain(2,2)",
       [compare](ClaimResult& c) { compare(allInclusions(chainModules(chain(2, 2), 4)), c); }},
      {"square-zero-seeded",
       "equation solvability and tensor injectivity agree on 200 seeded inclusions over squareZero(2,2)",
       [compare, s](ClaimResult& c) {
         c.details["seed"] = s.seed;
         compare(randomInclusions(squareZero(2, 2), 200, 4, s.seed), c);
       }},
      {"relation-kernel",
       "the relation kernel of R^2/(a e1 + b e2) is (1,1)-pure but not (1,2)-pure in R^2, by both routes",
       [s](ClaimResult& c) {
         const auto opts = s.options();
         const auto k = coverKernel(diagonalRelationModule(squareZero(2, 2)));
         requireVerdict(c, "equations(1,1)", checkPurity(k, Bound::exact(1), Bound::exact(1), opts), Verdict::Pass);
         requireVerdict(c, "tensor(1,1)", checkPurityViaTensor(k, Bound::exact(1), Bound::exact(1), opts),
                        Verdict::Pass);
         const auto fail = checkPurity(k, Bound::exact(1), Bound::exact(2), opts);
         requireVerdict(c, "equations(1,2)", fail, Verdict::Fail);
         requireVerdict(c, "tensor(1,2)", checkPurityViaTensor(k, Bound::exact(1), Bound::exact(2), opts),
                        Verdict::Fail);
         if (fail.failed()) requireTrue(c, "witnessReplays", replayPurityWitness(k, fail.witness));
       }},
  };
}

std::vector<ClaimSpec> lemmaGenerators(const RunSettings&) {
  return {
      {"ideal-generators", "every ideal of squareZero(2,2) is 2-generated and 2 is attained; gen I <= dim P on each ring",
       [](ClaimResult& c) {
         Json per = Json::object();
         for (const auto& r : defaultRings()) {
           std::size_t best = 0;
           for (const auto& i : allIdeals(*r)) best = std::max(best, minGeneratorsIdeal(*r, i).count);
           per[r->name()] = best;
           requireTrue(c, "boundedBy dim P over " + r->name(), best <= r->radical().dim());
         }
         c.details["maxIdealGenerators"] = per;
         requireTrue(c, "squareZero(2,2) attains 2", per["squareZero(2,2)"] == 2);
       }},
      {"submodule-generators", "gen N <= 2 gen M for every submodule N of every corpus module M over squareZero(2,2)",
       [](ClaimResult& c) {
         const auto r = squareZero(2, 2);
         std::vector<std::pair<std::string, Module>> modules;
         for (auto& nm : corpusModules(r)) modules.emplace_back(nm.name, nm.module);
         std::size_t idx = 0;
         for (auto& m : kroneckerModules(r, 4)) modules.emplace_back("kronecker #" + std::to_string(idx++), m);
         Tally t;
         std::size_t tight = 0;
         for (const auto& [name, m] : modules) {
           const std::size_t g = genRel(m).gen;
           for (const auto& sub : allSubmodules(m)) {
             const std::size_t gn = generatorCount(m, sub);
             if (gn == 2 * g && g > 0) ++tight;
             t.expect(gn <= 2 * g, [&] {
               return Json{{"module", name}, {"genM", g}, {"genN", gn}, {"submoduleDim", sub.dim()}};
             });
           }
         }
         c.details["modules"] = modules.size();
         c.details["attained"] = tight;
         t.finish(c);
       }},
  };
}

std::vector<ClaimSpec> propCollapse(const RunSettings& s) {
  // The base index is where the ideal-generator bound p = 2 lets purity stop growing.
  // equations: n is fixed and the generator count varies; otherwise m is fixed.
  auto collapse = [s](bool equations, std::size_t fixed, std::size_t baseIndex, std::vector<std::size_t> longer,
                      ClaimResult& c) {
    const auto opts = s.options();
    const auto incs = allInclusions(kroneckerModules(squareZero(2, 2), 4));
    auto check = [&](const Submodule& a, std::size_t k) {
      return equations ? checkPurity(a, Bound::exact(fixed), Bound::exact(k), opts)
                       : checkPurity(a, Bound::exact(k), Bound::exact(fixed), opts);
    };
    Tally t;
    std::size_t base = 0, strictlyWeaker = 0;
    for (std::size_t i = 0; i < incs.size(); ++i) {
      const auto atBase = check(incs[i], baseIndex);
      if (atBase.verdict == Verdict::Undecided) {
        t.undecidedOne();
        continue;
      }
      if (check(incs[i], baseIndex - 1).passed() && atBase.failed()) ++strictlyWeaker;
      if (!atBase.passed()) continue;
      ++base;
      for (std::size_t k : longer) {
        const auto report = check(incs[i], k);
        if (report.verdict == Verdict::Undecided) {
          t.undecidedOne();
          continue;
        }
        t.expect(report.passed(), [&] { return Json{{"inclusion", i}, {"index", k}, {"report", toJson(report)}}; });
      }
    }
    c.details["inclusions"] = incs.size();
    c.details["pureAtBase"] = base;
    c.details["pureBelowNotAtBase"] = strictlyWeaker;
    t.finish(c);
  };
  return {
      {"one-equation-collapse",
       "over squareZero(2,2), every (1,2)-pure inclusion of dimension <= 4 is (1,3)- and (1,4)-pure",
       [collapse](ClaimResult& c) { collapse(true, 1, 2, {3, 4}, c); }},
      {"two-equation-collapse",
       "over squareZero(2,2), every (2,4)-pure inclusion of dimension <= 4 is (2,5)- and (2,6)-pure",
       [collapse](ClaimResult& c) { collapse(true, 2, 4, {5, 6}, c); }},
      {"one-unknown-collapse",
       "over squareZero(2,2), every (2,1)-pure inclusion of dimension <= 4 is (3,1)-pure",
       [collapse](ClaimResult& c) { collapse(false, 1, 2, {3}, c); }},
  };
}

std::vector<ClaimSpec> propDual(const RunSettings& s) {
  return {
      {"double-dual",
       "D(D(M)) is isomorphic to M, D(M) has no free summand and gen, rel are exchanged, for corpus modules without "
       "free summands over squareZero(2,2) and chain(2,2)",
       [s](ClaimResult& c) {
         const auto opts = s.options();
         Tally t;
         Json fixtures = Json::array();
         for (const auto& r : {squareZero(2, 2), chain(2, 2)})
           for (const auto& nm : corpusModules(r)) {
             if (nm.module.isZero() || hasFreeSummand(nm.module)) continue;
             const auto label = moduleLabel(r->name(), nm.name);
             fixtures.push_back(label);
             const Module d = auslanderBridgerDual(nm.module);
             const Module dd = auslanderBridgerDual(d);
             const auto gm = genRel(nm.module), gd = genRel(d);
             t.expect(isIsomorphic(dd, nm.module), [&] { return Json{{"module", label}, {"failure", "D(D(M))"}}; });
             t.expect(!hasFreeSummand(d), [&] { return Json{{"module", label}, {"failure", "free summand"}}; });
             t.expect(gd.gen == gm.rel && gd.rel == gm.gen, [&] {
               return Json{{"module", label}, {"gen", gm.gen}, {"rel", gm.rel}, {"genD", gd.gen}, {"relD", gd.rel}};
             });
             const auto lm = checkEndLocal(nm.module, opts), ld = checkEndLocal(d, opts);
             if (lm.verdict == Verdict::Undecided || ld.verdict == Verdict::Undecided) {
               t.undecidedOne();
             } else {
               t.expect(lm.verdict == ld.verdict, [&] { return Json{{"module", label}, {"failure", "End locality"}}; });
             }
           }
         c.details["fixtures"] = fixtures;
         t.finish(c);
       }},
      {"additivity", "gen and rel are additive on direct sums of corpus modules over squareZero(2,2)",
       [](ClaimResult& c) {
         const auto mods = corpusModules(squareZero(2, 2));
         Tally t;
         for (std::size_t i = 0; i < mods.size(); ++i)
           for (std::size_t j = i; j < mods.size(); ++j) {
             if (mods[i].module.dim() + mods[j].module.dim() > 8) continue;
             const auto a = genRel(mods[i].module), b = genRel(mods[j].module);
             const auto sum = genRel(directSum(mods[i].module, mods[j].module).module);
             t.expect(sum.gen == a.gen + b.gen && sum.rel == a.rel + b.rel,
                      [&] { return Json{{"first", mods[i].name}, {"second", mods[j].name}}; });
           }
         t.finish(c);
       }},
      {"dual-of-staircase", "D(W(1,1,2)) is isomorphic to R^2/(a e1 + b e2) over squareZero(2,2)",
       [](ClaimResult& c) {
         const auto r = squareZero(2, 2);
         const Module w = warfieldModule(r, {1, 1, 2, radicalGenerators(*r, 2)});
         requireTrue(c, "isomorphic", isIsomorphic(auslanderBridgerDual(w), diagonalRelationModule(r)));
       }},
  };
}

std::vector<ClaimSpec> propStaircase(const RunSettings& s) {
  auto verify = [s](const AlgebraPtr& r, std::size_t p, const std::vector<std::pair<std::size_t, std::size_t>>& nm,
                    ClaimResult& c) {
    const auto opts = s.options();
    Json rows = Json::array();
    for (const auto& [n, m] : nm) {
      const Module w = warfieldModule(r, {p, n, m, radicalGenerators(*r, p + 1)});
      const auto prof = minimalPresentation(w).profile;
      const auto local = checkEndLocal(w, opts);
      const std::string key = "W(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(m) + ")";
      rows.push_back(Json{{"module", key}, {"gen", prof.gen}, {"rel", prof.rel}, {"endLocal", verdictName(local.verdict)}});
      requireTrue(c, key + " gen", prof.gen == n);
      requireTrue(c, key + " rel", prof.rel == m);
      requireVerdict(c, key + " end-local", local, Verdict::Pass);
    }
    c.details["modules"] = rows;
  };
  return {
      {"p1-square-zero", "over squareZero(2,2), W(1,n,m) has gen n, rel m and local End for every admissible m, n <= 2",
       [verify](ClaimResult& c) { verify(squareZero(2, 2), 1, {{1, 1}, {1, 2}, {2, 2}, {2, 3}}, c); }},
      {"p2-square-zero", "over squareZero(2,3), W(2,1,3) and W(2,2,5) have the prescribed gen, rel and local End",
       [verify](ClaimResult& c) { verify(squareZero(2, 3), 2, {{1, 3}, {2, 5}}, c); }},
      {"range-guard", "W(1,2,4) lies outside the admissible range", [](ClaimResult& c) {
         const auto r = squareZero(2, 2);
         bool rejected = false;
         try {
           warfieldModule(r, {1, 2, 4, radicalGenerators(*r, 2)});
         } catch (const Error& e) {
           rejected = e.code() == ErrorCode::RangeViolation;
         }
         requireTrue(c, "rejected", rejected);
       }},
  };
}

std::vector<ClaimSpec> lemmaResidue(const RunSettings& s) {
  return {
      {"residue-invertibility",
       "an endomorphism is invertible iff its reduction modulo P is, on every corpus module over the default rings",
       [s](ClaimResult& c) {
         std::mt19937_64 rng(s.seed);
         Tally t;
         std::size_t modules = 0, invertible = 0;
         for (const auto& nm : corpusFor(defaultRings())) {
           if (nm.module.isZero()) continue;
           ++modules;
           const auto& f = nm.module.field();
           const auto basis = homSpace(nm.module, nm.module);
           std::vector<Matrix> tests = basis;
           for (int k = 0; k < 100; ++k) {
             Matrix e(nm.module.dim(), nm.module.dim());
             for (const auto& b : basis) e = add(f, e, scale(f, static_cast<Scalar>(rng() % f.order()), b));
             tests.push_back(std::move(e));
           }
           for (std::size_t k = 0; k < tests.size(); ++k) {
             const bool direct = isInvertible(f, tests[k]);
             if (direct) ++invertible;
             t.expect(topInvertible(nm.module, tests[k]) == direct, [&] {
               return Json{{"module", nm.name}, {"endomorphism", matrixToJson(tests[k])}};
             });
           }
         }
         c.details["modules"] = modules;
         c.details["invertible"] = invertible;
         t.finish(c);
       }},
      {"end-local-routes", "End locality through the residue image agrees with direct enumeration of End wherever End fits the "
       "endomorphism budget",
       [s](ClaimResult& c) {
         const auto opts = s.options();
         Tally t;
         std::size_t local = 0;
         Json beyond = Json::array();
         for (const auto& nm : corpusFor(defaultRings())) {
           const auto endDim = homSpace(nm.module, nm.module).size();
           const auto endSize = TupleSpace{nm.module.field().order(), 1, 1, endDim}.size();
           if (!endSize || *endSize > s.endBudget) {
             beyond.push_back(nm.name);
             continue;
           }
           const auto a = checkEndLocal(nm.module, opts), b = checkEndLocalDirect(nm.module, opts);
           if (a.verdict == Verdict::Undecided || b.verdict == Verdict::Undecided) {
             t.undecidedOne();
             continue;
           }
           if (a.passed()) ++local;
           t.expect(a.verdict == b.verdict, [&] { return Json{{"module", nm.name}}; });
         }
         c.details["local"] = local;
         c.details["beyondEndBudget"] = beyond;
         t.finish(c);
       }},
  };
}

std::vector<ClaimSpec> lemmaFitting(const RunSettings& s) {
  return {
      {"corpus-fitting", "every corpus module over the default rings is a Fitting module", [s](ClaimResult& c) {
         const auto opts = s.options();
         Tally t;
         std::size_t exhaustive = 0;
         for (const auto& nm : corpusFor(defaultRings())) {
           const auto rep = checkFitting(nm.module, opts);
           if (rep.exhaustive) ++exhaustive;
           if (rep.verdict == Verdict::Undecided) {
             t.undecidedOne();
             continue;
           }
           t.expect(rep.passed(), [&] { return Json{{"module", nm.name}, {"report", toJson(rep)}}; });
         }
         c.details["exhaustive"] = exhaustive;
         t.finish(c);
       }},
      {"cyclic-local", "every nonzero cyclic module R/I over the default rings is Fitting with local End",
       [s](ClaimResult& c) {
         const auto opts = s.options();
         Tally t;
         for (const auto& r : defaultRings())
           for (const auto& i : allIdeals(*r)) {
             if (i.dim() == r->dim()) continue;
             const Module m = cyclicModule(r, i);
             const auto fit = checkFitting(m, opts);
             const auto loc = checkEndLocal(m, opts);
             if (fit.verdict == Verdict::Undecided || loc.verdict == Verdict::Undecided) {
               t.undecidedOne();
               continue;
             }
             t.expect(fit.passed() && loc.passed(), [&] {
               Json basis = Json::array();
               for (std::size_t k = 0; k < i.dim(); ++k) basis.push_back(r->format({i.space.basis().rowVector(k)}));
               return Json{{"ring", r->name()}, {"ideal", basis}};
             });
           }
         t.finish(c);
       }},
  };
}

std::vector<ClaimSpec> propFlatDuality(const RunSettings& s) {
  const std::vector<AlgebraPtr> rings = {squareZero(2, 2), squareZero(2, 3), chain(2, 2), chain(2, 3), chain(3, 2),
                                         truncated(2, {2, 2})};
  return {
      {"flat-vs-dual-injective", "M is (n,m)-flat iff its linear dual is (n,m)-injective, n, m <= 2, corpus modules",
       [s, rings](ClaimResult& c) {
         const auto opts = s.options();
         Tally t;
         std::size_t flat = 0;
         for (const auto& nm : corpusFor(rings)) {
           const Module dual = fqDual(nm.module);
           for (std::size_t n = 1; n <= 2; ++n)
             for (std::size_t m = 1; m <= 2; ++m) {
               const auto a = checkFlat(nm.module, Bound::exact(n), Bound::exact(m), opts);
               const auto b = checkInjective(dual, Bound::exact(n), Bound::exact(m), opts);
               if (a.verdict == Verdict::Undecided || b.verdict == Verdict::Undecided) {
                 t.undecidedOne();
                 continue;
               }
               if (a.passed()) ++flat;
               t.expect(a.verdict == b.verdict, [&] {
                 return Json{{"module", nm.name}, {"indices", pairJson(n, m)}, {"flat", verdictName(a.verdict)},
                             {"dualInjective", verdictName(b.verdict)}};
               });
             }
         }
         c.details["flat"] = flat;
         t.finish(c);
       }},
      {"flat-vs-sequence-purity",
       "M is (n,m)-flat iff the kernel of a free cover of M is (n,m)-pure, for minimal and padded covers",
       [s](ClaimResult& c) {
         const auto opts = s.options();
         Tally t;
         for (const auto& r : {squareZero(2, 2), chain(2, 2), truncated(2, {2, 2})})
           for (const auto& nm : corpusModules(r)) {
             const auto covers = {minimalPresentation(nm.module).cover, paddedCover(nm.module)};
             for (std::size_t n = 1; n <= 2; ++n)
               for (std::size_t m = 1; m <= 2; ++m) {
                 const auto a = checkFlat(nm.module, Bound::exact(n), Bound::exact(m), opts);
                 std::size_t which = 0;
                 for (const auto& cover : covers) {
                   const auto b = checkSequencePurity(cover, Bound::exact(n), Bound::exact(m), opts);
                   if (a.verdict == Verdict::Undecided || b.verdict == Verdict::Undecided) {
                     t.undecidedOne();
                   } else {
                     t.expect(a.verdict == b.verdict, [&] {
                       return Json{{"module", moduleLabel(r->name(), nm.name)},
                                   {"cover", which == 0 ? "minimal" : "padded"},
                                   {"indices", pairJson(n, m)}};
                     });
                   }
                   ++which;
                 }
               }
           }
         t.finish(c);
       }},
  };
}

std::vector<ClaimSpec> lemmaGeneratedFlat(const RunSettings& s) {
  return {
      {"p-generated", "a corpus module with gen M = g is (1,g)-flat iff it is free", [s](ClaimResult& c) {
         // (1,k)-flatness for k < g is implied by (1,g)-flatness, so a failure at
         // a smaller k settles modules whose (1,g) enumeration is over budget.
         const auto opts = s.options();
         Tally t;
         std::size_t flat = 0, decidedEarly = 0;
         for (const auto& r : defaultRings())
           for (const auto& nm : corpusModules(r)) {
             const std::size_t g = genRel(nm.module).gen;
             if (g == 0) continue;
             std::optional<CheckReport> fl;
             for (std::size_t k = 1; k <= g; ++k) {
               const auto tuples = tupleCount(*r, 1, k);
               if (!tuples || *tuples > s.budget) break;
               auto rep = checkFlat(nm.module, Bound::exact(1), Bound::exact(k), opts);
               if (rep.failed() || k == g) {
                 if (rep.failed() && k < g) ++decidedEarly;
                 fl = std::move(rep);
                 break;
               }
             }
             if (!fl || fl->verdict == Verdict::Undecided) {
               t.undecidedOne();
               continue;
             }
             const auto fr = checkFree(nm.module);
             if (fl->passed()) ++flat;
             t.expect(fl->verdict == fr.verdict, [&] {
               return Json{{"module", moduleLabel(r->name(), nm.name)}, {"gen", g}, {"flat", verdictName(fl->verdict)},
                           {"free", verdictName(fr.verdict)}};
             });
           }
         c.details["flat"] = flat;
         c.details["failedBelowGen"] = decidedEarly;
         t.finish(c);
       }},
  };
}

std::vector<ClaimSpec> corPromotion(const RunSettings& s) {
  auto promote = [s](bool flatness, const AlgebraPtr& r, std::size_t maxQ, std::size_t maxN, ClaimResult& c) {
    const auto opts = s.options();
    Tally t;
    std::size_t base = 0, notBase = 0;
    for (const auto& nm : corpusModules(r))
      for (std::size_t q = 1; q <= maxQ; ++q) {
        auto check = [&](std::size_t n) {
          return flatness ? checkFlat(nm.module, Bound::exact(n), Bound::exact(q), opts)
                          : checkInjective(nm.module, Bound::exact(n), Bound::exact(q), opts);
        };
        const auto one = check(1);
        if (one.verdict == Verdict::Undecided) {
          t.undecidedOne();
          continue;
        }
        if (!one.passed()) {
          ++notBase;
          continue;
        }
        ++base;
        for (std::size_t n = 2; n <= maxN; ++n) {
          const auto more = check(n);
          if (more.verdict == Verdict::Undecided) {
            t.undecidedOne();
            continue;
          }
          t.expect(more.passed(), [&] {
            return Json{{"module", nm.name}, {"indices", pairJson(n, q)}, {"report", toJson(more)}};
          });
        }
      }
    c.details["baseCases"] = base;
    c.details["failAtOne"] = notBase;
    t.finish(c);
  };
  return {
      {"flat-square-zero-2", "over squareZero(2,2), (1,q)-flat implies (n,q)-flat for n <= 3, q <= 2",
       [promote](ClaimResult& c) { promote(true, squareZero(2, 2), 2, 3, c); }},
      {"injective-square-zero-2", "over squareZero(2,2), (1,q)-injective implies (n,q)-injective for n <= 3, q <= 2",
       [promote](ClaimResult& c) { promote(false, squareZero(2, 2), 2, 3, c); }},
      {"flat-square-zero-3", "over squareZero(2,3), (1,1)-flat implies (n,1)-flat for n <= 3",
       [promote](ClaimResult& c) { promote(true, squareZero(2, 3), 1, 3, c); }},
      {"injective-square-zero-3", "over squareZero(2,3), (1,1)-injective implies (n,1)-injective for n <= 3",
       [promote](ClaimResult& c) { promote(false, squareZero(2, 3), 1, 3, c); }},
  };
}

void witnessReplay(ClaimResult& c, const std::string& key, const CheckReport& rep,
                   const std::function<bool(const Json&)>& replay) {
  if (!rep.failed()) return;
  requireTrue(c, key + " witness replays", replay(rep.witness));
}

std::vector<ClaimSpec> propExample(const RunSettings& s, const AlgebraPtr& r, std::size_t p, std::size_t maxN) {
  const std::string ring = r->name();
  const std::string pStr = std::to_string(p), nextStr = std::to_string(p + 1);
  const std::string nStr = std::to_string(maxN);
  std::string rel = "x1 e1";
  for (std::size_t i = 2; i <= p + 1; ++i) rel += " + x" + std::to_string(i) + " e" + std::to_string(i);
  const std::string mod = "R^" + nextStr + "/(" + rel + ") over " + ring;
  auto flatPart = [=](bool dual, ClaimResult& c) {
    const auto opts = s.options();
    const Module m = diagonalRelationModule(r);
    const Module target = dual ? fqDual(m) : m;
    auto run = [&](std::size_t n, std::size_t k) {
      return dual ? checkInjective(target, Bound::exact(n), Bound::exact(k), opts)
                  : checkFlat(target, Bound::exact(n), Bound::exact(k), opts);
    };
    const std::string name = dual ? "injective" : "flat";
    for (std::size_t n = 1; n <= maxN; ++n)
      requireVerdict(c, name + "(" + std::to_string(n) + "," + pStr + ")", run(n, p), Verdict::Pass);
    const auto bad = run(1, p + 1);
    requireVerdict(c, name + "(1," + nextStr + ")", bad, Verdict::Fail);
    if (bad.failed()) {
      c.witness = bad.witness;
      witnessReplay(c, name, bad, [&](const Json& w) {
        return dual ? replayInjectiveWitness(target, w) : replayFlatWitness(target, w);
      });
    }
  };
  return {
      {"flat", mod + " is (n," + pStr + ")-flat for n <= " + nStr + " and not (1," + nextStr + ")-flat",
       [flatPart](ClaimResult& c) { flatPart(false, c); }},
      {"dual-injective",
       "its linear dual is (n," + pStr + ")-injective for n <= " + nStr + " and not (1," + nextStr + ")-injective",
       [flatPart](ClaimResult& c) { flatPart(true, c); }},
      {"presentation", "the module has gen " + nextStr + ", rel 1, no free summand and is D(k)",
       [r, p](ClaimResult& c) {
         const Module m = diagonalRelationModule(r);
         const auto prof = genRel(m);
         c.details["gen"] = prof.gen;
         c.details["rel"] = prof.rel;
         requireTrue(c, "gen", prof.gen == p + 1);
         requireTrue(c, "rel", prof.rel == 1);
         requireTrue(c, "noFreeSummand", !hasFreeSummand(m));
         requireTrue(c, "isDualOfResidueField", isIsomorphic(auslanderBridgerDual(residueField(r)), m));
         std::size_t best = 0;
         for (const auto& i : allIdeals(*r)) best = std::max(best, minGeneratorsIdeal(*r, i).count);
         requireTrue(c, "maxIdealGenerators", best == p + 1);
       }},
      {"cover-kernel", "the relation kernel in R^" + nextStr + " is (n," + pStr + ")-pure for n <= " + nStr +
                           " and not (1," + nextStr + ")-pure",
       [s, r, p, maxN](ClaimResult& c) {
         const auto opts = s.options();
         const auto k = coverKernel(diagonalRelationModule(r));
         for (std::size_t n = 1; n <= maxN; ++n)
           requireVerdict(c, "pure(" + std::to_string(n) + "," + std::to_string(p) + ")",
                          checkPurity(k, Bound::exact(n), Bound::exact(p), opts), Verdict::Pass);
         const auto bad = checkPurity(k, Bound::exact(1), Bound::exact(p + 1), opts);
         requireVerdict(c, "pure(1," + std::to_string(p + 1) + ")", bad, Verdict::Fail);
         witnessReplay(c, "purity", bad, [&](const Json& w) { return replayPurityWitness(k, w); });
       }},
  };
}

std::vector<ClaimSpec> propAnnihilator(const RunSettings& s) {
  std::vector<ClaimSpec> out;
  for (const auto& r : defaultRings()) {
    std::optional<bool> expected;
    if (r->name() == "squareZero(2,2)") expected = false;
    if (r->name() == "chain(2,2)" || r->name() == "chain(2,3)" || r->name() == "truncated(2,2,2)") expected = true;
    out.push_back({r->name(),
                   "ann(ann(A)) = A for every ideal A of " + r->name() +
                       " iff R is (n,1)-injective over itself for n <= 3",
                   [s, r, expected](ClaimResult& c) {
                     const auto opts = s.options();
                     const auto da = doubleAnnihilatorTest(r, r->radical().dim(), opts);
                     c.details["doubleAnnihilator"] = verdictName(da.verdict);
                     if (da.failed()) {
                       c.witness = da.witness;
                       requireTrue(c, "witnessReplays", replayDoubleAnnihilatorWitness(*r, da.witness));
                     }
                     if (expected)
                       requireVerdict(c, "expected", da, *expected ? Verdict::Pass : Verdict::Fail);
                     const Module self = freeModule(r, 1);
                     for (std::size_t n = 1; n <= 3; ++n)
                       requireVerdict(c, "selfInjective(" + std::to_string(n) + ",1)",
                                      checkInjective(self, Bound::exact(n), Bound::exact(1), opts), da.verdict);
                   }});
  }
  return out;
}

std::vector<ClaimSpec> corQuasiFrobenius(const RunSettings& s) {
  auto coincide = [s](const std::vector<NamedModule>& mods, ClaimResult& c) {
    const auto opts = s.options();
    Tally t;
    std::size_t free = 0;
    for (const auto& nm : mods) {
      const auto fl = checkFlat(nm.module, Bound::exact(1), Bound::exact(1), opts);
      const auto fr = checkFree(nm.module);
      const auto in = checkInjective(nm.module, Bound::exact(1), Bound::exact(1), opts);
      if (fl.verdict == Verdict::Undecided || in.verdict == Verdict::Undecided) {
        t.undecidedOne();
        continue;
      }
      if (fr.passed()) ++free;
      t.expect(fl.verdict == fr.verdict && fr.verdict == in.verdict, [&] {
        return Json{{"module", nm.name}, {"flat", verdictName(fl.verdict)}, {"free", verdictName(fr.verdict)},
                    {"injective", verdictName(in.verdict)}};
      });
    }
    c.details["free"] = free;
    t.finish(c);
  };
  return {
      {"cyclic-truncated",
       "over truncated(2,2,2), (1,1)-flat, free and (1,1)-injective coincide on every cyclic R/I",
       [coincide, s](ClaimResult& c) {
         const auto r = truncated(2, {2, 2});
         std::vector<NamedModule> mods;
         for (const auto& i : allIdeals(*r)) {
           std::string gens;
           for (const auto& g : minGeneratorsIdeal(*r, i).generators) gens += (gens.empty() ? "" : ",") + r->format(g);
           mods.push_back({"R/(" + gens + ")", cyclicModule(r, i)});
         }
         coincide(mods, c);
         const auto opts = s.options();
         const Module ra = cyclicModule(r, idealGenerate(*r, {r->parseElement("a")}));
         requireVerdict(c, "R/(a) flat(1,1)", checkFlat(ra, Bound::exact(1), Bound::exact(1), opts), Verdict::Fail);
         requireVerdict(c, "R/(a) free", checkFree(ra), Verdict::Fail);
         requireVerdict(c, "R/(a) injective(1,1)", checkInjective(ra, Bound::exact(1), Bound::exact(1), opts),
                        Verdict::Fail);
         const Module one = freeModule(r, 1);
         requireVerdict(c, "R flat(1,1)", checkFlat(one, Bound::exact(1), Bound::exact(1), opts), Verdict::Pass);
         requireVerdict(c, "R free", checkFree(one), Verdict::Pass);
         requireVerdict(c, "R injective(1,1)", checkInjective(one, Bound::exact(1), Bound::exact(1), opts),
                        Verdict::Pass);
       }},
      {"qf-corpus",
       "over the quasi-Frobenius rings chain(2,2), chain(2,3), chain(3,2), truncated(2,2,2), (1,1)-flat, free and "
       "(1,1)-injective coincide on every corpus module",
       [coincide](ClaimResult& c) { coincide(corpusFor({chain(2, 2), chain(2, 3), chain(3, 2), truncated(2, {2, 2})}), c); }},
  };
}

const std::vector<SuiteSpec>& registry() {
  static const std::vector<SuiteSpec> suites = {
      {"thm-1-1-oracle", "purity by equations agrees with purity by tensor injectivity", thmOracle},
      {"lemma-2-1", "generator bound for submodules from the ideal generator bound", lemmaGenerators},
      {"prop-2-2", "(1,2p)-purity collapses to (1,inf)-purity when ideals are p-generated", propCollapse},
      {"prop-3-1", "Auslander-Bridger duality: double dual, gen/rel exchange, additivity", propDual},
      {"prop-3-3", "staircase modules W(p,n,m): gen n, rel m, local End", propStaircase},
      {"lemma-3-2", "residue invertibility detects invertible endomorphisms", lemmaResidue},
      {"lemma-2-5", "Fitting property and local End for cyclic and corpus modules", lemmaFitting},
      {"prop-4-1-duality", "flatness against dual injectivity and sequence purity", propFlatDuality},
      {"lemma-4-4", "a g-generated module is flat iff (1,g)-flat", lemmaGeneratedFlat},
      {"cor-4-7", "over square-zero rings (1,q) flatness and injectivity extend to (n,q)", corPromotion},
      {"prop-4-8", "p = 1 witness over squareZero(2,2)",
       [](const RunSettings& s) { return propExample(s, squareZero(2, 2), 1, 3); }},
      {"prop-4-9", "p = 2 witness over squareZero(2,3)",
       [](const RunSettings& s) { return propExample(s, squareZero(2, 3), 2, 2); }},
      {"prop-4-10", "double annihilator property against self (n,1)-injectivity", propAnnihilator},
      {"cor-5-6", "over quasi-Frobenius rings (1,1)-flat, free and (1,1)-injective coincide", corQuasiFrobenius},
  };
  return suites;
}

const SuiteSpec& find(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  throw Error(ErrorCode::UnknownSuite, "unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.push_back(s.name);
    return out;
  }();
  return names;
}

std::string suiteSummary(const std::string& name) { return find(name).summary; }

SuiteResult runSuite(const std::string& name, const RunSettings& settings) {
  const auto& spec = find(name);
  validateSettings(settings);
  SuiteResult result;
  result.name = name;
  result.settings = settings;
  for (auto& claim : spec.claims(settings)) {
    const auto start = std::chrono::steady_clock::now();
    ClaimResult c;
    c.id = claim.id;
    c.anchor = claim.anchor;
    try {
      claim.body(c);
    } catch (const Error& e) {
      c.verdict = e.code() == ErrorCode::BudgetExceeded ? Verdict::Undecided : Verdict::Fail;
      c.details["error"] = e.what();
    }
    c.elapsedSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.claims.push_back(std::move(c));
  }
  return result;
}

}  // namespace puritylab
