#include <gtest/gtest.h>

#include "oracles.hpp"
#include "puritylab/checkers.hpp"
#include "puritylab/corpus.hpp"
#include "puritylab/error.hpp"

using namespace puritylab;

namespace {

Bound B(std::size_t v) { return Bound::exact(v); }

Submodule prop48Kernel(const AlgebraPtr& r) {
  return submoduleSpan(freeModule(r, 2), {{0, 1, 0, 0, 0, 1}});
}

bool replay(const Module& m, const CheckReport& rep) {
  if (rep.check == "flat") return replayFlatWitness(m, rep.witness);
  if (rep.check == "injective") return replayInjectiveWitness(m, rep.witness);
  if (rep.check == "end-local") return replayEndLocalWitness(m, rep.witness);
  if (rep.check == "fitting") return replayFittingWitness(m, rep.witness);
  if (rep.check == "free") return replayFreeWitness(m, rep.witness);
  ADD_FAILURE() << "no replay for " << rep.check;
  return false;
}

}  // namespace

TEST(EnumerateTest, SubmoduleCounts) {
  auto ch = chain(2, 2);
  auto list = enumerateSubmodules(*ch, 1, 1, 1, 1 << 20);
  EXPECT_EQ(list->size(), 3u);
  auto sz = squareZero(2, 2);
  auto ideals = enumerateSubmodules(*sz, 1, 1, 1, 1 << 20);
  ASSERT_EQ(ideals->size(), 5u);
  // Smallest generating tuple: 0, 1, a, b, a+b in little-endian order.
  std::vector<std::uint64_t> first;
  for (const auto& s : *ideals) first.push_back(s.firstIndex);
  EXPECT_EQ(first, (std::vector<std::uint64_t>{0, 1, 2, 4, 6}));
  // Covering generators reach the whole free module.
  auto pairs = enumerateSubmodules(*ch, 2, 2, 1, 1 << 20);
  bool hasWhole = false;
  for (const auto& s : *pairs) hasWhole = hasWhole || s.space.dim() == 4;
  EXPECT_TRUE(hasWhole);
  EXPECT_THROW(enumerateSubmodules(*sz, 3, 3, 1, 1 << 10), Error);
}

TEST(EnumerateTest, GeneratorShortcutMatchesBruteForce) {
  // 2^18 tuples of six elements of R; every ideal needs at most two.
  auto sz = squareZero(2, 2);
  ASSERT_EQ(maxSubmoduleGenerators(*sz, 1), std::optional<std::size_t>{2});
  EXPECT_EQ(effectiveGeneratorCount(*sz, 1, 6), 2u);
  const Module free1 = freeModule(sz, 1);
  const TupleSpace space{2, 1, 6, sz->dim()};
  std::vector<std::pair<Subspace, std::uint64_t>> seen;
  for (std::uint64_t idx = 0; idx < *space.size(); ++idx) {
    const Subspace s = actionClosure(free1, space.decode(idx));
    bool known = false;
    for (const auto& [t, first] : seen) known = known || t == s;
    if (!known) seen.emplace_back(s, idx);
  }
  auto list = enumerateSubmodules(*sz, 1, 6, 2, 1 << 20);
  ASSERT_EQ(list->size(), seen.size());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    EXPECT_EQ((*list)[i].space, seen[i].first);
    EXPECT_EQ((*list)[i].firstIndex, seen[i].second);
    EXPECT_EQ((*list)[i].generators.size(), 6u);
    EXPECT_EQ(actionClosure(free1, (*list)[i].generators), seen[i].first);
  }
}

TEST(EnumerateTest, ThreadIndependent) {
  auto sz = squareZero(2, 2);
  clearEnumerationCache();
  auto one = *enumerateSubmodules(*sz, 2, 2, 1, 1 << 20);
  clearEnumerationCache();
  auto many = *enumerateSubmodules(*sz, 2, 2, 8, 1 << 20);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].firstIndex, many[i].firstIndex);
    EXPECT_EQ(one[i].space, many[i].space);
  }
  // Matches the lattice of submodules of R^2 with at most two generators.
  std::size_t twoGenerated = 0;
  auto free2 = freeModule(sz, 2);
  for (const auto& s : allSubmodules(free2))
    if (generatorCount(free2, s) <= 2) ++twoGenerated;
  EXPECT_EQ(one.size(), twoGenerated);
}

TEST(EnumerateTest, FindFirstIsDeterministic) {
  for (unsigned t : {1u, 2u, 8u}) {
    EXPECT_EQ(findFirst(10000, t, [](std::uint64_t i) { return i % 977 == 976; }), 976u);
    EXPECT_FALSE(findFirst(5000, t, [](std::uint64_t) { return false; }).has_value());
  }
}

TEST(PurityTest, RelationKernel) {
  auto r = squareZero(2, 2);
  auto k = prop48Kernel(r);
  EXPECT_TRUE(checkPurity(k, B(1), B(1)).passed());
  auto fail = checkPurity(k, B(1), B(2));
  ASSERT_TRUE(fail.failed());
  EXPECT_TRUE(replayPurityWitness(k, fail.witness));
  EXPECT_TRUE(checkPurityViaTensor(k, B(1), B(1)).passed());
  EXPECT_TRUE(checkPurityViaTensor(k, B(1), B(2)).failed());
  EXPECT_NO_THROW(checkPurity(k, B(1), B(2), {.oracle = true}));
}

TEST(PurityTest, TrivialInclusions) {
  auto r = squareZero(2, 2);
  auto b = diagonalRelationModule(r);
  for (auto n : {1u, 2u})
    for (auto m : {1u, 2u}) {
      EXPECT_TRUE(checkPurity(Submodule(b, Subspace::whole(b.dim())), B(n), B(m)).passed());
      EXPECT_TRUE(checkPurity(Submodule(b, Subspace(b.dim())), B(n), B(m)).passed());
    }
  auto vac = checkPurity(prop48Kernel(r), B(0), B(2));
  EXPECT_TRUE(vac.passed());
  EXPECT_TRUE(vac.vacuous);
}

TEST(PurityTest, SingleEquationOracle) {
  for (auto r : {squareZero(2, 2), chain(2, 2), chain(3, 2)}) {
    std::vector<Module> family = r->dim() == 3 ? kroneckerModules(r, 3) : chainModules(r, 4);
    for (const auto& inc : allInclusions(family))
      EXPECT_EQ(checkPurity(inc, B(1), B(1)).passed(), oracle::pureForSingleEquations(inc)) << r->name();
  }
}

TEST(PurityTest, UndecidedOnBudget) {
  auto r = squareZero(2, 2);
  auto rep = checkPurity(prop48Kernel(r), B(3), B(3), {.budget = 1000});
  EXPECT_EQ(rep.verdict, Verdict::Undecided);
  EXPECT_FALSE(rep.exhaustive);
}

TEST(FlatTest, Examples) {
  auto r = squareZero(2, 2);
  auto m = diagonalRelationModule(r);
  EXPECT_TRUE(checkFlat(m, B(1), B(1)).passed());
  EXPECT_TRUE(checkFlat(m, B(2), B(1)).passed());
  EXPECT_TRUE(checkFlat(m, Bound::upToN(3), B(1)).passed());
  auto fail = checkFlat(m, B(1), B(2), {.oracle = true});
  ASSERT_TRUE(fail.failed());
  EXPECT_TRUE(replayFlatWitness(m, fail.witness));
  for (auto n : {1u, 2u}) EXPECT_TRUE(checkFlat(freeModule(r, 2), B(n), B(2)).passed());
  auto k = checkFlat(residueField(r), B(1), B(1));
  ASSERT_TRUE(k.failed());
  EXPECT_EQ(k.witness["coefficients"], Json::parse(R"([["a"]])"));
  EXPECT_TRUE(replayFlatWitness(residueField(r), k.witness));
}

TEST(InjectiveTest, Examples) {
  auto r = squareZero(2, 2);
  auto dual = fqDual(diagonalRelationModule(r));
  for (auto n : {1u, 2u, 3u}) EXPECT_TRUE(checkInjective(dual, B(n), B(1)).passed());
  auto fail = checkInjective(dual, B(1), B(2), {.oracle = true});
  ASSERT_TRUE(fail.failed());
  EXPECT_TRUE(replayInjectiveWitness(dual, fail.witness));
  auto k = checkInjective(residueField(r), B(1), B(1));
  ASSERT_TRUE(k.failed());
  EXPECT_TRUE(replayInjectiveWitness(residueField(r), k.witness));
  auto tr = truncated(2, {2, 2});
  EXPECT_TRUE(checkInjective(freeModule(tr, 1), B(1), B(1)).passed());
  EXPECT_TRUE(checkInjective(freeModule(tr, 1), B(2), B(2)).passed());
  EXPECT_TRUE(oracle::injectiveAgainstPrincipalIdeals(freeModule(tr, 1)));
}

TEST(FlatInjectiveProperty, PrincipalIdealOracles) {
  for (auto r : {squareZero(2, 2), chain(2, 2), chain(2, 3), truncated(2, {2, 2}), chain(3, 2)}) {
    for (const auto& [name, m] : corpusModules(r)) {
      if (m.dim() > 8) continue;
      EXPECT_EQ(checkFlat(m, B(1), B(1)).passed(), oracle::flatAgainstPrincipalIdeals(m)) << r->name() << " " << name;
      EXPECT_EQ(checkInjective(m, B(1), B(1)).passed(), oracle::injectiveAgainstPrincipalIdeals(m))
          << r->name() << " " << name;
    }
  }
}

TEST(FlatInjectiveProperty, RoutesAgreeAndDualityHolds) {
  for (auto r : {squareZero(2, 2), chain(2, 2), truncated(2, {2, 2})}) {
    for (const auto& [name, m] : corpusModules(r)) {
      for (auto n : {1u, 2u})
        for (auto k : {1u, 2u}) {
          auto flat = checkFlat(m, B(n), B(k), {.oracle = true});
          auto inj = checkInjective(fqDual(m), B(n), B(k), {.oracle = true});
          EXPECT_EQ(flat.verdict, inj.verdict) << r->name() << " " << name << " " << n << "," << k;
          if (flat.failed()) {
            EXPECT_TRUE(replay(m, flat));
          }
          if (inj.failed()) {
            EXPECT_TRUE(replay(fqDual(m), inj));
          }
        }
    }
  }
}

TEST(PurityProperty, CollapseAtTwiceTheEquations) {
  // Ideals of squareZero(2,2) need at most two generators, so (n,2n)-purity
  // already gives (n,m)-purity for larger m.
  auto r = squareZero(2, 2);
  auto incs = randomInclusions(r, 40, 4, 0xc011a95e);
  for (const auto& b : kroneckerModules(r, 2))
    for (auto& s : allSubmodules(b)) incs.emplace_back(b, std::move(s));
  const CheckOptions opts{.budget = std::uint64_t{1} << 24};
  std::size_t base[3] = {0, 0, 0};
  for (std::size_t n : {1u, 2u})
    for (std::size_t i = 0; i < incs.size(); ++i) {
      const auto at = checkPurity(incs[i], B(n), B(2 * n), opts);
      ASSERT_NE(at.verdict, Verdict::Undecided);
      if (!at.passed()) continue;
      ++base[n];
      for (std::size_t m = 2 * n + 1; m <= 6; ++m) {
        const auto longer = checkPurity(incs[i], B(n), B(m), opts);
        EXPECT_TRUE(longer.passed()) << "inclusion " << i << " at (" << n << "," << m << ")";
      }
    }
  EXPECT_GT(base[1], 0u);
  EXPECT_GT(base[2], 0u);
}

TEST(FlatInjectiveProperty, Monotone) {
  auto r = squareZero(2, 2);
  for (const auto& [name, m] : corpusModules(r)) {
    for (auto n : {1u, 2u})
      for (auto k : {1u, 2u}) {
        if (checkFlat(m, B(n), B(k)).passed()) {
          EXPECT_TRUE(checkFlat(m, B(1), B(1)).passed()) << name;
          EXPECT_TRUE(checkFlat(m, B(n), B(1)).passed()) << name;
          EXPECT_TRUE(checkFlat(m, B(1), B(k)).passed()) << name;
        }
        if (checkInjective(m, B(n), B(k)).passed()) {
          EXPECT_TRUE(checkInjective(m, B(n), B(1)).passed()) << name;
          EXPECT_TRUE(checkInjective(m, B(1), B(k)).passed()) << name;
        }
      }
  }
}

TEST(EndTest, Locality) {
  auto r = squareZero(2, 2);
  auto w = warfieldModule(r, {1, 2, 3, radicalGenerators(*r, 2)});
  EXPECT_TRUE(checkEndLocal(w).passed());
  auto free2 = freeModule(r, 2);
  auto nl = checkEndLocal(free2);
  ASSERT_TRUE(nl.failed());
  EXPECT_TRUE(replayEndLocalWitness(free2, nl.witness));
  EXPECT_TRUE(checkEndLocal(residueField(r)).passed());
  EXPECT_TRUE(checkEndLocal(zeroModule(r)).failed());
  EXPECT_EQ(checkEndLocal(free2, {.endBudget = 4}).verdict, Verdict::Undecided);
}

TEST(EndTest, ResidueRouteMatchesDirect) {
  std::size_t compared = 0, failures = 0;
  for (auto r : defaultRings())
    for (const auto& [name, m] : corpusModules(r)) {
      auto a = checkEndLocal(m);
      auto b = checkEndLocalDirect(m, {.endBudget = 1 << 14});
      if (b.verdict == Verdict::Undecided) continue;
      ++compared;
      failures += a.failed();
      EXPECT_EQ(a.verdict, b.verdict) << r->name() << " " << name;
      if (a.failed()) {
        EXPECT_TRUE(replayEndLocalWitness(m, a.witness));
      }
    }
  EXPECT_GE(compared, 40u);
  EXPECT_GT(failures, 0u);
}

TEST(EndTest, Fitting) {
  for (auto r : defaultRings()) {
    for (const auto& i : allIdeals(*r)) {
      auto m = cyclicModule(r, i);
      EXPECT_TRUE(checkFitting(m).passed()) << r->name();
    }
    auto m = freeModule(r, 2);
    EXPECT_EQ(fittingExponent(m, Matrix::identity(m.dim())), 1u);
    EXPECT_EQ(fittingExponent(m, Matrix(m.dim(), m.dim())), 1u);
    auto x = m.actionOf(r->radicalBasis().back());
    EXPECT_TRUE(fittingExponent(m, x).has_value());
  }
  // Sampling mode flags itself as non-exhaustive.
  auto rep = checkFitting(freeModule(squareZero(2, 2), 2), {.endBudget = 16, .samples = 20});
  EXPECT_TRUE(rep.passed());
  EXPECT_FALSE(rep.exhaustive);
}

TEST(FreeTest, Examples) {
  auto r = squareZero(2, 2);
  EXPECT_TRUE(checkFree(freeModule(r, 3)).passed());
  auto k = checkFree(residueField(r));
  ASSERT_TRUE(k.failed());
  EXPECT_EQ(k.witness["rel"], 2);
  auto m = checkFree(diagonalRelationModule(r));
  ASSERT_TRUE(m.failed());
  EXPECT_EQ(m.witness["rel"], 1);
  EXPECT_TRUE(replayFreeWitness(diagonalRelationModule(r), m.witness));
}

TEST(SequenceTest, Examples) {
  auto r = squareZero(2, 2);
  auto m = diagonalRelationModule(r);
  auto cover = minimalPresentation(m).cover;
  EXPECT_TRUE(checkSequencePurity(cover, B(1), B(1)).passed());
  EXPECT_TRUE(checkSequencePurity(cover, B(1), B(2)).failed());
  auto kcover = minimalPresentation(residueField(r)).cover;
  auto rep = checkSequencePurity(kcover, B(1), B(1));
  EXPECT_TRUE(rep.failed());
  EXPECT_EQ(rep.verdict, checkPurity(Submodule(kcover.source(), kcover.kernel()), B(1), B(1)).verdict);
  auto sum = directSum(m, residueField(r));
  ModuleMap split(sum.module, m, sum.firstProjection);
  for (auto n : {1u, 2u})
    for (auto k : {1u, 2u}) EXPECT_TRUE(checkSequencePurity(split, B(n), B(k)).passed());
}

TEST(AnnihilatorTest, DoubleAnnihilator) {
  auto sz = doubleAnnihilatorTest(squareZero(2, 2), 2);
  ASSERT_TRUE(sz.failed());
  EXPECT_EQ(sz.witness["ideal"], Json::parse(R"(["a"])"));
  EXPECT_EQ(sz.witness["doubleAnnihilator"], Json::parse(R"(["a","b"])"));
  EXPECT_TRUE(replayDoubleAnnihilatorWitness(*squareZero(2, 2), sz.witness));
  EXPECT_TRUE(doubleAnnihilatorTest(chain(2, 2), 2).passed());
  EXPECT_TRUE(doubleAnnihilatorTest(truncated(2, {2, 2}), 2).passed());
  // Oracle: element-level double annihilator over every ideal.
  for (auto r : {chain(2, 3), truncated(2, {2, 2}), squareZero(2, 2)}) {
    bool holds = true;
    for (const auto& i : allIdeals(*r)) {
      auto elems = oracle::elementsOf(i.space, 2);
      holds = holds && oracle::annihilatorSet(*r, oracle::annihilatorSet(*r, elems)) == elems;
    }
    EXPECT_EQ(doubleAnnihilatorTest(r, 2).passed(), holds) << r->name();
  }
}

TEST(DeterminismTest, ReportsIndependentOfThreads) {
  auto r = squareZero(2, 2);
  auto m = diagonalRelationModule(r);
  for (auto k : {1u, 2u}) {
    std::string reference;
    for (unsigned t : {1u, 4u, 8u}) {
      clearEnumerationCache();
      auto text = canonicalDump(toJson(checkFlat(m, B(2), B(k), {.threads = t})));
      if (reference.empty()) reference = text;
      EXPECT_EQ(text, reference);
    }
  }
}
