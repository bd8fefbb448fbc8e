#include <gtest/gtest.h>

#include "oracles.hpp"
#include "puritylab/constructions.hpp"
#include "puritylab/corpus.hpp"
#include "puritylab/error.hpp"

using namespace puritylab;

namespace {

std::vector<std::vector<std::string>> formatted(const Algebra& r, const RelationMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(r.format(m.at(i, j)));
  return out;
}

StaircaseSpec spec(const Algebra& r, std::size_t p, std::size_t n, std::size_t m) {
  return {p, n, m, radicalGenerators(r, p + 1)};
}

ErrorCode errorOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::IoError;
}

Module prop48(const AlgebraPtr& r) { return diagonalRelationModule(r); }

}  // namespace

TEST(StaircaseTest, GoldenMatrices) {
  auto r2 = squareZero(2, 2);
  auto r3 = squareZero(2, 3);
  using Rows = std::vector<std::vector<std::string>>;
  EXPECT_EQ(formatted(*r2, staircaseRelations(*r2, spec(*r2, 1, 1, 2))), (Rows{{"a", "b"}}));
  EXPECT_EQ(formatted(*r2, staircaseRelations(*r2, spec(*r2, 1, 2, 3))), (Rows{{"a", "b", "0"}, {"0", "a", "b"}}));
  EXPECT_EQ(formatted(*r3, staircaseRelations(*r3, spec(*r3, 2, 1, 3))), (Rows{{"a", "b", "c"}}));
  EXPECT_EQ(formatted(*r3, staircaseRelations(*r3, spec(*r3, 2, 2, 5))),
            (Rows{{"a", "b", "c", "0", "0"}, {"0", "0", "a", "b", "c"}}));
  // Below the top of the range the last column has no override.
  EXPECT_EQ(formatted(*r2, staircaseRelations(*r2, spec(*r2, 1, 2, 2))), (Rows{{"a", "b"}, {"0", "a"}}));
}

TEST(StaircaseTest, GenAndRel) {
  auto r2 = squareZero(2, 2);
  auto k = warfieldModule(r2, spec(*r2, 1, 1, 2));
  EXPECT_TRUE(isIsomorphic(k, residueField(r2)));
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = n; m <= n + 1; ++m) {
      auto w = warfieldModule(r2, spec(*r2, 1, n, m));
      EXPECT_EQ(genRel(w), (GenRelProfile{n, m}));
    }
  auto r3 = squareZero(2, 3);
  EXPECT_EQ(genRel(warfieldModule(r3, spec(*r3, 2, 2, 5))), (GenRelProfile{2, 5}));
}

TEST(StaircaseTest, Errors) {
  auto r2 = squareZero(2, 2);
  EXPECT_EQ(errorOf([&] { warfieldModule(r2, spec(*r2, 1, 2, 4)); }), ErrorCode::RangeViolation);
  EXPECT_EQ(errorOf([&] { warfieldModule(r2, spec(*r2, 1, 3, 2)); }), ErrorCode::RangeViolation);
  auto a = r2->parseElement("a");
  EXPECT_EQ(errorOf([&] { warfieldModule(r2, {1, 1, 2, {a, a}}); }), ErrorCode::BadIdealGens);
  EXPECT_EQ(errorOf([&] { warfieldModule(r2, {1, 1, 2, {a}}); }), ErrorCode::BadIdealGens);
  auto ch = chain(2, 3);
  EXPECT_EQ(errorOf([&] { warfieldModule(ch, {1, 1, 2, {ch->parseElement("x"), ch->parseElement("x^2")}}); }),
            ErrorCode::BadIdealGens);
}

TEST(DualTest, AuslanderBridger) {
  auto r2 = squareZero(2, 2);
  auto k = residueField(r2);
  EXPECT_TRUE(isIsomorphic(auslanderBridgerDual(k), prop48(r2)));
  auto w = warfieldModule(r2, spec(*r2, 1, 2, 3));
  auto dw = auslanderBridgerDual(w);
  EXPECT_EQ(genRel(dw), (GenRelProfile{3, 2}));
  EXPECT_TRUE(isIsomorphic(auslanderBridgerDual(dw), w));
  auto ch = chain(2, 2);
  EXPECT_TRUE(isIsomorphic(auslanderBridgerDual(residueField(ch)), residueField(ch)));
  EXPECT_TRUE(oracle::isomorphicByBruteForce(auslanderBridgerDual(residueField(ch)), residueField(ch)));
  EXPECT_EQ(errorOf([&] { auslanderBridgerDual(freeModule(r2, 1)); }), ErrorCode::HasFreeSummand);
  EXPECT_EQ(errorOf([&] { auslanderBridgerDual(directSum(k, freeModule(r2, 1)).module); }),
            ErrorCode::HasFreeSummand);
}

TEST(DualTest, LinearDual) {
  auto tr = truncated(2, {2, 2});
  auto r1 = freeModule(tr, 1);
  auto d = fqDual(r1);
  EXPECT_EQ(d.dim(), 4u);
  EXPECT_TRUE(isIsomorphic(d, r1));
  EXPECT_TRUE(oracle::isomorphicByBruteForce(d, r1));
  auto r2 = squareZero(2, 2);
  // R is not self-dual over squareZero(2,2): its dual has a 2-dimensional top.
  EXPECT_FALSE(isIsomorphic(fqDual(freeModule(r2, 1)), freeModule(r2, 1)));
  for (const auto& [name, m] : corpusModules(r2)) {
    EXPECT_EQ(fqDual(m).dim(), m.dim()) << name;
    EXPECT_TRUE(isIsomorphic(fqDual(fqDual(m)), m)) << name;
  }
}

TEST(DualProperty, ExchangeAndInvolution) {
  for (auto r : {squareZero(2, 2), chain(2, 2), chain(2, 3), truncated(2, {2, 2}), squareZero(2, 3)}) {
    for (const auto& [name, m] : corpusModules(r)) {
      if (hasFreeSummand(m) || m.dim() > 12) continue;
      auto d = auslanderBridgerDual(m);
      auto p = genRel(m);
      EXPECT_EQ(genRel(d), (GenRelProfile{p.rel, p.gen})) << name;
      if (!hasFreeSummand(d)) {
        EXPECT_TRUE(isIsomorphic(auslanderBridgerDual(d), m)) << r->name() << " " << name;
      }
    }
  }
}

TEST(DualProperty, Additivity) {
  auto r2 = squareZero(2, 2);
  auto corpus = corpusModules(r2);
  std::vector<Module> noFree;
  for (const auto& [name, m] : corpus)
    if (!hasFreeSummand(m) && m.dim() <= 5) noFree.push_back(m);
  for (std::size_t i = 0; i < noFree.size(); ++i)
    for (std::size_t j = i; j < noFree.size(); ++j) {
      auto s = directSum(noFree[i], noFree[j]).module;
      auto pi = genRel(noFree[i]), pj = genRel(noFree[j]);
      EXPECT_EQ(genRel(s), (GenRelProfile{pi.gen + pj.gen, pi.rel + pj.rel}));
      EXPECT_TRUE(isIsomorphic(auslanderBridgerDual(s),
                               directSum(auslanderBridgerDual(noFree[i]), auslanderBridgerDual(noFree[j])).module));
    }
}

TEST(CorpusTest, KroneckerFamilyCount) {
  // Pairs of (dim V, dim W) with V + W <= 4, each with q^(2 v w) map pairs.
  std::size_t expected = 0;
  for (std::size_t v = 0; v <= 4; ++v)
    for (std::size_t w = 0; v + w <= 4; ++w) expected += std::size_t{1} << (2 * v * w);
  EXPECT_EQ(kroneckerModules(squareZero(2, 2), 4).size(), expected);
  for (const auto& m : kroneckerModules(squareZero(2, 2), 3)) EXPECT_NO_THROW(Module(m.ringPtr(), m.actions()));
}
