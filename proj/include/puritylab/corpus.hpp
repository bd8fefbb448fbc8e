#pragma once

// Named rings, modules and inclusion families used by the verification suites.

#include <string>
#include <vector>

#include "puritylab/constructions.hpp"
#include "puritylab/module.hpp"

namespace puritylab {

/// squareZero(2,2), squareZero(2,3), chain(2,2), chain(2,3), chain(3,2), truncated(2,2,2).
std::vector<AlgebraPtr> defaultRings();

Module residueField(const AlgebraPtr& r);
Module cyclicModule(const AlgebraPtr& r, const Ideal& i);
/// R^t / (x_1 e_1 + ... + x_t e_t) where x_1..x_t is the echelon basis of the
/// maximal ideal.
Module diagonalRelationModule(const AlgebraPtr& r);
/// The first p+1 echelon basis elements of the maximal ideal.
std::vector<RingElement> radicalGenerators(const Algebra& r, std::size_t count);

struct NamedModule {
  std::string name;
  Module module;
};

/// A fixed, deterministic list of modules over r covering the witnesses of the
/// suites (residue field, cyclic modules, staircase modules, duals, sums).
std::vector<NamedModule> corpusModules(const AlgebraPtr& r);

/// Modules V + W over squareZero(q, 2) with P V in W, P W = 0, given by all
/// pairs of maps V -> W for a and b, dim V + dim W <= maxDim. Every module of
/// Loewy length <= 2 appears up to isomorphism.
std::vector<Module> kroneckerModules(const AlgebraPtr& r, std::size_t maxDim);

/// R^a + k^b with 2a + b <= maxDim over chain(q, 2).
std::vector<Module> chainModules(const AlgebraPtr& r, std::size_t maxDim);

/// Every pair (A, B) with B from the list and A a submodule of B.
std::vector<Submodule> allInclusions(const std::vector<Module>& modules);

/// Seeded random inclusions inside Kronecker modules of dimension <= maxDim.
std::vector<Submodule> randomInclusions(const AlgebraPtr& r, std::size_t count, std::size_t maxDim,
                                        std::uint64_t seed);

}  // namespace puritylab
