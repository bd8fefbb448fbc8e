#pragma once

// Decision procedures for purity, flatness, injectivity and endomorphism
// properties. Each returns a CheckReport; failures carry a witness that the
// replay functions below re-verify from scratch.

#include <cstdint>
#include <optional>
#include <string>

#include "puritylab/enumerate.hpp"
#include "puritylab/module.hpp"
#include "puritylab/report.hpp"

namespace puritylab {

/// A finite index, or UP_TO(N): an unbounded index checked at N, which covers
/// every smaller value by monotonicity.
struct Bound {
  std::size_t value = 1;
  bool upTo = false;

  static Bound exact(std::size_t v) { return {v, false}; }
  static Bound upToN(std::size_t n) { return {n, true}; }
  std::string label() const;
  bool operator==(const Bound&) const = default;
};

struct CheckOptions {
  unsigned threads = 1;
  std::uint64_t budget = std::uint64_t{1} << 24;    // generator tuples per enumeration
  std::uint64_t endBudget = std::uint64_t{1} << 16;  // endomorphisms enumerated
  std::uint64_t seed = 0x5eed;
  std::size_t samples = 256;
  bool oracle = false;  // run the independent route too and require agreement
};

CheckReport checkPurity(const Submodule& a, Bound n, Bound m, const CheckOptions& opts = {});
/// G (x) A -> G (x) B injective for every G = R^n / (m-generated).
CheckReport checkPurityViaTensor(const Submodule& a, Bound n, Bound m, const CheckOptions& opts = {});

CheckReport checkFlat(const Module& m, Bound n, Bound k, const CheckOptions& opts = {});
CheckReport checkFlatViaTensor(const Module& m, Bound n, Bound k, const CheckOptions& opts = {});
CheckReport checkInjective(const Module& m, Bound n, Bound k, const CheckOptions& opts = {});
CheckReport checkInjectiveViaHom(const Module& m, Bound n, Bound k, const CheckOptions& opts = {});

/// Locality of End(M) through its image in End(M/PM).
CheckReport checkEndLocal(const Module& m, const CheckOptions& opts = {});
/// Locality of End(M) by enumerating End(M) itself.
CheckReport checkEndLocalDirect(const Module& m, const CheckOptions& opts = {});
CheckReport checkFitting(const Module& m, const CheckOptions& opts = {});
CheckReport checkFree(const Module& m);
CheckReport checkSequencePurity(const ModuleMap& surjection, Bound n, Bound m, const CheckOptions& opts = {});
/// ann(ann(A)) = A for every ideal A generated by at most maxGens elements.
CheckReport doubleAnnihilatorTest(const AlgebraPtr& r, std::size_t maxGens, const CheckOptions& opts = {});

/// Whether the map induced by s on M/PM is invertible.
bool topInvertible(const Module& m, const Matrix& s);
/// Smallest t <= max(1, dim M) with M = ker s^t + im s^t, if any.
std::optional<std::size_t> fittingExponent(const Module& m, const Matrix& s);

// Witness replay: true iff the witness still exhibits the failure.
bool replayPurityWitness(const Submodule& a, const Json& witness);
bool replayFlatWitness(const Module& m, const Json& witness);
bool replayInjectiveWitness(const Module& m, const Json& witness);
bool replayEndLocalWitness(const Module& m, const Json& witness);
bool replayFittingWitness(const Module& m, const Json& witness);
bool replayFreeWitness(const Module& m, const Json& witness);
bool replayDoubleAnnihilatorWitness(const Algebra& r, const Json& witness);

// JSON helpers shared with the harness.
Json matrixToJson(const Matrix& m);
Matrix matrixFromJson(const Json& j);
Json vectorToJson(std::span<const Scalar> v);
Vector vectorFromJson(const Json& j);
Json relationsToJson(const Algebra& r, const RelationMatrix& m);
RelationMatrix relationsFromJson(const Algebra& r, const Json& j);

}  // namespace puritylab
