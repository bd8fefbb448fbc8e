#pragma once

// Deterministic enumeration of m-generated submodules of R^n.
//
// A generator tuple is a list of m vectors of R^n, indexed by an integer whose
// base-q digits are the field coordinates, least significant first: digit
// j*(n*d) + i*d + k is coordinate k of component i of generator j. Every
// distinct submodule is reported once, tagged with the smallest tuple index
// that generates it. Results do not depend on the thread count.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "puritylab/algebra.hpp"
#include "puritylab/linalg.hpp"

namespace puritylab {

struct TupleSpace {
  Scalar q = 2;
  std::size_t rank = 0;   // n
  std::size_t count = 0;  // m
  std::size_t ringDim = 0;

  std::size_t vectorDim() const { return rank * ringDim; }
  std::size_t digits() const { return count * vectorDim(); }
  /// q^digits, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> size() const;
  std::vector<Vector> decode(std::uint64_t index) const;
};

struct GeneratedSubmodule {
  Subspace space;
  std::vector<Vector> generators;
  std::uint64_t firstIndex = 0;
};

using SubmoduleList = std::shared_ptr<const std::vector<GeneratedSubmodule>>;

/// Largest gen C over all submodules C of R^n, computed from the submodule
/// lattice; nullopt when R^n is too large to walk.
std::optional<std::size_t> maxSubmoduleGenerators(const Algebra& r, std::size_t n);

/// min(m, maxSubmoduleGenerators(r, n)) when known, else m. The m-generated
/// submodules of R^n are exactly the g-generated ones for this g, and each has
/// the same smallest tuple index (the extra generators can be zero).
std::size_t effectiveGeneratorCount(const Algebra& r, std::size_t n, std::size_t m);

/// All submodules of R^n generated by m elements, sorted by firstIndex.
/// Throws BudgetExceeded when q^(d n g) exceeds the budget, where g is
/// effectiveGeneratorCount(r, n, m). Results are cached per (ring, n, m).
SubmoduleList enumerateSubmodules(const Algebra& r, std::size_t n, std::size_t m, unsigned threads,
                                  std::uint64_t budget);

void clearEnumerationCache();

unsigned effectiveThreads(unsigned requested);

/// Runs body(begin, end) over [0, total) split into contiguous chunks.
void parallelChunks(std::uint64_t total, unsigned threads,
                    const std::function<void(std::uint64_t, std::uint64_t)>& body);

/// Smallest i in [0, total) with pred(i), evaluated in parallel.
std::optional<std::uint64_t> findFirst(std::uint64_t total, unsigned threads,
                                       const std::function<bool(std::uint64_t)>& pred);

}  // namespace puritylab
