#pragma once

// Finitely generated modules over an Algebra, stored as a carrier vector space
// with one action matrix per basis element of the ring. Modules, submodules
// and maps are immutable handles that share their data.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "puritylab/algebra.hpp"
#include "puritylab/linalg.hpp"

namespace puritylab {

/// n x m matrix over the ring. Columns are relations (or generators of a
/// submodule of R^n), rows are indexed by the free generators.
class RelationMatrix {
 public:
  RelationMatrix() = default;
  RelationMatrix(std::size_t rows, std::size_t cols, const Algebra& r);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  RingElement& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const RingElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Column j as a vector of R^n in generator-major coordinates.
  Vector columnVector(std::size_t j) const;
  static RelationMatrix fromColumns(const std::vector<Vector>& columns, std::size_t rows, const Algebra& r);
  RelationMatrix transposed() const;

  bool operator==(const RelationMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RingElement> entries_;
};

struct Presentation {
  std::size_t generators = 0;
  RelationMatrix relations;
};

class Module {
 public:
  struct Trusted {};

  Module() = default;
  /// Checks that the matrices define a unital module structure.
  Module(AlgebraPtr ring, std::vector<Matrix> actions);
  /// Skips the module-axiom check; for carriers derived from valid modules.
  Module(AlgebraPtr ring, std::vector<Matrix> actions, Trusted);

  /// Attaches presentation metadata after checking the carrier is isomorphic
  /// to its cokernel.
  static Module withPresentation(const Module& carrier, Presentation presentation);

  const Algebra& ring() const { return *data_->ring; }
  const AlgebraPtr& ringPtr() const { return data_->ring; }
  const PrimeField& field() const { return data_->ring->field(); }
  std::size_t dim() const { return data_->dim; }
  const Matrix& action(std::size_t basisIndex) const { return data_->actions[basisIndex]; }
  const std::vector<Matrix>& actions() const { return data_->actions; }
  Matrix actionOf(const RingElement& r) const;
  Vector act(const RingElement& r, std::span<const Scalar> v) const;
  const std::optional<Presentation>& presentation() const { return data_->presentation; }

  bool isZero() const { return dim() == 0; }

 private:
  friend Module freeModule(const AlgebraPtr& r, std::size_t n);
  friend Module fromPresentation(const AlgebraPtr& r, std::size_t n, const RelationMatrix& relations);

  struct Data {
    AlgebraPtr ring;
    std::size_t dim = 0;
    std::vector<Matrix> actions;
    std::optional<Presentation> presentation;
  };
  std::shared_ptr<const Data> data_;
};

void requireSameRing(const Module& a, const Module& b);

class ModuleMap {
 public:
  /// matrix is target.dim() x source.dim(); checked against every action.
  ModuleMap(Module source, Module target, Matrix matrix);
  ModuleMap(Module source, Module target, Matrix matrix, Module::Trusted);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  std::size_t rank() const;
  bool isInjective() const { return rank() == source_.dim(); }
  bool isSurjective() const { return rank() == target_.dim(); }
  Subspace kernel() const;
  Subspace image() const;

 private:
  Module source_;
  Module target_;
  Matrix matrix_;
};

bool commutesWithActions(const Module& source, const Module& target, const Matrix& matrix);

class Submodule {
 public:
  Submodule(Module ambient, Subspace space);

  const Module& ambient() const { return ambient_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  /// The submodule as a module in its echelon-basis coordinates.
  Module asModule() const;
  /// ambient.dim() x dim() matrix whose columns are the basis vectors.
  Matrix inclusionMatrix() const;

  bool operator==(const Submodule& other) const { return space_ == other.space_; }

 private:
  Module ambient_;
  Subspace space_;
};

/// R-span of vectors: span{e_k v}, which is already action-closed.
Subspace actionClosure(const Module& m, const std::vector<Vector>& vectors);

Module freeModule(const AlgebraPtr& r, std::size_t n);
Module fromPresentation(const AlgebraPtr& r, std::size_t n, const RelationMatrix& relations);
Submodule submoduleSpan(const Module& m, const std::vector<Vector>& vectors);
Module zeroModule(const AlgebraPtr& r);

struct Quotient {
  Module module;
  Matrix projection;  // quotient.dim() x ambient.dim()
  Matrix lift;        // ambient.dim() x quotient.dim(), a section of the projection
};

Quotient quotient(const Module& m, const Subspace& s);
Quotient quotient(const Submodule& s);
ModuleMap projectionMap(const Module& m, const Quotient& q);

struct DirectSum {
  Module module;
  Matrix firstInclusion, secondInclusion;    // columns: embedded bases
  Matrix firstProjection, secondProjection;  // rows: coordinate projections
};

DirectSum directSum(const Module& a, const Module& b);

/// Field basis of Hom_R(M, N); each element is N.dim() x M.dim().
std::vector<Matrix> homSpace(const Module& m, const Module& n);

struct TensorProduct {
  Module module;
  Matrix classes;  // dim x (M.dim * N.dim): class of x_i (x) y_j in column i*N.dim + j
  Matrix lift;     // (M.dim * N.dim) x dim, a section of `classes`
};

TensorProduct tensor(const Module& m, const Module& n);

/// M (x) S -> M (x) F induced by the inclusion S in F.
ModuleMap tensorMapOnInclusion(const Module& m, const Submodule& s);

struct HomRestriction {
  std::vector<Matrix> sourceBasis;  // basis of Hom(F, M)
  std::vector<Matrix> targetBasis;  // echelon basis of Hom(S, M)
  Matrix map;                       // targetBasis.size() x sourceBasis.size()

  bool isSurjective(const PrimeField& f) const;
};

/// Hom(F, M) -> Hom(S, M), restriction along the inclusion S in F.
HomRestriction homRestriction(const Submodule& s, const Module& m);

/// P^k M for k = 0, 1, ... until zero; dimensions of the radical filtration.
std::vector<std::size_t> radicalFiltration(const Module& m);
/// P M as a subspace of the carrier.
Subspace radicalSubmodule(const Module& m);

struct Top {
  Subspace radical;        // P M
  std::vector<std::size_t> liftColumns;  // carrier coordinates lifting a basis of M/PM
  Matrix projection;       // gen x dim, coordinates in M/PM
};

Top top(const Module& m);

struct GenRelProfile {
  std::size_t gen = 0;
  std::size_t rel = 0;
  bool operator==(const GenRelProfile&) const = default;
};

struct MinimalPresentation {
  GenRelProfile profile;
  RelationMatrix relations;  // gen x rel
  ModuleMap cover;           // R^gen -> M
  Subspace kernel;           // ker of the cover inside R^gen
};

MinimalPresentation minimalPresentation(const Module& m);
GenRelProfile genRel(const Module& m);
/// gen of a submodule given as a subspace of M.
std::size_t generatorCount(const Module& m, const Subspace& s);

struct IsoOptions {
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::uint64_t hardCap = std::uint64_t{1} << 26;
  std::size_t samples = 256;
  std::uint64_t seed = 0x5eed;
};

/// An invertible homomorphism M -> N if one exists. Throws BudgetExceeded
/// when the search space is too large to decide.
std::optional<Matrix> findIsomorphism(const Module& m, const Module& n, const IsoOptions& options = {});
bool isIsomorphic(const Module& m, const Module& n, const IsoOptions& options = {});

/// A homomorphism h: M -> R whose image is not inside P, if any.
std::optional<Matrix> freeSummandWitness(const Module& m);
bool hasFreeSummand(const Module& m);

/// Every submodule of M (as subspaces), closed from zero by adding cyclic
/// submodules. Throws BudgetExceeded when more than `cap` are found.
std::vector<Subspace> allSubmodules(const Module& m, std::size_t cap = 1u << 16);

}  // namespace puritylab
