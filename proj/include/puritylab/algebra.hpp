#pragma once

// Finite-dimensional commutative local algebras over a prime field, given by
// structure constants in a fixed basis whose element 0 is the unit.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "puritylab/linalg.hpp"

namespace puritylab {

/// Coefficient vector of a ring element in the algebra basis.
struct RingElement {
  Vector coeffs;

  bool isZero() const noexcept { return puritylab::isZero(coeffs); }
  bool operator==(const RingElement&) const = default;
  auto operator<=>(const RingElement&) const = default;
};

/// Structure constants: table[i][j] holds the coordinates of e_i * e_j.
using MultiplicationTable = std::vector<std::vector<Vector>>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
 public:
  /// Validates the table (unit, commutativity, associativity, localness) and
  /// computes the maximal ideal. Entries are reduced modulo q.
  static AlgebraPtr build(PrimeField field, std::vector<std::string> labels, MultiplicationTable table,
                          std::string name = {});

  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const MultiplicationTable& table() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }

  /// Left multiplication by the basis element e_i, as a dim x dim matrix.
  const Matrix& regular(std::size_t i) const { return regular_[i]; }
  Matrix regularOf(const RingElement& r) const;

  /// Maximal ideal P, in reduced echelon form.
  const Subspace& radical() const noexcept { return radical_; }
  std::vector<RingElement> radicalBasis() const;

  RingElement zero() const;
  RingElement one() const;
  RingElement basisElement(std::size_t i) const;
  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement multiply(const RingElement& a, const RingElement& b) const;
  RingElement scale(Scalar s, const RingElement& a) const;

  /// Image in the residue field k = R/P (which is the prime field).
  Scalar residue(const RingElement& r) const;
  Scalar residue(std::span<const Scalar> coeffs) const;
  bool isUnit(const RingElement& r) const { return residue(r) != 0; }

  RingElement parseElement(std::string_view text) const;
  std::string format(const RingElement& r) const;

  /// log_q of the number of elements.
  std::size_t cardinalityExponent() const noexcept { return dim(); }
  /// Structural identity used for caching and ring-compatibility checks.
  const std::string& fingerprint() const noexcept { return fingerprint_; }

 private:
  Algebra(PrimeField field, std::vector<std::string> labels, MultiplicationTable table, std::string name);
  void validate();

  PrimeField field_;
  std::vector<std::string> labels_;
  MultiplicationTable table_;
  std::string name_;
  std::vector<Matrix> regular_;
  Subspace radical_;
  std::size_t residueColumn_ = 0;
  Scalar residueOfOne_ = 1;
  std::string fingerprint_;
};

bool sameRing(const Algebra& a, const Algebra& b);

// Named families.
AlgebraPtr squareZero(Scalar q, std::size_t t);
AlgebraPtr chain(Scalar q, std::size_t e);
AlgebraPtr truncated(Scalar q, const std::vector<std::size_t>& exponents);
/// family in {"squareZero", "chain", "truncated"}; params follow q.
AlgebraPtr buildNamedAlgebra(std::string_view family, Scalar q, const std::vector<std::size_t>& params);
/// Parses "squareZero(2,2)", "chain(2,3)", "truncated(2,2,2)".
AlgebraPtr parseNamedAlgebra(std::string_view spec);

struct Ideal {
  Subspace space;

  std::size_t dim() const noexcept { return space.dim(); }
  bool operator==(const Ideal&) const = default;
};

Ideal idealGenerate(const Algebra& r, const std::vector<RingElement>& gens);
Ideal zeroIdeal(const Algebra& r);
Ideal unitIdeal(const Algebra& r);
Ideal maximalIdeal(const Algebra& r);
/// I * J.
Ideal idealProduct(const Algebra& r, const Ideal& i, const Ideal& j);
/// {x : x I = 0}.
Ideal annihilator(const Algebra& r, const Ideal& i);

struct MinimalGenerators {
  std::size_t count = 0;
  std::vector<RingElement> generators;
};

/// gen I = dim I/PI, with a generating set lifting a basis of I/PI.
MinimalGenerators minGeneratorsIdeal(const Algebra& r, const Ideal& i);

/// Every ideal of R, by closure from the zero ideal.
std::vector<Ideal> allIdeals(const Algebra& r);

}  // namespace puritylab
