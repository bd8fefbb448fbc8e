#pragma once

// Dense exact linear algebra over prime fields F_q.
//
// Vectors are plain coefficient arrays; matrices are row-major. Subspaces are
// stored as their reduced row echelon basis, which is unique per subspace and
// therefore doubles as a canonical key.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace puritylab {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

class PrimeField {
 public:
  /// Throws NonPrimeCharacteristic unless q is a prime below 2^16.
  explicit PrimeField(Scalar q);

  Scalar order() const noexcept { return q_; }

  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept { return (a * b) % q_; }
  Scalar inv(Scalar a) const;
  Scalar reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(q_);
    return static_cast<Scalar>(r < 0 ? r + q_ : r);
  }

  bool operator==(const PrimeField& other) const noexcept { return q_ == other.q_; }

 private:
  Scalar q_;
  std::vector<Scalar> inverses_;
};

bool isPrime(std::uint64_t n);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix fromRows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector rowVector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }
  Vector column(std::size_t c) const;

  void appendRow(std::span<const Scalar> values);
  const std::vector<Scalar>& data() const noexcept { return data_; }

  bool isZero() const noexcept;
  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix subtract(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix scale(const PrimeField& f, Scalar s, const Matrix& a);
Matrix transpose(const Matrix& a);
Vector apply(const PrimeField& f, const Matrix& a, std::span<const Scalar> v);
/// Kronecker product a ⊗ b.
Matrix kronecker(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix power(const PrimeField& f, const Matrix& a, unsigned exponent);
Matrix stackRows(const std::vector<const Matrix*>& blocks, std::size_t cols);

void axpy(const PrimeField& f, Scalar alpha, std::span<const Scalar> x, std::span<Scalar> y);
bool isZero(std::span<const Scalar> v) noexcept;

/// In-place reduction to reduced row echelon form; returns pivot columns.
/// Zero rows are dropped.
std::vector<std::size_t> rowReduce(const PrimeField& f, Matrix& m);

std::size_t rank(const PrimeField& f, Matrix m);
/// Basis (as rows) of {x : a x = 0}.
Matrix nullspace(const PrimeField& f, const Matrix& a);
/// Basis (as rows) of {y : y a = 0}, i.e. dependencies among the rows of a.
Matrix leftNullspace(const PrimeField& f, const Matrix& a);
std::optional<Vector> solve(const PrimeField& f, const Matrix& a, std::span<const Scalar> b);
bool isInvertible(const PrimeField& f, const Matrix& a);
std::optional<Matrix> inverse(const PrimeField& f, const Matrix& a);

/// A linear subspace of F^n held as its reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(const PrimeField& f, Matrix rows);
  static Subspace span(const PrimeField& f, const std::vector<Vector>& rows, std::size_t ambient);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Coordinates not occupied by a pivot, in increasing order.
  std::vector<std::size_t> freeColumns() const;

  /// Remainder of v after elimination against the basis.
  Vector reduce(const PrimeField& f, std::span<const Scalar> v) const;
  bool contains(const PrimeField& f, std::span<const Scalar> v) const;
  bool contains(const PrimeField& f, const Subspace& other) const;
  /// Coordinates of v in the echelon basis; v must lie in the subspace.
  Vector coordinates(std::span<const Scalar> v) const;

  std::string key() const;
  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const PrimeField& f, const Subspace& a, const Subspace& b);
Subspace intersect(const PrimeField& f, const Subspace& a, const Subspace& b);
/// Image of the linear map x -> a x restricted to the subspace s (as column vectors).
Subspace image(const PrimeField& f, const Matrix& a, const Subspace& s);
Subspace columnSpace(const PrimeField& f, const Matrix& a);

}  // namespace puritylab
