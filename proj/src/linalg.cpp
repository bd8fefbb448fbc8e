#include "puritylab/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "puritylab/error.hpp"

namespace puritylab {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Scalar q) : q_(q) {
  if (!isPrime(q) || q >= (1u << 16)) {
    throw Error(ErrorCode::NonPrimeCharacteristic,
                "characteristic " + std::to_string(q) + " is not a prime below 65536");
  }
  inverses_.assign(q, 0);
  for (Scalar a = 1; a < q; ++a) {
    if (inverses_[a] != 0) continue;
    for (Scalar b = 1; b < q; ++b) {
      if ((a * b) % q == 1) {
        inverses_[a] = b;
        inverses_[b] = a;
        break;
      }
    }
  }
}

Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inverses_[a];
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::fromRows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::appendRow(std::span<const Scalar> values) {
  assert(values.size() == cols_);
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

bool Matrix::isZero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
}

bool isZero(std::span<const Scalar> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

void axpy(const PrimeField& f, Scalar alpha, std::span<const Scalar> x, std::span<Scalar> y) {
  if (alpha == 0) return;
  const Scalar q = f.order();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) y[i] = (y[i] + alpha * x[i]) % q;
  }
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      axpy(f, a(i, k), b.row(k), out);
    }
  }
  return c;
}

Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  return c;
}

Matrix subtract(const PrimeField& f, const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
  return c;
}

Matrix scale(const PrimeField& f, Scalar s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.mul(s, a(i, j));
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Vector apply(const PrimeField& f, const Matrix& a, std::span<const Scalar> v) {
  assert(a.cols() == v.size());
  const Scalar q = f.order();
  Vector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    auto r = a.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) acc += static_cast<std::uint64_t>(r[j]) * v[j];
    out[i] = static_cast<Scalar>(acc % q);
  }
  return out;
}

Matrix kronecker(const PrimeField& f, const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar s = a(i, j);
      if (s == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          k(i * b.rows() + r, j * b.cols() + c) = f.mul(s, b(r, c));
    }
  return k;
}

Matrix power(const PrimeField& f, const Matrix& a, unsigned exponent) {
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = multiply(f, result, base);
    exponent >>= 1u;
    if (exponent > 0) base = multiply(f, base, base);
  }
  return result;
}

Matrix stackRows(const std::vector<const Matrix*>& blocks, std::size_t cols) {
  Matrix out(0, cols);
  for (const Matrix* b : blocks) {
    assert(b->cols() == cols);
    for (std::size_t r = 0; r < b->rows(); ++r) out.appendRow(b->row(r));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> rowReduce(const PrimeField& f, Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != lead) std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(lead).begin());
    const Scalar inv = f.inv(m(lead, c));
    if (inv != 1) {
      for (auto& x : m.row(lead)) x = f.mul(x, inv);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c) == 0) continue;
      axpy(f, f.neg(m(r, c)), m.row(lead), m.row(r));
    }
    pivots.push_back(c);
    ++lead;
  }
  if (lead < rows) {
    Matrix trimmed(lead, cols);
    for (std::size_t r = 0; r < lead; ++r)
      std::copy(m.row(r).begin(), m.row(r).end(), trimmed.row(r).begin());
    m = std::move(trimmed);
  }
  return pivots;
}

std::size_t rank(const PrimeField& f, Matrix m) { return rowReduce(f, m).size(); }

Matrix nullspace(const PrimeField& f, const Matrix& a) {
  Matrix r = a;
  const auto pivots = rowReduce(f, r);
  const std::size_t n = a.cols();
  std::vector<bool> isPivot(n, false);
  for (auto p : pivots) isPivot[p] = true;
  Matrix basis(0, n);
  Vector v(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (isPivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    basis.appendRow(v);
  }
  return basis;
}

Matrix leftNullspace(const PrimeField& f, const Matrix& a) { return nullspace(f, transpose(a)); }

std::optional<Vector> solve(const PrimeField& f, const Matrix& a, std::span<const Scalar> b) {
  assert(b.size() == a.rows());
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), aug.row(i).begin());
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rowReduce(f, aug);
  Vector x(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == a.cols()) return std::nullopt;
    x[pivots[i]] = aug(i, a.cols());
  }
  return x;
}

bool isInvertible(const PrimeField& f, const Matrix& a) {
  return a.rows() == a.cols() && rank(f, a) == a.rows();
}

std::optional<Matrix> inverse(const PrimeField& f, const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), aug.row(i).begin());
    aug(i, n + i) = 1;
  }
  const auto pivots = rowReduce(f, aug);
  if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(const PrimeField& f, Matrix rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  s.pivots_ = rowReduce(f, rows);
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::span(const PrimeField& f, const std::vector<Vector>& rows, std::size_t ambient) {
  return span(f, Matrix::fromRows(rows, ambient));
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  s.pivots_.resize(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
  return s;
}

std::vector<std::size_t> Subspace::freeColumns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Vector Subspace::reduce(const PrimeField& f, std::span<const Scalar> v) const {
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c != 0) axpy(f, f.neg(c), basis_.row(i), r);
  }
  return r;
}

bool Subspace::contains(const PrimeField& f, std::span<const Scalar> v) const {
  return isZero(reduce(f, v));
}

bool Subspace::contains(const PrimeField& f, const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(f, other.basis().row(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  Vector c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::string Subspace::key() const {
  std::string k;
  k.reserve(8 + basis_.data().size() * 2);
  auto put = [&](std::uint32_t x) {
    k.push_back(static_cast<char>(x & 0xff));
    k.push_back(static_cast<char>((x >> 8) & 0xff));
  };
  put(static_cast<std::uint32_t>(ambient_));
  put(static_cast<std::uint32_t>(dim()));
  for (Scalar s : basis_.data()) put(s);
  return k;
}

Subspace sum(const PrimeField& f, const Subspace& a, const Subspace& b) {
  assert(a.ambient() == b.ambient());
  return Subspace::span(f, stackRows({&a.basis(), &b.basis()}, a.ambient()));
}

Subspace intersect(const PrimeField& f, const Subspace& a, const Subspace& b) {
  // Zassenhaus: reduce [a | a ; b | 0]; rows with zero left half span the intersection.
  const std::size_t n = a.ambient();
  assert(n == b.ambient());
  Matrix z(a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto src = a.basis().row(i);
    std::copy(src.begin(), src.end(), z.row(i).begin());
    std::copy(src.begin(), src.end(), z.row(i).begin() + static_cast<std::ptrdiff_t>(n));
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    auto src = b.basis().row(i);
    std::copy(src.begin(), src.end(), z.row(a.dim() + i).begin());
  }
  const auto pivots = rowReduce(f, z);
  Matrix rows(0, n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= n) rows.appendRow(z.row(i).subspan(n, n));
  }
  return Subspace::span(f, std::move(rows));
}

Subspace image(const PrimeField& f, const Matrix& a, const Subspace& s) {
  Matrix rows(s.dim(), a.rows());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto img = apply(f, a, s.basis().row(i));
    std::copy(img.begin(), img.end(), rows.row(i).begin());
  }
  return Subspace::span(f, std::move(rows));
}

Subspace columnSpace(const PrimeField& f, const Matrix& a) { return Subspace::span(f, transpose(a)); }

}  // namespace puritylab
