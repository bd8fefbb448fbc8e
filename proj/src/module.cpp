#include "puritylab/module.hpp"

#include <random>
#include <set>
#include <unordered_set>

#include "puritylab/error.hpp"

namespace puritylab {

// ---------------------------------------------------------------------------
// RelationMatrix

RelationMatrix::RelationMatrix(std::size_t rows, std::size_t cols, const Algebra& r)
    : rows_(rows), cols_(cols), entries_(rows * cols, r.zero()) {}

Vector RelationMatrix::columnVector(std::size_t j) const {
  Vector v;
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto& c = at(i, j).coeffs;
    v.insert(v.end(), c.begin(), c.end());
  }
  return v;
}

RelationMatrix RelationMatrix::fromColumns(const std::vector<Vector>& columns, std::size_t rows, const Algebra& r) {
  const std::size_t d = r.dim();
  RelationMatrix m(rows, columns.size(), r);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows * d) throw Error(ErrorCode::BadDimensions, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i)
      m.at(i, j).coeffs.assign(columns[j].begin() + static_cast<std::ptrdiff_t>(i * d),
                               columns[j].begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
  }
  return m;
}

RelationMatrix RelationMatrix::transposed() const {
  RelationMatrix t;
  t.rows_ = cols_;
  t.cols_ = rows_;
  t.entries_.resize(entries_.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = at(i, j);
  return t;
}

// ---------------------------------------------------------------------------
// Module

namespace {

void checkModuleAxioms(const Algebra& r, const std::vector<Matrix>& actions, std::size_t dim) {
  const std::size_t d = r.dim();
  if (actions.size() != d)
    throw Error(ErrorCode::NotAModule, "need one action matrix per ring basis element (" + std::to_string(d) + ")");
  for (const auto& a : actions)
    if (a.rows() != dim || a.cols() != dim) throw Error(ErrorCode::NotAModule, "action matrices must be square of carrier size");
  if (actions[0] != Matrix::identity(dim)) throw Error(ErrorCode::NotAModule, "the unit must act as the identity");
  const auto& f = r.field();
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Matrix expected(dim, dim);
      const auto& c = r.table()[i][j];
      for (std::size_t k = 0; k < d; ++k)
        if (c[k] != 0) expected = add(f, expected, scale(f, c[k], actions[k]));
      if (multiply(f, actions[i], actions[j]) != expected || multiply(f, actions[j], actions[i]) != expected)
        throw Error(ErrorCode::NotAModule,
                    "action of " + r.labels()[i] + "*" + r.labels()[j] + " is not the composite of the actions");
    }
}

}  // namespace

Module::Module(AlgebraPtr ring, std::vector<Matrix> actions) {
  if (!ring) throw Error(ErrorCode::NotAModule, "module needs a ring");
  const std::size_t dim = actions.empty() ? 0 : actions[0].rows();
  checkModuleAxioms(*ring, actions, dim);
  auto d = std::make_shared<Data>();
  d->ring = std::move(ring);
  d->dim = dim;
  d->actions = std::move(actions);
  data_ = std::move(d);
}

Module::Module(AlgebraPtr ring, std::vector<Matrix> actions, Trusted) {
  auto d = std::make_shared<Data>();
  d->dim = actions.empty() ? 0 : actions[0].rows();
  d->ring = std::move(ring);
  d->actions = std::move(actions);
  data_ = std::move(d);
}

Module Module::withPresentation(const Module& carrier, Presentation presentation) {
  Module cokernel = fromPresentation(carrier.ringPtr(), presentation.generators, presentation.relations);
  if (!isIsomorphic(carrier, cokernel))
    throw Error(ErrorCode::PostconditionViolated, "carrier is not isomorphic to the cokernel of the presentation");
  auto d = std::make_shared<Data>(*carrier.data_);
  d->presentation = std::move(presentation);
  Module out;
  out.data_ = std::move(d);
  return out;
}

Matrix Module::actionOf(const RingElement& r) const {
  const auto& f = field();
  Matrix m(dim(), dim());
  for (std::size_t k = 0; k < ring().dim(); ++k) {
    const Scalar c = r.coeffs[k];
    if (c == 0) continue;
    const Matrix& a = action(k);
    for (std::size_t i = 0; i < dim(); ++i) axpy(f, c, a.row(i), m.row(i));
  }
  return m;
}

Vector Module::act(const RingElement& r, std::span<const Scalar> v) const {
  const auto& f = field();
  Vector out(dim(), 0);
  for (std::size_t k = 0; k < ring().dim(); ++k) {
    const Scalar c = r.coeffs[k];
    if (c == 0) continue;
    axpy(f, c, apply(f, action(k), v), out);
  }
  return out;
}

void requireSameRing(const Module& a, const Module& b) {
  if (!sameRing(a.ring(), b.ring())) throw Error(ErrorCode::RingMismatch, "modules live over different rings");
}

// ---------------------------------------------------------------------------
// ModuleMap

bool commutesWithActions(const Module& source, const Module& target, const Matrix& matrix) {
  const auto& f = source.field();
  for (std::size_t k = 1; k < source.ring().dim(); ++k) {
    if (multiply(f, target.action(k), matrix) != multiply(f, matrix, source.action(k))) return false;
  }
  return true;
}

ModuleMap::ModuleMap(Module source, Module target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  requireSameRing(source_, target_);
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw Error(ErrorCode::NotAHomomorphism, "map matrix has the wrong shape");
  if (!commutesWithActions(source_, target_, matrix_))
    throw Error(ErrorCode::NotAHomomorphism, "map does not commute with the ring action");
}

ModuleMap::ModuleMap(Module source, Module target, Matrix matrix, Module::Trusted)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}

std::size_t ModuleMap::rank() const { return puritylab::rank(source_.field(), matrix_); }
Subspace ModuleMap::kernel() const {
  Matrix k = nullspace(source_.field(), matrix_);
  if (k.rows() == 0) return Subspace(source_.dim());
  return Subspace::span(source_.field(), std::move(k));
}
Subspace ModuleMap::image() const {
  if (source_.dim() == 0) return Subspace(target_.dim());
  return columnSpace(source_.field(), matrix_);
}

// ---------------------------------------------------------------------------
// Submodule

Submodule::Submodule(Module ambient, Subspace space) : ambient_(std::move(ambient)), space_(std::move(space)) {
  if (space_.ambient() != ambient_.dim()) throw Error(ErrorCode::BadDimensions, "subspace does not live in the module");
}

Module Submodule::asModule() const {
  const auto& f = ambient_.field();
  const std::size_t s = space_.dim();
  std::vector<Matrix> actions;
  actions.reserve(ambient_.ring().dim());
  for (std::size_t k = 0; k < ambient_.ring().dim(); ++k) {
    Matrix a(s, s);
    for (std::size_t i = 0; i < s; ++i) {
      auto img = apply(f, ambient_.action(k), space_.basis().row(i));
      auto coords = space_.coordinates(img);
      for (std::size_t r = 0; r < s; ++r) a(r, i) = coords[r];
    }
    actions.push_back(std::move(a));
  }
  return Module(ambient_.ringPtr(), std::move(actions), Module::Trusted{});
}

Matrix Submodule::inclusionMatrix() const { return transpose(space_.basis()); }

Subspace actionClosure(const Module& m, const std::vector<Vector>& vectors) {
  const auto& f = m.field();
  Matrix rows(0, m.dim());
  for (const auto& v : vectors) {
    if (isZero(v)) continue;
    for (std::size_t k = 0; k < m.ring().dim(); ++k) rows.appendRow(apply(f, m.action(k), v));
  }
  return Subspace::span(f, std::move(rows));
}

// ---------------------------------------------------------------------------
// Constructions

Module zeroModule(const AlgebraPtr& r) {
  return Module(r, std::vector<Matrix>(r->dim(), Matrix(0, 0)), Module::Trusted{});
}

Module freeModule(const AlgebraPtr& r, std::size_t n) {
  const std::size_t d = r->dim();
  std::vector<Matrix> actions;
  for (std::size_t k = 0; k < d; ++k) {
    Matrix a(n * d, n * d);
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a(g * d + i, g * d + j) = r->regular(k)(i, j);
    actions.push_back(std::move(a));
  }
  auto data = std::make_shared<Module::Data>();
  data->ring = r;
  data->dim = n * d;
  data->actions = std::move(actions);
  data->presentation = Presentation{n, RelationMatrix(n, 0, *r)};
  Module m;
  m.data_ = std::move(data);
  return m;
}

Quotient quotient(const Module& m, const Subspace& s) {
  const auto& f = m.field();
  const std::size_t n = m.dim();
  const auto freeCols = s.freeColumns();
  const std::size_t r = freeCols.size();
  Matrix proj(r, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vector e(n, 0);
    e[c] = 1;
    auto rem = s.reduce(f, e);
    for (std::size_t i = 0; i < r; ++i) proj(i, c) = rem[freeCols[i]];
  }
  Matrix lift(n, r);
  for (std::size_t i = 0; i < r; ++i) lift(freeCols[i], i) = 1;
  std::vector<Matrix> actions;
  for (std::size_t k = 0; k < m.ring().dim(); ++k) actions.push_back(multiply(f, proj, multiply(f, m.action(k), lift)));
  return {Module(m.ringPtr(), std::move(actions), Module::Trusted{}), std::move(proj), std::move(lift)};
}

Quotient quotient(const Submodule& s) { return quotient(s.ambient(), s.space()); }

ModuleMap projectionMap(const Module& m, const Quotient& q) {
  return ModuleMap(m, q.module, q.projection, Module::Trusted{});
}

Module fromPresentation(const AlgebraPtr& r, std::size_t n, const RelationMatrix& relations) {
  if (relations.rows() != n)
    throw Error(ErrorCode::BadDimensions, "relation matrix needs " + std::to_string(n) + " rows");
  Module free = freeModule(r, n);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < relations.cols(); ++j) cols.push_back(relations.columnVector(j));
  Quotient q = quotient(free, actionClosure(free, cols));
  auto data = std::make_shared<Module::Data>(*q.module.data_);
  data->presentation = Presentation{n, relations};
  Module out;
  out.data_ = std::move(data);
  return out;
}

Submodule submoduleSpan(const Module& m, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != m.dim()) throw Error(ErrorCode::BadDimensions, "vector does not live in the carrier");
  return Submodule(m, actionClosure(m, vectors));
}

DirectSum directSum(const Module& a, const Module& b) {
  requireSameRing(a, b);
  const std::size_t n = a.dim(), p = b.dim();
  std::vector<Matrix> actions;
  for (std::size_t k = 0; k < a.ring().dim(); ++k) {
    Matrix m(n + p, n + p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = a.action(k)(i, j);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) m(n + i, n + j) = b.action(k)(i, j);
    actions.push_back(std::move(m));
  }
  DirectSum s{Module(a.ringPtr(), std::move(actions), Module::Trusted{}), Matrix(n + p, n), Matrix(n + p, p),
              Matrix(n, n + p), Matrix(p, n + p)};
  for (std::size_t i = 0; i < n; ++i) s.firstInclusion(i, i) = s.firstProjection(i, i) = 1;
  for (std::size_t i = 0; i < p; ++i) s.secondInclusion(n + i, i) = s.secondProjection(i, n + i) = 1;
  return s;
}

// ---------------------------------------------------------------------------
// Hom and tensor

std::vector<Matrix> homSpace(const Module& m, const Module& n) {
  requireSameRing(m, n);
  const auto& f = m.field();
  const std::size_t a = m.dim(), b = n.dim();
  if (a == 0 || b == 0) return {};
  // Unknown X is b x a, variable (s, c) at s*a + c. Equations A^N_k X = X A^M_k.
  const std::size_t vars = a * b;
  Matrix system(0, vars);
  Vector row(vars);
  for (std::size_t k = 1; k < m.ring().dim(); ++k) {
    const Matrix& an = n.action(k);
    const Matrix& am = m.action(k);
    for (std::size_t r = 0; r < b; ++r)
      for (std::size_t c = 0; c < a; ++c) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t s = 0; s < b; ++s)
          if (an(r, s) != 0) row[s * a + c] = f.add(row[s * a + c], an(r, s));
        for (std::size_t s = 0; s < a; ++s)
          if (am(s, c) != 0) row[r * a + s] = f.sub(row[r * a + s], am(s, c));
        if (!isZero(row)) system.appendRow(row);
      }
  }
  Matrix basis = system.rows() == 0 ? Matrix::identity(vars) : nullspace(f, system);
  std::vector<Matrix> out;
  out.reserve(basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    Matrix x(b, a);
    auto src = basis.row(i);
    for (std::size_t v = 0; v < vars; ++v) x(v / a, v % a) = src[v];
    out.push_back(std::move(x));
  }
  return out;
}

TensorProduct tensor(const Module& m, const Module& n) {
  requireSameRing(m, n);
  const auto& f = m.field();
  const std::size_t a = m.dim(), b = n.dim();
  const Matrix ia = Matrix::identity(a), ib = Matrix::identity(b);
  std::vector<Matrix> actions;
  Matrix relations(0, a * b);
  for (std::size_t k = 0; k < m.ring().dim(); ++k) {
    Matrix left = kronecker(f, m.action(k), ib);
    if (k > 0) {
      Matrix diff = transpose(subtract(f, left, kronecker(f, ia, n.action(k))));
      for (std::size_t r = 0; r < diff.rows(); ++r)
        if (!isZero(diff.row(r))) relations.appendRow(diff.row(r));
    }
    actions.push_back(std::move(left));
  }
  Module plain(m.ringPtr(), std::move(actions), Module::Trusted{});
  Quotient q = quotient(plain, Subspace::span(f, std::move(relations)));
  return {std::move(q.module), std::move(q.projection), std::move(q.lift)};
}

ModuleMap tensorMapOnInclusion(const Module& m, const Submodule& s) {
  requireSameRing(m, s.ambient());
  const auto& f = m.field();
  TensorProduct ts = tensor(m, s.asModule());
  TensorProduct tf = tensor(m, s.ambient());
  Matrix plainMap = kronecker(f, Matrix::identity(m.dim()), s.inclusionMatrix());
  Matrix induced = multiply(f, tf.classes, multiply(f, plainMap, ts.lift));
  return ModuleMap(ts.module, tf.module, std::move(induced), Module::Trusted{});
}

bool HomRestriction::isSurjective(const PrimeField& f) const {
  return puritylab::rank(f, map) == targetBasis.size();
}

HomRestriction homRestriction(const Submodule& s, const Module& m) {
  requireSameRing(m, s.ambient());
  const auto& f = m.field();
  HomRestriction out;
  out.sourceBasis = homSpace(s.ambient(), m);
  const auto homS = homSpace(s.asModule(), m);
  const std::size_t flat = m.dim() * s.dim();
  Matrix rows(0, flat);
  for (const auto& h : homS) rows.appendRow(h.data());
  Subspace target = Subspace::span(f, std::move(rows));
  for (std::size_t i = 0; i < target.dim(); ++i) {
    Matrix h(m.dim(), s.dim());
    auto src = target.basis().row(i);
    for (std::size_t v = 0; v < flat; ++v) h(v / s.dim(), v % s.dim()) = src[v];
    out.targetBasis.push_back(std::move(h));
  }
  const Matrix incl = s.inclusionMatrix();
  out.map = Matrix(target.dim(), out.sourceBasis.size());
  for (std::size_t j = 0; j < out.sourceBasis.size(); ++j) {
    Matrix restricted = multiply(f, out.sourceBasis[j], incl);
    auto coords = target.coordinates(restricted.data());
    for (std::size_t i = 0; i < coords.size(); ++i) out.map(i, j) = coords[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Radical, top, presentations

namespace {

Subspace radicalTimes(const Module& m, const Subspace& s) {
  const auto& f = m.field();
  Matrix rows(0, m.dim());
  for (const auto& p : m.ring().radicalBasis()) {
    Matrix ap = m.actionOf(p);
    for (std::size_t i = 0; i < s.dim(); ++i) rows.appendRow(apply(f, ap, s.basis().row(i)));
  }
  if (rows.rows() == 0) return Subspace(m.dim());
  return Subspace::span(f, std::move(rows));
}

}  // namespace

Subspace radicalSubmodule(const Module& m) { return radicalTimes(m, Subspace::whole(m.dim())); }

std::vector<std::size_t> radicalFiltration(const Module& m) {
  std::vector<std::size_t> dims;
  Subspace cur = Subspace::whole(m.dim());
  while (true) {
    dims.push_back(cur.dim());
    if (cur.dim() == 0) break;
    Subspace next = radicalTimes(m, cur);
    if (next.dim() == cur.dim()) break;  // unreachable for nilpotent P, kept as a guard
    cur = std::move(next);
  }
  return dims;
}

Top top(const Module& m) {
  const auto& f = m.field();
  Top t;
  t.radical = radicalSubmodule(m);
  t.liftColumns = t.radical.freeColumns();
  t.projection = Matrix(t.liftColumns.size(), m.dim());
  for (std::size_t c = 0; c < m.dim(); ++c) {
    Vector e(m.dim(), 0);
    e[c] = 1;
    auto rem = t.radical.reduce(f, e);
    for (std::size_t i = 0; i < t.liftColumns.size(); ++i) t.projection(i, c) = rem[t.liftColumns[i]];
  }
  return t;
}

std::size_t generatorCount(const Module& m, const Subspace& s) { return s.dim() - radicalTimes(m, s).dim(); }

MinimalPresentation minimalPresentation(const Module& m) {
  const auto& f = m.field();
  const auto& r = m.ring();
  const std::size_t d = r.dim();
  const Top t = top(m);
  const std::size_t g = t.liftColumns.size();

  Matrix phi(m.dim(), g * d);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t row = 0; row < m.dim(); ++row) phi(row, i * d + k) = m.action(k)(row, t.liftColumns[i]);

  Module free = freeModule(m.ringPtr(), g);
  Matrix kernelRows = nullspace(f, phi);
  Subspace kernel = kernelRows.rows() == 0 ? Subspace(g * d) : Subspace::span(f, std::move(kernelRows));

  Subspace acc = radicalTimes(free, kernel);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < kernel.dim(); ++i) {
    auto v = kernel.basis().row(i);
    if (acc.contains(f, v)) continue;
    gens.emplace_back(v.begin(), v.end());
    acc = sum(f, acc, Subspace::span(f, Matrix::fromRows({gens.back()}, g * d)));
  }

  MinimalPresentation out{GenRelProfile{g, gens.size()}, RelationMatrix::fromColumns(gens, g, r),
                          ModuleMap(free, m, std::move(phi), Module::Trusted{}), std::move(kernel)};
  return out;
}

GenRelProfile genRel(const Module& m) { return minimalPresentation(m).profile; }

// ---------------------------------------------------------------------------
// Isomorphism

std::optional<Matrix> findIsomorphism(const Module& m, const Module& n, const IsoOptions& options) {
  requireSameRing(m, n);
  const auto& f = m.field();
  if (m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return Matrix(0, 0);
  if (radicalFiltration(m) != radicalFiltration(n)) return std::nullopt;
  if (genRel(m) != genRel(n)) return std::nullopt;

  const Top tm = top(m);
  const Top tn = top(n);
  const std::size_t g = tm.liftColumns.size();
  Matrix liftM(m.dim(), g);
  for (std::size_t i = 0; i < g; ++i) liftM(tm.liftColumns[i], i) = 1;

  // A map with equal-dimensional source and target is invertible iff its
  // induced map on tops is (Nakayama), so the search runs over the span of the
  // top images of a Hom basis.
  const auto hom = homSpace(m, n);
  std::vector<Matrix> chosen, chosenTops;
  Subspace topSpan(g * g);
  for (const auto& h : hom) {
    Matrix th = multiply(f, tn.projection, multiply(f, h, liftM));
    if (topSpan.contains(f, th.data())) continue;
    topSpan = sum(f, topSpan, Subspace::span(f, Matrix::fromRows({th.data()}, g * g)));
    chosen.push_back(h);
    chosenTops.push_back(std::move(th));
  }
  const std::size_t s = chosen.size();
  if (s == 0) return std::nullopt;

  auto combine = [&](const Vector& c, const std::vector<Matrix>& parts) {
    Matrix acc(parts[0].rows(), parts[0].cols());
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) acc = add(f, acc, scale(f, c[i], parts[i]));
    return acc;
  };

  std::uint64_t space = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < s; ++i) {
    if (space > options.hardCap) {
      overflow = true;
      break;
    }
    space *= f.order();
  }
  overflow = overflow || space > options.hardCap;

  auto exhaustive = [&]() -> std::optional<Matrix> {
    Vector c(s, 0);
    for (std::uint64_t t = 0; t < space; ++t) {
      std::uint64_t x = t;
      for (std::size_t i = 0; i < s; ++i) {
        c[i] = static_cast<Scalar>(x % f.order());
        x /= f.order();
      }
      if (isInvertible(f, combine(c, chosenTops))) return combine(c, chosen);
    }
    return std::nullopt;
  };

  if (!overflow && space <= options.budget) return exhaustive();

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Scalar> digit(0, f.order() - 1);
  Vector c(s);
  for (std::size_t trial = 0; trial < options.samples; ++trial) {
    for (auto& x : c) x = digit(rng);
    if (isInvertible(f, combine(c, chosenTops))) return combine(c, chosen);
  }
  if (overflow)
    throw Error(ErrorCode::BudgetExceeded, "isomorphism search over q^" + std::to_string(s) + " top maps exceeds the cap");
  return exhaustive();
}

bool isIsomorphic(const Module& m, const Module& n, const IsoOptions& options) {
  return findIsomorphism(m, n, options).has_value();
}

std::optional<Matrix> freeSummandWitness(const Module& m) {
  const auto& r = m.ring();
  Module regular = freeModule(m.ringPtr(), 1);
  for (const auto& h : homSpace(m, regular)) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (r.residue(h.column(c)) != 0) return h;
    }
  }
  return std::nullopt;
}

bool hasFreeSummand(const Module& m) { return freeSummandWitness(m).has_value(); }

std::vector<Subspace> allSubmodules(const Module& m, std::size_t cap) {
  const auto& f = m.field();
  const std::size_t n = m.dim();
  std::uint64_t vectors = 1;
  for (std::size_t i = 0; i < n; ++i) {
    vectors *= f.order();
    if (vectors > (std::uint64_t{1} << 20))
      throw Error(ErrorCode::BudgetExceeded, "submodule lattice of a carrier of dimension " + std::to_string(n));
  }
  std::vector<Subspace> cyclic;
  std::unordered_set<std::string> cyclicKeys;
  Vector v(n, 0);
  for (std::uint64_t t = 1; t < vectors; ++t) {
    std::uint64_t x = t;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<Scalar>(x % f.order());
      x /= f.order();
    }
    Subspace c = actionClosure(m, {v});
    if (cyclicKeys.insert(c.key()).second) cyclic.push_back(std::move(c));
  }
  std::vector<Subspace> found{Subspace(n)};
  std::unordered_set<std::string> keys{found[0].key()};
  for (std::size_t idx = 0; idx < found.size(); ++idx) {
    for (const auto& c : cyclic) {
      if (found[idx].contains(f, c)) continue;
      Subspace next = sum(f, found[idx], c);
      if (keys.insert(next.key()).second) {
        found.push_back(std::move(next));
        if (found.size() > cap) throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(cap) + " submodules");
      }
    }
  }
  return found;
}

}  // namespace puritylab
