#include "puritylab/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "puritylab/error.hpp"

namespace puritylab {

namespace {

std::string makeFingerprint(const PrimeField& f, const MultiplicationTable& table) {
  std::string fp = "q" + std::to_string(f.order()) + ":d" + std::to_string(table.size()) + ":";
  for (const auto& row : table)
    for (const auto& v : row)
      for (Scalar s : v) {
        fp += std::to_string(s);
        fp += ',';
      }
  return fp;
}

}  // namespace

Algebra::Algebra(PrimeField field, std::vector<std::string> labels, MultiplicationTable table, std::string name)
    : field_(field), labels_(std::move(labels)), table_(std::move(table)), name_(std::move(name)) {}

AlgebraPtr Algebra::build(PrimeField field, std::vector<std::string> labels, MultiplicationTable table,
                          std::string name) {
  const std::size_t d = labels.size();
  if (d == 0) throw Error(ErrorCode::BadDimensions, "algebra must have positive dimension");
  if (table.size() != d) throw Error(ErrorCode::BadDimensions, "multiplication table needs " + std::to_string(d) + " rows");
  for (auto& row : table) {
    if (row.size() != d) throw Error(ErrorCode::BadDimensions, "multiplication table rows need " + std::to_string(d) + " entries");
    for (auto& v : row) {
      if (v.size() != d)
        throw Error(ErrorCode::BadDimensions, "structure constant vectors need length " + std::to_string(d));
      for (auto& s : v) s %= field.order();
    }
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != d) throw Error(ErrorCode::BadDimensions, "basis labels must be distinct");
  if (name.empty()) name = "algebra(d=" + std::to_string(d) + ")";
  std::shared_ptr<Algebra> a(new Algebra(field, std::move(labels), std::move(table), std::move(name)));
  a->validate();
  return a;
}

void Algebra::validate() {
  const std::size_t d = dim();
  const auto& f = field_;

  for (std::size_t j = 0; j < d; ++j) {
    Vector ej(d, 0);
    ej[j] = 1;
    if (table_[0][j] != ej || table_[j][0] != ej)
      throw Error(ErrorCode::NoUnit, "basis element 0 ('" + labels_[0] + "') does not act as the unit on '" + labels_[j] + "'");
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (table_[i][j] != table_[j][i])
        throw Error(ErrorCode::NotCommutative, labels_[i] + "*" + labels_[j] + " != " + labels_[j] + "*" + labels_[i]);

  regular_.assign(d, Matrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) regular_[i](k, j) = table_[i][j][k];

  // (e_i e_j) e_k = e_i (e_j e_k) for all k  <=>  L_{e_i e_j} = L_i L_j.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (regularOf(RingElement{table_[i][j]}) != puritylab::multiply(f, regular_[i], regular_[j]))
        throw Error(ErrorCode::NotAssociative,
                    "(" + labels_[i] + "*" + labels_[j] + ")*x != " + labels_[i] + "*(" + labels_[j] + "*x)");
    }

  // In characteristic q the Frobenius x -> x^q is F_q-linear on a commutative
  // algebra; the nilradical is the kernel of a high enough power of it.
  const Scalar q = f.order();
  Matrix frob(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    RingElement p = basisElement(i);
    RingElement acc = one();
    for (Scalar e = 0; e < q; ++e) acc = multiply(acc, p);
    for (std::size_t k = 0; k < d; ++k) frob(k, i) = acc.coeffs[k];
  }
  unsigned steps = 1;
  for (std::uint64_t reach = q; reach < d; reach *= q) ++steps;
  radical_ = Subspace::span(f, nullspace(f, power(f, frob, steps)));

  // Simple factors of R/rad correspond to the Frobenius-fixed subalgebra.
  Matrix shifted = subtract(f, frob, Matrix::identity(d));
  const auto freeCols = radical_.freeColumns();
  Matrix toQuotient(freeCols.size(), d);
  for (std::size_t c = 0; c < d; ++c) {
    Vector e(d, 0);
    e[c] = 1;
    auto rem = radical_.reduce(f, e);
    for (std::size_t i = 0; i < freeCols.size(); ++i) toQuotient(i, c) = rem[freeCols[i]];
  }
  const std::size_t fixedDim = nullspace(f, puritylab::multiply(f, toQuotient, shifted)).rows();
  const std::size_t factors = fixedDim - radical_.dim();
  if (factors != 1)
    throw Error(ErrorCode::NotLocal, "non-units are not closed under addition (" + std::to_string(factors) +
                                         " maximal ideals)");
  if (freeCols.size() != 1)
    throw Error(ErrorCode::NotLocal, "residue field has degree " + std::to_string(freeCols.size()) +
                                         " over F_" + std::to_string(q) + "; only the prime field is supported");

  for (std::size_t i = 0; i < radical_.dim(); ++i) {
    Matrix m = regularOf(RingElement{radical_.basis().rowVector(i)});
    if (!power(f, m, static_cast<unsigned>(d)).isZero())
      throw Error(ErrorCode::NotNilpotentRadical, "radical basis element is not nilpotent");
  }

  residueColumn_ = freeCols[0];
  Vector unit(d, 0);
  unit[0] = 1;
  residueOfOne_ = radical_.reduce(f, unit)[residueColumn_];
  fingerprint_ = makeFingerprint(f, table_);
}

Matrix Algebra::regularOf(const RingElement& r) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Scalar c = r.coeffs[i];
    if (c == 0) continue;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) m(a, b) = field_.add(m(a, b), field_.mul(c, regular_[i](a, b)));
  }
  return m;
}

std::vector<RingElement> Algebra::radicalBasis() const {
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < radical_.dim(); ++i) out.push_back({radical_.basis().rowVector(i)});
  return out;
}

RingElement Algebra::zero() const { return {Vector(dim(), 0)}; }
RingElement Algebra::one() const { return basisElement(0); }

RingElement Algebra::basisElement(std::size_t i) const {
  RingElement r = zero();
  r.coeffs[i] = 1;
  return r;
}

RingElement Algebra::add(const RingElement& a, const RingElement& b) const {
  RingElement r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = field_.add(a.coeffs[i], b.coeffs[i]);
  return r;
}

RingElement Algebra::sub(const RingElement& a, const RingElement& b) const {
  RingElement r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = field_.sub(a.coeffs[i], b.coeffs[i]);
  return r;
}

RingElement Algebra::multiply(const RingElement& a, const RingElement& b) const {
  return {apply(field_, regularOf(a), b.coeffs)};
}

RingElement Algebra::scale(Scalar s, const RingElement& a) const {
  RingElement r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = field_.mul(s, a.coeffs[i]);
  return r;
}

Scalar Algebra::residue(std::span<const Scalar> coeffs) const {
  const Scalar v = radical_.reduce(field_, coeffs)[residueColumn_];
  return field_.mul(v, field_.inv(residueOfOne_));
}

Scalar Algebra::residue(const RingElement& r) const { return residue(std::span<const Scalar>(r.coeffs)); }

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

RingElement Algebra::parseElement(std::string_view text) const {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw Error(ErrorCode::ParseError, "empty ring element");

  RingElement result = zero();
  std::size_t pos = 0;
  while (pos < compact.size()) {
    bool negative = false;
    if (compact[pos] == '+' || compact[pos] == '-') {
      negative = compact[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < compact.size() && compact[end] != '+' && compact[end] != '-') ++end;
    const std::string term = compact.substr(pos, end - pos);
    if (term.empty()) throw Error(ErrorCode::ParseError, "malformed ring element '" + std::string(text) + "'");
    pos = end;

    std::int64_t coef = 1;
    std::string label = term;
    auto exact = std::find(labels_.begin(), labels_.end(), term);
    if (exact == labels_.end()) {
      std::size_t digits = 0;
      while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
      if (digits > 0) {
        std::from_chars(term.data(), term.data() + digits, coef);
        label = term.substr(digits);
        if (!label.empty() && label[0] == '*') label = label.substr(1);
        if (label.empty()) label = labels_[0];
      }
    }
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
      throw Error(ErrorCode::ParseError, "unknown basis label '" + label + "' in '" + std::string(text) + "'");
    const std::size_t idx = static_cast<std::size_t>(it - labels_.begin());
    Scalar c = field_.reduce(coef);
    if (negative) c = field_.neg(c);
    result.coeffs[idx] = field_.add(result.coeffs[idx], c);
  }
  return result;
}

std::string Algebra::format(const RingElement& r) const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar c = r.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 && labels_[0] == "1") {
      out += std::to_string(c);
    } else if (c == 1) {
      out += labels_[i];
    } else {
      out += std::to_string(c) + "*" + labels_[i];
    }
  }
  return out.empty() ? "0" : out;
}

bool sameRing(const Algebra& a, const Algebra& b) { return &a == &b || a.fingerprint() == b.fingerprint(); }

// ---------------------------------------------------------------------------

namespace {

std::string variableName(std::size_t i, std::size_t count) {
  if (count <= 26) return std::string(1, static_cast<char>('a' + i));
  return "a" + std::to_string(i + 1);
}

}  // namespace

AlgebraPtr squareZero(Scalar q, std::size_t t) {
  PrimeField f(q);
  const std::size_t d = t + 1;
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 0; i < t; ++i) labels.push_back(variableName(i, t));
  MultiplicationTable table(d, std::vector<Vector>(d, Vector(d, 0)));
  for (std::size_t j = 0; j < d; ++j) {
    table[0][j][j] = 1;
    table[j][0][j] = 1;
  }
  return Algebra::build(f, std::move(labels), std::move(table),
                        "squareZero(" + std::to_string(q) + "," + std::to_string(t) + ")");
}

AlgebraPtr chain(Scalar q, std::size_t e) {
  PrimeField f(q);
  if (e == 0) throw Error(ErrorCode::UnsupportedFamily, "chain ring needs exponent >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < e; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  MultiplicationTable table(e, std::vector<Vector>(e, Vector(e, 0)));
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j)
      if (i + j < e) table[i][j][i + j] = 1;
  return Algebra::build(f, std::move(labels), std::move(table),
                        "chain(" + std::to_string(q) + "," + std::to_string(e) + ")");
}

AlgebraPtr truncated(Scalar q, const std::vector<std::size_t>& exponents) {
  PrimeField f(q);
  if (exponents.empty()) throw Error(ErrorCode::UnsupportedFamily, "truncated family needs at least one exponent");
  for (auto e : exponents)
    if (e == 0) throw Error(ErrorCode::UnsupportedFamily, "truncated exponents must be >= 1");
  const std::size_t t = exponents.size();

  // Monomials ordered by total degree, then lexicographically with the first
  // variable's exponent largest first (1, a, b, a^2, ab, b^2, ...).
  std::vector<std::vector<std::size_t>> monomials{{}};
  monomials[0].assign(t, 0);
  {
    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t> cur(t, 0);
    while (true) {
      all.push_back(cur);
      std::size_t i = 0;
      while (i < t && ++cur[i] == exponents[i]) cur[i++] = 0;
      if (i == t) break;
    }
    auto degree = [](const std::vector<std::size_t>& m) {
      std::size_t s = 0;
      for (auto x : m) s += x;
      return s;
    };
    std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
      if (degree(a) != degree(b)) return degree(a) < degree(b);
      return a > b;
    });
    monomials = std::move(all);
  }
  const std::size_t d = monomials.size();
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[monomials[i]] = i;

  std::vector<std::string> labels;
  for (const auto& m : monomials) {
    std::string s;
    for (std::size_t v = 0; v < t; ++v) {
      if (m[v] == 0) continue;
      s += variableName(v, t);
      if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    labels.push_back(s.empty() ? "1" : s);
  }
  MultiplicationTable table(d, std::vector<Vector>(d, Vector(d, 0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<std::size_t> prod(t);
      bool vanishes = false;
      for (std::size_t v = 0; v < t; ++v) {
        prod[v] = monomials[i][v] + monomials[j][v];
        if (prod[v] >= exponents[v]) vanishes = true;
      }
      if (!vanishes) table[i][j][index.at(prod)] = 1;
    }
  std::string name = "truncated(" + std::to_string(q);
  for (auto e : exponents) name += "," + std::to_string(e);
  name += ")";
  return Algebra::build(f, std::move(labels), std::move(table), std::move(name));
}

AlgebraPtr buildNamedAlgebra(std::string_view family, Scalar q, const std::vector<std::size_t>& params) {
  if (family == "squareZero") {
    if (params.size() != 1) throw Error(ErrorCode::UnsupportedFamily, "squareZero takes (q, t)");
    return squareZero(q, params[0]);
  }
  if (family == "chain") {
    if (params.size() != 1) throw Error(ErrorCode::UnsupportedFamily, "chain takes (q, e)");
    return chain(q, params[0]);
  }
  if (family == "truncated") return truncated(q, params);
  throw Error(ErrorCode::UnsupportedFamily, "unknown algebra family '" + std::string(family) + "'");
}

AlgebraPtr parseNamedAlgebra(std::string_view spec) {
  const std::string s = trim(spec);
  const auto open = s.find('(');
  const auto close = s.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw Error(ErrorCode::ParseError, "expected family(q,...) but got '" + s + "'");
  const std::string family = trim(s.substr(0, open));
  std::vector<std::size_t> nums;
  std::string inner = s.substr(open + 1, close - open - 1);
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    auto comma = inner.find(',', pos);
    if (comma == std::string::npos) comma = inner.size();
    const std::string tok = trim(std::string_view(inner).substr(pos, comma - pos));
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::ParseError, "bad integer '" + tok + "' in '" + s + "'");
    nums.push_back(value);
    pos = comma + 1;
  }
  if (nums.empty()) throw Error(ErrorCode::ParseError, "missing characteristic in '" + s + "'");
  const Scalar q = static_cast<Scalar>(nums[0]);
  nums.erase(nums.begin());
  return buildNamedAlgebra(family, q, nums);
}

// ---------------------------------------------------------------------------

Ideal idealGenerate(const Algebra& r, const std::vector<RingElement>& gens) {
  // R g = span{e_k g}, so the F-span of all e_k g_j is already closed.
  Matrix rows(0, r.dim());
  for (const auto& g : gens)
    for (std::size_t k = 0; k < r.dim(); ++k) rows.appendRow(apply(r.field(), r.regular(k), g.coeffs));
  return {Subspace::span(r.field(), std::move(rows))};
}

Ideal zeroIdeal(const Algebra& r) { return {Subspace(r.dim())}; }
Ideal unitIdeal(const Algebra& r) { return {Subspace::whole(r.dim())}; }
Ideal maximalIdeal(const Algebra& r) { return {r.radical()}; }

Ideal idealProduct(const Algebra& r, const Ideal& i, const Ideal& j) {
  Matrix rows(0, r.dim());
  for (std::size_t a = 0; a < i.dim(); ++a) {
    Matrix left = r.regularOf(RingElement{i.space.basis().rowVector(a)});
    for (std::size_t b = 0; b < j.dim(); ++b) rows.appendRow(apply(r.field(), left, j.space.basis().row(b)));
  }
  return {Subspace::span(r.field(), std::move(rows))};
}

Ideal annihilator(const Algebra& r, const Ideal& i) {
  // x y = 0 for all basis y of I: stack the maps x -> x y = L_y x.
  const std::size_t d = r.dim();
  Matrix system(0, d);
  for (std::size_t b = 0; b < i.dim(); ++b) {
    Matrix ly = r.regularOf(RingElement{i.space.basis().rowVector(b)});
    for (std::size_t row = 0; row < d; ++row) system.appendRow(ly.row(row));
  }
  if (system.rows() == 0) return unitIdeal(r);
  return {Subspace::span(r.field(), nullspace(r.field(), system))};
}

MinimalGenerators minGeneratorsIdeal(const Algebra& r, const Ideal& i) {
  const Ideal pi = idealProduct(r, maximalIdeal(r), i);
  MinimalGenerators out;
  Subspace acc = pi.space;
  for (std::size_t b = 0; b < i.dim(); ++b) {
    auto v = i.space.basis().row(b);
    if (acc.contains(r.field(), v)) continue;
    out.generators.push_back(RingElement{Vector(v.begin(), v.end())});
    acc = sum(r.field(), acc, Subspace::span(r.field(), Matrix::fromRows({Vector(v.begin(), v.end())}, r.dim())));
  }
  out.count = out.generators.size();
  return out;
}

std::vector<Ideal> allIdeals(const Algebra& r) {
  const auto& f = r.field();
  const std::size_t d = r.dim();
  std::vector<Ideal> found{zeroIdeal(r)};
  std::set<std::string> keys{found[0].space.key()};
  // Every ideal is a sum of principal ideals, so closing under "add one
  // principal ideal" from zero reaches all of them.
  std::vector<Ideal> principal;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= f.order();
  Vector coeffs(d, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t x = t;
    for (std::size_t i = 0; i < d; ++i) {
      coeffs[i] = static_cast<Scalar>(x % f.order());
      x /= f.order();
    }
    principal.push_back(idealGenerate(r, {RingElement{coeffs}}));
  }
  for (std::size_t idx = 0; idx < found.size(); ++idx) {
    for (const auto& p : principal) {
      Ideal next{sum(f, found[idx].space, p.space)};
      if (keys.insert(next.space.key()).second) found.push_back(next);
    }
  }
  return found;
}

}  // namespace puritylab
