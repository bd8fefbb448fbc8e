#pragma once

// Brute-force reference computations used to pin expected values. They work
// element by element and share no code paths with the library beyond the
// structure-constant tables.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "puritylab/algebra.hpp"
#include "puritylab/module.hpp"

namespace oracle {

using puritylab::Scalar;
using puritylab::Vector;

inline std::vector<Vector> allVectors(Scalar q, std::size_t n) {
  std::vector<Vector> out;
  Vector v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == q) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Product straight from the table, without the regular representation.
inline Vector mul(const puritylab::Algebra& r, const Vector& x, const Vector& y) {
  const Scalar q = r.field().order();
  Vector out(r.dim(), 0);
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) {
      std::uint64_t c = std::uint64_t{x[i]} * y[j] % q;
      if (c == 0) continue;
      for (std::size_t k = 0; k < r.dim(); ++k) out[k] = (out[k] + c * r.table()[i][j][k]) % q;
    }
  return out;
}

inline Vector addv(Scalar q, const Vector& x, const Vector& y) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] + y[i]) % q;
  return out;
}

/// Ideal generated by gens, as a set of elements (BFS under + and * by basis).
inline std::set<Vector> idealClosure(const puritylab::Algebra& r, const std::vector<Vector>& gens) {
  const Scalar q = r.field().order();
  std::set<Vector> seen{Vector(r.dim(), 0)};
  std::vector<Vector> frontier{Vector(r.dim(), 0)};
  std::vector<Vector> moves;
  for (const auto& g : gens)
    for (std::size_t k = 0; k < r.dim(); ++k) moves.push_back(mul(r, r.basisElement(k).coeffs, g));
  while (!frontier.empty()) {
    auto v = frontier.back();
    frontier.pop_back();
    for (const auto& m : moves) {
      auto w = addv(q, v, m);
      if (seen.insert(w).second) frontier.push_back(w);
    }
  }
  return seen;
}

inline std::set<Vector> annihilatorSet(const puritylab::Algebra& r, const std::set<Vector>& ideal) {
  std::set<Vector> out;
  for (const auto& x : allVectors(r.field().order(), r.dim())) {
    bool kills = true;
    for (const auto& y : ideal)
      if (!puritylab::isZero(mul(r, x, y))) {
        kills = false;
        break;
      }
    if (kills) out.insert(x);
  }
  return out;
}

inline std::set<Vector> elementsOf(const puritylab::Subspace& s, Scalar q) {
  std::set<Vector> out;
  for (const auto& c : allVectors(q, s.dim())) {
    Vector v(s.ambient(), 0);
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < s.ambient(); ++j) v[j] = (v[j] + c[i] * s.basis()(i, j)) % q;
    out.insert(v);
  }
  return out;
}

/// Number of elements of Hom(M, N) counted by testing every matrix.
inline std::size_t countHoms(const puritylab::Module& m, const puritylab::Module& n) {
  std::size_t count = 0;
  const Scalar q = m.field().order();
  for (const auto& entries : allVectors(q, m.dim() * n.dim())) {
    puritylab::Matrix x(n.dim(), m.dim());
    for (std::size_t i = 0; i < entries.size(); ++i) x(i / m.dim(), i % m.dim()) = entries[i];
    if (puritylab::commutesWithActions(m, n, x)) ++count;
  }
  return count;
}

inline std::size_t log(std::size_t value, Scalar q) {
  std::size_t e = 0;
  while (value > 1) {
    value /= q;
    ++e;
  }
  return e;
}

}  // namespace oracle

namespace oracle {

inline Vector act(const puritylab::Module& m, const Vector& r, const Vector& x) {
  const Scalar q = m.field().order();
  Vector out(m.dim(), 0);
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] == 0) continue;
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) out[i] = (out[i] + r[k] * m.action(k)(i, j) * x[j]) % q;
  }
  return out;
}

/// Additive closure of a finite set of vectors.
inline std::set<Vector> additiveClosure(Scalar q, std::size_t dim, const std::vector<Vector>& gens) {
  std::set<Vector> seen{Vector(dim, 0)};
  std::vector<Vector> frontier{Vector(dim, 0)};
  while (!frontier.empty()) {
    auto v = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      auto w = addv(q, v, g);
      if (seen.insert(w).second) frontier.push_back(w);
    }
  }
  return seen;
}

/// For every r: r x = 0 implies x in ann(r) M. Equational form of flatness
/// against principal ideals.
inline bool flatAgainstPrincipalIdeals(const puritylab::Module& m) {
  const auto& r = m.ring();
  const Scalar q = r.field().order();
  const auto ringElems = allVectors(q, r.dim());
  const auto modElems = allVectors(q, m.dim());
  for (const auto& x : ringElems) {
    std::vector<Vector> products;
    for (const auto& s : ringElems)
      if (puritylab::isZero(mul(r, s, x)))
        for (const auto& y : modElems) products.push_back(act(m, s, y));
    auto allowed = additiveClosure(q, m.dim(), products);
    for (const auto& y : modElems)
      if (puritylab::isZero(act(m, x, y)) && !allowed.count(y)) return false;
  }
  return true;
}

/// For every r: y killed by ann(r) implies y = r z. Baer's criterion on
/// principal ideals.
inline bool injectiveAgainstPrincipalIdeals(const puritylab::Module& m) {
  const auto& r = m.ring();
  const Scalar q = r.field().order();
  const auto ringElems = allVectors(q, r.dim());
  const auto modElems = allVectors(q, m.dim());
  for (const auto& x : ringElems) {
    std::set<Vector> multiples;
    for (const auto& z : modElems) multiples.insert(act(m, x, z));
    for (const auto& y : modElems) {
      bool killed = true;
      for (const auto& s : ringElems)
        if (puritylab::isZero(mul(r, s, x)) && !puritylab::isZero(act(m, s, y))) {
          killed = false;
          break;
        }
      if (killed && !multiples.count(y)) return false;
    }
  }
  return true;
}

/// One equation in one unknown: r b = a solvable in B implies solvable in A.
inline bool pureForSingleEquations(const puritylab::Submodule& a) {
  const auto& b = a.ambient();
  const auto& r = b.ring();
  const Scalar q = r.field().order();
  const auto aElems = elementsOf(a.space(), q);
  const auto bElems = allVectors(q, b.dim());
  for (const auto& x : allVectors(q, r.dim())) {
    std::set<Vector> inB, inA;
    for (const auto& y : bElems) inB.insert(act(b, x, y));
    for (const auto& y : aElems) inA.insert(act(b, x, y));
    for (const auto& t : aElems)
      if (inB.count(t) && !inA.count(t)) return false;
  }
  return true;
}

/// Search every matrix for an invertible module map.
inline bool isomorphicByBruteForce(const puritylab::Module& m, const puritylab::Module& n) {
  if (m.dim() != n.dim()) return false;
  const Scalar q = m.field().order();
  for (const auto& entries : allVectors(q, m.dim() * n.dim())) {
    puritylab::Matrix x(n.dim(), m.dim());
    for (std::size_t i = 0; i < entries.size(); ++i) x(i / m.dim(), i % m.dim()) = entries[i];
    if (puritylab::commutesWithActions(m, n, x) && puritylab::isInvertible(m.field(), x)) return true;
  }
  return false;
}

}  // namespace oracle
