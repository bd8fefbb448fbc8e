#include "puritylab/corpus.hpp"

#include <random>

#include "puritylab/error.hpp"

namespace puritylab {

std::vector<AlgebraPtr> defaultRings() {
  return {squareZero(2, 2), squareZero(2, 3), chain(2, 2), chain(2, 3), chain(3, 2), truncated(2, {2, 2})};
}

Module residueField(const AlgebraPtr& r) { return cyclicModule(r, maximalIdeal(*r)); }

Module cyclicModule(const AlgebraPtr& r, const Ideal& i) {
  RelationMatrix rel(1, i.dim(), *r);
  for (std::size_t j = 0; j < i.dim(); ++j) rel.at(0, j) = {i.space.basis().rowVector(j)};
  return fromPresentation(r, 1, rel);
}

std::vector<RingElement> radicalGenerators(const Algebra& r, std::size_t count) {
  const auto basis = r.radicalBasis();
  if (count > basis.size()) throw Error(ErrorCode::BadIdealGens, "maximal ideal is too small");
  return {basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(count)};
}

Module diagonalRelationModule(const AlgebraPtr& r) {
  const auto basis = r->radicalBasis();
  RelationMatrix rel(basis.size(), 1, *r);
  for (std::size_t i = 0; i < basis.size(); ++i) rel.at(i, 0) = basis[i];
  return fromPresentation(r, basis.size(), rel);
}

namespace {

std::size_t squareOfRadicalDim(const Algebra& r) { return idealProduct(r, maximalIdeal(r), maximalIdeal(r)).dim(); }

}  // namespace

std::vector<NamedModule> corpusModules(const AlgebraPtr& r) {
  std::vector<NamedModule> out;
  const Module k = residueField(r);
  const Module free1 = freeModule(r, 1);
  out.push_back({"k", k});
  out.push_back({"R", free1});
  out.push_back({"k+k", directSum(k, k).module});
  out.push_back({"R+k", directSum(free1, k).module});
  std::size_t idx = 0;
  for (const auto& ideal : allIdeals(*r)) {
    ++idx;
    if (ideal.dim() == 0 || ideal.dim() == r->dim() || ideal == maximalIdeal(*r)) continue;
    std::string gens;
    for (const auto& g : minGeneratorsIdeal(*r, ideal).generators) gens += (gens.empty() ? "" : ",") + r->format(g);
    out.push_back({"R/(" + gens + ")", cyclicModule(r, ideal)});
  }
  const std::size_t t = r->radical().dim();
  if (squareOfRadicalDim(*r) == 0 && t >= 2) {
    const std::size_t p = t - 1;
    const auto a = radicalGenerators(*r, p + 1);
    const Module diag = diagonalRelationModule(r);
    out.push_back({"diagonal", diag});
    out.push_back({"diagonal^*", fqDual(diag)});
    for (std::size_t n = 1; n <= 2; ++n)
      for (std::size_t m = (n - 1) * p + 1; m <= n * p + 1; ++m) {
        Module w = warfieldModule(r, {p, n, m, a});
        out.push_back({"W(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(m) + ")", w});
      }
    out.push_back({"D(k)", auslanderBridgerDual(k)});
  }
  if (r->dim() <= 4) out.push_back({"R^*", fqDual(free1)});
  return out;
}

std::vector<Module> kroneckerModules(const AlgebraPtr& r, std::size_t maxDim) {
  if (r->dim() != 3 || squareOfRadicalDim(*r) != 0)
    throw Error(ErrorCode::UnsupportedFamily, "Kronecker modules need squareZero(q,2)");
  const Scalar q = r->field().order();
  std::vector<Module> out;
  for (std::size_t total = 0; total <= maxDim; ++total)
    for (std::size_t v = 0; v <= total; ++v) {
      const std::size_t w = total - v;
      const std::size_t entries = 2 * v * w;
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < entries; ++i) count *= q;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t x = idx;
        std::vector<Matrix> actions{Matrix::identity(total), Matrix(total, total), Matrix(total, total)};
        for (std::size_t which = 1; which <= 2; ++which)
          for (std::size_t i = 0; i < w; ++i)
            for (std::size_t j = 0; j < v; ++j) {
              actions[which](v + i, j) = static_cast<Scalar>(x % q);
              x /= q;
            }
        out.emplace_back(r, std::move(actions), Module::Trusted{});
      }
    }
  return out;
}

std::vector<Module> chainModules(const AlgebraPtr& r, std::size_t maxDim) {
  std::vector<Module> out;
  const Module k = residueField(r);
  for (std::size_t a = 0; a * r->dim() <= maxDim; ++a)
    for (std::size_t b = 0; a * r->dim() + b <= maxDim; ++b) {
      Module m = freeModule(r, a);
      for (std::size_t i = 0; i < b; ++i) m = directSum(m, k).module;
      out.push_back(m);
    }
  return out;
}

std::vector<Submodule> allInclusions(const std::vector<Module>& modules) {
  std::vector<Submodule> out;
  for (const auto& b : modules)
    for (auto& s : allSubmodules(b)) out.emplace_back(b, std::move(s));
  return out;
}

std::vector<Submodule> randomInclusions(const AlgebraPtr& r, std::size_t count, std::size_t maxDim,
                                        std::uint64_t seed) {
  const auto modules = kroneckerModules(r, maxDim);
  std::mt19937_64 rng(seed);
  std::vector<Submodule> out;
  const Scalar q = r->field().order();
  while (out.size() < count) {
    const Module& b = modules[rng() % modules.size()];
    if (b.isZero()) continue;
    std::vector<Vector> gens(1 + rng() % 2, Vector(b.dim()));
    for (auto& g : gens)
      for (auto& x : g) x = static_cast<Scalar>(rng() % q);
    out.push_back(submoduleSpan(b, gens));
  }
  return out;
}

}  // namespace puritylab
