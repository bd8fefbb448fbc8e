#include "puritylab/constructions.hpp"

#include "puritylab/error.hpp"

namespace puritylab {

void validateStaircase(const Algebra& r, const StaircaseSpec& spec) {
  const auto& [p, n, m, gens] = spec;
  if (p == 0 || n == 0)
    throw Error(ErrorCode::RangeViolation, "staircase needs p >= 1 and n >= 1");
  if (m < (n - 1) * p + 1 || m > n * p + 1)
    throw Error(ErrorCode::RangeViolation, "m = " + std::to_string(m) + " outside [" + std::to_string((n - 1) * p + 1) +
                                               ", " + std::to_string(n * p + 1) + "]");
  if (gens.size() != p + 1)
    throw Error(ErrorCode::BadIdealGens, "need " + std::to_string(p + 1) + " ideal generators, got " +
                                             std::to_string(gens.size()));
  for (const auto& g : gens)
    if (g.coeffs.size() != r.dim()) throw Error(ErrorCode::BadDimensions, "ideal generator has the wrong length");
  const auto count = minGeneratorsIdeal(r, idealGenerate(r, gens)).count;
  if (count != p + 1)
    throw Error(ErrorCode::BadIdealGens,
                "the ideal needs " + std::to_string(count) + " generators, expected " + std::to_string(p + 1));
}

RelationMatrix staircaseRelations(const Algebra& r, const StaircaseSpec& spec) {
  validateStaircase(r, spec);
  const auto& [p, n, m, a] = spec;
  RelationMatrix x(n, m, r);
  // Columns are 1-based in the rule j = p*q + s with 1 <= s <= p.
  for (std::size_t j = 1; j <= m; ++j) {
    const std::size_t q = (j - 1) / p;
    const std::size_t s = (j - 1) % p + 1;
    if (j == m && m == n * p + 1) {
      x.at(n - 1, j - 1) = a[p];
    } else if (s != 1 || q == 0) {
      x.at(q, j - 1) = a[s - 1];
    } else {
      x.at(q - 1, j - 1) = a[p];
      x.at(q, j - 1) = a[0];
    }
  }
  return x;
}

Module warfieldModule(const AlgebraPtr& r, const StaircaseSpec& spec) {
  Module w = fromPresentation(r, spec.n, staircaseRelations(*r, spec));
  const auto profile = genRel(w);
  if (profile.gen != spec.n || profile.rel != spec.m)
    throw Error(ErrorCode::PostconditionViolated, "staircase module has gen " + std::to_string(profile.gen) +
                                                      ", rel " + std::to_string(profile.rel));
  return w;
}

Module auslanderBridgerDual(const Module& m) {
  if (auto h = freeSummandWitness(m)) {
    std::string cols;
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (m.ring().residue(h->column(c)) != 0) {
        cols = std::to_string(c);
        break;
      }
    throw Error(ErrorCode::HasFreeSummand,
                "a homomorphism to R is onto at carrier basis vector " + cols + ", so R splits off");
  }
  const auto mp = minimalPresentation(m);
  Module d = fromPresentation(m.ringPtr(), mp.profile.rel, mp.relations.transposed());
  const auto profile = genRel(d);
  if (profile.gen != mp.profile.rel || profile.rel != mp.profile.gen)
    throw Error(ErrorCode::PostconditionViolated, "dual does not exchange gen and rel");
  return d;
}

Module fqDual(const Module& m) {
  std::vector<Matrix> actions;
  actions.reserve(m.actions().size());
  for (const auto& a : m.actions()) actions.push_back(transpose(a));
  return Module(m.ringPtr(), std::move(actions));
}

}  // namespace puritylab
