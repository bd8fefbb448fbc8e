#pragma once

// Witness modules: staircase modules W_{p,n,m}, the Auslander-Bridger dual and
// the linear dual over the base field.

#include <vector>

#include "puritylab/module.hpp"

namespace puritylab {

struct StaircaseSpec {
  std::size_t p = 1;
  std::size_t n = 1;
  std::size_t m = 2;
  std::vector<RingElement> idealGens;  // a_1 .. a_{p+1}
};

/// Validates the range (n-1)p+1 <= m <= np+1 and that the a_i minimally
/// generate their ideal.
void validateStaircase(const Algebra& r, const StaircaseSpec& spec);

/// The n x m relation matrix of W_{p,n,m}.
RelationMatrix staircaseRelations(const Algebra& r, const StaircaseSpec& spec);

/// F/K for the staircase relations; checks gen = n and rel = m afterwards.
Module warfieldModule(const AlgebraPtr& r, const StaircaseSpec& spec);

/// Cokernel of the transposed minimal relation matrix. Throws HasFreeSummand
/// for modules with a free direct summand.
Module auslanderBridgerDual(const Module& m);

/// Hom over the base field into the field, with transposed actions.
Module fqDual(const Module& m);

}  // namespace puritylab
