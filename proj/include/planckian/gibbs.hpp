#pragma once

#include "planckian/operators.hpp"

namespace planckian {

/// Gibbs state exp(-beta H)/Z. beta = +inf yields the projector onto the
/// ground space, uniform over degenerate levels (degeneracy detected at
/// relative tolerance 1e-10). Invariant under H -> H + c*Identity.
DensityMatrix gibbs_state(const HermitianOperator& h, double beta);

/// Gibbs populations in the eigenbasis of h (ascending energies).
Vector gibbs_populations(const HermitianOperator& h, double beta);

}  // namespace planckian
