#pragma once

#include "lamkit/quad_gaps.hpp"
#include "lamkit/rotational.hpp"

#include <vector>

namespace lamkit {

/// Generation-synchronous pullback. Every leaf of generation n-1 offers the
/// d*d pairings of its endpoint preimages; a candidate is kept when all
/// regions admit it and it is unlinked with everything committed so far
/// (earlier generations, then earlier candidates in canonical order).
/// Throws SeedNotForwardInvariant.
LaminationSlice pullback_engine(int d, const std::vector<Chord>& seeds,
                                const std::vector<RegionPtr>& regions, int depth);

/// Regions used when pulling back the canonical lamination of U: U itself,
/// plus member 0 of the vassal for periodic U.
std::vector<RegionPtr> quadgap_regions(const QuadGap& u);
std::vector<Chord> quadgap_seeds(const QuadGap& u);

LaminationSlice canonical_lam_quadgap(const QuadGap& u, int depth);

std::vector<RegionPtr> rotational_regions(const RotationalSet& g,
                                          SharedVertexPolicy policy = SharedVertexPolicy::EdgesOnly);
LaminationSlice canonical_lam_rotational(const RotationalSet& g, int depth,
                                         SharedVertexPolicy policy = SharedVertexPolicy::EdgesOnly);

/// The sigma_2 rotational set with rotation number p/q (unique).
RotationalSet quadratic_rotational_set(const mpq_class& pq);

/// Canonical sigma_2 lamination of the rotational set with rotation number
/// pq; pq == 0 gives the empty lamination.
LaminationSlice canonical_quadratic(const mpq_class& pq, int depth);
std::vector<RegionPtr> quadratic_regions(const mpq_class& pq);

}  // namespace lamkit
