#pragma once

#include <vector>

#include "maxdist/geometry.hpp"
#include "maxdist/report.hpp"

namespace maxdist {

/// Counterclockwise, strictly convex hull as indices into the source set.
/// One vertex for all-coincident input, two for collinear input.
struct HullPolygon {
  IndexList vertices;
};

/// Exhaustive O(N^2) scan over all i < j. The witness is the first pair in
/// nested-loop order that attains the maximum; pair_evals is N(N-1)/2.
/// Throws TooFewPoints for N < 2.
DiameterReport brute_force_diameter(PointView points);

/// Andrew's monotone chain. Ties in the sort are broken by x, then y, then
/// index, so among coincident points the lowest index represents them.
HullPolygon convex_hull(PointView points);

/// Rotating calipers over the monotone-chain hull. pair_evals counts the
/// antipodal distance evaluations (at most twice the hull size).
DiameterReport hull_diameter(PointView points);

}  // namespace maxdist
