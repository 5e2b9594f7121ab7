#pragma once

// Brute-force polyhedral computations used as ground truth for the closed
// forms. Everything is exact and exponential in the input size; the limits
// below keep it at desk scale.

#include "primepoly/exact.hpp"
#include "primepoly/faces.hpp"

namespace primepoly {

class NotFullDimensional : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when an instance exceeds the oracle's size guard.
class OracleTooLarge : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct PointCloud {
    std::vector<RatVector> points;  // label = position

    std::size_t dimension() const { return points.empty() ? 0 : points.front().size(); }
};

struct OracleLimits {
    std::size_t max_points = 64;
    std::uint64_t max_subsets = 2'000'000;
};

struct OracleFacet {
    Hyperplane plane;  // normalized
    int side = 1;      // +1: every point has normal.x >= offset; -1: <=
    IndexSet incident;
};

/// Worker count for the oracle: hardware concurrency, capped by the
/// PRIMEPOLY_THREADS environment variable when set.
unsigned oracle_threads();

/**
 * Facets of conv(cloud) by testing every hyperplane spanned by d of the
 * points. Sorted by incident set. Throws NotFullDimensional if the affine
 * hull is not all of Q^d and OracleTooLarge past `limits`.
 */
std::vector<OracleFacet> brute_facets(const PointCloud& cloud, const OracleLimits& limits = {},
                                      unsigned threads = 0);

struct OracleLattice {
    std::vector<std::vector<IndexSet>> faces_by_dim;  // dims 0..d-1, each sorted
    FVector f_vector;
};

/// Faces as the closure of facet incident sets under intersection.
OracleLattice brute_face_lattice(const PointCloud& cloud, const OracleLimits& limits = {},
                                 unsigned threads = 0);

/// True iff point i is not a convex combination of the other points.
bool is_vertex(std::size_t i, const PointCloud& cloud);

/// Set equality of two families of index sets (order-insensitive at both levels).
bool same_facet_family(std::vector<IndexSet> a, std::vector<IndexSet> b);

/**
 * Facets of the (k-1)-dimensional polytope conv(cloud[face]) where the face
 * spans a hyperplane of Q^d, computed by projecting out one coordinate.
 * Returned as index sets into the full cloud.
 */
std::vector<IndexSet> facets_of_facet(const PointCloud& cloud, const IndexSet& face,
                                      const OracleLimits& limits = {});

}  // namespace primepoly
