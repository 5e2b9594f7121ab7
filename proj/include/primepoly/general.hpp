#pragma once

// Polytopes beyond prime powers: P(N, d) for composite N, and P_A(N), the
// convex hull of the integral diagonals D with A + diag(D) positive definite
// of determinant N.

#include "primepoly/factorization.hpp"
#include "primepoly/oracle.hpp"

namespace primepoly {

class SymmetricIntMatrix {
  public:
    /// Throws DimensionError if not square, std::invalid_argument if asymmetric.
    explicit SymmetricIntMatrix(IntMatrix entries);
    static SymmetricIntMatrix zero(std::size_t size);

    std::size_t size() const { return entries_.rows(); }
    const ExactInt& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const IntMatrix& entries() const { return entries_; }

  private:
    IntMatrix entries_;
};

/// Type A_d Cartan matrix: 2 on the diagonal, -1 next to it.
SymmetricIntMatrix cartan_A(std::size_t d);

/// Sylvester's criterion on the leading principal minors.
bool is_positive_definite(const SymmetricIntMatrix& m);

struct DiagonalCompletion {
    IntVector diagonal;

    bool operator==(const DiagonalCompletion&) const = default;
    auto operator<=>(const DiagonalCompletion& o) const { return diagonal <=> o.diagonal; }
};

IntMatrix with_diagonal(const SymmetricIntMatrix& a, const IntVector& diagonal);

struct CompletionSearch {
    std::vector<DiagonalCompletion> completions;  // sorted
    ExactInt bound;                               // box that confirmed closure
    int rounds = 0;
};

/**
 * D_A(N). The first d-1 diagonal entries are searched from the least value
 * keeping their leading minor positive up to a bound B; the last entry is
 * solved exactly from the determinant. B starts at N (1 + max|a_ij|)^2 and
 * doubles until the doubled box yields no new completion.
 */
CompletionSearch search_completions(const SymmetricIntMatrix& a, const ExactInt& n);
std::vector<DiagonalCompletion> enumerate_DA(const SymmetricIntMatrix& a, const ExactInt& n);

struct VertexReport {
    std::vector<DiagonalCompletion> completions;
    std::vector<bool> is_vertex;

    std::size_t vertex_count() const;
    bool all_vertices() const { return vertex_count() == completions.size(); }
};

/// Runs the exact LP vertex test on every completion of D_A(N).
VertexReport certify_vertices_DA(const SymmetricIntMatrix& a, const ExactInt& n);

/// Evaluated vertex set of P(N, d), sorted lexicographically.
PointCloud general_polytope_vertices(const ExactInt& n, int d);

/// Same factorizations with prime j replaced by values[j] (one value per
/// distinct prime, in increasing prime order).
PointCloud general_polytope_vertices(const ExactInt& n, int d, const std::vector<ExactRat>& values);

}  // namespace primepoly
