#pragma once

// The polytope P(t^e, d): convex hull of all points (t^b1, ..., t^bd) with
// b in N^d, sum(b) = e, for a rational base t > 1. Its facet inequalities are
//
//   sum_i x_i <= (d - 1) + t^e                              (upper)
//   x_i >= 1                                                (lower, i = 1..d)
//   sum_i t^{alpha_i} x_i >= lambda t^{mu+1} + (d - lambda) t^mu
//                                    (regular, alpha in R_lambda(d, e))
//
// and each regular facet is an affine image of the hypersimplex
// Delta(lambda) = conv{eps in {0,1}^d : sum(eps) = lambda}.

#include "primepoly/factorization.hpp"
#include "primepoly/regular.hpp"

#include <map>
#include <optional>
#include <string>

namespace primepoly {

/// Sorted list of vertex indices.
using IndexSet = std::vector<std::size_t>;

/**
 * Vertex list of P(t^e, d) as exponent vectors in ascending lexicographic
 * order. Indices into this list are the vertex labels used everywhere else.
 */
class VertexSet {
  public:
    VertexSet(int d, int e);

    int dimension() const { return d_; }
    int exponent() const { return e_; }
    std::size_t size() const { return vertices_.size(); }
    const Exponents& operator[](std::size_t i) const { return vertices_[i]; }
    const std::vector<Exponents>& exponents() const { return vertices_; }

    std::optional<std::size_t> index_of(const Exponents& beta) const;
    /// Sorted indices; throws std::invalid_argument for a non-vertex.
    IndexSet indices_of(const std::vector<Exponents>& betas) const;
    std::vector<RatVector> evaluate(const ExactRat& t) const;

  private:
    int d_;
    int e_;
    std::vector<Exponents> vertices_;
    std::map<Exponents, std::size_t> index_;
};

enum class InequalityKind { Upper, Lower, Regular };

/**
 * One inequality b + a.x >= 0 of the H-representation, stored by its
 * combinatorial data and evaluated at `base`.
 */
struct Inequality {
    InequalityKind kind = InequalityKind::Upper;
    int d = 0;
    int e = 0;
    ExactRat base;
    RegularVector regular;  // kind == Regular
    int coordinate = -1;    // kind == Lower, 0-based
    bool redundant = false;

    ExactRat constant() const;
    RatVector coefficients() const;
    /// b + a.x; nonnegative iff x satisfies the inequality.
    ExactRat slack(const RatVector& x) const;
    std::string describe() const;
};

/// Upper, then lower x_1..x_d, then regular by ascending lambda and the
/// lexicographic order of phi(alpha). For d == 2 the lower inequalities are
/// emitted with `redundant` set. Throws std::invalid_argument unless
/// d >= 2, e >= 2 and t > 1.
std::vector<Inequality> hrep(int d, int e, const ExactRat& t);

/// True iff x satisfies every inequality. DimensionError on length mismatch.
bool contains(const RatVector& x, const std::vector<Inequality>& inequalities);

/// The vertices (as exponent vectors, sorted) on which the inequality is tight.
std::vector<Exponents> sharp_set(const Inequality& ineq);

enum class FacetClass { Regular, ExceptionalInfinity, ExceptionalLower };

struct FacetDescriptor {
    Inequality inequality;
    IndexSet vertices;

    FacetClass facet_class() const;
};

/// Every facet, in hrep order. For d == 2 the redundant lower inequalities
/// are skipped, leaving the e + 1 polygon edges.
std::vector<FacetDescriptor> facets(int d, int e, const ExactRat& t = ExactRat(2));

struct Hypersimplex {
    int d = 0;
    int lambda = 0;

    /// 0/1 vectors with coordinate sum lambda, ascending lexicographic.
    std::vector<Exponents> vertices() const;
};

/// Image of a regular facet's evaluated vertices under
///   x_i -> (x_i - t^{m_i}) / (t^{m_i + 1} - t^{m_i}),  m = phi(alpha),
/// sorted. Throws std::invalid_argument for an exceptional facet.
std::vector<RatVector> normalize_facet(const FacetDescriptor& facet, const ExactRat& t);

struct FacetCertificate {
    std::size_t inequality = 0;
    std::size_t sharp_rank = 0;  // affine rank of the sharp set
    bool tight_on_self = false;
    bool strict_elsewhere = false;
    std::optional<std::size_t> also_tight;  // first other inequality tight at the centroid

    bool passed() const { return tight_on_self && strict_elsewhere; }
};

/// For each inequality of hrep(d, e, t), evaluates every inequality at the
/// centroid of its sharp set. Passing entries are facet-defining and cannot
/// be dropped from the list.
std::vector<FacetCertificate> minimality_certificate(int d, int e, const ExactRat& t);

}  // namespace primepoly
