#pragma once

// f-vector and explicit face lattice of P(t^e, d).
//
// Every proper face of dimension k >= 1 is one of
//  - regular: a support T of k+1 coordinates, a type 1 <= lambda <= min(k, e)
//    and a base m with sum(m) = e - lambda; vertices m + eps with eps a 0/1
//    vector supported in T and sum(eps) = lambda;
//  - a (k+1)-subset of the simplex facet {e * e_i};
//  - for k >= 2, the intersection of d - k of the facets x_i >= 1.

#include "primepoly/polytope.hpp"

#include <cstdint>

namespace primepoly {

struct FVector {
    std::vector<ExactInt> f;  // f[0] .. f[d]

    bool operator==(const FVector&) const = default;
    /// sum_{k<d} (-1)^k f_k == 1 - (-1)^d
    bool euler_holds() const;
    std::string str() const;  // "6 12 8 1"
};

/// Closed-form face counts. Requires d >= 2, e >= 2.
FVector f_vector_formula(int d, int e);

enum class FaceClass { Vertex, Regular, ExceptionalInfinity, ExceptionalIntersection };

struct Face {
    IndexSet vertices;
    int dim = 0;
    FaceClass face_class = FaceClass::Vertex;
    /// Regular: the support T. ExceptionalInfinity: coordinates i whose
    /// vertex e * e_i is included. ExceptionalIntersection: the set I.
    std::vector<int> coordinates;
    int lambda = 0;  // Regular only
    Exponents base;  // Regular only
};

struct FaceEnumeration {
    std::vector<Face> faces;  // sorted by (dim, vertices)
    /// Parameter triples that produced an already-seen vertex set. The
    /// closed-form count assumes this is zero.
    std::size_t duplicates = 0;
};

FaceEnumeration enumerate_faces(int d, int e);

/// Counts faces per dimension 0..d-1 and appends f_d = 1.
FVector f_vector_from_faces(const std::vector<Face>& faces, int d);

/**
 * Covering relation of the face poset (vertex-set inclusion between faces
 * whose dimensions differ by one). The polytope itself is not a node.
 */
struct FaceLattice {
    std::vector<std::vector<std::size_t>> up;    // up[i]: faces of dim+1 containing face i
    std::vector<std::vector<std::size_t>> down;  // down[i]: faces of dim-1 inside face i

    /// Edges have 2 vertices, ridges lie in 2 facets and every interval of
    /// length two between proper faces has exactly two middle elements.
    bool diamond_property(const std::vector<Face>& faces, int d) const;
};

FaceLattice face_lattice(const std::vector<Face>& faces);

}  // namespace primepoly
