#include "primepoly/faces.hpp"
#include "primepoly/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace primepoly;

namespace {

FVector fv(std::initializer_list<long> xs) {
    FVector out;
    for (long x : xs) out.f.emplace_back(x);
    return out;
}

std::size_t count_faces(const std::vector<Face>& faces, int dim, FaceClass cls) {
    return static_cast<std::size_t>(std::count_if(
        faces.begin(), faces.end(), [&](const Face& f) { return f.dim == dim && f.face_class == cls; }));
}

}  // namespace

TEST_CASE("f_vector_formula examples") {
    CHECK(f_vector_formula(3, 2) == fv({6, 12, 8, 1}));
    CHECK(f_vector_formula(2, 3) == fv({4, 4, 1}));
    CHECK(f_vector_formula(4, 2).f[0] == 10);
    CHECK(f_vector_formula(3, 2).str() == "6 12 8 1");
    CHECK_THROWS_AS(f_vector_formula(1, 3), std::invalid_argument);
}

TEST_CASE("enumerate_faces of P(t^2, 3)") {
    const auto result = enumerate_faces(3, 2);
    const auto& faces = result.faces;
    CHECK(result.duplicates == 0);
    CHECK(count_faces(faces, 1, FaceClass::Regular) + count_faces(faces, 1, FaceClass::ExceptionalInfinity) == 12);
    CHECK(count_faces(faces, 1, FaceClass::ExceptionalInfinity) == 3);

    std::vector<IndexSet> two_faces;
    for (const Face& f : faces) {
        if (f.dim == 2) two_faces.push_back(f.vertices);
    }
    std::vector<IndexSet> facet_sets;
    for (const auto& f : facets(3, 2)) facet_sets.push_back(f.vertices);
    CHECK(two_faces.size() == 8);
    std::sort(facet_sets.begin(), facet_sets.end());
    CHECK(two_faces == facet_sets);
}

TEST_CASE("f_vector_from_faces") {
    CHECK(f_vector_from_faces(enumerate_faces(3, 2).faces, 3) == fv({6, 12, 8, 1}));
    CHECK(f_vector_from_faces(enumerate_faces(2, 2).faces, 2) == fv({3, 3, 1}));
}

TEST_CASE("closed form and constructed lattice agree; Euler holds; no duplicate parameters") {
    for (int d = 2; d <= 5; ++d) {
        for (int e = 2; e <= 5; ++e) {
            CAPTURE(d);
            CAPTURE(e);
            const auto result = enumerate_faces(d, e);
            const FVector formula = f_vector_formula(d, e);
            CHECK(result.duplicates == 0);
            CHECK(f_vector_from_faces(result.faces, d) == formula);
            CHECK(formula.euler_holds());
        }
    }
}

TEST_CASE("regular faces: M - m is 0/1 with the stated support, type, and dimension") {
    for (int d = 2; d <= 4; ++d) {
        for (int e = 2; e <= 4; ++e) {
            const VertexSet vertices(d, e);
            const auto points = vertices.evaluate(2);
            for (const Face& f : enumerate_faces(d, e).faces) {
                std::vector<RatVector> pts;
                for (std::size_t i : f.vertices) pts.push_back(points[i]);
                REQUIRE(affine_rank(pts) == static_cast<std::size_t>(f.dim));
                if (f.face_class != FaceClass::Regular) continue;

                Exponents lo = vertices[f.vertices.front()];
                Exponents hi = lo;
                for (std::size_t i : f.vertices) {
                    for (int c = 0; c < d; ++c) {
                        lo[c] = std::min(lo[c], vertices[i][c]);
                        hi[c] = std::max(hi[c], vertices[i][c]);
                    }
                }
                std::vector<int> support;
                for (int c = 0; c < d; ++c) {
                    CHECK(hi[c] - lo[c] <= 1);
                    if (hi[c] > lo[c]) support.push_back(c);
                }
                CHECK(support == f.coordinates);
                CHECK(lo == f.base);
                CHECK(e - exponent_sum(lo) == f.lambda);
            }
        }
    }
}

TEST_CASE("face lattice structure") {
    const auto faces = enumerate_faces(3, 2).faces;
    const auto lattice = face_lattice(faces);
    std::size_t bottom = 0;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].dim == 1) CHECK(lattice.up[i].size() == 2);
        if (faces[i].dim == 0) {
            ++bottom;
            CHECK(lattice.down[i].empty());
        }
    }
    CHECK(bottom == 6);

    for (int d = 2; d <= 5; ++d) {
        for (int e = 2; e <= 4; ++e) {
            CAPTURE(d);
            CAPTURE(e);
            const auto all = enumerate_faces(d, e).faces;
            CHECK(face_lattice(all).diamond_property(all, d));
        }
    }
}

TEST_CASE("face list is invariant under coordinate permutations") {
    for (auto [d, e] : std::vector<std::pair<int, int>>{{3, 3}, {4, 2}, {4, 3}}) {
        const VertexSet vertices(d, e);
        const auto faces = enumerate_faces(d, e).faces;
        std::set<IndexSet> family;
        for (const Face& f : faces) family.insert(f.vertices);

        std::vector<int> perm(static_cast<std::size_t>(d));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<std::size_t> image(vertices.size());
            for (std::size_t i = 0; i < vertices.size(); ++i) {
                Exponents moved(static_cast<std::size_t>(d));
                for (int c = 0; c < d; ++c) moved[perm[c]] = vertices[i][c];
                image[i] = *vertices.index_of(moved);
            }
            std::set<IndexSet> mapped;
            for (const Face& f : faces) {
                IndexSet m;
                for (std::size_t i : f.vertices) m.push_back(image[i]);
                std::sort(m.begin(), m.end());
                mapped.insert(std::move(m));
            }
            CHECK(mapped == family);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("binomial telescoping identity behind the closed form") {
    for (int d = 1; d <= 8; ++d) {
        for (int k = 1; k <= d; ++k) {
            for (int e = 1; e <= 8; ++e) {
                ExactInt lhs = 0;
                for (int lambda = 1; lambda <= std::min(k, e); ++lambda) lhs += binomial(e - lambda + d - 1, d - 1);
                CHECK(lhs == binomial(e - 1 + d, d) - binomial(e - std::min(e, k) + d - 1, d));
            }
        }
    }
}

TEST_CASE("constructed lattice matches the oracle lattice face by face") {
    for (auto [d, e] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
        CAPTURE(d);
        CAPTURE(e);
        const auto oracle = brute_face_lattice(PointCloud{VertexSet(d, e).evaluate(ExactRat(5, 2))});
        std::vector<std::vector<IndexSet>> constructed(static_cast<std::size_t>(d));
        for (const Face& f : enumerate_faces(d, e).faces) constructed[f.dim].push_back(f.vertices);
        CHECK(oracle.faces_by_dim == constructed);
        CHECK(oracle.f_vector == f_vector_formula(d, e));
    }
}
