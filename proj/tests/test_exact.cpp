#include "primepoly/exact.hpp"

#include <doctest.h>

#include <random>

using namespace primepoly;

namespace {

ExactRat ratio(long num, long den) {
    ExactRat q(num, den);
    q.canonicalize();
    return q;
}

// Laplace expansion along the first row; independent of the Bareiss path.
ExactInt cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    ExactInt total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != c) minor(r - 1, cc++) = m(r, j);
            }
        }
        const ExactInt term = m(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : ExactInt(-term);
    }
    return total;
}

RatVector rv(std::initializer_list<long> xs) {
    RatVector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("det_fraction_free examples") {
    CHECK(det_fraction_free(IntMatrix::identity(3)) == 1);
    CHECK(det_fraction_free(IntMatrix::from_rows({{2, -1}, {-1, 2}})) == 3);
    CHECK(det_fraction_free(IntMatrix::from_rows({{1, 1}, {1, 1}})) == 0);
    CHECK(det_fraction_free(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK_THROWS_AS(det_fraction_free(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("det_fraction_free agrees with cofactor expansion on random small matrices") {
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> size(1, 4);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto n = static_cast<std::size_t>(size(rng));
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
        }
        REQUIRE(det_fraction_free(m) == cofactor_det(m));
    }
}

TEST_CASE("affine_rank") {
    CHECK(affine_rank(std::vector<RatVector>{rv({1, 1, 1})}) == 0);
    CHECK(affine_rank(std::vector<RatVector>{rv({1, 0}), rv({0, 1})}) == 1);
    CHECK(affine_rank(std::vector<RatVector>{rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})}) == 2);
    CHECK(affine_rank(std::vector<RatVector>{rv({1, 2}), rv({2, 4}), rv({3, 6})}) == 1);
    CHECK_THROWS_AS(affine_rank(std::vector<RatVector>{}), std::invalid_argument);
    CHECK_THROWS_AS(affine_rank(std::vector<RatVector>{rv({1}), rv({1, 2})}), DimensionError);
}

TEST_CASE("solve_hyperplane examples") {
    auto a = solve_hyperplane(std::vector<RatVector>{rv({1, 0}), rv({0, 1})});
    REQUIRE(a);
    CHECK(a->normal == IntVector{1, 1});
    CHECK(a->offset == 1);

    auto b = solve_hyperplane(std::vector<RatVector>{rv({0, 0}), rv({1, 0})});
    REQUIRE(b);
    CHECK(b->normal == IntVector{0, 1});
    CHECK(b->offset == 0);

    CHECK_FALSE(solve_hyperplane(std::vector<RatVector>{rv({1, 1}), rv({1, 1})}));
    CHECK_THROWS_AS(solve_hyperplane(std::vector<RatVector>{rv({1, 1})}), std::invalid_argument);

    // Rational input: the line through (1/2, 0) and (0, 1/3) is 2x + 3y = 1.
    auto c = solve_hyperplane(std::vector<RatVector>{{ExactRat(1, 2), 0}, {0, ExactRat(1, 3)}});
    REQUIRE(c);
    CHECK(c->normal == IntVector{2, 3});
    CHECK(c->offset == 1);
}

TEST_CASE("solve_hyperplane output is exact, normalized and order independent") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    int solved = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
        std::vector<RatVector> pts(d, RatVector(d));
        for (auto& p : pts) {
            for (auto& x : p) {
                x = ratio(entry(rng), den(rng));
                x.canonicalize();
            }
        }
        const auto plane = solve_hyperplane(pts);
        if (!plane) {
            CHECK(affine_rank(pts) < d - 1);
            continue;
        }
        ++solved;
        for (const auto& p : pts) {
            ExactRat dot = 0;
            for (std::size_t j = 0; j < d; ++j) dot += plane->normal[j] * p[j];
            REQUIRE(dot == plane->offset);
        }
        ExactInt g = 0;
        for (const auto& a : plane->normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        CHECK(g == 1);
        const auto first = std::find_if(plane->normal.begin(), plane->normal.end(), [](const ExactInt& a) { return a != 0; });
        CHECK(*first > 0);

        std::reverse(pts.begin(), pts.end());
        CHECK(*solve_hyperplane(pts) == *plane);
    }
    CHECK(solved > 400);
}

TEST_CASE("linear_feasible examples") {
    auto mid = linear_feasible(std::vector<RatVector>{rv({0, 0}), rv({2, 2})}, rv({1, 1}));
    REQUIRE(mid);
    CHECK(*mid == RatVector{ExactRat(1, 2), ExactRat(1, 2)});

    CHECK_FALSE(linear_feasible(std::vector<RatVector>{rv({0, 0}), rv({1, 1})}, rv({3, 0})));

    // (2,2) is a vertex of conv{(1,4),(2,2),(4,1)}.
    CHECK_FALSE(linear_feasible(std::vector<RatVector>{rv({1, 4}), rv({4, 1})}, rv({2, 2})));

    CHECK_FALSE(linear_feasible(std::vector<RatVector>{}, rv({0})));
    CHECK_THROWS_AS(linear_feasible(std::vector<RatVector>{rv({1, 2, 3})}, rv({1, 2})), DimensionError);
}

TEST_CASE("linear_feasible witnesses reproduce the target exactly") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<int> weight(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + static_cast<std::size_t>(trial % 4);
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
        std::vector<RatVector> pts(n, RatVector(d));
        for (auto& p : pts) {
            for (auto& x : p) x = entry(rng);
        }
        // Random convex combination as target (with duplicates and degeneracy).
        RatVector w(d);
        std::vector<int> ws(n);
        int total = 0;
        for (auto& x : ws) total += (x = weight(rng));
        if (total == 0) ws[0] = total = 1;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < d; ++i) w[i] += ratio(ws[j], total) * pts[j][i];
        }
        const auto lambda = linear_feasible(pts, w);
        REQUIRE(lambda);
        ExactRat sum = 0;
        RatVector back(d);
        for (std::size_t j = 0; j < n; ++j) {
            REQUIRE((*lambda)[j] >= 0);
            sum += (*lambda)[j];
            for (std::size_t i = 0; i < d; ++i) back[i] += (*lambda)[j] * pts[j][i];
        }
        CHECK(sum == 1);
        CHECK(back == w);
    }
}

TEST_CASE("binomial, power and rational text") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(power(ExactRat(3, 2), 2) == ExactRat(9, 4));
    CHECK(power(ExactRat(5), 0) == 1);

    CHECK(parse_rational("5/2") == ExactRat(5, 2));
    CHECK(parse_rational("2") == 2);
    CHECK(parse_rational("-3/6") == ExactRat(-1, 2));
    CHECK(parse_rational("+7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);

    CHECK(format_rational(ExactRat(4)) == "4/1");
    CHECK(format_rational(ExactRat(-5, 2)) == "-5/2");
}
