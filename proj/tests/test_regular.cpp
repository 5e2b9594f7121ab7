#include "primepoly/regular.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace primepoly;

namespace {

// Every alpha in {0..e}^d, in odometer order.
std::vector<Exponents> box(int d, int top) {
    std::vector<Exponents> out;
    Exponents a(static_cast<std::size_t>(d), 0);
    while (true) {
        out.push_back(a);
        int i = d - 1;
        while (i >= 0 && a[i] == top) a[i--] = 0;
        if (i < 0) return out;
        ++a[i];
    }
}

}  // namespace

TEST_CASE("classify examples") {
    auto r = classify({0, 0, 0}, 3, 2);
    REQUIRE(std::holds_alternative<RegularVector>(r));
    CHECK(std::get<RegularVector>(r).lambda == 2);
    CHECK(std::get<RegularVector>(r).mu == 0);

    r = classify({1, 1, 0}, 3, 2);
    REQUIRE(std::holds_alternative<RegularVector>(r));
    CHECK(std::get<RegularVector>(r).lambda == 1);
    CHECK(std::get<RegularVector>(r).mu == 1);

    r = classify({1, 0, 0}, 3, 2);
    REQUIRE(std::holds_alternative<NotRegular>(r));
    CHECK(std::get<NotRegular>(r).reason == RegularityFailure::ResidueZero);

    r = classify({1, 1, 1}, 3, 2);
    REQUIRE(std::holds_alternative<NotRegular>(r));
    CHECK(std::get<NotRegular>(r).reason == RegularityFailure::MinimumNotZero);

    // d=3, e=2: alpha=(3,0,0) has 3+2=5 == 2 mod 3 but 3*3 >= 5.
    r = classify({3, 0, 0}, 3, 2);
    REQUIRE(std::holds_alternative<NotRegular>(r));
    CHECK(std::get<NotRegular>(r).reason == RegularityFailure::MaximumTooLarge);

    CHECK_THROWS_AS(classify({-1, 0, 0}, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(classify({0, 0}, 3, 2), std::invalid_argument);
}

TEST_CASE("enumerate_regular examples") {
    CHECK(enumerate_regular(3, 2, 1).size() == 3);
    const auto top = enumerate_regular(3, 2, 2);
    REQUIRE(top.size() == 1);
    CHECK(top[0].alpha == Exponents{0, 0, 0});
    CHECK(enumerate_regular(2, 3, 1).size() == 3);
    CHECK_THROWS_AS(enumerate_regular(3, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_regular(3, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_regular(4, 2, 3), std::invalid_argument);
}

TEST_CASE("phi and psi examples") {
    CHECK(phi(RegularVector{{1, 1, 0}, 1, 1}) == Exponents{0, 0, 1});
    CHECK(phi(RegularVector{{0, 0, 0}, 2, 0}) == Exponents{0, 0, 0});
    const auto two = std::get<RegularVector>(classify({2, 0}, 2, 3));
    CHECK(two.lambda == 1);
    CHECK(two.mu == 2);
    CHECK(phi(two) == Exponents{0, 2});

    CHECK(psi({0, 0, 1}, 2, 1) == RegularVector{{1, 1, 0}, 1, 1});
    CHECK(psi({0, 0, 0}, 2, 2) == RegularVector{{0, 0, 0}, 2, 0});
    CHECK(psi({1, 1}, 3, 1) == RegularVector{{0, 0}, 1, 1});
    CHECK_THROWS_AS(psi({0, 0, 0}, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(psi({1, 0, 0}, 2, 2), std::invalid_argument);
}

TEST_CASE("phi and psi are mutually inverse and enumeration matches a brute-force scan") {
    for (int d = 2; d <= 5; ++d) {
        for (int e = 2; e <= 5; ++e) {
            std::map<int, std::set<Exponents>> scanned;
            for (const Exponents& alpha : box(d, e)) {
                const auto r = classify(alpha, d, e);
                if (const auto* rv = std::get_if<RegularVector>(&r)) {
                    CHECK(rv->lambda >= 1);
                    CHECK(rv->lambda <= max_regular_type(d, e));
                    CHECK(rv->mu * d + rv->lambda == e + exponent_sum(alpha));
                    scanned[rv->lambda].insert(alpha);
                }
            }
            // Regular vectors never exceed e in any entry, so the box is exhaustive.
            for (int lambda = 1; lambda <= max_regular_type(d, e); ++lambda) {
                const auto regular = enumerate_regular(d, e, lambda);
                CHECK(regular.size() == binomial(e - lambda + d - 1, d - 1));
                std::set<Exponents> emitted;
                for (const RegularVector& rv : regular) {
                    emitted.insert(rv.alpha);
                    const auto again = classify(rv.alpha, d, e);
                    REQUIRE(std::holds_alternative<RegularVector>(again));
                    CHECK(std::get<RegularVector>(again) == rv);
                    CHECK(psi(phi(rv), e, lambda) == rv);
                    CHECK(exponent_sum(phi(rv)) == e - lambda);
                }
                CHECK(emitted == scanned[lambda]);
                for (const Exponents& beta : compositions(e - lambda, d)) CHECK(phi(psi(beta, e, lambda)) == beta);
            }
        }
    }
}
