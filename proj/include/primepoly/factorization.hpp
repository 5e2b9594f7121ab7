#pragma once

// Enumeration of vector-factorisations. A factorisation (p^b1, ..., p^bd) of
// p^e is stored as its exponent vector (b1, ..., bd); coordinates for a
// concrete base t are produced on demand by evaluate().

#include "primepoly/exact.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace primepoly {

/// Exponent vector beta in N^d; sum(beta) is the exponent of the prime power.
using Exponents = std::vector<int>;

int exponent_sum(const Exponents& beta);

/// Calls `visit` on every beta in N^d with sum e, in ascending lexicographic
/// order. Throws std::invalid_argument if d == 0 or e < 0.
void for_each_composition(int e, int d, const std::function<void(const Exponents&)>& visit);

/// All compositions of e into d nonnegative parts, ascending lexicographic.
/// There are C(e+d-1, d-1) of them.
std::vector<Exponents> compositions(int e, int d);

/// (t^b1, ..., t^bd). Throws std::invalid_argument unless t > 0.
RatVector evaluate(const Exponents& beta, const ExactRat& t);

/// Only the weakly decreasing compositions, in the same order as
/// compositions(). Counted by partitions of e into at most d parts.
std::vector<Exponents> decreasing_factorizations(int e, int d);

struct PrimePower {
    ExactInt prime;
    int multiplicity = 0;

    bool operator==(const PrimePower&) const = default;
};

/// Sorted prime factorization by trial division. N >= 2.
std::vector<PrimePower> prime_factorize(const ExactInt& n);

/**
 * A d-dimensional vector-factorisation of N = prod p_j^{e_j}, kept as one
 * exponent vector per prime.
 */
struct GeneralFactorization {
    std::vector<PrimePower> primes;
    std::vector<Exponents> exponents;  // exponents[j] belongs to primes[j]

    /// prod_j values[j]^{exponents[j][i]} for each coordinate i.
    RatVector evaluate(const std::vector<ExactRat>& values) const;
    /// Same, with each prime evaluated at itself.
    IntVector point() const;
};

/// Every d-dimensional vector-factorisation of N, as the cartesian product of
/// per-prime compositions (first prime varies slowest).
std::vector<GeneralFactorization> general_factorizations(const ExactInt& n, int d);

/// All (v_1, ..., v_d) in N^d with product N, sorted lexicographically.
/// Throws std::invalid_argument if N < 2 or d < 1.
std::vector<IntVector> vector_factorizations(const ExactInt& n, int d);

}  // namespace primepoly
