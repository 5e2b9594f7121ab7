#pragma once

// Regular vectors: the index set of the non-exceptional facet inequalities.
//
// alpha in N^d is regular of type lambda for (d, e) when
//   min(alpha) == 0,
//   max(alpha) * d < e + sum(alpha),
//   e + sum(alpha) == lambda (mod d), lambda != 0,
// and its level mu satisfies mu * d + lambda == e + sum(alpha).

#include "primepoly/factorization.hpp"

#include <variant>

namespace primepoly {

struct RegularVector {
    Exponents alpha;
    int lambda = 0;
    int mu = 0;

    bool operator==(const RegularVector&) const = default;
};

enum class RegularityFailure {
    MinimumNotZero,
    ResidueZero,      // e + sum(alpha) divisible by d
    MaximumTooLarge,  // max(alpha) * d >= e + sum(alpha)
};

struct NotRegular {
    RegularityFailure reason;
};

using Classification = std::variant<RegularVector, NotRegular>;

/// Tests the defining conditions in the order listed above and reports the
/// first one that fails. Throws std::invalid_argument on negative entries,
/// length mismatch or d < 2, e < 2.
Classification classify(const Exponents& alpha, int d, int e);

/// phi: alpha -> (mu - alpha_i)_i, a composition of e - lambda.
Exponents phi(const RegularVector& rv);

/// psi: beta -> (B - beta_i)_i with B = max(beta), where sum(beta) = e - lambda.
RegularVector psi(const Exponents& beta, int e, int lambda);

/// R_lambda(d, e), produced as psi over the compositions of e - lambda (so in
/// their lexicographic order). Requires 1 <= lambda <= min(e, d - 1).
std::vector<RegularVector> enumerate_regular(int d, int e, int lambda);

int max_regular_type(int d, int e);

}  // namespace primepoly
