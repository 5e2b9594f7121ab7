#include "primepoly/regular.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace primepoly {

namespace {

void check_type(int d, int e, int lambda) {
    if (lambda < 1 || lambda > max_regular_type(d, e)) {
        throw std::invalid_argument("regular type " + std::to_string(lambda) + " outside 1.." +
                                    std::to_string(max_regular_type(d, e)));
    }
}

}  // namespace

int max_regular_type(int d, int e) { return std::min(e, d - 1); }

Classification classify(const Exponents& alpha, int d, int e) {
    if (d < 2 || e < 2) throw std::invalid_argument("classify needs d >= 2 and e >= 2");
    if (alpha.size() != static_cast<std::size_t>(d)) throw DimensionError("alpha must have length d");
    if (std::any_of(alpha.begin(), alpha.end(), [](int a) { return a < 0; })) {
        throw std::invalid_argument("alpha has negative entries");
    }

    if (*std::min_element(alpha.begin(), alpha.end()) != 0) {
        return NotRegular{RegularityFailure::MinimumNotZero};
    }
    const int total = e + exponent_sum(alpha);
    const int lambda = total % d;
    if (lambda == 0) return NotRegular{RegularityFailure::ResidueZero};
    if (*std::max_element(alpha.begin(), alpha.end()) * d >= total) {
        return NotRegular{RegularityFailure::MaximumTooLarge};
    }
    return RegularVector{alpha, lambda, total / d};
}

Exponents phi(const RegularVector& rv) {
    Exponents beta(rv.alpha.size());
    std::transform(rv.alpha.begin(), rv.alpha.end(), beta.begin(), [&](int a) { return rv.mu - a; });
    return beta;
}

RegularVector psi(const Exponents& beta, int e, int lambda) {
    const int d = static_cast<int>(beta.size());
    check_type(d, e, lambda);
    if (exponent_sum(beta) != e - lambda) {
        throw std::invalid_argument("psi needs a composition of e - lambda");
    }
    const int top = *std::max_element(beta.begin(), beta.end());
    Exponents alpha(beta.size());
    std::transform(beta.begin(), beta.end(), alpha.begin(), [&](int b) { return top - b; });
    return RegularVector{std::move(alpha), lambda, top};
}

std::vector<RegularVector> enumerate_regular(int d, int e, int lambda) {
    check_type(d, e, lambda);
    std::vector<RegularVector> out;
    for_each_composition(e - lambda, d, [&](const Exponents& beta) { out.push_back(psi(beta, e, lambda)); });
    return out;
}

}  // namespace primepoly
