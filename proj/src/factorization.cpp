#include "primepoly/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace primepoly {

int exponent_sum(const Exponents& beta) { return std::accumulate(beta.begin(), beta.end(), 0); }

namespace {

void compose(int remaining, std::size_t pos, Exponents& beta,
             const std::function<void(const Exponents&)>& visit) {
    if (pos + 1 == beta.size()) {
        beta[pos] = remaining;
        visit(beta);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        beta[pos] = v;
        compose(remaining - v, pos + 1, beta, visit);
    }
}

}  // namespace

void for_each_composition(int e, int d, const std::function<void(const Exponents&)>& visit) {
    if (d < 1) throw std::invalid_argument("compositions need d >= 1");
    if (e < 0) throw std::invalid_argument("compositions need e >= 0");
    Exponents beta(static_cast<std::size_t>(d), 0);
    compose(e, 0, beta, visit);
}

std::vector<Exponents> compositions(int e, int d) {
    std::vector<Exponents> out;
    for_each_composition(e, d, [&](const Exponents& beta) { out.push_back(beta); });
    return out;
}

RatVector evaluate(const Exponents& beta, const ExactRat& t) {
    if (t <= 0) throw std::invalid_argument("evaluation base must be positive");
    RatVector point;
    point.reserve(beta.size());
    for (int b : beta) {
        if (b < 0) throw std::invalid_argument("negative exponent");
        point.push_back(power(t, static_cast<unsigned long>(b)));
    }
    return point;
}

std::vector<Exponents> decreasing_factorizations(int e, int d) {
    std::vector<Exponents> out;
    for_each_composition(e, d, [&](const Exponents& beta) {
        if (std::is_sorted(beta.begin(), beta.end(), std::greater<>())) out.push_back(beta);
    });
    return out;
}

std::vector<PrimePower> prime_factorize(const ExactInt& n) {
    if (n < 2) throw std::invalid_argument("prime_factorize needs N >= 2");
    std::vector<PrimePower> out;
    ExactInt rest = n;
    for (ExactInt p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        PrimePower pp{p, 0};
        while (rest % p == 0) {
            rest /= p;
            ++pp.multiplicity;
        }
        out.push_back(pp);
    }
    if (rest > 1) out.push_back({rest, 1});
    return out;
}

RatVector GeneralFactorization::evaluate(const std::vector<ExactRat>& values) const {
    if (values.size() != primes.size()) throw DimensionError("one evaluation value per prime required");
    const std::size_t d = exponents.empty() ? 0 : exponents.front().size();
    RatVector point(d, ExactRat(1));
    for (std::size_t j = 0; j < primes.size(); ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            point[i] *= power(values[j], static_cast<unsigned long>(exponents[j][i]));
        }
    }
    return point;
}

IntVector GeneralFactorization::point() const {
    const std::size_t d = exponents.empty() ? 0 : exponents.front().size();
    IntVector out(d, ExactInt(1));
    for (std::size_t j = 0; j < primes.size(); ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            ExactInt f;
            mpz_pow_ui(f.get_mpz_t(), primes[j].prime.get_mpz_t(),
                       static_cast<unsigned long>(exponents[j][i]));
            out[i] *= f;
        }
    }
    return out;
}

std::vector<GeneralFactorization> general_factorizations(const ExactInt& n, int d) {
    if (d < 1) throw std::invalid_argument("vector factorizations need d >= 1");
    const auto primes = prime_factorize(n);
    std::vector<std::vector<Exponents>> per_prime;
    for (const auto& pp : primes) per_prime.push_back(compositions(pp.multiplicity, d));

    std::vector<GeneralFactorization> out;
    std::vector<std::size_t> odometer(primes.size(), 0);
    while (true) {
        GeneralFactorization f{primes, {}};
        for (std::size_t j = 0; j < primes.size(); ++j) f.exponents.push_back(per_prime[j][odometer[j]]);
        out.push_back(std::move(f));

        std::size_t j = primes.size();
        while (j > 0) {
            --j;
            if (++odometer[j] < per_prime[j].size()) break;
            odometer[j] = 0;
            if (j == 0) return out;
        }
    }
}

std::vector<IntVector> vector_factorizations(const ExactInt& n, int d) {
    std::vector<IntVector> out;
    for (const auto& f : general_factorizations(n, d)) out.push_back(f.point());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace primepoly
