#include "primepoly/polytope.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace primepoly {

VertexSet::VertexSet(int d, int e) : d_(d), e_(e), vertices_(compositions(e, d)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
}

std::optional<std::size_t> VertexSet::index_of(const Exponents& beta) const {
    const auto it = index_.find(beta);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

IndexSet VertexSet::indices_of(const std::vector<Exponents>& betas) const {
    IndexSet out;
    out.reserve(betas.size());
    for (const Exponents& beta : betas) {
        const auto idx = index_of(beta);
        if (!idx) throw std::invalid_argument("exponent vector is not a vertex");
        out.push_back(*idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RatVector> VertexSet::evaluate(const ExactRat& t) const {
    std::vector<RatVector> out;
    out.reserve(vertices_.size());
    for (const Exponents& beta : vertices_) out.push_back(primepoly::evaluate(beta, t));
    return out;
}

ExactRat Inequality::constant() const {
    switch (kind) {
        case InequalityKind::Upper:
            return ExactRat(d - 1) + power(base, static_cast<unsigned long>(e));
        case InequalityKind::Lower:
            return ExactRat(-1);
        case InequalityKind::Regular: {
            const int lambda = regular.lambda;
            const auto mu = static_cast<unsigned long>(regular.mu);
            return -(lambda * power(base, mu + 1) + (d - lambda) * power(base, mu));
        }
    }
    return 0;
}

RatVector Inequality::coefficients() const {
    RatVector a(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        switch (kind) {
            case InequalityKind::Upper: a[i] = -1; break;
            case InequalityKind::Lower: a[i] = i == coordinate ? 1 : 0; break;
            case InequalityKind::Regular: a[i] = power(base, static_cast<unsigned long>(regular.alpha[i])); break;
        }
    }
    return a;
}

ExactRat Inequality::slack(const RatVector& x) const {
    if (x.size() != static_cast<std::size_t>(d)) throw DimensionError("point dimension differs from d");
    const RatVector a = coefficients();
    ExactRat s = constant();
    for (int i = 0; i < d; ++i) s += a[i] * x[i];
    return s;
}

std::string Inequality::describe() const {
    std::ostringstream os;
    switch (kind) {
        case InequalityKind::Upper:
            os << "sum x_i <= " << d - 1 << " + t^" << e;
            break;
        case InequalityKind::Lower:
            os << "x_" << coordinate + 1 << " >= 1";
            break;
        case InequalityKind::Regular: {
            os << "sum t^alpha_i x_i >= " << regular.lambda << " t^" << regular.mu + 1 << " + "
               << d - regular.lambda << " t^" << regular.mu << ", alpha = (";
            for (std::size_t i = 0; i < regular.alpha.size(); ++i) os << (i ? "," : "") << regular.alpha[i];
            os << ")";
            break;
        }
    }
    if (redundant) os << " [redundant]";
    return os.str();
}

std::vector<Inequality> hrep(int d, int e, const ExactRat& t) {
    if (d < 2 || e < 2) throw std::invalid_argument("hrep needs d >= 2 and e >= 2");
    if (t <= 1) throw std::invalid_argument("base t must be > 1");

    std::vector<Inequality> out;
    out.push_back(Inequality{InequalityKind::Upper, d, e, t, {}, -1, false});
    for (int i = 0; i < d; ++i) out.push_back(Inequality{InequalityKind::Lower, d, e, t, {}, i, d == 2});
    for (int lambda = 1; lambda <= max_regular_type(d, e); ++lambda) {
        for (RegularVector& rv : enumerate_regular(d, e, lambda)) {
            out.push_back(Inequality{InequalityKind::Regular, d, e, t, std::move(rv), -1, false});
        }
    }
    return out;
}

bool contains(const RatVector& x, const std::vector<Inequality>& inequalities) {
    return std::all_of(inequalities.begin(), inequalities.end(),
                       [&](const Inequality& ineq) { return ineq.slack(x) >= 0; });
}

std::vector<Exponents> Hypersimplex::vertices() const {
    std::vector<Exponents> out;
    for_each_composition(lambda, d, [&](const Exponents& eps) {
        if (std::all_of(eps.begin(), eps.end(), [](int v) { return v <= 1; })) out.push_back(eps);
    });
    return out;
}

std::vector<Exponents> sharp_set(const Inequality& ineq) {
    std::vector<Exponents> out;
    switch (ineq.kind) {
        case InequalityKind::Upper:
            for (int i = 0; i < ineq.d; ++i) {
                Exponents beta(static_cast<std::size_t>(ineq.d), 0);
                beta[i] = ineq.e;
                out.push_back(std::move(beta));
            }
            break;
        case InequalityKind::Lower:
            for_each_composition(ineq.e, ineq.d, [&](const Exponents& beta) {
                if (beta[ineq.coordinate] == 0) out.push_back(beta);
            });
            break;
        case InequalityKind::Regular: {
            const Exponents base = phi(ineq.regular);
            for (const Exponents& eps : Hypersimplex{ineq.d, ineq.regular.lambda}.vertices()) {
                Exponents beta = base;
                for (std::size_t i = 0; i < beta.size(); ++i) beta[i] += eps[i];
                out.push_back(std::move(beta));
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FacetClass FacetDescriptor::facet_class() const {
    switch (inequality.kind) {
        case InequalityKind::Upper: return FacetClass::ExceptionalInfinity;
        case InequalityKind::Lower: return FacetClass::ExceptionalLower;
        case InequalityKind::Regular: return FacetClass::Regular;
    }
    return FacetClass::Regular;
}

std::vector<FacetDescriptor> facets(int d, int e, const ExactRat& t) {
    const VertexSet vertices(d, e);
    std::vector<FacetDescriptor> out;
    for (Inequality& ineq : hrep(d, e, t)) {
        if (ineq.redundant) continue;
        IndexSet idx = vertices.indices_of(sharp_set(ineq));
        out.push_back(FacetDescriptor{std::move(ineq), std::move(idx)});
    }
    return out;
}

std::vector<RatVector> normalize_facet(const FacetDescriptor& facet, const ExactRat& t) {
    if (facet.facet_class() != FacetClass::Regular) {
        throw std::invalid_argument("only regular facets normalize onto a hypersimplex");
    }
    const Inequality& ineq = facet.inequality;
    const Exponents base = phi(ineq.regular);
    const VertexSet vertices(ineq.d, ineq.e);

    std::vector<RatVector> image;
    for (std::size_t idx : facet.vertices) {
        const RatVector x = evaluate(vertices[idx], t);
        RatVector y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            const ExactRat low = power(t, static_cast<unsigned long>(base[i]));
            y[i] = (x[i] - low) / (low * t - low);
        }
        image.push_back(std::move(y));
    }
    std::sort(image.begin(), image.end());
    return image;
}

std::vector<FacetCertificate> minimality_certificate(int d, int e, const ExactRat& t) {
    const auto inequalities = hrep(d, e, t);
    std::vector<FacetCertificate> out;
    for (std::size_t k = 0; k < inequalities.size(); ++k) {
        std::vector<RatVector> points;
        for (const Exponents& beta : sharp_set(inequalities[k])) points.push_back(evaluate(beta, t));

        RatVector centroid(static_cast<std::size_t>(d));
        for (const RatVector& p : points) {
            for (int i = 0; i < d; ++i) centroid[i] += p[i];
        }
        for (ExactRat& c : centroid) c /= static_cast<long>(points.size());

        FacetCertificate cert;
        cert.inequality = k;
        cert.sharp_rank = affine_rank(points);
        cert.tight_on_self = inequalities[k].slack(centroid) == 0;
        cert.strict_elsewhere = true;
        for (std::size_t other = 0; other < inequalities.size(); ++other) {
            if (other == k) continue;
            if (inequalities[other].slack(centroid) <= 0) {
                cert.strict_elsewhere = false;
                if (!cert.also_tight) cert.also_tight = other;
            }
        }
        out.push_back(cert);
    }
    return out;
}

}  // namespace primepoly
