#include "primepoly/verify.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace primepoly {

namespace {

std::string join_bases(const std::vector<ExactRat>& bases) {
    std::string out;
    for (std::size_t i = 0; i < bases.size(); ++i) {
        if (i) out += ',';
        out += bases[i].get_str();
    }
    return out;
}

class Checklist {
  public:
    explicit Checklist(std::vector<CheckResult>& sink) : sink_(sink) {}

    void add(std::string name, bool ok, std::string detail = {}) {
        sink_.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
    }
    void skip(std::string name, std::string detail) {
        sink_.push_back({std::move(name), CheckStatus::Skip, std::move(detail)});
    }

  private:
    std::vector<CheckResult>& sink_;
};

bool check_bijection(int d, int e) {
    for (int lambda = 1; lambda <= max_regular_type(d, e); ++lambda) {
        const auto regular = enumerate_regular(d, e, lambda);
        if (static_cast<long>(regular.size()) != binomial(e - lambda + d - 1, d - 1)) return false;
        for (const RegularVector& rv : regular) {
            const auto cls = classify(rv.alpha, d, e);
            const auto* got = std::get_if<RegularVector>(&cls);
            if (got == nullptr || !(*got == rv)) return false;
            if (psi(phi(rv), e, lambda) != rv) return false;
        }
        for (const Exponents& beta : compositions(e - lambda, d)) {
            if (phi(psi(beta, e, lambda)) != beta) return false;
        }
    }
    return true;
}

// Every vertex satisfies every inequality, tight exactly on its sharp set.
bool check_sharpness(int d, int e, const ExactRat& t, std::string& detail) {
    const VertexSet vertices(d, e);
    const auto points = vertices.evaluate(t);
    const auto inequalities = hrep(d, e, t);
    for (std::size_t k = 0; k < inequalities.size(); ++k) {
        IndexSet tight;
        for (std::size_t v = 0; v < points.size(); ++v) {
            const ExactRat s = inequalities[k].slack(points[v]);
            if (s < 0) {
                detail = "vertex " + std::to_string(v) + " violates " + inequalities[k].describe();
                return false;
            }
            if (s == 0) tight.push_back(v);
        }
        if (tight != vertices.indices_of(sharp_set(inequalities[k]))) {
            detail = "tight set differs from sharp set for " + inequalities[k].describe();
            return false;
        }
    }
    detail = std::to_string(inequalities.size()) + " inequalities x " + std::to_string(points.size()) + " vertices";
    return true;
}

bool check_minimality(int d, int e, const ExactRat& t, std::string& detail) {
    const auto inequalities = hrep(d, e, t);
    std::size_t passing = 0;
    for (const FacetCertificate& cert : minimality_certificate(d, e, t)) {
        const bool expected = !inequalities[cert.inequality].redundant;
        if (cert.passed() != expected) {
            detail = "unexpected certificate outcome for " + inequalities[cert.inequality].describe();
            return false;
        }
        if (cert.passed()) ++passing;
    }
    detail = std::to_string(passing) + " facet-defining, " + std::to_string(inequalities.size() - passing) +
             " redundant";
    return true;
}

bool check_normalization(int d, int e, const ExactRat& t) {
    for (const FacetDescriptor& f : facets(d, e, t)) {
        if (f.facet_class() != FacetClass::Regular) continue;
        std::vector<RatVector> expected;
        for (const Exponents& eps : Hypersimplex{d, f.inequality.regular.lambda}.vertices()) {
            expected.emplace_back(eps.begin(), eps.end());
        }
        std::sort(expected.begin(), expected.end());
        if (normalize_facet(f, t) != expected) return false;
    }
    return true;
}

std::vector<IndexSet> facet_family(int d, int e) {
    std::vector<IndexSet> out;
    for (const FacetDescriptor& f : facets(d, e)) out.push_back(f.vertices);
    return out;
}

std::vector<std::vector<IndexSet>> face_families(const std::vector<Face>& faces, int d) {
    std::vector<std::vector<IndexSet>> out(static_cast<std::size_t>(d));
    for (const Face& f : faces) out[f.dim].push_back(f.vertices);
    for (auto& family : out) std::sort(family.begin(), family.end());
    return out;
}

}  // namespace

bool VerificationReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

void VerificationReport::write(std::ostream& os) const {
    os << "verify d=" << d << " e=" << e << " bases=" << join_bases(bases) << '\n';
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
    for (const CheckResult& c : checks) {
        const char* tag = "PASS";
        switch (c.status) {
            case CheckStatus::Pass: ++pass; break;
            case CheckStatus::Fail: tag = "FAIL"; ++fail; break;
            case CheckStatus::Skip: tag = "SKIP"; ++skip; break;
        }
        os << tag << ' ' << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << '\n';
    }
    os << "summary: " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    os << (fail == 0 ? "RESULT: VERIFIED" : "RESULT: FAILED") << '\n';
}

VerificationReport verify_instance(int d, int e, const std::vector<ExactRat>& bases, const OracleLimits& limits) {
    if (d < 2 || e < 2) throw std::invalid_argument("verify needs d >= 2 and e >= 2");
    if (bases.empty()) throw std::invalid_argument("verify needs at least one base");
    for (const ExactRat& t : bases) {
        if (t <= 1) throw std::invalid_argument("every base must be > 1");
    }

    VerificationReport report{d, e, bases, {}};
    Checklist check(report.checks);

    const VertexSet vertices(d, e);
    const ExactInt expected_vertices = binomial(e + d - 1, d - 1);
    check.add("vertex-count", vertices.size() == expected_vertices,
              std::to_string(vertices.size()) + " = C(" + std::to_string(e + d - 1) + "," + std::to_string(d - 1) + ")");
    check.add("regular-bijection", check_bijection(d, e));

    const FVector formula = f_vector_formula(d, e);
    const FaceEnumeration enumeration = enumerate_faces(d, e);
    const FVector constructed = f_vector_from_faces(enumeration.faces, d);
    check.add("f-vector-formula-vs-lattice", formula == constructed, formula.str());
    check.add("euler-relation", formula.euler_holds());
    check.add("face-parametrization-injective", enumeration.duplicates == 0,
              std::to_string(enumeration.duplicates) + " duplicates");
    check.add("diamond-property", face_lattice(enumeration.faces).diamond_property(enumeration.faces, d));

    const auto closed_facets = facet_family(d, e);
    const auto closed_faces = face_families(enumeration.faces, d);
    std::optional<std::vector<IndexSet>> first_oracle_facets;
    std::optional<std::vector<std::vector<IndexSet>>> first_oracle_faces;
    bool invariant = true;
    bool oracle_ran = false;

    for (const ExactRat& t : bases) {
        const std::string at = " t=" + t.get_str();
        std::string detail;
        const bool sharp = check_sharpness(d, e, t, detail);
        check.add("validity-sharpness" + at, sharp, detail);
        const bool minimal = check_minimality(d, e, t, detail);
        check.add("minimality" + at, minimal, detail);
        check.add("hypersimplex-normalization" + at, check_normalization(d, e, t));

        PointCloud cloud{vertices.evaluate(t)};
        try {
            const auto lattice = brute_face_lattice(cloud, limits);
            const auto& oracle_faces = lattice.faces_by_dim;
            const std::vector<IndexSet>& oracle_facets = oracle_faces[static_cast<std::size_t>(d - 1)];
            oracle_ran = true;
            check.add("oracle-facets" + at, same_facet_family(oracle_facets, closed_facets),
                      std::to_string(oracle_facets.size()) + " facets");
            check.add("oracle-f-vector" + at, lattice.f_vector == formula, lattice.f_vector.str());
            check.add("oracle-face-lattice" + at, oracle_faces == closed_faces);

            bool all_vertices = true;
            for (std::size_t i = 0; i < cloud.points.size(); ++i) all_vertices = all_vertices && is_vertex(i, cloud);
            check.add("oracle-all-points-are-vertices" + at, all_vertices);

            if (!first_oracle_facets) {
                first_oracle_facets = oracle_facets;
                first_oracle_faces = oracle_faces;
            } else {
                invariant = invariant && *first_oracle_faces == oracle_faces;
            }
        } catch (const OracleTooLarge& ex) {
            check.skip("oracle" + at, ex.what());
        }
    }
    if (oracle_ran) {
        check.add("base-invariance", invariant, "oracle face families across bases " + join_bases(bases));
    }
    return report;
}

}  // namespace primepoly
