#include "primepoly/faces.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace primepoly {

bool FVector::euler_holds() const {
    if (f.empty()) return false;
    const int d = static_cast<int>(f.size()) - 1;
    ExactInt alternating = 0;
    for (int k = 0; k < d; ++k) alternating += (k % 2 == 0) ? f[k] : ExactInt(-f[k]);
    return alternating == (d % 2 == 0 ? 0 : 2);
}

std::string FVector::str() const {
    std::string out;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k) out += ' ';
        out += f[k].get_str();
    }
    return out;
}

FVector f_vector_formula(int d, int e) {
    if (d < 2 || e < 2) throw std::invalid_argument("f-vector formula needs d >= 2 and e >= 2");
    FVector out;
    out.f.push_back(binomial(e + d - 1, d - 1));
    out.f.push_back(binomial(d, 2) + binomial(d, 2) * binomial(e + d - 2, d - 1));
    for (int k = 2; k < d; ++k) {
        out.f.push_back(binomial(d + 1, k + 1) + binomial(d, k + 1) * binomial(e + d - 1, d) -
                        binomial(d, k + 1) * binomial(e - k + d - 1, d));
    }
    out.f.push_back(1);
    return out;
}

namespace {

// k-subsets of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int next) {
        if (pos == k) {
            visit(pick);
            return;
        }
        for (int v = next; v <= n - (k - pos); ++v) {
            pick[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
}

class FaceCollector {
  public:
    void add(Face face) {
        if (!seen_.insert(face.vertices).second) {
            ++duplicates_;
            return;
        }
        faces_.push_back(std::move(face));
    }

    FaceEnumeration finish() {
        std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
            if (a.dim != b.dim) return a.dim < b.dim;
            return a.vertices < b.vertices;
        });
        return FaceEnumeration{std::move(faces_), duplicates_};
    }

  private:
    std::vector<Face> faces_;
    std::set<IndexSet> seen_;
    std::size_t duplicates_ = 0;
};

}  // namespace

FaceEnumeration enumerate_faces(int d, int e) {
    if (d < 2 || e < 2) throw std::invalid_argument("face enumeration needs d >= 2 and e >= 2");
    const VertexSet vertices(d, e);
    FaceCollector collector;

    for (std::size_t i = 0; i < vertices.size(); ++i) collector.add(Face{{i}, 0, FaceClass::Vertex, {}, 0, {}});

    for (int k = 1; k < d; ++k) {
        for_each_subset(d, k + 1, [&](const std::vector<int>& support) {
            for (int lambda = 1; lambda <= std::min(k, e); ++lambda) {
                for_each_composition(e - lambda, d, [&](const Exponents& base) {
                    std::vector<Exponents> members;
                    for_each_subset(k + 1, lambda, [&](const std::vector<int>& raised) {
                        Exponents beta = base;
                        for (int r : raised) ++beta[support[r]];
                        members.push_back(std::move(beta));
                    });
                    collector.add(Face{vertices.indices_of(members), k, FaceClass::Regular, support, lambda, base});
                });
            }
        });

        for_each_subset(d, k + 1, [&](const std::vector<int>& coords) {
            std::vector<Exponents> members;
            for (int i : coords) {
                Exponents beta(static_cast<std::size_t>(d), 0);
                beta[i] = e;
                members.push_back(std::move(beta));
            }
            collector.add(Face{vertices.indices_of(members), k, FaceClass::ExceptionalInfinity, coords, 0, {}});
        });

        if (k >= 2) {
            for_each_subset(d, d - k, [&](const std::vector<int>& fixed) {
                std::vector<Exponents> members;
                for (const Exponents& beta : vertices.exponents()) {
                    if (std::all_of(fixed.begin(), fixed.end(), [&](int i) { return beta[i] == 0; })) {
                        members.push_back(beta);
                    }
                }
                collector.add(
                    Face{vertices.indices_of(members), k, FaceClass::ExceptionalIntersection, fixed, 0, {}});
            });
        }
    }
    return collector.finish();
}

FVector f_vector_from_faces(const std::vector<Face>& faces, int d) {
    FVector out;
    out.f.assign(static_cast<std::size_t>(d) + 1, 0);
    for (const Face& face : faces) {
        if (face.dim < 0 || face.dim >= d) throw std::invalid_argument("face dimension out of range");
        ++out.f[static_cast<std::size_t>(face.dim)];
    }
    out.f[static_cast<std::size_t>(d)] = 1;
    return out;
}

FaceLattice face_lattice(const std::vector<Face>& faces) {
    FaceLattice lattice;
    lattice.up.resize(faces.size());
    lattice.down.resize(faces.size());

    // containing[v]: faces (by index) having vertex v, bucketed by dimension.
    std::size_t vertex_count = 0;
    int max_dim = 0;
    for (const Face& face : faces) {
        if (!face.vertices.empty()) vertex_count = std::max(vertex_count, face.vertices.back() + 1);
        max_dim = std::max(max_dim, face.dim);
    }
    std::vector<std::vector<std::vector<std::size_t>>> containing(
        static_cast<std::size_t>(max_dim) + 1, std::vector<std::vector<std::size_t>>(vertex_count));
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t v : faces[i].vertices) containing[faces[i].dim][v].push_back(i);
    }

    for (std::size_t i = 0; i < faces.size(); ++i) {
        const Face& low = faces[i];
        if (low.dim >= max_dim || low.vertices.empty()) continue;
        for (std::size_t j : containing[low.dim + 1][low.vertices.front()]) {
            const IndexSet& high = faces[j].vertices;
            if (std::includes(high.begin(), high.end(), low.vertices.begin(), low.vertices.end())) {
                lattice.up[i].push_back(j);
                lattice.down[j].push_back(i);
            }
        }
    }
    return lattice;
}

bool FaceLattice::diamond_property(const std::vector<Face>& faces, int d) const {
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].dim == 1 && faces[i].vertices.size() != 2) return false;
        if (faces[i].dim == d - 2 && up[i].size() != 2) return false;
        std::map<std::size_t, int> middles;
        for (std::size_t mid : up[i]) {
            for (std::size_t top : up[mid]) ++middles[top];
        }
        for (const auto& [top, count] : middles) {
            if (count != 2) return false;
        }
    }
    return true;
}

}  // namespace primepoly
