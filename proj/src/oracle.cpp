#include "primepoly/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <thread>

namespace primepoly {

namespace {

using Mask = std::uint64_t;

IndexSet mask_to_indices(Mask mask) {
    IndexSet out;
    while (mask) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

struct FoundFacet {
    Hyperplane plane;
    int side;
    Mask incident;
};

std::vector<IntVector> to_integer_points(const PointCloud& cloud) {
    ExactInt scale = 1;
    for (const RatVector& p : cloud.points) {
        for (const ExactRat& x : p) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<IntVector> out;
    out.reserve(cloud.points.size());
    for (const RatVector& p : cloud.points) {
        IntVector row(p.size());
        for (std::size_t j = 0; j < p.size(); ++j) row[j] = p[j].get_num() * (scale / p[j].get_den());
        out.push_back(std::move(row));
    }
    return out;
}

// All d-subsets whose smallest element is congruent to `worker` mod `stride`.
void scan_subsets(const std::vector<IntVector>& pts, std::size_t d, unsigned worker, unsigned stride,
                  std::vector<FoundFacet>& found) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> pick(d);
    std::vector<const IntVector*> refs(d);
    ExactInt acc;
    ExactInt term;

    for (std::size_t first = worker; first + d <= n; first += stride) {
        pick[0] = first;
        for (std::size_t k = 1; k < d; ++k) pick[k] = first + k;
        while (true) {
            Mask subset = 0;
            for (std::size_t k = 0; k < d; ++k) subset |= Mask{1} << pick[k];
            const bool known = std::any_of(found.begin(), found.end(),
                                           [&](const FoundFacet& f) { return (subset & ~f.incident) == 0; });
            if (!known) {
                for (std::size_t k = 0; k < d; ++k) refs[k] = &pts[pick[k]];
                if (auto plane = solve_integer_hyperplane(refs)) {
                    const ExactInt offset = plane->offset.get_num();
                    bool above = false;
                    bool below = false;
                    Mask incident = 0;
                    for (std::size_t i = 0; i < n && !(above && below); ++i) {
                        acc = -offset;
                        for (std::size_t j = 0; j < d; ++j) {
                            mpz_mul(term.get_mpz_t(), plane->normal[j].get_mpz_t(), pts[i][j].get_mpz_t());
                            acc += term;
                        }
                        const int s = sgn(acc);
                        if (s > 0) above = true;
                        else if (s < 0) below = true;
                        else incident |= Mask{1} << i;
                    }
                    if (!(above && below)) found.push_back({std::move(*plane), below ? -1 : 1, incident});
                }
            }

            // Advance positions 1..d-1, keeping pick[0] fixed.
            std::size_t k = d;
            while (k > 1 && pick[k - 1] == n - d + (k - 1)) --k;
            if (k == 1) break;
            ++pick[k - 1];
            for (std::size_t j = k; j < d; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
}

std::vector<FoundFacet> find_facets(const PointCloud& cloud, const OracleLimits& limits, unsigned threads) {
    const std::size_t n = cloud.points.size();
    const std::size_t d = cloud.dimension();
    if (n == 0 || d == 0) throw NotFullDimensional("empty point cloud");
    if (n > limits.max_points || n > 64) {
        throw OracleTooLarge("oracle refuses " + std::to_string(n) + " points");
    }
    if (binomial(static_cast<long>(n), static_cast<long>(d)) > limits.max_subsets) {
        throw OracleTooLarge("oracle refuses C(" + std::to_string(n) + "," + std::to_string(d) + ") subsets");
    }
    for (const RatVector& p : cloud.points) {
        if (p.size() != d) throw DimensionError("points of mixed dimension");
    }
    if (affine_rank(cloud.points) != d) throw NotFullDimensional("point cloud is not full-dimensional");

    const auto pts = to_integer_points(cloud);
    if (threads == 0) threads = oracle_threads();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));

    std::vector<std::vector<FoundFacet>> partial(threads);
    if (threads == 1) {
        scan_subsets(pts, d, 0, 1, partial[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] { scan_subsets(pts, d, w, threads, partial[w]); });
        }
        for (auto& th : pool) th.join();
    }

    std::map<IndexSet, FoundFacet> merged;
    for (auto& part : partial) {
        for (auto& f : part) merged.try_emplace(mask_to_indices(f.incident), std::move(f));
    }
    std::vector<FoundFacet> out;
    out.reserve(merged.size());
    for (auto& [idx, f] : merged) out.push_back(std::move(f));
    return out;
}

}  // namespace

unsigned oracle_threads() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PRIMEPOLY_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) hw = std::min(hw, static_cast<unsigned>(cap));
        } catch (const std::exception&) {
            // unparsable cap: ignore
        }
    }
    return hw;
}

std::vector<OracleFacet> brute_facets(const PointCloud& cloud, const OracleLimits& limits, unsigned threads) {
    auto found = find_facets(cloud, limits, threads);
    // Offsets were computed on the rescaled cloud; restate them for the input.
    ExactInt scale = 1;
    for (const RatVector& p : cloud.points) {
        for (const ExactRat& x : p) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<OracleFacet> out;
    for (auto& f : found) {
        f.plane.offset /= scale;
        f.plane.offset.canonicalize();
        out.push_back(OracleFacet{std::move(f.plane), f.side, mask_to_indices(f.incident)});
    }
    return out;
}

OracleLattice brute_face_lattice(const PointCloud& cloud, const OracleLimits& limits, unsigned threads) {
    const auto found = find_facets(cloud, limits, threads);
    const std::size_t d = cloud.dimension();

    std::set<Mask> seen;
    std::deque<Mask> queue;
    for (const auto& f : found) {
        if (seen.insert(f.incident).second) queue.push_back(f.incident);
    }
    while (!queue.empty()) {
        const Mask face = queue.front();
        queue.pop_front();
        for (const auto& f : found) {
            const Mask meet = face & f.incident;
            if (meet != 0 && seen.insert(meet).second) queue.push_back(meet);
        }
    }

    OracleLattice lattice;
    lattice.faces_by_dim.resize(d);
    for (Mask face : seen) {
        IndexSet idx = mask_to_indices(face);
        std::vector<RatVector> pts;
        for (std::size_t i : idx) pts.push_back(cloud.points[i]);
        const std::size_t dim = affine_rank(pts);
        lattice.faces_by_dim.at(dim).push_back(std::move(idx));
    }
    lattice.f_vector.f.assign(d + 1, 0);
    for (std::size_t k = 0; k < d; ++k) {
        std::sort(lattice.faces_by_dim[k].begin(), lattice.faces_by_dim[k].end());
        lattice.f_vector.f[k] = static_cast<unsigned long>(lattice.faces_by_dim[k].size());
    }
    lattice.f_vector.f[d] = 1;
    return lattice;
}

bool is_vertex(std::size_t i, const PointCloud& cloud) {
    if (i >= cloud.points.size()) throw std::out_of_range("point index out of range");
    std::vector<RatVector> others;
    for (std::size_t j = 0; j < cloud.points.size(); ++j) {
        if (j != i) others.push_back(cloud.points[j]);
    }
    return !linear_feasible(others, cloud.points[i]).has_value();
}

bool same_facet_family(std::vector<IndexSet> a, std::vector<IndexSet> b) {
    for (auto& s : a) std::sort(s.begin(), s.end());
    for (auto& s : b) std::sort(s.begin(), s.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<IndexSet> facets_of_facet(const PointCloud& cloud, const IndexSet& face, const OracleLimits& limits) {
    const std::size_t d = cloud.dimension();
    if (d < 2) throw DimensionError("facets of a facet need d >= 2");
    std::vector<RatVector> pts;
    for (std::size_t i : face) pts.push_back(cloud.points.at(i));
    if (affine_rank(pts) != d - 1) throw NotFullDimensional("index set does not span a hyperplane");

    for (std::size_t drop = 0; drop < d; ++drop) {
        PointCloud projected;
        for (const RatVector& p : pts) {
            RatVector q;
            for (std::size_t j = 0; j < d; ++j) {
                if (j != drop) q.push_back(p[j]);
            }
            projected.points.push_back(std::move(q));
        }
        if (affine_rank(projected.points) != d - 1) continue;

        std::vector<IndexSet> out;
        for (const auto& f : brute_facets(projected, limits, 1)) {
            IndexSet global;
            for (std::size_t local : f.incident) global.push_back(face[local]);
            out.push_back(std::move(global));
        }
        return out;
    }
    throw NotFullDimensional("no injective coordinate projection found");
}

}  // namespace primepoly
