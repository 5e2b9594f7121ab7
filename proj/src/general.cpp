#include "primepoly/general.hpp"

#include <algorithm>
#include <stdexcept>

namespace primepoly {

SymmetricIntMatrix::SymmetricIntMatrix(IntMatrix entries) : entries_(std::move(entries)) {
    if (!entries_.square()) throw DimensionError("symmetric matrix must be square");
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (entries_(i, j) != entries_(j, i)) throw std::invalid_argument("matrix is not symmetric");
        }
    }
}

SymmetricIntMatrix SymmetricIntMatrix::zero(std::size_t size) { return SymmetricIntMatrix(IntMatrix(size, size)); }

SymmetricIntMatrix cartan_A(std::size_t d) {
    IntMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = 2;
        if (i + 1 < d) {
            m(i, i + 1) = -1;
            m(i + 1, i) = -1;
        }
    }
    return SymmetricIntMatrix(std::move(m));
}

namespace {

IntMatrix leading_block(const IntMatrix& m, std::size_t k) {
    IntMatrix out(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) out(i, j) = m(i, j);
    }
    return out;
}

class CompletionSearcher {
  public:
    CompletionSearcher(const SymmetricIntMatrix& a, const ExactInt& n, const ExactInt& bound)
        : a_(a), n_(n), bound_(bound), work_(a.entries()), diagonal_(a.size()) {}

    std::vector<DiagonalCompletion> run() {
        if (a_.size() > 0) descend(0, ExactInt(1));
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

  private:
    // `minor` is the leading k x k minor for the diagonal chosen so far.
    void descend(std::size_t k, const ExactInt& minor) {
        work_(k, k) = a_(k, k);
        const ExactInt constant = det_fraction_free(leading_block(work_, k + 1));

        if (k + 1 == a_.size()) {
            const ExactInt gap = n_ - constant;
            if (!mpz_divisible_p(gap.get_mpz_t(), minor.get_mpz_t())) return;
            diagonal_[k] = gap / minor;
            found_.push_back(DiagonalCompletion{diagonal_});
            return;
        }

        // minor * D_k + constant > 0
        ExactInt lo;
        const ExactInt neg = -constant;
        mpz_fdiv_q(lo.get_mpz_t(), neg.get_mpz_t(), minor.get_mpz_t());
        ++lo;
        for (ExactInt v = lo; v <= bound_; ++v) {
            diagonal_[k] = v;
            work_(k, k) = a_(k, k) + v;
            descend(k + 1, minor * v + constant);
        }
        work_(k, k) = a_(k, k);
    }

    const SymmetricIntMatrix& a_;
    ExactInt n_;
    ExactInt bound_;
    IntMatrix work_;
    IntVector diagonal_;
    std::vector<DiagonalCompletion> found_;
};

}  // namespace

bool is_positive_definite(const SymmetricIntMatrix& m) {
    for (std::size_t k = 1; k <= m.size(); ++k) {
        if (det_fraction_free(leading_block(m.entries(), k)) <= 0) return false;
    }
    return true;
}

IntMatrix with_diagonal(const SymmetricIntMatrix& a, const IntVector& diagonal) {
    if (diagonal.size() != a.size()) throw DimensionError("diagonal length differs from matrix size");
    IntMatrix m = a.entries();
    for (std::size_t i = 0; i < a.size(); ++i) m(i, i) += diagonal[i];
    return m;
}

CompletionSearch search_completions(const SymmetricIntMatrix& a, const ExactInt& n) {
    if (n < 1) throw std::invalid_argument("determinant target N must be >= 1");
    ExactInt largest = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) largest = std::max<ExactInt>(largest, abs(a(i, j)));
    }
    ExactInt bound = n * (1 + largest) * (1 + largest);

    CompletionSearch result;
    result.completions = CompletionSearcher(a, n, bound).run();
    result.rounds = 1;
    constexpr int kMaxRounds = 48;
    while (result.rounds < kMaxRounds) {
        const ExactInt doubled = 2 * bound;
        auto wider = CompletionSearcher(a, n, doubled).run();
        ++result.rounds;
        if (wider == result.completions) {
            result.bound = doubled;
            return result;
        }
        result.completions = std::move(wider);
        bound = doubled;
    }
    throw std::runtime_error("diagonal completion search did not stabilize");
}

std::vector<DiagonalCompletion> enumerate_DA(const SymmetricIntMatrix& a, const ExactInt& n) {
    return search_completions(a, n).completions;
}

std::size_t VertexReport::vertex_count() const {
    return static_cast<std::size_t>(std::count(is_vertex.begin(), is_vertex.end(), true));
}

VertexReport certify_vertices_DA(const SymmetricIntMatrix& a, const ExactInt& n) {
    VertexReport report;
    report.completions = enumerate_DA(a, n);
    PointCloud cloud;
    for (const auto& c : report.completions) {
        RatVector p;
        for (const ExactInt& v : c.diagonal) p.emplace_back(v);
        cloud.points.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < cloud.points.size(); ++i) report.is_vertex.push_back(is_vertex(i, cloud));
    return report;
}

PointCloud general_polytope_vertices(const ExactInt& n, int d) {
    PointCloud cloud;
    for (const IntVector& v : vector_factorizations(n, d)) {
        RatVector p;
        for (const ExactInt& x : v) p.emplace_back(x);
        cloud.points.push_back(std::move(p));
    }
    return cloud;
}

PointCloud general_polytope_vertices(const ExactInt& n, int d, const std::vector<ExactRat>& values) {
    PointCloud cloud;
    for (const auto& f : general_factorizations(n, d)) cloud.points.push_back(f.evaluate(values));
    std::sort(cloud.points.begin(), cloud.points.end());
    return cloud;
}

}  // namespace primepoly
