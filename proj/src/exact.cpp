#include "primepoly/exact.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

namespace primepoly {

ExactInt det_fraction_free(const IntMatrix& in) {
    if (!in.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = in.rows();
    if (n == 0) return 1;

    IntMatrix m = in;
    ExactInt prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                ExactInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    ExactInt det = m(n - 1, n - 1);
    return negate ? ExactInt(-det) : det;
}

namespace {

// Row-reduces in place and returns the rank.
std::size_t rank_in_place(std::vector<RatVector>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const ExactRat factor = rows[r][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t affine_rank(std::span<const RatVector> points) {
    if (points.empty()) throw std::invalid_argument("affine_rank of an empty point list");
    const std::size_t d = points.front().size();
    std::vector<RatVector> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != d) throw DimensionError("points of mixed dimension");
        RatVector row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(row));
    }
    return rank_in_place(diffs);
}

bool operator<(const Hyperplane& a, const Hyperplane& b) {
    if (a.normal != b.normal) {
        return std::lexicographical_compare(a.normal.begin(), a.normal.end(), b.normal.begin(),
                                            b.normal.end());
    }
    return a.offset < b.offset;
}

std::optional<Hyperplane> solve_integer_hyperplane(std::span<const IntVector* const> points) {
    const std::size_t d = points.size();
    if (d == 0) throw std::invalid_argument("hyperplane through zero points");
    for (const IntVector* p : points) {
        if (p->size() != d) throw std::invalid_argument("need exactly d points in dimension d");
    }

    // Normal = generalized cross product of the d-1 difference vectors.
    const IntVector& origin = *points[0];
    IntMatrix minor(d - 1, d - 1);
    IntVector normal(d);
    bool nonzero = false;
    for (std::size_t skip = 0; skip < d; ++skip) {
        for (std::size_t r = 1; r < d; ++r) {
            std::size_t c = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == skip) continue;
                minor(r - 1, c++) = (*points[r])[j] - origin[j];
            }
        }
        normal[skip] = det_fraction_free(minor);
        if (skip % 2 == 1) normal[skip] = -normal[skip];
        if (normal[skip] != 0) nonzero = true;
    }
    if (!nonzero) return std::nullopt;

    ExactInt g = 0;
    for (const ExactInt& a : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    const auto first = std::find_if(normal.begin(), normal.end(), [](const ExactInt& a) { return a != 0; });
    if (*first < 0) g = -g;
    for (ExactInt& a : normal) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());

    ExactInt offset = 0;
    for (std::size_t j = 0; j < d; ++j) offset += normal[j] * origin[j];
    return Hyperplane{std::move(normal), ExactRat(offset)};
}

std::optional<Hyperplane> solve_hyperplane(std::span<const RatVector> points) {
    const std::size_t d = points.empty() ? 0 : points.front().size();
    if (points.empty() || points.size() != d) {
        throw std::invalid_argument("solve_hyperplane needs exactly d points in dimension d");
    }
    ExactInt scale = 1;
    for (const RatVector& p : points) {
        if (p.size() != d) throw DimensionError("points of mixed dimension");
        for (const ExactRat& x : p) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<IntVector> scaled;
    scaled.reserve(d);
    for (const RatVector& p : points) {
        IntVector row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = p[j].get_num() * (scale / p[j].get_den());
        scaled.push_back(std::move(row));
    }
    std::vector<const IntVector*> refs;
    for (const IntVector& p : scaled) refs.push_back(&p);
    auto plane = solve_integer_hyperplane(refs);
    if (plane) {
        plane->offset /= scale;
        plane->offset.canonicalize();
    }
    return plane;
}

std::optional<RatVector> linear_feasible(std::span<const RatVector> points, const RatVector& target) {
    const std::size_t d = target.size();
    const std::size_t n = points.size();
    for (const RatVector& p : points) {
        if (p.size() != d) throw DimensionError("point and target dimensions differ");
    }
    if (n == 0) return std::nullopt;

    // Rows: d coordinate equations plus the convexity row. Columns: n lambdas,
    // m artificials, rhs. Row m is the phase-1 reduced-cost row.
    const std::size_t m = d + 1;
    const std::size_t width = n + m + 1;
    const std::size_t rhs = n + m;
    std::vector<RatVector> tab(m + 1, RatVector(width));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < n; ++j) tab[r][j] = r < d ? points[j][r] : ExactRat(1);
        tab[r][rhs] = r < d ? target[r] : ExactRat(1);
        if (tab[r][rhs] < 0) {
            for (std::size_t j = 0; j < n; ++j) tab[r][j] = -tab[r][j];
            tab[r][rhs] = -tab[r][rhs];
        }
        tab[r][n + r] = 1;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;
    for (std::size_t j = 0; j < width; ++j) {
        if (j >= n && j < n + m) continue;
        for (std::size_t r = 0; r < m; ++r) tab[m][j] -= tab[r][j];
    }

    while (true) {
        std::size_t entering = width;
        for (std::size_t j = 0; j < rhs; ++j) {
            if (tab[m][j] < 0) {
                entering = j;
                break;
            }
        }
        if (entering == width) break;

        std::size_t leave = m;
        ExactRat best;
        for (std::size_t r = 0; r < m; ++r) {
            if (tab[r][entering] <= 0) continue;
            ExactRat ratio = tab[r][rhs] / tab[r][entering];
            if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = std::move(ratio);
            }
        }
        // Phase 1 is bounded below by zero, so some row always qualifies.
        const ExactRat pivot = tab[leave][entering];
        for (std::size_t j = 0; j < width; ++j) tab[leave][j] /= pivot;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == leave || tab[r][entering] == 0) continue;
            const ExactRat factor = tab[r][entering];
            for (std::size_t j = 0; j < width; ++j) tab[r][j] -= factor * tab[leave][j];
        }
        basis[leave] = entering;
    }

    if (tab[m][rhs] != 0) return std::nullopt;
    RatVector lambda(n);
    for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] < n) lambda[basis[r]] = tab[r][rhs];
    }
    return lambda;
}

ExactInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    ExactInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

ExactRat power(const ExactRat& t, unsigned long k) {
    ExactRat out;
    mpz_pow_ui(out.get_num_mpz_t(), t.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), t.get_den_mpz_t(), k);
    return out;
}

namespace {

ExactInt parse_integer(std::string_view text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("empty integer literal");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
        }
    }
    if (text[0] == '+') text.remove_prefix(1);
    return ExactInt(std::string(text), 10);
}

}  // namespace

ExactRat parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    ExactInt num = parse_integer(text.substr(0, slash));
    ExactInt den = 1;
    if (slash != std::string_view::npos) {
        den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    ExactRat q(num, den);
    q.canonicalize();
    return q;
}

std::string format_rational(const ExactRat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace primepoly
