#pragma once

// Exact integer/rational arithmetic and the small amount of exact linear
// algebra the rest of the library needs. All values are GMP-backed.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace primepoly {

using ExactInt = mpz_class;
using ExactRat = mpq_class;
using IntVector = std::vector<ExactInt>;
using RatVector = std::vector<ExactRat>;

/// Thrown when operand shapes do not fit (non-square, length mismatch).
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Dense row-major matrix over an exact scalar type.
 */
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix&) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<ExactInt>;
using RatMatrix = Matrix<ExactRat>;

/// Determinant by Bareiss elimination; every intermediate stays integral.
ExactInt det_fraction_free(const IntMatrix& m);

/// Dimension of the affine hull of `points` (0 for a single point).
std::size_t affine_rank(std::span<const RatVector> points);

/**
 * Hyperplane {x : normal . x = offset}. The normal is an integer vector with
 * coprime entries whose first nonzero entry is positive, so two hyperplanes
 * are the same set iff they compare equal.
 */
struct Hyperplane {
    IntVector normal;
    ExactRat offset;

    bool operator==(const Hyperplane&) const = default;
};

bool operator<(const Hyperplane& a, const Hyperplane& b);

/// Hyperplane through exactly d points of Q^d, or nullopt if they are
/// affinely dependent.
std::optional<Hyperplane> solve_hyperplane(std::span<const RatVector> points);

/// Integer-coordinate variant used on hot paths; same contract and
/// normalization as solve_hyperplane.
std::optional<Hyperplane> solve_integer_hyperplane(std::span<const IntVector* const> points);

/**
 * Exact phase-1 simplex (smallest-index pivoting) for
 *   sum_j lambda_j v_j = w,  sum_j lambda_j = 1,  lambda >= 0.
 * Returns a witness lambda or nullopt when w is not in conv(v).
 */
std::optional<RatVector> linear_feasible(std::span<const RatVector> points, const RatVector& target);

/// C(n, k); zero when k < 0, n < 0 or k > n.
ExactInt binomial(long n, long k);

/// t^k for k >= 0.
ExactRat power(const ExactRat& t, unsigned long k);

/// Parses "7", "-3", "5/2" into a canonical rational. Throws
/// std::invalid_argument on malformed text or zero denominator.
ExactRat parse_rational(std::string_view text);

/// Always "num/den" (den printed even when 1).
std::string format_rational(const ExactRat& q);

}  // namespace primepoly
