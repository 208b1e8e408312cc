#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace pkv {

class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(std::size_t rank, std::size_t size)
        : std::runtime_error("matrix is singular (rank " + std::to_string(rank) + " of " +
                             std::to_string(size) + ")"),
          rank_(rank) {}
    std::size_t rank() const { return rank_; }

private:
    std::size_t rank_;
};

// Dense matrix over the Gaussian rationals with exact elimination-based solvers.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    ExactMatrix transpose() const;
    ExactMatrix conj() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix scaled(const GaussianRational& c) const;
    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool is_zero() const;

    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;

    std::size_t rank() const;
    // Basis of the right kernel; each vector satisfies A v = 0 exactly.
    std::vector<std::vector<GaussianRational>> kernel_basis() const;
    // Solves A X = B column-wise; nullopt when inconsistent.
    std::optional<ExactMatrix> solve(const ExactMatrix& rhs) const;
    // Exact inverse; throws SingularMatrixError carrying the rank.
    ExactMatrix inverse() const;
    GaussianRational det() const;

private:
    // Row reduction into echelon form; returns pivot columns. Pivoting picks the
    // first row with a nonzero leading coefficient.
    static std::vector<std::size_t> echelonize(std::vector<std::vector<GaussianRational>>& m);

    std::size_t rows_, cols_;
    std::vector<GaussianRational> data_;
};

// Exact rank of the span of a family of vectors (rows).
std::size_t span_rank(const std::vector<std::vector<GaussianRational>>& vectors);

// Reduced basis (echelon rows, unit pivots) of the span of a family of vectors.
std::vector<std::vector<GaussianRational>> span_basis(
    const std::vector<std::vector<GaussianRational>>& vectors);

// True when `v` lies in the span of `basis` (basis need not be reduced).
bool in_span(const std::vector<std::vector<GaussianRational>>& basis,
             const std::vector<GaussianRational>& v);

}  // namespace pkv
