#include "linalg.hpp"

namespace pkv {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
    if (rows.empty()) return ExactMatrix();
    ExactMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged row list");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

ExactMatrix ExactMatrix::conj() const {
    ExactMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].conj();
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    ExactMatrix m(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const GaussianRational& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                const GaussianRational& b = o.at(k, c);
                if (!b.is_zero()) m.at(r, c) += a * b;
            }
        }
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum dimension mismatch");
    ExactMatrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
    return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference dimension mismatch");
    ExactMatrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
    return m;
}

ExactMatrix ExactMatrix::scaled(const GaussianRational& c) const {
    ExactMatrix m = *this;
    for (auto& v : m.data_) v *= c;
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

std::vector<GaussianRational> ExactMatrix::apply(const std::vector<GaussianRational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<GaussianRational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

std::vector<std::size_t> ExactMatrix::echelonize(std::vector<std::vector<GaussianRational>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t nrows = m.size(), ncols = m[0].size(), row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pivot = row;
        while (pivot < nrows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == nrows) continue;
        std::swap(m[row], m[pivot]);
        GaussianRational inv = GaussianRational(1) / m[row][col];
        for (std::size_t c = col; c < ncols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            GaussianRational f = m[r][col];
            for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t ExactMatrix::rank() const {
    std::vector<std::vector<GaussianRational>> m(rows_,
                                                 std::vector<GaussianRational>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    return echelonize(m).size();
}

std::vector<std::vector<GaussianRational>> ExactMatrix::kernel_basis() const {
    std::vector<std::vector<GaussianRational>> m(rows_,
                                                 std::vector<GaussianRational>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    std::vector<std::size_t> pivots = echelonize(m);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussianRational> v(cols_);
        v[free] = GaussianRational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<ExactMatrix> ExactMatrix::solve(const ExactMatrix& rhs) const {
    if (rhs.rows_ != rows_) throw std::invalid_argument("solve dimension mismatch");
    std::size_t w = cols_ + rhs.cols_;
    std::vector<std::vector<GaussianRational>> m(rows_, std::vector<GaussianRational>(w));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
        for (std::size_t c = 0; c < rhs.cols_; ++c) m[r][cols_ + c] = rhs.at(r, c);
    }
    std::vector<std::size_t> pivots = echelonize(m);
    for (std::size_t p : pivots)
        if (p >= cols_) return std::nullopt;  // inconsistent system
    ExactMatrix x(cols_, rhs.cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t c = 0; c < rhs.cols_; ++c) x.at(pivots[i], c) = m[i][cols_ + c];
    return x;
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    std::size_t w = 2 * cols_;
    std::vector<std::vector<GaussianRational>> m(rows_, std::vector<GaussianRational>(w));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
        m[r][cols_ + r] = GaussianRational(1);
    }
    std::vector<std::size_t> pivots = echelonize(m);
    std::size_t rank = 0;
    for (std::size_t p : pivots)
        if (p < cols_) ++rank;
    if (rank < cols_) throw SingularMatrixError(rank, cols_);
    ExactMatrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = m[r][cols_ + c];
    return inv;
}

GaussianRational ExactMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    std::vector<std::vector<GaussianRational>> m(rows_,
                                                 std::vector<GaussianRational>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    GaussianRational d(1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows_) return GaussianRational(0);
        if (pivot != col) {
            std::swap(m[col], m[pivot]);
            d = -d;
        }
        d *= m[col][col];
        GaussianRational inv = GaussianRational(1) / m[col][col];
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m[r][col].is_zero()) continue;
            GaussianRational f = m[r][col] * inv;
            for (std::size_t c = col; c < cols_; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return d;
}

std::size_t span_rank(const std::vector<std::vector<GaussianRational>>& vectors) {
    if (vectors.empty()) return 0;
    return ExactMatrix::from_rows(vectors).rank();
}

std::vector<std::vector<GaussianRational>> span_basis(
    const std::vector<std::vector<GaussianRational>>& vectors) {
    std::vector<std::vector<GaussianRational>> basis;
    if (vectors.empty()) return basis;
    std::vector<std::vector<GaussianRational>> work = vectors;
    std::size_t ncols = vectors[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < work.size(); ++col) {
        std::size_t p = row;
        while (p < work.size() && work[p][col].is_zero()) ++p;
        if (p == work.size()) continue;
        std::swap(work[row], work[p]);
        GaussianRational inv = GaussianRational(1) / work[row][col];
        for (std::size_t c = col; c < ncols; ++c) work[row][c] *= inv;
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r == row || work[r][col].is_zero()) continue;
            GaussianRational f = work[r][col];
            for (std::size_t c = col; c < ncols; ++c) work[r][c] -= f * work[row][c];
        }
        basis.push_back(work[row]);
        ++row;
    }
    return basis;
}

bool in_span(const std::vector<std::vector<GaussianRational>>& basis,
             const std::vector<GaussianRational>& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    std::vector<std::vector<GaussianRational>> with = basis;
    with.push_back(v);
    return span_rank(with) == span_rank(basis);
}

}  // namespace pkv
