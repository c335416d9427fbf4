#include "klab/matrix.hpp"

#include <algorithm>

namespace klab {

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, FieldSpec field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

void Matrix::append_row(const Vec& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) fail("shape_mismatch", "row length does not match matrix");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) fail("shape_mismatch", "vector length does not match matrix");
    Vec out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar sum = Scalar::zero(field_);
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& a = at(i, j);
            if (!a.is_zero() && !v[j].is_zero()) sum += a * v[j];
        }
        out[i] = std::move(sum);
    }
    return out;
}

Matrix Matrix::multiplied_by(const Matrix& other) const {
    if (cols_ != other.rows_) fail("shape_mismatch", "matrix product shapes");
    Matrix out(rows_, other.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Scalar& b = other.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    return out;
}

namespace {

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_in_place(std::vector<Vec>& m, FieldSpec field) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        Scalar inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m[r][j].is_zero()) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t Matrix::rank() const {
    std::vector<Vec> m;
    m.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) m.push_back(row(i));
    return rref_in_place(m, field_).size();
}

std::vector<Vec> Matrix::kernel_basis() const {
    std::vector<Vec> m;
    m.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) m.push_back(row(i));
    auto pivots = rref_in_place(m, field_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        Vec v(cols_, Scalar::zero(field_));
        v[c] = Scalar::one(field_);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> Matrix::solve(const Vec& rhs) const {
    if (rhs.size() != rows_) fail("shape_mismatch", "rhs length does not match matrix");
    std::vector<Vec> m;
    m.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Vec r = row(i);
        r.push_back(rhs[i]);
        m.push_back(std::move(r));
    }
    auto pivots = rref_in_place(m, field_);
    // inconsistent if the last column is a pivot
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    Vec x(cols_, Scalar::zero(field_));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols_];
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) fail("shape_mismatch", "inverse of a non-square matrix");
    std::vector<Vec> m;
    m.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Vec r = row(i);
        for (std::size_t j = 0; j < cols_; ++j)
            r.push_back(i == j ? Scalar::one(field_) : Scalar::zero(field_));
        m.push_back(std::move(r));
    }
    std::vector<std::size_t> pivots = rref_in_place(m, field_);
    if (pivots.size() != rows_) return std::nullopt;
    Matrix inv(rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = m[i][cols_ + j];
    return inv;
}

Scalar Matrix::determinant() const {
    if (rows_ != cols_) fail("shape_mismatch", "determinant of a non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return Scalar::one(field_);
    if (!field_.is_rational()) {
        // plain elimination over Z/p
        std::vector<Vec> m;
        for (std::size_t i = 0; i < n; ++i) m.push_back(row(i));
        Scalar det = Scalar::one(field_);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t sel = c;
            while (sel < n && m[sel][c].is_zero()) ++sel;
            if (sel == n) return Scalar::zero(field_);
            if (sel != c) {
                std::swap(m[sel], m[c]);
                det = -det;
            }
            det = det * m[c][c];
            Scalar inv = m[c][c].inverse();
            for (std::size_t i = c + 1; i < n; ++i) {
                if (m[i][c].is_zero()) continue;
                Scalar f = m[i][c] * inv;
                for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
            }
        }
        return det;
    }
    // Bareiss over the integers after clearing row denominators
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    mpq_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class d = at(i, j).rational_value().get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
            lcm = lcm / g * d;
        }
        scale *= mpq_class(1, lcm);
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class v = at(i, j).rational_value() * lcm;
            m[i][j] = v.get_num();
        }
    }
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && m[sel][k] == 0) ++sel;
            if (sel == n) return Scalar::zero(field_);
            std::swap(m[sel], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    mpq_class det = mpq_class(m[n - 1][n - 1]) * scale * sign;
    det.canonicalize();
    return Scalar::rational(det);
}

void EchelonSpan::reduce(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Scalar f = c;
        const Vec& row = rows_[r];
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
}

bool EchelonSpan::insert(Vec v) {
    reduce(v);
    std::size_t pivot = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) {
            pivot = j;
            break;
        }
    if (pivot == v.size()) return false;
    Scalar inv = v[pivot].inverse();
    for (auto& c : v)
        if (!c.is_zero()) c = c * inv;
    // keep earlier rows reduced against the new one
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar f = rows_[r][pivot];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) rows_[r][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool EchelonSpan::contains(Vec v) const {
    reduce(v);
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

} // namespace klab
