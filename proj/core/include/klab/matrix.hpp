#pragma once

#include <optional>
#include <vector>

#include "klab/scalar.hpp"

namespace klab {

using Vec = std::vector<Scalar>;

// Dense exact matrix over Q or Z/p. Everything downstream (Hilbert
// functions, conductor kernels, separator solves) goes through this.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, FieldSpec field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldSpec field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void append_row(const Vec& row);
    Vec row(std::size_t i) const;

    Vec apply(const Vec& v) const;                 // A * v
    Matrix multiplied_by(const Matrix& other) const;

    std::size_t rank() const;
    std::vector<Vec> kernel_basis() const;         // basis of {v : A v = 0}
    std::optional<Vec> solve(const Vec& rhs) const;
    std::optional<Matrix> inverse() const;

    // Fraction-free determinant: Bareiss over Q (after clearing row
    // denominators), plain elimination over Z/p.
    Scalar determinant() const;

    static Matrix identity(std::size_t n, FieldSpec field);

private:
    std::size_t rows_ = 0, cols_ = 0;
    FieldSpec field_;
    std::vector<Scalar> data_;
};

// Incrementally maintained reduced row space; used for span dimensions with
// early exit and for membership tests.
class EchelonSpan {
public:
    EchelonSpan() = default;
    explicit EchelonSpan(FieldSpec field) : field_(field) {}

    // true if the vector enlarged the span
    bool insert(Vec v);
    bool contains(Vec v) const;
    std::size_t dimension() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    void reduce(Vec& v) const;

    FieldSpec field_;
    std::vector<Vec> rows_;            // reduced, pivot coefficient 1
    std::vector<std::size_t> pivots_;  // pivot column per row
};

} // namespace klab
