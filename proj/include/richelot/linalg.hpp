#pragma once

#include "richelot/field.hpp"

#include <cstddef>
#include <vector>

namespace richelot {

/// Dense row-major matrix over a finite field. Small sizes only: 2x2 Möbius maps, 3x3
/// planar maps, Sylvester and Macaulay matrices.
class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix identity(FieldPtr field, std::size_t n);

    const FieldPtr &field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem &operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    const std::vector<Elem> &entries() const noexcept { return a_; }

    Matrix operator*(const Matrix &rhs) const;
    Matrix operator+(const Matrix &rhs) const;
    Matrix operator-(const Matrix &rhs) const;
    Matrix scaled(Elem s) const;
    std::vector<Elem> apply(const std::vector<Elem> &v) const;

    Elem trace() const;
    Elem determinant() const;
    std::size_t rank() const;
    /// Throws Error(SingularMatrix) when not invertible.
    Matrix inverse() const;
    /// Basis of the right null space, in reduced echelon order.
    std::vector<std::vector<Elem>> kernel() const;

    /// True when this is a scalar multiple of the identity.
    bool is_scalar() const;
    /// Returns the scalar s with *this == s*other, if one exists (other nonzero).
    bool proportional_to(const Matrix &other, Elem *scale = nullptr) const;
    /// Scale so the first nonzero entry (row-major) is 1.
    Matrix normalized() const;

    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> a_;
};

} // namespace richelot
