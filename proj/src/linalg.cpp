#include "richelot/linalg.hpp"

#include "richelot/error.hpp"

#include <algorithm>
#include <utility>

namespace richelot {

namespace {

// In-place row reduction to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const Field &F, std::vector<Elem> &a, std::size_t rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c].v == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[piv * cols + j], a[r * cols + j]);
        const Elem s = F.inv(a[r * cols + c]);
        for (std::size_t j = 0; j < cols; ++j)
            a[r * cols + j] = F.mul(a[r * cols + j], s);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i * cols + c].v == 0)
                continue;
            const Elem f = a[i * cols + c];
            for (std::size_t j = 0; j < cols; ++j)
                a[i * cols + j] = F.sub(a[i * cols + j], F.mul(f, a[r * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols)
{
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries))
{
    if (a_.size() != rows_ * cols_)
        throw Error(Errc::InvalidInput, "matrix entry count mismatch");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n)
{
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Elem{1};
    return m;
}

Matrix Matrix::operator*(const Matrix &rhs) const
{
    if (cols_ != rhs.rows_ || field_ != rhs.field_)
        throw Error(Errc::InvalidInput, "matrix shape or field mismatch");
    const Field &F = *field_;
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem a = (*this)(i, k);
            if (a.v == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) = F.add(out(i, j), F.mul(a, rhs(k, j)));
        }
    return out;
}

Matrix Matrix::operator+(const Matrix &rhs) const
{
    Matrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = field_->add(a_[i], rhs.a_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix &rhs) const
{
    Matrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = field_->sub(a_[i], rhs.a_[i]);
    return out;
}

Matrix Matrix::scaled(Elem s) const
{
    Matrix out = *this;
    for (auto &e : out.a_)
        e = field_->mul(e, s);
    return out;
}

std::vector<Elem> Matrix::apply(const std::vector<Elem> &v) const
{
    const Field &F = *field_;
    std::vector<Elem> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] = F.add(out[i], F.mul((*this)(i, j), v[j]));
    return out;
}

Elem Matrix::trace() const
{
    Elem t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        t = field_->add(t, (*this)(i, i));
    return t;
}

Elem Matrix::determinant() const
{
    if (rows_ != cols_)
        throw Error(Errc::InvalidInput, "determinant of a non-square matrix");
    const Field &F = *field_;
    std::vector<Elem> a = a_;
    const std::size_t n = rows_;
    Elem det = F.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c].v == 0)
            ++piv;
        if (piv == n)
            return F.zero();
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a[piv * n + j], a[c * n + j]);
            det = F.neg(det);
        }
        const Elem pv = a[c * n + c];
        det = F.mul(det, pv);
        const Elem pinv = F.inv(pv);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i * n + c].v == 0)
                continue;
            const Elem f = F.mul(a[i * n + c], pinv);
            for (std::size_t j = c; j < n; ++j)
                a[i * n + j] = F.sub(a[i * n + j], F.mul(f, a[c * n + j]));
        }
    }
    return det;
}

std::size_t Matrix::rank() const
{
    std::vector<Elem> a = a_;
    return rref(*field_, a, rows_, cols_).size();
}

Matrix Matrix::inverse() const
{
    if (rows_ != cols_)
        throw Error(Errc::SingularMatrix, "non-square matrix");
    const std::size_t n = rows_;
    std::vector<Elem> aug(n * 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i * 2 * n + j] = (*this)(i, j);
        aug[i * 2 * n + n + i] = Elem{1};
    }
    const auto piv = rref(*field_, aug, n, 2 * n);
    if (piv.size() < n || piv[n - 1] != n - 1)
        throw Error(Errc::SingularMatrix, "matrix is not invertible");
    Matrix out(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = aug[i * 2 * n + n + j];
    return out;
}

std::vector<std::vector<Elem>> Matrix::kernel() const
{
    const Field &F = *field_;
    std::vector<Elem> a = a_;
    const auto pivots = rref(F, a, rows_, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Elem> v(cols_);
        v[free] = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F.neg(a[r * cols_ + free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool Matrix::is_scalar() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i != j && (*this)(i, j).v != 0)
                return false;
            if (i == j && (*this)(i, i) != (*this)(0, 0))
                return false;
        }
    return true;
}

bool Matrix::proportional_to(const Matrix &other, Elem *scale) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        return false;
    const Field &F = *field_;
    std::size_t pivot = a_.size();
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (other.a_[i].v != 0) {
            pivot = i;
            break;
        }
    if (pivot == a_.size())
        return false;
    const Elem s = F.div(a_[pivot], other.a_[pivot]);
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != F.mul(s, other.a_[i]))
            return false;
    if (scale)
        *scale = s;
    return true;
}

Matrix Matrix::normalized() const
{
    for (const auto &e : a_)
        if (e.v != 0)
            return scaled(field_->inv(e));
    return *this;
}

} // namespace richelot
