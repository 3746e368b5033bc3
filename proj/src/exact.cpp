#include "hexad/exact.hpp"

#include <stdexcept>
#include <utility>

namespace hexad {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows)
{
    if (rows.empty())
        return {};
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        if (rows[r].size() != m.cols_)
            throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const
{
    return RationalVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<std::size_t> row_reduce(RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c)
    {
        std::size_t p = lead;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != lead)
            for (std::size_t k = 0; k < m.cols(); ++k)
                std::swap(m(p, k), m(lead, k));
        Rational inv = 1 / m(lead, c);
        for (std::size_t k = c; k < m.cols(); ++k)
            m(lead, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r)
        {
            if (r == lead || m(r, c) == 0)
                continue;
            Rational f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                m(r, k) -= f * m(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

std::size_t RationalMatrix::rank() const
{
    RationalMatrix copy = *this;
    return row_reduce(copy).size();
}

std::vector<RationalVector> RationalMatrix::nullspace() const
{
    RationalMatrix r = *this;
    std::vector<std::size_t> pivots = row_reduce(r);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols_; ++free)
    {
        if (is_pivot[free])
            continue;
        RationalVector v(cols_);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational RationalMatrix::determinant() const
{
    if (rows_ != cols_)
        throw std::invalid_argument("determinant of a non-square matrix");
    RationalMatrix m = *this;
    Rational det = 1;
    for (std::size_t c = 0; c < cols_; ++c)
    {
        std::size_t p = c;
        while (p < rows_ && m(p, c) == 0)
            ++p;
        if (p == rows_)
            return 0;
        if (p != c)
        {
            for (std::size_t k = 0; k < cols_; ++k)
                std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < rows_; ++r)
        {
            if (m(r, c) == 0)
                continue;
            Rational f = m(r, c) / m(c, c);
            for (std::size_t k = c; k < cols_; ++k)
                m(r, k) -= f * m(c, k);
        }
    }
    return det;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix shape mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
        {
            if ((*this)(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out(i, j) += (*this)(i, k) * other(k, j);
        }
    return out;
}

bool RationalMatrix::is_zero() const
{
    for (const Rational& x : data_)
        if (x != 0)
            return false;
    return true;
}

bool is_zero(const RationalVector& v)
{
    for (const Rational& x : v)
        if (x != 0)
            return false;
    return true;
}

RationalVector SubspaceBasis::reduce(RationalVector v) const
{
    if (v.size() != dim_)
        throw std::invalid_argument("vector has wrong dimension");
    for (std::size_t i = 0; i < rows_.size(); ++i)
    {
        const Rational f = v[pivots_[i]];
        if (f == 0)
            continue;
        const RationalVector& b = rows_[i];
        for (std::size_t k = 0; k < dim_; ++k)
            if (b[k] != 0)
                v[k] -= f * b[k];
    }
    return v;
}

bool SubspaceBasis::insert(const RationalVector& v)
{
    RationalVector r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p] == 0)
        ++p;
    if (p == dim_)
        return false;
    Rational inv = 1 / r[p];
    for (Rational& x : r)
        x *= inv;
    // Keep the basis fully reduced so reduce() needs a single pass.
    for (RationalVector& b : rows_)
    {
        const Rational f = b[p];
        if (f == 0)
            continue;
        for (std::size_t k = 0; k < dim_; ++k)
            if (r[k] != 0)
                b[k] -= f * r[k];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

bool SubspaceBasis::contains(const RationalVector& v) const
{
    return is_zero(reduce(v));
}

}   // namespace hexad
