/**
 * Exact linear algebra over the rationals.
 *
 * Everything here is small (a few hundred rows at most), so matrices are
 * dense and entries are arbitrary-precision rationals.  Ranks, kernels and
 * determinants are computed by Gaussian elimination with exact pivots.
 */

#ifndef HEXAD_EXACT_HPP
#define HEXAD_EXACT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hexad {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Checked 64-bit helpers; throw std::overflow_error instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

using RationalVector = std::vector<Rational>;

class RationalMatrix
{
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;

    std::size_t rank() const;

    /// Basis of {x : A x = 0}, one vector per free column of the echelon form.
    std::vector<RationalVector> nullspace() const;

    Rational determinant() const;

    RationalMatrix operator*(const RationalMatrix& other) const;

    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/**
 * Reduced row echelon form, in place.  Returns the pivot column of each
 * nonzero row, in order.
 */
std::vector<std::size_t> row_reduce(RationalMatrix& m);

/**
 * Incrementally maintained basis of a subspace of Q^n.
 *
 * Vectors are kept in reduced echelon form against their pivot columns, so
 * membership tests and insertions are a single reduction pass.
 */
class SubspaceBasis
{
public:
    explicit SubspaceBasis(std::size_t ambient_dim) : dim_(ambient_dim) {}

    std::size_t ambient_dim() const { return dim_; }
    std::size_t size() const { return rows_.size(); }

    /// Reduce v against the current basis; the result is zero iff v lies in the span.
    RationalVector reduce(RationalVector v) const;

    /// Insert v if it is independent; returns true if the span grew.
    bool insert(const RationalVector& v);

    bool contains(const RationalVector& v) const;

    const std::vector<RationalVector>& vectors() const { return rows_; }

private:
    std::size_t dim_;
    std::vector<RationalVector> rows_;
    std::vector<std::size_t> pivots_;
};

bool is_zero(const RationalVector& v);

}   // namespace hexad

#endif
