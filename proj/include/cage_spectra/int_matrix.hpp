#pragma once

#include "cage_spectra/polynomial.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace cage_spectra {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix all_ones(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    mpz_class trace() const;
    bool is_zero() const;
    bool is_symmetric() const;
    /// Largest |entry|; zero for an empty matrix.
    mpz_class max_abs_entry() const;
    mpz_class row_sum(std::size_t r) const;

    IntMatrix& operator+=(const IntMatrix& rhs);
    IntMatrix& operator-=(const IntMatrix& rhs);
    IntMatrix& operator*=(const mpz_class& scalar);

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
    friend IntMatrix operator*(IntMatrix a, const mpz_class& s) { return a *= s; }
    friend IntMatrix operator*(const mpz_class& s, IntMatrix a) { return a *= s; }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    IntMatrix power(unsigned exponent) const;

private:
    void require_same_shape(const IntMatrix& other) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// p(M) for a square matrix M, by Horner's scheme.
IntMatrix evaluate(const IntPolynomial& p, const IntMatrix& m);

} // namespace cage_spectra
