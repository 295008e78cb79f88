#include "cage_spectra/int_matrix.hpp"

#include "cage_spectra/errors.hpp"

#include <algorithm>

namespace cage_spectra {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols)
{
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::all_ones(std::size_t n)
{
    IntMatrix m(n, n);
    for (auto& x : m.data_)
        x = 1;
    return m;
}

mpz_class IntMatrix::trace() const
{
    mpz_class t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        t += (*this)(i, i);
    return t;
}

bool IntMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

bool IntMatrix::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

mpz_class IntMatrix::max_abs_entry() const
{
    mpz_class best = 0;
    for (const auto& x : data_)
        if (abs(x) > best)
            best = abs(x);
    return best;
}

mpz_class IntMatrix::row_sum(std::size_t r) const
{
    mpz_class s = 0;
    for (std::size_t c = 0; c < cols_; ++c)
        s += (*this)(r, c);
    return s;
}

void IntMatrix::require_same_shape(const IntMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DomainError(DomainErrorKind::bad_argument, "matrix shape mismatch");
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs)
{
    require_same_shape(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += rhs.data_[i];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& rhs)
{
    require_same_shape(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= rhs.data_[i];
    return *this;
}

IntMatrix& IntMatrix::operator*=(const mpz_class& scalar)
{
    for (auto& x : data_)
        x *= scalar;
    return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw DomainError(DomainErrorKind::bad_argument, "matrix product shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const mpz_class& x = a(i, l);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += x * b(l, j);
        }
    }
    return out;
}

IntMatrix IntMatrix::power(unsigned exponent) const
{
    if (rows_ != cols_)
        throw DomainError(DomainErrorKind::bad_argument, "power of a non-square matrix");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (exponent > 0) {
        if (exponent & 1U)
            result = result * base;
        exponent >>= 1U;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

IntMatrix evaluate(const IntPolynomial& p, const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw DomainError(DomainErrorKind::bad_argument, "polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    const auto& c = p.coefficients();
    if (c.empty())
        return IntMatrix(n, n);
    IntMatrix acc = IntMatrix::identity(n) * c.back();
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i)
            acc(i, i) += *it;
    }
    return acc;
}

} // namespace cage_spectra
