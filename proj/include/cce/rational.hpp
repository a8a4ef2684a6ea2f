#ifndef CCE_RATIONAL_HPP
#define CCE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cce {

using Rational = mpq_class;

/// Always emits "p/q", including "n/1" for integers.
inline std::string to_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    try {
        Rational r;
        if (slash == std::string::npos) {
            r = Rational(mpz_class(s));
        } else {
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            if (den == 0)
                throw std::invalid_argument("zero denominator");
            r = Rational(num, den);
        }
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

inline std::string to_display(const Rational& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return to_string(r);
}

/// Dense square matrix with exact entries.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
    Matrix(std::size_t rows, std::size_t cols) : n_(rows), m_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix I(n);
        for (std::size_t i = 0; i < n; ++i)
            I(i, i) = 1;
        return I;
    }

    std::size_t rows() const { return n_; }
    std::size_t cols() const { return m_ ? m_ : n_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols() + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols() + j]; }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (x != 0)
                return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o)
    {
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const Rational& s)
    {
        for (auto& x : a_)
            x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        Matrix c(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    if (b(k, j) != 0)
                        c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows() == b.rows() && a.cols() == b.cols() && a.a_ == b.a_;
    }

    Matrix transpose() const
    {
        Matrix t(cols(), rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Rational trace() const
    {
        Rational t = 0;
        for (std::size_t i = 0; i < rows(); ++i)
            t += (*this)(i, i);
        return t;
    }

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<Rational> a_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Matrix unit e_{ij} of size n.
inline Matrix unit(std::size_t n, std::size_t i, std::size_t j)
{
    Matrix m(n);
    m(i, j) = 1;
    return m;
}

/// Rank by plain Gaussian elimination over Q (destroys a copy).
inline std::size_t rank(Matrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0)
                continue;
            Rational f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Gauss-Jordan inverse; throws std::domain_error on a singular input.
inline Matrix inverse(Matrix m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw std::invalid_argument("inverse of a non-square matrix");
    Matrix inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0)
            ++piv;
        if (piv == n)
            throw std::domain_error("singular matrix");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        Rational p = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= p;
            inv(c, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0)
                continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

inline Rational determinant(Matrix m)
{
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0)
                continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

} // namespace cce

#endif
