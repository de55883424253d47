#pragma once

#include "djp/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace djp {

using Vec = std::vector<Rational>;

Vec& vec_add_scaled(Vec& a, const Rational& c, const Vec& b);
bool vec_is_zero(const Vec& v);

// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }

    Rational& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Rational& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    Matrix transpose() const;
    Rational trace() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Rational& c) const;
    Matrix& operator+=(const Matrix& o);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    Vec apply(const Vec& v) const;     // matrix * column vector
    Vec row(int i) const;
    Vec col(int j) const;
    void set_col(int j, const Vec& v);

    // block-diagonal and Kronecker product (row-major index i*cols2+i2)
    static Matrix block_diag(const Matrix& a, const Matrix& b);
    static Matrix kron(const Matrix& a, const Matrix& b);

    std::string str() const;           // for diagnostics

private:
    int r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

// A subspace of Q^ambient given by a list of basis vectors.
struct Subspace {
    int ambient = 0;
    std::vector<Vec> basis;
    int dim() const { return int(basis.size()); }
};

} // namespace djp
