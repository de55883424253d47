#include "djp/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace djp {

Vec& vec_add_scaled(Vec& a, const Rational& c, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
    return a;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    r_ = int(rows.size());
    c_ = r_ ? int(rows.begin()->size()) : 0;
    a_.reserve(size_t(r_) * c_);
    for (const auto& row : rows) {
        if (int(row.size()) != c_) throw std::invalid_argument("matrix: ragged rows");
        for (const auto& x : row) a_.push_back(x);
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Rational Matrix::trace() const {
    if (r_ != c_) throw std::invalid_argument("matrix: trace of non-square");
    Rational t;
    for (int i = 0; i < r_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix: size mismatch in product");
    Matrix p(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                const Rational& b = o.at(k, j);
                if (!b.is_zero()) p.at(i, j) += a * b;
            }
        }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix: size mismatch in sum");
    Matrix s(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix: size mismatch in difference");
    Matrix s(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
    return s;
}

Matrix Matrix::operator-() const {
    Matrix s(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = -a_[i];
    return s;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix s(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] * c;
    return s;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix: size mismatch in sum");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Vec Matrix::apply(const Vec& v) const {
    if (int(v.size()) != c_) throw std::invalid_argument("matrix: size mismatch in apply");
    Vec w(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (!at(i, j).is_zero()) w[i] += at(i, j) * v[j];
    return w;
}

Vec Matrix::row(int i) const {
    Vec v(c_);
    for (int j = 0; j < c_; ++j) v[j] = at(i, j);
    return v;
}

Vec Matrix::col(int j) const {
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_col(int j, const Vec& v) {
    for (int i = 0; i < r_; ++i) at(i, j) = v[i];
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    if (!b.at(p, q).is_zero())
                        m.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
        }
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < r_; ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < c_; ++j) os << (j ? " " : "") << at(i, j);
        os << "]";
    }
    return os.str();
}

} // namespace djp
