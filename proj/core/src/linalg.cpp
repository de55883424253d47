#include "djp/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace djp {
namespace {

using ZRow = std::vector<mpz_class>;

ZRow to_int_row(const Vec& v) {
    mpz_class l(1);
    for (const auto& x : v)
        if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    ZRow r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r[i] = v[i].num() * (l / v[i].den());
    return r;
}

// divide by the gcd of the entries and make the first nonzero entry positive
void normalize_content(ZRow& r) {
    mpz_class g(0);
    for (const auto& x : r)
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;
    int lead = -1;
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) { lead = int(i); break; }
    if (r[lead] < 0) g = -g;
    if (g != 1)
        for (auto& x : r)
            if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// r <- piv*r - f*base, fraction-free cross-multiplication step.
// f and piv are taken by value: callers pass entries of r, which the loop
// overwrites, so reference parameters would alias the mutating row.
void eliminate(ZRow& r, const mpz_class f, const ZRow& base, const mpz_class piv) {
    for (size_t j = 0; j < r.size(); ++j) {
        r[j] *= piv;
        if (base[j] != 0) r[j] -= f * base[j];
    }
}

struct Echelon {
    std::vector<ZRow> rows;      // nonzero echelon rows, content-normalized
    std::vector<int> pivots;     // pivot column of rows[k], increasing
    int cols = 0;
};

// Forward elimination with pivoting restricted to the first `pivot_cols`
// columns (trailing columns ride along, e.g. augmented right-hand sides).
Echelon echelonize(std::vector<ZRow> work, int cols, int pivot_cols) {
    Echelon e;
    e.cols = cols;
    size_t r = 0;
    for (int c = 0; c < pivot_cols && r < work.size(); ++c) {
        size_t best = work.size();
        for (size_t i = r; i < work.size(); ++i) {
            if (work[i][c] == 0) continue;
            if (best == work.size() ||
                mpz_cmpabs(work[i][c].get_mpz_t(), work[best][c].get_mpz_t()) < 0)
                best = i;
        }
        if (best == work.size()) continue;
        std::swap(work[r], work[best]);
        const mpz_class piv = work[r][c];
        for (size_t i = r + 1; i < work.size(); ++i) {
            if (work[i][c] == 0) continue;
            eliminate(work[i], work[i][c], work[r], piv);
            normalize_content(work[i]);
        }
        e.pivots.push_back(c);
        ++r;
    }
    work.resize(r);
    e.rows = std::move(work);
    return e;
}

std::vector<ZRow> matrix_rows(const Matrix& a) {
    std::vector<ZRow> rows;
    rows.reserve(a.rows());
    for (int i = 0; i < a.rows(); ++i) rows.push_back(to_int_row(a.row(i)));
    return rows;
}

// back-substitution over the echelon rows; assignments for free variables
// are taken from `x` on entry
void back_substitute(const Echelon& e, int n, Vec& x) {
    for (int k = int(e.pivots.size()) - 1; k >= 0; --k) {
        const ZRow& row = e.rows[k];
        int p = e.pivots[k];
        Rational s(0);
        for (int j = p + 1; j < n; ++j)
            if (row[j] != 0) s -= Rational(row[j]) * x[j];
        x[p] = s / Rational(row[p]);
    }
}

} // namespace

int rank(const Matrix& a) {
    return int(echelonize(matrix_rows(a), a.cols(), a.cols()).pivots.size());
}

Subspace kernel(const Matrix& a) {
    int n = a.cols();
    Echelon e = echelonize(matrix_rows(a), n, n);
    std::vector<bool> is_pivot(n, false);
    for (int p : e.pivots) is_pivot[p] = true;
    Subspace ker;
    ker.ambient = n;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec x(n);
        x[f] = Rational(1);
        back_substitute(e, n, x);
        ker.basis.push_back(std::move(x));
    }
    return ker;
}

namespace {

// echelon of [a | rhs-columns] with pivoting confined to a's columns
Echelon echelon_augmented(const Matrix& a, const Matrix& rhs) {
    int n = a.cols(), m = rhs.cols();
    std::vector<ZRow> rows;
    rows.reserve(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        Vec v = a.row(i);
        Vec r = rhs.row(i);
        v.insert(v.end(), r.begin(), r.end());
        rows.push_back(to_int_row(v));
    }
    Echelon e = echelonize(std::move(rows), n + m, n);
    return e;
}

Vec solve_one(const Echelon& e, int n, int rhs_col) {
    Vec x(n);
    for (int k = int(e.pivots.size()) - 1; k >= 0; --k) {
        const ZRow& row = e.rows[k];
        int p = e.pivots[k];
        Rational s(row[n + rhs_col]);
        for (int j = p + 1; j < n; ++j)
            if (row[j] != 0) s -= Rational(row[j]) * x[j];
        x[p] = s / Rational(row[p]);
    }
    return x;
}

} // namespace

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    int n = a.cols();
    std::vector<ZRow> rows;
    for (int i = 0; i < a.rows(); ++i) {
        Vec v = a.row(i);
        v.push_back(b[i]);
        rows.push_back(to_int_row(v));
    }
    // keep every row during elimination so inconsistent residues are visible
    Echelon e = echelonize(rows, n + 1, n);
    // rows eliminated to zero in the pivot columns may still carry rhs residue:
    // echelonize drops fully-zero rows only, so replay reduction of each input
    // row against the echelon and check the residue
    for (const auto& zr : rows) {
        ZRow r = zr;
        for (size_t k = 0; k < e.pivots.size(); ++k) {
            int p = e.pivots[k];
            if (r[p] != 0) eliminate(r, r[p], e.rows[k], e.rows[k][p]);
        }
        bool azero = true, rzero = true;
        for (int j = 0; j < n; ++j)
            if (r[j] != 0) { azero = false; break; }
        if (r[n] != 0) rzero = false;
        if (azero && !rzero) return std::nullopt;
    }
    return solve_one(e, n, 0);
}

Matrix solve_columns(const Matrix& a, const Matrix& rhs) {
    if (a.rows() != rhs.rows()) throw std::invalid_argument("solve_columns: size mismatch");
    Echelon e = echelon_augmented(a, rhs);
    int n = a.cols();
    // consistency check: reduce each augmented input row to echelon residue
    for (int i = 0; i < a.rows(); ++i) {
        Vec v = a.row(i);
        Vec rr = rhs.row(i);
        v.insert(v.end(), rr.begin(), rr.end());
        ZRow r = to_int_row(v);
        for (size_t k = 0; k < e.pivots.size(); ++k) {
            int p = e.pivots[k];
            if (r[p] != 0) eliminate(r, r[p], e.rows[k], e.rows[k][p]);
        }
        bool azero = true;
        for (int j = 0; j < n; ++j)
            if (r[j] != 0) { azero = false; break; }
        if (azero)
            for (int j = n; j < e.cols; ++j)
                if (r[j] != 0) throw std::invalid_argument("solve_columns: inconsistent system");
    }
    Matrix x(n, rhs.cols());
    for (int c = 0; c < rhs.cols(); ++c) x.set_col(c, solve_one(e, n, c));
    return x;
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::domain_error("not invertible");
    if (rank(a) != a.rows()) throw std::domain_error("not invertible");
    return solve_columns(a, Matrix::identity(a.rows()));
}

Subspace generalized_eigenspace(const Matrix& a, const Rational& lambda) {
    int n = a.rows();
    Matrix b = a - Matrix::identity(n).scaled(lambda);
    Subspace k = kernel(b);
    if (k.dim() == 0) return k;
    Matrix p = b;
    for (int step = 2; step <= n; ++step) {
        p = p * b;
        Subspace k2 = kernel(p);
        if (k2.dim() == k.dim()) break;
        k = std::move(k2);
    }
    return k;
}

Subspace algebra_radical(const std::vector<Matrix>& basis) {
    int k = int(basis.size());
    Matrix gram(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            gram.at(i, j) = (basis[i] * basis[j]).trace();
            gram.at(j, i) = gram.at(i, j);
        }
    return kernel(gram);
}

bool RowReducer::add(const Vec& v) {
    ZRow r = reduce(v);
    bool zero = true;
    for (const auto& x : r)
        if (x != 0) { zero = false; break; }
    if (zero) return false;
    normalize_content(r);
    int p = 0;
    while (r[p] == 0) ++p;
    for (auto& row : rows_) {
        if (row.z[p] == 0) continue;
        eliminate(row.z, row.z[p], r, r[p]);
        normalize_content(row.z);
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                                [](const Row& a, int c) { return a.pivot < c; });
    rows_.insert(pos, Row{p, std::move(r)});
    return true;
}

bool RowReducer::contains(const Vec& v) const {
    ZRow r = reduce(v);
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

std::vector<Vec> RowReducer::basis() const {
    std::vector<Vec> b;
    b.reserve(rows_.size());
    for (const auto& row : rows_) {
        Vec v(amb_);
        for (int i = 0; i < amb_; ++i) v[i] = Rational(row.z[i]);
        b.push_back(std::move(v));
    }
    return b;
}

std::vector<mpz_class> RowReducer::reduce(const Vec& v) const {
    if (int(v.size()) != amb_) throw std::invalid_argument("row reducer: wrong dimension");
    ZRow r = to_int_row(v);
    for (const auto& row : rows_) {
        if (r[row.pivot] == 0) continue;
        eliminate(r, r[row.pivot], row.z, row.z[row.pivot]);
        normalize_content(r);
    }
    return r;
}

} // namespace djp
