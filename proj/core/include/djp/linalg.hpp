#pragma once

#include "djp/matrix.hpp"

#include <optional>

namespace djp {

int rank(const Matrix& a);

// basis of { v : a*v = 0 }
Subspace kernel(const Matrix& a);

// one solution of a*x = b, or nullopt if inconsistent
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// X with a*X = rhs, solved column by column; throws std::invalid_argument if
// any column is inconsistent
Matrix solve_columns(const Matrix& a, const Matrix& rhs);

// throws std::domain_error("not invertible") on singular input
Matrix inverse(const Matrix& a);

// kernel of (a - lambda)^k, with k grown until the dimension stabilizes
Subspace generalized_eigenspace(const Matrix& a, const Rational& lambda);

// Radical of the span of a multiplicatively closed family of matrices,
// via the trace form gram(i,j) = tr(b_i b_j); returned in coordinates
// relative to `basis` (ambient = basis.size()).
Subspace algebra_radical(const std::vector<Matrix>& basis);

// Incremental row-space tracker over Q. Rows are kept as content-normalized
// integer vectors in reduced echelon form, so membership tests are exact.
class RowReducer {
public:
    explicit RowReducer(int ambient) : amb_(ambient) {}

    int ambient() const { return amb_; }
    int rank() const { return int(rows_.size()); }

    bool add(const Vec& v);            // false if v was already in the span
    bool contains(const Vec& v) const;
    std::vector<Vec> basis() const;

private:
    struct Row {
        int pivot;
        std::vector<mpz_class> z;
    };
    std::vector<mpz_class> reduce(const Vec& v) const;

    int amb_;
    std::vector<Row> rows_;            // sorted by pivot column
};

} // namespace djp
