#include "djp/homology.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace djp {

const char* tri_name(Tri t) {
    switch (t) {
        case Tri::False: return "false";
        case Tri::True: return "true";
        case Tri::Undetermined: return "undetermined";
    }
    return "?";
}

namespace {

struct WeightBasis {
    Matrix change;          // columns: weight bases, grouped by weight
    Matrix change_inv;
    std::vector<int> col_weight;
};

WeightBasis weight_basis(const FdModule& m) {
    WeightBasis wb;
    wb.change = Matrix(m.dim, m.dim);
    int c = 0;
    for (const auto& [w, sp] : weight_decomposition(m).spaces)
        for (const auto& v : sp.basis) {
            wb.change.set_col(c, v);
            wb.col_weight.push_back(w);
            ++c;
        }
    wb.change_inv = inverse(wb.change);
    return wb;
}

} // namespace

HomSpace hom_space(const FdModule& source, const FdModule& target) {
    HomSpace hs;
    hs.source_dim = source.dim;
    hs.target_dim = target.dim;
    if (source.dim == 0 || target.dim == 0) return hs;

    WeightBasis S = weight_basis(source), T = weight_basis(target);
    std::array<Matrix, 6> AS, AT;
    for (size_t t = 0; t < 6; ++t) {
        AS[t] = S.change_inv * (source.act(action_generators[t]) * S.change);
        AT[t] = T.change_inv * (target.act(action_generators[t]) * T.change);
    }

    // unknowns: entries of H' on weight-matched positions
    Matrix unk_id(target.dim, source.dim);
    std::vector<std::pair<int, int>> unknowns;
    for (int a = 0; a < target.dim; ++a)
        for (int b = 0; b < source.dim; ++b) {
            if (T.col_weight[a] == S.col_weight[b]) {
                unk_id.at(a, b) = Rational(int(unknowns.size()) + 1);
                unknowns.push_back({a, b});
            } else {
                unk_id.at(a, b) = Rational(-1);
            }
        }
    auto uid = [&](int a, int b) -> int {
        Rational r = unk_id.at(a, b);
        return r.sign() < 0 ? -1 : int(r.num().get_si()) - 1;
    };

    std::vector<Vec> rows;
    for (size_t t = 0; t < 6; ++t) {
        for (int a = 0; a < target.dim; ++a)
            for (int b = 0; b < source.dim; ++b) {
                Vec row(unknowns.size());
                bool nonzero = false;
                for (int k = 0; k < target.dim; ++k) {
                    if (AT[t].at(a, k).is_zero()) continue;
                    int id = uid(k, b);
                    if (id >= 0) {
                        row[id] += AT[t].at(a, k);
                        nonzero = true;
                    }
                }
                for (int k = 0; k < source.dim; ++k) {
                    if (AS[t].at(k, b).is_zero()) continue;
                    int id = uid(a, k);
                    if (id >= 0) {
                        row[id] -= AS[t].at(k, b);
                        nonzero = true;
                    }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
    }

    Matrix sys(int(rows.size()), int(unknowns.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < unknowns.size(); ++j) sys.at(int(i), int(j)) = rows[i][j];
    Subspace ker = kernel(sys);

    for (const auto& sol : ker.basis) {
        Matrix hp(target.dim, source.dim);
        for (size_t id = 0; id < unknowns.size(); ++id)
            hp.at(unknowns[id].first, unknowns[id].second) = sol[id];
        hs.basis.push_back(T.change * (hp * S.change_inv));
    }
    return hs;
}

namespace {

bool invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix combine(const std::vector<Matrix>& basis, const std::vector<Rational>& c) {
    Matrix m(basis[0].rows(), basis[0].cols());
    for (size_t i = 0; i < basis.size(); ++i) m += basis[i].scaled(c[i]);
    return m;
}

} // namespace

Tri is_isomorphic(const FdModule& a, const FdModule& b) {
    if (a.dim != b.dim) return Tri::False;
    if (a.dim == 0) return Tri::True;
    HomSpace hom = hom_space(a, b);
    if (hom.dim() == 0) return Tri::False;

    // joint image and joint kernel bounds rule out invertible combinations
    Matrix horiz(a.dim, a.dim * hom.dim());
    Matrix vert(a.dim * hom.dim(), a.dim);
    for (int k = 0; k < hom.dim(); ++k)
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) {
                horiz.at(i, k * a.dim + j) = hom.basis[k].at(i, j);
                vert.at(k * a.dim + i, j) = hom.basis[k].at(i, j);
            }
    if (rank(horiz) < a.dim) return Tri::False;
    if (rank(vert) < a.dim) return Tri::False;

    const int k = hom.dim();
    long lattice_size = 1;
    for (int i = 0; i < k && lattice_size <= 4000; ++i) lattice_size *= 5;
    if (lattice_size <= 4000) {
        std::vector<Rational> c(k, Rational(-2));
        std::vector<int> ticks(k, 0);
        while (true) {
            bool all_zero = true;
            for (const auto& x : c) all_zero = all_zero && x.is_zero();
            if (!all_zero && invertible(combine(hom.basis, c))) return Tri::True;
            int p = 0;
            while (p < k && ticks[p] == 4) {
                ticks[p] = 0;
                c[p] = Rational(-2);
                ++p;
            }
            if (p == k) break;
            ++ticks[p];
            c[p] += Rational(1);
        }
    }

    std::mt19937 rng(0xd1000000u ^ unsigned(a.dim) ^ (unsigned(k) << 8));
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 32; ++trial) {
        std::vector<Rational> c(k);
        for (auto& x : c) x = Rational(coef(rng));
        if (invertible(combine(hom.basis, c))) return Tri::True;
    }
    return Tri::Undetermined;
}

SubmoduleResult socle(const FdModule& m) {
    if (m.dim == 0) {
        SubmoduleResult r;
        r.inclusion = Matrix(0, 0);
        return r;
    }
    int hw = hw_data(m).hw;
    std::vector<Vec> vectors;
    for (int k = 0; k <= hw; ++k) {
        HomSpace hom = hom_space(build_simple(k), m);
        for (const auto& h : hom.basis)
            for (int c = 0; c < h.cols(); ++c) vectors.push_back(h.col(c));
    }
    SubmoduleResult r = submodule_generated(m, vectors);
    r.module.provenance = "socle(" + m.provenance + ")";
    return r;
}

std::vector<int> composition_factors(const FdModule& m) {
    std::vector<int> factors;
    FdModule cur = m;
    int guard = m.dim + 1;
    while (cur.dim > 0 && guard-- > 0) {
        SubmoduleResult soc = socle(cur);
        const FdModule& s = soc.module;
        if (!s.g.is_identity() || !s.x.is_zero() || !s.u.is_zero())
            throw std::logic_error("socle layer is not a sum of simple modules");
        std::map<int, int> wdim;
        for (const auto& [w, sp] : weight_decomposition(s).spaces) wdim[w] = sp.dim();
        int counted = 0;
        for (auto it = wdim.rbegin(); it != wdim.rend(); ++it) {
            int n = it->first;
            if (n < 0) break;
            int mult = it->second - (wdim.count(n + 2) ? wdim[n + 2] : 0);
            for (int i = 0; i < mult; ++i) factors.push_back(n);
            counted += mult * (n + 1);
        }
        if (counted != s.dim) throw std::logic_error("socle layer is not a sum of simple modules");
        Subspace span;
        span.ambient = cur.dim;
        for (int c = 0; c < s.dim; ++c) span.basis.push_back(soc.inclusion.col(c));
        cur = quotient(cur, span).module;
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

Tri is_indecomposable(const FdModule& m) {
    if (m.dim == 0) return Tri::False;
    HomSpace end = hom_space(m, m);
    const int k = end.dim();
    if (k == 1) return Tri::True;
    Subspace rad = algebra_radical(end.basis);
    if (k - rad.dim() == 1) return Tri::True;

    // look for a splitting: generalized eigenspaces of an endomorphism are
    // submodules, and if they exhaust the module it decomposes
    std::vector<Matrix> candidates = end.basis;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k && candidates.size() < 40; ++j)
            candidates.push_back(end.basis[i] + end.basis[j]);
    for (const auto& h : candidates) {
        Rational bound(0);
        for (int i = 0; i < m.dim; ++i) {
            Rational s(0);
            for (int j = 0; j < m.dim; ++j) {
                Rational a = h.at(i, j);
                s += a.sign() < 0 ? -a : a;
            }
            if (s > bound) bound = s;
        }
        long b = mpz_class(bound.num() / bound.den()).get_si() + 1;
        int total = 0, pieces = 0;
        for (long lam = -b; lam <= b; ++lam) {
            Subspace sp = generalized_eigenspace(h, Rational(lam));
            if (sp.dim() == 0) continue;
            total += sp.dim();
            ++pieces;
        }
        if (total == m.dim && pieces >= 2) return Tri::False;
    }
    return Tri::Undetermined;
}

ExtResult ext1(const FdModule& quot, const FdModule& sub) {
    if (quot.partial_xy || sub.partial_xy)
        throw std::invalid_argument("ext1: module has partial x,y actions");
    ExtResult res;
    res.quot = quot;
    res.sub = sub;
    const int ds = sub.dim, dq = quot.dim;
    const int cell = ds * dq;
    const int nunk = 6 * cell;
    auto uid = [&](size_t t, int r, int c) { return int(t) * cell + r * dq + c; };

    const auto& rels = defining_relations();
    auto tindex = [&](Gen g) {
        for (size_t t = 0; t < 6; ++t)
            if (action_generators[t] == g) return t;
        throw std::logic_error("ext1: unexpected generator");
    };

    Matrix sys(int(rels.size()) * cell, nunk);
    int row0 = 0;
    for (const auto& rel : rels) {
        for (const auto& [coef, w] : rel.terms) {
            if (w.empty()) continue;  // constants have zero off-diagonal block
            if (w.size() == 1) {
                size_t t = tindex(w[0]);
                for (int r = 0; r < ds; ++r)
                    for (int c = 0; c < dq; ++c)
                        sys.at(row0 + r * dq + c, uid(t, r, c)) += coef;
                continue;
            }
            if (w.size() != 2) throw std::logic_error("ext1: relation word too long");
            size_t t1 = tindex(w[0]), t2 = tindex(w[1]);
            const Matrix& a = sub.act(w[0]);
            for (int r = 0; r < ds; ++r)
                for (int p = 0; p < ds; ++p) {
                    if (a.at(r, p).is_zero()) continue;
                    for (int c = 0; c < dq; ++c)
                        sys.at(row0 + r * dq + c, uid(t2, p, c)) += coef * a.at(r, p);
                }
            const Matrix& b = quot.act(w[1]);
            for (int p = 0; p < dq; ++p)
                for (int c = 0; c < dq; ++c) {
                    if (b.at(p, c).is_zero()) continue;
                    for (int r = 0; r < ds; ++r)
                        sys.at(row0 + r * dq + c, uid(t1, r, p)) += coef * b.at(p, c);
                }
        }
        row0 += cell;
    }

    Subspace sols = kernel(sys);

    // coboundaries phi_h(t) = sub.act(t) h - h quot.act(t)
    RowReducer cob(nunk);
    for (int r0 = 0; r0 < ds; ++r0)
        for (int c0 = 0; c0 < dq; ++c0) {
            Vec v(nunk);
            for (size_t t = 0; t < 6; ++t) {
                const Matrix& a = sub.act(action_generators[t]);
                const Matrix& b = quot.act(action_generators[t]);
                for (int r = 0; r < ds; ++r)
                    if (!a.at(r, r0).is_zero()) v[uid(t, r, c0)] += a.at(r, r0);
                for (int c = 0; c < dq; ++c)
                    if (!b.at(c0, c).is_zero()) v[uid(t, r0, c)] -= b.at(c0, c);
            }
            cob.add(v);
        }
    const int cob_rank = cob.rank();

    for (const auto& sol : sols.basis) {
        if (!cob.add(sol)) continue;
        std::array<Matrix, 6> phi;
        for (size_t t = 0; t < 6; ++t) {
            phi[t] = Matrix(ds, dq);
            for (int r = 0; r < ds; ++r)
                for (int c = 0; c < dq; ++c) phi[t].at(r, c) = sol[uid(t, r, c)];
        }
        res.cocycles.push_back(std::move(phi));
    }
    res.dimension = sols.dim() - cob_rank;
    if (res.dimension != int(res.cocycles.size()))
        throw std::logic_error("ext1: representative count mismatch");
    return res;
}

FdModule build_extension(const ExtResult& e, const std::vector<Rational>& coeffs) {
    if (coeffs.size() != e.cocycles.size())
        throw std::invalid_argument("build_extension: coefficient count mismatch");
    const int ds = e.sub.dim, dq = e.quot.dim;
    FdModule m;
    m.dim = ds + dq;
    for (size_t t = 0; t < 6; ++t) {
        Matrix phi(ds, dq);
        for (size_t i = 0; i < coeffs.size(); ++i) phi += e.cocycles[i][t].scaled(coeffs[i]);
        Matrix a(m.dim, m.dim);
        Gen g = action_generators[t];
        for (int i = 0; i < ds; ++i)
            for (int j = 0; j < ds; ++j) a.at(i, j) = e.sub.act(g).at(i, j);
        for (int i = 0; i < dq; ++i)
            for (int j = 0; j < dq; ++j) a.at(ds + i, ds + j) = e.quot.act(g).at(i, j);
        for (int i = 0; i < ds; ++i)
            for (int j = 0; j < dq; ++j) a.at(i, ds + j) = phi.at(i, j);
        m.act(g) = a;
    }
    m.labels = e.sub.labels;
    for (const auto& l : e.quot.labels) m.labels.push_back(l + "'");
    std::ostringstream prov;
    prov << "ext(sub=" << e.sub.provenance << ",quot=" << e.quot.provenance << ",class=[";
    for (size_t i = 0; i < coeffs.size(); ++i) prov << (i ? "," : "") << coeffs[i];
    prov << "])";
    m.provenance = prov.str();
    return m;
}

} // namespace djp
