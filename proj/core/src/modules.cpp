#include "djp/modules.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace djp {

const Matrix& FdModule::act(Gen t) const {
    switch (t) {
        case Gen::X: return x;
        case Gen::Y: return y;
        case Gen::G: return g;
        case Gen::Xi: return xi;
        case Gen::U: return u;
        case Gen::V: return v;
        default: throw std::invalid_argument("module: no stored action for g^{-1}");
    }
}

Matrix& FdModule::act(Gen t) {
    return const_cast<Matrix&>(static_cast<const FdModule*>(this)->act(t));
}

Matrix eval_relation(const Relation& rel, const FdModule& m) {
    Matrix acc(m.dim, m.dim);
    for (const auto& [c, w] : rel.terms) {
        Matrix p = Matrix::identity(m.dim);
        for (Gen t : w) p = p * m.act(t);
        acc += p.scaled(c);
    }
    return acc;
}

namespace {

bool word_touches_xy(const Relation& rel) {
    for (const auto& [c, w] : rel.terms)
        for (Gen t : w)
            if (t == Gen::X || t == Gen::Y) return true;
    return false;
}

bool nilpotent(const Matrix& a, int dim) {
    Matrix p = a;
    for (int k = 0; k < dim; ++k) {
        if (p.is_zero()) return true;
        p = p * a;
    }
    return p.is_zero();
}

} // namespace

CheckReport verify_module(const FdModule& m) {
    CheckReport rep;
    for (const auto& rel : defining_relations()) {
        Matrix r = eval_relation(rel, m);
        if (!m.partial_xy || !word_touches_xy(rel)) {
            rep.add(rel.name + ": " + rel.display, r.is_zero());
            continue;
        }
        // truncated window: two generator applications stay inside the window
        // only from columns of degree <= depth-2
        bool ok = true;
        for (int j = 0; j < m.dim && ok; ++j) {
            if (m.window_degree.at(j) > m.depth - 2) continue;
            for (int i = 0; i < m.dim; ++i)
                if (!r.at(i, j).is_zero()) { ok = false; break; }
        }
        rep.add(rel.name + ": " + rel.display + " (interior)", ok);
    }
    rep.add("g invertible", rank(m.g) == m.dim);
    rep.add("g - 1 nilpotent", nilpotent(m.g - Matrix::identity(m.dim), m.dim));
    rep.add("x nilpotent", nilpotent(m.x, m.dim));
    rep.add("u nilpotent", nilpotent(m.u, m.dim));
    return rep;
}

// ---- constructors ----------------------------------------------------------

FdModule build_simple(int n) {
    if (n < 0) throw std::invalid_argument("build_simple: n must be >= 0");
    FdModule m;
    m.dim = n + 1;
    m.x = Matrix(m.dim, m.dim);
    m.u = Matrix(m.dim, m.dim);
    m.g = Matrix::identity(m.dim);
    m.y = Matrix(m.dim, m.dim);
    m.xi = Matrix(m.dim, m.dim);
    m.v = Matrix(m.dim, m.dim);
    for (int i = 0; i <= n; ++i) {
        m.xi.at(i, i) = Rational(n - 2 * i);
        if (i < n) m.y.at(i + 1, i) = Rational(1);
        if (i > 0) m.v.at(i - 1, i) = Rational(long(i) * (n - i + 1), 2);
        m.labels.push_back("z(" + std::to_string(i) + ")");
    }
    m.provenance = "L(" + std::to_string(n) + ")";
    return m;
}

Sl2Triple sl2_irrep(int n) {
    int d = n + 1;
    Sl2Triple t{Matrix(d, d), Matrix(d, d), Matrix(d, d)};
    for (int i = 0; i <= n; ++i) {
        t.h.at(i, i) = Rational(n - 2 * i);
        if (i < n) t.f.at(i + 1, i) = Rational(1);
        if (i > 0) t.e.at(i - 1, i) = Rational(long(i) * (n - i + 1));
    }
    return t;
}

FdModule pullback_sl2(const Matrix& e, const Matrix& f, const Matrix& h) {
    int d = e.rows();
    if (e.cols() != d || f.rows() != d || f.cols() != d || h.rows() != d || h.cols() != d)
        throw std::invalid_argument("pullback_sl2: matrices must be square of equal size");
    if (!(e * f - f * e == h) || !(h * e - e * h == e.scaled(Rational(2))) ||
        !(h * f - f * h == f.scaled(Rational(-2))))
        throw std::invalid_argument("pullback_sl2: not an sl2 triple");
    FdModule m;
    m.dim = d;
    m.x = Matrix(d, d);
    m.u = Matrix(d, d);
    m.g = Matrix::identity(d);
    m.y = f;
    m.xi = h;
    m.v = e.scaled(Rational(1, 2));
    for (int i = 0; i < d; ++i) m.labels.push_back("e(" + std::to_string(i) + ")");
    m.provenance = "pullback_sl2(dim=" + std::to_string(d) + ")";
    return m;
}

namespace {

Rational power_of_two(int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= Rational(2);
    return r;
}

struct VermaTerm {
    int i, j;
    Rational c;
};

// action of a generator on y^i x^j z inside the Verma of highest weight n
std::vector<VermaTerm> verma_closed_action(Gen t, int n, int i, int j) {
    std::vector<VermaTerm> out;
    const Rational half(1, 2);
    switch (t) {
        case Gen::Y:
            out.push_back({i + 1, j, Rational(1)});
            break;
        case Gen::X:
            // x y^i = sum_k C(i,k) [1]^[k] / 2^k  y^{i-k} x^{k+1}
            for (int k = 0; k <= i; ++k) {
                Rational c = Rational::binom(i, k) * raising_factorial(Rational(1), k) /
                             power_of_two(k);
                out.push_back({i - k, j + k + 1, c});
            }
            break;
        case Gen::G:
            // g y^i = sum_k C(i,k) [2]^[k] / 2^k  y^{i-k} x^k g
            for (int k = 0; k <= i; ++k) {
                Rational c = Rational::binom(i, k) * raising_factorial(Rational(2), k) /
                             power_of_two(k);
                out.push_back({i - k, j + k, c});
            }
            break;
        case Gen::Xi:
            out.push_back({i, j, Rational(n - 2 * (i + j))});
            break;
        case Gen::U:
            for (int k = 1; k <= i - 1; ++k) {
                Rational c = Rational::binom(i, k + 1) * raising_factorial(Rational(2), k) /
                             power_of_two(k);
                out.push_back({i - 1 - k, j + k, -c});
            }
            break;
        case Gen::V:
            if (i >= 1)
                out.push_back({i - 1, j, Rational(i) * Rational(n - 2 * j - i + 1) * half});
            for (int k = 1; k <= i - 1; ++k) {
                Rational c = Rational::binom(i, k + 1) * raising_factorial(Rational(2), k) /
                             power_of_two(k + 1);
                out.push_back({i - 1 - k, j + k, Rational(n - 2 * (i + j) + 2) * c});
            }
            break;
        default:
            throw std::invalid_argument("verma action: unexpected generator");
    }
    return out;
}

} // namespace

FdModule build_T(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("build_T: n, m must be >= 0");
    const int p = n + 2 * m;  // highest weight of the covering Verma
    std::map<std::pair<int, int>, int> idx;
    std::vector<std::pair<int, int>> basis;
    for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= n + 2 * (m - j); ++i) {
            idx[{i, j}] = int(basis.size());
            basis.push_back({i, j});
        }
    FdModule md;
    md.dim = int(basis.size());
    for (Gen t : {Gen::X, Gen::Y, Gen::G, Gen::Xi, Gen::U, Gen::V}) md.act(t) = Matrix(md.dim, md.dim);
    for (int b = 0; b < md.dim; ++b) {
        auto [i, j] = basis[b];
        md.labels.push_back("z(" + std::to_string(i) + "," + std::to_string(j) + ")");
        for (Gen t : {Gen::X, Gen::Y, Gen::G, Gen::Xi, Gen::U, Gen::V})
            for (const auto& term : verma_closed_action(t, p, i, j)) {
                auto it = idx.find({term.i, term.j});
                if (it != idx.end()) md.act(t).at(it->second, b) += term.c;
            }
    }
    md.provenance = "T(" + std::to_string(n) + "," + std::to_string(m) + ")";
    return md;
}

FdModule build_S(int n, const Rational& gamma) {
    if (n < 0) throw std::invalid_argument("build_S: n must be >= 0");
    const int d = 2 * (n + 1);
    FdModule m;
    m.dim = d;
    for (Gen t : {Gen::X, Gen::Y, Gen::G, Gen::Xi, Gen::U, Gen::V}) m.act(t) = Matrix(d, d);
    auto s = [&](int i) { return i; };
    auto w = [&](int i) { return n + 1 + i; };
    for (int i = 0; i <= n; ++i) {
        m.labels.push_back("s(" + std::to_string(i) + ")");
    }
    for (int i = 0; i <= n; ++i) m.labels.push_back("w(" + std::to_string(i) + ")");
    for (int i = 0; i <= n; ++i) {
        const Rational ci(long(i) * (n - i + 1), 2);  // i(n-i+1)/2
        m.xi.at(s(i), s(i)) = Rational(n - 2 * i);
        m.xi.at(w(i), w(i)) = Rational(n - 2 * i);
        m.g.at(s(i), s(i)) = Rational(1);
        m.g.at(w(i), w(i)) = Rational(1);
        m.g.at(s(i), w(i)) = -Rational(n - 2 * i, 2) * gamma;
        if (i < n) {
            m.y.at(s(i + 1), s(i)) = Rational(1);
            m.y.at(w(i + 1), w(i)) = Rational(1);
            m.x.at(s(i + 1), w(i)) = gamma;
        }
        if (i > 0) {
            m.v.at(s(i - 1), s(i)) = ci;
            m.v.at(w(i - 1), w(i)) = ci;
            m.v.at(s(i - 1), w(i)) =
                -Rational(long(i) * (n - 2 * i + 2)) * Rational(n + 1 - i, 4) * gamma;
            m.u.at(s(i - 1), w(i)) = Rational(long(i) * (n + 1 - i), 2) * gamma;
        }
    }
    m.provenance = "S(" + std::to_string(n) + ",gamma=" + gamma.str() + ")";
    return m;
}

FdModule build_verma_trunc(int n, int depth) {
    if (depth < 0) throw std::invalid_argument("verma window: depth must be >= 0");
    std::map<std::pair<int, int>, int> idx;
    std::vector<std::pair<int, int>> basis;
    for (int d = 0; d <= depth; ++d)
        for (int j = 0; j <= d; ++j) {
            idx[{d - j, j}] = int(basis.size());
            basis.push_back({d - j, j});
        }
    FdModule md;
    md.dim = int(basis.size());
    md.partial_xy = true;
    md.depth = depth;
    for (Gen t : {Gen::X, Gen::Y, Gen::G, Gen::Xi, Gen::U, Gen::V}) md.act(t) = Matrix(md.dim, md.dim);
    for (int b = 0; b < md.dim; ++b) {
        auto [i, j] = basis[b];
        md.labels.push_back("z(" + std::to_string(i) + "," + std::to_string(j) + ")");
        md.window_degree.push_back(i + j);
        for (Gen t : {Gen::X, Gen::Y, Gen::G, Gen::Xi, Gen::U, Gen::V})
            for (const auto& term : verma_closed_action(t, n, i, j)) {
                auto it = idx.find({term.i, term.j});
                if (it != idx.end()) md.act(t).at(it->second, b) += term.c;
            }
    }
    md.provenance = "verma(n=" + std::to_string(n) + ",depth=" + std::to_string(depth) + ")";
    return md;
}

FdModule build_verma2_trunc(int n, const Rational& lambda, const Rational& mu, int depth) {
    if (depth < 0) throw std::invalid_argument("verma window: depth must be >= 0");
    // chain 0: powers applied to s, chain 1: powers applied to w
    std::map<std::pair<int, int>, int> pos;  // window position of (i,j)
    std::vector<std::pair<int, int>> cells;
    for (int d = 0; d <= depth; ++d)
        for (int j = 0; j <= d; ++j) {
            pos[{d - j, j}] = int(cells.size());
            cells.push_back({d - j, j});
        }
    const int half_dim = int(cells.size());
    const int dim = 2 * half_dim;
    auto index = [&](int chain, int i, int j) -> int {
        auto it = pos.find({i, j});
        if (it == pos.end()) return -1;
        return chain * half_dim + it->second;
    };

    FdModule md;
    md.dim = dim;
    md.partial_xy = true;
    md.depth = depth;
    for (Gen t : {Gen::X, Gen::Y, Gen::G, Gen::Xi, Gen::U, Gen::V}) md.act(t) = Matrix(dim, dim);
    for (int chain = 0; chain < 2; ++chain)
        for (auto [i, j] : cells) {
            std::string base = chain == 0 ? "s" : "w";
            md.labels.push_back(base + "(" + std::to_string(i) + "," + std::to_string(j) + ")");
            md.window_degree.push_back(i + j);
        }

    auto unit = [&](int chain, int i, int j) {
        Vec e(dim);
        int b = index(chain, i, j);
        if (b >= 0) e[b] = Rational(1);
        return e;
    };

    // exact recursion over the defining relations: g, xi, u, v never raise the
    // total degree, so their columns are exact inside the window; x, y raise it
    // by one and drop terms beyond the window
    for (int d = 0; d <= depth; ++d)
        for (int i = 0; i <= d; ++i) {
            int j = d - i;
            for (int chain = 0; chain < 2; ++chain) {
                int b = index(chain, i, j);
                Vec self = unit(chain, i, j);
                // y column: direct shift
                md.y.set_col(b, unit(chain, i + 1, j));
                if (d == 0) {
                    md.x.set_col(b, unit(chain, 0, 1));
                    Vec gc = self, xic = self;
                    for (auto& e : xic) e *= Rational(n);
                    if (chain == 1) {
                        vec_add_scaled(gc, lambda, unit(0, 0, 0));
                        vec_add_scaled(xic, mu, unit(0, 0, 0));
                    }
                    md.g.set_col(b, gc);
                    md.xi.set_col(b, xic);
                    // u, v act by zero on the inducing space
                    continue;
                }
                if (i == 0) {
                    int pb = index(chain, 0, j - 1);
                    Vec prev = unit(chain, 0, j - 1);
                    md.x.set_col(b, unit(chain, 0, j + 1));
                    // g x = x g
                    md.g.set_col(b, md.x.apply(md.g.col(pb)));
                    // xi x = x xi - 2x
                    Vec xic = md.x.apply(md.xi.col(pb));
                    vec_add_scaled(xic, Rational(-2), self);
                    md.xi.set_col(b, xic);
                    // u x = x u
                    md.u.set_col(b, md.x.apply(md.u.col(pb)));
                    // v x = x v + 1 - g + x u
                    Vec vc = md.x.apply(md.v.col(pb));
                    vec_add_scaled(vc, Rational(1), prev);
                    vec_add_scaled(vc, Rational(-1), md.g.col(pb));
                    vec_add_scaled(vc, Rational(1), md.x.apply(md.u.col(pb)));
                    md.v.set_col(b, vc);
                } else {
                    int pb = index(chain, i - 1, j);
                    Vec prev = unit(chain, i - 1, j);
                    // x y = y x + 1/2 x^2 reversed: x (y m) = y(x m) + 1/2 x(x m)
                    Vec xm = md.x.col(pb);
                    Vec xc = md.y.apply(xm);
                    vec_add_scaled(xc, Rational(1, 2), md.x.apply(xm));
                    md.x.set_col(b, xc);
                    // g y = y g + x g
                    Vec gm = md.g.col(pb);
                    Vec gc = md.y.apply(gm);
                    vec_add_scaled(gc, Rational(1), md.x.apply(gm));
                    md.g.set_col(b, gc);
                    // xi y = y xi - 2 y
                    Vec xic = md.y.apply(md.xi.col(pb));
                    vec_add_scaled(xic, Rational(-2), self);
                    md.xi.set_col(b, xic);
                    // u y = y u + 1 - g
                    Vec uc = md.y.apply(md.u.col(pb));
                    vec_add_scaled(uc, Rational(1), prev);
                    vec_add_scaled(uc, Rational(-1), gm);
                    md.u.set_col(b, uc);
                    // v y = y v + 1/2 g xi + y u
                    Vec vc = md.y.apply(md.v.col(pb));
                    vec_add_scaled(vc, Rational(1, 2), md.g.apply(md.xi.col(pb)));
                    vec_add_scaled(vc, Rational(1), md.y.apply(md.u.col(pb)));
                    md.v.set_col(b, vc);
                }
            }
        }
    std::ostringstream prov;
    prov << "verma2(n=" << n << ",lambda=" << lambda << ",mu=" << mu << ",depth=" << depth << ")";
    md.provenance = prov.str();
    return md;
}

// ---- structure -------------------------------------------------------------

WeightDecomposition weight_decomposition(const FdModule& m) {
    WeightDecomposition wd;
    if (m.dim == 0) return wd;
    // Gershgorin bound on integer eigenvalues of xi
    Rational bound(0);
    for (int i = 0; i < m.dim; ++i) {
        Rational s(0);
        for (int j = 0; j < m.dim; ++j) {
            Rational a = m.xi.at(i, j);
            s += a.sign() < 0 ? -a : a;
        }
        if (s > bound) bound = s;
    }
    long b = 0;
    mpz_class bz = bound.num() / bound.den();
    b = bz.get_si() + 1;
    int total = 0;
    for (long lam = -b; lam <= b; ++lam) {
        Subspace sp = generalized_eigenspace(m.xi, Rational(lam));
        if (sp.dim() == 0) continue;
        total += sp.dim();
        wd.spaces.emplace(int(lam), std::move(sp));
    }
    if (total != m.dim) throw std::domain_error("not suitably graded");
    return wd;
}

HwData hw_data(const FdModule& m) {
    if (m.dim == 0) throw std::invalid_argument("hw_data: zero module");
    WeightDecomposition wd = weight_decomposition(m);
    auto it = wd.spaces.rbegin();
    return HwData{it->first, it->second.dim()};
}

std::vector<FdModule> hw_series(const FdModule& m) {
    std::vector<FdModule> steps;
    FdModule cur = m;
    int guard = m.dim + 1;
    while (cur.dim > 0 && guard-- > 0) {
        WeightDecomposition wd = weight_decomposition(cur);
        const Subspace& top = wd.spaces.rbegin()->second;
        SubmoduleResult sub = submodule_generated(cur, top.basis);
        Subspace span;
        span.ambient = cur.dim;
        for (int c = 0; c < sub.module.dim; ++c) span.basis.push_back(sub.inclusion.col(c));
        steps.push_back(sub.module);
        cur = quotient(cur, span).module;
    }
    return steps;
}

FdModule dual(const FdModule& m) {
    if (m.partial_xy) throw std::invalid_argument("dual: module has partial x,y actions");
    Matrix gi = inverse(m.g);
    FdModule d;
    d.dim = m.dim;
    d.x = (-(gi * m.x)).transpose();
    d.y = (-(gi * m.y)).transpose();
    d.g = gi.transpose();
    d.xi = (-m.xi).transpose();
    d.u = (-m.u).transpose();
    d.v = (-m.v - (m.xi * m.u).scaled(Rational(1, 2))).transpose();
    for (const auto& l : m.labels) d.labels.push_back(l + "*");
    d.provenance = "dual(" + m.provenance + ")";
    return d;
}

FdModule tensor(const FdModule& a, const FdModule& b) {
    if (a.partial_xy || b.partial_xy)
        throw std::invalid_argument("tensor: module has partial x,y actions");
    FdModule t;
    t.dim = a.dim * b.dim;
    Matrix ia = Matrix::identity(a.dim), ib = Matrix::identity(b.dim);
    t.x = Matrix::kron(a.x, ib) + Matrix::kron(a.g, b.x);
    t.y = Matrix::kron(a.y, ib) + Matrix::kron(a.g, b.y);
    t.g = Matrix::kron(a.g, b.g);
    t.xi = Matrix::kron(a.xi, ib) + Matrix::kron(ia, b.xi);
    t.u = Matrix::kron(a.u, ib) + Matrix::kron(ia, b.u);
    t.v = Matrix::kron(a.v, ib) + Matrix::kron(ia, b.v) -
          Matrix::kron(a.xi, b.u).scaled(Rational(1, 2));
    for (const auto& la : a.labels)
        for (const auto& lb : b.labels) t.labels.push_back(la + "⊗" + lb);
    t.provenance = "(" + a.provenance + ")⊗(" + b.provenance + ")";
    return t;
}

FdModule direct_sum(const FdModule& a, const FdModule& b) {
    if (a.partial_xy || b.partial_xy)
        throw std::invalid_argument("direct_sum: module has partial x,y actions");
    FdModule s;
    s.dim = a.dim + b.dim;
    for (Gen t : {Gen::X, Gen::Y, Gen::G, Gen::Xi, Gen::U, Gen::V})
        s.act(t) = Matrix::block_diag(a.act(t), b.act(t));
    s.labels = a.labels;
    s.labels.insert(s.labels.end(), b.labels.begin(), b.labels.end());
    s.provenance = "(" + a.provenance + ")(+)(" + b.provenance + ")";
    return s;
}

SubmoduleResult submodule_generated(const FdModule& m, const std::vector<Vec>& generators) {
    RowReducer span(m.dim);
    std::vector<Vec> basis;
    std::deque<Vec> pending;
    for (const auto& v : generators)
        if (span.add(v)) {
            basis.push_back(v);
            pending.push_back(v);
        }
    while (!pending.empty()) {
        Vec v = std::move(pending.front());
        pending.pop_front();
        for (Gen t : {Gen::X, Gen::Y, Gen::G, Gen::Xi, Gen::U, Gen::V}) {
            Vec w = m.act(t).apply(v);
            if (span.add(w)) {
                basis.push_back(w);
                pending.push_back(w);
            }
        }
    }
    int k = int(basis.size());
    Matrix incl(m.dim, k);
    for (int c = 0; c < k; ++c) incl.set_col(c, basis[c]);
    SubmoduleResult res;
    res.inclusion = incl;
    res.module.dim = k;
    for (Gen t : {Gen::X, Gen::Y, Gen::G, Gen::Xi, Gen::U, Gen::V})
        res.module.act(t) = k == 0 ? Matrix(0, 0) : solve_columns(incl, m.act(t) * incl);
    for (int c = 0; c < k; ++c) res.module.labels.push_back("b" + std::to_string(c));
    res.module.provenance = "sub(" + m.provenance + ")";
    res.module.partial_xy = m.partial_xy;
    res.module.depth = m.depth;
    if (m.partial_xy)
        for (int c = 0; c < k; ++c) {
            int deg = 0;  // a mixed vector is safe only up to its deepest support
            for (int r = 0; r < m.dim; ++r)
                if (!basis[c][r].is_zero()) deg = std::max(deg, m.window_degree[r]);
            res.module.window_degree.push_back(deg);
        }
    return res;
}

QuotientResult quotient(const FdModule& m, const Subspace& sub) {
    if (sub.ambient != m.dim) throw std::invalid_argument("quotient: ambient mismatch");
    RowReducer span(m.dim);
    for (const auto& v : sub.basis) span.add(v);
    for (const auto& v : sub.basis)
        for (Gen t : {Gen::X, Gen::Y, Gen::G, Gen::Xi, Gen::U, Gen::V})
            if (!span.contains(m.act(t).apply(v)))
                throw std::invalid_argument("quotient: subspace is not a submodule");
    std::vector<Vec> sb = span.basis();
    int k = int(sb.size());
    // pivot coordinates are spanned by the submodule; the complement survives
    std::vector<bool> is_pivot(m.dim, false);
    for (const auto& r : sb) {
        int p = 0;
        while (r[p].is_zero()) ++p;
        is_pivot[p] = true;
    }
    std::vector<int> keep;
    for (int i = 0; i < m.dim; ++i)
        if (!is_pivot[i]) keep.push_back(i);
    Matrix basis(m.dim, m.dim);  // [ sub basis | complement unit vectors ]
    for (int c = 0; c < k; ++c) basis.set_col(c, sb[c]);
    for (size_t c = 0; c < keep.size(); ++c) basis.at(keep[c], k + int(c)) = Rational(1);
    Matrix binv = inverse(basis);
    Matrix proj(int(keep.size()), m.dim);
    for (size_t r = 0; r < keep.size(); ++r)
        for (int c = 0; c < m.dim; ++c) proj.at(int(r), c) = binv.at(k + int(r), c);
    QuotientResult res;
    res.projection = proj;
    res.module.dim = int(keep.size());
    Matrix sect(m.dim, int(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c) sect.at(keep[c], int(c)) = Rational(1);
    for (Gen t : {Gen::X, Gen::Y, Gen::G, Gen::Xi, Gen::U, Gen::V})
        res.module.act(t) = proj * (m.act(t) * sect);
    for (int i : keep) res.module.labels.push_back(m.labels.empty() ? "" : m.labels[i]);
    res.module.provenance = "quot(" + m.provenance + ")";
    res.module.partial_xy = m.partial_xy;
    res.module.depth = m.depth;
    if (m.partial_xy)
        for (int i : keep) res.module.window_degree.push_back(m.window_degree[i]);
    return res;
}

} // namespace djp
