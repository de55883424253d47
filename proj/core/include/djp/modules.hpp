#pragma once

#include "djp/linalg.hpp"
#include "djp/pbw.hpp"

#include <map>
#include <string>
#include <vector>

namespace djp {

// Finite-dimensional left module, given by the six generator actions
// (the action of g^{-1} is recovered by inversion when needed).
struct FdModule {
    int dim = 0;
    Matrix x, y, g, xi, u, v;
    std::vector<std::string> labels;
    std::string provenance;

    // Truncated Verma windows: x and y are only partial (image terms beyond
    // the window are dropped); the other four actions are exact.
    bool partial_xy = false;
    int depth = -1;
    std::vector<int> window_degree;

    const Matrix& act(Gen t) const;
    Matrix& act(Gen t);
};

// Evaluates a defining relation on the module's matrices (1 -> identity).
Matrix eval_relation(const Relation& rel, const FdModule& m);

// All 15 relations, nilpotency of g-1, x, u, and invertibility of g.
// On a truncated window, relations whose words involve x or y are checked on
// the columns of interior degree (window_degree <= depth-2) only.
CheckReport verify_module(const FdModule& m);

// ---- constructors ----------------------------------------------------------

// simple module L(n): x = u = 0, g = 1, sl2-type action of xi, y, v
FdModule build_simple(int n);

struct Sl2Triple {
    Matrix e, f, h;
};
Sl2Triple sl2_irrep(int n);

// restriction along the quotient map onto U(sl2): v = e/2, y = f, xi = h
FdModule pullback_sl2(const Matrix& e, const Matrix& f, const Matrix& h);

// uniserial quotient T(n,m) of the Verma of highest weight n+2m,
// dim = (m+1)(n+m+1), basis z(i,j) with j <= m, i <= n+2(m-j)
FdModule build_T(int n, int m);

// self-dual extension S_gamma(n) of L(n) by L(n), basis s(0..n), w(0..n)
FdModule build_S(int n, const Rational& gamma);

// Verma window over the 1-dim weight module (weight n), basis z(i,j) = y^i x^j z
// with i+j <= depth; g, xi, u, v exact, x, y truncated at the window
FdModule build_verma_trunc(int n, int depth);

// Verma window over the 2-dim indecomposable weight module:
// g s = s, g w = w + lambda s, xi s = n s, xi w = n w + mu s
FdModule build_verma2_trunc(int n, const Rational& lambda, const Rational& mu, int depth);

// ---- structure -------------------------------------------------------------

// generalized xi-eigenspaces; throws std::domain_error("not suitably graded")
// if the integer weight spaces do not exhaust the module
struct WeightDecomposition {
    std::map<int, Subspace> spaces;
};
WeightDecomposition weight_decomposition(const FdModule& m);

struct HwData {
    int hw;       // largest weight
    int hw_rank;  // dimension of that weight space
};
HwData hw_data(const FdModule& m);

// chain 0 = M_0 < M_1 < ... < M_r = M where M_k is the preimage of the
// submodule of M/M_{k-1} generated by its top weight space; returns the
// successive subquotients M_k/M_{k-1}
std::vector<FdModule> hw_series(const FdModule& m);

// graded dual: t acts by the transpose of the antipode image S(t)
FdModule dual(const FdModule& m);

// tensor product along the coproduct
FdModule tensor(const FdModule& a, const FdModule& b);

FdModule direct_sum(const FdModule& a, const FdModule& b);

struct SubmoduleResult {
    FdModule module;
    Matrix inclusion;  // parent.dim x sub.dim
};
SubmoduleResult submodule_generated(const FdModule& m, const std::vector<Vec>& generators);

struct QuotientResult {
    FdModule module;
    Matrix projection;  // quot.dim x parent.dim
};
// `sub` must be stable under all six actions; throws std::invalid_argument otherwise
QuotientResult quotient(const FdModule& m, const Subspace& sub);

} // namespace djp
