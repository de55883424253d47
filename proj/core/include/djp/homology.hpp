#pragma once

#include "djp/modules.hpp"

#include <array>

namespace djp {

inline constexpr std::array<Gen, 6> action_generators{Gen::X,  Gen::Y, Gen::G,
                                                      Gen::Xi, Gen::U, Gen::V};

struct HomSpace {
    int source_dim = 0, target_dim = 0;
    std::vector<Matrix> basis;  // target_dim x source_dim intertwiners
    int dim() const { return int(basis.size()); }
};

// Solves target.act(t) H = H source.act(t) for all six generators. Module
// maps preserve generalized xi-eigenspaces, so the system is solved on
// weight-compatible blocks; both modules must be suitably graded.
HomSpace hom_space(const FdModule& source, const FdModule& target);

enum class Tri { False, True, Undetermined };
const char* tri_name(Tri t);

// definite False when no linear combination of a Hom basis can be invertible
// (dimension mismatch, joint image too small, or joint kernel nonzero);
// otherwise a bounded deterministic search for an invertible combination
Tri is_isomorphic(const FdModule& a, const FdModule& b);

// sum of the images of hom_space(L(k), m) over k up to the highest weight
SubmoduleResult socle(const FdModule& m);

// simple factors along the socle filtration, as a sorted multiset of weights
std::vector<int> composition_factors(const FdModule& m);

// True if End(m) modulo its radical is 1-dimensional; False if a splitting
// into generalized eigenspaces of an endomorphism is found
Tri is_indecomposable(const FdModule& m);

struct ExtResult {
    FdModule quot, sub;
    int dimension = 0;
    // cocycle representatives phi, indexed like action_generators; each
    // phi[t] is sub.dim x quot.dim; independent modulo coboundaries
    std::vector<std::array<Matrix, 6>> cocycles;
};

// Ext^1(quot, sub): kernel of the full linearization of the 15 relations on
// generator images, modulo coboundaries h -> (sub.act(t) h - h quot.act(t)).
ExtResult ext1(const FdModule& quot, const FdModule& sub);

// middle term of the extension with class sum(coeffs[i] * cocycles[i]);
// sub sits as the submodule on the leading coordinates
FdModule build_extension(const ExtResult& e, const std::vector<Rational>& coeffs);

} // namespace djp
