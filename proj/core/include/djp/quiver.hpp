#pragma once

#include "djp/homology.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace djp {

// Gabriel quiver on vertices 0..max_n; arrows (i,j) carry dim Ext^1(L(i),L(j)).
struct Quiver {
    int max_n = 0;
    std::map<std::pair<int, int>, int> arrows;  // nonzero multiplicities only
    int multiplicity(int i, int j) const;
};

// Cells with |i-j| <= 4 are computed outright; farther cells vanish because a
// nonsplit extension of simples forces weight gap 0 or +-2. workers >= 2 fans
// the cells out over that many threads.
Quiver gabriel_quiver(int max_n, int workers = 1);

// Variant table with an arrow loop forced at vertex 0 (the direct computation
// yields none there); used for the alternate classification run.
Quiver force_zero_loop(Quiver q);

std::string to_dot(const Quiver& q);

// Undirected multigraph on vertices 0..n-1; key (a,b) with a <= b, loops allowed.
struct Multigraph {
    int n = 0;
    std::map<std::pair<int, int>, int> edges;
    void add_edge(int a, int b, int mult = 1);
    int degree(int v) const;  // loops count twice
    int edge_count() const;   // with multiplicity
};

// Separated (bipartite) quiver on subset: arrow i->j becomes edge i -- j'.
// Vertex k is subset[k], vertex subset.size()+k is subset[k]'.
struct SeparatedQuiver {
    std::vector<int> subset;
    Multigraph graph;
    std::string vertex_label(int v) const;
};
SeparatedQuiver separated_quiver(const Quiver& q, const std::vector<int>& subset);

struct ComponentClassification {
    std::vector<int> vertices;
    std::string type;  // "A3", "D5", "E7", "affine A1", ... or "neither"
    bool dynkin = false;
    bool affine = false;
};

// Per connected component, match the underlying multigraph against the
// simply-laced Dynkin diagrams (A/D/E) and their affine extensions. Purely
// structural, so invariant under vertex relabeling.
std::vector<ComponentClassification> classify_graph(const Multigraph& g);

struct SubsetVerdict {
    std::vector<int> subset;
    std::vector<ComponentClassification> components;
    bool wild = false;  // some component is neither Dynkin nor affine
};
SubsetVerdict classify_subset(const Quiver& q, const std::vector<int>& subset);

// Representation-type report: if the separated quiver of the radical-square-zero
// quotient carried by a finite vertex subset has a component that is neither
// Dynkin nor affine, the algebra has wild representation type.
struct WildnessReport {
    int max_n = 0;
    Quiver table;               // computed Ext table
    int zero_loop_computed = 0; // computed multiplicity at (0,0)
    int zero_loop_forced = 1;   // value used by the forced variant
    SubsetVerdict witness;          // subset classified on the computed table
    SubsetVerdict forced_witness;   // subset {0,2,4} on the forced-loop table
    std::vector<SubsetVerdict> parity;  // even / odd vertex classes
    bool wild = false;
};
WildnessReport representation_type_report(int max_n, int workers = 1);

std::string report_json(const WildnessReport& r);

} // namespace djp
