// H-prime membership of quantum Pluecker coordinates, Pluecker sets,
// positroids, Grassmann necklaces, containment order, separating sets and
// polynormal sequence emission.
#pragma once

#include "qgr/postnikov.hpp"
#include "qgr/shapes.hpp"

#include <optional>
#include <set>
#include <vector>

namespace qgr {

using PluckerSet = std::set<IndexSet>;
using Positroid = std::set<IndexSet>;
using GrassmannNecklace = std::vector<IndexSet>;

// componentwise order on equal-size index sets
bool leq_componentwise(const IndexSet& a, const IndexSet& b);

struct AlphaDecomposition {
    std::vector<int> removed;  // gamma \ alpha, ascending
    std::vector<int> added;    // alpha \ gamma, ascending
};

// Requires alpha >= gamma componentwise and alpha != gamma; asserts the
// pairwise bound added[l] > removed[l] (a failure signals an internal bug).
AlphaDecomposition alpha_decompose(const IndexSet& gamma, const IndexSet& alpha);

// alpha in P? True when alpha is not >= gamma; false for gamma itself;
// otherwise decided by vertex-disjoint path existence in Post(C) with
// row/column index labels.
bool member(const HPrimeKey& key, const IndexSet& alpha);

// Same decision through the Post'(C) relabelling (sources carry gamma
// values, sinks carry complement values); must agree with member()
// everywhere.
bool member_relabelled(const HPrimeKey& key, const IndexSet& alpha);

PluckerSet plucker_set(const HPrimeKey& key);

// Pi minus the Pluecker set; always contains gamma.
Positroid positroid_bases(const HPrimeKey& key);

// exchange axiom: for all I, J in p and i in I there is j in J with
// (I - i) + j in p. Throws on ragged cardinalities or empty input.
bool is_matroid(const Positroid& p);

// componentwise order after the cyclic shift starting at i
bool i_leq(int i, const IndexSet& a, const IndexSet& b, int n);

// I_i = the member of the complement matroid that is a <=_i lower bound for
// the whole complement; throws logic_error when no such element exists.
GrassmannNecklace necklace(const PluckerSet& pset, int m, int n);
GrassmannNecklace necklace_of(const HPrimeKey& key);

// necklace axiom test
bool necklace_axiom_holds(const GrassmannNecklace& neck, int n);

// true iff J_i <=_i I_i for all i (then Q is contained in P)
bool necklace_leq(const GrassmannNecklace& neck_q, const GrassmannNecklace& neck_p, int n);

// Nodes are all H-prime keys plus the irrelevant ideal as top; containment
// edges computed from necklaces, Hasse edges by transitive reduction.
struct HPrimePoset {
    int m = 0;
    int n = 0;
    std::vector<HPrimeKey> keys;           // non-irrelevant nodes, in key order
    int top_index = 0;                     // index of the irrelevant top = keys.size()
    std::vector<std::pair<int, int>> containments;  // (a,b): node a strictly contained in node b
    std::vector<std::pair<int, int>> hasse_edges;   // covering pairs (a,b), a covered by b
};

HPrimePoset hprime_poset(int m, int n);

// transitive reduction of a strict containment relation given as pairs
std::vector<std::pair<int, int>> transitive_reduction(int node_count,
                                                      const std::vector<std::pair<int, int>>& edges);

// the necklace entries of the key (generators of the separating set)
std::vector<IndexSet> separating_set(const HPrimeKey& key);

// For each i the list L_i of {J : J not >=_i I_i} in a linear extension of
// <=_i (minima first), concatenated over i = 1..n; duplicates kept unless
// dedupe is set. The union always equals plucker_set(key).
std::vector<IndexSet> polynormal_sequence(const HPrimeKey& key, bool dedupe);

}  // namespace qgr
