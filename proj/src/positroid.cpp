#include "qgr/positroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qgr {

bool leq_componentwise(const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) throw std::invalid_argument("leq_componentwise: size mismatch");
    for (int k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

AlphaDecomposition alpha_decompose(const IndexSet& gamma, const IndexSet& alpha) {
    if (gamma.size() != alpha.size())
        throw std::invalid_argument("alpha_decompose: size mismatch");
    if (!leq_componentwise(gamma, alpha) || gamma == alpha)
        throw std::invalid_argument("alpha_decompose: requires alpha > gamma");
    AlphaDecomposition d;
    std::set_difference(gamma.elems().begin(), gamma.elems().end(), alpha.elems().begin(),
                        alpha.elems().end(), std::back_inserter(d.removed));
    std::set_difference(alpha.elems().begin(), alpha.elems().end(), gamma.elems().begin(),
                        gamma.elems().end(), std::back_inserter(d.added));
    if (d.removed.size() != d.added.size() || d.removed.empty())
        throw std::logic_error("alpha_decompose: malformed decomposition");
    for (size_t l = 0; l < d.removed.size(); ++l)
        if (!(d.added[l] > d.removed[l]))
            throw std::logic_error("alpha_decompose: pairing bound a_{j_l} > gamma_{i_l} failed");
    return d;
}

namespace {

void check_alpha(const HPrimeKey& key, const IndexSet& alpha) {
    if (!alpha.valid_for(key.m, key.n))
        throw std::invalid_argument("member: alpha invalid for (m,n)");
}

// 1-based position of each value of `values` inside `within`
std::vector<int> positions_in(const std::vector<int>& values, const std::vector<int>& within) {
    std::vector<int> out;
    out.reserve(values.size());
    for (int v : values) {
        auto it = std::lower_bound(within.begin(), within.end(), v);
        if (it == within.end() || *it != v)
            throw std::logic_error("positions_in: value missing from reference tuple");
        out.push_back(static_cast<int>(it - within.begin()) + 1);
    }
    return out;
}

std::vector<int> complement_of(const IndexSet& gamma, int n) {
    std::vector<int> out;
    for (int x = 1; x <= n; ++x)
        if (!gamma.contains(x)) out.push_back(x);
    return out;
}

}  // namespace

bool member(const HPrimeKey& key, const IndexSet& alpha) {
    check_alpha(key, alpha);
    if (!leq_componentwise(key.gamma, alpha)) return true;  // alpha not >= gamma
    if (alpha == key.gamma) return false;
    AlphaDecomposition d = alpha_decompose(key.gamma, alpha);
    std::vector<int> complement = complement_of(key.gamma, key.n);
    // row indices I = {i_1,...,i_t}, column indices J = {n-m+1-j_t,...,n-m+1-j_1}
    std::vector<int> I = positions_in(d.removed, key.gamma.elems());
    std::vector<int> j_positions = positions_in(d.added, complement);
    std::vector<int> J;
    for (auto it = j_positions.rbegin(); it != j_positions.rend(); ++it)
        J.push_back(key.n - key.m + 1 - *it);
    PostnikovGraph g(key.diagram);
    return !exists_disjoint_system(g, IndexSet(I), IndexSet(J));
}

bool member_relabelled(const HPrimeKey& key, const IndexSet& alpha) {
    check_alpha(key, alpha);
    if (!leq_componentwise(key.gamma, alpha)) return true;
    if (alpha == key.gamma) return false;
    AlphaDecomposition d = alpha_decompose(key.gamma, alpha);
    // Post'(C) labels source r_i with gamma_i and sink c_j with
    // a_{n-m+1-j}; map the labels {gamma_{i_l}} and {a_{j_l}} back.
    std::vector<int> complement = complement_of(key.gamma, key.n);
    std::vector<int> I = positions_in(d.removed, key.gamma.elems());
    std::vector<int> J;
    for (int a_value : d.added) {
        auto it = std::lower_bound(complement.begin(), complement.end(), a_value);
        int j = static_cast<int>(it - complement.begin()) + 1;
        J.push_back(key.n - key.m + 1 - j);
    }
    std::sort(J.begin(), J.end());
    PostnikovGraph g(key.diagram);
    return !exists_disjoint_system(g, IndexSet(I), IndexSet(J));
}

PluckerSet plucker_set(const HPrimeKey& key) {
    PluckerSet out;
    for (const IndexSet& alpha : all_index_sets(key.m, key.n))
        if (member(key, alpha)) out.insert(alpha);
    return out;
}

Positroid positroid_bases(const HPrimeKey& key) {
    Positroid out;
    PluckerSet pset = plucker_set(key);
    for (const IndexSet& alpha : all_index_sets(key.m, key.n))
        if (!pset.contains(alpha)) out.insert(alpha);
    return out;
}

bool is_matroid(const Positroid& p) {
    if (p.empty()) throw std::invalid_argument("is_matroid: empty basis collection");
    int m = p.begin()->size();
    for (const IndexSet& b : p)
        if (b.size() != m) throw std::invalid_argument("is_matroid: ragged cardinalities");
    for (const IndexSet& I : p) {
        for (const IndexSet& J : p) {
            for (int i : I.elems()) {
                bool found = false;
                for (int j : J.elems()) {
                    std::vector<int> candidate;
                    for (int x : I.elems())
                        if (x != i) candidate.push_back(x);
                    if (std::find(candidate.begin(), candidate.end(), j) != candidate.end())
                        continue;
                    candidate.push_back(j);
                    std::sort(candidate.begin(), candidate.end());
                    if (p.contains(IndexSet(candidate))) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

namespace {

std::vector<int> shifted_keys(int i, const IndexSet& a, int n) {
    std::vector<int> keys;
    keys.reserve(a.size());
    for (int x : a.elems()) keys.push_back(((x - i) % n + n) % n);
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

bool i_leq(int i, const IndexSet& a, const IndexSet& b, int n) {
    if (a.size() != b.size()) throw std::invalid_argument("i_leq: size mismatch");
    std::vector<int> ka = shifted_keys(i, a, n);
    std::vector<int> kb = shifted_keys(i, b, n);
    for (size_t k = 0; k < ka.size(); ++k)
        if (ka[k] > kb[k]) return false;
    return true;
}

GrassmannNecklace necklace(const PluckerSet& pset, int m, int n) {
    std::vector<IndexSet> bases;
    for (const IndexSet& alpha : all_index_sets(m, n))
        if (!pset.contains(alpha)) bases.push_back(alpha);
    if (bases.empty())
        throw std::logic_error("necklace: empty complement (irrelevant ideal has no necklace)");
    GrassmannNecklace neck;
    for (int i = 1; i <= n; ++i) {
        const IndexSet* minimum = nullptr;
        for (const IndexSet& candidate : bases) {
            bool lower_bound = true;
            for (const IndexSet& other : bases) {
                if (!i_leq(i, candidate, other, n)) {
                    lower_bound = false;
                    break;
                }
            }
            if (lower_bound) {
                minimum = &candidate;
                break;
            }
        }
        if (minimum == nullptr)
            throw std::logic_error("necklace: no <=_i global minimum; input is not an H-prime Pluecker set");
        neck.push_back(*minimum);
    }
    return neck;
}

GrassmannNecklace necklace_of(const HPrimeKey& key) {
    return necklace(plucker_set(key), key.m, key.n);
}

bool necklace_axiom_holds(const GrassmannNecklace& neck, int n) {
    if (static_cast<int>(neck.size()) != n) return false;
    for (int i = 1; i <= n; ++i) {
        const IndexSet& cur = neck[i - 1];
        const IndexSet& nxt = neck[i % n];
        if (cur.contains(i)) {
            // nxt = (cur - i) + j for some j
            std::vector<int> base;
            for (int x : cur.elems())
                if (x != i) base.push_back(x);
            std::vector<int> extra;
            std::set_difference(nxt.elems().begin(), nxt.elems().end(), base.begin(), base.end(),
                                std::back_inserter(extra));
            if (extra.size() != 1) return false;
        } else {
            if (!(nxt == cur)) return false;
        }
    }
    return true;
}

bool necklace_leq(const GrassmannNecklace& neck_q, const GrassmannNecklace& neck_p, int n) {
    if (neck_q.size() != neck_p.size())
        throw std::invalid_argument("necklace_leq: different (m,n)");
    for (int i = 1; i <= n; ++i)
        if (!i_leq(i, neck_q[i - 1], neck_p[i - 1], n)) return false;
    return true;
}

std::vector<std::pair<int, int>> transitive_reduction(
    int node_count, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<bool>> adj(node_count, std::vector<bool>(node_count, false));
    for (auto [a, b] : edges) adj[a][b] = true;
    std::vector<std::pair<int, int>> reduced;
    for (auto [a, b] : edges) {
        bool covered = false;
        for (int w = 0; w < node_count && !covered; ++w)
            if (w != a && w != b && adj[a][w] && adj[w][b]) covered = true;
        if (!covered) reduced.emplace_back(a, b);
    }
    return reduced;
}

HPrimePoset hprime_poset(int m, int n) {
    HPrimePoset poset;
    poset.m = m;
    poset.n = n;
    poset.keys = enumerate_hprime_keys(m, n);
    int k = static_cast<int>(poset.keys.size());
    poset.top_index = k;

    std::vector<GrassmannNecklace> necks;
    necks.reserve(k);
    for (const HPrimeKey& key : poset.keys) necks.push_back(necklace_of(key));

    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            if (necklace_leq(necks[a], necks[b], n) && !(necks[a] == necks[b]))
                poset.containments.emplace_back(a, b);
        }
        poset.containments.emplace_back(a, poset.top_index);  // top contains everything
    }
    poset.hasse_edges = transitive_reduction(k + 1, poset.containments);
    return poset;
}

std::vector<IndexSet> separating_set(const HPrimeKey& key) {
    GrassmannNecklace neck = necklace_of(key);
    return {neck.begin(), neck.end()};
}

std::vector<IndexSet> polynormal_sequence(const HPrimeKey& key, bool dedupe) {
    GrassmannNecklace neck = necklace_of(key);
    std::vector<IndexSet> out;
    std::set<IndexSet> seen;
    std::vector<IndexSet> all = all_index_sets(key.m, key.n);
    for (int i = 1; i <= key.n; ++i) {
        std::vector<IndexSet> list;
        for (const IndexSet& J : all)
            if (!i_leq(i, neck[i - 1], J, key.n)) list.push_back(J);
        // linear extension of <=_i: sort by (sum of shifted keys, shifted
        // tuple lex); refines the componentwise order, minima first
        std::stable_sort(list.begin(), list.end(), [&](const IndexSet& a, const IndexSet& b) {
            std::vector<int> ka = shifted_keys(i, a, key.n);
            std::vector<int> kb = shifted_keys(i, b, key.n);
            int sa = std::accumulate(ka.begin(), ka.end(), 0);
            int sb = std::accumulate(kb.begin(), kb.end(), 0);
            if (sa != sb) return sa < sb;
            return ka < kb;
        });
        for (const IndexSet& J : list) {
            if (dedupe && !seen.insert(J).second) continue;
            out.push_back(J);
        }
    }
    return out;
}

}  // namespace qgr
