// Partitions, Young diagrams, Cauchon-Le diagrams, the gamma <-> lambda
// dictionary, the ladder box bijection and exhaustive enumeration.
#pragma once

#include <compare>
#include <map>
#include <set>
#include <vector>

namespace qgr {

// 1-based box (row from top, column from left); lex order (i,j) < (k,l)
// iff i < k or (i = k and j < l).
struct Box {
    int row = 0;
    int col = 0;
    auto operator<=>(const Box&) const = default;
};

// Weakly decreasing positive parts, trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // throws on invalid input

    [[nodiscard]] int rows() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int cols() const { return parts_.empty() ? 0 : parts_[0]; }
    // lambda_i, 0 when i exceeds the number of rows (1-based)
    [[nodiscard]] int part(int i) const;
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int box_count() const;
    [[nodiscard]] bool contains(Box b) const;
    [[nodiscard]] bool fits_in_box(int max_rows, int max_cols) const;
    // all boxes of Y_lambda in ascending lex order
    [[nodiscard]] std::vector<Box> boxes() const;
    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// true iff the Le condition holds at every black box: each black box has
// either an all-black row prefix to its left or an all-black column prefix
// above it. Throws invalid_argument if a box lies outside the shape.
bool validate_le(const Partition& shape, const std::set<Box>& black);

// A partition shape plus a black box set obeying the Le condition.
class LeDiagram {
public:
    LeDiagram() = default;
    LeDiagram(Partition shape, std::set<Box> black);  // throws unless valid

    [[nodiscard]] const Partition& shape() const { return shape_; }
    [[nodiscard]] const std::set<Box>& black() const { return black_; }
    [[nodiscard]] bool is_black(Box b) const { return black_.contains(b); }
    [[nodiscard]] bool is_white(Box b) const { return shape_.contains(b) && !is_black(b); }
    // white boxes in ascending lex order
    [[nodiscard]] std::vector<Box> whites() const;

    auto operator<=>(const LeDiagram&) const = default;

private:
    Partition shape_;
    std::set<Box> black_;
};

// Strictly increasing tuple from [1,n]; cardinality checks live at the
// use sites that know m and n.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> elems);  // throws unless sorted strict

    [[nodiscard]] int size() const { return static_cast<int>(elems_.size()); }
    [[nodiscard]] bool contains(int x) const;
    [[nodiscard]] const std::vector<int>& elems() const { return elems_; }
    [[nodiscard]] int operator[](int i) const { return elems_[i]; }  // 0-based access
    [[nodiscard]] bool valid_for(int m, int n) const;

    auto operator<=>(const IndexSet&) const = default;

private:
    std::vector<int> elems_;
};

// lambda_i = n - m - (gamma_i - i), trailing zeros trimmed.
Partition gamma_to_partition(int m, int n, const IndexSet& gamma);

// Inverse of gamma_to_partition: walk the SE border of Y_lambda inside the
// m x (n-m) rectangle from the NE corner, labelling steps 1..n; gamma is the
// set of vertical step labels.
IndexSet partition_to_gamma(int m, int n, const Partition& lambda);

// Ladder L_gamma = {(i,j) : j > gamma_{m+1-i}, j not in gamma} together with
// the box bijection ladder (i, a_j) <-> Y_lambda (m+1-i, n-m+1-j).
struct LadderBijection {
    std::vector<Box> ladder;  // ascending lex
    std::map<Box, Box> ladder_to_young;
    std::map<Box, Box> young_to_ladder;
};
LadderBijection ladder_box_bijection(int m, int n, const IndexSet& gamma);

// All Le diagrams on the shape, each exactly once, ordered by increasing
// black cardinality with ties broken by the sorted black box list.
std::vector<LeDiagram> enumerate_le_diagrams(const Partition& shape);

// All partitions fitting inside a max_rows x max_cols box (including the
// empty one), in a deterministic order.
std::vector<Partition> partitions_in_box(int max_rows, int max_cols);

// All m-element subsets of [1,n] in ascending lex order.
std::vector<IndexSet> all_index_sets(int m, int n);

// inversion count of a permutation in one-line form (0-based values)
int inversion_count(const std::vector<int>& perm);

struct HPrimeKey {
    int m = 0;
    int n = 0;
    IndexSet gamma;
    LeDiagram diagram;

    auto operator<=>(const HPrimeKey&) const = default;
};

// Checks m,n bounds, gamma validity and shape consistency; throws otherwise.
HPrimeKey make_hprime_key(int m, int n, IndexSet gamma, LeDiagram diagram);

// The disjoint union over gamma of the Le diagrams on Y_lambda(gamma); the
// irrelevant ideal is represented separately and not listed here.
std::vector<HPrimeKey> enumerate_hprime_keys(int m, int n);

}  // namespace qgr
