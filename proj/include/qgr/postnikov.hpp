// The weighted directed planar graph Post(C) of a Cauchon-Le diagram:
// hook-shaped edges through white boxes, row sources r_i, column sinks c_j.
// Path and path-system enumeration plus the flow-based decision for
// vertex-disjoint system existence.
#pragma once

#include "qgr/qtorus.hpp"
#include "qgr/shapes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qgr {

struct Vertex {
    enum class Kind { row, col, internal };
    Kind kind = Kind::internal;
    // row source: row set; col sink: col set; internal: both set
    int row = 0;
    int col = 0;

    static Vertex row_vertex(int i) { return {Kind::row, i, 0}; }
    static Vertex col_vertex(int j) { return {Kind::col, 0, j}; }
    static Vertex internal(Box b) { return {Kind::internal, b.row, b.col}; }

    auto operator<=>(const Vertex&) const = default;

    [[nodiscard]] std::string name() const;  // "r_2", "c_1", "b_2_3"
};

struct Edge {
    Vertex from;
    Vertex to;
    bool horizontal = false;     // horizontal edges are the weighted ones
    TorusElement weight;         // normal-ordered; 1 for vertical/exit edges
};

struct Path {
    std::vector<Vertex> vertices;  // r_i, internals..., c_j for boundary paths
};

struct PathSystem {
    std::vector<Path> paths;        // k-th path starts at r_{i_k}, I ascending
    std::vector<int> permutation;   // sigma in one-line form, 0-based: path k ends at c_{j_{sigma[k]}}
    bool vertex_disjoint = false;
    TorusElement weight;            // ordered product w(P_1)...w(P_t)
};

class PostnikovGraph {
public:
    explicit PostnikovGraph(LeDiagram diagram);

    [[nodiscard]] const LeDiagram& diagram() const { return diagram_; }
    [[nodiscard]] int row_count() const { return diagram_.shape().rows(); }
    [[nodiscard]] int col_count() const { return diagram_.shape().cols(); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

    // out-edges in exploration order: horizontal successor first
    [[nodiscard]] std::vector<const Edge*> out_edges(const Vertex& v) const;
    [[nodiscard]] const Edge* find_edge(const Vertex& from, const Vertex& to) const;

    [[nodiscard]] std::string to_dot() const;

private:
    LeDiagram diagram_;
    std::vector<Edge> edges_;
};

PostnikovGraph build_graph(const LeDiagram& diagram);

// All directed paths r_i => c_j, depth-first preferring the horizontal
// successor; empty when none exist.
std::vector<Path> enumerate_paths(const PostnikovGraph& g, int row, int col);

// Ordered product of the path's edge weights.
TorusElement path_weight(const PostnikovGraph& g, const Path& p);

// Vertex-disjoint R_{(I,J)} system existence via unit-vertex-capacity
// maximum flow on the node-split graph. |I| must equal |J|.
bool exists_disjoint_system(const PostnikovGraph& g, const IndexSet& rows, const IndexSet& cols);

// Every vertex-disjoint R_{(I,J)}-path system exactly once (backtracking
// with an occupied-vertex set), each carrying permutation and weight.
// I = J = {} yields the single empty system.
std::vector<PathSystem> enumerate_disjoint_systems(const PostnikovGraph& g, const IndexSet& rows,
                                                   const IndexSet& cols);

// All R_{(I,J)} path systems, disjoint or not (test support for the
// involution arguments; exponential, small inputs only).
std::vector<PathSystem> enumerate_all_systems(const PostnikovGraph& g, const IndexSet& rows,
                                              const IndexSet& cols);

// (sigma, inversion count)
std::pair<std::vector<int>, int> system_permutation(const PathSystem& s);

struct Turn {
    enum class Kind { gamma, bottom };  // gamma-turn / perp-turn
    Kind kind;
    Box at;
};

// Alternating turn list of an r_i => c_j path: gamma, perp, ..., gamma.
std::vector<Turn> turns(const PostnikovGraph& g, const Path& p);

}  // namespace qgr
