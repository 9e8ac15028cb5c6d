#include "qgr/postnikov.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace qgr {

std::string Vertex::name() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::row: os << "r_" << row; break;
        case Kind::col: os << "c_" << col; break;
        case Kind::internal: os << "b_" << row << "_" << col; break;
    }
    return os.str();
}

namespace {

// first white box strictly left of (row, col) in its row, if any
std::optional<Box> white_left(const LeDiagram& d, int row, int col) {
    for (int j = col - 1; j >= 1; --j)
        if (d.is_white({row, j})) return Box{row, j};
    return std::nullopt;
}

// first white box strictly below (row, col) in its column, if any
std::optional<Box> white_below(const LeDiagram& d, int row, int col) {
    for (int i = row + 1; i <= d.shape().rows(); ++i)
        if (d.is_white({i, col})) return Box{i, col};
    return std::nullopt;
}

std::optional<Box> rightmost_white_in_row(const LeDiagram& d, int row) {
    for (int j = d.shape().part(row); j >= 1; --j)
        if (d.is_white({row, j})) return Box{row, j};
    return std::nullopt;
}

std::optional<Box> bottommost_white_in_col(const LeDiagram& d, int col) {
    for (int i = d.shape().rows(); i >= 1; --i)
        if (d.shape().contains({i, col}) && d.is_white({i, col})) return Box{i, col};
    return std::nullopt;
}

}  // namespace

PostnikovGraph::PostnikovGraph(LeDiagram diagram) : diagram_(std::move(diagram)) {
    const Partition& shape = diagram_.shape();
    // r_i -> rightmost white box of row i, weight t_{i,k}
    for (int i = 1; i <= shape.rows(); ++i) {
        if (auto k = rightmost_white_in_row(diagram_, i)) {
            edges_.push_back(Edge{Vertex::row_vertex(i), Vertex::internal(*k), true,
                                  TorusElement::generator(*k)});
        }
    }
    for (const Box& b : diagram_.whites()) {
        // (i,j) -> (i,j^-), weight t_{i,j}^{-1} t_{i,j^-} (ordered product)
        if (auto left = white_left(diagram_, b.row, b.col)) {
            edges_.push_back(Edge{Vertex::internal(b), Vertex::internal(*left), true,
                                  ordered_product({{b, -1}, {*left, +1}})});
        }
        // (i,j) -> (i^+,j), weight 1
        if (auto below = white_below(diagram_, b.row, b.col)) {
            edges_.push_back(
                Edge{Vertex::internal(b), Vertex::internal(*below), false, TorusElement::one()});
        }
    }
    // bottom-most white box of column j -> c_j, weight 1
    for (int j = 1; j <= shape.cols(); ++j) {
        if (auto b = bottommost_white_in_col(diagram_, j)) {
            edges_.push_back(
                Edge{Vertex::internal(*b), Vertex::col_vertex(j), false, TorusElement::one()});
        }
    }
}

std::vector<const Edge*> PostnikovGraph::out_edges(const Vertex& v) const {
    std::vector<const Edge*> out;
    for (const Edge& e : edges_)
        if (e.from == v) out.push_back(&e);
    std::sort(out.begin(), out.end(),
              [](const Edge* a, const Edge* b) { return a->horizontal > b->horizontal; });
    return out;
}

const Edge* PostnikovGraph::find_edge(const Vertex& from, const Vertex& to) const {
    for (const Edge& e : edges_)
        if (e.from == from && e.to == to) return &e;
    return nullptr;
}

std::string PostnikovGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph postnikov {\n";
    for (int i = 1; i <= row_count(); ++i) os << "  \"r_" << i << "\";\n";
    for (int j = 1; j <= col_count(); ++j) os << "  \"c_" << j << "\";\n";
    for (const Box& b : diagram_.whites()) os << "  \"" << Vertex::internal(b).name() << "\";\n";
    for (const Edge& e : edges_) {
        os << "  \"" << e.from.name() << "\" -> \"" << e.to.name() << "\"";
        if (e.horizontal) {
            // ratio form: t[i,k] for an entry edge, otherwise
            // t[i,j]^-1t[i,j^-]
            std::ostringstream label;
            if (e.from.kind == Vertex::Kind::row) {
                label << "t[" << e.to.row << "," << e.to.col << "]";
            } else {
                label << "t[" << e.from.row << "," << e.from.col << "]^-1"
                      << "t[" << e.to.row << "," << e.to.col << "]";
            }
            os << " [label=\"" << label.str() << "\"]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

PostnikovGraph build_graph(const LeDiagram& diagram) { return PostnikovGraph(diagram); }

namespace {

void dfs_paths(const PostnikovGraph& g, const Vertex& current, const Vertex& target,
               std::vector<Vertex>& stack, std::vector<Path>& out) {
    if (current == target) {
        out.push_back(Path{stack});
        return;
    }
    if (current.kind == Vertex::Kind::col) return;  // wrong sink
    for (const Edge* e : g.out_edges(current)) {
        stack.push_back(e->to);
        dfs_paths(g, e->to, target, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Path> enumerate_paths(const PostnikovGraph& g, int row, int col) {
    if (row < 1 || row > g.row_count() || col < 1 || col > g.col_count())
        throw std::invalid_argument("enumerate_paths: boundary index out of range");
    std::vector<Path> out;
    Vertex start = Vertex::row_vertex(row);
    std::vector<Vertex> stack{start};
    dfs_paths(g, start, Vertex::col_vertex(col), stack, out);
    return out;
}

TorusElement path_weight(const PostnikovGraph& g, const Path& p) {
    TorusElement w = TorusElement::one();
    for (size_t k = 0; k + 1 < p.vertices.size(); ++k) {
        const Edge* e = g.find_edge(p.vertices[k], p.vertices[k + 1]);
        if (e == nullptr) throw std::invalid_argument("path_weight: not a path of this graph");
        w *= e->weight;
    }
    return w;
}

// ---------------------------------------------------------------------------
// Flow-based existence: split each internal vertex into in/out with unit
// capacity; sources and sinks carry unit capacity through their attachment
// edges. Plain BFS augmentation.

namespace {

struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;  // index of the reverse arc in adj[to]
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNet(int n) : adj(n) {}

    void add_arc(int u, int v, int cap) {
        adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
    }

    int max_flow(int s, int t) {
        int total = 0;
        while (true) {
            std::vector<std::pair<int, int>> parent(adj.size(), {-1, -1});
            std::queue<int> q;
            q.push(s);
            parent[s] = {s, 0};
            while (!q.empty() && parent[t].first == -1) {
                int u = q.front();
                q.pop();
                for (size_t k = 0; k < adj[u].size(); ++k) {
                    const Arc& a = adj[u][k];
                    if (a.cap > 0 && parent[a.to].first == -1) {
                        parent[a.to] = {u, static_cast<int>(k)};
                        q.push(a.to);
                    }
                }
            }
            if (parent[t].first == -1) break;
            for (int v = t; v != s;) {
                auto [u, k] = parent[v];
                adj[u][k].cap -= 1;
                adj[adj[u][k].to][adj[u][k].rev].cap += 1;
                v = u;
            }
            total += 1;
        }
        return total;
    }
};

}  // namespace

bool exists_disjoint_system(const PostnikovGraph& g, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("exists_disjoint_system: |I| != |J|");
    int t = rows.size();
    if (t == 0) return true;
    if (rows.elems().back() > g.row_count() || cols.elems().back() > g.col_count())
        throw std::invalid_argument("exists_disjoint_system: boundary index out of range");

    std::map<Vertex, int> ids;  // internal vertices: id -> in node, id+1 -> out node
    int next = 0;
    for (const Box& b : g.diagram().whites()) {
        ids[Vertex::internal(b)] = next;
        next += 2;
    }
    std::map<Vertex, int> boundary;
    for (int i = 1; i <= g.row_count(); ++i) {
        boundary[Vertex::row_vertex(i)] = next++;
    }
    for (int j = 1; j <= g.col_count(); ++j) {
        boundary[Vertex::col_vertex(j)] = next++;
    }
    int source = next++;
    int sink = next++;

    FlowNet net(next);
    for (const auto& [v, id] : ids) net.add_arc(id, id + 1, 1);
    auto out_id = [&](const Vertex& v) {
        return v.kind == Vertex::Kind::internal ? ids.at(v) + 1 : boundary.at(v);
    };
    auto in_id = [&](const Vertex& v) {
        return v.kind == Vertex::Kind::internal ? ids.at(v) : boundary.at(v);
    };
    for (const Edge& e : g.edges()) net.add_arc(out_id(e.from), in_id(e.to), 1);
    for (int i : rows.elems()) net.add_arc(source, boundary.at(Vertex::row_vertex(i)), 1);
    for (int j : cols.elems()) net.add_arc(boundary.at(Vertex::col_vertex(j)), sink, 1);

    return net.max_flow(source, sink) == t;
}

// ---------------------------------------------------------------------------
// Backtracking enumeration.

namespace {

struct SystemSearch {
    const PostnikovGraph& g;
    const IndexSet& rows;
    const IndexSet& cols;
    bool disjoint_only;
    std::set<Vertex> occupied;
    std::set<int> used_cols;
    std::vector<Path> chosen;
    std::vector<int> sink_cols;
    std::vector<PathSystem>* out;

    void finish() {
        PathSystem s;
        s.paths = chosen;
        int t = rows.size();
        s.permutation.resize(t);
        for (int k = 0; k < t; ++k) {
            const auto& ce = cols.elems();
            s.permutation[k] = static_cast<int>(
                std::find(ce.begin(), ce.end(), sink_cols[k]) - ce.begin());
        }
        s.vertex_disjoint = true;
        if (!disjoint_only) {
            std::set<Vertex> seen;
            for (const Path& p : s.paths)
                for (const Vertex& v : p.vertices)
                    if (!seen.insert(v).second) s.vertex_disjoint = false;
        }
        s.weight = TorusElement::one();
        for (const Path& p : s.paths) s.weight *= path_weight(g, p);
        out->push_back(std::move(s));
    }

    void extend_path(int k, const Vertex& current, std::vector<Vertex>& stack) {
        if (current.kind == Vertex::Kind::col) {
            if (used_cols.contains(current.col)) return;
            if (!cols.contains(current.col)) return;
            used_cols.insert(current.col);
            chosen.push_back(Path{stack});
            sink_cols.push_back(current.col);
            place_path(k + 1);
            sink_cols.pop_back();
            chosen.pop_back();
            used_cols.erase(current.col);
            return;
        }
        for (const Edge* e : g.out_edges(current)) {
            const Vertex& nxt = e->to;
            if (disjoint_only && nxt.kind != Vertex::Kind::col && occupied.contains(nxt)) continue;
            stack.push_back(nxt);
            if (disjoint_only && nxt.kind != Vertex::Kind::col) occupied.insert(nxt);
            extend_path(k, nxt, stack);
            if (disjoint_only && nxt.kind != Vertex::Kind::col) occupied.erase(nxt);
            stack.pop_back();
        }
    }

    void place_path(int k) {
        if (k == rows.size()) {
            finish();
            return;
        }
        Vertex start = Vertex::row_vertex(rows[k]);
        std::vector<Vertex> stack{start};
        if (disjoint_only) occupied.insert(start);
        extend_path(k, start, stack);
        if (disjoint_only) occupied.erase(start);
    }
};

}  // namespace

std::vector<PathSystem> enumerate_disjoint_systems(const PostnikovGraph& g, const IndexSet& rows,
                                                   const IndexSet& cols) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("enumerate_disjoint_systems: |I| != |J|");
    if (rows.size() > 0 &&
        (rows.elems().back() > g.row_count() || cols.elems().back() > g.col_count()))
        throw std::invalid_argument("enumerate_disjoint_systems: boundary index out of range");
    std::vector<PathSystem> out;
    SystemSearch search{g, rows, cols, true, {}, {}, {}, {}, &out};
    search.place_path(0);
    return out;
}

std::vector<PathSystem> enumerate_all_systems(const PostnikovGraph& g, const IndexSet& rows,
                                              const IndexSet& cols) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("enumerate_all_systems: |I| != |J|");
    std::vector<PathSystem> out;
    SystemSearch search{g, rows, cols, false, {}, {}, {}, {}, &out};
    search.place_path(0);
    return out;
}

std::pair<std::vector<int>, int> system_permutation(const PathSystem& s) {
    return {s.permutation, inversion_count(s.permutation)};
}

std::vector<Turn> turns(const PostnikovGraph& g, const Path& p) {
    if (p.vertices.size() < 2 || p.vertices.front().kind != Vertex::Kind::row ||
        p.vertices.back().kind != Vertex::Kind::col)
        throw std::invalid_argument("turns: expected an r_i => c_j path");
    std::vector<Turn> out;
    for (size_t k = 1; k + 1 < p.vertices.size(); ++k) {
        const Edge* in = g.find_edge(p.vertices[k - 1], p.vertices[k]);
        const Edge* outgoing = g.find_edge(p.vertices[k], p.vertices[k + 1]);
        if (in == nullptr || outgoing == nullptr)
            throw std::invalid_argument("turns: not a path of this graph");
        Box at{p.vertices[k].row, p.vertices[k].col};
        if (in->horizontal && !outgoing->horizontal)
            out.push_back(Turn{Turn::Kind::gamma, at});
        else if (!in->horizontal && outgoing->horizontal)
            out.push_back(Turn{Turn::Kind::bottom, at});
    }
    return out;
}

}  // namespace qgr
