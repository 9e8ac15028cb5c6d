#include <doctest.h>

#include "qgr/postnikov.hpp"

#include <map>
#include <random>
#include <set>

using namespace qgr;

namespace {

// lambda = (4,3,3,1) with the single black box (2,1); the running fixture
LeDiagram sample_diagram() { return LeDiagram(Partition({4, 3, 3, 1}), {{2, 1}}); }

TorusElement gen(int i, int j, int e = 1) { return TorusElement::generator({i, j}, e); }

// Kahn topological sort as the acyclicity oracle
bool topo_sort_succeeds(const PostnikovGraph& g) {
    std::map<Vertex, int> indeg;
    std::set<Vertex> vertices;
    for (const Edge& e : g.edges()) {
        vertices.insert(e.from);
        vertices.insert(e.to);
        indeg[e.to] += 1;
        indeg.try_emplace(e.from, 0);
    }
    std::vector<Vertex> queue;
    for (const Vertex& v : vertices)
        if (indeg[v] == 0) queue.push_back(v);
    size_t removed = 0;
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        ++removed;
        for (const Edge& e : g.edges())
            if (e.from == v && --indeg[e.to] == 0) queue.push_back(e.to);
    }
    return removed == vertices.size();
}

// Horizontal edge commutation case table, as the oracle for the torus
// computation: w(f) w(e) = q^c w(e) w(f) with row(f) <= row(e).
int commutation_exponent(const Edge& e, const Edge& f) {
    auto col1 = [](const Edge& x) -> std::optional<int> {
        if (x.from.kind == Vertex::Kind::row) return std::nullopt;
        return x.from.col;
    };
    auto col2 = [](const Edge& x) { return x.to.col; };
    std::set<int> ce, cf;
    if (col1(e)) ce.insert(*col1(e));
    ce.insert(col2(e));
    if (col1(f)) cf.insert(*col1(f));
    cf.insert(col2(f));
    std::vector<int> shared;
    std::set_intersection(ce.begin(), ce.end(), cf.begin(), cf.end(), std::back_inserter(shared));
    if (shared.empty()) return 0;
    if (shared.size() == 2) return 2;
    int row_e = e.to.row, row_f = f.to.row;
    bool c1c1 = col1(e) && col1(f) && *col1(e) == *col1(f);
    bool c2c2 = col2(e) == col2(f);
    if (c1c1 || c2c2) return 1;
    bool e_ends_at_f_start = col1(f) && col2(e) == *col1(f);
    if (row_e == row_f && e_ends_at_f_start) return 1;
    return -1;
}

std::vector<Path> all_boundary_paths(const PostnikovGraph& g) {
    std::vector<Path> out;
    for (int i = 1; i <= g.row_count(); ++i)
        for (int j = 1; j <= g.col_count(); ++j)
            for (const Path& p : enumerate_paths(g, i, j)) out.push_back(p);
    return out;
}

}  // namespace

TEST_SUITE("postnikov") {

TEST_CASE("build_graph structure") {
    // all-black diagram: boundary vertices only, no edges
    LeDiagram all_black(Partition({2, 1}), {{1, 1}, {1, 2}, {2, 1}});
    CHECK(PostnikovGraph(all_black).edges().empty());

    // all-white staircase: r_1 exits to (1,3) with weight t_{1,3}
    PostnikovGraph stairs(LeDiagram(Partition({3, 2, 1}), {}));
    const Edge* exit = stairs.find_edge(Vertex::row_vertex(1), Vertex::internal({1, 3}));
    REQUIRE(exit != nullptr);
    CHECK(exit->weight == gen(1, 3));
    CHECK(exit->horizontal);

    // sample diagram: row 2's exit skips the black box and the horizontal
    // edge from (2,2) has no white box to its left
    PostnikovGraph g(sample_diagram());
    CHECK(g.find_edge(Vertex::row_vertex(2), Vertex::internal({2, 3})) != nullptr);
    CHECK(g.find_edge(Vertex::internal({2, 2}), Vertex::internal({2, 1})) == nullptr);
    // (1,1) -> (3,1) skips the black (2,1)
    CHECK(g.find_edge(Vertex::internal({1, 1}), Vertex::internal({3, 1})) != nullptr);
}

TEST_CASE("acyclicity") {
    for (const Partition& shape : partitions_in_box(3, 3))
        for (const LeDiagram& d : enumerate_le_diagrams(shape))
            CHECK(topo_sort_succeeds(PostnikovGraph(d)));
}

TEST_CASE("enumerate_paths on the sample diagram") {
    PostnikovGraph g(sample_diagram());
    CHECK(enumerate_paths(g, 2, 1).size() == 2);
    CHECK(enumerate_paths(g, 3, 1).size() == 1);
    CHECK(enumerate_paths(g, 4, 2).empty());  // column right of row 4's last box
}

TEST_CASE("path weights") {
    PostnikovGraph g(sample_diagram());

    // pure vertical internal path has weight 1
    Path vertical{{Vertex::internal({3, 1}), Vertex::internal({4, 1}), Vertex::col_vertex(1)}};
    CHECK(path_weight(g, vertical) == TorusElement::one());

    // horizontal boundary prefix r_2 => (2,2) has weight t_{2,2}
    Path prefix{{Vertex::row_vertex(2), Vertex::internal({2, 3}), Vertex::internal({2, 2})}};
    CHECK(path_weight(g, prefix) == gen(2, 2));

    // internal horizontal path (1,4) => (1,1) telescopes
    Path horiz{{Vertex::internal({1, 4}), Vertex::internal({1, 3}), Vertex::internal({1, 2}),
                Vertex::internal({1, 1})}};
    CHECK(path_weight(g, horiz) == gen(1, 4, -1) * gen(1, 1));

    // the second summand of M[2,1] on the sample diagram
    Path long_path{{Vertex::row_vertex(2), Vertex::internal({2, 3}), Vertex::internal({3, 3}),
                    Vertex::internal({3, 2}), Vertex::internal({3, 1}), Vertex::internal({4, 1}),
                    Vertex::col_vertex(1)}};
    CHECK(path_weight(g, long_path) == gen(2, 3) * gen(3, 3, -1) * gen(3, 1));

    CHECK_THROWS_AS(
        path_weight(g, Path{{Vertex::internal({1, 1}), Vertex::internal({2, 2})}}),
        std::invalid_argument);
}

TEST_CASE("turns") {
    PostnikovGraph g(sample_diagram());

    // straight hook r_3 -> (3,3)... wait until c_3: r_3 => c_3 single gamma turn
    Path hook{{Vertex::row_vertex(3), Vertex::internal({3, 3}), Vertex::col_vertex(3)}};
    auto hook_turns = turns(g, hook);
    REQUIRE(hook_turns.size() == 1);
    CHECK(hook_turns[0].kind == Turn::Kind::gamma);
    CHECK(hook_turns[0].at == Box{3, 3});

    Path p{{Vertex::row_vertex(2), Vertex::internal({2, 3}), Vertex::internal({3, 3}),
            Vertex::internal({3, 2}), Vertex::col_vertex(2)}};
    auto ts = turns(g, p);
    REQUIRE(ts.size() == 3);
    CHECK(ts[0].kind == Turn::Kind::gamma);
    CHECK(ts[0].at == Box{2, 3});
    CHECK(ts[1].kind == Turn::Kind::bottom);
    CHECK(ts[1].at == Box{3, 3});
    CHECK(ts[2].kind == Turn::Kind::gamma);
    CHECK(ts[2].at == Box{3, 2});
}

TEST_CASE("turn formula equals edge products") {
    for (const Partition& shape : partitions_in_box(3, 3)) {
        for (const LeDiagram& d : enumerate_le_diagrams(shape)) {
            PostnikovGraph g(d);
            for (const Path& p : all_boundary_paths(g)) {
                auto ts = turns(g, p);
                CHECK(ts.size() % 2 == 1);  // odd, alternating, ends with gamma
                TorusElement formula = TorusElement::one();
                for (size_t k = 0; k < ts.size(); ++k) {
                    CHECK(ts[k].kind ==
                          (k % 2 == 0 ? Turn::Kind::gamma : Turn::Kind::bottom));
                    formula *= TorusElement::generator(ts[k].at, k % 2 == 0 ? 1 : -1);
                }
                CHECK(formula == path_weight(g, p));
            }
        }
    }
}

TEST_CASE("internal horizontal paths telescope") {
    // weight of (i, j2) => (i, j1) is the ordered product t_{i,j2}^{-1} t_{i,j1}
    for (const Partition& shape : partitions_in_box(3, 3)) {
        for (const LeDiagram& d : enumerate_le_diagrams(shape)) {
            PostnikovGraph g(d);
            for (int i = 1; i <= shape.rows(); ++i) {
                std::vector<Box> row_whites;
                for (int j = shape.part(i); j >= 1; --j)
                    if (d.is_white({i, j})) row_whites.push_back({i, j});
                for (size_t a = 0; a < row_whites.size(); ++a) {
                    for (size_t b = a + 1; b < row_whites.size(); ++b) {
                        Path p;
                        for (size_t k = a; k <= b; ++k)
                            p.vertices.push_back(Vertex::internal(row_whites[k]));
                        CHECK(path_weight(g, p) ==
                              TorusElement::generator(row_whites[a], -1) *
                                  TorusElement::generator(row_whites[b]));
                    }
                }
            }
        }
    }
}

TEST_CASE("disjoint system existence and enumeration on the sample diagram") {
    PostnikovGraph g(sample_diagram());
    CHECK(exists_disjoint_system(g, IndexSet({1, 4}), IndexSet({1, 4})));
    CHECK_FALSE(exists_disjoint_system(g, IndexSet({2, 3}), IndexSet({1, 2})));
    CHECK(exists_disjoint_system(g, IndexSet(), IndexSet()));
    CHECK_THROWS_AS(exists_disjoint_system(g, IndexSet({1}), IndexSet({1, 2})),
                    std::invalid_argument);

    auto systems = enumerate_disjoint_systems(g, IndexSet({1, 4}), IndexSet({1, 4}));
    REQUIRE(systems.size() == 1);
    auto [sigma, len] = system_permutation(systems[0]);
    CHECK(sigma == std::vector<int>{1, 0});  // the transposition (1 2)
    CHECK(len == 1);
    CHECK(systems[0].weight == gen(1, 4) * gen(4, 1));

    CHECK(enumerate_disjoint_systems(g, IndexSet({2, 3}), IndexSet({1, 2})).empty());

    auto empty_system = enumerate_disjoint_systems(g, IndexSet(), IndexSet());
    REQUIRE(empty_system.size() == 1);
    CHECK(empty_system[0].weight == TorusElement::one());
    CHECK(system_permutation(empty_system[0]).second == 0);
}

TEST_CASE("identity pairing has inversion count zero") {
    PostnikovGraph g(LeDiagram(Partition({2, 2}), {}));
    auto systems = enumerate_disjoint_systems(g, IndexSet({1, 2}), IndexSet({1, 2}));
    REQUIRE(!systems.empty());
    for (const auto& s : systems) {
        auto [sigma, len] = system_permutation(s);
        CHECK(sigma == std::vector<int>{0, 1});
        CHECK(len == 0);
    }
}

TEST_CASE("flow agrees with enumeration; disjoint systems share a permutation") {
    for (const Partition& shape : partitions_in_box(3, 3)) {
        for (const LeDiagram& d : enumerate_le_diagrams(shape)) {
            PostnikovGraph g(d);
            for (int t = 0; t <= std::min(shape.rows(), shape.cols()); ++t) {
                for (const IndexSet& I : all_index_sets(t, shape.rows())) {
                    for (const IndexSet& J : all_index_sets(t, shape.cols())) {
                        auto systems = enumerate_disjoint_systems(g, I, J);
                        CHECK(exists_disjoint_system(g, I, J) == !systems.empty());
                        // all vertex-disjoint systems share one permutation
                        for (size_t k = 1; k < systems.size(); ++k)
                            CHECK(systems[k].permutation == systems[0].permutation);
                    }
                }
            }
        }
    }
}

TEST_CASE("non-disjoint systems have an adjacent sharing pair") {
    for (const Partition& shape : partitions_in_box(2, 3)) {
        for (const LeDiagram& d : enumerate_le_diagrams(shape)) {
            PostnikovGraph g(d);
            int t = std::min(2, std::min(shape.rows(), shape.cols()));
            if (t < 2) continue;
            for (const IndexSet& I : all_index_sets(t, shape.rows())) {
                for (const IndexSet& J : all_index_sets(t, shape.cols())) {
                    for (const PathSystem& s : enumerate_all_systems(g, I, J)) {
                        if (s.vertex_disjoint) continue;
                        bool adjacent_share = false;
                        for (size_t k = 0; k + 1 < s.paths.size() && !adjacent_share; ++k) {
                            std::set<Vertex> seen(s.paths[k].vertices.begin(),
                                                  s.paths[k].vertices.end());
                            for (const Vertex& v : s.paths[k + 1].vertices)
                                if (seen.contains(v)) adjacent_share = true;
                        }
                        CHECK(adjacent_share);
                    }
                }
            }
        }
    }
}

TEST_CASE("distinct disjoint systems have distinct turn matrices") {
    for (const Partition& shape : partitions_in_box(3, 3)) {
        for (const LeDiagram& d : enumerate_le_diagrams(shape)) {
            PostnikovGraph g(d);
            for (int t = 1; t <= std::min(shape.rows(), shape.cols()); ++t) {
                for (const IndexSet& I : all_index_sets(t, shape.rows())) {
                    for (const IndexSet& J : all_index_sets(t, shape.cols())) {
                        auto systems = enumerate_disjoint_systems(g, I, J);
                        std::set<std::map<Box, int>> turn_matrices;
                        for (const PathSystem& s : systems) {
                            std::map<Box, int> tm;
                            for (const Path& p : s.paths)
                                for (const Turn& turn : turns(g, p))
                                    tm[turn.at] = turn.kind == Turn::Kind::gamma ? 1 : -1;
                            turn_matrices.insert(tm);
                        }
                        CHECK(turn_matrices.size() == systems.size());
                    }
                }
            }
        }
    }
}

TEST_CASE("horizontal edge commutation case table on random diagrams in a 4x4 box") {
    std::mt19937 rng(4242);
    auto shapes = partitions_in_box(4, 4);
    std::uniform_int_distribution<size_t> pick_shape(0, shapes.size() - 1);
    int tested = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const Partition& shape = shapes[pick_shape(rng)];
        auto diagrams = enumerate_le_diagrams(shape);
        std::uniform_int_distribution<size_t> pick_d(0, diagrams.size() - 1);
        PostnikovGraph g(diagrams[pick_d(rng)]);
        std::vector<const Edge*> horiz;
        for (const Edge& e : g.edges())
            if (e.horizontal) horiz.push_back(&e);
        for (const Edge* e : horiz) {
            for (const Edge* f : horiz) {
                if (e == f) continue;
                if (f->to.row > e->to.row) continue;  // need row(f) <= row(e)
                int c = commutation_exponent(*e, *f);
                TorusElement lhs = f->weight * e->weight;
                TorusElement rhs = TorusElement(LaurentInt::q_power(c)) * (e->weight * f->weight);
                CHECK(lhs == rhs);
                ++tested;
            }
        }
    }
    CHECK(tested > 100);
}

TEST_CASE("concatenable path weights") {
    for (const Partition& shape : partitions_in_box(3, 3)) {
        for (const LeDiagram& d : enumerate_le_diagrams(shape)) {
            PostnikovGraph g(d);
            // internal paths split from boundary paths at every vertex
            for (const Path& p : all_boundary_paths(g)) {
                for (size_t cut = 1; cut + 1 < p.vertices.size(); ++cut) {
                    Path K{{p.vertices.begin(), p.vertices.begin() + cut + 1}};
                    Path L{{p.vertices.begin() + cut, p.vertices.end()}};
                    TorusElement wk = path_weight(g, K), wl = path_weight(g, L);
                    auto has_horizontal = [&](const Path& x) {
                        for (size_t k = 0; k + 1 < x.vertices.size(); ++k)
                            if (g.find_edge(x.vertices[k], x.vertices[k + 1])->horizontal)
                                return true;
                        return false;
                    };
                    if (!has_horizontal(K) || !has_horizontal(L)) {
                        CHECK(wk * wl == wl * wk);
                    } else {
                        CHECK(wk * wl == TorusElement(LaurentInt::q_power(-1)) * (wl * wk));
                    }
                }
            }
        }
    }
}

TEST_CASE("dot export") {
    PostnikovGraph g(sample_diagram());
    std::string dot = g.to_dot();
    CHECK(dot.find("\"r_2\" -> \"b_2_3\" [label=\"t[2,3]\"]") != std::string::npos);
    CHECK(dot.find("\"b_1_4\" -> \"b_1_3\" [label=\"t[1,4]^-1t[1,3]\"]") != std::string::npos);
    CHECK(dot.find("\"b_4_1\" -> \"c_1\";") != std::string::npos);
    CHECK(dot.find("b_2_1") == std::string::npos);  // black box has no vertex
}

}  // TEST_SUITE
