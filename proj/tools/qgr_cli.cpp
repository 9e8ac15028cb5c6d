// Batch CLI over the library: enumeration, membership, necklaces, posets,
// graph export and the verification suites. Output is newline-delimited
// JSON unless --dot or --text is given. Exit codes: 0 success, 1
// verification failure, 2 input error.
#include "qgr/json_io.hpp"
#include "qgr/positroid.hpp"
#include "qgr/postnikov.hpp"
#include "qgr/qmatrix.hpp"
#include "qgr/qtorus.hpp"
#include "qgr/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace qgr;

namespace {

HPrimeKey load_key(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open diagram file: " + path);
    Json j;
    in >> j;
    return key_from_json(j);
}

std::string witness_to_json_entry(const PathSystem& system) {
    Json paths = Json::array();
    for (const Path& p : system.paths) {
        Json names = Json::array();
        for (const Vertex& v : p.vertices) names.push_back(v.name());
        paths.push_back(names);
    }
    return paths.dump();
}

int run_enumerate(int m, int n, const std::string& gamma_arg) {
    std::vector<HPrimeKey> keys;
    if (gamma_arg.empty()) {
        keys = enumerate_hprime_keys(m, n);
    } else {
        IndexSet gamma = parse_index_list(gamma_arg);
        Partition shape = gamma_to_partition(m, n, gamma);
        for (LeDiagram& d : enumerate_le_diagrams(shape))
            keys.push_back(make_hprime_key(m, n, gamma, std::move(d)));
    }
    for (const HPrimeKey& key : keys) std::cout << key_to_json(key).dump() << "\n";
    return 0;
}

int run_graph(const std::string& diagram_path, bool dot) {
    HPrimeKey key = load_key(diagram_path);
    PostnikovGraph g(key.diagram);
    if (dot) {
        std::cout << g.to_dot();
    } else {
        for (const Edge& e : g.edges()) {
            Json j;
            j["from"] = e.from.name();
            j["to"] = e.to.name();
            j["weight"] = e.weight.to_string();
            std::cout << j.dump() << "\n";
        }
    }
    return 0;
}

int run_pathmatrix(const std::string& diagram_path, bool text) {
    HPrimeKey key = load_key(diagram_path);
    TorusMatrix M = path_matrix(key.diagram);
    for (size_t i = 0; i < M.size(); ++i) {
        for (size_t j = 0; j < M[i].size(); ++j) {
            if (text) {
                std::cout << "M[" << i + 1 << "," << j + 1 << "] = " << M[i][j].to_string()
                          << "\n";
            } else {
                Json out;
                out["row"] = i + 1;
                out["col"] = j + 1;
                out["entry"] = M[i][j].to_string();
                std::cout << out.dump() << "\n";
            }
        }
    }
    return 0;
}

int run_minor(const std::string& diagram_path, const std::string& rows, const std::string& cols,
              bool text) {
    HPrimeKey key = load_key(diagram_path);
    IndexSet I = parse_index_list(rows);
    IndexSet J = parse_index_list(cols);
    TorusElement value = path_matrix_minor(path_matrix(key.diagram), I, J);
    if (text) {
        std::cout << value.to_string() << "\n"
                  << (value.is_zero() ? "vanishing=true" : "vanishing=false") << "\n";
    } else {
        Json out;
        out["rows"] = I.elems();
        out["cols"] = J.elems();
        out["value"] = value.to_string();
        out["vanishing"] = value.is_zero();
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int run_member(const std::string& diagram_path, const std::string& alpha_arg, bool text) {
    HPrimeKey key = load_key(diagram_path);
    IndexSet alpha = parse_index_list(alpha_arg);
    bool in_ideal = member(key, alpha);
    Json out;
    out["alpha"] = alpha.elems();
    out["member"] = in_ideal;
    // witness: a vertex-disjoint system showing alpha survives (not in P)
    if (!in_ideal && !(alpha == key.gamma)) {
        AlphaDecomposition d = alpha_decompose(key.gamma, alpha);
        std::vector<int> complement;
        for (int x = 1; x <= key.n; ++x)
            if (!key.gamma.contains(x)) complement.push_back(x);
        std::vector<int> I, J;
        for (int v : d.removed)
            I.push_back(static_cast<int>(std::lower_bound(key.gamma.elems().begin(),
                                                          key.gamma.elems().end(), v) -
                                         key.gamma.elems().begin()) +
                        1);
        for (int v : d.added) {
            int j = static_cast<int>(std::lower_bound(complement.begin(), complement.end(), v) -
                                     complement.begin()) +
                    1;
            J.push_back(key.n - key.m + 1 - j);
        }
        std::sort(J.begin(), J.end());
        PostnikovGraph g(key.diagram);
        auto systems = enumerate_disjoint_systems(g, IndexSet(I), IndexSet(J));
        if (!systems.empty()) out["witness"] = Json::parse(witness_to_json_entry(systems[0]));
    }
    if (text) {
        std::cout << (in_ideal ? "member=true" : "member=false") << "\n";
        if (out.contains("witness")) std::cout << "witness=" << out["witness"].dump() << "\n";
    } else {
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int run_positroid(const std::string& diagram_path) {
    HPrimeKey key = load_key(diagram_path);
    Json out;
    out["plucker_set"] = plucker_set_to_json(plucker_set(key));
    out["bases"] = plucker_set_to_json(positroid_bases(key));
    std::cout << out.dump() << "\n";
    return 0;
}

int run_necklace(const std::string& diagram_path) {
    HPrimeKey key = load_key(diagram_path);
    std::cout << necklace_to_json(necklace_of(key)).dump() << "\n";
    return 0;
}

int run_separating(const std::string& diagram_path) {
    HPrimeKey key = load_key(diagram_path);
    Json arr = Json::array();
    for (const IndexSet& entry : separating_set(key)) arr.push_back(index_set_to_json(entry));
    std::cout << arr.dump() << "\n";
    return 0;
}

int run_polynormal(const std::string& diagram_path, bool dedupe) {
    HPrimeKey key = load_key(diagram_path);
    Json arr = Json::array();
    for (const IndexSet& entry : polynormal_sequence(key, dedupe))
        arr.push_back(index_set_to_json(entry));
    std::cout << arr.dump() << "\n";
    return 0;
}

int run_poset(int m, int n, bool dot) {
    HPrimePoset poset = hprime_poset(m, n);
    if (dot)
        std::cout << poset_to_dot(poset);
    else
        std::cout << poset_to_json(poset).dump() << "\n";
    return 0;
}

int run_verify(const std::string& suite, int m, int n) {
    SuiteResult result;
    if (suite == "lgv")
        result = verify_lgv(m, n - m);
    else if (suite == "restore")
        result = verify_restore(m, n - m);
    else if (suite == "laplace")
        result = verify_laplace(m, n - m);
    else if (suite == "plucker")
        result = verify_plucker(m, n);
    else if (suite == "ore")
        result = verify_ore(m, n - m);
    else if (suite == "necklace")
        result = verify_necklace(m, n);
    else if (suite == "matroid")
        result = verify_matroid(m, n);
    else if (suite == "poset")
        result = verify_poset(m, n);
    else
        throw std::invalid_argument("unknown suite: " + suite);
    std::cout << result.summary() << "\n";
    return result.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of quantum grassmannian torus-invariant primes"};
    app.require_subcommand(1);

    int m = 0, n = 0;
    std::string diagram_path, gamma_arg, rows_arg, cols_arg, alpha_arg, suite_arg;
    bool dot = false, text = false, dedupe = false;

    auto* enumerate = app.add_subcommand("enumerate", "H-prime keys as JSON lines");
    enumerate->add_option("--m", m)->required();
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--gamma", gamma_arg);

    auto* graph = app.add_subcommand("graph", "Postnikov graph of a diagram");
    graph->add_option("--diagram", diagram_path)->required();
    graph->add_flag("--dot", dot);

    auto* pathmatrix = app.add_subcommand("pathmatrix", "path matrix entries");
    pathmatrix->add_option("--diagram", diagram_path)->required();
    pathmatrix->add_flag("--text", text);

    auto* minor = app.add_subcommand("minor", "pseudo quantum minor of the path matrix");
    minor->add_option("--diagram", diagram_path)->required();
    minor->add_option("--rows", rows_arg)->required();
    minor->add_option("--cols", cols_arg)->required();
    minor->add_flag("--text", text);

    auto* member_cmd = app.add_subcommand("member", "H-prime membership of a Pluecker coordinate");
    member_cmd->add_option("--diagram", diagram_path)->required();
    member_cmd->add_option("--alpha", alpha_arg)->required();
    member_cmd->add_flag("--text", text);

    auto* positroid_cmd = app.add_subcommand("positroid", "Pluecker set and positroid bases");
    positroid_cmd->add_option("--diagram", diagram_path)->required();

    auto* necklace_cmd = app.add_subcommand("necklace", "Grassmann necklace");
    necklace_cmd->add_option("--diagram", diagram_path)->required();

    auto* separating_cmd = app.add_subcommand("separating", "separating set generators");
    separating_cmd->add_option("--diagram", diagram_path)->required();

    auto* polynormal_cmd = app.add_subcommand("polynormal", "polynormal generating sequence");
    polynormal_cmd->add_option("--diagram", diagram_path)->required();
    polynormal_cmd->add_flag("--dedupe", dedupe);

    auto* poset_cmd = app.add_subcommand("poset", "H-prime containment poset");
    poset_cmd->add_option("--m", m)->required();
    poset_cmd->add_option("--n", n)->required();
    poset_cmd->add_flag("--dot", dot);

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite_arg)->required();
    verify_cmd->add_option("--m", m)->required();
    verify_cmd->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(m, n, gamma_arg);
        if (graph->parsed()) return run_graph(diagram_path, dot);
        if (pathmatrix->parsed()) return run_pathmatrix(diagram_path, text);
        if (minor->parsed()) return run_minor(diagram_path, rows_arg, cols_arg, text);
        if (member_cmd->parsed()) return run_member(diagram_path, alpha_arg, text);
        if (positroid_cmd->parsed()) return run_positroid(diagram_path);
        if (necklace_cmd->parsed()) return run_necklace(diagram_path);
        if (separating_cmd->parsed()) return run_separating(diagram_path);
        if (polynormal_cmd->parsed()) return run_polynormal(diagram_path, dedupe);
        if (poset_cmd->parsed()) return run_poset(m, n, dot);
        if (verify_cmd->parsed()) return run_verify(suite_arg, m, n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Json::parse_error& e) {
        std::cerr << "input error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
