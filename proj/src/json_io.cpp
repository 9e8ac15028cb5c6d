#include "qgr/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace qgr {

Json key_to_json(const HPrimeKey& key) {
    Json j;
    j["m"] = key.m;
    j["n"] = key.n;
    j["gamma"] = key.gamma.elems();
    Json black = Json::array();
    for (const Box& b : key.diagram.black()) black.push_back({b.row, b.col});
    j["black"] = black;
    return j;
}

HPrimeKey key_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("gamma") ||
        !j.contains("black"))
        throw std::invalid_argument("keyed diagram: expected {m, n, gamma, black}");
    int m = j.at("m").get<int>();
    int n = j.at("n").get<int>();
    IndexSet gamma(j.at("gamma").get<std::vector<int>>());
    if (!gamma.valid_for(m, n))
        throw std::invalid_argument("keyed diagram: gamma is not an m-subset of [1,n]");
    Partition shape = gamma_to_partition(m, n, gamma);
    std::set<Box> black;
    for (const Json& pair : j.at("black")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("keyed diagram: black entries must be [row, col] pairs");
        black.insert(Box{pair[0].get<int>(), pair[1].get<int>()});
    }
    if (!validate_le(shape, black))
        throw std::invalid_argument("keyed diagram: Le condition violated");
    return make_hprime_key(m, n, gamma, LeDiagram(shape, black));
}

Json index_set_to_json(const IndexSet& s) { return Json(s.elems()); }

IndexSet index_set_from_json(const Json& j) { return IndexSet(j.get<std::vector<int>>()); }

Json plucker_set_to_json(const PluckerSet& pset) {
    Json arr = Json::array();
    for (const IndexSet& s : pset) arr.push_back(index_set_to_json(s));
    return arr;
}

PluckerSet plucker_set_from_json(const Json& j) {
    PluckerSet out;
    for (const Json& item : j) out.insert(index_set_from_json(item));
    return out;
}

Json necklace_to_json(const GrassmannNecklace& neck) {
    Json arr = Json::array();
    for (const IndexSet& s : neck) arr.push_back(index_set_to_json(s));
    return arr;
}

GrassmannNecklace necklace_from_json(const Json& j) {
    GrassmannNecklace out;
    for (const Json& item : j) out.push_back(index_set_from_json(item));
    return out;
}

Json poset_to_json(const HPrimePoset& poset) {
    Json nodes = Json::array();
    for (const HPrimeKey& key : poset.keys) nodes.push_back(key_to_json(key));
    Json top;
    top["m"] = poset.m;
    top["n"] = poset.n;
    top["irrelevant"] = true;
    nodes.push_back(top);
    Json edges = Json::array();
    for (auto [a, b] : poset.hasse_edges) edges.push_back({a, b});
    Json j;
    j["nodes"] = nodes;
    j["hasse_edges"] = edges;
    return j;
}

HPrimePoset poset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("hasse_edges"))
        throw std::invalid_argument("poset: expected {nodes, hasse_edges}");
    const Json& nodes = j.at("nodes");
    if (nodes.empty() || !nodes.back().value("irrelevant", false))
        throw std::invalid_argument("poset: the last node must be the irrelevant top");
    HPrimePoset poset;
    poset.m = nodes.back().at("m").get<int>();
    poset.n = nodes.back().at("n").get<int>();
    for (size_t k = 0; k + 1 < nodes.size(); ++k) {
        HPrimeKey key = key_from_json(nodes[k]);
        if (key.m != poset.m || key.n != poset.n)
            throw std::invalid_argument("poset: node with mismatched (m,n)");
        poset.keys.push_back(std::move(key));
    }
    poset.top_index = static_cast<int>(poset.keys.size());
    for (const Json& edge : j.at("hasse_edges")) {
        if (!edge.is_array() || edge.size() != 2)
            throw std::invalid_argument("poset: hasse edges must be [a, b] pairs");
        int a = edge[0].get<int>(), b = edge[1].get<int>();
        if (a < 0 || b < 0 || a > poset.top_index || b > poset.top_index)
            throw std::invalid_argument("poset: hasse edge references a missing node");
        poset.hasse_edges.emplace_back(a, b);
    }
    return poset;
}

std::string poset_to_dot(const HPrimePoset& poset) {
    std::ostringstream os;
    os << "digraph hasse {\n";
    auto label = [&](int idx) -> std::string {
        if (idx == poset.top_index) return "irrelevant";
        const HPrimeKey& key = poset.keys[idx];
        std::ostringstream ls;
        ls << "g";
        for (int x : key.gamma.elems()) ls << x;
        ls << "|";
        bool first = true;
        for (const Box& b : key.diagram.black()) {
            if (!first) ls << " ";
            ls << b.row << "," << b.col;
            first = false;
        }
        return ls.str();
    };
    for (int idx = 0; idx <= static_cast<int>(poset.keys.size()); ++idx)
        os << "  n" << idx << " [label=\"" << label(idx) << "\"];\n";
    for (auto [a, b] : poset.hasse_edges) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

IndexSet parse_index_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("index list: trailing junk in entry");
        values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument("index list: empty");
    return IndexSet(values);
}

}  // namespace qgr
