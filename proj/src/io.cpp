#include "tww/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tww {

using ordered_json = nlohmann::ordered_json;

namespace {

// Collects "u v" pairs, adding edges with duplicate tolerance.
void add_edge_checked(Graph& g, int u, int v, const std::string& where, bool allow_dup) {
    if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices())
        throw ParseError(where + ": vertex out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw ParseError(where + ": loop at vertex " + std::to_string(u));
    if (g.has_edge(u, v)) {
        if (allow_dup) return;
        throw ParseError(where + ": duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    g.add_edge(u, v);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    Graph g;
    int seen = 0, lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("edge list line " + std::to_string(lineno) + ": expected \"n m\" header");
            g = Graph(n);
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) throw ParseError("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
        add_edge_checked(g, u, v, "edge list line " + std::to_string(lineno), false);
        ++seen;
    }
    if (n < 0) throw ParseError("edge list: empty input");
    if (seen != m)
        throw ParseError("edge list: header claims " + std::to_string(m) + " edges, found " + std::to_string(seen));
    g.sort_adjacency();
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph parse_graph6(const std::string& raw) {
    std::string line = raw;
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw ParseError("graph6: empty input");
    size_t pos = 0;
    auto byte = [&](size_t i) -> int {
        if (i >= line.size()) throw ParseError("graph6: truncated input");
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: invalid character at position " + std::to_string(i));
        return c - 63;
    };
    long long n;
    if (byte(0) == 63) {  // raw '~': extended sizes
        if (byte(1) == 63) throw ParseError("graph6: 36-bit sizes not supported");
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    if (n > 100000) throw ParseError("graph6: implausibly large n");
    Graph g(static_cast<int>(n));
    long long bits = n * (n - 1) / 2;
    long long need = (bits + 5) / 6;
    if (static_cast<long long>(line.size()) - static_cast<long long>(pos) != need)
        throw ParseError("graph6: body length mismatch for n = " + std::to_string(n));
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    g.sort_adjacency();
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.num_vertices();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_pace_gr(std::istream& in) {
    std::string line;
    int n = -1, m = -1, lineno = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, tw;
            if (!(ls >> p >> tw >> n >> m) || tw != "tw")
                throw ParseError("gr line " + std::to_string(lineno) + ": bad problem line");
            g = Graph(n);
            continue;
        }
        if (n < 0) throw ParseError("gr line " + std::to_string(lineno) + ": edge before problem line");
        int u, v;
        if (!(ls >> u >> v)) throw ParseError("gr line " + std::to_string(lineno) + ": expected \"u v\"");
        add_edge_checked(g, u - 1, v - 1, "gr line " + std::to_string(lineno), true);
    }
    if (n < 0) throw ParseError("gr: missing problem line");
    g.sort_adjacency();
    return g;
}

void write_pace_gr(std::ostream& out, const Graph& g) {
    out << "p tw " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

TreeDecomposition parse_pace_td(std::istream& in) {
    std::string line;
    TreeDecomposition td;
    int bags = -1, lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 's') {
            std::string s, kind;
            int w, n;
            if (!(ls >> s >> kind >> bags >> w >> n) || kind != "td")
                throw ParseError("td line " + std::to_string(lineno) + ": bad solution line");
            td.bags.assign(bags, {});
            continue;
        }
        if (bags < 0) throw ParseError("td line " + std::to_string(lineno) + ": content before solution line");
        if (line[0] == 'b') {
            char b;
            int id;
            ls >> b >> id;
            if (!ls || id < 1 || id > bags)
                throw ParseError("td line " + std::to_string(lineno) + ": bad bag id");
            int v;
            while (ls >> v) td.bags[id - 1].push_back(v - 1);
            std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
            continue;
        }
        int a, b;
        if (!(std::istringstream(line) >> a >> b))
            throw ParseError("td line " + std::to_string(lineno) + ": expected tree edge");
        if (a < 1 || a > bags || b < 1 || b > bags)
            throw ParseError("td line " + std::to_string(lineno) + ": tree edge out of range");
        td.tree_edges.emplace_back(a - 1, b - 1);
    }
    if (bags < 0) throw ParseError("td: missing solution line");
    return td;
}

void write_pace_td(std::ostream& out, const TreeDecomposition& td, int n) {
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

namespace {

ordered_json parse_json(const std::string& text, const char* what) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(std::string(what) + ": malformed JSON");
    return j;
}

int require_int(const ordered_json& j, const char* field, const char* what) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError(std::string(what) + ": missing integer field \"" + field + "\"");
    return j[field].get<int>();
}

}  // namespace

Graph graph_from_json(const std::string& text) {
    ordered_json j = parse_json(text, "graph json");
    int n = require_int(j, "n", "graph json");
    if (n < 0) throw ParseError("graph json: negative n");
    Graph g(n);
    if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("graph json: missing \"edges\" array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("graph json: edge must be [u, v]");
        add_edge_checked(g, e[0].get<int>(), e[1].get<int>(), "graph json", false);
    }
    g.sort_adjacency();
    return g;
}

std::string graph_to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.num_vertices();
    j["edges"] = ordered_json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

ContractionSequence sequence_from_json(const std::string& text) {
    ordered_json j = parse_json(text, "sequence json");
    ContractionSequence seq;
    seq.n = require_int(j, "n", "sequence json");
    if (j.contains("claimed_width") && !j["claimed_width"].is_null())
        seq.claimed_width = j["claimed_width"].get<int>();
    if (!j.contains("steps") || !j["steps"].is_array())
        throw ParseError("sequence json: missing \"steps\" array");
    for (const auto& s : j["steps"]) {
        ContractionStep st;
        st.u = require_int(s, "u", "sequence step");
        st.v = require_int(s, "v", "sequence step");
        st.w = require_int(s, "w", "sequence step");
        seq.steps.push_back(st);
    }
    return seq;
}

std::string sequence_to_json(const ContractionSequence& seq) {
    ordered_json j;
    j["n"] = seq.n;
    if (seq.claimed_width)
        j["claimed_width"] = *seq.claimed_width;
    else
        j["claimed_width"] = nullptr;
    j["steps"] = ordered_json::array();
    for (const auto& s : seq.steps) {
        ordered_json st;
        st["u"] = s.u;
        st["v"] = s.v;
        st["w"] = s.w;
        j["steps"].push_back(std::move(st));
    }
    return j.dump();
}

BranchDecomposition branch_decomposition_from_json(const std::string& text) {
    ordered_json j = parse_json(text, "branch decomposition json");
    BranchDecomposition bd;
    bd.num_nodes = require_int(j, "nodes", "branch decomposition json");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw ParseError("branch decomposition json: missing \"edges\"");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("branch decomposition json: tree edge must be [a, b]");
        bd.tree_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    if (!j.contains("leaf_map") || !j["leaf_map"].is_array())
        throw ParseError("branch decomposition json: missing \"leaf_map\"");
    for (const auto& l : j["leaf_map"]) {
        int leaf = require_int(l, "leaf", "leaf_map entry");
        if (!l.contains("edge") || !l["edge"].is_array() || l["edge"].size() != 2)
            throw ParseError("branch decomposition json: leaf_map entry needs \"edge\": [u, v]");
        bd.leaf_map.push_back({leaf, {l["edge"][0].get<int>(), l["edge"][1].get<int>()}});
    }
    return bd;
}

std::string branch_decomposition_to_json(const BranchDecomposition& bd) {
    ordered_json j;
    j["nodes"] = bd.num_nodes;
    j["edges"] = ordered_json::array();
    for (auto [a, b] : bd.tree_edges) j["edges"].push_back({a, b});
    j["leaf_map"] = ordered_json::array();
    for (const auto& [leaf, e] : bd.leaf_map) {
        ordered_json l;
        l["leaf"] = leaf;
        l["edge"] = {e.first, e.second};
        j["leaf_map"].push_back(std::move(l));
    }
    return j.dump();
}

RotationSystem rotation_from_json(const std::string& text) {
    ordered_json j = parse_json(text, "rotation json");
    RotationSystem rs;
    if (!j.contains("rotation") || !j["rotation"].is_array())
        throw ParseError("rotation json: missing \"rotation\" array");
    for (const auto& r : j["rotation"]) {
        if (!r.is_array()) throw ParseError("rotation json: rotation entry must be an array");
        rs.rotation.push_back(r.get<std::vector<int>>());
    }
    rs.outer_face = require_int(j, "outer_face", "rotation json");
    return rs;
}

std::string rotation_to_json(const RotationSystem& rs) {
    ordered_json j;
    j["rotation"] = ordered_json::array();
    for (const auto& r : rs.rotation) j["rotation"].push_back(r);
    j["outer_face"] = rs.outer_face;
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

Graph load_graph(const std::string& path) {
    std::string text = read_file(path);
    auto ends_with = [&](const char* suf) {
        std::string s(suf);
        return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".g6") || text.rfind(">>graph6<<", 0) == 0) return parse_graph6(text);
    if (ends_with(".json")) return graph_from_json(text);
    if (ends_with(".gr")) {
        std::istringstream in(text);
        return parse_pace_gr(in);
    }
    // Sniff: JSON object, PACE header, else edge list.
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') return graph_from_json(text);
    if (i != std::string::npos && (text[i] == 'p' || text[i] == 'c')) {
        std::istringstream in(text);
        return parse_pace_gr(in);
    }
    std::istringstream in(text);
    return parse_edge_list(in);
}

}  // namespace tww
