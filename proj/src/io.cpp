#include "wildclass/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wildclass/error.hpp"

namespace wildclass {

namespace {

using nlohmann::json;

// line-oriented integer scanner that tracks line numbers for error messages
struct LineReader {
    std::istringstream in;
    int line_no = 0;
    std::istringstream line;

    explicit LineReader(const std::string& text) : in(text) {}

    bool next_line() {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            if (raw.find_first_not_of(" \t\r") == std::string::npos)
                continue;  // skip blank lines
            line = std::istringstream(raw);
            return true;
        }
        return false;
    }

    int read_int(const char* what) {
        int v;
        if (!(line >> v))
            throw error("parse",
                        "line " + std::to_string(line_no) + ": expected " + what);
        return v;
    }

    void expect_end() {
        std::string rest;
        if (line >> rest)
            throw error("parse", "line " + std::to_string(line_no) +
                                     ": trailing content '" + rest + "'");
    }

    [[noreturn]] void fail(const std::string& why) {
        throw error("parse", "line " + std::to_string(std::max(line_no, 1)) + ": " + why);
    }
};

int to_internal(LineReader& r, int v, int n, const char* what) {
    if (v < 1 || v > n)
        r.fail(std::string(what) + " " + std::to_string(v) + " outside 1.." +
               std::to_string(n));
    return v - 1;
}

}  // namespace

UndirectedGraph parse_graph(const std::string& text) {
    LineReader r(text);
    if (!r.next_line())
        r.fail("missing header 'n m'");
    int n = r.read_int("vertex count");
    int m = r.read_int("edge count");
    r.expect_end();
    if (n < 0 || m < 0)
        r.fail("negative header value");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int e = 0; e < m; ++e) {
        if (!r.next_line())
            r.fail("expected " + std::to_string(m) + " edges, file ended after " +
                   std::to_string(e));
        int u = to_internal(r, r.read_int("endpoint"), n, "vertex");
        int v = to_internal(r, r.read_int("endpoint"), n, "vertex");
        r.expect_end();
        if (u == v)
            r.fail("self-loop at vertex " + std::to_string(u + 1));
        auto norm = std::minmax(u, v);
        for (auto [pu, pv] : edges)
            if (std::make_pair(pu, pv) == std::make_pair(norm.first, norm.second))
                r.fail("duplicate edge {" + std::to_string(u + 1) + "," +
                       std::to_string(v + 1) + "}");
        edges.emplace_back(norm.first, norm.second);
    }
    if (r.next_line())
        r.fail("unexpected extra line");
    try {
        return UndirectedGraph(n, std::move(edges));
    } catch (const error& e) {
        throw error("parse", std::string(e.what()));
    }
}

ColoredDigraph parse_cdg(const std::string& text) {
    LineReader r(text);
    if (!r.next_line())
        r.fail("missing header 'N M'");
    int n = r.read_int("node count");
    int m = r.read_int("arc count");
    r.expect_end();
    if (n < 0 || m < 0)
        r.fail("negative header value");
    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (int e = 0; e < m; ++e) {
        if (!r.next_line())
            r.fail("expected " + std::to_string(m) + " arcs, file ended after " +
                   std::to_string(e));
        int u = to_internal(r, r.read_int("source"), n, "node");
        int v = to_internal(r, r.read_int("target"), n, "node");
        int c = r.read_int("color");
        r.expect_end();
        if (c < 1)
            r.fail("color must be >= 1");
        arcs.push_back({u, v, c});
    }
    if (r.next_line())
        r.fail("unexpected extra line");
    try {
        return ColoredDigraph(n, std::move(arcs));
    } catch (const error& e) {
        throw error("parse", std::string(e.what()));
    }
}

FiniteGroup parse_grp(const std::string& text) {
    LineReader r(text);
    if (!r.next_line())
        r.fail("missing header 'n'");
    int n = r.read_int("group order");
    r.expect_end();
    if (n < 1)
        r.fail("group order must be >= 1");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        if (!r.next_line())
            r.fail("expected " + std::to_string(n) + " table rows");
        for (int j = 0; j < n; ++j)
            table[i][j] = to_internal(r, r.read_int("table entry"), n, "element");
        r.expect_end();
    }
    if (r.next_line())
        r.fail("unexpected extra line");
    return FiniteGroup(std::move(table));
}

FinitePoset parse_lat(const std::string& text) {
    LineReader r(text);
    if (!r.next_line())
        r.fail("missing header 'N K'");
    int n = r.read_int("element count");
    int k = r.read_int("cover count");
    r.expect_end();
    if (n < 0 || k < 0)
        r.fail("negative header value");
    std::vector<std::pair<int, int>> covers;
    covers.reserve(k);
    for (int e = 0; e < k; ++e) {
        if (!r.next_line())
            r.fail("expected " + std::to_string(k) + " cover lines");
        int u = to_internal(r, r.read_int("element"), n, "element");
        int v = to_internal(r, r.read_int("element"), n, "element");
        r.expect_end();
        covers.emplace_back(u, v);
    }
    if (r.next_line())
        r.fail("unexpected extra line");

    // order = reflexive-transitive closure of the covers
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::vector<std::vector<int>> above(n);
    for (auto [u, v] : covers)
        above[u].push_back(v);
    for (int src = 0; src < n; ++src) {
        std::vector<int> todo{src};
        leq[src][src] = true;
        while (!todo.empty()) {
            int x = todo.back();
            todo.pop_back();
            for (int y : above[x])
                if (!leq[src][y]) {
                    leq[src][y] = true;
                    todo.push_back(y);
                }
        }
    }
    return FinitePoset(std::move(leq));  // cover cycles surface as antisymmetry errors
}

std::string serialize_graph(const UndirectedGraph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges())
        out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string serialize_cdg(const ColoredDigraph& d) {
    std::ostringstream out;
    out << d.num_nodes() << ' ' << d.num_arcs() << '\n';
    for (const Arc& a : d.arcs())
        out << a.src + 1 << ' ' << a.dst + 1 << ' ' << a.color << '\n';
    return out.str();
}

std::string serialize_grp(const FiniteGroup& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j)
            out << (j ? " " : "") << g.op(i, j) + 1;
        out << '\n';
    }
    return out.str();
}

std::string serialize_lat(const FinitePoset& p) {
    auto covers = p.covers();
    std::ostringstream out;
    out << p.size() << ' ' << covers.size() << '\n';
    for (auto [u, v] : covers)
        out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string serialize_lat(const FiniteLattice& l) {
    return serialize_lat(l.order());
}

// --- JSON mirrors ------------------------------------------------------------

std::string json_graph(const UndirectedGraph& g) {
    json j;
    j["type"] = "graph";
    j["n"] = g.num_vertices();
    auto& edges = j["edges"] = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u + 1, v + 1});
    return j.dump(2) + "\n";
}

std::string json_cdg(const ColoredDigraph& d) {
    json j;
    j["type"] = "cdigraph";
    j["n"] = d.num_nodes();
    auto& arcs = j["arcs"] = json::array();
    for (const Arc& a : d.arcs())
        arcs.push_back({a.src + 1, a.dst + 1, a.color});
    if (!d.node_labels().empty()) {
        json labels = json::object();
        for (const auto& [node, label] : d.node_labels())
            labels[std::to_string(node + 1)] = label;
        j["labels"] = labels;
    }
    return j.dump(2) + "\n";
}

std::string json_grp(const FiniteGroup& g) {
    json j;
    j["type"] = "group";
    j["n"] = g.order();
    auto& table = j["table"] = json::array();
    for (int i = 0; i < g.order(); ++i) {
        json row = json::array();
        for (int jj = 0; jj < g.order(); ++jj)
            row.push_back(g.op(i, jj) + 1);
        table.push_back(row);
    }
    return j.dump(2) + "\n";
}

std::string json_lat(const FinitePoset& p) {
    json j;
    j["type"] = "lattice";
    j["n"] = p.size();
    auto& covers = j["covers"] = json::array();
    for (auto [u, v] : p.covers())
        covers.push_back({u + 1, v + 1});
    return j.dump(2) + "\n";
}

namespace {

json parse_json_or_fail(const std::string& text, const char* expected_type) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw error("parse", "invalid JSON");
    if (!j.is_object() || j.value("type", "") != expected_type)
        throw error("parse", std::string("expected a JSON object with type '") +
                                 expected_type + "'");
    return j;
}

}  // namespace

UndirectedGraph parse_graph_json(const std::string& text) {
    json j = parse_json_or_fail(text, "graph");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
    return UndirectedGraph(n, std::move(edges));
}

ColoredDigraph parse_cdg_json(const std::string& text) {
    json j = parse_json_or_fail(text, "cdigraph");
    int n = j.at("n").get<int>();
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs"))
        arcs.push_back({a.at(0).get<int>() - 1, a.at(1).get<int>() - 1, a.at(2).get<int>()});
    std::map<int, std::string> labels;
    if (j.contains("labels"))
        for (const auto& [key, val] : j.at("labels").items())
            labels[std::stoi(key) - 1] = val.get<std::string>();
    return ColoredDigraph(n, std::move(arcs), std::move(labels));
}

FiniteGroup parse_grp_json(const std::string& text) {
    json j = parse_json_or_fail(text, "group");
    int n = j.at("n").get<int>();
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) {
        std::vector<int> r;
        for (const auto& v : row)
            r.push_back(v.get<int>() - 1);
        table.push_back(std::move(r));
    }
    if (static_cast<int>(table.size()) != n)
        throw error("parse", "table size differs from declared n");
    return FiniteGroup(std::move(table));
}

FinitePoset parse_lat_json(const std::string& text) {
    json j = parse_json_or_fail(text, "lattice");
    std::ostringstream lat;
    lat << j.at("n").get<int>() << ' ' << j.at("covers").size() << '\n';
    for (const auto& c : j.at("covers"))
        lat << c.at(0).get<int>() << ' ' << c.at(1).get<int>() << '\n';
    return parse_lat(lat.str());
}

// --- DOT export ---------------------------------------------------------------

std::string dot_graph(const UndirectedGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.num_vertices(); ++v)
        out << "  " << v + 1 << ";\n";
    for (auto [u, v] : g.edges())
        out << "  " << u + 1 << " -- " << v + 1 << ";\n";
    out << "}\n";
    return out.str();
}

std::string dot_cdg(const ColoredDigraph& d) {
    std::ostringstream out;
    out << "digraph D {\n";
    for (int v = 0; v < d.num_nodes(); ++v) {
        out << "  " << v + 1;
        auto it = d.node_labels().find(v);
        if (it != d.node_labels().end())
            out << " [label=\"" << it->second << "\"]";
        out << ";\n";
    }
    for (const Arc& a : d.arcs())
        out << "  " << a.src + 1 << " -> " << a.dst + 1 << " [color=\"" << a.color
            << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string dot_hasse(const FinitePoset& p) {
    std::ostringstream out;
    out << "digraph H {\n  rankdir=BT;\n";
    for (int v = 0; v < p.size(); ++v)
        out << "  " << v + 1 << ";\n";
    for (auto [lo, hi] : p.covers())
        out << "  " << lo + 1 << " -> " << hi + 1 << ";\n";
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error("io", "cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw error("io", "cannot write file '" + path + "'");
    out << content;
}

}  // namespace wildclass
