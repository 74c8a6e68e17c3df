#include "graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cfree {

namespace {

// Above this order we skip the bit matrix and fall back to binary search on
// adjacency lists.
constexpr int kBitMatrixLimit = 4096;
constexpr int kVertexLimit = 50'000'000;

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

} // namespace

Edge make_edge(int u, int v) {
    if (u == v) bad("self-loop {" + std::to_string(u) + "," + std::to_string(v) + "}");
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
    if (vertex_count < 0) bad("negative vertex count");
    if (vertex_count > kVertexLimit) bad("vertex count " + std::to_string(vertex_count) + " exceeds allocation limit");
    for (auto& e : edges) {
        e = make_edge(e.first, e.second);
        if (e.first < 0 || e.second >= n_)
            bad("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                "} out of range for " + std::to_string(n_) + " vertices");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) bad("duplicate edge");
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    if (n_ <= kBitMatrixLimit) {
        stride_ = (n_ + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n_) * stride_, 0);
        for (const auto& [u, v] : edges_) {
            bits_[static_cast<std::size_t>(u) * stride_ + v / 64] |= 1ull << (v % 64);
            bits_[static_cast<std::size_t>(v) * stride_ + u / 64] |= 1ull << (u % 64);
        }
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v)) bad("vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    if (!bits_.empty())
        return (bits_[static_cast<std::size_t>(u) * stride_ + v / 64] >> (v % 64)) & 1;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph clique(int n) {
    if (n < 1) bad("clique order must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) bad("cycle length must be >= 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int u = 0; u < n; ++u) edges.push_back(make_edge(u, (u + 1) % n));
    return Graph(n, std::move(edges));
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        bad("edge {" + std::to_string(u) + "," + std::to_string(v) + "} not present");
    Edge target = make_edge(u, v);
    std::vector<Edge> edges;
    edges.reserve(g.edges().size() - 1);
    for (const auto& e : g.edges())
        if (e != target) edges.push_back(e);
    return Graph(g.vertex_count(), std::move(edges));
}

Graph attach_at(const Graph& g, int v, const PointedGraph& s) {
    if (!g.has_vertex(v)) bad("attach point " + std::to_string(v) + " out of range");
    if (!s.graph.has_vertex(s.basepoint)) bad("basepoint out of range");
    int base = g.vertex_count();
    // Non-basepoint vertices of s keep their relative order and take indices
    // base, base+1, ...; the basepoint maps onto v.
    auto remap = [&](int w) {
        if (w == s.basepoint) return v;
        return base + (w < s.basepoint ? w : w - 1);
    };
    std::vector<Edge> edges = g.edges();
    for (const auto& [a, b] : s.graph.edges()) edges.push_back(make_edge(remap(a), remap(b)));
    return Graph(base + s.graph.vertex_count() - 1, std::move(edges));
}

Graph disjoint_union(const std::vector<Graph>& gs) {
    int total = 0;
    std::vector<Edge> edges;
    for (const auto& g : gs) {
        for (const auto& [u, v] : g.edges()) edges.push_back({u + total, v + total});
        total += g.vertex_count();
    }
    return Graph(total, std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (!g.has_vertex(v)) bad("induced subgraph vertex out of range");
        if (index[v] != -1) bad("induced subgraph vertex repeated");
        if (i > 0 && vertices[i - 1] > v) bad("induced subgraph vertices must be ascending");
        index[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (index[u] != -1 && index[v] != -1) edges.push_back(make_edge(index[u], index[v]));
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (int w : g.neighbors(u))
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() == 0 || connected_components(g).size() == 1;
}

bool is_complete(const Graph& g) {
    long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

ParsedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_n = false;
    int n = 0;
    std::vector<Edge> edges;
    std::optional<int> basepoint;

    auto fail = [&](const std::string& msg) -> void {
        throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "n") {
            if (have_n) fail("repeated 'n' line");
            if (!(ls >> n) || n < 0) fail("malformed vertex count");
            have_n = true;
        } else if (tag == "e") {
            if (!have_n) fail("edge before 'n' line");
            int u, v;
            if (!(ls >> u >> v)) fail("malformed edge line");
            if (u < 0 || v < 0 || u >= n || v >= n) fail("edge endpoint out of range");
            if (u == v) fail("self-loop");
            Edge e = make_edge(u, v);
            if (std::find(edges.begin(), edges.end(), e) != edges.end()) fail("duplicate edge");
            edges.push_back(e);
        } else if (tag == "p") {
            if (!have_n) fail("basepoint before 'n' line");
            if (basepoint) fail("repeated 'p' line");
            int b;
            if (!(ls >> b)) fail("malformed basepoint line");
            if (b < 0 || b >= n) fail("basepoint out of range");
            basepoint = b;
        } else {
            fail("unrecognized line tag '" + tag + "'");
        }
        std::string rest;
        if (ls >> rest && rest[0] != '#') fail("trailing tokens");
    }
    if (!have_n) {
        ++lineno;
        fail("missing 'n' line");
    }
    return ParsedGraph{Graph(n, std::move(edges)), basepoint};
}

std::string serialize_graph(const Graph& g, std::optional<int> basepoint) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    if (basepoint) out << "p " << *basepoint << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

} // namespace cfree
