#include "blocks.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cfree {

namespace {

void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g)) throw std::invalid_argument(std::string(who) + ": graph must be connected");
}

} // namespace

BlockDecomposition decompose(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, 0), low(n, 0);
    std::vector<char> cut(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    auto flush_block = [&](const Edge& top) {
        std::vector<int> verts;
        while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == top) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blocks.push_back(std::move(verts));
    };

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        bool parent_skipped = false;
        for (int v : g.neighbors(u)) {
            if (v == parent && !parent_skipped) {
                parent_skipped = true;
                continue;
            }
            if (disc[v] == 0) {
                ++children;
                Edge e = make_edge(u, v);
                edge_stack.push_back(e);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent != -1) cut[u] = 1;
                    flush_block(e);
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.push_back(make_edge(u, v));
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (parent == -1 && children > 1) cut[u] = 1;
    };

    for (int s = 0; s < n; ++s) {
        if (disc[s] != 0) continue;
        dfs(s, -1);
        if (g.degree(s) == 0) blocks.push_back({s}); // isolated vertex, degenerate block
    }

    BlockDecomposition d;
    std::sort(blocks.begin(), blocks.end());
    d.blocks = std::move(blocks);
    for (int v = 0; v < n; ++v)
        if (cut[v]) d.cut_vertices.push_back(v);
    d.blocks_at_cut.resize(d.cut_vertices.size());
    for (std::size_t i = 0; i < d.cut_vertices.size(); ++i)
        for (std::size_t b = 0; b < d.blocks.size(); ++b)
            if (std::binary_search(d.blocks[b].begin(), d.blocks[b].end(), d.cut_vertices[i]))
                d.blocks_at_cut[i].push_back(static_cast<int>(b));
    return d;
}

std::optional<BlockPath> as_block_path(const Graph& g) {
    require_connected(g, "as_block_path");
    if (g.vertex_count() == 0) throw std::invalid_argument("as_block_path: empty graph");
    BlockDecomposition d = decompose(g);
    int count = static_cast<int>(d.blocks.size());
    if (count == 1) return BlockPath{{d.blocks[0]}, {}};

    // Path shape: every cut vertex in exactly two blocks, every block holding
    // at most two cut vertices.
    for (const auto& at : d.blocks_at_cut)
        if (at.size() != 2) return std::nullopt;
    std::vector<std::vector<int>> cuts_of_block(count);
    for (std::size_t i = 0; i < d.cut_vertices.size(); ++i)
        for (int b : d.blocks_at_cut[i]) cuts_of_block[b].push_back(d.cut_vertices[i]);
    int ends = 0;
    for (const auto& cuts : cuts_of_block) {
        if (cuts.size() > 2) return std::nullopt;
        if (cuts.size() == 1) ++ends;
    }
    if (ends != 2) return std::nullopt;

    auto walk = [&](int start) {
        BlockPath bp;
        std::vector<char> used(count, 0);
        int cur = start, enter = -1;
        while (true) {
            used[cur] = 1;
            bp.blocks.push_back(d.blocks[cur]);
            int exit_cut = -1;
            for (int c : cuts_of_block[cur])
                if (c != enter) exit_cut = c;
            if (exit_cut == -1) break;
            bp.cut_vertices.push_back(exit_cut);
            std::size_t ci = std::lower_bound(d.cut_vertices.begin(), d.cut_vertices.end(), exit_cut) -
                             d.cut_vertices.begin();
            int next = -1;
            for (int b : d.blocks_at_cut[ci])
                if (!used[b]) next = b;
            if (next == -1) break;
            enter = exit_cut;
            cur = next;
        }
        return bp;
    };

    int first_end = -1, last_end = -1;
    for (int b = 0; b < count; ++b)
        if (cuts_of_block[b].size() == 1) (first_end == -1 ? first_end : last_end) = b;
    BlockPath fwd = walk(first_end);
    BlockPath rev = walk(last_end);
    if (fwd.length() != count || rev.length() != count) return std::nullopt;

    auto sizes = [](const BlockPath& bp) {
        std::vector<int> s;
        for (const auto& b : bp.blocks) s.push_back(static_cast<int>(b.size()));
        return s;
    };
    auto key = [&](const BlockPath& bp) { return std::make_pair(sizes(bp), bp.blocks); };
    return key(fwd) <= key(rev) ? fwd : rev;
}

Corner make_corner(const Graph& g, int root, const std::vector<int>& component) {
    Corner c;
    c.root = root;
    c.vertex_set = component;
    c.vertex_set.push_back(root);
    std::sort(c.vertex_set.begin(), c.vertex_set.end());
    c.to_original = c.vertex_set;
    c.pointed.graph = induced_subgraph(g, c.vertex_set);
    c.pointed.basepoint = static_cast<int>(
        std::lower_bound(c.vertex_set.begin(), c.vertex_set.end(), root) - c.vertex_set.begin());
    BlockDecomposition d = decompose(g);
    for (const auto& b : d.blocks) {
        if (!std::binary_search(b.begin(), b.end(), root)) continue;
        bool inside = true;
        for (int w : b)
            if (w != root && !std::binary_search(component.begin(), component.end(), w)) inside = false;
        if (inside && b.size() > 1) {
            c.root_block = b;
            break;
        }
    }
    return c;
}

std::vector<Corner> corners(const Graph& g) {
    require_connected(g, "corners");
    BlockDecomposition d = decompose(g);
    std::vector<Corner> out;
    for (int v : d.cut_vertices) {
        // Components of g minus v, discovered in ascending seed order.
        std::vector<char> seen(g.vertex_count(), 0);
        seen[v] = 1;
        for (int s = 0; s < g.vertex_count(); ++s) {
            if (seen[s]) continue;
            std::vector<int> comp, stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                comp.push_back(u);
                for (int w : g.neighbors(u))
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(make_corner(g, v, comp));
        }
    }
    return out;
}

PointedGraph terminal_segment(const Graph& g, const BlockPath& bp, int j, Side side) {
    int len = bp.length();
    int lo, hi, base;
    if (side == Side::Right) {
        if (j < 2 || j > len) throw std::invalid_argument("terminal_segment: right index out of range");
        lo = j - 1;
        hi = len - 1;
        base = bp.cut_vertices[j - 2];
    } else {
        if (j < 1 || j > len - 1) throw std::invalid_argument("terminal_segment: left index out of range");
        lo = 0;
        hi = j - 1;
        base = bp.cut_vertices[j - 1];
    }
    std::vector<int> verts;
    for (int b = lo; b <= hi; ++b) verts.insert(verts.end(), bp.blocks[b].begin(), bp.blocks[b].end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    PointedGraph pg;
    pg.graph = induced_subgraph(g, verts);
    pg.basepoint = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), base) - verts.begin());
    return pg;
}

namespace {

// Checks one candidate whisker set; fills the witness on success.
bool check_whisker_set(const Graph& g, const std::vector<int>& removed, PathlikeWitness& out) {
    int n = g.vertex_count();
    std::vector<char> in_removed(n, 0);
    for (int v : removed) in_removed[v] = 1;

    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!in_removed[v]) rest.push_back(v);
    if (rest.empty()) return false;

    // Decompose the removed part into components; each must be a path with
    // exactly one edge into the rest, leaving from one of its ends.
    std::vector<char> seen(n, 0);
    std::vector<Whisker> whiskers;
    std::vector<char> attach_used(n, 0);
    for (int s : removed) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (in_removed[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        int inner_edges = 0;
        std::vector<std::pair<int, int>> cross; // (whisker vertex, core vertex)
        std::vector<int> inner_deg(comp.size(), 0);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (int w : g.neighbors(comp[i])) {
                if (in_removed[w]) {
                    ++inner_deg[i];
                    ++inner_edges;
                } else {
                    cross.push_back({comp[i], w});
                }
            }
        }
        inner_edges /= 2;
        if (inner_edges != static_cast<int>(comp.size()) - 1) return false; // not a tree
        for (int dg : inner_deg)
            if (dg > 2) return false; // not a path
        if (cross.size() != 1) return false;
        auto [start, attach] = cross[0];
        std::size_t si = std::find(comp.begin(), comp.end(), start) - comp.begin();
        if (inner_deg[si] > 1) return false; // attaches mid-path
        if (attach_used[attach]) return false; // at most one whisker per vertex
        attach_used[attach] = 1;

        Whisker w;
        w.attach = attach;
        int prev = -1, cur = start;
        while (cur != -1) {
            w.path.push_back(cur);
            int next = -1;
            for (int x : g.neighbors(cur))
                if (in_removed[x] && x != prev) next = x;
            prev = cur;
            cur = next;
        }
        if (w.path.size() != comp.size()) return false;
        whiskers.push_back(std::move(w));
    }

    Graph core = induced_subgraph(g, rest);
    if (!is_connected(core)) return false;
    auto bp = as_block_path(core);
    if (!bp) return false;

    out.core_vertices = rest;
    out.core = *bp;
    out.whiskers = std::move(whiskers);
    out.attaches_at_core_cut_vertex = false;
    // Map core cut vertices back to original labels before comparing.
    std::vector<char> is_cut(n, 0);
    for (int c : out.core.cut_vertices) is_cut[rest[c]] = 1;
    for (const auto& w : out.whiskers)
        if (is_cut[w.attach]) out.attaches_at_core_cut_vertex = true;
    return true;
}

} // namespace

std::optional<PathlikeWitness> is_pathlike(const Graph& g) {
    require_connected(g, "is_pathlike");
    if (auto bp = as_block_path(g)) {
        PathlikeWitness w;
        for (int v = 0; v < g.vertex_count(); ++v) w.core_vertices.push_back(v);
        w.core = *bp;
        return w;
    }
    // Whisker vertices have degree <= 2, so only those need considering.
    std::vector<int> cand;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= 2) cand.push_back(v);
    if (cand.size() > 20) throw std::runtime_error("is_pathlike: graph beyond desk scale");

    int m = static_cast<int>(cand.size());
    // Subsets by increasing size, lexicographic within a size, so the first
    // hit is a smallest witness.
    for (int size = 1; size <= m; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::vector<int> removed;
            for (int i : idx) removed.push_back(cand[i]);
            PathlikeWitness w;
            if (check_whisker_set(g, removed, w)) return w;
            int i = size - 1;
            while (i >= 0 && idx[i] == m - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

nlohmann::json to_json(const BlockDecomposition& d) {
    return nlohmann::json{{"blocks", d.blocks}, {"cut_vertices", d.cut_vertices}};
}

nlohmann::json to_json(const BlockPath& bp) {
    return nlohmann::json{{"blocks", bp.blocks}, {"cut_vertices", bp.cut_vertices}};
}

} // namespace cfree
