#include "ecperm/colored_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace ecperm {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::MissingPair: return "MissingPair";
    case ErrorKind::DuplicatePair: return "DuplicatePair";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::UnknownColor: return "UnknownColor";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::UncoveredPair: return "UncoveredPair";
    case ErrorKind::OverlapPair: return "OverlapPair";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::DegenerateGraph: return "DegenerateGraph";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::IncompleteLabelings: return "IncompleteLabelings";
    case ErrorKind::NotTotalOrder: return "NotTotalOrder";
    case ErrorKind::BadInput: return "BadInput";
    }
    return "Error";
}

SimpleGraph::SimpleGraph(int n_vertices, std::vector<std::pair<Vertex, Vertex>> edge_list)
    : n(n_vertices), edges(std::move(edge_list)) {
    if (n < 1) throw Error(ErrorKind::BadInput, "graph needs at least one vertex");
    adj_.assign(size_t(n) * n, 0);
    for (auto& [u, v] : edges) {
        if (u == v) throw Error(ErrorKind::SelfLoop, "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::BadInput, "edge endpoint out of range");
        if (u > v) std::swap(u, v);
        if (adj_[size_t(u) * n + v])
            throw Error(ErrorKind::DuplicatePair, "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        adj_[size_t(u) * n + v] = adj_[size_t(v) * n + u] = 1;
    }
    std::sort(edges.begin(), edges.end());
}

SimpleGraph SimpleGraph::complement() const {
    std::vector<std::pair<Vertex, Vertex>> comp;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!adjacent(u, v)) comp.emplace_back(u, v);
    return SimpleGraph(n, std::move(comp));
}

ColoredGraph ColoredGraph::from_assignments(int n,
                                            const std::vector<std::tuple<Vertex, Vertex, int>>& assignments) {
    if (n < 1) throw Error(ErrorKind::BadInput, "vertex count must be positive");
    ColoredGraph g;
    g.n_ = n;
    g.table_.assign(size_t(n) * n, 0);
    std::map<int, Color> canon;
    for (auto [u, v, c] : assignments) {
        if (u == v) throw Error(ErrorKind::SelfLoop, "pair {" + std::to_string(u) + "," + std::to_string(v) + "}");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::BadInput, "vertex id out of range in pair {" + std::to_string(u) + "," +
                                                 std::to_string(v) + "}");
        if (c <= 0) throw Error(ErrorKind::BadInput, "colors must be positive integers");
        if (g.table_[size_t(u) * n + v] != 0)
            throw Error(ErrorKind::DuplicatePair, "pair {" + std::to_string(u) + "," + std::to_string(v) + "}");
        auto it = canon.find(c);
        Color cc;
        if (it == canon.end()) {
            cc = Color(canon.size()) + 1;
            canon.emplace(c, cc);
            g.original_.push_back(c);
        } else {
            cc = it->second;
        }
        g.table_[size_t(u) * n + v] = g.table_[size_t(v) * n + u] = cc;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (g.table_[size_t(u) * n + v] == 0)
                throw Error(ErrorKind::MissingPair,
                            "pair {" + std::to_string(u) + "," + std::to_string(v) + "} has no color");
    g.k_ = int(g.original_.size());
    return g;
}

bool ColoredGraph::same_coloring(const ColoredGraph& other) const {
    return n_ == other.n_ && k_ == other.k_ && table_ == other.table_;
}

std::vector<std::tuple<Vertex, Vertex, Color>> ColoredGraph::sorted_edges() const {
    std::vector<std::tuple<Vertex, Vertex, Color>> out;
    out.reserve(size_t(n_) * (n_ - 1) / 2);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            out.emplace_back(u, v, color(u, v));
    return out;
}

SimpleGraph monochromatic_subgraph(const ColoredGraph& g, Color i) {
    if (i < 1 || i > g.k())
        throw Error(ErrorKind::UnknownColor, "color " + std::to_string(i) + " of " + std::to_string(g.k()));
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
            if (g.color(u, v) == i) edges.emplace_back(u, v);
    return SimpleGraph(g.n(), std::move(edges));
}

std::optional<Triangle> find_rainbow_triangle(const ColoredGraph& g) {
    const int n = g.n();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const Color cuv = g.color(u, v);
            for (Vertex w = v + 1; w < n; ++w) {
                const Color cuw = g.color(u, w);
                const Color cvw = g.color(v, w);
                if (cuv != cuw && cuv != cvw && cuw != cvw)
                    return Triangle{u, v, w, {cuv, cuw, cvw}};
            }
        }
    return std::nullopt;
}

std::optional<Color> disconnected_color(const ColoredGraph& g) {
    const int n = g.n();
    if (n < 2) return std::nullopt;
    std::vector<unsigned char> seen(n);
    for (Color c = 1; c <= g.k(); ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        std::queue<Vertex> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v = 0; v < n; ++v)
                if (v != u && !seen[v] && g.color(u, v) == c) {
                    seen[v] = 1;
                    ++reached;
                    q.push(v);
                }
        }
        if (reached < n) return c;
    }
    return std::nullopt;
}

InducedSubgraph induced_subgraph(const ColoredGraph& g, const std::vector<Vertex>& w) {
    if (w.empty()) throw Error(ErrorKind::EmptySet, "induced subgraph needs a non-empty vertex set");
    std::vector<Vertex> ws(w);
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    if (ws.size() != w.size()) throw Error(ErrorKind::BadInput, "vertex set contains duplicates");
    if (ws.front() < 0 || ws.back() >= g.n()) throw Error(ErrorKind::BadInput, "vertex id out of range");

    std::vector<Vertex> old_to_new(g.n(), -1);
    for (int i = 0; i < int(ws.size()); ++i) old_to_new[ws[i]] = i;

    std::vector<std::tuple<Vertex, Vertex, int>> assignments;
    for (int i = 0; i < int(ws.size()); ++i)
        for (int j = i + 1; j < int(ws.size()); ++j)
            assignments.emplace_back(i, j, g.color(ws[i], ws[j]));

    InducedSubgraph out{ColoredGraph::from_assignments(int(ws.size()), assignments),
                        std::move(old_to_new), std::move(ws), {}};
    // parent canonical color -> new canonical color (0 when absent in G[W])
    out.color_map.assign(size_t(g.k()) + 1, 0);
    for (Color c = 1; c <= out.graph.k(); ++c) out.color_map[out.graph.original_color(c)] = c;
    return out;
}

} // namespace ecperm
