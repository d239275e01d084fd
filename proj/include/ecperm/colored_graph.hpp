#pragma once

#include <array>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "ecperm/core.hpp"

namespace ecperm {

// Plain undirected graph, used for monochromatic subgraphs.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges; // normalized u < v, sorted

    SimpleGraph() = default;
    SimpleGraph(int n_, std::vector<std::pair<Vertex, Vertex>> edges_);

    bool adjacent(Vertex u, Vertex v) const { return u != v && adj_[size_t(u) * n + v] != 0; }
    size_t edge_count() const { return edges.size(); }
    SimpleGraph complement() const;

private:
    std::vector<unsigned char> adj_;
};

struct Triangle {
    Vertex u, v, w;
    std::array<Color, 3> colors; // colors of {u,v}, {u,w}, {v,w}
};

// Complete k-edge-colored graph on vertices 0..n-1. Immutable once built;
// colors are canonically renumbered to 1..k in order of first appearance,
// with the original labels kept for round-trip I/O.
class ColoredGraph {
public:
    // assignments: (u, v, color) with positive colors, one entry per pair.
    static ColoredGraph from_assignments(int n,
                                         const std::vector<std::tuple<Vertex, Vertex, int>>& assignments);

    int n() const { return n_; }
    int k() const { return k_; }

    Color color(Vertex u, Vertex v) const { return table_[size_t(u) * n_ + v]; }
    int original_color(Color c) const { return original_[size_t(c) - 1]; }
    const std::vector<int>& original_colors() const { return original_; }

    bool same_coloring(const ColoredGraph& other) const; // canonical colors, exact
    std::vector<std::tuple<Vertex, Vertex, Color>> sorted_edges() const;

private:
    ColoredGraph() = default;
    int n_ = 0;
    int k_ = 0;
    std::vector<Color> table_; // n*n symmetric, 0 on the diagonal
    std::vector<int> original_; // canonical color c -> original label
};

SimpleGraph monochromatic_subgraph(const ColoredGraph& g, Color i);
std::optional<Triangle> find_rainbow_triangle(const ColoredGraph& g);
std::optional<Color> disconnected_color(const ColoredGraph& g);

struct InducedSubgraph {
    ColoredGraph graph;
    std::vector<Vertex> old_to_new;   // -1 for vertices outside W
    std::vector<Vertex> new_to_old;
    std::vector<Color> color_map;     // parent canonical color -> new canonical color, 0 if dropped
};

InducedSubgraph induced_subgraph(const ColoredGraph& g, const std::vector<Vertex>& w);

} // namespace ecperm
