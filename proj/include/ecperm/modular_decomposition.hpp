#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecperm/colored_graph.hpp"

namespace ecperm {

enum class NodeKind { Leaf, Series, Prime };

const char* node_kind_name(NodeKind k);

struct MDNode {
    std::vector<Vertex> vertices;        // sorted
    int parent = -1;
    std::vector<int> children;           // node ids, ordered by smallest contained vertex
    NodeKind kind = NodeKind::Leaf;
    std::optional<ColoredGraph> quotient;   // internal nodes; side table holds G's canonical colors
    std::vector<Vertex> representatives;    // min vertex of each child, aligned with children
};

struct MDTree {
    int n = 0;
    int root = -1;
    std::vector<MDNode> nodes;
    std::vector<int> leaf_of; // vertex -> leaf node id

    const MDNode& node(int id) const { return nodes[size_t(id)]; }
    int node_count() const { return int(nodes.size()); }
};

// Inclusion-minimal strong module M^{u,v} plus its two child modules, O(1)
// per query after O(n^2) preprocessing.
struct LCATable {
    int n = 0;
    std::vector<int> node_id;    // n*n; diagonal holds the leaf of u
    std::vector<int> child_side; // n*n; child of M^{u,v} containing u (-1 on the diagonal)

    int node_of(Vertex u, Vertex v) const { return node_id[size_t(u) * n + v]; }
    int child_of(Vertex u, Vertex v) const { return child_side[size_t(u) * n + v]; }
};

bool is_module(const ColoredGraph& g, const std::vector<Vertex>& m);

MDTree decompose(const ColoredGraph& g);

// Quotient of G[M] by the given partition into child modules.
ColoredGraph quotient_graph(const ColoredGraph& g, const std::vector<Vertex>& m,
                            const std::vector<std::vector<Vertex>>& children);

NodeKind classify_quotient(const ColoredGraph& q); // Series or Prime; TooSmall on K1

bool is_primitive(const ColoredGraph& g);

LCATable lca_table(const MDTree& t);

std::string mdtree_to_text(const MDTree& t);
std::string mdtree_to_dot(const MDTree& t);

} // namespace ecperm
