#include "ecperm/modular_decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

namespace ecperm {

const char* node_kind_name(NodeKind k) {
    switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Series: return "series";
    case NodeKind::Prime: return "prime";
    }
    return "?";
}

bool is_module(const ColoredGraph& g, const std::vector<Vertex>& m) {
    std::vector<unsigned char> in_m(g.n(), 0);
    for (Vertex v : m) {
        if (v < 0 || v >= g.n()) throw Error(ErrorKind::BadInput, "vertex id out of range");
        in_m[size_t(v)] = 1;
    }
    if (m.empty()) return true; // the empty set is a trivial module
    for (Vertex x = 0; x < g.n(); ++x) {
        if (in_m[size_t(x)]) continue;
        const Color c = g.color(x, m.front());
        for (Vertex v : m)
            if (g.color(x, v) != c) return false;
    }
    return true;
}

namespace {

// Scratch buffers shared across the decomposition recursion; every array is
// indexed by global vertex id or color and reset by stamping.
struct Ctx {
    const ColoredGraph& g;
    std::vector<int> part_of;
    std::vector<unsigned char> in_queue;
    std::vector<unsigned char> flag;      // generic membership flag per vertex
    std::vector<int> color_stamp;         // per color, for candidate counting
    std::vector<int> color_to;            // closure: color a vertex sees the set
    std::vector<int> vertex_stamp;        // closure/bfs visited stamps
    int stamp = 0;

    explicit Ctx(const ColoredGraph& graph)
        : g(graph), part_of(graph.n(), -1), in_queue(graph.n(), 0), flag(graph.n(), 0),
          color_stamp(size_t(graph.k()) + 1, 0), color_to(graph.n(), 0), vertex_stamp(graph.n(), 0) {}
};

// Coarsest partition of w \ {pivot} into modules of G[w] avoiding pivot:
// split parts by the colors a splitter vertex sees until stable. A processed
// splitter stays valid for parts it has split (they only shrink); it is
// re-queued only when its own part splits.
std::vector<std::vector<Vertex>> refine(Ctx& ctx, const std::vector<Vertex>& w, Vertex pivot) {
    const ColoredGraph& g = ctx.g;
    std::vector<std::vector<Vertex>> parts;
    parts.push_back({pivot});
    std::vector<Vertex> rest;
    rest.reserve(w.size() - 1);
    for (Vertex v : w)
        if (v != pivot) rest.push_back(v);
    parts.push_back(std::move(rest));
    ctx.part_of[size_t(pivot)] = 0;
    for (Vertex v : parts[1]) ctx.part_of[size_t(v)] = 1;

    std::deque<Vertex> queue(w.begin(), w.end());
    for (Vertex v : w) ctx.in_queue[size_t(v)] = 1;

    std::vector<std::pair<Color, Vertex>> bucket;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        ctx.in_queue[size_t(x)] = 0;
        const int own = ctx.part_of[size_t(x)];
        const int part_count = int(parts.size()); // parts added below are already x-uniform
        for (int p = 0; p < part_count; ++p) {
            if (p == own || parts[size_t(p)].size() < 2) continue;
            auto& py = parts[size_t(p)];
            bucket.clear();
            bucket.reserve(py.size());
            for (Vertex y : py) bucket.emplace_back(g.color(x, y), y);
            std::sort(bucket.begin(), bucket.end());
            if (bucket.front().first == bucket.back().first) continue;
            // split: keep the first color group in place, append the rest
            std::vector<Vertex> keep;
            size_t i = 0;
            while (i < bucket.size() && bucket[i].first == bucket.front().first) keep.push_back(bucket[i++].second);
            while (i < bucket.size()) {
                const Color c = bucket[i].first;
                std::vector<Vertex> grp;
                while (i < bucket.size() && bucket[i].first == c) grp.push_back(bucket[i++].second);
                const int np = int(parts.size());
                for (Vertex y : grp) ctx.part_of[size_t(y)] = np;
                parts.push_back(std::move(grp));
            }
            py = std::move(keep);
            // everyone from the split part may now distinguish former co-members
            for (auto& [c, y] : bucket)
                if (!ctx.in_queue[size_t(y)]) {
                    ctx.in_queue[size_t(y)] = 1;
                    queue.push_back(y);
                }
        }
    }

    std::vector<std::vector<Vertex>> out;
    out.reserve(parts.size() - 1);
    for (size_t p = 1; p < parts.size(); ++p) {
        std::sort(parts[p].begin(), parts[p].end());
        out.push_back(std::move(parts[p]));
    }
    return out;
}

// Minimal module of G[w] containing seed: add every vertex that sees the
// current set in more than one color, until stable.
std::vector<Vertex> closure(Ctx& ctx, const std::vector<Vertex>& w, const std::vector<Vertex>& seed) {
    const ColoredGraph& g = ctx.g;
    const int stamp = ++ctx.stamp;
    std::vector<Vertex> set;
    std::deque<Vertex> todo;
    for (Vertex v : seed) {
        if (ctx.vertex_stamp[size_t(v)] != stamp) {
            ctx.vertex_stamp[size_t(v)] = stamp;
            set.push_back(v);
            todo.push_back(v);
        }
    }
    const int cstamp = ++ctx.stamp; // marks color_to entries valid for this run
    while (!todo.empty()) {
        const Vertex m = todo.front();
        todo.pop_front();
        for (Vertex y : w) {
            const int ys = ctx.vertex_stamp[size_t(y)];
            if (ys == stamp) continue; // already in the set
            if (ys == cstamp) {
                if (ctx.color_to[size_t(y)] != g.color(y, m)) {
                    ctx.vertex_stamp[size_t(y)] = stamp;
                    set.push_back(y);
                    todo.push_back(y);
                }
            } else {
                ctx.vertex_stamp[size_t(y)] = cstamp;
                ctx.color_to[size_t(y)] = g.color(y, m);
            }
        }
    }
    std::sort(set.begin(), set.end());
    return set;
}

// Smallest color whose removal disconnects G[w]; components returned via out.
std::optional<Color> series_color(Ctx& ctx, const std::vector<Vertex>& w,
                                  std::vector<std::vector<Vertex>>& components) {
    const ColoredGraph& g = ctx.g;
    // candidate colors appear on an edge at every vertex of w
    const int stamp_base = ctx.stamp;
    ctx.stamp += int(w.size());
    std::vector<Color> candidates;
    {
        std::vector<int> count(size_t(g.k()) + 1, 0);
        int vi = 0;
        for (Vertex u : w) {
            const int st = stamp_base + 1 + vi++;
            for (Vertex v : w) {
                if (u == v) continue;
                const Color c = g.color(u, v);
                if (ctx.color_stamp[size_t(c)] != st) {
                    ctx.color_stamp[size_t(c)] = st;
                    if (++count[size_t(c)] == int(w.size())) candidates.push_back(c);
                }
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    for (Color c : candidates) {
        // BFS in H_c = edges of color != c
        const int stamp = ++ctx.stamp;
        std::deque<Vertex> q{w.front()};
        ctx.vertex_stamp[size_t(w.front())] = stamp;
        size_t reached = 1;
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop_front();
            for (Vertex v : w)
                if (v != u && ctx.vertex_stamp[size_t(v)] != stamp && g.color(u, v) != c) {
                    ctx.vertex_stamp[size_t(v)] = stamp;
                    ++reached;
                    q.push_back(v);
                }
        }
        if (reached == w.size()) continue;
        components.clear();
        const int cstamp = ++ctx.stamp;
        for (Vertex s : w) {
            if (ctx.vertex_stamp[size_t(s)] == cstamp) continue;
            std::vector<Vertex> comp{s};
            ctx.vertex_stamp[size_t(s)] = cstamp;
            std::deque<Vertex> bfs{s};
            while (!bfs.empty()) {
                const Vertex u = bfs.front();
                bfs.pop_front();
                for (Vertex v : w)
                    if (v != u && ctx.vertex_stamp[size_t(v)] != cstamp && g.color(u, v) != c) {
                        ctx.vertex_stamp[size_t(v)] = cstamp;
                        comp.push_back(v);
                        bfs.push_back(v);
                    }
            }
            std::sort(comp.begin(), comp.end());
            components.push_back(std::move(comp));
        }
        return c;
    }
    return std::nullopt;
}

// Child of the (prime) root of G[w] that contains v: grow the union of
// proper modules containing v. Each round separates a vertex w2 outside the
// running module U; v's refinement part B is the largest module containing v
// and avoiding w2, so closure(B + w2) either proves B maximal or enlarges U.
std::vector<Vertex> prime_vchild(Ctx& ctx, const std::vector<Vertex>& w, Vertex v) {
    std::vector<Vertex> u{v};
    for (;;) {
        Vertex w2 = -1;
        {
            size_t i = 0;
            for (Vertex x : w) {
                if (i < u.size() && u[i] == x) {
                    ++i;
                    continue;
                }
                w2 = x;
                break;
            }
        }
        if (w2 == -1) throw std::logic_error("prime_vchild: running module swallowed the whole node");
        auto parts = refine(ctx, w, w2);
        std::vector<Vertex> b;
        for (auto& p : parts)
            if (std::binary_search(p.begin(), p.end(), v)) {
                b = std::move(p);
                break;
            }
        std::vector<Vertex> seed(b);
        seed.push_back(w2);
        auto u2 = closure(ctx, w, seed);
        if (u2.size() == w.size()) return b;
        u = std::move(u2);
    }
}

struct Builder {
    Ctx ctx;
    MDTree tree;

    explicit Builder(const ColoredGraph& g) : ctx(g) {
        tree.n = g.n();
        tree.leaf_of.assign(g.n(), -1);
    }

    int make_node(std::vector<Vertex> vertices) {
        tree.nodes.push_back(MDNode{});
        tree.nodes.back().vertices = std::move(vertices);
        return int(tree.nodes.size()) - 1;
    }

    int build(std::vector<Vertex> w) {
        const int id = make_node(std::move(w));
        const auto& verts = tree.nodes[size_t(id)].vertices;
        if (verts.size() == 1) {
            tree.nodes[size_t(id)].kind = NodeKind::Leaf;
            tree.leaf_of[size_t(verts.front())] = id;
            return id;
        }

        std::vector<std::vector<Vertex>> children_sets;
        NodeKind kind;
        if (series_color(ctx, verts, children_sets)) {
            kind = NodeKind::Series;
        } else {
            kind = NodeKind::Prime;
            const Vertex v = verts.front();
            auto parts = refine(ctx, verts, v);
            auto c1 = prime_vchild(ctx, verts, v);
            const int stamp = ++ctx.stamp;
            for (Vertex x : c1) ctx.vertex_stamp[size_t(x)] = stamp;
            children_sets.push_back(std::move(c1));
            for (auto& p : parts)
                if (ctx.vertex_stamp[size_t(p.front())] != stamp) children_sets.push_back(std::move(p));
        }
        std::sort(children_sets.begin(), children_sets.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });

        auto& node = tree.nodes[size_t(id)];
        node.kind = kind;
        std::vector<std::tuple<Vertex, Vertex, int>> qassign;
        const int m = int(children_sets.size());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                qassign.emplace_back(i, j, ctx.g.color(children_sets[size_t(i)].front(), children_sets[size_t(j)].front()));
        tree.nodes[size_t(id)].quotient = ColoredGraph::from_assignments(m, qassign);
        for (auto& cs : children_sets) tree.nodes[size_t(id)].representatives.push_back(cs.front());

        for (auto& cs : children_sets) {
            const int child = build(std::move(cs));
            tree.nodes[size_t(child)].parent = id;
            tree.nodes[size_t(id)].children.push_back(child);
        }
        return id;
    }
};

} // namespace

MDTree decompose(const ColoredGraph& g) {
    Builder builder(g);
    std::vector<Vertex> all(size_t(g.n()));
    for (int i = 0; i < g.n(); ++i) all[size_t(i)] = i;
    builder.tree.root = builder.build(std::move(all));
    return std::move(builder.tree);
}

ColoredGraph quotient_graph(const ColoredGraph& g, const std::vector<Vertex>& m,
                            const std::vector<std::vector<Vertex>>& children) {
    std::vector<unsigned char> seen(g.n(), 0);
    size_t total = 0;
    for (const auto& c : children) {
        if (c.empty()) throw Error(ErrorKind::NotAPartition, "empty child module");
        for (Vertex v : c) {
            if (v < 0 || v >= g.n() || seen[size_t(v)])
                throw Error(ErrorKind::NotAPartition, "children do not partition the module");
            seen[size_t(v)] = 1;
        }
        total += c.size();
    }
    if (total != m.size()) throw Error(ErrorKind::NotAPartition, "children do not cover the module");
    for (Vertex v : m)
        if (!seen[size_t(v)]) throw Error(ErrorKind::NotAPartition, "module vertex missing from children");

    const int q = int(children.size());
    std::vector<std::tuple<Vertex, Vertex, int>> assignments;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            assignments.emplace_back(i, j, g.color(children[size_t(i)].front(), children[size_t(j)].front()));
    return ColoredGraph::from_assignments(q, assignments);
}

NodeKind classify_quotient(const ColoredGraph& q) {
    if (q.n() < 2) throw Error(ErrorKind::TooSmall, "K1 quotient belongs to a leaf");
    return q.k() == 1 ? NodeKind::Series : NodeKind::Prime;
}

bool is_primitive(const ColoredGraph& g) {
    if (g.n() <= 2) return true;
    MDTree t = decompose(g);
    const MDNode& root = t.node(t.root);
    if (root.kind != NodeKind::Prime) return false;
    for (int c : root.children)
        if (t.node(c).kind != NodeKind::Leaf) return false;
    return true;
}

LCATable lca_table(const MDTree& t) {
    LCATable out;
    out.n = t.n;
    out.node_id.assign(size_t(t.n) * t.n, -1);
    out.child_side.assign(size_t(t.n) * t.n, -1);
    for (Vertex u = 0; u < t.n; ++u) out.node_id[size_t(u) * t.n + u] = t.leaf_of[size_t(u)];
    for (int id = 0; id < t.node_count(); ++id) {
        const MDNode& node = t.node(id);
        if (node.kind == NodeKind::Leaf) continue;
        const int m = int(node.children.size());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                const int ci = node.children[size_t(i)];
                const int cj = node.children[size_t(j)];
                for (Vertex a : t.node(ci).vertices)
                    for (Vertex b : t.node(cj).vertices) {
                        out.node_id[size_t(a) * t.n + b] = id;
                        out.node_id[size_t(b) * t.n + a] = id;
                        out.child_side[size_t(a) * t.n + b] = ci;
                        out.child_side[size_t(b) * t.n + a] = cj;
                    }
            }
    }
    return out;
}

namespace {

void write_vertex_set(std::ostream& os, const std::vector<Vertex>& vs) {
    os << '{';
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ',';
        os << vs[i];
    }
    os << '}';
}

void text_rec(std::ostream& os, const MDTree& t, int id, int depth) {
    const MDNode& node = t.node(id);
    for (int i = 0; i < depth; ++i) os << "  ";
    write_vertex_set(os, node.vertices);
    os << ' ' << node_kind_name(node.kind) << '\n';
    for (int c : node.children) text_rec(os, t, c, depth + 1);
}

} // namespace

std::string mdtree_to_text(const MDTree& t) {
    std::ostringstream os;
    text_rec(os, t, t.root, 0);
    return os.str();
}

std::string mdtree_to_dot(const MDTree& t) {
    std::ostringstream os;
    os << "digraph mdtree {\n  node [shape=box];\n";
    for (int id = 0; id < t.node_count(); ++id) {
        const MDNode& node = t.node(id);
        os << "  n" << id << " [label=\"";
        write_vertex_set(os, node.vertices);
        os << "\\n" << node_kind_name(node.kind) << "\"";
        if (node.quotient) {
            os << " tooltip=\"quotient:";
            const ColoredGraph& q = *node.quotient;
            for (auto [u, v, c] : q.sorted_edges()) os << " {" << u << "," << v << "}=" << q.original_color(c);
            os << "\"";
        }
        os << "];\n";
        for (int c : node.children) os << "  n" << id << " -> n" << c << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace ecperm
