#include "ecperm/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace ecperm {

Permutation::Permutation(std::vector<int> seq) : seq_(std::move(seq)) {
    const int n = int(seq_.size());
    if (n < 1) throw Error(ErrorKind::BadInput, "permutation must have length >= 1");
    inv_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        const int v = seq_[i];
        if (v < 1 || v > n) throw Error(ErrorKind::BadInput, "permutation value out of range");
        if (inv_[v - 1] != 0) throw Error(ErrorKind::BadInput, "permutation repeats value " + std::to_string(v));
        inv_[v - 1] = i + 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    return Permutation(std::move(s));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> s(p.length());
    for (int i = 1; i <= p.length(); ++i) s[size_t(p.at(i)) - 1] = i;
    return Permutation(std::move(s));
}

Permutation reverse(const Permutation& p) {
    const int n = p.length();
    std::vector<int> s(n);
    for (int i = 1; i <= n; ++i) s[size_t(i) - 1] = p.at(n + 1 - i);
    return Permutation(std::move(s));
}

Labeling::Labeling(std::vector<int> label_of) : label_of_(std::move(label_of)) {
    const int n = int(label_of_.size());
    if (n < 1) throw Error(ErrorKind::BadInput, "labeling must cover at least one vertex");
    vertex_of_.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        const int l = label_of_[v];
        if (l < 1 || l > n) throw Error(ErrorKind::BadInput, "label out of range");
        if (vertex_of_[l - 1] != -1) throw Error(ErrorKind::BadInput, "label " + std::to_string(l) + " used twice");
        vertex_of_[l - 1] = v;
    }
}

Labeling Labeling::identity(int n) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    return Labeling(std::move(s));
}

namespace {

// {u,v} inverted by pi w.r.t. labels: larger label placed before smaller.
bool inverted(const Permutation& pi, int label_u, int label_v) {
    const int hi = std::max(label_u, label_v);
    const int lo = std::min(label_u, label_v);
    return pi.position_of(hi) < pi.position_of(lo);
}

} // namespace

SimpleGraph permutation_graph(const Permutation& pi) {
    const int n = pi.length();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (inverted(pi, a + 1, b + 1)) edges.emplace_back(a, b);
    return SimpleGraph(n, std::move(edges));
}

bool simple_graph_matches(const SimpleGraph& h, const Labeling& l, const Permutation& pi) {
    if (h.n != l.n() || h.n != pi.length()) return false;
    for (Vertex u = 0; u < h.n; ++u)
        for (Vertex v = u + 1; v < h.n; ++v)
            if (h.adjacent(u, v) != inverted(pi, l.label(u), l.label(v))) return false;
    return true;
}

ColoredGraph generate_colored(const Labeling& l, const std::vector<Permutation>& perms) {
    const int n = l.n();
    if (perms.empty() && n > 1) throw Error(ErrorKind::UncoveredPair, "no permutations given");
    for (const auto& p : perms)
        if (p.length() != n) throw Error(ErrorKind::ArityMismatch, "permutation length != vertex count");

    std::vector<std::tuple<Vertex, Vertex, int>> assignments;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            int owner = 0;
            for (int i = 0; i < int(perms.size()); ++i) {
                if (inverted(perms[size_t(i)], l.label(u), l.label(v))) {
                    if (owner != 0)
                        throw Error(ErrorKind::OverlapPair, "pair {" + std::to_string(u) + "," + std::to_string(v) +
                                                                "} inverted by permutations " + std::to_string(owner) +
                                                                " and " + std::to_string(i + 1));
                    owner = i + 1;
                }
            }
            if (owner == 0)
                throw Error(ErrorKind::UncoveredPair,
                            "pair {" + std::to_string(u) + "," + std::to_string(v) + "} inverted by no permutation");
            assignments.emplace_back(u, v, owner);
        }
    return ColoredGraph::from_assignments(n, assignments);
}

bool verify(const ColoredGraph& g, const Labeling& l, const std::vector<Permutation>& perms) {
    if (int(perms.size()) != g.k()) throw Error(ErrorKind::ArityMismatch, "need one permutation per color");
    if (l.n() != g.n()) throw Error(ErrorKind::ArityMismatch, "labeling size != vertex count");
    for (const auto& p : perms)
        if (p.length() != g.n()) throw Error(ErrorKind::ArityMismatch, "permutation length != vertex count");

    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
            const Color c = g.color(u, v);
            for (Color i = 1; i <= g.k(); ++i)
                if (inverted(perms[size_t(i) - 1], l.label(u), l.label(v)) != (c == i)) return false;
        }
    return true;
}

TwoColorLift two_color_lift(const SimpleGraph& h, const Labeling& l, const Permutation& pi) {
    const size_t all = size_t(h.n) * (h.n - 1) / 2;
    if (h.edge_count() == 0 || h.edge_count() == all)
        throw Error(ErrorKind::DegenerateGraph, "lift of an edgeless or complete graph would be 1-colored");

    std::vector<std::tuple<Vertex, Vertex, int>> assignments;
    for (Vertex u = 0; u < h.n; ++u)
        for (Vertex v = u + 1; v < h.n; ++v) assignments.emplace_back(u, v, h.adjacent(u, v) ? 1 : 2);
    ColoredGraph g = ColoredGraph::from_assignments(h.n, assignments);

    Certificate cert{l, {pi, reverse(pi)}};
    // color 1 may not be canonical color 1 if the first sorted pair is a non-edge
    if (g.original_color(1) != 1) std::swap(cert.perms[0], cert.perms[1]);
    if (!verify(g, cert.labeling, cert.perms))
        throw Error(ErrorKind::BadInput, "(H, l) is not a simple permutation graph of pi");
    return TwoColorLift{std::move(g), std::move(cert)};
}

} // namespace ecperm
