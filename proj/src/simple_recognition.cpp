#include <algorithm>
#include <deque>
#include <numeric>

#include "ecperm/recognizer.hpp"

namespace ecperm {

namespace {

// Gamma-forcing: edges {a,b},{a,c} with {b,c} not an edge must agree at a.
// Returns dir[u*n+v] in {-1,0,+1}; 0 only if the graph has no edges. A
// conflict means no transitive orientation exists.
std::optional<std::vector<signed char>> force_orientation(const SimpleGraph& h) {
    const int n = h.n;
    std::vector<signed char> dir(size_t(n) * n, 0);
    std::deque<std::pair<Vertex, Vertex>> queue;

    auto set_dir = [&](Vertex a, Vertex b) -> bool { // a -> b
        const signed char cur = dir[size_t(a) * n + b];
        if (cur == 1) return true;
        if (cur == -1) return false;
        dir[size_t(a) * n + b] = 1;
        dir[size_t(b) * n + a] = -1;
        queue.emplace_back(a, b);
        return true;
    };

    for (const auto& [a0, b0] : h.edges) {
        if (dir[size_t(a0) * n + b0] != 0) continue;
        if (!set_dir(a0, b0)) return std::nullopt;
        while (!queue.empty()) {
            auto [a, b] = queue.front();
            queue.pop_front();
            for (Vertex c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (h.adjacent(a, c) && !h.adjacent(b, c) && !set_dir(a, c)) return std::nullopt;
                if (h.adjacent(b, c) && !h.adjacent(a, c) && !set_dir(c, b)) return std::nullopt;
            }
        }
    }
    return dir;
}

std::optional<std::pair<Labeling, Permutation>> try_combos(const SimpleGraph& h,
                                                           const std::vector<signed char>& f,
                                                           const std::vector<signed char>& fc) {
    const int n = h.n;
    // tournament T = sf*F on edges, sc*F' on non-edges; acyclic iff its
    // out-degree sequence is 0..n-1
    for (int sf : {1, -1})
        for (int sc : {1, -1}) {
            auto beats = [&](Vertex u, Vertex v) {
                return h.adjacent(u, v) ? sf * f[size_t(u) * n + v] > 0 : sc * fc[size_t(u) * n + v] > 0;
            };
            std::vector<int> out1(n, 0), out2(n, 0);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v) {
                    if (u == v) continue;
                    if (beats(u, v)) ++out1[size_t(u)];
                    // second reading: edge orientations reversed
                    if (h.adjacent(u, v) ? sf * f[size_t(u) * n + v] < 0 : sc * fc[size_t(u) * n + v] > 0)
                        ++out2[size_t(u)];
                }
            auto distinct = [n](const std::vector<int>& deg) {
                std::vector<int> s(deg);
                std::sort(s.begin(), s.end());
                for (int i = 0; i < n; ++i)
                    if (s[size_t(i)] != i) return false;
                return true;
            };
            if (!distinct(out1) || !distinct(out2)) continue;

            std::vector<int> labels(n);
            for (Vertex u = 0; u < n; ++u) labels[size_t(u)] = out1[size_t(u)] + 1;
            Labeling l(labels);
            std::vector<Vertex> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](Vertex a, Vertex b) { return out2[size_t(a)] < out2[size_t(b)]; });
            std::vector<int> pi(n);
            for (int j = 0; j < n; ++j) pi[size_t(j)] = l.label(order[size_t(j)]);
            Permutation p(pi);
            if (simple_graph_matches(h, l, p)) return std::make_pair(std::move(l), std::move(p));
        }
    return std::nullopt;
}

std::optional<std::pair<Labeling, Permutation>> brute_force_simple(const SimpleGraph& h) {
    const int n = h.n;
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    do {
        Labeling l(labels);
        // candidate order: u before v iff the pair is "explained" with u first
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        auto before = [&](Vertex u, Vertex v) {
            return l.label(u) > l.label(v) ? h.adjacent(u, v) : !h.adjacent(u, v);
        };
        std::vector<int> pred(n, 0);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (u != v && before(v, u)) ++pred[size_t(u)];
        std::sort(order.begin(), order.end(),
                  [&](Vertex a, Vertex b) { return pred[size_t(a)] < pred[size_t(b)]; });
        std::vector<int> pi(n);
        for (int j = 0; j < n; ++j) pi[size_t(j)] = l.label(order[size_t(j)]);
        Permutation p(pi);
        if (simple_graph_matches(h, l, p)) return std::make_pair(std::move(l), std::move(p));
    } while (std::next_permutation(labels.begin(), labels.end()));
    return std::nullopt;
}

} // namespace

std::optional<std::pair<Labeling, Permutation>> recognize_simple_primitive(const SimpleGraph& h) {
    const int n = h.n;
    const size_t all = size_t(n) * (n - 1) / 2;
    if (n == 1) return std::make_pair(Labeling::identity(1), Permutation::identity(1));
    if (h.edge_count() == 0) return std::make_pair(Labeling::identity(n), Permutation::identity(n));
    if (h.edge_count() == all)
        return std::make_pair(Labeling::identity(n), reverse(Permutation::identity(n)));

    auto f = force_orientation(h);
    if (f) {
        auto fc = force_orientation(h.complement());
        if (fc) {
            if (auto r = try_combos(h, *f, *fc)) return r;
        }
    }
    if (n <= 8) return brute_force_simple(h);
    return std::nullopt;
}

std::optional<std::pair<Labeling, Permutation>> recognize_simple(const SimpleGraph& h) {
    const int n = h.n;
    const size_t all = size_t(n) * (n - 1) / 2;
    if (n == 1) return std::make_pair(Labeling::identity(1), Permutation::identity(1));
    if (h.edge_count() == 0) return std::make_pair(Labeling::identity(n), Permutation::identity(n));
    if (h.edge_count() == all)
        return std::make_pair(Labeling::identity(n), reverse(Permutation::identity(n)));

    std::vector<std::tuple<Vertex, Vertex, int>> assignments;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) assignments.emplace_back(u, v, h.adjacent(u, v) ? 1 : 2);
    ColoredGraph lifted = ColoredGraph::from_assignments(n, assignments);

    auto outcome = recognize(lifted);
    if (std::holds_alternative<Obstruction>(outcome)) return std::nullopt;
    auto& cert = std::get<Certificate>(outcome);
    const Color edge_color = lifted.original_color(1) == 1 ? 1 : 2;
    return std::make_pair(cert.labeling, cert.perms[size_t(edge_color) - 1]);
}

} // namespace ecperm
