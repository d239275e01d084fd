#include "ecperm/classes.hpp"

#include <algorithm>
#include <numeric>

namespace ecperm {

bool is_gallai(const ColoredGraph& g) { return !find_rainbow_triangle(g).has_value(); }

namespace {

// cotree recursion: a cograph is a single vertex, or disconnected with
// cograph components, or co-disconnected with cograph co-components
bool cograph_rec(const SimpleGraph& h, std::vector<Vertex>& verts) {
    if (verts.size() <= 1) return true;

    auto components_of = [&](bool complemented) {
        std::vector<std::vector<Vertex>> comps;
        std::vector<unsigned char> seen(verts.size(), 0);
        for (size_t s = 0; s < verts.size(); ++s) {
            if (seen[s]) continue;
            std::vector<size_t> stack{s};
            seen[s] = 1;
            std::vector<Vertex> comp;
            while (!stack.empty()) {
                const size_t i = stack.back();
                stack.pop_back();
                comp.push_back(verts[i]);
                for (size_t j = 0; j < verts.size(); ++j) {
                    if (seen[j] || i == j) continue;
                    const bool adj = h.adjacent(verts[i], verts[j]);
                    if (adj != complemented) {
                        seen[j] = 1;
                        stack.push_back(j);
                    }
                }
            }
            comps.push_back(std::move(comp));
        }
        return comps;
    };

    auto comps = components_of(false);
    if (comps.size() == 1) {
        comps = components_of(true);
        if (comps.size() == 1) return false; // connected and co-connected, not a cograph
    }
    for (auto& c : comps)
        if (!cograph_rec(h, c)) return false;
    return true;
}

} // namespace

bool is_cograph(const SimpleGraph& h) {
    std::vector<Vertex> verts(size_t(h.n));
    std::iota(verts.begin(), verts.end(), 0);
    return cograph_rec(h, verts);
}

bool check_ultrametric_axioms(const ColoredGraph& delta) {
    const int n = delta.n();
    // U2
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
            for (Vertex z = y + 1; z < n; ++z) {
                const Color a = delta.color(x, y), b = delta.color(x, z), c = delta.color(y, z);
                if (a != b && a != c && b != c) return false;
            }
    // U3: no {x,y,u,v} with d(x,y)=d(y,u)=d(u,v) != d(v,y)=d(x,v)=d(x,u)
    std::array<Vertex, 4> q{};
    for (q[0] = 0; q[0] < n; ++q[0])
        for (q[1] = q[0] + 1; q[1] < n; ++q[1])
            for (q[2] = q[1] + 1; q[2] < n; ++q[2])
                for (q[3] = q[2] + 1; q[3] < n; ++q[3]) {
                    std::array<int, 4> perm{0, 1, 2, 3};
                    do {
                        const Vertex x = q[size_t(perm[0])], y = q[size_t(perm[1])];
                        const Vertex u = q[size_t(perm[2])], v = q[size_t(perm[3])];
                        const Color c1 = delta.color(x, y);
                        if (delta.color(y, u) != c1 || delta.color(u, v) != c1) continue;
                        const Color c2 = delta.color(v, y);
                        if (c2 == c1) continue;
                        if (delta.color(x, v) == c2 && delta.color(x, u) == c2) return false;
                    } while (std::next_permutation(perm.begin(), perm.end()));
                }
    return true;
}

bool is_symbolic_ultrametric_graph(const ColoredGraph& g) {
    if (find_rainbow_triangle(g)) return false;
    for (Color i = 1; i <= g.k(); ++i)
        if (!is_cograph(monochromatic_subgraph(g, i))) return false;
    return true;
}

bool is_separable(const Permutation& pi) { return is_cograph(permutation_graph(pi)); }

} // namespace ecperm
