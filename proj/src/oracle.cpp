#include "ecperm/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace ecperm {

std::optional<Certificate> brute_force_recognize(const ColoredGraph& g) {
    const int n = g.n();
    if (n > 9) throw Error(ErrorKind::TooLarge, "brute force is capped at 9 vertices");
    if (n == 1) return Certificate{Labeling::identity(1), {}};

    std::vector<int> lab(size_t(n));
    std::iota(lab.begin(), lab.end(), 1);
    std::vector<int> deg(size_t(n));
    do {
        auto before = [&](Vertex u, Vertex v, Color i) {
            // u precedes v in the color-i order read straight off the edges
            if (lab[size_t(u)] > lab[size_t(v)]) return g.color(u, v) == i;
            return g.color(u, v) != i;
        };
        bool ok = true;
        for (Color i = 1; i <= g.k() && ok; ++i) {
            std::fill(deg.begin(), deg.end(), 0);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    ++deg[size_t(before(u, v, i) ? u : v)];
            std::vector<int> s(deg);
            std::sort(s.begin(), s.end());
            for (int j = 0; j < n; ++j)
                if (s[size_t(j)] != j) { // tournament transitive iff scores 0..n-1
                    ok = false;
                    break;
                }
        }
        if (!ok) continue;

        std::vector<Permutation> perms;
        perms.reserve(size_t(g.k()));
        for (Color i = 1; i <= g.k(); ++i) {
            std::vector<Vertex> order(size_t(n));
            std::iota(order.begin(), order.end(), 0);
            std::fill(deg.begin(), deg.end(), 0);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    ++deg[size_t(before(u, v, i) ? v : u)]; // predecessor counts
            std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
                return std::pair(deg[size_t(a)], a) < std::pair(deg[size_t(b)], b);
            });
            std::vector<int> pi(size_t(n));
            for (int j = 0; j < n; ++j) pi[size_t(j)] = lab[size_t(order[size_t(j)])];
            perms.emplace_back(std::move(pi));
        }
        Certificate cert{Labeling(lab), std::move(perms)};
        if (!verify(g, cert.labeling, cert.perms))
            throw std::logic_error("brute-force acceptance criterion disagrees with verify");
        return cert;
    } while (std::next_permutation(lab.begin(), lab.end()));
    return std::nullopt;
}

ModuleEnumeration enumerate_modules_naive(const ColoredGraph& g) {
    const int n = g.n();
    if (n > 10) throw Error(ErrorKind::TooLarge, "module enumeration is capped at 10 vertices");
    ModuleEnumeration out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Vertex> m;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) m.push_back(v);
        if (is_module(g, m)) out.modules.push_back(std::move(m));
    }
    for (const auto& m : out.modules) {
        bool strong = true;
        for (const auto& m2 : out.modules) {
            std::vector<Vertex> inter;
            std::set_intersection(m.begin(), m.end(), m2.begin(), m2.end(), std::back_inserter(inter));
            if (!inter.empty() && inter.size() != m.size() && inter.size() != m2.size()) {
                strong = false;
                break;
            }
        }
        if (strong) out.strong_modules.push_back(m);
    }
    auto by_size_lex = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    };
    std::sort(out.modules.begin(), out.modules.end(), by_size_lex);
    std::sort(out.strong_modules.begin(), out.strong_modules.end(), by_size_lex);
    return out;
}

RandomProfile random_profile_from_name(const std::string& name) {
    if (name == "uniform") return RandomProfile::Uniform;
    if (name == "gallai-substitution") return RandomProfile::GallaiSubstitution;
    if (name == "from-permutations") return RandomProfile::FromPermutations;
    throw Error(ErrorKind::BadInput, "unknown profile '" + name + "'");
}

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) { return rng() % m; }

// split ids into m non-empty contiguous blocks at random cuts
std::vector<std::vector<Vertex>> split_blocks(std::mt19937_64& rng, const std::vector<Vertex>& ids, int m) {
    const int n = int(ids.size());
    std::vector<int> cuts;
    std::vector<int> positions(size_t(n) - 1);
    std::iota(positions.begin(), positions.end(), 1);
    for (int i = 0; i < m - 1; ++i) { // partial Fisher-Yates
        const int j = i + int(bounded(rng, positions.size() - size_t(i)));
        std::swap(positions[size_t(i)], positions[size_t(j)]);
        cuts.push_back(positions[size_t(i)]);
    }
    cuts.push_back(0);
    cuts.push_back(n);
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::vector<Vertex>> blocks;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        blocks.emplace_back(ids.begin() + cuts[i], ids.begin() + cuts[i + 1]);
    return blocks;
}

struct Gen {
    std::mt19937_64& rng;
    int k;
    std::vector<std::tuple<Vertex, Vertex, int>>& assignments;

    void cross(const std::vector<Vertex>& a, const std::vector<Vertex>& b, int color) {
        for (Vertex u : a)
            for (Vertex v : b) assignments.emplace_back(u, v, color);
    }

    void gallai(const std::vector<Vertex>& ids) {
        if (ids.size() == 1) return;
        const int m = 2 + int(bounded(rng, std::min<std::uint64_t>(ids.size(), 4) - 1));
        auto blocks = split_blocks(rng, ids, m);
        int a = 1 + int(bounded(rng, std::uint64_t(k)));
        int b = k >= 2 ? 1 + int(bounded(rng, std::uint64_t(k))) : a;
        for (size_t i = 0; i < blocks.size(); ++i)
            for (size_t j = i + 1; j < blocks.size(); ++j)
                cross(blocks[i], blocks[j], bounded(rng, 2) ? a : b);
        for (auto& blk : blocks) gallai(blk);
    }

    void member(const std::vector<Vertex>& ids) {
        if (ids.size() == 1) return;
        const bool series = k < 2 || ids.size() < 3 || bounded(rng, 2) == 0;
        if (series) {
            const int m = 2 + int(bounded(rng, std::min<std::uint64_t>(ids.size(), 6) - 1));
            auto blocks = split_blocks(rng, ids, m);
            const int c = 1 + int(bounded(rng, std::uint64_t(k)));
            for (size_t i = 0; i < blocks.size(); ++i)
                for (size_t j = i + 1; j < blocks.size(); ++j) cross(blocks[i], blocks[j], c);
            for (auto& blk : blocks) member(blk);
            return;
        }
        const int m = 3 + int(bounded(rng, std::min<std::uint64_t>(ids.size(), 24) - 2));
        auto blocks = split_blocks(rng, ids, m);
        std::vector<int> tau(size_t(m));
        std::iota(tau.begin(), tau.end(), 1);
        auto monotone = [&] {
            return std::is_sorted(tau.begin(), tau.end()) ||
                   std::is_sorted(tau.rbegin(), tau.rend());
        };
        do {
            for (int i = m - 1; i > 0; --i) std::swap(tau[size_t(i)], tau[size_t(bounded(rng, std::uint64_t(i) + 1))]);
        } while (monotone());
        Permutation perm(tau);
        const int a = 1 + int(bounded(rng, std::uint64_t(k)));
        int b = 1 + int(bounded(rng, std::uint64_t(k) - 1));
        if (b >= a) ++b;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                const bool inv = perm.position_of(j + 1) < perm.position_of(i + 1);
                cross(blocks[size_t(i)], blocks[size_t(j)], inv ? a : b);
            }
        for (auto& blk : blocks) member(blk);
    }
};

} // namespace

RandomInstanceStream::RandomInstanceStream(std::uint64_t seed, int n, int k, RandomProfile profile)
    : rng_(seed), n_(n), k_(k), profile_(profile) {
    if (n < 1) throw Error(ErrorKind::BadInput, "instance size must be positive");
    if (k < 1 && n > 1) throw Error(ErrorKind::BadInput, "need at least one color");
}

ColoredGraph RandomInstanceStream::next() {
    std::vector<std::tuple<Vertex, Vertex, int>> assignments;
    if (n_ == 1) return ColoredGraph::from_assignments(1, {});

    if (profile_ == RandomProfile::Uniform) {
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                assignments.emplace_back(u, v, 1 + int(bounded(rng_, std::uint64_t(k_))));
        return ColoredGraph::from_assignments(n_, assignments);
    }

    std::vector<Vertex> ids(size_t(n_));
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = n_ - 1; i > 0; --i) std::swap(ids[size_t(i)], ids[size_t(bounded(rng_, std::uint64_t(i) + 1))]);

    Gen gen{rng_, k_, assignments};
    if (profile_ == RandomProfile::GallaiSubstitution)
        gen.gallai(ids);
    else
        gen.member(ids);
    return ColoredGraph::from_assignments(n_, assignments);
}

} // namespace ecperm
