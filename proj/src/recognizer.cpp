#include "ecperm/recognizer.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace ecperm {

namespace {

bool before_in_color_order(const ColoredGraph& g, const Labeling& l, Color i, Vertex u, Vertex v) {
    // Def-4 comparator. The quotient edge {M^{u,v}_u, M^{u,v}_v} carries the
    // same color as the raw pair {u,v} (all pairs across the two child
    // modules do), so no tree lookup is needed.
    if (l.label(u) > l.label(v)) return g.color(u, v) == i;
    return g.color(u, v) != i;
}

template <typename Less>
void merge_sort(std::vector<Vertex>& a, Less less) {
    const size_t n = a.size();
    std::vector<Vertex> buf(n);
    for (size_t width = 1; width < n; width *= 2) {
        for (size_t lo = 0; lo + width < n; lo += 2 * width) {
            const size_t mid = lo + width;
            const size_t hi = std::min(lo + 2 * width, n);
            size_t i = lo, j = mid, o = lo;
            while (i < mid && j < hi) buf[o++] = less(a[j], a[i]) ? a[j++] : a[i++];
            while (i < mid) buf[o++] = a[i++];
            while (j < hi) buf[o++] = a[j++];
            std::copy(buf.begin() + long(lo), buf.begin() + long(hi), a.begin() + long(lo));
        }
    }
}

// ell^M realizes the quotient iff every per-color order is a strict total
// order (trichotomy is structural; transitivity is what can fail).
bool quotient_labeling_realizes(const ColoredGraph& q, const std::vector<int>& labels) {
    const int m = q.n();
    Labeling l(labels);
    for (Color i = 1; i <= q.k(); ++i) {
        std::vector<Vertex> order(size_t(m));
        std::iota(order.begin(), order.end(), 0);
        merge_sort(order, [&](Vertex a, Vertex b) { return before_in_color_order(q, l, i, a, b); });
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y)
                if (!before_in_color_order(q, l, i, order[size_t(x)], order[size_t(y)])) return false;
    }
    return true;
}

Obstruction wide_quotient_obstruction(const ColoredGraph& g, const MDNode& node) {
    const ColoredGraph& q = *node.quotient;
    auto tri = find_rainbow_triangle(q);
    if (!tri) throw std::logic_error("primitive quotient with >= 3 colors has no rainbow triangle");
    const Vertex u = node.representatives[size_t(tri->u)];
    const Vertex v = node.representatives[size_t(tri->v)];
    const Vertex w = node.representatives[size_t(tri->w)];
    Triangle lifted{u, v, w, {g.color(u, v), g.color(u, w), g.color(v, w)}};
    Obstruction o;
    o.kind = Obstruction::Kind::RainbowTriangle;
    o.triangle = lifted;
    o.wide_quotient = WideQuotientInfo{node.vertices, q.k()};
    return o;
}

} // namespace

Labeling build_prec(const MDTree& t, const QuotientLabelings& labels) {
    std::vector<int> label_of(size_t(t.n), 0);
    int next = 1;
    auto dfs = [&](auto&& self, int id) -> void {
        const MDNode& node = t.node(id);
        if (node.kind == NodeKind::Leaf) {
            label_of[size_t(node.vertices.front())] = next++;
            return;
        }
        auto it = labels.by_node.find(id);
        if (it == labels.by_node.end())
            throw Error(ErrorKind::IncompleteLabelings, "no quotient labeling for an internal node");
        const auto& lm = it->second;
        const int m = int(node.children.size());
        if (int(lm.size()) != m)
            throw Error(ErrorKind::IncompleteLabelings, "quotient labeling arity mismatch");
        std::vector<int> by_label(size_t(m), -1);
        for (int c = 0; c < m; ++c) {
            if (lm[size_t(c)] < 1 || lm[size_t(c)] > m || by_label[size_t(lm[size_t(c)]) - 1] != -1)
                throw Error(ErrorKind::IncompleteLabelings, "quotient labeling is not a bijection");
            by_label[size_t(lm[size_t(c)]) - 1] = node.children[size_t(c)];
        }
        for (int child : by_label) self(self, child);
    };
    dfs(dfs, t.root);
    return Labeling(label_of);
}

Permutation build_color_order(const ColoredGraph& g, const MDTree& t, const LCATable& lca,
                              const Labeling& l, Color i) {
    (void)t;
    (void)lca; // comparator works off the color table; see before_in_color_order
    if (i < 1 || i > g.k()) throw Error(ErrorKind::UnknownColor, "color " + std::to_string(i));
    const int n = g.n();
    std::vector<Vertex> order(size_t(n));
    std::iota(order.begin(), order.end(), 0);
    merge_sort(order, [&](Vertex a, Vertex b) { return before_in_color_order(g, l, i, a, b); });

#ifdef NDEBUG
    const bool full_check = n <= 64;
#else
    const bool full_check = true;
#endif
    if (full_check) {
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (!before_in_color_order(g, l, i, order[size_t(x)], order[size_t(y)]))
                    throw Error(ErrorKind::NotTotalOrder,
                                "color order " + std::to_string(i) + " is not transitive");
    }
    std::vector<int> pi(size_t(n));
    for (int j = 0; j < n; ++j) pi[size_t(j)] = l.label(order[size_t(j)]);
    return Permutation(pi);
}

RecognitionOutcome recognize(const ColoredGraph& g, const RecognizeOptions& opts) {
    MDTree t = decompose(g);

    QuotientLabelings labels;
    std::vector<unsigned char> pinned(size_t(t.node_count()), 0);
    if (opts.pins) {
        for (const auto& pin : *opts.pins) {
            std::vector<Vertex> key(pin.module);
            std::sort(key.begin(), key.end());
            int found = -1;
            for (int id = 0; id < t.node_count(); ++id)
                if (t.node(id).kind != NodeKind::Leaf && t.node(id).vertices == key) {
                    found = id;
                    break;
                }
            if (found < 0) throw Error(ErrorKind::BadInput, "pinned module is not a strong module of the input");
            const MDNode& node = t.node(found);
            const int m = int(node.children.size());
            if (int(pin.order.size()) != m)
                throw Error(ErrorKind::BadInput, "pinned order does not list every child module");
            std::vector<int> lm(size_t(m), 0);
            for (int pos = 0; pos < m; ++pos) {
                std::vector<Vertex> cs(pin.order[size_t(pos)]);
                std::sort(cs.begin(), cs.end());
                int child_idx = -1;
                for (int c = 0; c < m; ++c)
                    if (t.node(node.children[size_t(c)]).vertices == cs) {
                        child_idx = c;
                        break;
                    }
                if (child_idx < 0 || lm[size_t(child_idx)] != 0)
                    throw Error(ErrorKind::BadInput, "pinned order does not match the child modules");
                lm[size_t(child_idx)] = pos + 1;
            }
            if (node.kind == NodeKind::Prime && !quotient_labeling_realizes(*node.quotient, lm))
                throw Error(ErrorKind::BadInput, "pinned labeling does not realize the prime quotient");
            labels.by_node[found] = std::move(lm);
            pinned[size_t(found)] = 1;
        }
    }

    // step 1: a prime quotient with >= 3 colors is a certified rejection
    for (int id = 0; id < t.node_count(); ++id) {
        const MDNode& node = t.node(id);
        if (node.kind == NodeKind::Prime && node.quotient->k() >= 3)
            return wide_quotient_obstruction(g, node);
    }

    // step 2: recognize one monochromatic subgraph per unpinned prime quotient
    std::vector<int> todo;
    for (int id = 0; id < t.node_count(); ++id)
        if (t.node(id).kind == NodeKind::Prime && !pinned[size_t(id)]) todo.push_back(id);

    std::vector<std::optional<std::pair<Labeling, Permutation>>> results(todo.size());
    auto run = [&](size_t lo, size_t hi) {
        for (size_t j = lo; j < hi; ++j)
            results[j] = recognize_simple_primitive(monochromatic_subgraph(*t.node(todo[j]).quotient, 1));
    };
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || todo.size() < 2) {
        run(0, todo.size());
    } else {
        const size_t nt = std::min(size_t(jobs), todo.size());
        std::vector<std::thread> threads;
        const size_t chunk = (todo.size() + nt - 1) / nt;
        for (size_t s = 0; s < todo.size(); s += chunk)
            threads.emplace_back(run, s, std::min(s + chunk, todo.size()));
        for (auto& th : threads) th.join();
    }
    for (size_t j = 0; j < todo.size(); ++j) {
        if (results[j]) continue;
        const MDNode& node = t.node(todo[j]);
        NonPermQuotientInfo info;
        info.module = node.vertices;
        for (int c : node.children) info.children.push_back(t.node(c).vertices);
        info.representatives = node.representatives;
        info.failing_color = Color(node.quotient->original_color(1));
        Obstruction o;
        o.kind = Obstruction::Kind::NonPermutationQuotient;
        o.non_perm_quotient = std::move(info);
        return o;
    }
    for (size_t j = 0; j < todo.size(); ++j) labels.by_node[todo[j]] = results[j]->first.labels();

    // step 3: arbitrary (deterministic) labelings for the remaining nodes:
    // children are ordered by smallest contained vertex already
    for (int id = 0; id < t.node_count(); ++id) {
        const MDNode& node = t.node(id);
        if (node.kind == NodeKind::Leaf || labels.by_node.count(id)) continue;
        std::vector<int> lm(node.children.size());
        std::iota(lm.begin(), lm.end(), 1);
        labels.by_node[id] = std::move(lm);
    }

    // steps 4 and 5
    Labeling l = build_prec(t, labels);
    LCATable lca = lca_table(t);
    std::vector<Permutation> perms;
    perms.reserve(size_t(g.k()));
    for (Color i = 1; i <= g.k(); ++i) perms.push_back(build_color_order(g, t, lca, l, i));

    Certificate cert{std::move(l), std::move(perms)};
    if (!verify(g, cert.labeling, cert.perms))
        throw std::logic_error("recognizer assembled an invalid certificate");
    return cert;
}

bool obstruction_validates(const ColoredGraph& g, const Obstruction& o) {
    auto in_range = [&](Vertex v) { return v >= 0 && v < g.n(); };
    switch (o.kind) {
    case Obstruction::Kind::RainbowTriangle: {
        if (!o.triangle) return false;
        const Triangle& t = *o.triangle;
        if (!in_range(t.u) || !in_range(t.v) || !in_range(t.w)) return false;
        if (t.u == t.v || t.u == t.w || t.v == t.w) return false;
        const Color a = g.color(t.u, t.v), b = g.color(t.u, t.w), c = g.color(t.v, t.w);
        if (a == b || a == c || b == c) return false;
        if (t.colors != std::array<Color, 3>{a, b, c}) return false;
        if (o.wide_quotient) {
            const auto& wq = *o.wide_quotient;
            if (!is_module(g, wq.module)) return false;
            for (Vertex x : {t.u, t.v, t.w})
                if (!std::binary_search(wq.module.begin(), wq.module.end(), x)) return false;
        }
        return true;
    }
    case Obstruction::Kind::NonPermutationQuotient: {
        if (!o.non_perm_quotient) return false;
        const auto& info = *o.non_perm_quotient;
        if (!is_module(g, info.module)) return false;
        std::vector<Vertex> covered;
        for (const auto& child : info.children) {
            if (child.empty() || !is_module(g, child)) return false;
            covered.insert(covered.end(), child.begin(), child.end());
        }
        std::sort(covered.begin(), covered.end());
        std::vector<Vertex> mod(info.module);
        std::sort(mod.begin(), mod.end());
        if (covered != mod) return false;
        if (info.representatives.size() != info.children.size()) return false;
        for (size_t i = 0; i < info.children.size(); ++i) {
            const auto& child = info.children[i];
            if (std::find(child.begin(), child.end(), info.representatives[i]) == child.end()) return false;
        }
        auto ind = induced_subgraph(g, info.representatives);
        if (ind.graph.k() != 2) return false;
        if (info.failing_color < 1 || info.failing_color > g.k()) return false;
        const Color local = ind.color_map[size_t(info.failing_color)];
        if (local == 0) return false;
        return !recognize_simple(monochromatic_subgraph(ind.graph, local)).has_value();
    }
    }
    return false;
}

RestrictResult restrict_certificate(const ColoredGraph& g, const Certificate& cert,
                                    const std::vector<Vertex>& m) {
    if (m.empty()) throw Error(ErrorKind::EmptySet, "restriction needs a non-empty vertex set");
    if (!verify(g, cert.labeling, cert.perms))
        throw Error(ErrorKind::BadInput, "certificate does not verify against the graph");

    auto ind = induced_subgraph(g, m);
    const auto& keep = ind.new_to_old;
    const int msize = int(keep.size());

    // rank-compress the surviving labels
    std::vector<int> ms;
    ms.reserve(size_t(msize));
    for (Vertex v : keep) ms.push_back(cert.labeling.label(v));
    std::sort(ms.begin(), ms.end());
    auto rank = [&](int label) {
        return int(std::lower_bound(ms.begin(), ms.end(), label) - ms.begin()) + 1;
    };
    std::vector<int> lhat(size_t(msize));
    for (int j = 0; j < msize; ++j) lhat[size_t(j)] = rank(cert.labeling.label(keep[size_t(j)]));

    std::vector<Permutation> perms_new;
    perms_new.resize(0);
    perms_new.reserve(size_t(ind.graph.k()));
    std::vector<std::vector<int>> seqs(size_t(ind.graph.k()));
    for (Color c = 1; c <= g.k(); ++c) {
        const Color nc = ind.color_map[size_t(c)];
        if (nc == 0) continue;
        const Permutation& pi = cert.perms[size_t(c) - 1];
        std::vector<int> ps;
        ps.reserve(size_t(msize));
        for (Vertex v : keep) ps.push_back(pi.position_of(cert.labeling.label(v)));
        std::sort(ps.begin(), ps.end());
        std::vector<int> seq(size_t(msize));
        for (int j = 0; j < msize; ++j) seq[size_t(j)] = rank(pi.at(ps[size_t(j)]));
        seqs[size_t(nc) - 1] = std::move(seq);
    }
    for (auto& s : seqs) perms_new.emplace_back(std::move(s));

    RestrictResult out{std::move(ind.graph), Certificate{Labeling(lhat), std::move(perms_new)},
                       std::move(ind.color_map), keep};
    if (!verify(out.graph, out.cert.labeling, out.cert.perms))
        throw std::logic_error("restriction produced an invalid certificate");
    return out;
}

bool theorem1_check(const ColoredGraph& g, Theorem1Item item) {
    switch (item) {
    case Theorem1Item::InducedSubgraphs: {
        if (g.n() > 12)
            throw Error(ErrorKind::TooLarge, "induced-subgraph enumeration is capped at 12 vertices");
        for (unsigned mask = 1; mask < (1u << g.n()); ++mask) {
            std::vector<Vertex> w;
            for (int v = 0; v < g.n(); ++v)
                if (mask & (1u << v)) w.push_back(v);
            auto sub = induced_subgraph(g, w);
            if (!std::holds_alternative<Certificate>(recognize(sub.graph))) return false;
        }
        return true;
    }
    case Theorem1Item::StrongQuotients: {
        MDTree t = decompose(g);
        for (int id = 0; id < t.node_count(); ++id) {
            const MDNode& node = t.node(id);
            if (node.kind == NodeKind::Leaf) continue;
            if (!std::holds_alternative<Certificate>(recognize(*node.quotient))) return false;
        }
        return true;
    }
    case Theorem1Item::PrimeQuotients: {
        MDTree t = decompose(g);
        for (int id = 0; id < t.node_count(); ++id) {
            const MDNode& node = t.node(id);
            if (node.kind != NodeKind::Prime) continue;
            if (node.vertices.size() >= 3 && node.quotient->k() != 2) return false;
            if (!std::holds_alternative<Certificate>(recognize(*node.quotient))) return false;
        }
        return true;
    }
    case Theorem1Item::MonochromaticSubgraphs: {
        if (find_rainbow_triangle(g)) return false;
        for (Color i = 1; i <= g.k(); ++i)
            if (!recognize_simple(monochromatic_subgraph(g, i))) return false;
        return true;
    }
    }
    return false;
}

} // namespace ecperm
