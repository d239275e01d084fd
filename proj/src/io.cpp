#include "ecperm/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ecperm {

using nlohmann::json;

namespace {

ColoredGraph from_json_value(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw Error(ErrorKind::BadInput, "expected {\"n\":..,\"edges\":[[u,v,c],..]}");
    const int n = j.at("n").get<int>();
    std::vector<std::tuple<Vertex, Vertex, int>> assignments;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::BadInput, "edge entries must be [u,v,c]");
        assignments.emplace_back(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
    }
    return ColoredGraph::from_assignments(n, assignments);
}

} // namespace

ColoredGraph read_ecg(std::istream& in) {
    // peek: JSON mirror starts with '{'
    int c;
    while ((c = in.peek()) != EOF && (c == ' ' || c == '\n' || c == '\t' || c == '\r')) in.get();
    if (c == '{') {
        json j;
        in >> j;
        return from_json_value(j);
    }

    std::string line;
    int lineno = 0;
    int n = -1, k = -1;
    std::vector<std::tuple<Vertex, Vertex, int>> assignments;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag)) continue; // blank/comment line before the header
            if (tag != "ecg" || !(ls >> n >> k) || n < 1 || k < 0)
                throw Error(ErrorKind::BadInput, "line " + std::to_string(lineno) + ": expected header 'ecg <n> <k>'");
            continue;
        }
        int u, v, col;
        if (!(ls >> u)) continue;
        if (!(ls >> v >> col))
            throw Error(ErrorKind::BadInput, "line " + std::to_string(lineno) + ": expected '<u> <v> <color>'");
        std::string extra;
        if (ls >> extra)
            throw Error(ErrorKind::BadInput, "line " + std::to_string(lineno) + ": stray token '" + extra + "'");
        assignments.emplace_back(u, v, col);
    }
    if (n < 0) throw Error(ErrorKind::BadInput, "missing 'ecg <n> <k>' header");
    ColoredGraph g = ColoredGraph::from_assignments(n, assignments);
    if (g.k() != k)
        throw Error(ErrorKind::BadInput, "header announces " + std::to_string(k) + " colors but the edges use " +
                                             std::to_string(g.k()));
    return g;
}

ColoredGraph read_ecg_string(const std::string& text) {
    std::istringstream in(text);
    return read_ecg(in);
}

ColoredGraph read_ecg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::BadInput, "cannot open '" + path + "'");
    return read_ecg(in);
}

std::string write_ecg_text(const ColoredGraph& g) {
    std::ostringstream os;
    os << "ecg " << g.n() << ' ' << g.k() << '\n';
    for (auto [u, v, c] : g.sorted_edges()) os << u << ' ' << v << ' ' << g.original_color(c) << '\n';
    return os.str();
}

std::string write_ecg_json(const ColoredGraph& g) {
    json edges = json::array();
    for (auto [u, v, c] : g.sorted_edges()) edges.push_back({u, v, g.original_color(c)});
    return json{{"n", g.n()}, {"edges", edges}}.dump();
}

Permutation parse_permutation(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 3 || s.front() != '(' || s.back() != ')')
        throw Error(ErrorKind::BadInput, "permutation must look like (1,5,2,4,7,3,6)");
    std::vector<int> seq;
    std::istringstream ls(s.substr(1, s.size() - 2));
    std::string tok;
    while (std::getline(ls, tok, ',')) {
        try {
            seq.push_back(std::stoi(tok));
        } catch (...) {
            throw Error(ErrorKind::BadInput, "bad permutation entry '" + tok + "'");
        }
    }
    return Permutation(seq);
}

std::string format_permutation(const Permutation& p) {
    std::ostringstream os;
    os << '(';
    for (int i = 1; i <= p.length(); ++i) {
        if (i > 1) os << ',';
        os << p.at(i);
    }
    os << ')';
    return os.str();
}

Labeling parse_labeling(const std::string& text, int n) {
    if (text == "id" || text == "identity") return Labeling::identity(n);
    std::vector<int> labels(size_t(n), 0);
    std::string cleaned(text);
    for (char& ch : cleaned)
        if (ch == ',') ch = ' ';
    std::istringstream ls(cleaned);
    std::string tok;
    int seen = 0;
    while (ls >> tok) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::BadInput, "labeling entries look like '<vertex>:<label>'");
        int v, l;
        try {
            v = std::stoi(tok.substr(0, colon));
            l = std::stoi(tok.substr(colon + 1));
        } catch (...) {
            throw Error(ErrorKind::BadInput, "bad labeling entry '" + tok + "'");
        }
        if (v < 0 || v >= n) throw Error(ErrorKind::BadInput, "labeling names vertex " + std::to_string(v));
        if (labels[size_t(v)] != 0) throw Error(ErrorKind::BadInput, "vertex " + std::to_string(v) + " labeled twice");
        labels[size_t(v)] = l;
        ++seen;
    }
    if (seen != n) throw Error(ErrorKind::BadInput, "labeling must cover all " + std::to_string(n) + " vertices");
    return Labeling(labels);
}

std::string format_labeling(const Labeling& l) {
    std::ostringstream os;
    for (Vertex v = 0; v < l.n(); ++v) {
        if (v) os << ',';
        os << v << ':' << l.label(v);
    }
    return os.str();
}

std::string certificate_to_json(const Certificate& cert) {
    json perms = json::array();
    for (const auto& p : cert.perms) perms.push_back(p.seq());
    return json{{"result", "certificate"},
                {"n", cert.labeling.n()},
                {"k", int(cert.perms.size())},
                {"labeling", cert.labeling.labels()},
                {"permutations", perms}}
        .dump();
}

Certificate certificate_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("labeling") || !j.contains("permutations"))
        throw Error(ErrorKind::BadInput, "certificate JSON needs 'labeling' and 'permutations'");
    Labeling l(j.at("labeling").get<std::vector<int>>());
    std::vector<Permutation> perms;
    for (const auto& p : j.at("permutations")) perms.emplace_back(p.get<std::vector<int>>());
    return Certificate{std::move(l), std::move(perms)};
}

std::string obstruction_to_json(const Obstruction& o) {
    json j;
    j["result"] = "obstruction";
    switch (o.kind) {
    case Obstruction::Kind::RainbowTriangle: {
        j["kind"] = "rainbow_triangle";
        const Triangle& t = *o.triangle;
        j["triangle"] = {{"vertices", {t.u, t.v, t.w}}, {"colors", {t.colors[0], t.colors[1], t.colors[2]}}};
        if (o.wide_quotient)
            j["wide_quotient"] = {{"module", o.wide_quotient->module},
                                  {"quotient_colors", o.wide_quotient->quotient_color_count}};
        break;
    }
    case Obstruction::Kind::NonPermutationQuotient: {
        j["kind"] = "non_permutation_quotient";
        const auto& info = *o.non_perm_quotient;
        j["module"] = info.module;
        j["children"] = info.children;
        j["representatives"] = info.representatives;
        j["failing_color"] = info.failing_color;
        break;
    }
    }
    return j.dump();
}

std::string mdtree_to_json(const MDTree& t) {
    json nodes = json::array();
    for (int id = 0; id < t.node_count(); ++id) {
        const MDNode& node = t.node(id);
        json jn{{"id", id},
                {"vertices", node.vertices},
                {"kind", node_kind_name(node.kind)},
                {"parent", node.parent},
                {"children", node.children}};
        if (node.quotient) {
            json edges = json::array();
            for (auto [u, v, c] : node.quotient->sorted_edges())
                edges.push_back({u, v, node.quotient->original_color(c)});
            jn["quotient"] = {{"n", node.quotient->n()}, {"edges", edges}};
            jn["representatives"] = node.representatives;
        }
        nodes.push_back(std::move(jn));
    }
    return json{{"n", t.n}, {"root", t.root}, {"nodes", nodes}}.dump();
}

std::vector<ModulePin> pins_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw Error(ErrorKind::BadInput,
                    "quotient labels must be a JSON array of {\"module\":[..],\"order\":[[..],..]}");
    std::vector<ModulePin> pins;
    for (const auto& entry : j) {
        if (!entry.contains("module") || !entry.contains("order"))
            throw Error(ErrorKind::BadInput, "pin entries need 'module' and 'order'");
        ModulePin pin;
        pin.module = entry.at("module").get<std::vector<Vertex>>();
        for (const auto& child : entry.at("order")) pin.order.push_back(child.get<std::vector<Vertex>>());
        pins.push_back(std::move(pin));
    }
    return pins;
}

} // namespace ecperm
