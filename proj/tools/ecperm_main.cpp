#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ecperm/classes.hpp"
#include "ecperm/io.hpp"
#include "ecperm/oracle.hpp"
#include "ecperm/recognizer.hpp"

namespace {

using namespace ecperm;

ColoredGraph load_graph(const std::string& path) {
    if (path == "-") return read_ecg(std::cin);
    return read_ecg_file(path);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::BadInput, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
    std::string cleaned(text);
    for (char& ch : cleaned)
        if (ch == ',') ch = ' ';
    std::istringstream ls(cleaned);
    std::vector<Vertex> out;
    int v;
    while (ls >> v) out.push_back(v);
    if (out.empty()) throw Error(ErrorKind::BadInput, "empty vertex list");
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"ecperm: recognition toolkit for complete edge-colored permutation graphs"};
    app.require_subcommand(1);

    // recognize
    auto* cmd_rec = app.add_subcommand("recognize", "recognize a graph; print a certificate or an obstruction");
    std::string rec_file, rec_pins;
    int rec_jobs = 1;
    bool rec_assert = false;
    cmd_rec->add_option("graph", rec_file, "ECG v1 file or - for stdin")->required();
    cmd_rec->add_option("--quotient-labels", rec_pins, "JSON file pinning quotient labelings");
    cmd_rec->add_option("--jobs", rec_jobs, "worker threads for per-quotient recognition");
    cmd_rec->add_flag("--assert", rec_assert, "exit 1 when the graph is not a member");

    // verify
    auto* cmd_ver = app.add_subcommand("verify", "check a certificate against a graph");
    std::string ver_file, ver_cert, ver_labeling;
    std::vector<std::string> ver_perms;
    bool ver_assert = false;
    cmd_ver->add_option("graph", ver_file, "ECG v1 file or - for stdin")->required();
    cmd_ver->add_option("--cert", ver_cert, "certificate JSON file");
    cmd_ver->add_option("--labeling", ver_labeling, "labeling ('id' or 'v:label' pairs)");
    cmd_ver->add_option("--perm", ver_perms, "permutation per color, e.g. \"(3,1,4,2)\"");
    cmd_ver->add_flag("--assert", ver_assert, "exit 1 when the certificate does not verify");

    // generate
    auto* cmd_gen = app.add_subcommand("generate", "build the colored graph of a labeling and permutations");
    std::string gen_labeling = "id";
    std::vector<std::string> gen_perms;
    bool gen_json = false;
    cmd_gen->add_option("--labeling", gen_labeling, "labeling ('id' or 'v:label' pairs)");
    cmd_gen->add_option("--perm", gen_perms, "permutation per color")->required();
    cmd_gen->add_flag("--json", gen_json, "emit the JSON mirror instead of ECG text");

    // mdtree
    auto* cmd_md = app.add_subcommand("mdtree", "modular decomposition tree with quotients");
    std::string md_file;
    bool md_dot = false, md_text = false;
    cmd_md->add_option("graph", md_file, "ECG v1 file or - for stdin")->required();
    cmd_md->add_flag("--dot", md_dot, "emit DOT instead of JSON");
    cmd_md->add_flag("--text", md_text, "emit indented text instead of JSON");

    // restrict
    auto* cmd_res = app.add_subcommand("restrict", "restrict a certificate to an induced subgraph");
    std::string res_file, res_cert, res_subset;
    cmd_res->add_option("graph", res_file, "ECG v1 file or - for stdin")->required();
    cmd_res->add_option("--cert", res_cert, "certificate JSON file")->required();
    cmd_res->add_option("--subset", res_subset, "vertex subset, e.g. 0,2,5")->required();

    // classify
    auto* cmd_cls = app.add_subcommand("classify", "gallai / symbolic-ultrametric / colored-permutation flags");
    std::string cls_file;
    cmd_cls->add_option("graph", cls_file, "ECG v1 file or - for stdin")->required();

    // oracle
    auto* cmd_ora = app.add_subcommand("oracle", "brute-force recognition (small instances only)");
    std::string ora_file;
    bool ora_assert = false;
    cmd_ora->add_option("graph", ora_file, "ECG v1 file or - for stdin")->required();
    cmd_ora->add_flag("--assert", ora_assert, "exit 1 when the graph is not a member");

    // random
    auto* cmd_rnd = app.add_subcommand("random", "emit seeded random instances");
    std::string rnd_profile = "uniform";
    int rnd_n = 8, rnd_k = 3, rnd_count = 1;
    std::uint64_t rnd_seed = 1;
    cmd_rnd->add_option("--profile", rnd_profile, "uniform | gallai-substitution | from-permutations");
    cmd_rnd->add_option("-n", rnd_n, "vertex count");
    cmd_rnd->add_option("-k", rnd_k, "color budget");
    cmd_rnd->add_option("--seed", rnd_seed, "RNG seed");
    cmd_rnd->add_option("--count", rnd_count, "number of instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cmd_rec->parsed()) {
        ColoredGraph g = load_graph(rec_file);
        RecognizeOptions opts;
        std::vector<ModulePin> pins;
        if (!rec_pins.empty()) {
            pins = pins_from_json(slurp(rec_pins));
            opts.pins = &pins;
        }
        opts.jobs = rec_jobs;
        auto outcome = recognize(g, opts);
        if (auto* cert = std::get_if<Certificate>(&outcome)) {
            std::cout << certificate_to_json(*cert) << '\n';
            return 0;
        }
        std::cout << obstruction_to_json(std::get<Obstruction>(outcome)) << '\n';
        return rec_assert ? 1 : 0;
    }

    if (cmd_ver->parsed()) {
        ColoredGraph g = load_graph(ver_file);
        Certificate cert = !ver_cert.empty() ? certificate_from_json(slurp(ver_cert)) : [&] {
            if (ver_perms.empty()) throw Error(ErrorKind::BadInput, "need --cert or --labeling/--perm");
            std::vector<Permutation> perms;
            for (const auto& s : ver_perms) perms.push_back(parse_permutation(s));
            return Certificate{parse_labeling(ver_labeling.empty() ? "id" : ver_labeling, g.n()), std::move(perms)};
        }();
        const bool ok = verify(g, cert.labeling, cert.perms);
        std::cout << (ok ? "{\"verified\":true}" : "{\"verified\":false}") << '\n';
        return ok || !ver_assert ? 0 : 1;
    }

    if (cmd_gen->parsed()) {
        std::vector<Permutation> perms;
        for (const auto& s : gen_perms) perms.push_back(parse_permutation(s));
        const int n = perms.front().length();
        for (const auto& p : perms)
            if (p.length() != n) throw Error(ErrorKind::ArityMismatch, "permutations must share one length");
        ColoredGraph g = generate_colored(parse_labeling(gen_labeling, n), perms);
        std::cout << (gen_json ? write_ecg_json(g) + "\n" : write_ecg_text(g));
        return 0;
    }

    if (cmd_md->parsed()) {
        ColoredGraph g = load_graph(md_file);
        MDTree t = decompose(g);
        if (md_dot)
            std::cout << mdtree_to_dot(t);
        else if (md_text)
            std::cout << mdtree_to_text(t);
        else
            std::cout << mdtree_to_json(t) << '\n';
        return 0;
    }

    if (cmd_res->parsed()) {
        ColoredGraph g = load_graph(res_file);
        Certificate cert = certificate_from_json(slurp(res_cert));
        auto result = restrict_certificate(g, cert, parse_vertex_list(res_subset));
        std::cout << "{\"graph\":" << write_ecg_json(result.graph)
                  << ",\"certificate\":" << certificate_to_json(result.cert) << "}" << '\n';
        return 0;
    }

    if (cmd_cls->parsed()) {
        ColoredGraph g = load_graph(cls_file);
        const bool gallai = is_gallai(g);
        const bool ultra = is_symbolic_ultrametric_graph(g);
        const bool perm = std::holds_alternative<Certificate>(recognize(g));
        std::cout << "{\"gallai\":" << (gallai ? "true" : "false")
                  << ",\"symbolic_ultrametric\":" << (ultra ? "true" : "false")
                  << ",\"colored_permutation\":" << (perm ? "true" : "false") << "}" << '\n';
        return 0;
    }

    if (cmd_ora->parsed()) {
        ColoredGraph g = load_graph(ora_file);
        auto cert = brute_force_recognize(g);
        if (cert) {
            std::cout << certificate_to_json(*cert) << '\n';
            return 0;
        }
        std::cout << "{\"result\":\"no_certificate\"}" << '\n';
        return ora_assert ? 1 : 0;
    }

    if (cmd_rnd->parsed()) {
        if (const char* env = std::getenv("ECPERM_SEED")) {
            if (cmd_rnd->count("--seed") > 0)
                std::cerr << "ECPERM_SEED overrides --seed\n";
            rnd_seed = std::strtoull(env, nullptr, 10);
        }
        RandomInstanceStream stream(rnd_seed, rnd_n, rnd_k, random_profile_from_name(rnd_profile));
        for (int i = 0; i < rnd_count; ++i) {
            if (i) std::cout << '\n';
            std::cout << write_ecg_text(stream.next());
        }
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ecperm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
