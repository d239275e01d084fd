#pragma once

#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ecperm/modular_decomposition.hpp"
#include "ecperm/permutation.hpp"

namespace ecperm {

struct WideQuotientInfo {
    std::vector<Vertex> module;
    int quotient_color_count = 0;
};

struct NonPermQuotientInfo {
    std::vector<Vertex> module;
    std::vector<std::vector<Vertex>> children;
    std::vector<Vertex> representatives;
    Color failing_color = 0; // canonical color of G whose class fails recognize_simple
};

struct Obstruction {
    enum class Kind { RainbowTriangle, NonPermutationQuotient };
    Kind kind;
    std::optional<Triangle> triangle;                    // set for RainbowTriangle
    std::optional<WideQuotientInfo> wide_quotient;       // set when the triangle came out of a wide prime quotient
    std::optional<NonPermQuotientInfo> non_perm_quotient;
};

// Re-checks the witness against the raw graph, without trusting decompose.
bool obstruction_validates(const ColoredGraph& g, const Obstruction& o);

// One labeling of the quotient per internal tree node: labels[i] is the
// label of the i-th child (node.children order), a bijection onto 1..#children.
struct QuotientLabelings {
    std::unordered_map<int, std::vector<int>> by_node;
};

// User-facing pin: module identified by its vertex set, children listed in
// ascending label order.
struct ModulePin {
    std::vector<Vertex> module;
    std::vector<std::vector<Vertex>> order;
};

using RecognitionOutcome = std::variant<Certificate, Obstruction>;

struct RecognizeOptions {
    const std::vector<ModulePin>* pins = nullptr;
    int jobs = 1;
};

RecognitionOutcome recognize(const ColoredGraph& g, const RecognizeOptions& opts = {});

Labeling build_prec(const MDTree& t, const QuotientLabelings& labels);

Permutation build_color_order(const ColoredGraph& g, const MDTree& t, const LCATable& lca,
                              const Labeling& l, Color i);

struct RestrictResult {
    ColoredGraph graph;
    Certificate cert;
    std::vector<Color> color_map; // old canonical color -> new canonical color, 0 if dropped
    std::vector<Vertex> new_to_old;
};

RestrictResult restrict_certificate(const ColoredGraph& g, const Certificate& cert,
                                    const std::vector<Vertex>& m);

enum class Theorem1Item { InducedSubgraphs, StrongQuotients, PrimeQuotients, MonochromaticSubgraphs };

// Direct evaluation of the characterization items (ii)-(v); item (ii)
// enumerates all induced subgraphs and is capped at small n.
bool theorem1_check(const ColoredGraph& g, Theorem1Item item);

// Transitive-orientation route for primitive simple graphs; the general
// recognize_simple (permutation.hpp) reduces to this via the decomposition.
std::optional<std::pair<Labeling, Permutation>> recognize_simple_primitive(const SimpleGraph& h);

} // namespace ecperm
