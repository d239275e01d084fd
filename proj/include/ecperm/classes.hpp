#pragma once

#include "ecperm/colored_graph.hpp"
#include "ecperm/permutation.hpp"

namespace ecperm {

// A symbolic map over a complete graph is exactly a colored complete graph
// (U1 is enforced by the symmetric color table), so ColoredGraph doubles as
// the delta representation.

bool is_gallai(const ColoredGraph& g);

bool is_cograph(const SimpleGraph& h);

// U2 on all triples plus the forbidden 4-set pattern U3, by direct scan.
bool check_ultrametric_axioms(const ColoredGraph& delta);

// Prop.-10 route: rainbow-free and every monochromatic subgraph a cograph.
bool is_symbolic_ultrametric_graph(const ColoredGraph& g);

bool is_separable(const Permutation& pi);

} // namespace ecperm
