#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ecperm/colored_graph.hpp"
#include "ecperm/permutation.hpp"

namespace ecperm {

// Ground truth by exhaustion over all n! labelings; shares no machinery with
// the recognizer (the per-labeling acceptance test is transitivity of the
// per-color orders read straight off the edge colors).
std::optional<Certificate> brute_force_recognize(const ColoredGraph& g);

struct ModuleEnumeration {
    std::vector<std::vector<Vertex>> modules;        // all non-empty modules
    std::vector<std::vector<Vertex>> strong_modules; // overlap-free ones
};

ModuleEnumeration enumerate_modules_naive(const ColoredGraph& g);

enum class RandomProfile { Uniform, GallaiSubstitution, FromPermutations };

RandomProfile random_profile_from_name(const std::string& name);

// Deterministic per seed (fixed mt19937_64 stream, no distribution objects).
class RandomInstanceStream {
public:
    RandomInstanceStream(std::uint64_t seed, int n, int k, RandomProfile profile);
    ColoredGraph next();

private:
    std::mt19937_64 rng_;
    int n_;
    int k_;
    RandomProfile profile_;
};

} // namespace ecperm
