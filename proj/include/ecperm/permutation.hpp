#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ecperm/colored_graph.hpp"
#include "ecperm/core.hpp"

namespace ecperm {

// Sequence form (pi(1), ..., pi(n)); values are 1-based like the rest of the
// label arithmetic, vertex ids stay 0-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> seq);
    static Permutation identity(int n);

    int length() const { return int(seq_.size()); }
    int at(int i) const { return seq_[size_t(i) - 1]; } // i in 1..n
    int position_of(int value) const { return inv_[size_t(value) - 1]; }
    const std::vector<int>& seq() const { return seq_; }

    bool operator==(const Permutation& o) const { return seq_ == o.seq_; }

private:
    std::vector<int> seq_;
    std::vector<int> inv_;
};

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);

// Bijection vertices -> 1..n.
class Labeling {
public:
    explicit Labeling(std::vector<int> label_of);
    static Labeling identity(int n);

    int n() const { return int(label_of_.size()); }
    int label(Vertex v) const { return label_of_[size_t(v)]; }
    Vertex vertex_of(int label) const { return vertex_of_[size_t(label) - 1]; }
    const std::vector<int>& labels() const { return label_of_; }

    bool operator==(const Labeling& o) const { return label_of_ == o.label_of_; }

private:
    std::vector<int> label_of_;
    std::vector<Vertex> vertex_of_;
};

struct Certificate {
    Labeling labeling;
    std::vector<Permutation> perms; // one per canonical color 1..k
};

// Simple permutation graph of pi under the identity labeling: vertex i has
// label i+1, and {a,b} is an edge iff the larger label occurs first in pi.
SimpleGraph permutation_graph(const Permutation& pi);

// Membership check of the defining equivalence for labeled simple graphs.
bool simple_graph_matches(const SimpleGraph& h, const Labeling& l, const Permutation& pi);

ColoredGraph generate_colored(const Labeling& l, const std::vector<Permutation>& perms);
bool verify(const ColoredGraph& g, const Labeling& l, const std::vector<Permutation>& perms);

struct TwoColorLift {
    ColoredGraph graph; // color 1 on E(H), color 2 on the non-edges
    Certificate cert;
};

TwoColorLift two_color_lift(const SimpleGraph& h, const Labeling& l, const Permutation& pi);

// Recognition of simple permutation graphs; implemented on top of the
// modular-decomposition pipeline (see simple_recognition.cpp).
std::optional<std::pair<Labeling, Permutation>> recognize_simple(const SimpleGraph& h);

} // namespace ecperm
