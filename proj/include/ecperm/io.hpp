#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ecperm/modular_decomposition.hpp"
#include "ecperm/recognizer.hpp"

namespace ecperm {

// ECG v1 text: optional '#' comments, header "ecg <n> <k>", one "<u> <v> <c>"
// line per pair (0-indexed vertices, 1-indexed original colors). The JSON
// mirror is {"n":..,"edges":[[u,v,c],..]}. Writers emit sorted pair order
// and original colors so read/write round-trips are byte-stable.
ColoredGraph read_ecg(std::istream& in);
ColoredGraph read_ecg_string(const std::string& text);
ColoredGraph read_ecg_file(const std::string& path);
std::string write_ecg_text(const ColoredGraph& g);
std::string write_ecg_json(const ColoredGraph& g);

Permutation parse_permutation(const std::string& text); // "(1,5,2,4,7,3,6)"
std::string format_permutation(const Permutation& p);
Labeling parse_labeling(const std::string& text, int n); // "id" or "v:label" pairs
std::string format_labeling(const Labeling& l);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);
std::string obstruction_to_json(const Obstruction& o);
std::string mdtree_to_json(const MDTree& t);

std::vector<ModulePin> pins_from_json(const std::string& text);

} // namespace ecperm
