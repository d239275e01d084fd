#pragma once

#include <stdexcept>
#include <string>

namespace ecperm {

using Vertex = int;
using Color = int; // canonical colors are 1..k

enum class ErrorKind {
    MissingPair,
    DuplicatePair,
    SelfLoop,
    UnknownColor,
    EmptySet,
    UncoveredPair,
    OverlapPair,
    ArityMismatch,
    DegenerateGraph,
    NotAPartition,
    TooSmall,
    TooLarge,
    IncompleteLabelings,
    NotTotalOrder,
    BadInput,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace ecperm
