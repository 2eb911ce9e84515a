#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace defco {

/// Input violated a documented precondition (bad format, girth gate,
/// non-planar rotation system, ...). Maps to CLI exit code 2.
class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant broke (charge conservation drift, an extension the
/// theory proves total failed, ...). Always a bug. Maps to CLI exit code 3.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class EmbeddingError : public ContractError {
public:
    enum class Kind { NotSimple, NotSymmetric, NotConnected, EulerViolation };

    EmbeddingError(Kind kind, const std::string& msg, int vertex = -1,
                   std::pair<int, int> edge = {-1, -1})
        : ContractError(msg), kind(kind), vertex(vertex), edge(edge) {}

    Kind kind;
    int vertex;                 // offending vertex, if any
    std::pair<int, int> edge;   // offending edge, if any
};

}  // namespace defco
