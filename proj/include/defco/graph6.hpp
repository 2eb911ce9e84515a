#pragma once

#include <string>

#include "defco/graph.hpp"

namespace defco {

/// graph6 codec, bit-exact per the de-facto format: short form up to 62
/// vertices, '~'-prefixed long form up to 258047. The optional ">>graph6<<"
/// header is accepted on input and never written.
SimpleGraph parse_graph6(const std::string& text);
std::string write_graph6(const SimpleGraph& g);

}  // namespace defco
