#pragma once

#include <string>

#include "noncyc/simple_graph.hpp"

namespace noncyc {

/// Undirected DOT document; vertices carry their labels when present.
std::string to_dot(const SimpleGraph& g, const std::string& graph_name);

/// Standard graph6 encoding (no trailing newline). Supports up to 258047 vertices.
std::string to_graph6(const SimpleGraph& g);

/// Inverse of to_graph6. Throws ParseError on malformed input.
SimpleGraph from_graph6(const std::string& text);

}  // namespace noncyc
