#pragma once

#include <string>

#include "starchrome/graph.hpp"

namespace starchrome {

// Standard graph6 restricted to n <= 62 (one-byte size header).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

}  // namespace starchrome
