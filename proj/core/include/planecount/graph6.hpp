#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "planecount/graph.hpp"

namespace planecount {

struct MalformedGraph6Error : std::runtime_error {
    std::size_t byte_offset;
    MalformedGraph6Error(std::string msg, std::size_t offset)
        : std::runtime_error(std::move(msg) + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
};

/// Parses one graph6 line (without newline): 6-bit bytes offset by 63,
/// vertex count in short (n <= 62) or 4-byte long form, then the upper
/// triangle of the adjacency matrix in column order (0,1),(0,2),(1,2),...
/// Padding bits must be zero, so parse and write are mutually inverse on
/// the nose. The optional ">>graph6<<" stream header is the caller's to
/// strip.
Graph parse_graph6(std::string_view line);

/// Canonical-length encoder: short form for n <= 62, 4-byte long form up
/// to n = 258047 (larger graphs are out of scope here).
std::string write_graph6(const Graph& g);

}  // namespace planecount
