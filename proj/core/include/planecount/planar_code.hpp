#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "planecount/rotation_system.hpp"

namespace planecount {

struct MalformedPlanarCodeError : std::runtime_error {
    std::size_t record_index;
    MalformedPlanarCodeError(std::string msg, std::size_t record)
        : std::runtime_error(std::move(msg) + " (record " + std::to_string(record) + ")"),
          record_index(record) {}
};

/// Parses a planar_code byte stream: optional ASCII ">>planar_code<<"
/// header, then per graph a vertex-count byte followed by each vertex's
/// neighbors in rotation order (1-based), every list 0-terminated.
/// Only 1-byte ids are supported; a leading 0 byte announces the 2-byte
/// wide mode and is rejected explicitly. Multigraph records are rejected
/// because the toolkit's rotation systems are simple.
std::vector<RotationSystem> parse_planar_code(std::string_view bytes);

/// Serializes embeddings back to planar_code, header included.
std::string write_planar_code(std::span<const RotationSystem> graphs);

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

}  // namespace planecount
