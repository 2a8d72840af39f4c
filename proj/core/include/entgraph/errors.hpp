#pragma once

#include <stdexcept>
#include <string>

namespace entgraph {

// Input that cannot be understood: bad JSON, wrong field counts, unknown
// enum strings. Carries enough context to name the offending record.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that violates a data contract (duplicate lexicon
// keys, degenerate count tables, directional pairs missing their reverse).
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace entgraph
