#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace disting {

// Base class for every error thrown by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A family/constructor/formula parameter lies outside its declared range.
struct parameter_error : error {
  using error::error;
};

// Malformed edge-list text, family shorthand, or certificate file.
struct parse_error : error {
  using error::error;
};

// enumerate_automorphisms would exceed the caller's cap.
struct group_too_large_error : error {
  std::size_t limit;
  explicit group_too_large_error(std::size_t limit_)
      : error("automorphism group larger than limit " + std::to_string(limit_)),
        limit(limit_) {}
};

// A vertex map handed to edge_action does not preserve adjacency.
struct not_an_automorphism_error : error {
  using error::error;
};

// An operation precondition was violated (empty edge set, disconnected
// input, mismatched labeling shape, ...).
struct precondition_error : error {
  using error::error;
};

// The engines reached a state ruled out by theory; always a bug if thrown.
struct internal_error : error {
  using error::error;
};

}  // namespace disting
