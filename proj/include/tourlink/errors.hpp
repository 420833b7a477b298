#pragma once

#include <stdexcept>
#include <string>

namespace tourlink {

/// Precondition violated on a vertex, arc or argument.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedSize : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Neither the tail is a sink nor the head a source once the arc is removed.
class ContractionNotConsistent : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Identified vertices would carry arcs in both directions.
class GlueConflict : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A D4 ring could not be assembled from the supplied triangles and junctions.
class WitnessFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tourlink
