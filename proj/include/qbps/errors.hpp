#pragma once

#include <stdexcept>
#include <string>

namespace qbps {

/// Malformed input: bad JSON, wrong lengths, dimension/quiver mismatch.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation that needs a symmetric quiver was handed an asymmetric one.
class AsymmetricQuiverError : public std::runtime_error {
 public:
  explicit AsymmetricQuiverError(const std::string& what) : std::runtime_error(what) {}
};

/// Refusal to run an exponential enumeration above its configured size cutoff.
class CutoffExceeded : public std::runtime_error {
 public:
  explicit CutoffExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A block dimension table lacks an entry for a part that occurs in S^d_delta.
class MissingBlockError : public std::runtime_error {
 public:
  explicit MissingBlockError(const std::string& what) : std::runtime_error(what) {}
};

/// Nontrivial monodromy without supplied invariant dimensions, or a quiver
/// outside the families a closed form covers.
class UnsupportedInput : public std::runtime_error {
 public:
  explicit UnsupportedInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qbps
