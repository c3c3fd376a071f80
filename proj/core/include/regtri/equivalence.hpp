#pragma once

#include <string>
#include <vector>

#include "regtri/surface.hpp"

namespace regtri {

/// Order-independent certificate of combinatorial type. Two connected
/// triangulated surfaces get equal codes exactly when some vertex bijection
/// maps the face set of one onto the face set of the other
/// (orientation-reversing maps included). Bytes are platform-independent.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  std::string hex() const;

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes_ == b.bytes_;
  }
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes_ <=> b.bytes_;
  }

 private:
  std::string bytes_;
};

/// Minimal breadth-first flag encoding over a canonically selected class of
/// starting flags (vertices refined by degree and boundary distance).
/// Throws Disconnected for disconnected input.
CanonicalCode canonical_code(const SimplicialSurface& surface);

/// Reference variant minimizing over every flag, no pruning. Quadratic and
/// meant for cross-checking the pruned code on small instances.
CanonicalCode canonical_code_exhaustive(const SimplicialSurface& surface);

struct EquivalenceWitness {
  bool equivalent = false;
  /// When equivalent: vertex_map[v of a] = corresponding vertex of b,
  /// verified to send faces onto faces bijectively.
  std::vector<Vertex> vertex_map;
};

EquivalenceWitness equivalent(const SimplicialSurface& a, const SimplicialSurface& b);

}  // namespace regtri
