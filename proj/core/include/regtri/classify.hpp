#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regtri/surface.hpp"

namespace regtri {

enum class ReferenceKind { Tetrahedron, Octahedron, Icosahedron, RP2_6 };

/// The closed degree-regular surfaces of degree below 6: the boundaries of
/// the tetrahedron (3-regular), octahedron (4-regular) and icosahedron
/// (5-regular), plus the 6-vertex projective plane (5-regular, chi 1).
struct ReferenceSurface {
  ReferenceKind kind;
  SimplicialSurface surface;
};

ReferenceSurface reference(ReferenceKind kind);

const char* reference_kind_name(ReferenceKind kind);
std::optional<ReferenceKind> reference_kind_from_name(const std::string& name);

enum class SurfaceCase {
  SphereD3,
  SphereD4,
  SphereD5,
  ProjectivePlaneD5,
  FlatD6,
  HyperbolicDge7,
};

const char* case_name(SurfaceCase c);

struct Classification {
  SurfaceCase surface_case;
  int degree = 0;
  std::int64_t chi = 0;
  /// For the finite cases (d < 6): an explicit isomorphism onto the matching
  /// reference, witness[input vertex] = reference vertex.
  std::optional<std::vector<Vertex>> witness;
};

/// Identifies a closed, connected, degree-regular surface. Degrees 3-5 are
/// matched against the references (an input that validates but fails to match
/// is reported as InputContradictsLemma); degree 6 is flat, higher degrees
/// hyperbolic, both without a witness.
Classification classify_closed(const SimplicialSurface& surface);

}  // namespace regtri
