#pragma once

#include <string>

#include "regtri/geometry.hpp"

namespace regtri {

struct RenderOptions {
  /// Draw hyperbolic edges as circular arcs orthogonal to the unit circle
  /// (true geodesics in the Poincare disk) instead of straight chords.
  bool geodesic_arcs = false;
  int size_px = 800;
};

/// SVG 1.1 document, one path element per drawn edge, face count in a
/// metadata comment. Hyperboloid surfaces are mapped through to_poincare and
/// framed by the unit circle; Euclidean surfaces use plain segments in a
/// fitted viewBox; spherical surfaces get an orthographic projection of the
/// front hemisphere (edges with both endpoints at z >= 0).
std::string render_svg(const RealizedSurface& r, const RenderOptions& options = {});

/// OFF mesh. Spherical surfaces keep their 3D coordinates; Euclidean and
/// Poincare-mapped hyperbolic ones lie in the z=0 plane.
std::string to_off(const RealizedSurface& r);

}  // namespace regtri
