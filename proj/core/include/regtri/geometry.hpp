#pragma once

#include <array>
#include <utility>
#include <vector>

#include "regtri/classify.hpp"
#include "regtri/generator.hpp"
#include "regtri/surface.hpp"

namespace regtri {

enum class Model { Spherical, Euclidean, Hyperboloid };

const char* model_name(Model m);

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

/// A point of the constant-curvature model: a unit 3-vector (spherical), a
/// plane point carried as (x, y, 1) (Euclidean), or an upper-hyperboloid
/// point with x^2+y^2-z^2 = -1, z > 0.
struct ModelPoint {
  Model model = Model::Hyperboloid;
  Vec3 c;
};

struct PlanarPoint {
  double x = 0, y = 0;
};

/// The model's bilinear form applied to raw coordinate vectors.
double form_product(Model model, const Vec3& a, const Vec3& b);

/// Geodesic distance between two points of the same model.
double model_distance(const ModelPoint& a, const ModelPoint& b);

/// Residual of the model constraint (|p|-1, hyperboloid form +1, or the
/// Euclidean homogeneous coordinate -1).
double model_constraint_residual(const ModelPoint& p);

/// Angle at p between the geodesics toward q and r.
double model_angle(const ModelPoint& p, const ModelPoint& q, const ModelPoint& r);

/// A 3x3 matrix preserving the model's bilinear form: orthogonal for the
/// sphere, rigid homogeneous for the plane, Minkowski-orthogonal for the
/// hyperboloid.
class Motion {
 public:
  static Motion identity(Model model);
  static Motion rotation(Model model, double theta);  // about the base point
  /// Reflection across the geodesic through two distinct points.
  static Motion reflection(const ModelPoint& p, const ModelPoint& q);

  ModelPoint apply(const ModelPoint& p) const;
  Motion compose(const Motion& rhs) const;  // (*this) after rhs
  Motion pow(int n) const;

  /// Max-norm of M^T J M - J for the model's form J (with the rigidity
  /// conditions standing in for J in the Euclidean case).
  double form_residual() const;
  double identity_distance() const;  // max-norm of M - I

  Model model() const { return model_; }
  const std::array<std::array<double, 3>, 3>& matrix() const { return m_; }

 private:
  Motion(Model model, std::array<std::array<double, 3>, 3> m) : model_(model), m_(m) {}
  Model model_;
  std::array<std::array<double, 3>, 3> m_;
};

/// Side of the equilateral hyperbolic triangle with interior angle 2pi/d:
/// arccosh(cos(2pi/d) / (1 - cos(2pi/d))). Needs d >= 7; at d = 6 the
/// triangle flattens out.
double edge_length(int d);

/// The (2,3,d) Schwarz triangle on the hyperboloid, anchored with its pi/d
/// corner at the apex (0,0,1) and the pi/2 corner on the x-axis, plus the
/// reflections in its three sides. The generator pairs satisfy
/// (r1 r2)^3 = (r2 r3)^d = (r1 r3)^2 = identity.
struct SchwarzTriangle {
  int d = 7;
  ModelPoint corner_d;  // interior angle pi/d
  ModelPoint corner_2;  // interior angle pi/2
  ModelPoint corner_3;  // interior angle pi/3
  Motion r1 = Motion::identity(Model::Hyperboloid);  // side (corner_2, corner_3)
  Motion r2 = Motion::identity(Model::Hyperboloid);  // side (corner_3, corner_d)
  Motion r3 = Motion::identity(Model::Hyperboloid);  // side (corner_d, corner_2)
};

SchwarzTriangle schwarz_triangle(int d);

struct RealizedSurface {
  SimplicialSurface surface;
  Model model = Model::Hyperboloid;
  std::vector<Vec3> positions;
  double target_edge_length = 0;
  /// Largest disagreement observed when a vertex position was reachable along
  /// more than one reflection path.
  double max_placement_deviation = 0;

  ModelPoint point(Vertex v) const { return {model, positions[v]}; }
};

/// Places a layered disk: the center at the model base point, the first
/// neighbor at edge-length distance along the x-axis, the rest of ring one by
/// rotation, and every further vertex by reflecting the opposite apex across
/// the geodesic through the shared edge (breadth-first over faces).
/// d = 6 lands on the unit equilateral lattice; d >= 7 on the hyperboloid.
RealizedSurface realize(const LayeredDisk& disk);

/// Standard unit-sphere coordinates for the spherical references; rp2_6 is
/// UnsupportedInput (no embedding; see README).
RealizedSurface realize(const ReferenceSurface& ref);

/// Realizes any closed surface isomorphic to a spherical reference by
/// classifying it and mapping coordinates through the witness.
RealizedSurface realize_spherical(const SimplicialSurface& surface);

/// Central projection of the hyperboloid onto the open unit disk:
/// (x, y) / (1 + z).
PlanarPoint to_poincare(const ModelPoint& p);

struct MetricReport {
  double tolerance = 0;
  double max_edge_deviation = 0;
  std::pair<Vertex, Vertex> worst_edge{-1, -1};
  double max_angle_deviation = 0;  // interior-vertex angle sums against 2pi
  Vertex worst_vertex = -1;
  double min_pairwise_distance = 0;
  std::pair<Vertex, Vertex> closest_pair{-1, -1};
  double min_nonadjacent_distance = 0;
  std::pair<Vertex, Vertex> closest_nonadjacent{-1, -1};
  bool pass = false;
};

/// Measures edge lengths against the target, interior angle sums against 2pi,
/// and pairwise separations; pass means deviations within tol and no
/// non-adjacent pair closer than target - tol.
MetricReport verify_metric(const RealizedSurface& r, double tol);

}  // namespace regtri
