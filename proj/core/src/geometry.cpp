#include "regtri/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "regtri/equivalence.hpp"

namespace regtri {
namespace {

constexpr double kPi = 3.14159265358979323846;

double dot3(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double mdot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y - a.z * b.z; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
Vec3 scale(const Vec3& a, double t) { return {a.x * t, a.y * t, a.z * t}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

double clamp1(double x) { return std::min(1.0, std::max(-1.0, x)); }

Vec3 normalize_onto(Model model, Vec3 v) {
  switch (model) {
    case Model::Spherical:
      return scale(v, 1.0 / std::sqrt(dot3(v, v)));
    case Model::Euclidean:
      return {v.x / v.z, v.y / v.z, 1.0};
    case Model::Hyperboloid: {
      const double t = std::sqrt(v.z * v.z - v.x * v.x - v.y * v.y);
      return scale(v, 1.0 / t);
    }
  }
  return v;
}

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m[i][j] += a[i][k] * b[k][j];
  return m;
}

/// Boost taking the apex (0,0,1) to p; its Minkowski inverse is J B^T J.
Mat3 apex_boost(const Vec3& p) {
  const double t = 1.0 + p.z;
  return {{{1 + p.x * p.x / t, p.x * p.y / t, p.x},
           {p.x * p.y / t, 1 + p.y * p.y / t, p.y},
           {p.x, p.y, p.z}}};
}

Mat3 minkowski_inverse(const Mat3& m) {
  // J m^T J with J = diag(1,1,-1).
  return {{{m[0][0], m[1][0], -m[2][0]},
           {m[0][1], m[1][1], -m[2][1]},
           {-m[0][2], -m[1][2], m[2][2]}}};
}

Vec3 mat_apply(const Mat3& m, const Vec3& v) {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

/// Image of x under the reflection across the geodesic through p and q.
/// The hyperboloid case stays factored (pull x into the frame where p sits at
/// the apex, reflect there, push back): forming the global reflection matrix
/// costs about two decimal digits per unit of distance from the origin and
/// ruins the outer layers of deep disks.
ModelPoint reflect_point(const ModelPoint& p, const ModelPoint& q, const ModelPoint& x) {
  if (p.model != Model::Hyperboloid) return Motion::reflection(p, q).apply(x);
  const Mat3 boost = apex_boost(p.c);
  const Mat3 inv = minkowski_inverse(boost);
  const Vec3 ql = normalize_onto(Model::Hyperboloid, mat_apply(inv, q.c));
  const double nn = ql.x * ql.x + ql.y * ql.y;
  if (nn < 1e-24)
    throw Error(ErrorCode::UnsupportedInput, "no unique geodesic through the points");
  const Vec3 xl = mat_apply(inv, x.c);
  const double c = 2 * (-ql.y * xl.x + ql.x * xl.y) / nn;
  const Vec3 yl = {xl.x + c * ql.y, xl.y - c * ql.x, xl.z};
  return {Model::Hyperboloid, normalize_onto(Model::Hyperboloid, mat_apply(boost, yl))};
}

}  // namespace

const char* model_name(Model m) {
  switch (m) {
    case Model::Spherical: return "spherical";
    case Model::Euclidean: return "euclidean";
    case Model::Hyperboloid: return "hyperboloid";
  }
  return "unknown";
}

double form_product(Model model, const Vec3& a, const Vec3& b) {
  switch (model) {
    case Model::Spherical: return dot3(a, b);
    case Model::Euclidean: return a.x * b.x + a.y * b.y;
    case Model::Hyperboloid: return mdot(a, b);
  }
  return 0;
}

double model_distance(const ModelPoint& a, const ModelPoint& b) {
  const Vec3 diff = add(a.c, scale(b.c, -1.0));
  switch (a.model) {
    case Model::Spherical:
      // 2 asin(|p-q|/2): stable where acos(p.q) loses digits near 0.
      return 2 * std::asin(std::min(1.0, std::sqrt(dot3(diff, diff)) / 2));
    case Model::Euclidean:
      return std::hypot(diff.x, diff.y);
    case Model::Hyperboloid:
      // <p-q, p-q> = 4 sinh^2(d/2); forming the difference first avoids the
      // cancellation of the large Minkowski products of far-out points.
      return 2 * std::asinh(std::sqrt(std::max(0.0, mdot(diff, diff))) / 2);
  }
  return 0;
}

double model_constraint_residual(const ModelPoint& p) {
  switch (p.model) {
    case Model::Spherical: return std::abs(std::sqrt(dot3(p.c, p.c)) - 1.0);
    case Model::Euclidean: return std::abs(p.c.z - 1.0);
    case Model::Hyperboloid: return std::abs(mdot(p.c, p.c) + 1.0);
  }
  return 0;
}

double model_angle(const ModelPoint& p, const ModelPoint& q, const ModelPoint& r) {
  Vec3 tq, tr;
  switch (p.model) {
    case Model::Spherical:
      tq = add(q.c, scale(p.c, -dot3(q.c, p.c)));
      tr = add(r.c, scale(p.c, -dot3(r.c, p.c)));
      return std::acos(clamp1(dot3(tq, tr) / std::sqrt(dot3(tq, tq) * dot3(tr, tr))));
    case Model::Euclidean: {
      tq = {q.c.x - p.c.x, q.c.y - p.c.y, 0};
      tr = {r.c.x - p.c.x, r.c.y - p.c.y, 0};
      return std::acos(clamp1(dot3(tq, tr) / std::sqrt(dot3(tq, tq) * dot3(tr, tr))));
    }
    case Model::Hyperboloid:
      // Tangent projection at p: q + <q,p> p (the form has <p,p> = -1).
      tq = add(q.c, scale(p.c, mdot(q.c, p.c)));
      tr = add(r.c, scale(p.c, mdot(r.c, p.c)));
      return std::acos(clamp1(mdot(tq, tr) / std::sqrt(mdot(tq, tq) * mdot(tr, tr))));
  }
  return 0;
}

Motion Motion::identity(Model model) {
  return Motion(model, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

Motion Motion::rotation(Model model, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Motion(model, {{{c, -s, 0}, {s, c, 0}, {0, 0, 1}}});
}

Motion Motion::reflection(const ModelPoint& p, const ModelPoint& q) {
  const Model model = p.model;
  std::array<std::array<double, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  switch (model) {
    case Model::Spherical: {
      Vec3 n = cross(p.c, q.c);
      const double nn = dot3(n, n);
      if (nn < 1e-24)
        throw Error(ErrorCode::UnsupportedInput, "no unique great circle through the points");
      n = scale(n, 1.0 / std::sqrt(nn));
      const double nv[3] = {n.x, n.y, n.z};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] -= 2.0 * nv[i] * nv[j];
      break;
    }
    case Model::Euclidean: {
      double ux = q.c.x - p.c.x, uy = q.c.y - p.c.y;
      const double len = std::hypot(ux, uy);
      if (len < 1e-12)
        throw Error(ErrorCode::UnsupportedInput, "no unique line through the points");
      ux /= len;
      uy /= len;
      const double nx = -uy, ny = ux;
      const double c = nx * p.c.x + ny * p.c.y;
      m = {{{1 - 2 * nx * nx, -2 * nx * ny, 2 * c * nx},
            {-2 * nx * ny, 1 - 2 * ny * ny, 2 * c * ny},
            {0, 0, 1}}};
      break;
    }
    case Model::Hyperboloid: {
      // Conjugate through the boost that carries p to the apex: the geodesic
      // then passes through (0,0,1) and the local normal J(e3 x q') =
      // (-q'_y, q'_x, 0) is formed from O(1) coordinates. Building the
      // reflection directly from J(p x q) squares the coordinate magnitudes
      // and loses the far-from-origin digits the tiling walk needs.
      const Mat3 boost = apex_boost(p.c);
      const Mat3 inv = minkowski_inverse(boost);
      const Vec3 ql = normalize_onto(model, mat_apply(inv, q.c));
      const double nn = ql.x * ql.x + ql.y * ql.y;
      if (nn < 1e-24)
        throw Error(ErrorCode::UnsupportedInput, "no unique geodesic through the points");
      const double nv[2] = {-ql.y, ql.x};
      Mat3 local{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) local[i][j] -= 2.0 * nv[i] * nv[j] / nn;
      m = mat_mul(boost, mat_mul(local, inv));
      break;
    }
  }
  return Motion(model, m);
}

ModelPoint Motion::apply(const ModelPoint& p) const {
  Vec3 v{
      m_[0][0] * p.c.x + m_[0][1] * p.c.y + m_[0][2] * p.c.z,
      m_[1][0] * p.c.x + m_[1][1] * p.c.y + m_[1][2] * p.c.z,
      m_[2][0] * p.c.x + m_[2][1] * p.c.y + m_[2][2] * p.c.z,
  };
  return {model_, normalize_onto(model_, v)};
}

Motion Motion::compose(const Motion& rhs) const {
  std::array<std::array<double, 3>, 3> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m[i][j] += m_[i][k] * rhs.m_[k][j];
  return Motion(model_, m);
}

Motion Motion::pow(int n) const {
  Motion out = identity(model_);
  for (int i = 0; i < n; ++i) out = out.compose(*this);
  return out;
}

double Motion::form_residual() const {
  double worst = 0;
  if (model_ == Model::Euclidean) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double s = 0;
        for (int k = 0; k < 2; ++k) s += m_[k][i] * m_[k][j];
        worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
    worst = std::max({worst, std::abs(m_[2][0]), std::abs(m_[2][1]), std::abs(m_[2][2] - 1.0)});
    return worst;
  }
  const double diag = model_ == Model::Hyperboloid ? -1.0 : 1.0;
  const double J[3] = {1, 1, diag};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += m_[k][i] * J[k] * m_[k][j];
      worst = std::max(worst, std::abs(s - (i == j ? J[i] : 0.0)));
    }
  return worst;
}

double Motion::identity_distance() const {
  double worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      worst = std::max(worst, std::abs(m_[i][j] - (i == j ? 1.0 : 0.0)));
  return worst;
}

double edge_length(int d) {
  if (d <= 6)
    throw Error(ErrorCode::DegreeTooSmall,
                "equilateral angle 2pi/" + std::to_string(d) + " is not hyperbolic");
  const double c = std::cos(2 * kPi / d);
  return std::acosh(c / (1 - c));
}

SchwarzTriangle schwarz_triangle(int d) {
  if (d <= 6) throw Error(ErrorCode::DegreeTooSmall, "Schwarz triangle needs d >= 7");
  const double ad = kPi / d, a2 = kPi / 2, a3 = kPi / 3;
  // Hyperbolic law of cosines for a side from its opposite angle.
  auto side = [](double opposite, double at_a, double at_b) {
    return std::acosh((std::cos(at_a) * std::cos(at_b) + std::cos(opposite)) /
                      (std::sin(at_a) * std::sin(at_b)));
  };
  const double len_d2 = side(a3, ad, a2);  // apex to the pi/2 corner
  const double len_d3 = side(a2, ad, a3);  // apex to the pi/3 corner

  SchwarzTriangle t;
  t.d = d;
  t.corner_d = {Model::Hyperboloid, {0, 0, 1}};
  t.corner_2 = {Model::Hyperboloid, {std::sinh(len_d2), 0, std::cosh(len_d2)}};
  t.corner_3 = Motion::rotation(Model::Hyperboloid, ad)
                   .apply({Model::Hyperboloid, {std::sinh(len_d3), 0, std::cosh(len_d3)}});
  t.r1 = Motion::reflection(t.corner_2, t.corner_3);
  t.r2 = Motion::reflection(t.corner_3, t.corner_d);
  t.r3 = Motion::reflection(t.corner_d, t.corner_2);
  return t;
}

namespace {

ModelPoint base_point(Model model) {
  if (model == Model::Euclidean) return {model, {0, 0, 1}};
  return {model, {0, 0, 1}};
}

ModelPoint axis_point(Model model, double distance) {
  if (model == Model::Euclidean) return {model, {distance, 0, 1}};
  return {model, {std::sinh(distance), 0, std::cosh(distance)}};
}

/// Breadth-first placement over faces: each face reached across an edge gets
/// its far vertex by reflecting the near apex across that edge.
RealizedSurface place_by_reflection(const SimplicialSurface& surface, Vertex center,
                                    Model model, double s) {
  RealizedSurface out;
  out.model = model;
  out.target_edge_length = s;
  out.positions.assign(surface.vertex_count(), Vec3{});
  std::vector<char> placed(surface.vertex_count(), 0);

  out.positions[center] = base_point(model).c;
  placed[center] = 1;
  const auto& ring = surface.link(center).vertices;
  const int d = static_cast<int>(ring.size());
  for (int j = 0; j < d; ++j) {
    const ModelPoint p =
        Motion::rotation(model, 2 * kPi * j / d).apply(axis_point(model, s));
    out.positions[ring[j]] = p.c;
    placed[ring[j]] = 1;
  }

  // Face adjacency across edges.
  const auto& faces = surface.faces();
  std::map<std::pair<Vertex, Vertex>, std::array<std::int32_t, 2>> edge_face;
  for (std::int32_t t = 0; t < static_cast<std::int32_t>(faces.size()); ++t) {
    const auto& f = faces[t];
    for (auto [a, b] : {std::pair{f[0], f[1]}, {f[0], f[2]}, {f[1], f[2]}}) {
      auto it = edge_face.try_emplace({a, b}, std::array<std::int32_t, 2>{-1, -1}).first;
      it->second[it->second[0] == -1 ? 0 : 1] = t;
    }
  }
  auto apex_of = [&faces](std::int32_t t, Vertex a, Vertex b) {
    for (Vertex v : faces[t])
      if (v != a && v != b) return v;
    return Vertex{-1};
  };

  std::vector<char> visited(faces.size(), 0);
  std::vector<std::int32_t> queue;
  for (std::int32_t t = 0; t < static_cast<std::int32_t>(faces.size()); ++t)
    if (faces[t][0] == center || faces[t][1] == center || faces[t][2] == center) {
      visited[t] = 1;
      queue.push_back(t);
    }

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int32_t t = queue[head];
    const auto& f = faces[t];
    for (auto [a, b] : {std::pair{f[0], f[1]}, {f[0], f[2]}, {f[1], f[2]}}) {
      const auto& pair_faces = edge_face[{a, b}];
      const std::int32_t u = pair_faces[0] == t ? pair_faces[1] : pair_faces[0];
      if (u == -1) continue;
      const Vertex near_apex = apex_of(t, a, b);
      const Vertex far_apex = apex_of(u, a, b);
      const ModelPoint image =
          reflect_point({model, out.positions[a]}, {model, out.positions[b]},
                        {model, out.positions[near_apex]});
      if (!placed[far_apex]) {
        out.positions[far_apex] = image.c;
        placed[far_apex] = 1;
      } else {
        out.max_placement_deviation =
            std::max(out.max_placement_deviation,
                     model_distance(image, {model, out.positions[far_apex]}));
      }
      if (!visited[u]) {
        visited[u] = 1;
        queue.push_back(u);
      }
    }
  }

  for (Vertex v = 0; v < surface.vertex_count(); ++v)
    if (!placed[v])
      throw Error(ErrorCode::InternalInvariantViolation,
                  "vertex " + std::to_string(v) + " unreached by face traversal");
  if (out.max_placement_deviation > 1e-6)
    throw Error(ErrorCode::NumericalDrift,
                "reflected positions disagree by " +
                    std::to_string(out.max_placement_deviation));
  out.surface = surface;
  return out;
}

struct SphericalModel {
  std::vector<Vec3> coords;
  std::vector<FaceTriple> faces;
  double edge_arc = 0;
};

SphericalModel spherical_model(ReferenceKind kind) {
  SphericalModel m;
  switch (kind) {
    case ReferenceKind::Tetrahedron: {
      const double t = 1.0 / std::sqrt(3.0);
      m.coords = {{t, t, t}, {t, -t, -t}, {-t, t, -t}, {-t, -t, t}};
      m.edge_arc = std::acos(-1.0 / 3.0);
      break;
    }
    case ReferenceKind::Octahedron:
      m.coords = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
      m.edge_arc = kPi / 2;
      break;
    case ReferenceKind::Icosahedron: {
      const double phi = (1 + std::sqrt(5.0)) / 2;
      const double r = std::sqrt(1 + phi * phi);
      for (double s1 : {1.0, -1.0})
        for (double s2 : {1.0, -1.0}) {
          m.coords.push_back({0, s1 / r, s2 * phi / r});
          m.coords.push_back({s1 / r, s2 * phi / r, 0});
          m.coords.push_back({s2 * phi / r, 0, s1 / r});
        }
      m.edge_arc = std::acos(1.0 / std::sqrt(5.0));
      break;
    }
    case ReferenceKind::RP2_6:
      throw Error(ErrorCode::UnsupportedInput,
                  "rp2_6 has no spherical embedding (antipodal quotient)");
  }
  // Faces are the mutually adjacent triples; adjacency at the common chord.
  const double chord = 2 * std::sin(m.edge_arc / 2);
  auto near = [&](int i, int j) {
    const Vec3 d = add(m.coords[i], scale(m.coords[j], -1.0));
    return std::abs(std::sqrt(dot3(d, d)) - chord) < 0.2;
  };
  const int n = static_cast<int>(m.coords.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (near(i, j) && near(i, k) && near(j, k))
          m.faces.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j),
                             static_cast<Vertex>(k)});
  return m;
}

}  // namespace

RealizedSurface realize(const LayeredDisk& disk) {
  if (disk.degree < 6)
    throw Error(ErrorCode::DegreeTooSmall, "disk realization needs d >= 6");
  if (disk.degree == 6)
    return place_by_reflection(disk.surface, disk.center, Model::Euclidean, 1.0);
  return place_by_reflection(disk.surface, disk.center, Model::Hyperboloid,
                             edge_length(disk.degree));
}

RealizedSurface realize(const ReferenceSurface& ref) {
  const SphericalModel m = spherical_model(ref.kind);
  auto geometric = SimplicialSurface::build_from_faces(
      static_cast<Vertex>(m.coords.size()), m.faces);
  const auto witness = equivalent(ref.surface, geometric);
  if (!witness.equivalent)
    throw Error(ErrorCode::InternalInvariantViolation,
                "reference does not match its geometric model");
  RealizedSurface out;
  out.surface = ref.surface;
  out.model = Model::Spherical;
  out.target_edge_length = m.edge_arc;
  out.positions.resize(ref.surface.vertex_count());
  for (Vertex v = 0; v < ref.surface.vertex_count(); ++v)
    out.positions[v] = m.coords[witness.vertex_map[v]];
  return out;
}

RealizedSurface realize_spherical(const SimplicialSurface& surface) {
  const Classification c = classify_closed(surface);
  ReferenceKind kind;
  switch (c.surface_case) {
    case SurfaceCase::SphereD3: kind = ReferenceKind::Tetrahedron; break;
    case SurfaceCase::SphereD4: kind = ReferenceKind::Octahedron; break;
    case SurfaceCase::SphereD5: kind = ReferenceKind::Icosahedron; break;
    case SurfaceCase::ProjectivePlaneD5:
      throw Error(ErrorCode::UnsupportedInput,
                  "rp2_6 has no spherical embedding (antipodal quotient)");
    default:
      throw Error(ErrorCode::UnsupportedInput,
                  std::string("no spherical realization for case ") +
                      case_name(c.surface_case));
  }
  const RealizedSurface ref_real = realize(reference(kind));
  RealizedSurface out;
  out.surface = surface;
  out.model = Model::Spherical;
  out.target_edge_length = ref_real.target_edge_length;
  out.positions.resize(surface.vertex_count());
  for (Vertex v = 0; v < surface.vertex_count(); ++v)
    out.positions[v] = ref_real.positions[(*c.witness)[v]];
  return out;
}

PlanarPoint to_poincare(const ModelPoint& p) {
  if (p.model != Model::Hyperboloid)
    throw Error(ErrorCode::UnsupportedInput, "to_poincare expects a hyperboloid point");
  return {p.c.x / (1 + p.c.z), p.c.y / (1 + p.c.z)};
}

MetricReport verify_metric(const RealizedSurface& r, double tol) {
  MetricReport rep;
  rep.tolerance = tol;
  const auto& s = r.surface;
  const double target = r.target_edge_length;

  for (const auto& [u, v] : s.edges()) {
    const double dev = std::abs(model_distance(r.point(u), r.point(v)) - target);
    if (dev > rep.max_edge_deviation) {
      rep.max_edge_deviation = dev;
      rep.worst_edge = {u, v};
    }
  }

  for (Vertex v = 0; v < s.vertex_count(); ++v) {
    if (!s.closed() && s.is_boundary_vertex(v)) continue;
    const auto& ring = s.link(v).vertices;
    double sum = 0;
    for (std::size_t i = 0; i < ring.size(); ++i)
      sum += model_angle(r.point(v), r.point(ring[i]),
                         r.point(ring[(i + 1) % ring.size()]));
    const double dev = std::abs(sum - 2 * kPi);
    if (dev > rep.max_angle_deviation) {
      rep.max_angle_deviation = dev;
      rep.worst_vertex = v;
    }
  }

  rep.min_pairwise_distance = std::numeric_limits<double>::infinity();
  rep.min_nonadjacent_distance = std::numeric_limits<double>::infinity();
  for (Vertex u = 0; u < s.vertex_count(); ++u)
    for (Vertex v = u + 1; v < s.vertex_count(); ++v) {
      const double dist = model_distance(r.point(u), r.point(v));
      if (dist < rep.min_pairwise_distance) {
        rep.min_pairwise_distance = dist;
        rep.closest_pair = {u, v};
      }
      if (!s.adjacent(u, v) && dist < rep.min_nonadjacent_distance) {
        rep.min_nonadjacent_distance = dist;
        rep.closest_nonadjacent = {u, v};
      }
    }

  rep.pass = rep.max_edge_deviation <= tol && rep.max_angle_deviation <= tol &&
             rep.min_nonadjacent_distance >= target - tol;
  return rep;
}

}  // namespace regtri
