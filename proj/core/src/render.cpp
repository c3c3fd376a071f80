#include "regtri/render.hpp"

#include <cmath>
#include <cstdio>

namespace regtri {
namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x == 0 ? 0.0 : x);  // avoid -0
  return buf;
}

PlanarPoint project(const RealizedSurface& r, Vertex v) {
  switch (r.model) {
    case Model::Hyperboloid: return to_poincare(r.point(v));
    case Model::Euclidean: return {r.positions[v].x, r.positions[v].y};
    case Model::Spherical: return {r.positions[v].x, r.positions[v].y};
  }
  return {};
}

/// Circle orthogonal to the unit circle through two interior points; returns
/// false when the geodesic is a diameter (straight chord).
bool orthocircle(const PlanarPoint& p, const PlanarPoint& q, PlanarPoint& center,
                 double& radius) {
  const double det = 4 * (p.x * q.y - p.y * q.x);
  if (std::abs(det) < 1e-9) return false;
  const double rp = p.x * p.x + p.y * p.y + 1;
  const double rq = q.x * q.x + q.y * q.y + 1;
  center.x = (rp * 2 * q.y - rq * 2 * p.y) / det;
  center.y = (rq * 2 * p.x - rp * 2 * q.x) / det;
  const double c2 = center.x * center.x + center.y * center.y;
  if (c2 <= 1) return false;
  radius = std::sqrt(c2 - 1);
  return true;
}

std::string edge_path(const RealizedSurface& r, const PlanarPoint& a,
                      const PlanarPoint& b, bool arcs) {
  std::string d = "M " + num(a.x) + " " + num(a.y) + " ";
  PlanarPoint c;
  double radius = 0;
  if (arcs && r.model == Model::Hyperboloid && orthocircle(a, b, c, radius)) {
    // sweep=1 puts the arc center on the left of the directed chord.
    const double cross =
        (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    const char sweep = cross > 0 ? '1' : '0';
    d += "A " + num(radius) + " " + num(radius) + " 0 0 " + sweep + " " +
         num(b.x) + " " + num(b.y);
  } else {
    d += "L " + num(b.x) + " " + num(b.y);
  }
  return d;
}

}  // namespace

std::string render_svg(const RealizedSurface& r, const RenderOptions& options) {
  const auto& s = r.surface;

  std::vector<std::pair<Vertex, Vertex>> drawn;
  for (const auto& e : s.edges()) {
    if (r.model == Model::Spherical &&
        (r.positions[e.first].z < 0 || r.positions[e.second].z < 0))
      continue;  // orthographic view of the front hemisphere only
    drawn.push_back(e);
  }

  double min_x = -1.05, min_y = -1.05, span_x = 2.1, span_y = 2.1;
  if (r.model == Model::Euclidean) {
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (Vertex v = 0; v < s.vertex_count(); ++v) {
      const auto p = project(r, v);
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
    const double margin = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y) + 0.05;
    min_x = lo_x - margin;
    min_y = lo_y - margin;
    span_x = hi_x - lo_x + 2 * margin;
    span_y = hi_y - lo_y + 2 * margin;
  }
  const double stroke = 0.004 * std::max(span_x, span_y) / 2.1;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(options.size_px) + "\" height=\"" +
         std::to_string(options.size_px) + "\" viewBox=\"" + num(min_x) + " " +
         num(min_y) + " " + num(span_x) + " " + num(span_y) + "\">\n";
  out += "<!-- model: " + std::string(model_name(r.model)) +
         " faces: " + std::to_string(s.faces().size()) +
         " edges: " + std::to_string(s.edges().size()) + " -->\n";
  if (r.model == Model::Hyperboloid)
    out += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#999999\" "
           "stroke-width=\"" +
           num(stroke / 2) + "\"/>\n";
  for (const auto& [u, v] : drawn) {
    out += "<path d=\"" + edge_path(r, project(r, u), project(r, v),
                                    options.geodesic_arcs) +
           "\" fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"" + num(stroke) +
           "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string to_off(const RealizedSurface& r) {
  const auto& s = r.surface;
  std::string out = "OFF\n";
  out += std::to_string(s.vertex_count()) + " " + std::to_string(s.faces().size()) +
         " " + std::to_string(s.edges().size()) + "\n";
  char buf[128];
  for (Vertex v = 0; v < s.vertex_count(); ++v) {
    if (r.model == Model::Spherical) {
      const auto& p = r.positions[v];
      std::snprintf(buf, sizeof buf, "%.9f %.9f %.9f\n", p.x, p.y, p.z);
    } else {
      const auto p = project(r, v);
      std::snprintf(buf, sizeof buf, "%.9f %.9f %.9f\n", p.x, p.y, 0.0);
    }
    out += buf;
  }
  for (const auto& f : s.faces())
    out += "3 " + std::to_string(f[0]) + " " + std::to_string(f[1]) + " " +
           std::to_string(f[2]) + "\n";
  return out;
}

}  // namespace regtri
