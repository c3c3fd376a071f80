#include "regtri/equivalence.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

namespace regtri {
namespace {

// Flags are (vertex, edge, face) incidence triples, encoded as
// face*6 + corner*2 + side: `corner` picks the vertex within the sorted face
// triple, `side` picks which of the two face edges at that corner belongs to
// the flag (the edge joining corner to corner+1+side mod 3). The three
// adjacency involutions are:
//   sig0  other endpoint of the edge (same edge, same face)
//   sig1  other edge at the vertex   (same vertex, same face)
//   sig2  other face at the edge     (same vertex, same edge; fixed point on
//                                     boundary edges)
// A connected surface has a connected flag graph, and surface isomorphisms
// correspond exactly to bijections commuting with the three involutions, so
// the lexicographically minimal BFS encoding is a complete invariant.
struct FlagSystem {
  std::vector<std::int32_t> sig0, sig1, sig2;
  std::vector<Vertex> vertex_of;
  std::int32_t count = 0;
};

FlagSystem build_flags(const SimplicialSurface& s) {
  const auto& faces = s.faces();
  const auto F = static_cast<std::int32_t>(faces.size());
  FlagSystem fs;
  fs.count = 6 * F;
  fs.sig0.resize(fs.count);
  fs.sig1.resize(fs.count);
  fs.sig2.resize(fs.count);
  fs.vertex_of.resize(fs.count);

  auto flag_id = [](std::int32_t face, int corner, int side) {
    return face * 6 + corner * 2 + side;
  };

  // Edge key -> the (face, corner, side) flags seen on it, two per vertex of
  // the edge across at most two faces.
  std::map<std::pair<Vertex, Vertex>, std::vector<std::int32_t>> edge_flags;
  for (std::int32_t t = 0; t < F; ++t) {
    const auto& f = faces[t];
    for (int corner = 0; corner < 3; ++corner) {
      for (int side = 0; side < 2; ++side) {
        const int partner = (corner + 1 + side) % 3;
        const std::int32_t id = flag_id(t, corner, side);
        fs.vertex_of[id] = f[corner];
        fs.sig1[id] = flag_id(t, corner, side ^ 1);
        fs.sig0[id] = flag_id(t, partner, (corner + 2 - partner + 3) % 3);
        const Vertex u = std::min(f[corner], f[partner]);
        const Vertex v = std::max(f[corner], f[partner]);
        edge_flags[{u, v}].push_back(id);
      }
    }
  }
  for (std::int32_t i = 0; i < fs.count; ++i) fs.sig2[i] = i;
  for (auto& [edge, ids] : edge_flags) {
    if (ids.size() == 2) continue;  // boundary edge: sig2 stays a fixed point
    for (std::int32_t a : ids)
      for (std::int32_t b : ids)
        if (a != b && fs.vertex_of[a] == fs.vertex_of[b]) fs.sig2[a] = b;
  }
  return fs;
}

void append_u32(std::string& out, std::uint32_t x) {
  out.push_back(static_cast<char>((x >> 24) & 0xff));
  out.push_back(static_cast<char>((x >> 16) & 0xff));
  out.push_back(static_cast<char>((x >> 8) & 0xff));
  out.push_back(static_cast<char>(x & 0xff));
}

/// BFS labeling from a start flag; the encoding lists, for each flag in label
/// order, the labels of its three involution images.
std::string encode_from(const FlagSystem& fs, std::int32_t start,
                        std::vector<std::int32_t>* order_out = nullptr) {
  std::vector<std::int32_t> label(fs.count, -1);
  std::vector<std::int32_t> order;
  order.reserve(fs.count);
  label[start] = 0;
  order.push_back(start);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::int32_t f = order[head];
    for (const auto* sig : {&fs.sig0, &fs.sig1, &fs.sig2}) {
      const std::int32_t g = (*sig)[f];
      if (label[g] == -1) {
        label[g] = static_cast<std::int32_t>(order.size());
        order.push_back(g);
      }
    }
  }
  if (static_cast<std::int32_t>(order.size()) != fs.count)
    throw Error(ErrorCode::InternalInvariantViolation, "flag graph is disconnected");

  std::string code;
  code.reserve(static_cast<std::size_t>(fs.count) * 12 + 8);
  append_u32(code, static_cast<std::uint32_t>(fs.count));
  for (std::int32_t f : order) {
    append_u32(code, static_cast<std::uint32_t>(label[fs.sig0[f]]));
    append_u32(code, static_cast<std::uint32_t>(label[fs.sig1[f]]));
    append_u32(code, static_cast<std::uint32_t>(label[fs.sig2[f]]));
  }
  if (order_out) *order_out = std::move(order);
  return code;
}

/// Isomorphism-invariant vertex coloring: (degree, distance to the boundary),
/// with distance -1 on closed surfaces.
std::vector<std::pair<int, int>> vertex_colors(const SimplicialSurface& s) {
  std::vector<int> bdist(s.vertex_count(), -1);
  if (!s.closed()) {
    std::queue<Vertex> q;
    for (Vertex v = 0; v < s.vertex_count(); ++v)
      if (s.is_boundary_vertex(v)) {
        bdist[v] = 0;
        q.push(v);
      }
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : s.link(v).vertices)
        if (bdist[w] == -1) {
          bdist[w] = bdist[v] + 1;
          q.push(w);
        }
    }
  }
  std::vector<std::pair<int, int>> colors(s.vertex_count());
  for (Vertex v = 0; v < s.vertex_count(); ++v) colors[v] = {s.degree(v), bdist[v]};
  return colors;
}

std::vector<std::int32_t> start_candidates(const SimplicialSurface& s,
                                           const FlagSystem& fs, bool prune) {
  std::vector<std::int32_t> starts;
  if (!prune) {
    starts.resize(fs.count);
    for (std::int32_t i = 0; i < fs.count; ++i) starts[i] = i;
    return starts;
  }
  const auto colors = vertex_colors(s);
  std::map<std::pair<int, int>, std::int64_t> class_size;
  for (std::int32_t i = 0; i < fs.count; ++i) ++class_size[colors[fs.vertex_of[i]]];
  std::pair<int, int> best_color = class_size.begin()->first;
  std::int64_t best_size = class_size.begin()->second;
  for (const auto& [color, size] : class_size)
    if (std::tie(size, color) < std::tie(best_size, best_color)) {
      best_color = color;
      best_size = size;
    }
  for (std::int32_t i = 0; i < fs.count; ++i)
    if (colors[fs.vertex_of[i]] == best_color) starts.push_back(i);
  return starts;
}

struct CanonicalRun {
  std::string code;
  std::vector<std::int32_t> order;  // flag visit order of the minimizing start
};

CanonicalRun canonical_run(const SimplicialSurface& s, bool prune) {
  if (!s.connected())
    throw Error(ErrorCode::Disconnected, "canonical code needs a connected surface");
  const FlagSystem fs = build_flags(s);
  CanonicalRun best;
  for (std::int32_t start : start_candidates(s, fs, prune)) {
    std::vector<std::int32_t> order;
    std::string code = encode_from(fs, start, &order);
    if (best.code.empty() || code < best.code) {
      best.code = std::move(code);
      best.order = std::move(order);
    }
  }
  return best;
}

}  // namespace

std::string CanonicalCode::hex() const {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

CanonicalCode canonical_code(const SimplicialSurface& surface) {
  return CanonicalCode(canonical_run(surface, true).code);
}

CanonicalCode canonical_code_exhaustive(const SimplicialSurface& surface) {
  return CanonicalCode(canonical_run(surface, false).code);
}

EquivalenceWitness equivalent(const SimplicialSurface& a, const SimplicialSurface& b) {
  CanonicalRun ra = canonical_run(a, true);
  CanonicalRun rb = canonical_run(b, true);
  if (ra.code != rb.code) return {};

  const FlagSystem fa = build_flags(a);
  const FlagSystem fb = build_flags(b);
  EquivalenceWitness w;
  w.vertex_map.assign(a.vertex_count(), -1);
  for (std::int32_t r = 0; r < fa.count; ++r) {
    const Vertex va = fa.vertex_of[ra.order[r]];
    const Vertex vb = fb.vertex_of[rb.order[r]];
    if (w.vertex_map[va] == -1)
      w.vertex_map[va] = vb;
    else if (w.vertex_map[va] != vb)
      throw Error(ErrorCode::InternalInvariantViolation,
                  "equal codes produced an inconsistent vertex map");
  }

  // The witness is checked, not assumed: it must send faces onto faces
  // bijectively.
  if (a.vertex_count() != b.vertex_count() || a.faces().size() != b.faces().size())
    throw Error(ErrorCode::InternalInvariantViolation, "equal codes on different f-vectors");
  std::vector<FaceTriple> mapped;
  mapped.reserve(a.faces().size());
  for (const auto& f : a.faces()) {
    FaceTriple g{w.vertex_map[f[0]], w.vertex_map[f[1]], w.vertex_map[f[2]]};
    std::sort(g.begin(), g.end());
    mapped.push_back(g);
  }
  std::sort(mapped.begin(), mapped.end());
  if (mapped != b.faces())
    throw Error(ErrorCode::InternalInvariantViolation, "witness does not map faces to faces");

  w.equivalent = true;
  return w;
}

}  // namespace regtri
