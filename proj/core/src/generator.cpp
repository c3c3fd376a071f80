#include "regtri/generator.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <algorithm>
#include <queue>
#include <set>
#include <utility>

namespace regtri {
namespace {

FaceTriple sorted_face(Vertex a, Vertex b, Vertex c) {
  FaceTriple f{a, b, c};
  std::sort(f.begin(), f.end());
  return f;
}

std::string vtx(Vertex v) { return std::to_string(v); }

void check_degree(int d) {
  if (d < 6)
    throw Error(ErrorCode::DegreeTooSmall,
                "d=" + std::to_string(d) + " (degrees below 6 are the closed classification cases)");
}

}  // namespace

LayeredDisk initial_disk(int d) {
  check_degree(d);
  std::vector<FaceTriple> faces;
  faces.reserve(d);
  for (Vertex i = 1; i < d; ++i) faces.push_back(sorted_face(0, i, i + 1));
  faces.push_back(sorted_face(0, static_cast<Vertex>(d), 1));

  LayeredDisk disk;
  disk.surface = SimplicialSurface::build_from_faces(d + 1, std::move(faces));
  disk.degree = d;
  disk.radius = 1;
  disk.center = 0;
  disk.layers.resize(2);
  disk.layers[0] = {0};
  for (Vertex i = 1; i <= d; ++i) disk.layers[1].push_back(i);
  disk.layer_of.assign(d + 1, 1);
  disk.layer_of[0] = 0;
  disk.labels.assign(d + 1, LayerLabel::R);
  return disk;
}

LayeredDisk extend(const LayeredDisk& disk, const GenerateOptions& opts) {
  if (disk.radius < 1)
    throw Error(ErrorCode::InvalidDisk, "radius must be >= 1");
  const int d = disk.degree;
  check_degree(d);

  std::vector<Vertex> bc = disk.surface.boundary_cycle();
  const std::size_t m = bc.size();
  {
    const auto& outer = disk.layers.back();
    if (m != outer.size() ||
        !std::is_permutation(bc.begin(), bc.end(), outer.begin()))
      throw Error(ErrorCode::InvalidDisk, "boundary vertices differ from the outer layer");
  }
  if (opts.walk.rotation != 0) {
    const auto r = ((opts.walk.rotation % static_cast<int>(m)) + m) % m;
    std::rotate(bc.begin(), bc.begin() + r, bc.end());
  }
  if (opts.walk.reversed) std::reverse(bc.begin() + 1, bc.end());

  std::vector<int> fresh_needed(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int deg = disk.surface.degree(bc[i]);
    if (deg != 3 && deg != 4)
      throw Error(ErrorCode::InvalidDisk,
                  "boundary vertex " + vtx(bc[i]) + " has degree " + std::to_string(deg));
    fresh_needed[i] = d - 2 - deg;
  }

  const Vertex n = disk.surface.vertex_count();
  std::int64_t new_total = static_cast<std::int64_t>(m);
  for (int c : fresh_needed) new_total += c;
  if (n + new_total > opts.max_vertices)
    throw Error(ErrorCode::ResourceLimit,
                std::to_string(n + new_total) + " vertices would exceed the cap of " +
                    std::to_string(opts.max_vertices));

  // Ids in boundary-walk order: the shared A-vertex of edge (bc[i], bc[i+1]),
  // then the fresh fan of bc[i+1]. Ascending ids therefore trace the new
  // boundary cycle.
  Vertex next = n;
  std::vector<Vertex> a_id(m);
  std::vector<std::vector<Vertex>> fresh(m);
  for (std::size_t i = 0; i < m; ++i) {
    a_id[i] = next++;
    const std::size_t j = (i + 1) % m;
    for (int t = 0; t < fresh_needed[j]; ++t) fresh[j].push_back(next++);
  }

  std::vector<FaceTriple> faces = disk.surface.faces();
  faces.reserve(faces.size() + m + new_total);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    faces.push_back(sorted_face(bc[i], bc[j], a_id[i]));
    Vertex prev = a_id[i];
    for (Vertex x : fresh[j]) {
      faces.push_back(sorted_face(bc[j], prev, x));
      prev = x;
    }
    faces.push_back(sorted_face(bc[j], prev, a_id[j]));
  }

  LayeredDisk out;
  out.degree = d;
  out.radius = disk.radius + 1;
  out.center = disk.center;
  out.layers = disk.layers;
  out.layers.emplace_back();
  auto& top = out.layers.back();
  for (Vertex v = n; v < next; ++v) top.push_back(v);
  out.layer_of = disk.layer_of;
  out.layer_of.resize(next, out.radius);
  out.labels = disk.labels;
  out.labels.resize(next, LayerLabel::C);
  for (std::size_t i = 0; i < m; ++i) {
    out.labels[a_id[i]] = LayerLabel::A;
    for (Vertex x : fresh[i])
      out.labels[x] = disk.labels[bc[i]] == LayerLabel::A ? LayerLabel::B : LayerLabel::C;
  }

  try {
    out.surface = SimplicialSurface::build_from_faces(next, std::move(faces));
  } catch (const Error& e) {
    throw Error(ErrorCode::InternalInvariantViolation,
                std::string("extension produced an invalid complex: ") + e.what());
  }

  // Post-construction audit of the properties the walk could break.
  const auto fv = out.surface.f_vector();
  if (fv.chi() != 1 || !out.surface.connected())
    throw Error(ErrorCode::InternalInvariantViolation,
                "extension is not a disc (chi=" + std::to_string(fv.chi()) + ")");
  auto new_bc = out.surface.boundary_cycle();
  if (new_bc.size() != top.size() ||
      !std::is_permutation(new_bc.begin(), new_bc.end(), top.begin()))
    throw Error(ErrorCode::InternalInvariantViolation, "boundary is not the new layer");
  for (Vertex v : top) {
    const int deg = out.surface.degree(v);
    if (deg != 3 && deg != 4)
      throw Error(ErrorCode::InternalInvariantViolation,
                  "new boundary vertex " + vtx(v) + " has degree " + std::to_string(deg));
  }
  for (Vertex v : bc)
    if (out.surface.degree(v) != d || out.surface.is_boundary_vertex(v))
      throw Error(ErrorCode::InternalInvariantViolation,
                  "absorbed vertex " + vtx(v) + " did not close to a " + std::to_string(d) + "-cycle");
  return out;
}

LayeredDisk generate(int d, int k, const GenerateOptions& opts) {
  check_degree(d);
  if (k < 1) throw Error(ErrorCode::LayerOutOfRange, "k must be >= 1");
  if (d + 1 > opts.max_vertices)
    throw Error(ErrorCode::ResourceLimit, "initial star exceeds the vertex cap");
  LayeredDisk disk = initial_disk(d);
  for (int j = 1; j < k; ++j) disk = extend(disk, opts);
  return disk;
}

LayeredDisk make_layered_disk(SimplicialSurface surface, std::vector<int> layer_of,
                              std::vector<LayerLabel> labels) {
  const auto n = static_cast<std::size_t>(surface.vertex_count());
  if (layer_of.size() != n || labels.size() != n)
    throw Error(ErrorCode::InvalidDisk, "layer data does not cover every vertex");

  int radius = 0;
  for (int j : layer_of) {
    if (j < 0) throw Error(ErrorCode::InvalidDisk, "negative layer index");
    radius = std::max(radius, j);
  }
  if (radius < 1) throw Error(ErrorCode::InvalidDisk, "radius must be >= 1");

  LayeredDisk disk;
  disk.layers.resize(radius + 1);
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
    disk.layers[layer_of[v]].push_back(v);
  for (int j = 0; j <= radius; ++j)
    if (disk.layers[j].empty())
      throw Error(ErrorCode::InvalidDisk, "layer " + std::to_string(j) + " is empty");
  if (disk.layers[0].size() != 1)
    throw Error(ErrorCode::InvalidDisk, "layer 0 must be a single center vertex");

  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    const bool early = layer_of[v] <= 1;
    if (early != (labels[v] == LayerLabel::R))
      throw Error(ErrorCode::InvalidDisk,
                  "label " + std::string(1, static_cast<char>(labels[v])) +
                      " not allowed on vertex " + vtx(v) + " in layer " +
                      std::to_string(layer_of[v]));
  }

  disk.center = disk.layers[0][0];
  disk.degree = surface.degree(disk.center);
  disk.radius = radius;
  disk.layer_of = std::move(layer_of);
  disk.labels = std::move(labels);
  disk.surface = std::move(surface);
  return disk;
}

std::vector<BigInt> layer_counts_recurrence(int d, int k) {
  check_degree(d);
  if (k < 0) throw Error(ErrorCode::LayerOutOfRange, "k must be >= 0");
  std::vector<BigInt> n;
  n.reserve(k + 1);
  n.emplace_back(1);
  if (k >= 1) n.emplace_back(d);
  if (k >= 2) n.emplace_back(BigInt(d) * (d - 4));
  for (int j = 3; j <= k; ++j) n.push_back((d - 4) * n[j - 1] - n[j - 2]);
  return n;
}

namespace {

template <typename Float>
bool closed_form_value(int d, int k, BigInt& out) {
  const Float dd(d);
  const Float disc = sqrt((dd - 6) * (dd - 2));
  const Float coef = dd / disc;
  const Float lam_p = (dd - 4 + disc) / 2;
  const Float lam_m = (dd - 4 - disc) / 2;
  Float pp(1), pm(1);
  for (int i = 0; i < k; ++i) {
    pp *= lam_p;
    pm *= lam_m;
  }
  const Float y = coef * (pp - pm);
  // The value is an exact integer; rounding is trustworthy only when the
  // worst-case accumulated error (a few ulps per multiplication) stays below
  // a half. Mere proximity to some integer proves nothing.
  const Float error_bound =
      abs(y) * std::numeric_limits<Float>::epsilon() * Float(4 * (k + 4));
  if (error_bound > Float(0.25)) return false;
  const Float r = round(y);
  if (abs(y - r) > Float(0.25)) return false;
  out = r.template convert_to<BigInt>();
  return true;
}

}  // namespace

std::vector<BigInt> layer_counts_closed_form(int d, int k) {
  if (d < 7)
    throw Error(ErrorCode::DegreeTooSmall,
                "closed form needs d >= 7 (repeated characteristic root at d=6)");
  if (k < 0) throw Error(ErrorCode::LayerOutOfRange, "k must be >= 0");

  namespace mp = boost::multiprecision;
  std::vector<BigInt> n;
  n.reserve(k + 1);
  n.emplace_back(1);  // shift convention: the closed form itself gives y_0 = 0
  for (int j = 1; j <= k; ++j) {
    BigInt value;
    if (closed_form_value<mp::cpp_bin_float_50>(d, j, value) ||
        closed_form_value<mp::cpp_bin_float_100>(d, j, value) ||
        closed_form_value<mp::number<mp::cpp_bin_float<300>>>(d, j, value) ||
        closed_form_value<mp::number<mp::cpp_bin_float<1000>>>(d, j, value)) {
      n.push_back(std::move(value));
    } else {
      throw Error(ErrorCode::PrecisionLoss,
                  "rounding ambiguous at d=" + std::to_string(d) + ", k=" + std::to_string(j));
    }
  }
  return n;
}

PartitionSizes partition_sizes(const LayeredDisk& disk, int j) {
  if (j < 2 || j > disk.radius)
    throw Error(ErrorCode::LayerOutOfRange,
                "layer " + std::to_string(j) + " outside [2," + std::to_string(disk.radius) + "]");
  PartitionSizes out;
  for (Vertex v : disk.layers[j]) {
    switch (disk.labels[v]) {
      case LayerLabel::A: ++out.a; break;
      case LayerLabel::B: ++out.b; break;
      case LayerLabel::C: ++out.c; break;
      case LayerLabel::R: break;
    }
  }
  return out;
}

Rational forbidden_disk_chi(const DegreeProfile& p) {
  if (p.d < 7)
    throw Error(ErrorCode::DegreeTooSmall, "profile needs d >= 7");
  if (p.dx < 2 || p.dv < 2 || p.dw < 2)
    throw Error(ErrorCode::DegreeTooSmall, "boundary vertices have degree >= 2");
  if (p.m0 < 0 || p.m1 < 0 || p.m2 < 0)
    throw Error(ErrorCode::InvalidFormat, "negative multiplicity");
  BigInt num = BigInt(12 - (p.dx + p.dv + p.dw));
  num += BigInt(p.m0) * (6 - p.d);
  num += BigInt(p.m1) * (5 - p.d);
  num += BigInt(p.m2) * (6 - p.d);
  return Rational(num, 6);
}

namespace {

struct PrefixComplex {
  bool valid = false;
  std::string error;
  SimplicialSurface surf;
  std::vector<Vertex> to_orig;   // local -> original id
  std::vector<Vertex> to_local;  // original -> local id or -1
};

PrefixComplex build_prefix(const LayeredDisk& disk, int j) {
  PrefixComplex p;
  const Vertex n = disk.surface.vertex_count();
  p.to_local.assign(n, -1);
  for (Vertex v = 0; v < n; ++v)
    if (disk.layer_of[v] <= j) {
      p.to_local[v] = static_cast<Vertex>(p.to_orig.size());
      p.to_orig.push_back(v);
    }
  std::vector<FaceTriple> faces;
  for (const auto& f : disk.surface.faces()) {
    if (p.to_local[f[0]] >= 0 && p.to_local[f[1]] >= 0 && p.to_local[f[2]] >= 0)
      faces.push_back({p.to_local[f[0]], p.to_local[f[1]], p.to_local[f[2]]});
  }
  try {
    p.surf = SimplicialSurface::build_from_faces(static_cast<Vertex>(p.to_orig.size()),
                                                 std::move(faces));
    p.valid = true;
  } catch (const Error& e) {
    p.error = e.what();
  }
  return p;
}

}  // namespace

InvariantReport verify_layer_invariants(const LayeredDisk& disk) {
  InvariantReport report;
  const auto& surf = disk.surface;
  const int k = disk.radius;
  const int d = disk.degree;
  auto add = [&report](std::string property, int layer, bool pass, std::string detail = "") {
    report.checks.push_back({std::move(property), layer, pass, std::move(detail)});
  };

  std::vector<PrefixComplex> prefix(k + 1);
  for (int j = 1; j <= k; ++j) prefix[j] = build_prefix(disk, j);

  // disc / boundary / ring-degree need the prefix complex.
  for (int j = 1; j <= k; ++j) {
    const auto& p = prefix[j];
    if (!p.valid) {
      add("disc", j, false, p.error);
      add("boundary", j, false, "prefix complex invalid");
      add("ring-degree", j, false, "prefix complex invalid");
      continue;
    }
    {
      bool pass = p.surf.connected() && p.surf.f_vector().chi() == 1 && !p.surf.closed();
      std::string detail;
      if (pass) {
        try {
          p.surf.boundary_cycle();
        } catch (const Error& e) {
          pass = false;
          detail = e.what();
        }
      } else {
        detail = "chi=" + std::to_string(p.surf.f_vector().chi()) +
                 (p.surf.connected() ? "" : ", disconnected") +
                 (p.surf.closed() ? ", closed" : "");
      }
      add("disc", j, pass, detail);
    }
    {
      bool pass = true;
      std::string detail;
      std::set<Vertex> expected(disk.layers[j].begin(), disk.layers[j].end());
      for (Vertex lv = 0; lv < p.surf.vertex_count() && pass; ++lv) {
        const Vertex ov = p.to_orig[lv];
        const bool on_boundary = p.surf.is_boundary_vertex(lv);
        if (on_boundary && !expected.count(ov)) {
          pass = false;
          detail = "vertex " + vtx(ov) + " is on the boundary but in layer " +
                   std::to_string(disk.layer_of[ov]);
        } else if (!on_boundary && expected.count(ov)) {
          pass = false;
          detail = "layer-" + std::to_string(j) + " vertex " + vtx(ov) + " is interior";
        }
      }
      add("boundary", j, pass, detail);
    }
    {
      bool pass = true;
      std::string detail;
      for (Vertex v : disk.layers[j]) {
        const int deg = p.surf.degree(p.to_local[v]);
        if (deg != 3 && deg != 4) {
          pass = false;
          detail = "vertex " + vtx(v) + " has prefix degree " + std::to_string(deg);
          break;
        }
      }
      add("ring-degree", j, pass, detail);
    }
  }

  // cycle: the induced graph on each layer is a single cycle.
  for (int j = 1; j <= k; ++j) {
    bool pass = true;
    std::string detail;
    const auto& layer = disk.layers[j];
    std::set<Vertex> in_layer(layer.begin(), layer.end());
    std::vector<std::vector<Vertex>> within;
    within.reserve(layer.size());
    for (Vertex v : layer) {
      std::vector<Vertex> w;
      for (Vertex x : surf.neighbors(v))
        if (in_layer.count(x)) w.push_back(x);
      within.push_back(std::move(w));
    }
    if (layer.size() < 3) {
      pass = false;
      detail = "layer has fewer than 3 vertices";
    }
    for (std::size_t i = 0; i < layer.size() && pass; ++i)
      if (within[i].size() != 2) {
        pass = false;
        detail = "vertex " + vtx(layer[i]) + " has " + std::to_string(within[i].size()) +
                 " same-layer neighbors";
      }
    if (pass) {
      // single cycle: walk from layer[0] and count
      std::set<Vertex> seen{layer[0]};
      Vertex prev = layer[0], cur = within[0][0];
      while (cur != layer[0]) {
        seen.insert(cur);
        const auto& w = within[std::lower_bound(layer.begin(), layer.end(), cur) - layer.begin()];
        Vertex next = (w[0] == prev) ? w[1] : w[0];
        prev = cur;
        cur = next;
      }
      if (seen.size() != layer.size()) {
        pass = false;
        detail = "induced graph splits into more than one cycle";
      }
    }
    add("cycle", j, pass, detail);
  }

  // shell: attachment counts to the previous layer, and the no-common-
  // neighbor-over-a-non-edge rule.
  for (int j = 1; j <= k; ++j) {
    bool pass = true;
    std::string detail;
    for (Vertex v : disk.layers[j]) {
      std::vector<Vertex> inner;
      for (Vertex x : surf.neighbors(v))
        if (disk.layer_of[x] == j - 1) inner.push_back(x);
      if (inner.size() < 1 || inner.size() > 2) {
        pass = false;
        detail = "vertex " + vtx(v) + " has " + std::to_string(inner.size()) +
                 " previous-layer neighbors";
        break;
      }
      if (inner.size() == 2 && !surf.adjacent(inner[0], inner[1])) {
        pass = false;
        detail = "vertices " + vtx(inner[0]) + "," + vtx(inner[1]) +
                 " share neighbor " + vtx(v) + " without being adjacent";
        break;
      }
    }
    add("shell", j, pass, detail);
  }

  // labels and counts.
  std::vector<BigInt> counts;
  bool have_counts = false;
  if (d >= 6) {
    counts = layer_counts_recurrence(d, k);
    have_counts = true;
  }
  for (int j = 2; j <= k; ++j) {
    bool pass = true;
    std::string detail;
    for (Vertex v : disk.layers[j]) {
      std::vector<Vertex> inner;
      for (Vertex x : surf.neighbors(v))
        if (disk.layer_of[x] == j - 1) inner.push_back(x);
      const LayerLabel lbl = disk.labels[v];
      bool ok = true;
      if (lbl == LayerLabel::A)
        ok = inner.size() == 2;
      else if (lbl == LayerLabel::B)
        ok = inner.size() == 1 && disk.labels[inner[0]] == LayerLabel::A;
      else if (lbl == LayerLabel::C)
        ok = inner.size() == 1 && disk.labels[inner[0]] != LayerLabel::A;
      else
        ok = false;
      if (!ok) {
        pass = false;
        detail = "vertex " + vtx(v) + " labeled " + std::string(1, static_cast<char>(lbl)) +
                 " with " + std::to_string(inner.size()) + " previous-layer neighbors";
        break;
      }
    }
    add("labels", j, pass, detail);

    if (have_counts) {
      const auto sizes = partition_sizes(disk, j);
      PartitionSizes want;
      want.a = counts[j - 1].convert_to<std::int64_t>();
      if (j >= 3) {
        want.b = static_cast<std::int64_t>(d - 6) * counts[j - 2].convert_to<std::int64_t>();
        want.c = static_cast<std::int64_t>(d - 5) *
                 (counts[j - 1] - counts[j - 2]).convert_to<std::int64_t>();
      } else {
        want.b = 0;
        want.c = static_cast<std::int64_t>(d - 5) * counts[1].convert_to<std::int64_t>();
      }
      const bool pass2 = sizes == want;
      add("counts", j, pass2,
          pass2 ? ""
                : "got (" + std::to_string(sizes.a) + "," + std::to_string(sizes.b) + "," +
                      std::to_string(sizes.c) + "), expected (" + std::to_string(want.a) +
                      "," + std::to_string(want.b) + "," + std::to_string(want.c) + ")");
    } else {
      add("counts", j, false, "degree below 6");
    }
  }

  {
    bool pass = true;
    std::string detail;
    for (const auto& [u, v] : surf.edges()) {
      if (std::abs(disk.layer_of[u] - disk.layer_of[v]) > 1) {
        pass = false;
        detail = "edge (" + vtx(u) + "," + vtx(v) + ") spans layers " +
                 std::to_string(disk.layer_of[u]) + " and " + std::to_string(disk.layer_of[v]);
        break;
      }
    }
    add("layering", -1, pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (Vertex v = 0; v < surf.vertex_count(); ++v) {
      if (surf.is_boundary_vertex(v)) continue;
      if (surf.degree(v) != d) {
        pass = false;
        detail = "interior vertex " + vtx(v) + " has degree " + std::to_string(surf.degree(v));
        break;
      }
    }
    add("interior-degree", -1, pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (const auto& [u, v] : surf.edges()) {
      const int want = surf.is_boundary_edge(u, v) ? 1 : 2;
      const int got = surf.common_neighbor_count(u, v);
      if (got != want) {
        pass = false;
        detail = "edge (" + vtx(u) + "," + vtx(v) + ") has " + std::to_string(got) +
                 " common neighbors, expected " + std::to_string(want);
        break;
      }
    }
    add("common-neighbors", -1, pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    std::vector<int> dist(surf.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[disk.center] = 0;
    q.push(disk.center);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : surf.neighbors(v))
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
    for (Vertex v = 0; v < surf.vertex_count(); ++v)
      if (dist[v] != disk.layer_of[v]) {
        pass = false;
        detail = "vertex " + vtx(v) + " is at distance " + std::to_string(dist[v]) +
                 " but in layer " + std::to_string(disk.layer_of[v]);
        break;
      }
    add("distance", -1, pass, detail);
  }

  return report;
}

}  // namespace regtri
