#include "regtri/surface.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace regtri {
namespace {

std::string face_str(const FaceTriple& f) {
  return "(" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
         std::to_string(f[2]) + ")";
}

std::string edge_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

SimplicialSurface SimplicialSurface::build_from_faces(std::vector<FaceTriple> faces) {
  Vertex max_id = -1;
  for (const auto& f : faces)
    max_id = std::max({max_id, f[0], f[1], f[2]});
  return build_from_faces(max_id + 1, std::move(faces));
}

SimplicialSurface SimplicialSurface::build_from_faces(Vertex vertex_count,
                                                      std::vector<FaceTriple> faces) {
  SimplicialSurface s;
  s.n_ = vertex_count;
  if (faces.empty() || vertex_count == 0)
    throw Error(ErrorCode::BadLink, "empty face list");

  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    if (f[0] == f[1] || f[1] == f[2])
      throw Error(ErrorCode::DegenerateFace, "repeated vertex in face " + face_str(f));
    if (f[0] < 0 || f[2] >= vertex_count)
      throw Error(ErrorCode::UnknownVertex,
                  "face " + face_str(f) + " outside [0," + std::to_string(vertex_count) + ")");
  }
  std::sort(faces.begin(), faces.end());
  for (std::size_t i = 1; i < faces.size(); ++i)
    if (faces[i] == faces[i - 1])
      throw Error(ErrorCode::DuplicateFace, "face " + face_str(faces[i]));
  s.faces_ = std::move(faces);

  // Edge table with the incident face apexes; an edge in three faces is
  // non-manifold.
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(s.faces_.size() * 3);
  for (const auto& f : s.faces_) {
    edges.emplace_back(f[0], f[1]);
    edges.emplace_back(f[0], f[2]);
    edges.emplace_back(f[1], f[2]);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  s.edges_ = std::move(edges);
  s.edge_faces_.assign(s.edges_.size(), {-1, -1});

  auto edge_slot = [&s](Vertex u, Vertex v) {
    return std::lower_bound(s.edges_.begin(), s.edges_.end(), std::make_pair(u, v)) -
           s.edges_.begin();
  };
  for (const auto& f : s.faces_) {
    const Vertex apex[3] = {f[2], f[1], f[0]};
    const std::pair<Vertex, Vertex> e[3] = {{f[0], f[1]}, {f[0], f[2]}, {f[1], f[2]}};
    for (int i = 0; i < 3; ++i) {
      auto& slots = s.edge_faces_[edge_slot(e[i].first, e[i].second)];
      if (slots[0] == -1)
        slots[0] = apex[i];
      else if (slots[1] == -1)
        slots[1] = apex[i];
      else
        throw Error(ErrorCode::NonManifoldEdge,
                    "edge " + edge_str(e[i].first, e[i].second) + " lies in 3 or more faces");
    }
  }
  for (auto& slots : s.edge_faces_)
    if (slots[1] != -1 && slots[1] < slots[0]) std::swap(slots[0], slots[1]);

  // Per-vertex link assembly. The link graph of v has one edge (a,b) per face
  // (v,a,b); every neighbor carries 1 or 2 such edges after the manifold
  // check, so the only failure modes are disconnection and isolated vertices.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> fan(s.n_);
  for (const auto& f : s.faces_) {
    fan[f[0]].emplace_back(f[1], f[2]);
    fan[f[1]].emplace_back(f[0], f[2]);
    fan[f[2]].emplace_back(f[0], f[1]);
  }

  s.link_.resize(s.n_);
  s.boundary_.assign(s.n_, 0);
  for (Vertex v = 0; v < s.n_; ++v) {
    if (fan[v].empty())
      throw Error(ErrorCode::BadLink, "vertex " + std::to_string(v) + " lies in no face");

    // neighbor -> up to two link partners, ascending neighbor order
    std::vector<Vertex> nbr;
    for (auto [a, b] : fan[v]) {
      nbr.push_back(a);
      nbr.push_back(b);
    }
    std::sort(nbr.begin(), nbr.end());
    nbr.erase(std::unique(nbr.begin(), nbr.end()), nbr.end());
    auto idx_of = [&nbr](Vertex x) {
      return std::lower_bound(nbr.begin(), nbr.end(), x) - nbr.begin();
    };
    std::vector<std::array<Vertex, 2>> partner(nbr.size(), {-1, -1});
    auto add_partner = [&](Vertex x, Vertex y) {
      auto& p = partner[idx_of(x)];
      if (p[0] == -1)
        p[0] = y;
      else
        p[1] = y;
    };
    for (auto [a, b] : fan[v]) {
      add_partner(a, b);
      add_partner(b, a);
    }

    std::vector<Vertex> endpoints;
    for (std::size_t i = 0; i < nbr.size(); ++i)
      if (partner[i][1] == -1) endpoints.push_back(nbr[i]);

    auto walk = [&](Vertex start, Vertex toward) {
      std::vector<Vertex> seq{start, toward};
      Vertex prev = start, cur = toward;
      while (true) {
        const auto& p = partner[idx_of(cur)];
        Vertex next = (p[0] == prev) ? p[1] : p[0];
        if (next == -1 || next == start) break;
        seq.push_back(next);
        prev = cur;
        cur = next;
      }
      return seq;
    };

    Link link;
    if (endpoints.empty()) {
      Vertex start = nbr[0];
      const auto& p = partner[0];
      link.kind = Link::Kind::Cycle;
      link.vertices = walk(start, std::min(p[0], p[1]));
    } else if (endpoints.size() == 2) {
      auto fwd = walk(endpoints[0], partner[idx_of(endpoints[0])][0]);
      auto bwd = walk(endpoints[1], partner[idx_of(endpoints[1])][0]);
      link.kind = Link::Kind::Path;
      link.vertices = std::min(fwd, bwd);
      s.boundary_[v] = 1;
    } else {
      throw Error(ErrorCode::BadLink,
                  "link of vertex " + std::to_string(v) + " has " +
                      std::to_string(endpoints.size()) + " path endpoints");
    }
    if (link.vertices.size() != nbr.size())
      throw Error(ErrorCode::BadLink,
                  "link of vertex " + std::to_string(v) + " is disconnected");
    s.link_[v] = std::move(link);
  }

  s.closed_ = true;
  for (const auto& slots : s.edge_faces_)
    if (slots[1] == -1) s.closed_ = false;

  // Connectivity over the 1-skeleton.
  std::vector<char> seen(s.n_, 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  Vertex reached = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : s.link_[v].vertices)
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  s.connected_ = (reached == s.n_);

  return s;
}

bool SimplicialSurface::is_boundary_edge(Vertex u, Vertex v) const {
  auto i = edge_index(u, v);
  if (i == static_cast<std::size_t>(-1))
    throw Error(ErrorCode::UnknownVertex, "no edge " + edge_str(u, v));
  return edge_faces_[i][1] == -1;
}

std::vector<Vertex> SimplicialSurface::neighbors(Vertex v) const {
  valid(v);
  std::vector<Vertex> out = link_[v].vertices;
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialSurface SimplicialSurface::star(Vertex v) const {
  valid(v);
  std::vector<Vertex> verts = neighbors(v);
  verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  auto local = [&verts](Vertex x) {
    return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), x) -
                               verts.begin());
  };
  std::vector<FaceTriple> faces;
  for (const auto& f : faces_)
    if (f[0] == v || f[1] == v || f[2] == v)
      faces.push_back({local(f[0]), local(f[1]), local(f[2])});
  return build_from_faces(static_cast<Vertex>(verts.size()), std::move(faces));
}

FVector SimplicialSurface::f_vector() const {
  return FVector{n_, static_cast<std::int64_t>(edges_.size()),
                 static_cast<std::int64_t>(faces_.size())};
}

std::vector<Vertex> SimplicialSurface::boundary_cycle() const {
  if (closed_) throw Error(ErrorCode::ClosedSurface, "surface has no boundary");
  if (!connected_ || f_vector().chi() != 1)
    throw Error(ErrorCode::NotADisc,
                "chi=" + std::to_string(f_vector().chi()) +
                    (connected_ ? "" : ", disconnected"));

  std::size_t boundary_edges = 0;
  Vertex start = -1;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edge_faces_[i][1] == -1) {
      ++boundary_edges;
      if (start == -1 || edges_[i].first < start) start = edges_[i].first;
    }

  auto boundary_next = [this](Vertex v) {
    const auto& path = link_[v].vertices;
    return std::array<Vertex, 2>{path.front(), path.back()};
  };

  std::vector<Vertex> cycle{start};
  auto ends = boundary_next(start);
  Vertex prev = start, cur = std::min(ends[0], ends[1]);
  while (cur != start) {
    cycle.push_back(cur);
    auto e = boundary_next(cur);
    Vertex next = (e[0] == prev) ? e[1] : e[0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != boundary_edges)
    throw Error(ErrorCode::NotADisc, "boundary is not a single cycle");
  return cycle;
}

int SimplicialSurface::common_neighbor_count(Vertex u, Vertex v) const {
  valid(u);
  valid(v);
  auto a = neighbors(u), b = neighbors(v);
  std::vector<Vertex> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return static_cast<int>(both.size());
}

bool SimplicialSurface::adjacent(Vertex u, Vertex v) const {
  if (u == v) return false;
  return edge_index(std::min(u, v), std::max(u, v)) != static_cast<std::size_t>(-1);
}

std::pair<Vertex, Vertex> SimplicialSurface::edge_apexes(Vertex u, Vertex v) const {
  valid(u);
  valid(v);
  auto i = edge_index(std::min(u, v), std::max(u, v));
  if (i == static_cast<std::size_t>(-1))
    throw Error(ErrorCode::UnknownVertex, "no edge " + edge_str(u, v));
  return {edge_faces_[i][0], edge_faces_[i][1]};
}

bool SimplicialSurface::is_d_regular(int d) const {
  for (Vertex v = 0; v < n_; ++v) {
    if (!closed_ && boundary_[v]) continue;
    if (degree(v) != d) return false;
  }
  return true;
}

int SimplicialSurface::regular_degree() const {
  int d = -1;
  for (Vertex v = 0; v < n_; ++v) {
    if (!closed_ && boundary_[v]) continue;
    if (d == -1)
      d = degree(v);
    else if (degree(v) != d)
      return -1;
  }
  return d;
}

std::size_t SimplicialSurface::edge_index(Vertex u, Vertex v) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v))
    return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(it - edges_.begin());
}

}  // namespace regtri
