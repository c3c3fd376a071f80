#include <doctest.h>

#include "regtri/classify.hpp"
#include "regtri/generator.hpp"
#include "regtri/surface.hpp"
#include "test_support.hpp"

using namespace regtri;

namespace {

SimplicialSurface tetra() { return reference(ReferenceKind::Tetrahedron).surface; }
SimplicialSurface octa() { return reference(ReferenceKind::Octahedron).surface; }

void check_error(ErrorCode code, const std::vector<FaceTriple>& faces,
                 const char* fragment = nullptr) {
  try {
    SimplicialSurface::build_from_faces(faces);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == code);
    if (fragment) CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("build_from_faces accepts the boundary of a tetrahedron") {
  auto s = tetra();
  CHECK(s.closed());
  CHECK(s.vertex_count() == 4);
  CHECK(s.connected());
}

TEST_CASE("build_from_faces accepts a single triangle") {
  auto s = SimplicialSurface::build_from_faces({{0, 1, 2}});
  CHECK_FALSE(s.closed());
  for (Vertex v = 0; v < 3; ++v) {
    CHECK(s.is_boundary_vertex(v));
    CHECK(s.link(v).kind == Link::Kind::Path);
    CHECK(s.link(v).vertices.size() == 2);
  }
}

TEST_CASE("build_from_faces rejects bad complexes") {
  check_error(ErrorCode::NonManifoldEdge,
              {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {1, 2, 4}}, "(1,2)");
  check_error(ErrorCode::DegenerateFace, {{0, 1, 1}});
  check_error(ErrorCode::DuplicateFace, {{0, 1, 2}, {2, 1, 0}});
  // two triangles pinched at vertex 0
  check_error(ErrorCode::BadLink, {{0, 1, 2}, {0, 3, 4}});
  // vertex 3 exists but lies in no face
  CHECK_THROWS_AS(SimplicialSurface::build_from_faces(5, {{0, 1, 2}}), Error);
}

TEST_CASE("links are canonically ordered cycles or paths") {
  auto s = octa();
  const auto& link0 = s.link(0);
  CHECK(link0.kind == Link::Kind::Cycle);
  CHECK(link0.vertices == std::vector<Vertex>{1, 2, 3, 4});

  for (Vertex v = 0; v < 4; ++v) CHECK(tetra().link(v).vertices.size() == 3);

  auto disk = generate(7, 2);
  CHECK(disk.surface.link(0).kind == Link::Kind::Cycle);
  CHECK(disk.surface.link(0).vertices.size() == 7);
  for (Vertex v : disk.layers[2]) {
    const auto& link = disk.surface.link(v);
    CHECK(link.kind == Link::Kind::Path);
    const auto n = link.vertices.size();
    CHECK((n == 3 || n == 4));
  }
}

TEST_CASE("link kind matches edge incidence everywhere") {
  for (const auto& s : {tetra(), octa(), generate(7, 2).surface}) {
    for (Vertex v = 0; v < s.vertex_count(); ++v) {
      bool all_two = true;
      for (Vertex w : s.neighbors(v))
        if (s.is_boundary_edge(std::min(v, w), std::max(v, w))) all_two = false;
      CHECK(s.link(v).is_cycle() == all_two);
    }
  }
}

TEST_CASE("star builds the cone over the link") {
  auto st = octa().star(2);
  CHECK(st.f_vector() == FVector{5, 8, 4});
  CHECK(st.f_vector().chi() == 1);

  auto disk = generate(7, 3);
  CHECK(disk.surface.star(0).f_vector() == FVector{8, 14, 7});

  auto tri = SimplicialSurface::build_from_faces({{0, 1, 2}});
  CHECK(tri.star(0).faces() == tri.faces());

  for (Vertex v = 0; v < disk.surface.vertex_count(); v += 17)
    if (!disk.surface.is_boundary_vertex(v))
      CHECK(disk.surface.star(v).f_vector().chi() == 1);
}

TEST_CASE("f_vector matches the reference surfaces") {
  CHECK(reference(ReferenceKind::Icosahedron).surface.f_vector() == FVector{12, 30, 20});
  CHECK(reference(ReferenceKind::Icosahedron).surface.f_vector().chi() == 2);
  CHECK(reference(ReferenceKind::RP2_6).surface.f_vector() == FVector{6, 15, 10});
  CHECK(reference(ReferenceKind::RP2_6).surface.f_vector().chi() == 1);
}

TEST_CASE("f_vector of the radius-2 7-regular disk agrees with the degree count") {
  auto disk = generate(7, 2);
  // Independent edge count: 8 interior vertices of degree 7, and on the rim 7
  // vertices of degree 4 and 14 of degree 3.
  std::int64_t interior = 0, deg4 = 0, deg3 = 0;
  for (Vertex v = 0; v < disk.surface.vertex_count(); ++v) {
    if (!disk.surface.is_boundary_vertex(v)) {
      ++interior;
      CHECK(disk.surface.degree(v) == 7);
    } else if (disk.surface.degree(v) == 4) {
      ++deg4;
    } else {
      CHECK(disk.surface.degree(v) == 3);
      ++deg3;
    }
  }
  CHECK(interior == 8);
  CHECK(deg4 == 7);
  CHECK(deg3 == 14);
  const std::int64_t handshake = (interior * 7 + deg4 * 4 + deg3 * 3) / 2;
  CHECK(handshake == 63);
  CHECK(disk.surface.f_vector() == FVector{29, 63, 35});
  CHECK(disk.surface.f_vector().chi() == 1);
}

TEST_CASE("boundary_cycle walks the rim once") {
  auto tri = SimplicialSurface::build_from_faces({{0, 1, 2}});
  CHECK(tri.boundary_cycle() == std::vector<Vertex>{0, 1, 2});

  CHECK(generate(7, 2).surface.boundary_cycle().size() == 21);

  CHECK_THROWS_AS(tetra().boundary_cycle(), Error);
  try {
    tetra().boundary_cycle();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClosedSurface);
  }

  // annulus: chi 0, two boundary cycles
  auto annulus = SimplicialSurface::build_from_faces(
      {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}});
  CHECK(annulus.f_vector().chi() == 0);
  try {
    annulus.boundary_cycle();
    FAIL("expected NotADisc");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotADisc);
  }
}

TEST_CASE("common neighbors: interior edges have two, boundary edges one") {
  auto disk = generate(7, 3);
  for (const auto& [u, v] : disk.surface.edges()) {
    const int expected = disk.surface.is_boundary_edge(u, v) ? 1 : 2;
    CHECK(disk.surface.common_neighbor_count(u, v) == expected);
  }

  auto tri = SimplicialSurface::build_from_faces({{0, 1, 2}});
  CHECK(tri.common_neighbor_count(0, 1) == 1);
}

TEST_CASE("non-adjacent rim pairs in different stars share at most one neighbor") {
  auto disk = generate(7, 2);
  const auto& rim = disk.layers[2];
  auto ring_neighbors = [&](Vertex v) {
    std::vector<Vertex> inner;
    for (Vertex w : disk.surface.neighbors(v))
      if (disk.layer_of[w] == 1) inner.push_back(w);
    return inner;
  };
  int scanned = 0;
  for (Vertex u : rim)
    for (Vertex v : rim) {
      if (u >= v || disk.surface.adjacent(u, v)) continue;
      auto a = ring_neighbors(u), b = ring_neighbors(v);
      bool disjoint = true;
      for (Vertex x : a)
        for (Vertex y : b)
          if (x == y) disjoint = false;
      if (!disjoint) continue;
      ++scanned;
      CHECK(disk.surface.common_neighbor_count(u, v) <= 1);
    }
  CHECK(scanned > 0);
}

TEST_CASE("degree regularity tests interior vertices on disks, all when closed") {
  CHECK(octa().is_d_regular(4));
  CHECK_FALSE(octa().is_d_regular(5));
  CHECK(generate(8, 3).surface.is_d_regular(8));
  CHECK(octa().regular_degree() == 4);
}

TEST_CASE("face and degree sums satisfy the counting identities") {
  for (const auto& s : {octa(), tetra(), test::torus7()}) {
    std::int64_t degree_sum = 0;
    for (Vertex v = 0; v < s.vertex_count(); ++v) degree_sum += s.degree(v);
    const auto fv = s.f_vector();
    CHECK(degree_sum == 2 * fv.f1);
    CHECK(3 * fv.f2 == 2 * fv.f1);
  }
  for (const auto& disk : {generate(7, 2), generate(6, 3)}) {
    std::int64_t boundary_edges = 0, interior_edges = 0;
    for (const auto& [u, v] : disk.surface.edges())
      (disk.surface.is_boundary_edge(u, v) ? boundary_edges : interior_edges) += 1;
    CHECK(3 * disk.surface.f_vector().f2 == 2 * interior_edges + boundary_edges);
  }
}
