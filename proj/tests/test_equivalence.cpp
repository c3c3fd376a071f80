#include <doctest.h>

#include <random>

#include "regtri/classify.hpp"
#include "regtri/equivalence.hpp"
#include "regtri/generator.hpp"
#include "regtri/tri_io.hpp"
#include "test_support.hpp"

using namespace regtri;

TEST_CASE("canonical codes are relabeling invariant") {
  std::mt19937 rng(7);
  for (auto kind : {ReferenceKind::Tetrahedron, ReferenceKind::Octahedron,
                    ReferenceKind::Icosahedron, ReferenceKind::RP2_6}) {
    auto s = reference(kind).surface;
    const auto code = canonical_code(s);
    for (int i = 0; i < 10; ++i)
      CHECK(canonical_code(test::shuffled(s, rng)) == code);
  }
}

TEST_CASE("canonical codes separate the small surfaces") {
  auto tet = canonical_code(reference(ReferenceKind::Tetrahedron).surface);
  auto oct = canonical_code(reference(ReferenceKind::Octahedron).surface);
  auto ico = canonical_code(reference(ReferenceKind::Icosahedron).surface);
  auto rp2 = canonical_code(reference(ReferenceKind::RP2_6).surface);
  CHECK(tet != oct);
  CHECK(ico != rp2);
  CHECK(canonical_code(test::torus7()) != ico);
}

TEST_CASE("a disk and a closed surface never share a code") {
  // Same f-vector is impossible here anyway; build a disk with 4 vertices and
  // compare against the tetrahedron: boundary must separate them.
  auto disk = SimplicialSurface::build_from_faces({{0, 1, 2}, {0, 1, 3}});
  CHECK(canonical_code(disk) != canonical_code(reference(ReferenceKind::Tetrahedron).surface));
}

TEST_CASE("pruned class restriction agrees with the exhaustive code") {
  std::mt19937 rng(11);
  std::vector<SimplicialSurface> corpus;
  corpus.push_back(reference(ReferenceKind::Tetrahedron).surface);
  corpus.push_back(reference(ReferenceKind::Octahedron).surface);
  corpus.push_back(reference(ReferenceKind::Icosahedron).surface);
  corpus.push_back(reference(ReferenceKind::RP2_6).surface);
  corpus.push_back(test::torus7());
  corpus.push_back(generate(7, 2).surface);
  corpus.push_back(generate(6, 2).surface);
  corpus.push_back(SimplicialSurface::build_from_faces({{0, 1, 2}}));
  for (const auto& s : {corpus[0], corpus[4], corpus[5]})
    corpus.push_back(test::shuffled(s, rng));

  // Same equivalence relation on every pair, and both invariant under relabeling.
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(canonical_code(corpus[i]) ==
          canonical_code(test::shuffled(corpus[i], rng)));
    CHECK(canonical_code_exhaustive(corpus[i]) ==
          canonical_code_exhaustive(test::shuffled(corpus[i], rng)));
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      const bool pruned_equal = canonical_code(corpus[i]) == canonical_code(corpus[j]);
      const bool full_equal =
          canonical_code_exhaustive(corpus[i]) == canonical_code_exhaustive(corpus[j]);
      CHECK(pruned_equal == full_equal);
    }
  }
}

TEST_CASE("the three construction orders of a disk are equivalent") {
  GenerateOptions reversed;
  reversed.walk.reversed = true;
  GenerateOptions rotated;
  rotated.walk.rotation = 1;
  for (int d : {7, 8})
    for (int k = 1; k <= 4; ++k) {
      auto a = generate(d, k);
      auto b = generate(d, k, reversed);
      auto c = generate(d, k, rotated);
      CHECK(canonical_code(a.surface) == canonical_code(b.surface));
      CHECK(canonical_code(a.surface) == canonical_code(c.surface));
    }
}

TEST_CASE("equivalent returns a face-preserving witness") {
  std::mt19937 rng(3);
  auto a = generate(7, 3).surface;
  auto b = test::shuffled(a, rng);
  const auto w = equivalent(a, b);
  REQUIRE(w.equivalent);
  // spot-check beyond the library's own verification
  std::vector<FaceTriple> mapped;
  for (const auto& f : a.faces()) {
    FaceTriple g{w.vertex_map[f[0]], w.vertex_map[f[1]], w.vertex_map[f[2]]};
    std::sort(g.begin(), g.end());
    mapped.push_back(g);
  }
  std::sort(mapped.begin(), mapped.end());
  CHECK(mapped == b.faces());

  CHECK_FALSE(equivalent(a, generate(8, 3).surface).equivalent);
  CHECK_FALSE(equivalent(reference(ReferenceKind::Icosahedron).surface,
                         reference(ReferenceKind::RP2_6).surface)
                  .equivalent);
  CHECK(equivalent(a, a).equivalent);
  CHECK(equivalent(b, a).equivalent);
}

TEST_CASE("codes survive a TRI round trip byte for byte") {
  auto disk = generate(7, 3);
  const auto code = canonical_code(disk.surface);
  auto reloaded = disk_from_tri(parse_tri(to_tri(disk)));
  CHECK(canonical_code(reloaded.surface).bytes() == code.bytes());
  CHECK(canonical_code(disk.surface).hex() == code.hex());
}

TEST_CASE("disconnected input is rejected") {
  auto two = SimplicialSurface::build_from_faces(
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
       {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}});
  CHECK_FALSE(two.connected());
  try {
    canonical_code(two);
    FAIL("expected Disconnected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
}

TEST_CASE("canonical code golden value stays pinned") {
  // Frozen output of this implementation for the tetrahedron; guards against
  // accidental encoding drift.
  const auto hex = canonical_code(reference(ReferenceKind::Tetrahedron).surface).hex();
  CHECK(hex.size() == 584);
  CHECK(hex.substr(0, 24) == "000000180000000100000002");
}
