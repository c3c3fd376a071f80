#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "regtri/surface.hpp"

namespace regtri {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class LayerLabel : char { R = 'R', A = 'A', B = 'B', C = 'C' };

/// A d-regular triangulated 2-disc built layer by layer. Layer j holds the
/// vertices at graph distance j from the center; the boundary of the radius-k
/// disk is exactly layer k. Labels A/B/C (layers >= 2) record whether a vertex
/// has two previous-layer neighbors (A), or one that is A-labeled (B), or one
/// that is not (C). Layers 0 and 1 carry the R label.
struct LayeredDisk {
  SimplicialSurface surface;
  int degree = 0;
  int radius = 0;
  Vertex center = 0;
  std::vector<std::vector<Vertex>> layers;  // V_0..V_radius, ascending ids
  std::vector<int> layer_of;                // per vertex
  std::vector<LayerLabel> labels;           // per vertex

  const std::vector<Vertex>& layer(int j) const { return layers.at(j); }
};

/// Boundary-walk variation for the uniqueness experiments: the extension walk
/// may start at a rotated edge of the canonical boundary cycle and may run in
/// the reversed direction. Any choice yields a combinatorially equivalent
/// disk; ids and serialization differ.
struct WalkOrder {
  int rotation = 0;
  bool reversed = false;
};

struct GenerateOptions {
  std::int64_t max_vertices = 5'000'000;
  WalkOrder walk;
};

/// X_1 = st(v0): center 0 of degree d with boundary ring 1..d.
LayeredDisk initial_disk(int d);

/// The unique one-layer extension: one shared A-vertex per boundary edge,
/// d-5 fresh vertices per degree-3 boundary vertex and d-6 per degree-4 one,
/// fanned so every previous-boundary link closes to a d-cycle.
LayeredDisk extend(const LayeredDisk& disk, const GenerateOptions& opts = {});

/// initial_disk(d) followed by k-1 extensions.
LayeredDisk generate(int d, int k, const GenerateOptions& opts = {});

/// Assembles a LayeredDisk from parts (deserialization path). Checks shape
/// only: layers partition the vertices, indices are contiguous from 0, layer 0
/// is a single vertex, R labels appear exactly on layers 0 and 1. Semantic
/// invariants are the business of verify_layer_invariants.
LayeredDisk make_layered_disk(SimplicialSurface surface, std::vector<int> layer_of,
                              std::vector<LayerLabel> labels);

/// [n_0..n_k] by the exact integer recurrence: n_0=1, n_1=d, n_2=d(d-4),
/// n_j=(d-4)n_{j-1}-n_{j-2}. For d=6 this degenerates to n_j=6j.
std::vector<BigInt> layer_counts_recurrence(int d, int k);

/// [n_0..n_k] from the characteristic-root closed form (d >= 7), rounded to
/// the nearest integer with the working precision escalated until rounding is
/// unambiguous (PrecisionLoss if it never is). The closed form produces the
/// shifted sequence with y_0=0; the returned list applies n_0=1.
std::vector<BigInt> layer_counts_closed_form(int d, int k);

struct PartitionSizes {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  bool operator==(const PartitionSizes&) const = default;
};

/// Label counts of layer j (2 <= j <= radius).
PartitionSizes partition_sizes(const LayeredDisk& disk, int j);

/// Hypothetical boundary-degree profile of a triangulated disc inside a
/// d-regular triangulation: three exceptional boundary vertices of degrees
/// dx, dv, dw, m2 boundary vertices of degree d-2, m1 of degree d-1 and m0
/// interior vertices of degree d.
struct DegreeProfile {
  int d = 7;        // >= 7
  int dx = 2;       // exceptional degrees, each >= 2
  int dv = 2;
  int dw = 2;
  std::int64_t m0 = 0;
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
};

/// Exact Euler characteristic such a disc would have:
///   chi = (12-(dx+dv+dw))/6 + m0(6-d)/6 + m1(5-d)/6 + m2(6-d)/6.
/// A value < 1 certifies the disc cannot exist.
Rational forbidden_disk_chi(const DegreeProfile& profile);

struct InvariantCheck {
  std::string property;
  int layer = -1;  // -1 for whole-disk checks
  bool pass = true;
  std::string detail;  // first counterexample when failing
};

struct InvariantReport {
  std::vector<InvariantCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Full layer audit of a LayeredDisk (generated or deserialized):
///   disc     prefix complex through layer j is a triangulated 2-disc
///   boundary boundary vertex set of the prefix equals V_j
///   cycle    induced graph on V_j is a single cycle
///   layering every edge joins same-layer or adjacent-layer vertices
///   shell    a vertex one layer out has 1 or 2 inner neighbors; if 2, they
///            are adjacent (no common neighbors over a non-edge)
///   ring-degree  deg of V_j vertices within the prefix is 3 or 4
///   interior-degree  interior vertices of the whole disk have degree d
///   common-neighbors interior edges have exactly 2 common neighbors,
///            boundary edges exactly 1
///   labels   A/B/C labels match the previous-layer attachment pattern
///   counts   |A_j|=n_{j-1}, |B_j|=(d-6)n_{j-2}, |C_j|=(d-5)(n_{j-1}-n_{j-2})
///   distance layer(v) equals the graph distance from the center
/// Failures are report content, never exceptions.
InvariantReport verify_layer_invariants(const LayeredDisk& disk);

}  // namespace regtri
