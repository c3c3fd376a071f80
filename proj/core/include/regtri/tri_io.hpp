#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "regtri/generator.hpp"
#include "regtri/surface.hpp"

namespace regtri {

/// Parsed TRI file. The grammar is line-based and LF-terminated:
///   regtri 1
///   surface closed|disk
///   vertices N
///   faces M
///   f a b c          (M lines, 0-based ids, a<b<c)
///   layer v k CLS    (optional trailing lines, CLS in {A,B,C,R})
/// `#` begins a comment line; unknown directives are an error.
struct TriDocument {
  bool closed = false;
  Vertex vertex_count = 0;
  std::vector<FaceTriple> faces;
  bool has_layers = false;
  std::vector<int> layer_of;
  std::vector<LayerLabel> labels;
};

TriDocument parse_tri(std::istream& in);
TriDocument parse_tri(const std::string& text);

/// Builds and validates the surface; the closed/disk header must match.
SimplicialSurface surface_from_tri(const TriDocument& doc);

/// Requires layer annotations; shape-validates via make_layered_disk.
LayeredDisk disk_from_tri(const TriDocument& doc);

std::string to_tri(const SimplicialSurface& surface);
std::string to_tri(const LayeredDisk& disk);

}  // namespace regtri
