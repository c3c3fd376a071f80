#include "regtri/tri_io.hpp"

#include <istream>
#include <sstream>

namespace regtri {
namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::InvalidFormat, "line " + std::to_string(line_no) + ": " + what);
}

long long parse_int(const std::string& tok, std::size_t line_no) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    fail(line_no, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) fail(line_no, "trailing characters in integer '" + tok + "'");
  return value;
}

}  // namespace

TriDocument parse_tri(std::istream& in) {
  TriDocument doc;
  std::string line;
  std::size_t line_no = 0;

  enum class Stage { Magic, Header, Faces, Layers } stage = Stage::Magic;
  bool have_surface = false, have_vertices = false, have_faces = false;
  std::size_t faces_expected = 0;
  std::vector<char> layer_seen;

  auto next_tokens = [&](std::vector<std::string>& toks) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      toks.clear();
      std::istringstream ss(line);
      std::string t;
      while (ss >> t) toks.push_back(t);
      if (!toks.empty()) return true;
    }
    return false;
  };

  std::vector<std::string> toks;
  while (next_tokens(toks)) {
    const std::string& head = toks[0];
    if (stage == Stage::Magic) {
      if (head != "regtri" || toks.size() != 2 || toks[1] != "1")
        fail(line_no, "expected 'regtri 1'");
      stage = Stage::Header;
      continue;
    }
    if (head == "surface") {
      if (have_surface || stage != Stage::Header) fail(line_no, "misplaced 'surface'");
      if (toks.size() != 2 || (toks[1] != "closed" && toks[1] != "disk"))
        fail(line_no, "expected 'surface closed' or 'surface disk'");
      doc.closed = toks[1] == "closed";
      have_surface = true;
    } else if (head == "vertices") {
      if (have_vertices || stage != Stage::Header) fail(line_no, "misplaced 'vertices'");
      if (toks.size() != 2) fail(line_no, "expected 'vertices N'");
      const long long n = parse_int(toks[1], line_no);
      if (n < 0 || n > (1LL << 31) - 1) fail(line_no, "vertex count out of range");
      doc.vertex_count = static_cast<Vertex>(n);
      have_vertices = true;
    } else if (head == "faces") {
      if (have_faces || stage != Stage::Header) fail(line_no, "misplaced 'faces'");
      if (!have_surface || !have_vertices)
        fail(line_no, "'faces' before 'surface'/'vertices'");
      if (toks.size() != 2) fail(line_no, "expected 'faces M'");
      const long long m = parse_int(toks[1], line_no);
      if (m < 0) fail(line_no, "face count out of range");
      faces_expected = static_cast<std::size_t>(m);
      have_faces = true;
      stage = Stage::Faces;
    } else if (head == "f") {
      if (stage != Stage::Faces) fail(line_no, "misplaced face record");
      if (doc.faces.size() == faces_expected) fail(line_no, "more face records than declared");
      if (toks.size() != 4) fail(line_no, "expected 'f a b c'");
      FaceTriple f;
      for (int i = 0; i < 3; ++i) {
        const long long v = parse_int(toks[i + 1], line_no);
        if (v < 0 || v >= doc.vertex_count) fail(line_no, "vertex id out of range");
        f[i] = static_cast<Vertex>(v);
      }
      if (!(f[0] < f[1] && f[1] < f[2])) fail(line_no, "face ids must satisfy a<b<c");
      doc.faces.push_back(f);
    } else if (head == "layer") {
      if (stage == Stage::Faces) {
        if (doc.faces.size() != faces_expected)
          fail(line_no, "layer records before all declared faces");
        stage = Stage::Layers;
        doc.has_layers = true;
        doc.layer_of.assign(doc.vertex_count, -1);
        doc.labels.assign(doc.vertex_count, LayerLabel::R);
        layer_seen.assign(doc.vertex_count, 0);
      }
      if (stage != Stage::Layers) fail(line_no, "misplaced layer record");
      if (toks.size() != 3 + 1) fail(line_no, "expected 'layer v k CLS'");
      const long long v = parse_int(toks[1], line_no);
      if (v < 0 || v >= doc.vertex_count) fail(line_no, "vertex id out of range");
      if (layer_seen[v]) fail(line_no, "duplicate layer record for vertex " + std::to_string(v));
      layer_seen[v] = 1;
      const long long k = parse_int(toks[2], line_no);
      if (k < 0 || k > doc.vertex_count) fail(line_no, "layer index out of range");
      if (toks[3].size() != 1 || std::string("ABCR").find(toks[3][0]) == std::string::npos)
        fail(line_no, "label must be one of A, B, C, R");
      doc.layer_of[v] = static_cast<int>(k);
      doc.labels[v] = static_cast<LayerLabel>(toks[3][0]);
    } else {
      fail(line_no, "unknown directive '" + head + "'");
    }
  }

  if (!have_surface || !have_vertices || !have_faces)
    fail(line_no, "incomplete header (need surface, vertices, faces)");
  if (doc.faces.size() != faces_expected)
    fail(line_no, "declared " + std::to_string(faces_expected) + " faces, found " +
                      std::to_string(doc.faces.size()));
  if (doc.has_layers)
    for (Vertex v = 0; v < doc.vertex_count; ++v)
      if (!layer_seen[v]) fail(line_no, "vertex " + std::to_string(v) + " has no layer record");
  return doc;
}

TriDocument parse_tri(const std::string& text) {
  std::istringstream in(text);
  return parse_tri(in);
}

SimplicialSurface surface_from_tri(const TriDocument& doc) {
  auto surface = SimplicialSurface::build_from_faces(doc.vertex_count, doc.faces);
  if (surface.closed() != doc.closed)
    throw Error(ErrorCode::InvalidFormat,
                std::string("header says '") + (doc.closed ? "closed" : "disk") +
                    "' but the face set is " + (surface.closed() ? "closed" : "not closed"));
  return surface;
}

LayeredDisk disk_from_tri(const TriDocument& doc) {
  if (!doc.has_layers)
    throw Error(ErrorCode::InvalidFormat, "file carries no layer annotations");
  return make_layered_disk(surface_from_tri(doc), doc.layer_of, doc.labels);
}

namespace {

void write_header(std::string& out, const SimplicialSurface& s) {
  out += "regtri 1\n";
  out += s.closed() ? "surface closed\n" : "surface disk\n";
  out += "vertices " + std::to_string(s.vertex_count()) + "\n";
  out += "faces " + std::to_string(s.faces().size()) + "\n";
  for (const auto& f : s.faces())
    out += "f " + std::to_string(f[0]) + " " + std::to_string(f[1]) + " " +
           std::to_string(f[2]) + "\n";
}

}  // namespace

std::string to_tri(const SimplicialSurface& surface) {
  std::string out;
  write_header(out, surface);
  return out;
}

std::string to_tri(const LayeredDisk& disk) {
  std::string out;
  write_header(out, disk.surface);
  for (Vertex v = 0; v < disk.surface.vertex_count(); ++v)
    out += "layer " + std::to_string(v) + " " + std::to_string(disk.layer_of[v]) + " " +
           std::string(1, static_cast<char>(disk.labels[v])) + "\n";
  return out;
}

}  // namespace regtri
