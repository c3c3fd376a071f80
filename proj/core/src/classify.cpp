#include "regtri/classify.hpp"

#include "regtri/equivalence.hpp"

namespace regtri {
namespace {

std::vector<FaceTriple> reference_faces(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::Tetrahedron:
      return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    case ReferenceKind::Octahedron:
      // North pole 0, equator 1-2-3-4, south pole 5.
      return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4},
              {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}};
    case ReferenceKind::Icosahedron:
      // Vertices 0..5 and their primed copies 6..11; the face set is forced
      // by the links lk(0)=C5(1,2,3,4,5), lk(4)=C5(5,0,3,1',2'),
      // lk(5)=C5(1,0,4,2',3'), lk(1)=C5(2,0,5,3',4'), lk(2)=C5(3,0,1,4',5'),
      // lk(1')=C5(5',3,4,2',0'), lk(2')=C5(0',1',4,5,3').
      return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4},  {0, 4, 5},  {0, 1, 5},
              {3, 4, 7}, {4, 7, 8}, {4, 5, 8},  {5, 8, 9},  {1, 5, 9},
              {1, 9, 10}, {1, 2, 10}, {2, 10, 11}, {2, 3, 11}, {3, 7, 11},
              {6, 7, 8}, {6, 8, 9}, {6, 9, 10}, {6, 10, 11}, {6, 7, 11}};
    case ReferenceKind::RP2_6:
      // Forced by lk(0)=C5(1,2,3,4,5), lk(1)=C5(5,0,2,4,3), lk(4)=C5(5,0,3,1,2),
      // lk(3)=C5(2,0,4,1,5); the 1-skeleton is K6.
      return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
              {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}, {2, 3, 5}};
  }
  throw Error(ErrorCode::UnsupportedInput, "unknown reference kind");
}

struct ReferenceSpec {
  int degree;
  FVector f;
};

ReferenceSpec reference_spec(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::Tetrahedron: return {3, {4, 6, 4}};
    case ReferenceKind::Octahedron: return {4, {6, 12, 8}};
    case ReferenceKind::Icosahedron: return {5, {12, 30, 20}};
    case ReferenceKind::RP2_6: return {5, {6, 15, 10}};
  }
  throw Error(ErrorCode::UnsupportedInput, "unknown reference kind");
}

}  // namespace

ReferenceSurface reference(ReferenceKind kind) {
  ReferenceSurface ref{kind, SimplicialSurface::build_from_faces(reference_faces(kind))};
  const auto spec = reference_spec(kind);
  if (!ref.surface.closed() || ref.surface.f_vector() != spec.f ||
      !ref.surface.is_d_regular(spec.degree))
    throw Error(ErrorCode::InternalInvariantViolation,
                std::string("reference ") + reference_kind_name(kind) + " failed validation");
  return ref;
}

const char* reference_kind_name(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::Tetrahedron: return "tetrahedron";
    case ReferenceKind::Octahedron: return "octahedron";
    case ReferenceKind::Icosahedron: return "icosahedron";
    case ReferenceKind::RP2_6: return "rp2_6";
  }
  return "unknown";
}

std::optional<ReferenceKind> reference_kind_from_name(const std::string& name) {
  if (name == "tetrahedron") return ReferenceKind::Tetrahedron;
  if (name == "octahedron") return ReferenceKind::Octahedron;
  if (name == "icosahedron") return ReferenceKind::Icosahedron;
  if (name == "rp2_6") return ReferenceKind::RP2_6;
  return std::nullopt;
}

const char* case_name(SurfaceCase c) {
  switch (c) {
    case SurfaceCase::SphereD3: return "sphere_d3";
    case SurfaceCase::SphereD4: return "sphere_d4";
    case SurfaceCase::SphereD5: return "sphere_d5";
    case SurfaceCase::ProjectivePlaneD5: return "projective_plane_d5";
    case SurfaceCase::FlatD6: return "flat_d6";
    case SurfaceCase::HyperbolicDge7: return "hyperbolic_dge7";
  }
  return "unknown";
}

Classification classify_closed(const SimplicialSurface& surface) {
  if (!surface.closed()) throw Error(ErrorCode::NotClosed, "surface has boundary");
  if (!surface.connected()) throw Error(ErrorCode::Disconnected, "surface is disconnected");
  const int d = surface.regular_degree();
  if (d == -1) throw Error(ErrorCode::NotRegular, "vertex degrees differ");

  Classification out;
  out.degree = d;
  out.chi = surface.f_vector().chi();

  auto match = [&surface](ReferenceKind kind) {
    auto w = equivalent(surface, reference(kind).surface);
    if (!w.equivalent)
      throw Error(ErrorCode::InputContradictsLemma,
                  std::string("closed ") + std::to_string(reference_spec(kind).degree) +
                      "-regular surface not isomorphic to " + reference_kind_name(kind));
    return w.vertex_map;
  };

  if (d == 3) {
    out.surface_case = SurfaceCase::SphereD3;
    out.witness = match(ReferenceKind::Tetrahedron);
  } else if (d == 4) {
    out.surface_case = SurfaceCase::SphereD4;
    out.witness = match(ReferenceKind::Octahedron);
  } else if (d == 5) {
    if (out.chi == 2) {
      out.surface_case = SurfaceCase::SphereD5;
      out.witness = match(ReferenceKind::Icosahedron);
    } else if (out.chi == 1) {
      out.surface_case = SurfaceCase::ProjectivePlaneD5;
      out.witness = match(ReferenceKind::RP2_6);
    } else {
      throw Error(ErrorCode::InputContradictsLemma,
                  "closed 5-regular surface with chi=" + std::to_string(out.chi));
    }
  } else if (d == 6) {
    out.surface_case = SurfaceCase::FlatD6;
  } else {
    out.surface_case = SurfaceCase::HyperbolicDge7;
  }
  return out;
}

}  // namespace regtri
