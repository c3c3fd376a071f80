#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "regtri/classify.hpp"
#include "regtri/equivalence.hpp"
#include "regtri/generator.hpp"
#include "regtri/geometry.hpp"
#include "regtri/render.hpp"
#include "regtri/tri_io.hpp"

namespace regtri {
namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeTooSmall:
    case ErrorCode::LayerOutOfRange:
      return 2;
    case ErrorCode::ResourceLimit:
    case ErrorCode::PrecisionLoss:
    case ErrorCode::InternalInvariantViolation:
      return 1;
    default:
      return 3;
  }
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidFormat, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, std::ostream& out, const std::string& data) {
  if (path == "-") {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidFormat, "cannot open '" + path + "' for writing");
  file << data;
}

std::int64_t default_max_vertices() {
  if (const char* env = std::getenv("REGTRI_MAX_VERTICES")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 5'000'000;
}

std::string sci(double x) {
  if (std::isinf(x)) return "-";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

std::string fixed6(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

struct CommonArgs {
  std::string format = "text";
};

void print_invariant_report(const InvariantReport& report, const std::string& format,
                            std::ostream& out) {
  if (format == "tsv") {
    out << "property\tlayer\tstatus\tdetail\n";
    for (const auto& c : report.checks)
      out << c.property << "\t" << c.layer << "\t" << (c.pass ? "ok" : "fail") << "\t"
          << c.detail << "\n";
    return;
  }
  std::size_t failures = 0;
  for (const auto& c : report.checks) {
    out << (c.pass ? "ok   " : "FAIL ") << c.property;
    for (std::size_t i = c.property.size(); i < 18; ++i) out << ' ';
    if (c.layer >= 0)
      out << "layer " << c.layer;
    else
      out << "whole disk";
    if (!c.pass) {
      out << "  " << c.detail;
      ++failures;
    }
    out << "\n";
  }
  if (failures == 0)
    out << "all " << report.checks.size() << " checks passed\n";
  else
    out << failures << " of " << report.checks.size() << " checks failed\n";
}

void print_metric_report(const RealizedSurface& r, const MetricReport& rep,
                         const std::string& format, std::ostream& out) {
  const auto fv = r.surface.f_vector();
  auto pair_str = [](std::pair<Vertex, Vertex> p) {
    return p.first < 0 ? std::string("-")
                       : std::to_string(p.first) + "-" + std::to_string(p.second);
  };
  if (format == "tsv") {
    out << "model\t" << model_name(r.model) << "\n";
    out << "vertices\t" << fv.f0 << "\nedges\t" << fv.f1 << "\nfaces\t" << fv.f2 << "\n";
    out << "target_edge_length\t" << fixed6(r.target_edge_length) << "\n";
    out << "max_edge_deviation\t" << sci(rep.max_edge_deviation) << "\n";
    out << "worst_edge\t" << pair_str(rep.worst_edge) << "\n";
    out << "max_angle_deviation\t" << sci(rep.max_angle_deviation) << "\n";
    out << "worst_vertex\t" << rep.worst_vertex << "\n";
    out << "min_separation\t" << sci(rep.min_pairwise_distance) << "\n";
    out << "min_nonadjacent_separation\t" << sci(rep.min_nonadjacent_distance) << "\n";
    out << "placement_deviation\t" << sci(r.max_placement_deviation) << "\n";
    out << "tolerance\t" << sci(rep.tolerance) << "\n";
    out << "result\t" << (rep.pass ? "pass" : "fail") << "\n";
    return;
  }
  out << "model: " << model_name(r.model) << "\n";
  out << "vertices: " << fv.f0 << "  edges: " << fv.f1 << "  faces: " << fv.f2 << "\n";
  out << "target edge length: " << fixed6(r.target_edge_length) << "\n";
  out << "max edge deviation: " << sci(rep.max_edge_deviation) << " (edge "
      << pair_str(rep.worst_edge) << ")\n";
  out << "max angle-sum deviation: " << sci(rep.max_angle_deviation) << " (vertex "
      << rep.worst_vertex << ")\n";
  out << "min vertex separation: " << sci(rep.min_pairwise_distance) << " (pair "
      << pair_str(rep.closest_pair) << ")\n";
  out << "min non-adjacent separation: " << sci(rep.min_nonadjacent_distance) << " (pair "
      << pair_str(rep.closest_nonadjacent) << ")\n";
  out << "placement deviation: " << sci(r.max_placement_deviation) << "\n";
  out << "tolerance: " << sci(rep.tolerance) << "\n";
  out << "result: " << (rep.pass ? "pass" : "fail") << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"degree-regular triangulations: generate, verify, classify, realize"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "build the d-regular disk of radius k as TRI");
  int gen_degree = 0, gen_layers = 0;
  std::string gen_out = "-";
  std::int64_t gen_cap = default_max_vertices();
  gen->add_option("--degree", gen_degree, "vertex degree d (>= 6)")->required();
  gen->add_option("--layers", gen_layers, "radius k (>= 1)")->required();
  gen->add_option("--out", gen_out, "output path, - for stdout");
  gen->add_option("--max-vertices", gen_cap, "vertex cap (env REGTRI_MAX_VERTICES)");

  // count
  auto* cnt = app.add_subcommand("count", "layer vertex counts n_0..n_k as TSV");
  int cnt_degree = 0, cnt_layers = 0;
  bool cnt_closed = false;
  cnt->add_option("--degree", cnt_degree, "vertex degree d (>= 6)")->required();
  cnt->add_option("--layers", cnt_layers, "last layer index k")->required();
  cnt->add_flag("--closed-form", cnt_closed,
                "also evaluate the characteristic-root closed form (d >= 7)");

  // verify
  auto* ver = app.add_subcommand("verify", "audit the layer invariants of a TRI disk");
  std::string ver_file;
  CommonArgs ver_fmt;
  ver->add_option("file", ver_file, "TRI file with layer annotations, - for stdin")
      ->required();
  ver->add_option("--format", ver_fmt.format, "text or tsv")
      ->check(CLI::IsMember({"text", "tsv"}));

  // classify
  auto* cls = app.add_subcommand("classify", "identify a closed degree-regular surface");
  std::string cls_file;
  cls->add_option("file", cls_file, "TRI file, - for stdin")->required();

  // isocheck
  auto* iso = app.add_subcommand("isocheck", "combinatorial equivalence of two TRI files");
  std::string iso_a, iso_b;
  iso->add_option("file1", iso_a, "first TRI file")->required();
  iso->add_option("file2", iso_b, "second TRI file")->required();

  // realize
  auto* rea = app.add_subcommand("realize", "constant-curvature coordinates + metric report");
  std::string rea_file, rea_model, rea_svg, rea_off;
  bool rea_arcs = false;
  double rea_tol = 1e-9;
  CommonArgs rea_fmt;
  rea->add_option("file", rea_file, "TRI file, - for stdin")->required();
  rea->add_option("--model", rea_model, "sphere, flat or hyperbolic")
      ->required()
      ->check(CLI::IsMember({"sphere", "flat", "hyperbolic"}));
  rea->add_option("--svg", rea_svg, "write an SVG rendering here (- for stdout)");
  rea->add_option("--off", rea_off, "write an OFF mesh here (- for stdout)");
  rea->add_flag("--arcs", rea_arcs, "draw hyperbolic edges as geodesic arcs");
  rea->add_option("--tol", rea_tol, "metric tolerance (default 1e-9)");
  rea->add_option("--format", rea_fmt.format, "text or tsv")
      ->check(CLI::IsMember({"text", "tsv"}));

  // reference
  auto* ref = app.add_subcommand("reference", "emit a reference surface as TRI");
  std::string ref_kind, ref_out = "-";
  ref->add_option("kind", ref_kind, "tetrahedron, octahedron, icosahedron or rp2_6")
      ->required()
      ->check(CLI::IsMember({"tetrahedron", "octahedron", "icosahedron", "rp2_6"}));
  ref->add_option("--out", ref_out, "output path, - for stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // collapse CLI11's many parse-error codes onto the documented exit 2
    const int raw = app.exit(e, out, err);
    return raw == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      GenerateOptions opts;
      opts.max_vertices = gen_cap;
      const LayeredDisk disk = generate(gen_degree, gen_layers, opts);
      write_output(gen_out, out, to_tri(disk));
      return 0;
    }

    if (*cnt) {
      const auto ns = layer_counts_recurrence(cnt_degree, cnt_layers);
      std::vector<BigInt> cf;
      if (cnt_closed) cf = layer_counts_closed_form(cnt_degree, cnt_layers);
      for (int k = 0; k <= cnt_layers; ++k) {
        out << cnt_degree << "\t" << k << "\t" << ns[k];
        if (cnt_closed)
          out << "\t" << cf[k] << "\t" << (cf[k] == ns[k] ? "ok" : "MISMATCH");
        out << "\n";
      }
      if (cnt_closed)
        for (int k = 0; k <= cnt_layers; ++k)
          if (cf[k] != ns[k]) return 1;
      return 0;
    }

    if (*ver) {
      const LayeredDisk disk = disk_from_tri(parse_tri(read_input(ver_file, in)));
      const InvariantReport report = verify_layer_invariants(disk);
      print_invariant_report(report, ver_fmt.format, out);
      return report.all_pass() ? 0 : 1;
    }

    if (*cls) {
      const auto surface = surface_from_tri(parse_tri(read_input(cls_file, in)));
      const Classification c = classify_closed(surface);
      out << "case=" << case_name(c.surface_case) << " d=" << c.degree
          << " chi=" << c.chi << "\n";
      return 0;
    }

    if (*iso) {
      const auto a = surface_from_tri(parse_tri(read_input(iso_a, in)));
      const auto b = surface_from_tri(parse_tri(read_input(iso_b, in)));
      const auto w = equivalent(a, b);
      out << (w.equivalent ? "equivalent" : "inequivalent") << "\n";
      return w.equivalent ? 0 : 1;
    }

    if (*rea) {
      const TriDocument doc = parse_tri(read_input(rea_file, in));
      RealizedSurface realized;
      if (rea_model == "sphere") {
        realized = realize_spherical(surface_from_tri(doc));
      } else {
        const LayeredDisk disk = disk_from_tri(doc);
        if (rea_model == "flat" && disk.degree != 6)
          throw Error(ErrorCode::UnsupportedInput,
                      "--model flat needs a 6-regular disk, input has d=" +
                          std::to_string(disk.degree));
        if (rea_model == "hyperbolic" && disk.degree < 7)
          throw Error(ErrorCode::UnsupportedInput,
                      "--model hyperbolic needs d >= 7, input has d=" +
                          std::to_string(disk.degree));
        realized = realize(disk);
      }
      if (rea_svg == "-" && rea_off == "-")
        throw Error(ErrorCode::InvalidFormat, "only one of --svg/--off may be -");
      const MetricReport rep = verify_metric(realized, rea_tol);
      // A render on stdout displaces the report to stderr.
      std::ostream& report_stream = (rea_svg == "-" || rea_off == "-") ? err : out;
      print_metric_report(realized, rep, rea_fmt.format, report_stream);
      if (!rea_svg.empty())
        write_output(rea_svg, out, render_svg(realized, {.geodesic_arcs = rea_arcs}));
      if (!rea_off.empty()) write_output(rea_off, out, to_off(realized));
      return rep.pass ? 0 : 1;
    }

    if (*ref) {
      const auto kind = reference_kind_from_name(ref_kind);
      write_output(ref_out, out, to_tri(reference(*kind).surface));
      return 0;
    }
  } catch (const Error& e) {
    err << "regtri: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "regtri: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace regtri
