#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "reuleaux/errors.hpp"
#include "reuleaux/families.hpp"
#include "reuleaux/io.hpp"
#include "reuleaux/meissner.hpp"
#include "reuleaux/mesh.hpp"
#include "reuleaux/metrics.hpp"
#include "reuleaux/oracle.hpp"
#include "reuleaux/structure.hpp"

namespace reuleaux::cli {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

void dump_into(const json& j, std::string& s, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        s += "{}";
        return;
      }
      s += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) s += ",\n";
        first = false;
        s += pad + json(it.key()).dump() + ": ";
        dump_into(it.value(), s, indent + 2);
      }
      s += "\n" + close + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        s += "[]";
        return;
      }
      // Short arrays of scalars stay on one line.
      const bool flat = j.size() <= 4 && std::all_of(j.begin(), j.end(), [](const json& v) {
                          return v.is_primitive();
                        });
      if (flat) {
        s += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) s += ", ";
          dump_into(j[i], s, indent + 2);
        }
        s += "]";
        return;
      }
      s += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) s += ",\n";
        s += pad;
        dump_into(j[i], s, indent + 2);
      }
      s += "\n" + close + "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) throw NumericalError("non-finite number in report");
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      s += buf;
      return;
    }
    default:
      s += j.dump();
  }
}

json one_based(std::size_t i) { return i + 1; }

json pair_json(const std::array<std::size_t, 2>& p) { return json::array({p[0] + 1, p[1] + 1}); }

json input_block(const PointSet& ps, const std::string& source) {
  return {{"m", ps.size()}, {"eps", ps.eps()}, {"source", source}};
}

json extremality_block(const PointSet& ps, const DiameterGraph& g) {
  json pairs = json::array();
  for (const auto& p : g.pairs) pairs.push_back({p.first + 1, p.second + 1, p.distance});
  const std::size_t bound = 2 * ps.size() - 2;
  return {{"pair_count", g.pair_count}, {"bound", bound}, {"extremal", g.pair_count == bound},
          {"pairs", pairs}};
}

json structure_block(const ReuleauxStructure& s) {
  json faces = json::array();
  for (const auto& f : s.faces) {
    json cycle = json::array(), adjacent = json::array();
    for (auto v : f.cycle) cycle.push_back(one_based(v));
    for (auto v : f.adjacent) adjacent.push_back(one_based(v));
    faces.push_back({{"face", one_based(f.face_of)}, {"cycle", cycle}, {"adjacent", adjacent}});
  }
  json edges = json::array();
  for (std::size_t id = 0; id < s.edges.size(); ++id) {
    const auto& e = s.edges[id];
    edges.push_back({{"id", one_based(id)},
                     {"endpoints", pair_json(e.endpoints)},
                     {"supports", pair_json(e.supports)},
                     {"dual", one_based(e.dual)}});
  }
  json duals = json::array();
  for (const auto& [a, b] : s.dual_pairs)
    duals.push_back({pair_json(s.edges[a].endpoints), pair_json(s.edges[b].endpoints)});
  json dangling = json::array();
  for (auto d : s.dangling) dangling.push_back(one_based(d));
  return {{"faces", faces}, {"edges", edges}, {"dual_pairs", duals}, {"dangling", dangling},
          {"euler_characteristic", static_cast<long long>(s.size()) -
                                       static_cast<long long>(s.edges.size()) +
                                       static_cast<long long>(s.faces.size())}};
}

json metrics_block(const BodyMetrics& bm) {
  json faces = json::array();
  for (const auto& f : bm.per_face) faces.push_back({{"face", one_based(f.face_of)}, {"area", f.area}});
  return {{"perimeter", bm.perimeter}, {"volume", bm.volume}, {"faces", faces}};
}

json meissner_block(const SmoothingPlan& plan, double base_perimeter) {
  const auto& s = plan.structure();
  const auto areas = surgery_areas(plan);
  json smoothed = json::array(), edges = json::array();
  double perimeter = base_perimeter;
  for (const auto& e : areas.edges) {
    const auto& rec = s.edges[e.edge];
    smoothed.push_back(pair_json(rec.endpoints));
    edges.push_back({{"endpoints", pair_json(rec.endpoints)},
                     {"supports", pair_json(rec.supports)},
                     {"sliver_area", e.sliver_area},
                     {"spindle_area", e.spindle_area},
                     {"phi", e.phi},
                     {"varphi", e.varphi},
                     {"psi", e.psi}});
    perimeter += e.spindle_area - 2.0 * e.sliver_area;
  }
  return {{"plan", smoothed}, {"edges", edges}, {"perimeter", perimeter},
          {"volume", meissner_volume(perimeter)}};
}

double parse_eps_env() {
  const char* env = std::getenv("REULEAUX_EPS");
  if (env == nullptr || *env == '\0') return 1e-9;
  const std::string_view text(env);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(v >= 0.0))
    throw ParameterError("REULEAUX_EPS is not a non-negative number: '" + std::string(text) + "'");
  return v;
}

struct Options {
  std::string points;
  std::optional<double> eps;
  bool as_json = false;
  // generate
  std::string family;
  int n = 3;
  double t = 0.5;
  std::string format = "text";
  std::string out;
  // meissner / mesh
  std::string plan;
  bool default_plan = false;
  std::string mesh_plan;
  int subdiv = 32;
  // oracle
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

PointSet load(const Options& o) {
  const double eps = o.eps ? *o.eps : parse_eps_env();
  if (!(eps >= 0.0)) throw ParameterError("--eps must be non-negative");
  return PointSet(read_points(o.points), eps);
}

void emit_report(const json& report, bool as_json, std::ostream& out) {
  if (as_json) {
    out << dump(report) << '\n';
    return;
  }
  const auto& in = report.at("input");
  out << "points: " << in.at("m").get<std::size_t>() << " (eps " << in.at("eps").get<double>() << ")\n";
  const auto& ex = report.at("extremality");
  out << "diametric pairs: " << ex.at("pair_count").get<std::size_t>() << " of "
      << ex.at("bound").get<std::size_t>() << " -> "
      << (ex.at("extremal").get<bool>() ? "extremal" : "not extremal") << '\n';
  char buf[64];
  if (report.contains("structure")) {
    const auto& st = report.at("structure");
    out << "faces: " << st.at("faces").size() << ", edges: " << st.at("edges").size()
        << ", dangling: " << st.at("dangling").size() << '\n';
  }
  if (report.contains("metrics")) {
    std::snprintf(buf, sizeof buf, "%.17g", report["metrics"]["perimeter"].get<double>());
    out << "perimeter: " << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.17g", report["metrics"]["volume"].get<double>());
    out << "volume: " << buf << '\n';
  }
  if (report.contains("meissner")) {
    std::snprintf(buf, sizeof buf, "%.17g", report["meissner"]["perimeter"].get<double>());
    out << "meissner perimeter: " << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.17g", report["meissner"]["volume"].get<double>());
    out << "meissner volume: " << buf << '\n';
  }
}

json base_report(const std::string& command, const PointSet& ps, const std::string& source,
                 const DiameterGraph& g) {
  return {{"schema_version", kSchemaVersion}, {"command", command},
          {"input", input_block(ps, source)}, {"extremality", extremality_block(ps, g)}};
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
  FamilySpec spec{parse_family_kind(o.family), o.n, o.t};
  spec.validate();
  const auto pts = family_points(spec);
  const PointSet ps(pts);
  const auto g = build_diameter_graph(ps);
  PointFormat fmt;
  if (o.format == "text") {
    fmt = PointFormat::Text;
  } else if (o.format == "json") {
    fmt = PointFormat::Json;
  } else {
    throw ParameterError("--format must be text or json");
  }
  std::ostringstream summary;
  summary << spec.name() << ": " << pts.size() << " points, " << g.pair_count << " diametric pairs";
  if (o.out.empty()) {
    write_points(out, pts, fmt, fmt == PointFormat::Text ? summary.str() : std::string_view{});
    err << summary.str() << '\n';
  } else {
    std::ofstream file(o.out, std::ios::trunc);
    if (!file) throw IoError("cannot open '" + o.out + "' for writing");
    write_points(file, pts, fmt, fmt == PointFormat::Text ? summary.str() : std::string_view{});
    if (!file.flush()) throw IoError("error writing '" + o.out + "'");
    out << summary.str() << '\n';
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const PointSet ps = load(o);
  const auto g = build_diameter_graph(ps);
  const json report = base_report("check", ps, o.points, g);
  const bool extremal = is_extremal(g, ps.size());
  emit_report(report, o.as_json, out);
  return extremal ? kOk : kNonExtremal;
}

int cmd_analyze(const std::string& command, const Options& o, std::ostream& out) {
  const PointSet ps = load(o);
  const auto g = build_diameter_graph(ps);
  json report = base_report(command, ps, o.points, g);
  if (!is_extremal(g, ps.size())) {
    emit_report(report, o.as_json, out);
    return kNonExtremal;
  }
  const auto s = build_structure(ps);
  const auto bm = body_metrics(s);
  report["structure"] = structure_block(s);
  report["metrics"] = metrics_block(bm);
  if (command == "meissner") {
    if (o.plan.empty() == !o.default_plan)
      throw ParameterError("meissner needs exactly one of --smooth and --default-plan");
    const SmoothingPlan plan = o.default_plan ? default_plan(s) : plan_from_endpoints(s, read_plan(o.plan));
    report["meissner"] = meissner_block(plan, bm.perimeter);
  }
  emit_report(report, o.as_json, out);
  return kOk;
}

int cmd_mesh(const Options& o, std::ostream& out) {
  const PointSet ps = load(o);
  const auto s = build_structure(ps);
  TriangleMesh mesh;
  if (o.mesh_plan.empty()) {
    mesh = tessellate_reuleaux(s, o.subdiv);
  } else {
    const SmoothingPlan plan =
        o.mesh_plan == "default" ? default_plan(s) : plan_from_endpoints(s, read_plan(o.mesh_plan));
    mesh = tessellate_meissner(plan, o.subdiv);
  }
  const std::filesystem::path path(o.out);
  const auto ext = path.extension().string();
  if (ext == ".obj") {
    export_obj(mesh, path);
  } else if (ext == ".ply") {
    export_ply(mesh, path);
  } else {
    throw ParameterError("--out must end in .obj or .ply");
  }
  const bool closed = is_closed(mesh);
  json summary = {{"schema_version", kSchemaVersion},
                  {"out", o.out},
                  {"subdiv", o.subdiv},
                  {"meissner", !o.mesh_plan.empty()},
                  {"vertices", mesh.vertices.size()},
                  {"triangles", mesh.triangles.size()},
                  {"boundary_edges", boundary_edge_count(mesh)},
                  {"closed", closed},
                  {"area", mesh_area(mesh)}};
  if (closed) summary["volume"] = mesh_volume(mesh);
  out << dump(summary) << '\n';
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const PointSet ps = load(o);
  build_diameter_graph(ps);
  const auto r = mc_volume(ps, o.samples, o.seed, o.threads);
  const json report = {{"schema_version", kSchemaVersion}, {"estimate", r.estimate},
                       {"std_error", r.std_error},         {"samples", r.samples},
                       {"seed", r.seed},                   {"hits", r.hits},
                       {"box_volume", r.box_volume}};
  out << dump(report) << '\n';
  return kOk;
}

}  // namespace

std::string dump(const json& j) {
  std::string s;
  dump_into(j, s, 0);
  return s;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reuleaux and Meissner polyhedra from extremal point sets"};
  app.require_subcommand(1);
  Options o;

  auto add_points = [&](CLI::App* sub) {
    sub->add_option("points", o.points, "Point-set file (text or JSON)")->required();
    sub->add_option("--eps", o.eps, "Diametric tolerance (default: REULEAUX_EPS or 1e-9)");
  };

  auto* generate = app.add_subcommand("generate", "Write a family point set");
  generate->add_option("family", o.family, "pyramid | elongated | trapezohedron")->required();
  generate->add_option("--n", o.n, "Family size parameter")->required();
  generate->add_option("--t", o.t, "Lower ring scale (elongated only)");
  generate->add_option("--format", o.format, "text | json");
  generate->add_option("--out", o.out, "Output file (default stdout)");

  auto* check = app.add_subcommand("check", "Diameter graph and extremality");
  add_points(check);
  check->add_flag("--json", o.as_json, "JSON report");

  auto* analyze = app.add_subcommand("analyze", "Structure, perimeter and volume");
  add_points(analyze);
  analyze->add_flag("--json", o.as_json, "JSON report");

  auto* meissner = app.add_subcommand("meissner", "Meissner surgery");
  add_points(meissner);
  meissner->add_flag("--json", o.as_json, "JSON report");
  meissner->add_option("--smooth", o.plan, "Plan file {\"smooth\": [[i, j], ...]}, 1-based");
  meissner->add_flag("--default-plan", o.default_plan, "Smooth the lexicographically smaller edge of each dual pair");

  auto* mesh = app.add_subcommand("mesh", "Triangulate and export OBJ or PLY");
  add_points(mesh);
  mesh->add_option("--out", o.out, "Output .obj or .ply")->required();
  mesh->add_option("--subdiv", o.subdiv, "Samples per edge arc (>= 2)");
  mesh->add_option("--meissner", o.mesh_plan, "Plan file, or 'default'");

  auto* oracle = app.add_subcommand("oracle", "Monte Carlo volume");
  add_points(oracle);
  oracle->add_option("--samples", o.samples, "Sample count");
  oracle->add_option("--seed", o.seed, "RNG seed");
  oracle->add_option("--threads", o.threads, "Worker threads (0: hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (generate->parsed()) return cmd_generate(o, out, err);
    if (check->parsed()) return cmd_check(o, out);
    if (analyze->parsed()) return cmd_analyze("analyze", o, out);
    if (meissner->parsed()) return cmd_analyze("meissner", o, out);
    if (mesh->parsed()) return cmd_mesh(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kParse;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kParse;
  } catch (const DomainError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kParse;
  } catch (const DiameterViolation& e) {
    err << "diameter violation: " << e.what() << '\n';
    return kNonExtremal;
  } catch (const NonExtremalError& e) {
    err << "not extremal: " << e.what() << '\n';
    return kNonExtremal;
  } catch (const InconsistencyError& e) {
    err << "inconsistent diameter graph: " << e.what() << '\n';
    return kNonExtremal;
  } catch (const PlanError& e) {
    err << "plan error: " << e.what() << '\n';
    return kPlan;
  } catch (const Error& e) {
    err << "structural error: " << e.what() << '\n';
    return kStructural;
  }
  return kParse;
}

}  // namespace reuleaux::cli
