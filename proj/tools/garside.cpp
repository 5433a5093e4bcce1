// Command-line front end. Every command prints one report document.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "garside/additional_length.hpp"
#include "garside/audit.hpp"
#include "garside/error.hpp"
#include "garside/projection.hpp"
#include "garside/rigidity.hpp"

using namespace garside;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInputError = 1, kGuardRefusal = 2, kLawViolation = 3 };

struct Args {
  std::string structure;
  std::string word, word2, center;
  std::optional<int> radius, window;
  long long max_power = 12;
  long long kappa = 1;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  bool table = false;
  std::optional<int> guard_override;
  bool i_know = false;
};

GuardConfig guard_of(const Args& a) {
  GuardConfig g;
  g.override_radius = a.guard_override;
  return g;
}

ScanReport base_report(const char* kind, const StructurePtr& g) {
  ScanReport r;
  r.kind = kind;
  r.structure = g->descriptor();
  return r;
}

json simples_json(const GarsideStructure& g, const std::vector<Simple>& s) {
  json out = json::array();
  for (Simple x : s) out.push_back(g.name(x));
  return out;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); })) {
    std::string line;
    for (const auto& e : j) line += (line.empty() ? "" : ", ") + (e.is_string() ? e.get<std::string>() : e.dump());
    rows.emplace_back(prefix, "[" + line + "]");
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

int emit(const ScanReport& r, const Args& a) {
  const json j = r.to_json();
  if (a.table) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
  return r.ok() ? kOk : kLawViolation;
}

ScanReport run_audit(const Args& a) {
  const StructurePtr g = GarsideStructure::from_descriptor(a.structure);
  AuditOptions opts;
  opts.seed = a.seed;
  if (a.samples) opts.sampled_triples = *a.samples;
  const AuditReport ar = audit(*g, opts);
  ScanReport r = base_report("audit", g);
  r.window = {{"seed", a.seed}, {"sampled_triples", opts.sampled_triples}};
  for (const auto& v : ar.violations) {
    std::vector<std::string> names;
    for (Simple s : v.witness) names.push_back(g->name(s));
    r.violation(v.law, names);
  }
  r.details = {{"simple_count", ar.simple_count},
               {"tau_order", ar.tau_order},
               {"pairs_checked", ar.pairs_checked},
               {"triples_checked", ar.triples_checked},
               {"triples_exhaustive", ar.triples_exhaustive},
               {"fallback_compared", ar.fallback_compared}};
  return r;
}

ScanReport run_nf(const Args& a) {
  const StructurePtr g = GarsideStructure::from_descriptor(a.structure);
  const Element e = parse_word(g, a.word);
  const RightNormalForm rnf = right_normal_form(e);
  json mixed = json::array();
  for (const SignedSimple& s : mixed_word(e))
    mixed.push_back(s.sign > 0 ? g->name(s.simple) : "(" + g->name(s.simple) + ")^-1");
  ScanReport r = base_report("nf", g);
  r.details = {{"input", a.word},
               {"word", to_word(e)},
               {"inf", e.inf()},
               {"sup", e.sup()},
               {"canonical_length", e.length()},
               {"factors", factor_names(e)},
               {"right_normal_form", {{"factors", simples_json(*g, rnf.factors)}, {"sup_power", rnf.sup_power}}},
               {"mixed_word", mixed},
               {"word_length", e.word_length()}};
  return r;
}

ScanReport run_dist(const Args& a) {
  const StructurePtr g = GarsideStructure::from_descriptor(a.structure);
  const Element x = parse_word(g, a.word), y = parse_word(g, a.word2);
  ScanReport r = base_report("dist", g);
  r.details = {{"g", to_word(x)},
               {"h", to_word(y)},
               {"d_x", dist_x(x, y)},
               {"d_gamma", dist_gamma(x, y)},
               {"d_gamma_bar", dist_gamma_bar(x, y)}};
  return r;
}

ScanReport run_path(const Args& a) {
  const StructurePtr g = GarsideStructure::from_descriptor(a.structure);
  const VertexX x(parse_word(g, a.word)), y(parse_word(g, a.word2));
  json verts = json::array();
  for (const VertexX& v : preferred_path(x, y)) verts.push_back(vertex_word(v));
  ScanReport r = base_report("path", g);
  r.details = {{"from", vertex_word(x)}, {"to", vertex_word(y)}, {"length", verts.size() - 1}, {"vertices", verts}};
  return r;
}

ScanReport run_ball(const Args& a) {
  const StructurePtr g = GarsideStructure::from_descriptor(a.structure);
  const VertexX c(parse_word(g, a.center));
  const int radius = a.radius.value_or(2);
  const BallX ball(c, radius, guard_of(a));
  json verts = json::array();
  for (const VertexX& v : ball.vertices()) verts.push_back(vertex_word(v));
  ScanReport r = base_report("ball", g);
  r.window = {{"radius", radius}};
  r.details = {{"center", vertex_word(c)}, {"size", ball.size()}, {"sphere_sizes", ball.sphere_sizes()}, {"vertices", verts}};
  return r;
}

ScanReport run_rigid(const Args& a) {
  const StructurePtr g = GarsideStructure::from_descriptor(a.structure);
  const Element e = parse_word(g, a.word);
  const SuffixRigidity sr = preferred_suffix(e);
  ScanReport r = base_report("rigid", g);
  r.window = {{"max_power", a.max_power}};
  json search = {{"found", false}};
  if (auto res = rigid_power_search(e, a.max_power)) {
    const bool ok = verify_rigid_result(e, *res);
    search = {{"found", true},
              {"power", res->power},
              {"conjugator", to_word(res->conjugator)},
              {"central_exponent", res->central_exponent},
              {"rigid_part", to_word(res->rigid_part)},
              {"verified", ok}};
    if (!ok) r.violation("a⁻¹gᵏa = Δ^{e·m}x", {to_word(e)});
  } else {
    r.notes.push_back("not found within max_power; this is inconclusive");
  }
  r.details = {{"element", to_word(e)}, {"preferred_suffix", g->name(sr.suffix)}, {"rigid", sr.rigid}, {"search", search}};
  return r;
}

AxisContext axis_of(const StructurePtr& g, const Args& a, int default_window = AxisContext::kDefaultWindow) {
  return AxisContext(parse_word(g, a.word), std::max(default_window, a.window.value_or(0)));
}

ScanReport run_project(const Args& a) {
  const StructurePtr g = GarsideStructure::from_descriptor(a.structure);
  const AxisContext ctx = axis_of(g, a);
  const Element h = parse_word(g, a.word2);
  const ProjectionResult p = project(ctx, h);
  const AxisDistance ad = axis_distance(ctx, VertexX(h), a.window.value_or(8));
  ScanReport r = base_report("project", g);
  r.axis = ctx.word();
  r.details = {{"h", to_word(h)},
               {"lambda", p.lambda},
               {"vertex", vertex_word(p.vertex)},
               {"bracket", {p.bracket_lo, p.bracket_hi}},
               {"evaluations", p.evaluations},
               {"axis_distance", ad.distance},
               {"nearest_power", ad.nearest_power}};
  return r;
}

ScanReport run_contraction(const Args& a) {
  const StructurePtr g = GarsideStructure::from_descriptor(a.structure);
  ContractionOptions o;
  o.radius = a.radius.value_or(3);
  o.window = a.window.value_or(8);
  o.guard = guard_of(a);
  return contraction_scan(axis_of(g, a, o.window), o);
}

ScanReport run_constriction(const Args& a) {
  const StructurePtr g = GarsideStructure::from_descriptor(a.structure);
  ConstrictionOptions o;
  o.samples = a.samples.value_or(100);
  o.seed = a.seed;
  o.window = a.window.value_or(8);
  o.guard = guard_of(a);
  return constriction_check(axis_of(g, a, o.window), o);
}

ScanReport run_diagnostics(const Args& a) {
  const StructurePtr g = GarsideStructure::from_descriptor(a.structure);
  DiagnosticsOptions o;
  o.samples = a.samples.value_or(1000);
  o.seed = a.seed;
  o.window = a.window.value_or(8);
  return projection_diagnostics(axis_of(g, a, o.window), o);
}

ScanReport run_absorbable(const Args& a) {
  const StructurePtr g = GarsideStructure::from_descriptor(a.structure);
  const AbsorbabilityCertificate c = absorbability(parse_word(g, a.word));
  ScanReport r = base_report("absorbable", g);
  if (!verify_certificate(c)) r.violation("certificate re-check", {to_word(c.element)});
  r.details = c.to_json();
  return r;
}

ScanReport run_cal_dist(const Args& a) {
  const StructurePtr g = GarsideStructure::from_descriptor(a.structure);
  CalOracle oracle(g);
  const int radius = a.radius.value_or(3);
  const CalDistance d =
      cal_dist_upper(VertexX(parse_word(g, a.word)), VertexX(parse_word(g, a.word2)), radius, oracle, guard_of(a));
  ScanReport r = base_report("cal-dist", g);
  r.window = {{"radius", radius}};
  r.details = d.to_json();
  r.notes.push_back("upper bound from the window subgraph; not claimed exact");
  return r;
}

ScanReport run_wpd(const Args& a) {
  const StructurePtr g = GarsideStructure::from_descriptor(a.structure);
  AbsorbableProjectionOptions p;
  p.edges = a.samples.value_or(200);
  p.seed = a.seed;
  WpdOptions w;
  w.kappa = a.kappa;
  w.n_max = a.window.value_or(6);
  w.cal_radius = a.radius.value_or(4);
  w.guard = guard_of(a);
  return cal_axis_scan(axis_of(g, a), p, w);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside structures, the complex X, axis projections and additional length"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_flag("--table", a.table, "Human-readable table instead of JSON");
  app.add_option("--radius", a.radius, "Ball, window or box radius");
  app.add_option("--window", a.window, "Axis window (power range)");
  app.add_option("--max-power", a.max_power, "Largest power tried by the rigid search");
  app.add_option("--kappa", a.kappa, "CAL distance threshold for the WPD scan");
  app.add_option("--samples", a.samples, "Number of samples");
  app.add_option("--seed", a.seed, "Random seed");
  app.add_option("--guard-override", a.guard_override, "Replace the radius guard (needs --i-know)");
  app.add_flag("--i-know", a.i_know, "Confirm --guard-override");

  using Runner = ScanReport (*)(const Args&);
  std::vector<std::pair<CLI::App*, Runner>> commands;
  auto command = [&](const char* name, const char* help, Runner run) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, run);
    return sub;
  };
  auto structure_arg = [&](CLI::App* s) { s->add_option("structure", a.structure, "Structure descriptor")->required(); };

  auto* audit_cmd = command("audit", "Check the Garside axioms exhaustively", run_audit);
  structure_arg(audit_cmd);
  auto* nf = command("nf", "Normal forms of an element", run_nf);
  structure_arg(nf);
  nf->add_option("word", a.word)->required();
  for (auto [name, help, run] : {std::tuple{"dist", "Distances in X, Gamma and Gamma-bar", run_dist},
                                 std::tuple{"path", "Preferred path between two vertices of X", run_path},
                                 std::tuple{"cal-dist", "Upper bound for the additional-length distance", run_cal_dist}}) {
    auto* s = command(name, help, run);
    structure_arg(s);
    s->add_option("from", a.word, "First element")->required();
    s->add_option("to", a.word2, "Second element")->required();
  }
  auto* ball = command("ball", "Ball in X", run_ball);
  structure_arg(ball);
  ball->add_option("center", a.center)->default_val("");
  auto* rigid = command("rigid", "Rigidity and the rigid power search", run_rigid);
  structure_arg(rigid);
  rigid->add_option("word", a.word)->required();
  auto* project_cmd = command("project", "Projection of h to the axis of x", run_project);
  structure_arg(project_cmd);
  project_cmd->add_option("axis", a.word)->required();
  project_cmd->add_option("element", a.word2, "Element to project")->required();
  for (auto [name, help, run] : {std::tuple{"scan-contraction", "Strong contraction scan", run_contraction},
                                 std::tuple{"scan-constriction", "Strong constriction check", run_constriction},
                                 std::tuple{"diagnostics", "Projection law diagnostics", run_diagnostics},
                                 std::tuple{"wpd", "Absorbable projection and WPD set scan", run_wpd}}) {
    auto* s = command(name, help, run);
    structure_arg(s);
    s->add_option("axis", a.word)->required();
  }
  auto* absorbable = command("absorbable", "Absorbability certificate", run_absorbable);
  structure_arg(absorbable);
  absorbable->add_option("word", a.word)->required();
  command("z3-diam", "Windowed certificate for the CAL(Z^3) diameter", nullptr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  try {
    if (a.guard_override && !a.i_know) throw InvalidInput("--guard-override requires --i-know");
    for (auto& [sub, run] : commands) {
      if (!sub->parsed()) continue;
      if (!run) return emit(z3_diameter_certificate(a.radius.value_or(6)), a);
      return emit(run(a), a);
    }
  } catch (const GuardRefusal& e) {
    std::cerr << "guard refusal: " << e.what() << '\n';
    return kGuardRefusal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
