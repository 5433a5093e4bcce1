#include "garside/verify.hpp"

#include <map>
#include <optional>

#include "garside/additional_length.hpp"
#include "garside/axis.hpp"
#include "garside/error.hpp"

namespace garside {

using json = nlohmann::ordered_json;

namespace {

long long projection_distance(const AxisContext& ctx, const Element& a, const Element& b) {
  return dist_x(project(ctx, a).vertex, project(ctx, b).vertex);
}

// Recomputed value of one witness, or nullopt for an unknown kind.
std::optional<long long> recompute(const json& w, const StructurePtr& g,
                                   const std::optional<AxisContext>& ctx,
                                   std::vector<std::string>& problems) {
  const std::string kind = w.at("kind").get<std::string>();
  auto word = [&](const char* key) { return parse_word(g, w.at(key).get<std::string>()); };
  auto need_axis = [&]() -> const AxisContext& {
    if (!ctx) throw InvalidInput("witness of kind " + kind + " needs an axis");
    return *ctx;
  };
  if (kind == "contraction") {
    const AxisContext& c = need_axis();
    const VertexX center(word("center"));
    const long long r = w.at("radius").get<long long>();
    for (const char* key : {"a", "b"})
      if (dist_x(center, VertexX(word(key))) > r)
        problems.push_back(std::string("contraction witness: ") + key + " outside the ball");
    return projection_distance(c, word("a"), word("b"));
  }
  if (kind == "geodesic_proximity") {
    const AxisContext& c = need_axis();
    const Element h = word("h");
    const VertexX p = project(c, h).vertex;
    long long best = -1;
    for (const VertexX& v : preferred_path(c.axis_vertex(w.at("i").get<long long>()), VertexX(h))) {
      const long long d = dist_x(p, v);
      if (best < 0 || d < best) best = d;
    }
    return best;
  }
  if (kind == "morse_probe") {
    const AxisContext& c = need_axis();
    const Element under = VertexX(word("h")).rep();
    const auto k = w.at("k").get<std::size_t>();
    if (k > under.factors().size()) {
      problems.push_back("morse_probe witness: k exceeds the path length");
      return std::nullopt;
    }
    const Element prefix = Element::from_normal_form(
        g, 0, std::vector<Simple>(under.factors().begin(), under.factors().begin() + k));
    if (!(prefix == word("vertex"))) problems.push_back("morse_probe witness: vertex mismatch");
    return axis_distance(c, VertexX(prefix), c.window()).distance;
  }
  if (kind == "constriction") {
    const AxisContext& c = need_axis();
    const long long gap = projection_distance(c, word("a"), word("b"));
    if (gap != w.at("projection_gap").get<long long>())
      problems.push_back("constriction witness: projection gap mismatch");
    return std::min(gap, w.at("worst_geodesic_distance").get<long long>() + 1);
  }
  if (kind == "absorbable_projection") {
    const AxisContext& c = need_axis();
    const Element h1 = word("h1"), h2 = word("h2"), e = word("edge_element");
    if (!(VertexX(h1 * e) == VertexX(h2)))
      problems.push_back("absorbable_projection witness: h2 is not h1 times the edge element");
    if (!absorbs(word("absorber"), e))
      problems.push_back("absorbable_projection witness: absorber does not absorb");
    return projection_distance(c, h1, h2);
  }
  problems.push_back("unknown witness kind " + kind);
  return std::nullopt;
}

}  // namespace

std::vector<std::string> verify_report(const ScanReport& report) {
  std::vector<std::string> problems;
  StructurePtr g;
  std::optional<AxisContext> ctx;
  try {
    g = GarsideStructure::from_descriptor(report.structure);
    if (!report.axis.empty()) ctx.emplace(parse_word(g, report.axis));
  } catch (const std::exception& e) {
    problems.push_back(std::string("cannot rebuild context: ") + e.what());
    return problems;
  }

  std::map<std::string, long long> attained;
  for (const json& w : report.witnesses) {
    try {
      const auto value = recompute(w, g, ctx, problems);
      if (!value) continue;
      if (*value != w.at("value").get<long long>())
        problems.push_back(w.at("kind").get<std::string>() + " witness claims " +
                           w.at("value").dump() + " but recomputes to " + std::to_string(*value));
      if (w.contains("constant")) {
        const std::string name = w.at("constant").get<std::string>();
        attained[name] = std::max(attained.count(name) ? attained[name] : *value, *value);
      }
    } catch (const std::exception& e) {
      problems.push_back(std::string("malformed witness: ") + e.what());
    }
  }
  for (const auto& [name, value] : report.constants.items()) {
    if (value.is_null()) continue;
    auto it = attained.find(name);
    if (it == attained.end())
      problems.push_back("constant " + name + " has no witness");
    else if (it->second != value.get<long long>())
      problems.push_back("constant " + name + " is " + value.dump() + " but its witness attains " +
                         std::to_string(it->second));
  }
  return problems;
}

ScanReport load_report(const json& j) {
  ScanReport r = ScanReport::from_json(j);
  const auto problems = verify_report(r);
  if (!problems.empty()) {
    std::string msg = "report does not verify:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw InvalidInput(msg);
  }
  return r;
}

}  // namespace garside
