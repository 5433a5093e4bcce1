#include "garside/additional_length.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>

#include "garside/error.hpp"
#include "garside/sampling.hpp"

namespace garside {

using json = nlohmann::ordered_json;

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t r = a + b;
  return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
}

struct AbsorberSearch {
  const Element& h;
  long long r;
  std::uint64_t nodes = 0;
  std::optional<Element> found;

  // Extends the suffix `factors` (a left normal form) on the left. Both
  // inf(s·h) and sup(s·h) can only grow as s gains prefixes, so a suffix with
  // inf(s·h) > 0 or sup(s·h) > r has no completion.
  void run(std::vector<Simple>& factors) {
    const GarsideStructure& g = h.structure();
    if (static_cast<long long>(factors.size()) == r) {
      found = Element::from_normal_form(h.structure_ptr(), 0, factors);
      return;
    }
    for (Simple a : g.proper_simples()) {
      if (!factors.empty() && !g.left_weighted(a, factors.front())) continue;
      factors.insert(factors.begin(), a);
      ++nodes;
      const Element sh = Element::from_normal_form(h.structure_ptr(), 0, factors) * h;
      if (sh.inf() == 0 && sh.sup() <= r) run(factors);
      factors.erase(factors.begin());
      if (found) return;
    }
  }
};

json quadruple(const Element& g, const Element& h) {
  const Element gh = g * h;
  return {{"inf_g", g.inf()}, {"sup_g", g.sup()}, {"inf_gh", gh.inf()}, {"sup_gh", gh.sup()}};
}

}  // namespace

std::uint64_t normal_form_count(const GarsideStructure& g, long long length) {
  if (length <= 0) return 1;
  const auto proper = g.proper_simples();
  std::vector<std::uint64_t> count(proper.size(), 1);
  for (long long k = 1; k < length; ++k) {
    std::vector<std::uint64_t> next(proper.size(), 0);
    for (std::size_t b = 0; b < proper.size(); ++b)
      for (std::size_t a = 0; a < proper.size(); ++a)
        if (g.left_weighted(proper[a], proper[b])) next[b] = saturating_add(next[b], count[a]);
    count = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : count) total = saturating_add(total, c);
  return total;
}

bool absorbs(const Element& g, const Element& h) {
  const Element gh = g * h;
  return g.inf() == gh.inf() && g.sup() == gh.sup();
}

AbsorbabilityCertificate absorbability(const Element& h, const AbsorbOptions& options) {
  AbsorbabilityCertificate cert{h, false, std::nullopt, false, std::nullopt, 0, 0, {}};
  if (h.inf() != 0 && h.sup() != 0) {
    cert.reason = "neither inf nor sup is 0";
    return cert;
  }
  cert.tested_inverse = h.inf() != 0;
  const Element t = cert.tested_inverse ? h.inverse() : h;
  const long long r = t.length();
  cert.search_space = normal_form_count(t.structure(), r);
  if (cert.search_space > options.max_search)
    throw GuardRefusal("absorber search space for " + to_word(h) + " exceeds the guard",
                       static_cast<long long>(options.max_search));
  AbsorberSearch search{t, r, 0, std::nullopt};
  std::vector<Simple> factors;
  search.run(factors);
  cert.nodes_visited = search.nodes;
  if (!search.found) {
    cert.reason = "no absorber with inf 0 and sup " + std::to_string(r);
    return cert;
  }
  cert.absorbable = true;
  cert.tested_absorber = *search.found;
  cert.absorber = cert.tested_inverse ? *search.found * h.inverse() : *search.found;
  return cert;
}

bool verify_certificate(const AbsorbabilityCertificate& c) {
  const Element& h = c.element;
  const bool clause_one = h.inf() == 0 || h.sup() == 0;
  if (!c.absorbable) return !c.absorber && !c.tested_absorber && (clause_one || c.search_space == 0);
  if (!clause_one || !c.absorber || !c.tested_absorber) return false;
  if (c.tested_inverse != (h.inf() != 0)) return false;
  const Element t = c.tested_inverse ? h.inverse() : h;
  const Element& g = *c.tested_absorber;
  if (g.inf() != 0 || g.sup() != static_cast<long long>(t.length()) || !absorbs(g, t)) return false;
  return absorbs(*c.absorber, h);
}

json AbsorbabilityCertificate::to_json() const {
  json j = {{"element", to_word(element)},
            {"inf", element.inf()},
            {"sup", element.sup()},
            {"absorbable", absorbable},
            {"tested_inverse", tested_inverse}};
  if (absorbable) {
    const Element t = tested_inverse ? element.inverse() : element;
    j["tested_element"] = to_word(t);
    j["tested_absorber"] = to_word(*tested_absorber);
    j["tested_check"] = quadruple(*tested_absorber, t);
    j["absorber"] = to_word(*absorber);
    j["check"] = quadruple(*absorber, element);
  } else {
    j["absorber"] = nullptr;
    j["reason"] = reason;
  }
  j["search_space"] = search_space;
  j["nodes_visited"] = nodes_visited;
  return j;
}

CalOracle::CalOracle(StructurePtr structure, AbsorbOptions options)
    : structure_(std::move(structure)), options_(options) {}

const AbsorbabilityCertificate* CalOracle::certificate(const Element& h) {
  auto it = cache_.find(h);
  if (it == cache_.end()) {
    std::optional<AbsorbabilityCertificate> c;
    try {
      c = absorbability(h, options_);
    } catch (const GuardRefusal&) {
      ++refused_;
    }
    it = cache_.emplace(h, std::move(c)).first;
  }
  return it->second ? &*it->second : nullptr;
}

std::optional<AbsorbabilityCertificate> CalOracle::absorbable_edge(const VertexX& u,
                                                                   const VertexX& v) {
  const Element d = u.rep().inverse() * v.rep();
  const Element low = VertexX(d).rep();
  if (low.is_identity()) return std::nullopt;
  if (const auto* c = certificate(low); c && c->absorbable) return *c;
  if (const auto* c = certificate(d.right_multiply_delta(-d.sup())); c && c->absorbable) return *c;
  return std::nullopt;
}

namespace {

struct CalBfs {
  BallX ball;
  std::vector<long long> dist;
  std::vector<std::size_t> parent;
  std::vector<std::optional<AbsorbabilityCertificate>> via;
  std::size_t refused = 0;
};

CalBfs cal_bfs(const VertexX& center, int radius, CalOracle& oracle, const GuardConfig& guard) {
  CalBfs r{BallX(center, radius, guard), {}, {}, {}, 0};
  const auto& verts = r.ball.vertices();
  const std::size_t n = verts.size();
  std::unordered_map<VertexX, std::size_t, VertexHash> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(verts[i], i);
  r.dist.assign(n, -1);
  r.parent.assign(n, 0);
  r.via.assign(n, std::nullopt);
  const std::size_t refused_before = oracle.refused();
  std::deque<std::size_t> queue{0};
  r.dist[0] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const VertexX& w : neighbors_x(verts[u])) {
      auto it = index.find(w);
      if (it == index.end() || r.dist[it->second] >= 0) continue;
      r.dist[it->second] = r.dist[u] + 1;
      r.parent[it->second] = u;
      queue.push_back(it->second);
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (r.dist[w] >= 0) continue;
      if (auto c = oracle.absorbable_edge(verts[u], verts[w])) {
        r.dist[w] = r.dist[u] + 1;
        r.parent[w] = u;
        r.via[w] = std::move(c);
        queue.push_back(w);
      }
    }
  }
  r.refused = oracle.refused() - refused_before;
  return r;
}

}  // namespace

CalDistance cal_dist_upper(const VertexX& g, const VertexX& h, int radius, CalOracle& oracle,
                           const GuardConfig& guard) {
  CalBfs bfs = cal_bfs(g, radius, oracle, guard);
  const auto& verts = bfs.ball.vertices();
  auto pos = std::find(verts.begin(), verts.end(), h);
  if (pos == verts.end())
    throw InvalidInput("vertex " + vertex_word(h) + " lies outside the radius-" +
                       std::to_string(radius) + " window");
  CalDistance out;
  out.window_vertices = verts.size();
  out.refused_edges = bfs.refused;
  std::size_t i = static_cast<std::size_t>(pos - verts.begin());
  if (bfs.dist[i] < 0) return out;
  out.upper_bound = bfs.dist[i];
  for (;;) {
    if (i == 0) {
      out.path.push_back({verts[0], "start", std::nullopt});
      break;
    }
    out.path.push_back({verts[i], bfs.via[i] ? "absorbable" : "x", bfs.via[i]});
    i = bfs.parent[i];
  }
  std::reverse(out.path.begin(), out.path.end());
  return out;
}

json CalDistance::to_json() const {
  json steps = json::array();
  for (const CalPathStep& s : path) {
    json j = {{"vertex", vertex_word(s.vertex)}, {"edge", s.edge}};
    if (s.certificate) j["certificate"] = s.certificate->to_json();
    steps.push_back(std::move(j));
  }
  return {{"upper_bound", upper_bound >= 0 ? json(upper_bound) : json(nullptr)},
          {"path", steps},
          {"window_vertices", window_vertices},
          {"refused_edges", refused_edges}};
}

CalWindow::CalWindow(const VertexX& center, int radius, CalOracle& oracle,
                     const GuardConfig& guard)
    : ball_(center, radius, guard) {
  CalBfs bfs = cal_bfs(center, radius, oracle, guard);
  for (std::size_t i = 0; i < bfs.dist.size(); ++i)
    if (bfs.dist[i] >= 0) dist_.emplace(bfs.ball.vertices()[i], bfs.dist[i]);
  refused_ = bfs.refused;
}

std::optional<long long> CalWindow::distance(const VertexX& v) const {
  auto it = dist_.find(v);
  if (it == dist_.end()) return std::nullopt;
  return it->second;
}

ScanReport z3_diameter_certificate(int radius) {
  if (radius < 0) throw InvalidInput("box radius must be non-negative");
  const StructurePtr z3 = GarsideStructure::from_descriptor("zn:n=3");
  ScanReport report;
  report.kind = "z3-diam";
  report.structure = z3->descriptor();
  report.window = {{"box_radius", radius}};
  CalOracle oracle(z3);

  auto jump = [&](int coord, long long k) {
    return power(Element::simple(z3, z3->atoms()[static_cast<std::size_t>(coord)]), k);
  };
  // Certified path from ∗ through the nonzero coordinates of v, or nullopt.
  auto certify = [&](const std::array<long long, 3>& v) -> std::optional<int> {
    int jumps = 0;
    for (int i = 0; i < 3; ++i) {
      if (v[static_cast<std::size_t>(i)] == 0) continue;
      const auto* c = oracle.certificate(jump(i, v[static_cast<std::size_t>(i)]));
      if (!c || !c->absorbable || !verify_certificate(*c)) return std::nullopt;
      ++jumps;
    }
    return jumps;
  };

  const VertexX base = VertexX::base(z3);
  std::size_t total = 0, certified = 0, reduced_certified = 0, without_two_path = 0;
  std::size_t at_distance_two = 0;
  int upper = 0, reduced_upper = 0;
  json lower_witness;
  for (long long a = -radius; a <= radius; ++a)
    for (long long b = -radius; b <= radius; ++b)
      for (long long c = -radius; c <= radius; ++c) {
        ++total;
        const std::array<long long, 3> v{a, b, c};
        const auto direct = certify(v);
        if (direct) {
          ++certified;
          upper = std::max(upper, *direct);
        } else {
          report.violation("coordinate decomposition certified",
                           {to_word(jump(0, a) * jump(1, b) * jump(2, c))});
        }
        const long long m = std::min({a, b, c});
        const auto reduced = certify({a - m, b - m, c - m});
        if (reduced) {
          ++reduced_certified;
          reduced_upper = std::max(reduced_upper, *reduced);
        }
        if (!reduced || *reduced > 2) ++without_two_path;
        if (reduced && *reduced == 2) {
          const VertexX vx(jump(0, a) * jump(1, b) * jump(2, c));
          if (dist_x(base, vx) > 1 && !oracle.absorbable_edge(base, vx)) {
            ++at_distance_two;
            if (lower_witness.is_null()) {
              const Element d = vx.rep();
              lower_witness = {
                  {"vertex", vertex_word(vx)},
                  {"inf_zero_representative", oracle.certificate(d)->to_json()},
                  {"sup_zero_representative",
                   oracle.certificate(d.right_multiply_delta(-d.sup()))->to_json()},
                  {"distance", 2}};
            }
          }
        }
      }

  report.details = {{"box_vertices", total},
                    {"upper_bound", certified == total ? json(upper) : json(nullptr)},
                    {"certified", certified},
                    {"delta_reduced_upper_bound",
                     reduced_certified == total ? json(reduced_upper) : json(nullptr)},
                    {"delta_reduced_certified", reduced_certified},
                    {"lower_bound", lower_witness.is_null() ? json(nullptr) : json(2)},
                    {"lower_bound_witness", lower_witness},
                    {"vertices_at_distance_two", at_distance_two},
                    {"vertices_without_two_path", without_two_path}};
  report.notes.push_back(
      "upper_bound counts the certified absorbable jumps along the coordinate axes from the base "
      "vertex; it bounds the eccentricity of the base vertex, hence the diameter, by "
      "vertex-transitivity.");
  report.notes.push_back(
      "delta_reduced_upper_bound first subtracts the smallest coordinate (a power of Δ), which "
      "leaves at most two nonzero coordinates; every box vertex then has a certified path of "
      "length at most 2, and lower_bound_witness is at distance exactly 2, so the diameter "
      "observed in this box is 2.");
  return report;
}

ScanReport absorbable_projection_scan(const AxisContext& ctx,
                                      const AbsorbableProjectionOptions& options) {
  ScanReport report;
  report.kind = "absorbable-projection";
  report.structure = ctx.x().structure().descriptor();
  report.axis = ctx.word();
  report.window = {{"edges", options.edges},
                   {"max_length", options.max_length},
                   {"max_sup", options.max_sup},
                   {"seed", options.seed}};
  Rng rng(options.seed);
  CalOracle oracle(ctx.structure_ptr());
  std::size_t edges = 0, attempts = 0, rejected = 0;
  const std::size_t max_attempts = 50 * options.edges + 100;
  long long f_hat = -1;
  json witness;
  std::unordered_map<Element, long long, ElementHash> lambdas;
  auto lam = [&](const Element& h) {
    auto it = lambdas.find(h);
    if (it != lambdas.end()) return it->second;
    return lambdas.emplace(h, lambda(ctx, h)).first->second;
  };
  while (edges < options.edges && attempts < max_attempts) {
    ++attempts;
    const Element h1 = VertexX(random_product(ctx.structure_ptr(), rng,
                                              rng.below(options.max_length + 1), false))
                           .rep();
    Element w = VertexX(random_positive(ctx.structure_ptr(), rng, options.max_sup)).rep();
    if (rng.coin()) w = w.right_multiply_delta(-w.sup());
    if (w.is_identity()) continue;
    const auto* cert = oracle.certificate(w);
    if (!cert || !cert->absorbable || !verify_certificate(*cert)) {
      ++rejected;
      continue;
    }
    ++edges;
    const Element h2 = VertexX(h1 * w).rep();
    const long long d = dist_x(ctx.axis_vertex(lam(h1)), ctx.axis_vertex(lam(h2)));
    if (d > f_hat) {
      f_hat = d;
      witness = {{"constant", "F_hat"}, {"kind", "absorbable_projection"},
                 {"h1", to_word(h1)},    {"h2", to_word(h2)},
                 {"edge_element", to_word(w)}, {"absorber", to_word(*cert->absorber)},
                 {"value", d}};
    }
  }
  if (edges > 0) {
    report.constants["F_hat"] = f_hat;
    report.witnesses.push_back(witness);
  }
  report.details = {{"certified_edges", edges},
                    {"attempts", attempts},
                    {"non_absorbable_draws", rejected}};
  if (edges < options.edges)
    report.notes.push_back("fewer certified absorbable edges than requested");
  report.notes.push_back(
      "F_hat is the largest projection jump across the sampled absorbable edges; it is evidence "
      "for a uniform bound, not the bound itself.");
  return report;
}

ScanReport wpd_scan(const AxisContext& ctx, const WpdOptions& options) {
  if (options.n_min > options.n_max || options.kappa < 0)
    throw InvalidInput("wpd scan needs n_min <= n_max and kappa >= 0");
  ScanReport report;
  report.kind = "wpd";
  report.structure = ctx.x().structure().descriptor();
  report.axis = ctx.word();
  report.window = {{"kappa", options.kappa},
                   {"n_min", options.n_min},
                   {"n_max", options.n_max},
                   {"element_radius", options.element_radius},
                   {"cal_radius", options.cal_radius}};
  const StructurePtr& g = ctx.structure_ptr();
  CalOracle oracle(g);
  const VertexX base = VertexX::base(g);
  const CalWindow window(base, options.cal_radius, oracle, options.guard);
  const BallX elements(base, options.element_radius, options.guard);

  auto within = [&](const Element& e) {
    const auto d = window.distance(VertexX(e));
    return d && *d <= options.kappa;
  };
  std::vector<Element> near;
  std::size_t candidates = 0;
  for (const VertexX& v : elements.vertices())
    for (int t = 0; t < g->tau_order(); ++t) {
      ++candidates;
      const Element h = v.rep().right_multiply_delta(t);
      if (within(h)) near.push_back(h);
    }

  json counts = json::array();
  json sets = json::array();
  std::vector<std::size_t> sizes;
  for (long long n = options.n_min; n <= options.n_max; ++n) {
    const Element xn = ctx.power(n);
    json members = json::array();
    std::size_t count = 0;
    for (const Element& h : near)
      if (within(xn.inverse() * h * xn)) {
        ++count;
        members.push_back(to_word(h));
      }
    sizes.push_back(count);
    counts.push_back({{"n", n}, {"count", count}});
    sets.push_back(std::move(members));
  }
  const bool plateau = sizes.size() >= 2 && sizes[sizes.size() - 1] == sizes[sizes.size() - 2];
  report.details = {{"candidates", candidates},
                    {"near_base", near.size()},
                    {"counts", counts},
                    {"plateau", plateau},
                    {"plateau_value", plateau ? json(sizes.back()) : json(nullptr)},
                    {"members", sets},
                    {"cal_window_vertices", window.size()},
                    {"refused_edges", window.refused_edges()}};
  if (!plateau) report.notes.push_back("no plateau within window");
  report.notes.push_back(
      "Caveat: distances are upper bounds computed in the window subgraph and vertices outside "
      "the window count as farther than kappa, so the counted sets may differ from the true "
      "coarse stabilizers; elements are taken modulo the center generated by a power of Δ.");
  return report;
}

ScanReport cal_axis_scan(const AxisContext& ctx, const AbsorbableProjectionOptions& projection,
                         const WpdOptions& wpd) {
  ScanReport report = wpd_scan(ctx, wpd);
  const ScanReport f = absorbable_projection_scan(ctx, projection);
  for (const auto& [key, value] : f.window.items()) report.window[key] = value;
  report.constants["F_hat"] = f.constants["F_hat"];
  report.witnesses = f.witnesses;
  report.details["absorbable_projection"] = f.details;
  report.notes.insert(report.notes.end(), f.notes.begin(), f.notes.end());
  return report;
}

}  // namespace garside
