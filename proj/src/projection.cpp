#include "garside/projection.hpp"

#include <algorithm>
#include <unordered_map>

#include "garside/error.hpp"
#include "garside/sampling.hpp"

namespace garside {

using json = nlohmann::ordered_json;

namespace {

class LambdaCache {
 public:
  explicit LambdaCache(const AxisContext& ctx) : ctx_(ctx) {}
  long long operator()(const VertexX& v) {
    auto it = cache_.find(v);
    if (it != cache_.end()) return it->second;
    const long long l = lambda(ctx_, v.rep());
    cache_.emplace(v, l);
    return l;
  }

 private:
  const AxisContext& ctx_;
  std::unordered_map<VertexX, long long, VertexHash> cache_;
};

ScanReport make_report(const char* kind, const AxisContext& ctx) {
  ScanReport r;
  r.kind = kind;
  r.structure = ctx.x().structure().descriptor();
  r.axis = ctx.word();
  return r;
}

// Nearest vertex of a path to p, first one on ties.
std::pair<long long, VertexX> nearest_on(const std::vector<VertexX>& path, const VertexX& p) {
  long long best = -1;
  const VertexX* arg = &path.front();
  for (const VertexX& v : path) {
    const long long d = dist_x(p, v);
    if (best < 0 || d < best) {
      best = d;
      arg = &v;
    }
  }
  return {best, *arg};
}

Element sample_element(const AxisContext& ctx, Rng& rng, std::size_t max_length) {
  Element w = random_product(ctx.structure_ptr(), rng, rng.below(max_length + 1), false);
  if (rng.coin()) return ctx.power(static_cast<long long>(rng.below(7)) - 3) * w;
  return w;
}

}  // namespace

ScanReport projection_diagnostics(const AxisContext& ctx, const DiagnosticsOptions& options) {
  ScanReport report = make_report("diagnostics", ctx);
  report.window = {{"samples", options.samples},
                   {"max_length", options.max_length},
                   {"seed", options.seed},
                   {"window", options.window},
                   {"path_window", options.path_window},
                   {"inner_max_sup", options.inner_max_sup}};
  const GarsideStructure& g = ctx.x().structure();
  Rng rng(options.seed);

  // Exact axis laws.
  for (long long k = -ctx.window(); k <= ctx.window(); ++k) {
    const ProjectionResult p = project(ctx, ctx.power(k));
    if (p.lambda != k) report.violation("λ(xᵏ) = k", {to_word(ctx.power(k))});
    if (!(p.vertex == ctx.axis_vertex(k))) report.violation("π identity on axis", {to_word(ctx.power(k))});
  }

  std::size_t edges = 0, delta_checks = 0;
  long long max_jump = 0;
  long long d_hat = -1, gap_max = -1, m_hat = -1;
  json d_witness, gap_witness, m_witness;
  long long matthieu_endpoint_max = 0;
  std::size_t matthieu_samples = 0;

  for (std::size_t it = 0; it < options.samples; ++it) {
    const Element h = sample_element(ctx, rng, options.max_length);
    const VertexX hv(h);
    const ProjectionResult ph = project(ctx, h);

    // Δ-invariance.
    const long long t = static_cast<long long>(rng.below(9)) - 4;
    if (lambda(ctx, h.right_multiply_delta(t)) != ph.lambda)
      report.violation("λ(hΔᵗ) = λ(h)", {to_word(h), std::to_string(t)});
    ++delta_checks;

    // Lipschitz across an 𝒳-edge.
    const Simple s = random_proper(g, rng);
    const Element h2 = rng.coin() ? hv.rep().right_multiply(s) : hv.rep().right_divide(s);
    const ProjectionResult ph2 = project(ctx, h2);
    const long long jump = std::llabs(ph.lambda - ph2.lambda);
    max_jump = std::max(max_jump, jump);
    if (jump > 1) report.violation("|λ jump| ≤ 1", {to_word(h), to_word(h2)});
    if (dist_x(ph.vertex, ph2.vertex) > ctx.ell())
      report.violation("d(π g, π h) ≤ ℓ(x)", {to_word(h), to_word(h2)});
    ++edges;

    // Geodesic proximity and the closest-point gap.
    const AxisDistance ad = axis_distance(ctx, hv, options.window);
    std::vector<long long> powers;
    for (long long i = ph.lambda - options.path_window; i <= ph.lambda + options.path_window; ++i)
      powers.push_back(i);
    if (std::find(powers.begin(), powers.end(), ad.nearest_power) == powers.end())
      powers.push_back(ad.nearest_power);
    long long delta_closest = 0;
    for (long long i : powers) {
      const auto [d, at] = nearest_on(preferred_path(ctx.axis_vertex(i), hv), ph.vertex);
      if (i == ad.nearest_power) delta_closest = d;
      if (d > d_hat) {
        d_hat = d;
        d_witness = {{"constant", "D_hat"}, {"kind", "geodesic_proximity"}, {"h", to_word(h)},
                     {"i", i}, {"vertex", vertex_word(at)}, {"value", d}};
      }
    }
    const long long gap = dist_x(ph.vertex, ctx.axis_vertex(ad.nearest_power));
    if (gap > gap_max) {
      gap_max = gap;
      gap_witness = {{"kind", "closest_point_gap"}, {"h", to_word(h)},
                     {"nearest_power", ad.nearest_power}, {"lambda", ph.lambda},
                     {"value", gap}};
    }
    if (gap > 2 * delta_closest)
      report.violation("d(π h, xᵏ) ≤ 2·d(π h, A(xᵏ,h)) for the closest k", {to_word(h)});

    // Excursion of A(1,h) along x^i ⪯ h̲.
    const Element hm = ctx.power(1 + static_cast<long long>(rng.below(3))) *
                       random_positive(ctx.structure_ptr(), rng, options.max_length);
    const Element under = VertexX(hm).rep();
    long long imax = 0;
    while (imax < ctx.window() && prefix_le(ctx.power(imax + 1), under)) ++imax;
    if (imax >= 1) {
      ++matthieu_samples;
      const auto& f = under.factors();
      Element prefix(ctx.structure_ptr());
      for (long long k = 0; k <= imax * ctx.ell(); ++k) {
        if (k > 0) prefix = prefix.right_multiply(f[static_cast<std::size_t>(k - 1)]);
        const AxisDistance pd = axis_distance(ctx, VertexX(prefix), options.window);
        if (pd.distance > m_hat) {
          m_hat = pd.distance;
          m_witness = {{"constant", "M_hat"}, {"kind", "morse_probe"}, {"h", to_word(hm)},
                       {"k", k}, {"vertex", to_word(prefix)}, {"value", pd.distance}};
        }
        if (k == imax * ctx.ell())
          matthieu_endpoint_max =
              std::max(matthieu_endpoint_max, dist_x(VertexX(prefix), ctx.axis_vertex(imax)));
      }
    }
  }

  const ScanReport inner = inner_lipschitz_check(ctx, options.inner_max_sup);
  for (const auto& v : inner.violations) report.violations.push_back(v);

  if (gap_max > 2 * d_hat)
    report.violation("closest-point gap ≤ 2·D̂", {gap_witness.value("h", "")},
                     "gap " + std::to_string(gap_max) + ", D_hat " + std::to_string(d_hat));
  report.constants["D_hat"] = d_hat;
  report.constants["M_hat"] = m_hat;
  report.witnesses.push_back(d_witness);
  if (m_hat >= 0) report.witnesses.push_back(m_witness);
  report.details = {{"lipschitz_edges", edges},
                    {"max_lambda_jump", max_jump},
                    {"delta_invariance_checks", delta_checks},
                    {"closest_point_gap", gap_max},
                    {"closest_point_gap_bound", 2 * d_hat},
                    {"closest_point_witness", gap_witness},
                    {"matthieu_samples", matthieu_samples},
                    {"matthieu_endpoint_max", matthieu_endpoint_max},
                    {"inner_lipschitz", inner.details}};
  report.notes.push_back(
      "D_hat and M_hat are maxima over the sampled window, not the constants D and M_x, which "
      "quantify over all (2,0)-quasi-geodesics and are not computed.");
  return report;
}

ScanReport contraction_scan(const AxisContext& ctx, const ContractionOptions& options) {
  ScanReport report = make_report("contraction", ctx);
  const GarsideStructure& g = ctx.x().structure();
  const int limit = options.guard.radius_limit(g);
  if (options.radius < 1) throw InvalidInput("contraction radius must be at least 1");
  const int center_radius =
      options.center_radius > 0 ? options.center_radius : std::min(options.radius + 2, limit);
  report.window = {{"radius", options.radius},
                   {"window", options.window},
                   {"center_radius", center_radius}};

  for (long long k = -options.window; k <= options.window; ++k)
    if (lambda(ctx, ctx.power(k)) != k)
      report.violation("π identity on axis", {to_word(ctx.power(k))});

  LambdaCache lam(ctx);
  const BallX centers(VertexX::base(ctx.structure_ptr()), center_radius, options.guard);
  std::vector<long long> c_hat(static_cast<std::size_t>(options.radius) + 1, -1);
  std::vector<std::size_t> tested(static_cast<std::size_t>(options.radius) + 1, 0);
  std::vector<json> per_radius(static_cast<std::size_t>(options.radius) + 1);
  long long gap_max = -1;
  json gap_witness;

  for (const VertexX& v : centers.vertices()) {
    const AxisDistance ad = axis_distance(ctx, v, options.window);
    const long long lv = lam(v);
    const long long gap = dist_x(v, ctx.axis_vertex(lv)) - ad.distance;
    if (gap > gap_max) {
      gap_max = gap;
      gap_witness = {{"center", vertex_word(v)}, {"lambda", lv},
                     {"nearest_power", ad.nearest_power}, {"value", gap}};
    }
    const long long rmax = std::min<long long>(options.radius, ad.distance - 1);
    for (int r = 1; r <= rmax; ++r) {
      const BallX ball(v, r, options.guard);
      long long lo = lam(ball.vertices().front()), hi = lo;
      const VertexX* arg_lo = &ball.vertices().front();
      const VertexX* arg_hi = arg_lo;
      for (const VertexX& u : ball.vertices()) {
        const long long l = lam(u);
        if (l < lo) {
          lo = l;
          arg_lo = &u;
        }
        if (l > hi) {
          hi = l;
          arg_hi = &u;
        }
      }
      const long long diam = (hi - lo) * ctx.ell();
      ++tested[static_cast<std::size_t>(r)];
      if (diam > c_hat[static_cast<std::size_t>(r)]) {
        c_hat[static_cast<std::size_t>(r)] = diam;
        per_radius[static_cast<std::size_t>(r)] = {
            {"constant", "C_hat"},       {"kind", "contraction"},   {"center", vertex_word(v)},
            {"radius", r},               {"a", vertex_word(*arg_lo)}, {"b", vertex_word(*arg_hi)},
            {"axis_distance", ad.distance}, {"value", diam}};
      }
    }
  }

  json sequence = json::array();
  long long overall = -1;
  for (int r = 1; r <= options.radius; ++r) {
    const auto idx = static_cast<std::size_t>(r);
    sequence.push_back(c_hat[idx] >= 0 ? json(c_hat[idx]) : json(nullptr));
    if (c_hat[idx] >= 0) overall = std::max(overall, c_hat[idx]);
  }
  for (int r = 1; r <= options.radius; ++r)
    if (c_hat[static_cast<std::size_t>(r)] >= 0 && c_hat[static_cast<std::size_t>(r)] == overall) {
      report.witnesses.push_back(per_radius[static_cast<std::size_t>(r)]);
      break;
    }
  const auto last = static_cast<std::size_t>(options.radius);
  const bool plateau = options.radius >= 2 && c_hat[last] >= 0 && c_hat[last] == c_hat[last - 1];
  if (overall >= 0) report.constants["C_hat"] = overall;
  json centers_per_radius = json::array();
  for (int r = 1; r <= options.radius; ++r) centers_per_radius.push_back(tested[static_cast<std::size_t>(r)]);
  report.details = {{"C_hat_sequence", sequence},
                    {"centers_per_radius", centers_per_radius},
                    {"plateau", plateau},
                    {"center_count", centers.size()},
                    {"projection_gap_max", gap_max},
                    {"projection_gap_witness", gap_witness},
                    {"per_radius_witnesses", per_radius}};
  report.details["per_radius_witnesses"].erase(0);
  if (!plateau) report.notes.push_back("no plateau within window");
  report.notes.push_back(
      "C_hat is the largest projection diameter of balls disjoint from the searched axis window "
      "and centered within center_radius of the base vertex; it is evidence, not a bound.");
  return report;
}

namespace {

// Bottleneck over every geodesic from a to b: the largest possible value of
// min over the geodesic of d(p, ·).
long long worst_geodesic_distance(const VertexX& a, const VertexX& b, const VertexX& p,
                                  const GuardConfig& guard, std::size_t& interval_size) {
  const long long total = dist_x(a, b);
  std::vector<VertexX> layer{a};
  std::vector<long long> best{dist_x(p, a)};
  interval_size = 1;
  for (long long i = 1; i <= total; ++i) {
    std::vector<VertexX> next;
    std::vector<long long> next_best;
    std::unordered_map<VertexX, std::size_t, VertexHash> index;
    for (std::size_t j = 0; j < layer.size(); ++j)
      for (VertexX& u : neighbors_x(layer[j])) {
        if (dist_x(u, b) != total - i) continue;
        auto it = index.find(u);
        if (it == index.end()) {
          const long long du = dist_x(p, u);
          index.emplace(u, next.size());
          next_best.push_back(std::min(best[j], du));
          next.push_back(std::move(u));
        } else {
          next_best[it->second] =
              std::max(next_best[it->second], std::min(best[j], dist_x(p, next[it->second])));
        }
      }
    interval_size += next.size();
    if (interval_size > guard.max_vertices)
      throw GuardRefusal("geodesic interval exceeds the vertex guard",
                         static_cast<long long>(guard.max_vertices));
    layer = std::move(next);
    best = std::move(next_best);
  }
  return best.front();
}

}  // namespace

ScanReport constriction_check(const AxisContext& ctx, const ConstrictionOptions& options) {
  ScanReport report = make_report("constriction", ctx);
  report.window = {{"samples", options.samples},
                   {"max_length", options.max_length},
                   {"seed", options.seed},
                   {"window", options.window}};
  Rng rng(options.seed);
  long long c_hat = 0;
  json witness;
  std::size_t max_interval = 0, gap_branch = 0;
  for (std::size_t it = 0; it < options.samples; ++it) {
    const VertexX a(sample_element(ctx, rng, options.max_length));
    const VertexX b(sample_element(ctx, rng, options.max_length));
    const ProjectionResult pa = project(ctx, a.rep()), pb = project(ctx, b.rep());
    const long long gap = dist_x(pa.vertex, pb.vertex);
    std::size_t size_a = 0, size_b = 0;
    const long long qa = worst_geodesic_distance(a, b, pa.vertex, options.guard, size_a);
    const long long qb = worst_geodesic_distance(a, b, pb.vertex, options.guard, size_b);
    max_interval = std::max({max_interval, size_a, size_b});
    const long long q = std::max(qa, qb);
    const long long needed = std::min(gap, q + 1);
    if (gap <= q + 1) ++gap_branch;
    if (needed > c_hat || witness.is_null()) {
      c_hat = std::max(c_hat, needed);
      witness = {{"constant", "C_hat"}, {"kind", "constriction"}, {"a", vertex_word(a)},
                 {"b", vertex_word(b)}, {"projection_gap", gap},
                 {"worst_geodesic_distance", q}, {"value", needed}};
    }
  }
  report.constants["C_hat"] = c_hat;
  report.witnesses.push_back(witness);
  report.details = {{"pairs", options.samples},
                    {"pairs_settled_by_projection_gap", gap_branch},
                    {"largest_geodesic_interval", max_interval}};
  report.notes.push_back(
      "Every geodesic between each sampled pair is examined through the exact geodesic interval; "
      "C_hat is the least C for which all sampled pairs satisfy the constriction condition.");
  return report;
}

std::vector<Element> positive_cone(const StructurePtr& structure, int max_sup) {
  const GarsideStructure& g = *structure;
  std::vector<std::vector<Simple>> level{{}};
  std::vector<Element> out{Element(structure)};
  for (int len = 1; len <= max_sup; ++len) {
    std::vector<std::vector<Simple>> next;
    for (const auto& seq : level)
      for (Simple s : g.proper_simples()) {
        if (!seq.empty() && !g.left_weighted(seq.back(), s)) continue;
        auto ext = seq;
        ext.push_back(s);
        out.push_back(Element::from_normal_form(structure, 0, ext));
        next.push_back(std::move(ext));
      }
    level = std::move(next);
  }
  return out;
}

ScanReport inner_lipschitz_check(const AxisContext& ctx, int max_sup) {
  ScanReport report = make_report("inner-lipschitz", ctx);
  report.window = {{"max_sup", max_sup}};
  const GarsideStructure& g = ctx.x().structure();
  const Element x2 = ctx.power(2);
  std::size_t checked = 0, cone = 0;
  for (const Element& z : positive_cone(ctx.structure_ptr(), max_sup)) {
    ++cone;
    if (prefix_le(ctx.x(), z)) continue;
    for (Simple s : g.simples()) {
      ++checked;
      if (prefix_le(x2, z.right_multiply(s)))
        report.violation("x ⋠ z implies x² ⋠ zs", {to_word(z), g.name(s)});
    }
  }
  report.details = {{"cone_size", cone}, {"pairs_checked", checked}};
  return report;
}

}  // namespace garside
