#include "garside/complex_x.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_set>

#include "garside/error.hpp"
#include "garside/sampling.hpp"

namespace garside {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_radius(const GarsideStructure& g, int radius, const GuardConfig& guard) {
  if (radius < 0) throw InvalidInput("negative radius");
  const int limit = guard.radius_limit(g);
  if (radius > limit)
    throw GuardRefusal("ball radius " + std::to_string(radius) + " in " + g.descriptor() +
                           " exceeds the guard",
                       limit);
}

void check_size(std::size_t size, const GuardConfig& guard) {
  if (size > guard.max_vertices)
    throw GuardRefusal("ball enumeration exceeds the vertex guard",
                       static_cast<long long>(guard.max_vertices));
}

}  // namespace

long long dist_x(const VertexX& u, const VertexX& v) {
  return static_cast<long long>((u.rep().inverse() * v.rep()).length());
}

long long dist_gamma(const Element& g, const Element& h) {
  return (g.inverse() * h).word_length();
}

long long dist_gamma_bar(const Element& g, const Element& h) {
  const Element y = g.inverse() * h;
  const long long e = y.structure().tau_order();
  const long long a = y.inf(), b = y.sup();
  // f(k) = |yΔᵏ| = max(b+k,0) + max(−a−k,0) is convex and flat on [−b,−a].
  auto f = [&](long long k) { return std::max(b + k, 0LL) + std::max(-a - k, 0LL); };
  long long best = f(0);
  for (long long anchor : {-b, -a})
    for (long long k : {e * floor_div(anchor, e), e * (floor_div(anchor, e) + 1)})
      best = std::min(best, f(k));
  return best;
}

Element gamma_bar_rep(const Element& g) {
  const long long e = g.structure().tau_order();
  return g.right_multiply_delta(-e * floor_div(g.inf(), e));
}

std::vector<VertexX> neighbors_x(const VertexX& v) {
  const GarsideStructure& g = v.rep().structure();
  std::vector<VertexX> out;
  std::unordered_set<VertexX, VertexHash> seen;
  for (Simple s : g.proper_simples())
    for (const Element& w : {v.rep().right_multiply(s), v.rep().right_divide(s)}) {
      VertexX u(w);
      if (seen.insert(u).second) out.push_back(u);
    }
  return out;
}

std::vector<Element> neighbors_gamma(const Element& x) {
  const GarsideStructure& g = x.structure();
  std::vector<Element> out;
  for (Simple s : g.simples()) {
    if (s == g.identity()) continue;
    out.push_back(x.right_multiply(s));
    out.push_back(x.right_divide(s));
  }
  return out;
}

std::vector<VertexX> preferred_path(const VertexX& g, const VertexX& h) {
  const VertexX y(g.rep().inverse() * h.rep());
  std::vector<VertexX> path{g};
  Element cur = g.rep();
  for (Simple z : y.rep().factors()) {
    cur = cur.right_multiply(z);
    path.emplace_back(cur);
  }
  return path;
}

int default_ball_guard(const GarsideStructure& g) {
  if (g.size() <= 8) return 6;
  if (g.size() <= 24) return 4;
  return 3;
}

BallX::BallX(const VertexX& center, int radius, const GuardConfig& guard) : radius_(radius) {
  check_radius(center.rep().structure(), radius, guard);
  vertices_.push_back(center);
  dist_.push_back(0);
  index_.emplace(center, 0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (dist_[i] == radius) break;
    for (VertexX& u : neighbors_x(vertices_[i])) {
      if (index_.contains(u)) continue;
      index_.emplace(u, vertices_.size());
      vertices_.push_back(std::move(u));
      dist_.push_back(dist_[i] + 1);
      check_size(vertices_.size(), guard);
    }
  }
}

std::optional<int> BallX::distance(const VertexX& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return dist_[it->second];
}

std::vector<std::size_t> BallX::sphere_sizes() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(radius_) + 1, 0);
  for (int d : dist_) ++out[static_cast<std::size_t>(d)];
  return out;
}

BallGamma::BallGamma(const Element& center, int radius, const GuardConfig& guard) {
  check_radius(center.structure(), radius, guard);
  std::unordered_set<Element, ElementHash> seen{center};
  vertices_.push_back(center);
  dist_.push_back(0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (dist_[i] == radius) break;
    for (Element& w : neighbors_gamma(vertices_[i])) {
      if (!seen.insert(w).second) continue;
      vertices_.push_back(std::move(w));
      dist_.push_back(dist_[i] + 1);
      check_size(vertices_.size(), guard);
    }
  }
}

BallGammaBar::BallGammaBar(const Element& center, int radius, const GuardConfig& guard) {
  check_radius(center.structure(), radius, guard);
  const Element c = gamma_bar_rep(center);
  std::unordered_set<Element, ElementHash> seen{c};
  vertices_.push_back(c);
  dist_.push_back(0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (dist_[i] == radius) break;
    for (const Element& w : neighbors_gamma(vertices_[i])) {
      Element r = gamma_bar_rep(w);
      if (!seen.insert(r).second) continue;
      vertices_.push_back(std::move(r));
      dist_.push_back(dist_[i] + 1);
      check_size(vertices_.size(), guard);
    }
  }
}

long long hausdorff_x(const std::vector<VertexX>& a, const std::vector<VertexX>& b) {
  auto directed = [](const std::vector<VertexX>& from, const std::vector<VertexX>& to) {
    long long worst = 0;
    for (const VertexX& u : from) {
      long long best = -1;
      for (const VertexX& v : to) {
        const long long d = dist_x(u, v);
        if (best < 0 || d < best) best = d;
        if (best == 0) break;
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

namespace {

// Checks ½|i−j| ≤ d(Pᵢ,Pⱼ) ≤ 2|i−j| on every pair of path vertices.
std::optional<std::pair<std::size_t, std::size_t>> quasi_geodesic_failure(
    const std::vector<VertexX>& path) {
  for (std::size_t i = 0; i < path.size(); ++i)
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      const long long d = dist_x(path[i], path[j]);
      const long long gap = static_cast<long long>(j - i);
      if (2 * d < gap || d > 2 * gap) return std::make_pair(i, j);
    }
  return std::nullopt;
}

std::vector<VertexX> concatenate(std::vector<VertexX> first, const std::vector<VertexX>& second) {
  first.insert(first.end(), second.begin() + 1, second.end());
  return first;
}

}  // namespace

ScanReport path_property_checks(const StructurePtr& structure, const PathCheckOptions& options) {
  Rng rng(options.seed);
  const GarsideStructure& g = *structure;
  const VertexX base = VertexX::base(structure);
  ScanReport report;
  report.kind = "path-properties";
  report.structure = g.descriptor();
  report.window = {{"samples", options.samples},
                   {"max_length", options.max_length},
                   {"seed", options.seed}};
  auto random_vertex = [&] { return VertexX(random_positive(structure, rng, options.max_length)); };

  std::size_t convexity = 0, fellow = 0, concat = 0, concat_reversed = 0;
  for (std::size_t it = 0; it < options.samples; ++it) {
    // Convexity of balls about the base vertex.
    {
      const VertexX u = random_vertex(), v = random_vertex();
      const long long bound = std::max(dist_x(base, u), dist_x(base, v));
      for (const VertexX& w : preferred_path(u, v))
        if (dist_x(base, w) > bound) {
          report.violation("ball convexity", {vertex_word(u), vertex_word(v), vertex_word(w)});
          break;
        }
      ++convexity;
    }
    // Fellow traveller: A(g,h) and A(g,h') for adjacent h, h'.
    {
      const VertexX u = random_vertex(), v = random_vertex();
      const Simple s = random_proper(g, rng);
      const VertexX w(rng.coin() ? v.rep().right_multiply(s) : v.rep().right_divide(s));
      const long long h = hausdorff_x(preferred_path(u, v), preferred_path(u, w));
      if (dist_x(v, w) != 1 || h > 1)
        report.violation("fellow traveller", {vertex_word(u), vertex_word(v), vertex_word(w)},
                         "Hausdorff distance " + std::to_string(h));
      ++fellow;
    }
    // Ordered concatenation g̲ ⪯ h̲ ⪯ k̲.
    {
      const VertexX u = random_vertex();
      Element a(structure), b(structure);
      for (int attempt = 0; attempt < 1000; ++attempt) {
        a = random_positive(structure, rng, options.max_length);
        if ((u.rep() * a).inf() == 0) break;
      }
      const Element hrep = u.rep() * a;
      const bool equal_lengths = rng.coin() && !a.factors().empty();
      for (int attempt = 0; attempt < 1000; ++attempt) {
        if (equal_lengths) {
          // A simple prefix of ∂(last factor of a) keeps sup(ab) = sup(a).
          b = Element::simple(structure, g.meet_prefix(random_proper(g, rng),
                                                       g.complement(a.factors().back())));
        } else {
          b = random_positive(structure, rng, options.max_length);
        }
        if ((hrep * b).inf() == 0) break;
      }
      const Element krep = hrep * b;
      if (hrep.inf() != 0 || krep.inf() != 0) continue;
      const VertexX v(hrep), w(krep);
      if (auto bad = quasi_geodesic_failure(concatenate(preferred_path(u, v), preferred_path(v, w))))
        report.violation("(2,0)-quasi-geodesic concatenation",
                         {vertex_word(u), vertex_word(v), vertex_word(w)},
                         "indices " + std::to_string(bad->first) + "," + std::to_string(bad->second));
      ++concat;
      if (dist_x(u, v) == dist_x(u, w)) {
        if (auto bad =
                quasi_geodesic_failure(concatenate(preferred_path(v, w), preferred_path(w, u))))
          report.violation("(2,0)-quasi-geodesic reversed concatenation",
                           {vertex_word(u), vertex_word(v), vertex_word(w)},
                           "indices " + std::to_string(bad->first) + "," +
                               std::to_string(bad->second));
        ++concat_reversed;
      }
    }
  }
  report.details = {{"convexity_instances", convexity},
                    {"fellow_traveller_instances", fellow},
                    {"concatenation_instances", concat},
                    {"reversed_concatenation_instances", concat_reversed}};
  return report;
}

}  // namespace garside
