#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "garside/element.hpp"
#include "garside/report.hpp"

namespace garside {

/// A vertex g⟨Δ⟩ of 𝒳, stored as its distinguished representative gΔ^{−inf g}.
class VertexX {
 public:
  explicit VertexX(const Element& g) : rep_(g.right_multiply_delta(-g.inf())) {}
  static VertexX base(StructurePtr structure) { return VertexX(Element(std::move(structure))); }

  const Element& rep() const { return rep_; }
  bool is_base() const { return rep_.is_identity(); }

  friend bool operator==(const VertexX& a, const VertexX& b) { return a.rep_ == b.rep_; }
  friend bool operator<(const VertexX& a, const VertexX& b) { return a.rep_ < b.rep_; }

 private:
  Element rep_;
};

struct VertexHash {
  std::size_t operator()(const VertexX& v) const noexcept { return ElementHash{}(v.rep()); }
};

/// d_𝒳: canonical length of g̲⁻¹h̲.
long long dist_x(const VertexX& u, const VertexX& v);
inline long long dist_x(const Element& g, const Element& h) {
  return dist_x(VertexX(g), VertexX(h));
}
/// Word metric of Γ (generators: the simples and their inverses).
long long dist_gamma(const Element& g, const Element& h);
/// Metric of Γ̄ = Γ/⟨Δᵉ⟩: min over t of |g⁻¹hΔ^{et}|.
long long dist_gamma_bar(const Element& g, const Element& h);
/// Representative of g⟨Δᵉ⟩ with inf in [0, e).
Element gamma_bar_rep(const Element& g);

/// Neighbours of v in 𝒳: the cosets v̲s⟨Δ⟩ and v̲s⁻¹⟨Δ⟩ for proper s, deduplicated.
std::vector<VertexX> neighbors_x(const VertexX& v);
/// Neighbours of g in Γ: g·s^{±1} for every simple s ≠ 1.
std::vector<Element> neighbors_gamma(const Element& g);

/// A(g,h): the vertices g̲z₁⋯zᵢ⟨Δ⟩ for z the normal form of (g̲⁻¹h̲) underlined.
std::vector<VertexX> preferred_path(const VertexX& g, const VertexX& h);

/// Radius guard for ball enumeration, chosen by the number of simples.
int default_ball_guard(const GarsideStructure& g);

struct GuardConfig {
  /// Replaces the default radius guard when set.
  std::optional<int> override_radius;
  /// Vertex-count guard for derived enumerations (geodesic intervals etc.).
  std::size_t max_vertices = 200000;
  int radius_limit(const GarsideStructure& g) const {
    return override_radius ? *override_radius : default_ball_guard(g);
  }
};

/// Exact metric ball in 𝒳 in BFS order, with distances from the center.
class BallX {
 public:
  BallX(const VertexX& center, int radius, const GuardConfig& guard = {});

  const VertexX& center() const { return vertices_.front(); }
  int radius() const { return radius_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<VertexX>& vertices() const { return vertices_; }
  const std::vector<int>& distances() const { return dist_; }
  std::optional<int> distance(const VertexX& v) const;
  /// Number of vertices at each distance 0..radius.
  std::vector<std::size_t> sphere_sizes() const;

 private:
  int radius_;
  std::vector<VertexX> vertices_;
  std::vector<int> dist_;
  std::unordered_map<VertexX, std::size_t, VertexHash> index_;
};

/// Exact metric ball in Γ in BFS order.
class BallGamma {
 public:
  BallGamma(const Element& center, int radius, const GuardConfig& guard = {});
  const std::vector<Element>& vertices() const { return vertices_; }
  const std::vector<int>& distances() const { return dist_; }

 private:
  std::vector<Element> vertices_;
  std::vector<int> dist_;
};

/// Γ̄ ball by BFS over canonical coset representatives.
class BallGammaBar {
 public:
  BallGammaBar(const Element& center, int radius, const GuardConfig& guard = {});
  const std::vector<Element>& vertices() const { return vertices_; }
  const std::vector<int>& distances() const { return dist_; }

 private:
  std::vector<Element> vertices_;
  std::vector<int> dist_;
};

/// Hausdorff distance in 𝒳 between two finite vertex sets.
long long hausdorff_x(const std::vector<VertexX>& a, const std::vector<VertexX>& b);

struct PathCheckOptions {
  std::size_t samples = 1000;
  std::size_t max_length = 6;
  std::uint64_t seed = 1;
};

/// Seeded random checks of ball convexity, the fellow-traveller property
/// and the (2,0)-quasi-geodesic property of ordered concatenations.
ScanReport path_property_checks(const StructurePtr& structure, const PathCheckOptions& options);

/// Vertex name in the word grammar (the empty word is the base vertex).
inline std::string vertex_word(const VertexX& v) { return to_word(v.rep()); }

}  // namespace garside
