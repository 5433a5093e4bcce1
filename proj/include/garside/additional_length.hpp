#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "garside/axis.hpp"
#include "garside/report.hpp"

namespace garside {

struct AbsorbOptions {
  /// Refuse when the number of left normal forms with inf 0 and sup ℓ(h)
  /// exceeds this.
  std::uint64_t max_search = 2000000;
};

/// Verdict on whether h is absorbable, with the absorber when it is.
///
/// If sup(h) = 0 the search runs on h⁻¹ (`tested_inverse`); `tested_absorber`
/// absorbs the tested element and `absorber` = tested_absorber·h⁻¹ absorbs h.
struct AbsorbabilityCertificate {
  Element element;
  bool absorbable = false;
  std::optional<Element> absorber;
  bool tested_inverse = false;
  std::optional<Element> tested_absorber;
  std::uint64_t search_space = 0;
  std::uint64_t nodes_visited = 0;
  std::string reason;

  nlohmann::ordered_json to_json() const;
};

/// Exhaustive search for g with inf(g) = 0, sup(g) = ℓ(h), inf(gh) = 0 and
/// sup(gh) = ℓ(h). Throws GuardRefusal when the search space is too large.
AbsorbabilityCertificate absorbability(const Element& h, const AbsorbOptions& options = {});

/// inf(g) = inf(gh) and sup(g) = sup(gh).
bool absorbs(const Element& g, const Element& h);

/// Re-checks a certificate by multiplication; negative verdicts are only
/// checked for consistency with clause (i).
bool verify_certificate(const AbsorbabilityCertificate& c);

/// Number of left normal forms of `length` proper simples.
std::uint64_t normal_form_count(const GarsideStructure& g, long long length);

/// Memoized CAL edge oracle.
class CalOracle {
 public:
  explicit CalOracle(StructurePtr structure, AbsorbOptions options = {});

  /// Certificate for the edge u-v: an absorbable element among the inf-0
  /// and sup-0 representatives of u̲⁻¹v̲, or nullopt. Edges whose search is
  /// refused by the guard are counted and treated as absent.
  std::optional<AbsorbabilityCertificate> absorbable_edge(const VertexX& u, const VertexX& v);
  const AbsorbabilityCertificate* certificate(const Element& h);

  std::size_t refused() const { return refused_; }

 private:
  StructurePtr structure_;
  AbsorbOptions options_;
  std::unordered_map<Element, std::optional<AbsorbabilityCertificate>, ElementHash> cache_;
  std::size_t refused_ = 0;
};

struct CalPathStep {
  VertexX vertex;
  /// "start", "x" for an edge of 𝒳, "absorbable" for an added edge.
  std::string edge;
  std::optional<AbsorbabilityCertificate> certificate;
};

/// Upper bound for d_AL(g, h) from BFS inside the 𝒳-ball of radius R about g.
struct CalDistance {
  long long upper_bound = -1;  // -1 when h is unreachable inside the window
  std::vector<CalPathStep> path;
  std::size_t window_vertices = 0;
  std::size_t refused_edges = 0;

  nlohmann::ordered_json to_json() const;
};

CalDistance cal_dist_upper(const VertexX& g, const VertexX& h, int radius, CalOracle& oracle,
                           const GuardConfig& guard = {});

/// BFS distances from the center inside an 𝒳-ball, with added edges.
class CalWindow {
 public:
  CalWindow(const VertexX& center, int radius, CalOracle& oracle, const GuardConfig& guard = {});
  std::optional<long long> distance(const VertexX& v) const;
  std::size_t size() const { return ball_.size(); }
  std::size_t refused_edges() const { return refused_; }

 private:
  BallX ball_;
  std::unordered_map<VertexX, long long, VertexHash> dist_;
  std::size_t refused_ = 0;
};

/// Windowed certificate for the CAL(ℤ³) diameter over the box [-R,R]³.
ScanReport z3_diameter_certificate(int radius);

struct AbsorbableProjectionOptions {
  std::size_t edges = 200;
  std::size_t max_length = 6;
  std::size_t max_sup = 3;
  std::uint64_t seed = 1;
};

/// F̂ = max d_𝒳(π(h₁), π(h₂)) over sampled certified absorbable edges.
ScanReport absorbable_projection_scan(const AxisContext& ctx,
                                      const AbsorbableProjectionOptions& options);

struct WpdOptions {
  long long kappa = 1;
  long long n_min = 1;
  long long n_max = 6;
  /// Elements h range over distinguished representatives of this 𝒳-ball,
  /// times Δᵗ for 0 ≤ t < e.
  int element_radius = 2;
  /// CAL distances are computed inside this 𝒳-ball about ∗.
  int cal_radius = 4;
  GuardConfig guard;
};

/// |{h : d_AL(∗, h∗) ≤ κ and d_AL(xⁿ, hxⁿ) ≤ κ}| for n in [n_min, n_max],
/// with distances taken in the window subgraph.
ScanReport wpd_scan(const AxisContext& ctx, const WpdOptions& options);

/// wpd_scan with the absorbable-projection constant F̂ and its witness.
ScanReport cal_axis_scan(const AxisContext& ctx, const AbsorbableProjectionOptions& projection,
                         const WpdOptions& wpd);

}  // namespace garside
