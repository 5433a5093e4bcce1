#pragma once

#include <cstdint>

#include "garside/axis.hpp"
#include "garside/report.hpp"

namespace garside {

struct DiagnosticsOptions {
  std::size_t samples = 1000;
  std::size_t max_length = 6;
  std::uint64_t seed = 1;
  /// Axis window for nearest-point searches.
  int window = 8;
  /// Paths A(xⁱ,h) are examined for i within this distance of λ(h).
  int path_window = 3;
  /// Sup bound of the positive cone for the inner Lipschitz law.
  int inner_max_sup = 3;
};

/// Exact Lipschitz checks on random 𝒳-edges plus the empirical constants
/// D̂ (geodesic proximity), the closest-point gap and M̂ (preferred-path
/// excursion from the axis). Includes the inner Lipschitz law.
ScanReport projection_diagnostics(const AxisContext& ctx, const DiagnosticsOptions& options);

struct ContractionOptions {
  int radius = 3;
  int window = 8;
  /// Radius of the ball of centers about ∗; 0 picks min(radius + 2, guard).
  int center_radius = 0;
  GuardConfig guard;
};

/// Projects every vertex of every ball B(v,r) with d(v, axis) > r and
/// records the largest projection diameter Ĉ(r) for r = 1..radius.
ScanReport contraction_scan(const AxisContext& ctx, const ContractionOptions& options);

struct ConstrictionOptions {
  std::size_t samples = 100;
  std::size_t max_length = 6;
  std::uint64_t seed = 1;
  int window = 8;
  GuardConfig guard;
};

/// For sampled endpoint pairs, the smallest C satisfying the strong
/// constriction condition over every geodesic between them.
ScanReport constriction_check(const AxisContext& ctx, const ConstrictionOptions& options);

/// x ⋠ z implies x² ⋠ zs, for every positive z with inf 0 and sup ≤ max_sup
/// and every simple s.
ScanReport inner_lipschitz_check(const AxisContext& ctx, int max_sup = 3);

/// All positive elements with inf 0 and sup ≤ max_sup, by normal form.
std::vector<Element> positive_cone(const StructurePtr& structure, int max_sup);

}  // namespace garside
