#pragma once

#include <string>
#include <vector>

#include "garside/complex_x.hpp"

namespace garside {

/// A validated axis element: Δ-pure structure, inf(x) = 0, ℓ(x) ≥ 1,
/// right-rigid, with xᵏ cached for |k| ≤ window. Construction verifies
/// inf(xᵏ) = 0 and that the right normal form of xᵏ is k copies of that
/// of x for 1 ≤ k ≤ window, and throws InvalidInput otherwise.
class AxisContext {
 public:
  static constexpr int kDefaultWindow = 10;
  explicit AxisContext(const Element& x, int window = kDefaultWindow);

  const StructurePtr& structure_ptr() const { return x_.structure_ptr(); }
  const Element& x() const { return x_; }
  long long ell() const { return ell_; }
  int window() const { return window_; }
  std::string word() const { return to_word(x_); }

  /// xᵏ (cached inside the window).
  Element power(long long k) const;
  VertexX axis_vertex(long long k) const { return VertexX(power(k)); }

 private:
  Element x_;
  long long ell_;
  int window_;
  std::vector<Element> powers_;  // x^{-window} … x^{window}
};

struct ProjectionResult {
  long long lambda = 0;
  VertexX vertex;
  /// Final bracket: the predicate x ⪯ underline(xᵐh) is false at lo and true at hi = lo+1.
  long long bracket_lo = 0;
  long long bracket_hi = 0;
  int evaluations = 0;
};

/// λ(h) and π(h) = x^{λ(h)}⟨Δ⟩, found by exponential bracketing from 0 and
/// bisection on the monotone predicate m ↦ x ⪯ underline(xᵐh).
ProjectionResult project(const AxisContext& ctx, const Element& h);
inline long long lambda(const AxisContext& ctx, const Element& h) { return project(ctx, h).lambda; }

/// d_𝒳(v, axis), searching x^k for k within `window` of λ(v) and widening
/// the search until the triangle inequality rules out every farther power.
struct AxisDistance {
  long long distance = 0;
  /// A closest power; λ(v) itself whenever it attains the minimum.
  long long nearest_power = 0;
};

AxisDistance axis_distance(const AxisContext& ctx, const VertexX& v, int window);

}  // namespace garside
