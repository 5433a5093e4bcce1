#include "garside/axis.hpp"

#include <cstdlib>

#include "garside/error.hpp"
#include "garside/rigidity.hpp"

namespace garside {

AxisContext::AxisContext(const Element& x, int window)
    : x_(x), ell_(static_cast<long long>(x.length())), window_(window) {
  const GarsideStructure& g = x.structure();
  if (!g.delta_pure())
    throw InvalidInput("axis projection needs a Δ-pure structure; " + g.descriptor() +
                       " is not one");
  if (window < 1) throw InvalidInput("axis window must be at least 1");
  if (x.inf() != 0) throw InvalidInput("axis element must have inf 0");
  if (x.length() == 0) throw InvalidInput("axis element must have positive canonical length");
  if (!is_right_rigid(x)) throw InvalidInput("axis element " + to_word(x) + " is not right-rigid");

  const RightNormalForm base = right_normal_form(x);
  std::vector<Element> positive{Element(x.structure_ptr())};
  for (int k = 1; k <= window; ++k) {
    positive.push_back(positive.back() * x);
    const Element& xk = positive.back();
    const RightNormalForm rnf = right_normal_form(xk);
    std::vector<Simple> expected;
    for (int i = 0; i < k; ++i)
      expected.insert(expected.end(), base.factors.begin(), base.factors.end());
    if (xk.inf() != 0 || rnf.sup_power != 0 || rnf.factors != expected)
      throw InvalidInput("powers of " + to_word(x) + " do not concatenate at k=" +
                         std::to_string(k));
  }
  powers_.reserve(2 * static_cast<std::size_t>(window) + 1);
  for (int k = -window; k <= window; ++k)
    powers_.push_back(k >= 0 ? positive[static_cast<std::size_t>(k)]
                             : positive[static_cast<std::size_t>(-k)].inverse());
}

Element AxisContext::power(long long k) const {
  if (std::llabs(k) <= window_) return powers_[static_cast<std::size_t>(k + window_)];
  return garside::power(x_, k);
}

ProjectionResult project(const AxisContext& ctx, const Element& h) {
  constexpr int kMaxDoublings = 60;
  int evaluations = 0;
  auto pred = [&](long long m) {
    ++evaluations;
    return prefix_le(ctx.x(), VertexX(ctx.power(m) * h).rep());
  };
  long long lo, hi;
  if (pred(0)) {
    hi = 0;
    long long step = 1;
    for (int i = 0;; ++i, step *= 2) {
      if (i == kMaxDoublings) throw GuardRefusal("λ bracketing did not terminate", kMaxDoublings);
      lo = hi - step;
      if (!pred(lo)) break;
      hi = lo;
    }
  } else {
    lo = 0;
    long long step = 1;
    for (int i = 0;; ++i, step *= 2) {
      if (i == kMaxDoublings) throw GuardRefusal("λ bracketing did not terminate", kMaxDoublings);
      hi = lo + step;
      if (pred(hi)) break;
      lo = hi;
    }
  }
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    (pred(mid) ? hi : lo) = mid;
  }
  return {-lo, ctx.axis_vertex(-lo), lo, hi, evaluations};
}

AxisDistance axis_distance(const AxisContext& ctx, const VertexX& v, int window) {
  const long long c = lambda(ctx, v.rep());
  AxisDistance best{dist_x(v, ctx.axis_vertex(c)), c};
  const long long to_center = best.distance;
  auto visit = [&](long long k) {
    const long long d = dist_x(v, ctx.axis_vertex(k));
    if (d < best.distance) {
      best.distance = d;
      best.nearest_power = k;
    }
  };
  for (long long k = c - window; k <= c + window; ++k) visit(k);
  // Outside radius w about c, d(v, xᵏ) ≥ (w+1)·ℓ − d(v, x^c); widen until that
  // exceeds the best distance found.
  for (long long w = window; (w + 1) * ctx.ell() - to_center < best.distance;) {
    ++w;
    visit(c - w);
    visit(c + w);
  }
  return best;
}

}  // namespace garside
