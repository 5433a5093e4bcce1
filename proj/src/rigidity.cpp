#include "garside/rigidity.hpp"

#include <map>

#include "garside/error.hpp"

namespace garside {

SuffixRigidity preferred_suffix(const Element& x) {
  const GarsideStructure& g = x.structure();
  if (x.length() == 0) return {g.identity(), true};
  const RightNormalForm rnf = right_normal_form(x);
  const Simple x1 = rnf.factors.back();
  const Simple xr = rnf.factors.front();
  const Simple s = g.meet_suffix(g.tau_power(x1, rnf.sup_power), g.complement_inverse(xr));
  return {s, s == g.identity()};
}

SlideStep cyclic_sliding(const Element& x) {
  const Element p = Element::simple(x.structure_ptr(), preferred_suffix(x).suffix);
  return {p * x * p.inverse(), p.inverse()};
}

SlidingTrajectory slide_to_circuit(const Element& x, std::size_t max_steps) {
  SlidingTrajectory t;
  std::map<Element, std::size_t> seen;
  Element cur = x;
  Element conj(x.structure_ptr());
  for (std::size_t step = 0;; ++step) {
    if (auto it = seen.find(cur); it != seen.end()) {
      t.circuit_start = it->second;
      return t;
    }
    if (step > max_steps)
      throw GuardRefusal("cyclic sliding did not close a circuit", static_cast<long long>(max_steps));
    seen.emplace(cur, t.elements.size());
    t.elements.push_back(cur);
    t.conjugators.push_back(conj);
    SlideStep s = cyclic_sliding(cur);
    conj = conj * s.conjugator;
    cur = std::move(s.result);
  }
}

std::optional<RigidSearchResult> rigid_power_search(const Element& g, long long max_power) {
  if (max_power < 1) throw InvalidInput("max_power must be at least 1");
  const long long e = g.structure().tau_order();
  Element gk(g.structure_ptr());
  for (long long k = 1; k <= max_power; ++k) {
    gk = gk * g;
    const SlidingTrajectory t = slide_to_circuit(gk);
    std::optional<std::size_t> best;
    for (std::size_t i = t.circuit_start; i < t.elements.size(); ++i) {
      const Element& c = t.elements[i];
      if (c.inf() % e != 0 || !is_right_rigid(c)) continue;
      if (!best || c < t.elements[*best]) best = i;
    }
    if (!best) continue;
    const Element& c = t.elements[*best];
    RigidSearchResult r{k, t.conjugators[*best], c.inf() / e,
                        Element::from_normal_form(g.structure_ptr(), 0, c.factors())};
    if (!verify_rigid_result(g, r))
      throw std::logic_error("rigid power search produced an unverifiable result");
    return r;
  }
  return std::nullopt;
}

bool verify_rigid_result(const Element& g, const RigidSearchResult& r) {
  Element gk(g.structure_ptr());
  for (long long i = 0; i < r.power; ++i) gk = gk * g;
  const long long e = g.structure().tau_order();
  const Element lhs = r.conjugator.inverse() * gk * r.conjugator;
  const Element rhs = Element::delta_power(g.structure_ptr(), e * r.central_exponent) * r.rigid_part;
  return lhs == rhs && r.rigid_part.inf() == 0 && is_right_rigid(r.rigid_part);
}

}  // namespace garside
