#pragma once

#include <optional>
#include <vector>

#include "garside/element.hpp"

namespace garside {

/// 𝔭↰(x) = τᵖ(x₁) ∧↰ ∂⁻¹(x_r) for x = x_r⋯x₁Δᵖ in right normal form.
/// Elements of canonical length 0 get suffix 1 and count as rigid.
struct SuffixRigidity {
  Simple suffix;
  bool rigid = true;
};

SuffixRigidity preferred_suffix(const Element& x);
inline bool is_right_rigid(const Element& x) { return preferred_suffix(x).rigid; }

/// One right cyclic sliding step: result = 𝔭↰(x)·x·𝔭↰(x)⁻¹ = a⁻¹xa.
struct SlideStep {
  Element result;
  Element conjugator;  // a = 𝔭↰(x)⁻¹
};

SlideStep cyclic_sliding(const Element& x);

/// Iterated sliding from x until an element repeats.
struct SlidingTrajectory {
  std::vector<Element> elements;      // x₀ = x, x₁, …
  std::vector<Element> conjugators;   // Aᵢ with Aᵢ⁻¹xAᵢ = xᵢ
  std::size_t circuit_start = 0;      // elements[circuit_start..] is the circuit
};

SlidingTrajectory slide_to_circuit(const Element& x, std::size_t max_steps = 100000);

struct RigidSearchResult {
  long long power = 0;  // k
  Element conjugator;   // a
  long long central_exponent = 0;  // m
  Element rigid_part;   // x, with a⁻¹gᵏa = Δ^{e·m}x
};

/// Smallest k ≤ max_power such that gᵏ slides into a circuit containing a
/// right-rigid element of the form Δ^{e·m}x with inf(x) = 0; the
/// lexicographically first such circuit element is chosen. nullopt is
/// inconclusive: it does not show that no rigid conjugate of a power exists.
std::optional<RigidSearchResult> rigid_power_search(const Element& g, long long max_power = 12);

/// Re-checks a⁻¹gᵏa = Δ^{e·m}x, inf(x) = 0 and rigidity of x.
bool verify_rigid_result(const Element& g, const RigidSearchResult& r);

}  // namespace garside
