#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "garside/element.hpp"
#include "garside/structure.hpp"
#include "oracles/free_group.hpp"
#include "oracles/perm_oracle.hpp"

namespace garside {
inline void PrintTo(const Element& g, std::ostream* os) { *os << "[" << to_word(g) << "]"; }
}  // namespace garside

namespace testing_support {

using namespace garside;

inline StructurePtr structure(const std::string& descriptor) {
  return GarsideStructure::from_descriptor(descriptor);
}

/// Simple given as a product of 1-based atom numbers.
inline Simple simple_of(const GarsideStructure& g, std::initializer_list<int> atoms) {
  Simple s = g.identity();
  for (int a : atoms) {
    auto p = g.product(s, g.atoms()[a - 1]);
    if (!p) throw std::logic_error("not a simple");
    s = *p;
  }
  return s;
}

/// Signed classical braid word for g, read off its left normal form
/// through the test-side bubble sort of each permutation payload.
inline std::vector<int> classical_word(const Element& g) {
  const GarsideStructure& s = g.structure();
  const std::vector<int> delta = oracle::braid_word(s.payload(s.delta()));
  std::vector<int> w;
  for (long long k = 0; k < g.inf(); ++k) w.insert(w.end(), delta.begin(), delta.end());
  for (long long k = 0; k > g.inf(); --k)
    for (auto it = delta.rbegin(); it != delta.rend(); ++it) w.push_back(-*it);
  for (Simple f : g.factors()) {
    auto fw = oracle::braid_word(s.payload(f));
    w.insert(w.end(), fw.begin(), fw.end());
  }
  return w;
}

inline int strands(const Element& g) {
  return static_cast<int>(g.structure().payload(g.structure().identity()).size());
}

inline oracle::ArtinAction action_of(const Element& g) {
  return oracle::act(strands(g), classical_word(g));
}

/// Random product of `len` signed simples (uniform over proper simples and Δ).
inline std::vector<SignedSimple> random_word(const GarsideStructure& g, std::mt19937_64& rng,
                                             std::size_t len, bool positive = false) {
  std::vector<SignedSimple> w;
  for (std::size_t i = 0; i < len; ++i) {
    Simple s{static_cast<std::uint32_t>(1 + rng() % (g.size() - 1))};
    int sign = positive || rng() % 2 == 0 ? 1 : -1;
    w.push_back({s, sign});
  }
  return w;
}

inline Element random_element(const StructurePtr& g, std::mt19937_64& rng, std::size_t len,
                              bool positive = false) {
  auto w = random_word(*g, rng, len, positive);
  return normalize(g, w);
}

}  // namespace testing_support
