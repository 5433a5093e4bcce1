#include "garside/sampling.hpp"

namespace garside {

Simple random_proper(const GarsideStructure& g, Rng& rng) {
  return g.proper_simples()[rng.below(g.proper_simples().size())];
}

Element random_product(const StructurePtr& g, Rng& rng, std::size_t count, bool positive) {
  Element x(g);
  for (std::size_t i = 0; i < count; ++i) {
    const Simple s = random_proper(*g, rng);
    x = positive || rng.coin() ? x.right_multiply(s) : x.right_divide(s);
  }
  return x;
}

Element random_positive(const StructurePtr& g, Rng& rng, std::size_t max_count) {
  return random_product(g, rng, rng.below(max_count + 1), true);
}

}  // namespace garside
