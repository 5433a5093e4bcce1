#pragma once

#include <cstdint>
#include <random>

#include "garside/element.hpp"

namespace garside {

/// Seeded generator with a platform-independent bounded draw, so that a
/// seed fixes every sampled scan byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool coin() { return (engine_() & 1u) != 0; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Proper simple drawn uniformly.
Simple random_proper(const GarsideStructure& g, Rng& rng);

/// Product of `count` uniformly drawn proper simples; inverted with
/// probability 1/2 each unless `positive`.
Element random_product(const StructurePtr& g, Rng& rng, std::size_t count, bool positive);

/// Positive product of a uniform number (0..max_count) of proper simples.
Element random_positive(const StructurePtr& g, Rng& rng, std::size_t max_count);

}  // namespace garside
