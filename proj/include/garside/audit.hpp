#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "garside/structure.hpp"

namespace garside {

struct AuditViolation {
  std::string law;
  std::vector<Simple> witness;
};

struct AuditReport {
  std::string structure;
  std::size_t simple_count = 0;
  int tau_order = 1;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  bool triples_exhaustive = false;
  /// Whether native lattice operations were compared with the exhaustive
  /// order-theoretic fallback.
  bool fallback_compared = false;
  std::vector<AuditViolation> violations;

  bool ok() const { return violations.empty(); }
};

struct AuditOptions {
  static constexpr std::size_t kMaxSimples = 10000;
  /// Triples are exhaustive up to this many simples, sampled beyond.
  std::size_t exhaustive_triple_limit = 24;
  std::size_t sampled_triples = 10000;
  /// Largest structure for which the exhaustive fallback lattice is built.
  std::size_t fallback_limit = 256;
  std::size_t max_recorded = 200;
  std::uint64_t seed = 1;
};

/// Meet/join computed by brute force from the prefix (or suffix) order,
/// which is itself derived from the product table only.
class FallbackLattice {
 public:
  enum class Side { prefix, suffix };
  FallbackLattice(const GarsideStructure& g, Side side);

  bool le(Simple a, Simple b) const { return down_[b.id][a.id]; }
  /// Greatest common lower bound, or nullopt when none exists.
  std::optional<Simple> meet(Simple a, Simple b) const;
  /// Least common upper bound, or nullopt when none exists.
  std::optional<Simple> join(Simple a, Simple b) const;

 private:
  std::size_t n_;
  std::vector<std::vector<char>> down_;
};

/// Exhaustive check of the Garside axioms on the simples of `g`.
/// Throws GuardRefusal above AuditOptions::kMaxSimples simples.
AuditReport audit(const GarsideStructure& g, const AuditOptions& options = {});

}  // namespace garside
