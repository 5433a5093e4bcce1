#pragma once

#include <vector>

#include "garside/structure.hpp"

namespace garside {

/// Classical Garside structure of the braid group B_n.
///
/// Simples are permutation braids, stored as the strand map p (strand
/// starting at position i ends at p[i]). Prefix order is containment of
/// inversion sets labelled by starting positions; suffix order uses final
/// positions, which is the prefix order of the inverse permutation.
class ClassicalBraidModel final : public SimpleModel {
 public:
  static constexpr int kMaxStrands = 7;
  explicit ClassicalBraidModel(int n);

  std::string descriptor() const override;
  std::vector<Payload> enumerate() const override;
  Payload identity() const override;
  Payload delta() const override;
  Payload compose(const Payload& a, const Payload& b) const override;
  Payload invert(const Payload& a) const override;
  bool is_simple(const Payload& p) const override;
  int length(const Payload& p) const override;
  Payload meet_prefix(const Payload& a, const Payload& b) const override;
  Payload join_prefix(const Payload& a, const Payload& b) const override;
  Payload meet_suffix(const Payload& a, const Payload& b) const override;
  Payload join_suffix(const Payload& a, const Payload& b) const override;
  bool delta_pure() const override { return true; }
  std::vector<int> sort_key(const Payload& p) const override;

  int strands() const { return n_; }

 private:
  int n_;
};

/// Dual (Birman–Ko–Lee) Garside structure of B_n.
///
/// Simples are non-crossing partitions of n points on a circle, stored as
/// permutations whose cycles are the blocks in increasing cyclic order.
/// δ is the single-block partition (i ↦ i+1 mod n), atoms are the bands
/// (2-blocks), ∂ is the Kreweras complement and τ is rotation. Prefix and
/// suffix orders both coincide with refinement.
class DualBraidModel final : public SimpleModel {
 public:
  static constexpr int kMaxStrands = 6;
  explicit DualBraidModel(int n);

  std::string descriptor() const override;
  std::vector<Payload> enumerate() const override;
  Payload identity() const override;
  Payload delta() const override;
  Payload compose(const Payload& a, const Payload& b) const override;
  Payload invert(const Payload& a) const override;
  bool is_simple(const Payload& p) const override;
  int length(const Payload& p) const override;
  Payload meet_prefix(const Payload& a, const Payload& b) const override;
  Payload join_prefix(const Payload& a, const Payload& b) const override;
  Payload meet_suffix(const Payload& a, const Payload& b) const override;
  Payload join_suffix(const Payload& a, const Payload& b) const override;
  bool delta_pure() const override { return true; }
  std::vector<int> sort_key(const Payload& p) const override;
  std::string payload_string(const Payload& p) const override;

  /// Block label per point (label = smallest point of the block).
  static std::vector<int> blocks(const Payload& p);
  /// Permutation with increasing cycles on the given block labels.
  static Payload from_blocks(const std::vector<int>& labels);

 private:
  int n_;
};

/// ℤⁿ with Δ = (1,…,1): simples are 0/1 vectors, both orders are
/// coordinatewise and τ is the identity. Δ-pure only for n = 1.
class FreeAbelianModel final : public SimpleModel {
 public:
  static constexpr int kMaxRank = 16;
  explicit FreeAbelianModel(int n);

  std::string descriptor() const override;
  std::vector<Payload> enumerate() const override;
  Payload identity() const override;
  Payload delta() const override;
  Payload compose(const Payload& a, const Payload& b) const override;
  Payload invert(const Payload& a) const override;
  bool is_simple(const Payload& p) const override;
  int length(const Payload& p) const override;
  Payload meet_prefix(const Payload& a, const Payload& b) const override;
  Payload join_prefix(const Payload& a, const Payload& b) const override;
  Payload meet_suffix(const Payload& a, const Payload& b) const override;
  Payload join_suffix(const Payload& a, const Payload& b) const override;
  Payload complement(const Payload& s) const override;
  Payload tau(const Payload& s) const override { return s; }
  bool delta_pure() const override { return n_ == 1; }
  std::vector<int> sort_key(const Payload& p) const override;

 private:
  int n_;
};

}  // namespace garside
