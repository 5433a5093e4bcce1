#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "garside/structure.hpp"

namespace garside {

/// Group element in left normal form Δ^p s₁⋯s_r: every factor is proper
/// and every consecutive pair is left-weighted.
class Element {
 public:
  /// The identity of `structure`.
  explicit Element(StructurePtr structure);

  /// Validates the left normal form; throws InvalidInput otherwise.
  static Element from_normal_form(StructurePtr structure, long long inf,
                                  std::vector<Simple> factors);
  static Element delta_power(StructurePtr structure, long long k);
  static Element simple(StructurePtr structure, Simple s);

  const StructurePtr& structure_ptr() const { return structure_; }
  const GarsideStructure& structure() const { return *structure_; }

  long long inf() const { return inf_; }
  long long sup() const { return inf_ + static_cast<long long>(factors_.size()); }
  /// Canonical length ℓ.
  std::size_t length() const { return factors_.size(); }
  const std::vector<Simple>& factors() const { return factors_; }

  bool is_identity() const { return inf_ == 0 && factors_.empty(); }
  bool is_positive() const { return inf_ >= 0; }
  /// Length in the Cayley graph with generators the simples and their inverses.
  long long word_length() const;

  Element operator*(const Element& other) const;
  Element inverse() const;

  /// g·s together with the carry simples t₁…t_r: the i-th prefix of the
  /// new factor sequence is the i-th prefix of the old one times tᵢ.
  Element right_multiply(Simple s, std::vector<Simple>* transcript = nullptr) const;
  /// g·Δᵏ.
  Element right_multiply_delta(long long k) const;
  /// g·s⁻¹.
  Element right_divide(Simple s) const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.structure_ == b.structure_ && a.inf_ == b.inf_ && a.factors_ == b.factors_;
  }
  /// Lexicographic on (inf, factor ids); used for deterministic tie-breaks.
  friend bool operator<(const Element& a, const Element& b);

 private:
  Element(StructurePtr structure, long long inf, std::vector<Simple> factors);
  void strip();

  StructurePtr structure_;
  long long inf_ = 0;
  std::vector<Simple> factors_;
};

struct ElementHash {
  std::size_t operator()(const Element& g) const noexcept;
};

void require_same_structure(const Element& a, const Element& b);

struct SignedSimple {
  Simple simple;
  int sign = 1;
};

/// gᵏ for any integer k.
Element power(const Element& g, long long k);

/// Left normal form of a product of simples and inverse simples, computed
/// by local left-weighting sweeps (independent of Element::operator*).
Element normalize(StructurePtr structure, std::span<const SignedSimple> word);

/// x = f₀⋯f_{r−1}Δ^p with every pair right-weighted; f₀ is the leftmost factor.
struct RightNormalForm {
  std::vector<Simple> factors;
  long long sup_power = 0;  // p; equals inf of the element
};

RightNormalForm right_normal_form(const Element& g);
Element from_right_normal_form(StructurePtr structure, const RightNormalForm& rnf);

/// a ⪯ b, i.e. a⁻¹b is positive.
bool prefix_le(const Element& a, const Element& b);
/// a is a suffix of b, i.e. b·a⁻¹ is positive.
bool suffix_le(const Element& a, const Element& b);
/// Greatest common prefix of two positive elements.
Element meet_prefix(const Element& a, const Element& b);
/// Greatest common suffix of two positive elements.
Element meet_suffix(const Element& a, const Element& b);

/// Positive element as a product of simples: inf copies of Δ, then factors.
std::vector<Simple> positive_simple_word(const Element& g);

enum class Side { left, right };

/// left: g = D⁻¹N with D ∧ N = 1; right: g = N·D⁻¹ with D ∧↰ N = 1.
struct Fraction {
  Side side = Side::left;
  Element denominator;
  Element numerator;
};

Fraction left_fraction(const Element& g);
Fraction right_fraction(const Element& g);

/// D_l⁻¹N_l written as signed simples: D_l's simples reversed and inverted,
/// then N_l's simples. Its length is the word length of g.
std::vector<SignedSimple> mixed_word(const Element& g);

/// Rendering in the word grammar: "D^p" then each factor as atoms;
/// the identity renders as the empty string.
std::string to_word(const Element& g);
/// Each factor rendered as an atom word ("1" and "D" for those simples).
std::vector<std::string> factor_names(const Element& g);

/// Product of tokens `s<i>`, `D` with optional `^<int>` exponents; `1` is
/// the identity.
/// Throws ParseError citing the offending position.
Element parse_word(StructurePtr structure, std::string_view text);

}  // namespace garside
