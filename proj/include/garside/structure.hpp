#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace garside {

/// Interned simple element. The id indexes the owning structure's simple
/// table; ids are only meaningful together with that structure.
struct Simple {
  std::uint32_t id = 0;
  friend constexpr bool operator==(Simple, Simple) = default;
  friend constexpr auto operator<=>(Simple, Simple) = default;
};

struct SimpleHash {
  std::size_t operator()(Simple s) const noexcept { return s.id; }
};

/// Structure-specific encoding of a simple (permutation, non-crossing
/// partition as a permutation, 0/1 vector). Group products of payloads need
/// not be simple.
using Payload = std::vector<int>;

struct PayloadHash {
  std::size_t operator()(const Payload& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p) {
      h ^= static_cast<std::size_t>(v + 0x9e3779b9);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Native operations of one concrete Garside structure, on payloads.
///
/// Implementations supply the four lattice operations directly; the
/// audit module checks them against exhaustive search over the product
/// table, which only relies on `compose`, `is_simple` and `length`.
class SimpleModel {
 public:
  virtual ~SimpleModel() = default;

  virtual std::string descriptor() const = 0;
  virtual std::vector<Payload> enumerate() const = 0;
  virtual Payload identity() const = 0;
  virtual Payload delta() const = 0;

  /// Group product a·b (a applied first).
  virtual Payload compose(const Payload& a, const Payload& b) const = 0;
  virtual Payload invert(const Payload& a) const = 0;
  virtual bool is_simple(const Payload& p) const = 0;
  /// Number of atoms in any factorisation; only called on simples.
  virtual int length(const Payload& p) const = 0;

  virtual Payload meet_prefix(const Payload& a, const Payload& b) const = 0;
  virtual Payload join_prefix(const Payload& a, const Payload& b) const = 0;
  virtual Payload meet_suffix(const Payload& a, const Payload& b) const = 0;
  virtual Payload join_suffix(const Payload& a, const Payload& b) const = 0;

  /// ∂(s) = s⁻¹Δ.
  virtual Payload complement(const Payload& s) const {
    return compose(invert(s), delta());
  }
  /// τ(s) = Δ⁻¹sΔ.
  virtual Payload tau(const Payload& s) const {
    return compose(compose(invert(delta()), s), delta());
  }

  /// Center generated by a power of Δ. Projection to axes needs this.
  virtual bool delta_pure() const = 0;

  /// Ordering key used to sort simples of equal length; it fixes atom
  /// numbering (s1, s2, ...) and enumeration order.
  virtual std::vector<int> sort_key(const Payload& p) const { return p; }
  virtual std::string payload_string(const Payload& p) const;
};

class GarsideStructure;
using StructurePtr = std::shared_ptr<const GarsideStructure>;

/// A finite-type Garside structure with interned simples.
///
/// Immutable after construction. Binary operations are table lookups for
/// structures with at most `kDenseLimit` simples and native model calls
/// otherwise. Simples are numbered by (length, model sort key), so the
/// identity has id 0, atoms come next and Δ is last.
class GarsideStructure {
 public:
  static constexpr std::size_t kDenseLimit = 256;

  explicit GarsideStructure(std::shared_ptr<const SimpleModel> model);

  /// Parses `braid:classical:n=4`, `braid:dual:n=3` or `zn:n=3`.
  static StructurePtr from_descriptor(std::string_view descriptor);

  const std::string& descriptor() const { return descriptor_; }
  const SimpleModel& model() const { return *model_; }

  std::size_t size() const { return payloads_.size(); }
  std::span<const Simple> simples() const { return all_; }
  std::span<const Simple> atoms() const { return atoms_; }
  /// Simples other than 1 and Δ.
  std::span<const Simple> proper_simples() const { return proper_; }

  Simple identity() const { return Simple{0}; }
  Simple delta() const { return Simple{static_cast<std::uint32_t>(size() - 1)}; }
  bool is_proper(Simple s) const { return s != identity() && s != delta(); }

  int tau_order() const { return tau_order_; }
  bool delta_pure() const { return model_->delta_pure(); }

  int length(Simple s) const { return length_[s.id]; }
  const Payload& payload(Simple s) const { return payloads_[s.id]; }
  std::optional<Simple> find(const Payload& p) const;

  Simple meet_prefix(Simple a, Simple b) const;
  Simple join_prefix(Simple a, Simple b) const;
  Simple meet_suffix(Simple a, Simple b) const;
  Simple join_suffix(Simple a, Simple b) const;

  /// a·b when it is simple.
  std::optional<Simple> product(Simple a, Simple b) const;
  /// a⁻¹b when a ⪯ b.
  std::optional<Simple> left_quotient(Simple a, Simple b) const;
  /// b·a⁻¹ when b ≽ a.
  std::optional<Simple> right_quotient(Simple b, Simple a) const;

  bool prefix_le(Simple a, Simple b) const { return left_quotient(a, b).has_value(); }
  /// True when `a` is a suffix of `b`.
  bool suffix_le(Simple a, Simple b) const { return right_quotient(b, a).has_value(); }

  Simple complement(Simple s) const { return Simple{complement_[s.id]}; }
  Simple complement_inverse(Simple s) const { return Simple{complement_inv_[s.id]}; }
  Simple tau(Simple s) const { return Simple{tau_[s.id]}; }
  Simple tau_inverse(Simple s) const { return Simple{tau_inv_[s.id]}; }
  Simple tau_power(Simple s, long long k) const;

  /// ∂(s) ∧ t = 1.
  bool left_weighted(Simple s, Simple t) const {
    return meet_prefix(complement(s), t) == identity();
  }
  /// ∂⁻¹(t) ∧↰ s = 1.
  bool right_weighted(Simple s, Simple t) const {
    return meet_suffix(complement_inverse(t), s) == identity();
  }

  /// Some factorisation of `s` into atoms (greedy, smallest atom first).
  std::vector<Simple> atom_word(Simple s) const;
  /// 1-based atom number, 0 if `s` is not an atom.
  int atom_number(Simple s) const;
  /// `s` rendered in the word grammar: atoms `s<i>` separated by spaces,
  /// `D` for Δ and `1` for the identity.
  std::string name(Simple s) const;

  /// Copy whose ∂ table sends `s` to `image`. Fault-injection hook for
  /// audit tests; the copy is otherwise identical.
  GarsideStructure with_complement_override(Simple s, Simple image) const;

 private:
  Simple intern(const Payload& p) const;
  std::optional<Simple> lookup(const std::vector<std::uint32_t>& table, Simple a,
                               Simple b) const;

  std::shared_ptr<const SimpleModel> model_;
  std::string descriptor_;
  std::vector<Payload> payloads_;
  std::unordered_map<Payload, std::uint32_t, PayloadHash> index_;
  std::vector<Simple> all_, atoms_, proper_;
  std::vector<int> length_;
  std::vector<std::uint32_t> complement_, complement_inv_, tau_, tau_inv_;
  std::vector<int> atom_number_;
  int tau_order_ = 1;

  bool dense_ = false;
  std::vector<std::uint32_t> product_, ldiv_, rdiv_;
  std::vector<std::uint32_t> meet_p_, join_p_, meet_s_, join_s_;
};

}  // namespace garside
