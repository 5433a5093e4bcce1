#include "garside/audit.hpp"

#include <memory>
#include <random>

#include "garside/error.hpp"

namespace garside {

FallbackLattice::FallbackLattice(const GarsideStructure& g, Side side)
    : n_(g.size()), down_(g.size(), std::vector<char>(g.size(), 0)) {
  for (Simple a : g.simples())
    for (Simple c : g.simples()) {
      if (side == Side::prefix) {
        if (auto b = g.product(a, c)) down_[b->id][a.id] = 1;
      } else {
        if (auto b = g.product(c, a)) down_[b->id][a.id] = 1;
      }
    }
}

std::optional<Simple> FallbackLattice::meet(Simple a, Simple b) const {
  std::vector<std::uint32_t> common;
  for (std::uint32_t m = 0; m < n_; ++m)
    if (down_[a.id][m] && down_[b.id][m]) common.push_back(m);
  for (std::uint32_t m : common) {
    bool greatest = true;
    for (std::uint32_t c : common)
      if (!down_[m][c]) {
        greatest = false;
        break;
      }
    if (greatest) return Simple{m};
  }
  return std::nullopt;
}

std::optional<Simple> FallbackLattice::join(Simple a, Simple b) const {
  std::vector<std::uint32_t> common;
  for (std::uint32_t m = 0; m < n_; ++m)
    if (down_[m][a.id] && down_[m][b.id]) common.push_back(m);
  for (std::uint32_t m : common) {
    bool least = true;
    for (std::uint32_t c : common)
      if (!down_[c][m]) {
        least = false;
        break;
      }
    if (least) return Simple{m};
  }
  return std::nullopt;
}

namespace {

class Recorder {
 public:
  Recorder(AuditReport& report, std::size_t cap) : report_(report), cap_(cap) {}
  void operator()(const char* law, std::vector<Simple> witness) {
    if (report_.violations.size() < cap_) report_.violations.push_back({law, std::move(witness)});
  }

 private:
  AuditReport& report_;
  std::size_t cap_;
};

struct OrderOps {
  Simple (GarsideStructure::*meet)(Simple, Simple) const;
  Simple (GarsideStructure::*join)(Simple, Simple) const;
  bool (GarsideStructure::*le)(Simple, Simple) const;
  const char* meet_law;
  const char* join_law;
  const char* lattice_law;
  const char* bounds_law;
};

constexpr OrderOps kPrefixOps{&GarsideStructure::meet_prefix, &GarsideStructure::join_prefix,
                              &GarsideStructure::prefix_le,   "meet_prefix mismatch",
                              "join_prefix mismatch",         "prefix order not a lattice",
                              "simple not between 1 and Δ in prefix order"};
constexpr OrderOps kSuffixOps{&GarsideStructure::meet_suffix, &GarsideStructure::join_suffix,
                              &GarsideStructure::suffix_le,   "meet_suffix mismatch",
                              "join_suffix mismatch",         "suffix order not a lattice",
                              "simple not between 1 and Δ in suffix order"};

void check_pairs(const GarsideStructure& g, const OrderOps& ops, const FallbackLattice* oracle,
                 Recorder& record) {
  const Simple one = g.identity(), delta = g.delta();
  for (Simple a : g.simples()) {
    if (!(g.*ops.le)(one, a) || !(g.*ops.le)(a, delta)) record(ops.bounds_law, {a});
    if ((g.*ops.meet)(a, a) != a || (g.*ops.join)(a, a) != a) record("lattice idempotence", {a});
    for (Simple b : g.simples()) {
      const Simple m = (g.*ops.meet)(a, b);
      const Simple j = (g.*ops.join)(a, b);
      if (m != (g.*ops.meet)(b, a) || j != (g.*ops.join)(b, a))
        record("lattice commutativity", {a, b});
      if ((g.*ops.meet)(a, j) != a || (g.*ops.join)(a, m) != a)
        record("lattice absorption", {a, b});
      if (!(g.*ops.le)(m, a) || !(g.*ops.le)(m, b)) record(ops.meet_law, {a, b});
      if (!(g.*ops.le)(a, j) || !(g.*ops.le)(b, j)) record(ops.join_law, {a, b});
      if (oracle) {
        auto om = oracle->meet(a, b);
        auto oj = oracle->join(a, b);
        if (!om || !oj) record(ops.lattice_law, {a, b});
        if (om && *om != m) record(ops.meet_law, {a, b});
        if (oj && *oj != j) record(ops.join_law, {a, b});
      }
    }
  }
}

void check_triple(const GarsideStructure& g, Simple a, Simple b, Simple c, Recorder& record) {
  if (g.meet_prefix(g.meet_prefix(a, b), c) != g.meet_prefix(a, g.meet_prefix(b, c)) ||
      g.join_prefix(g.join_prefix(a, b), c) != g.join_prefix(a, g.join_prefix(b, c)))
    record("prefix lattice associativity", {a, b, c});
  if (g.meet_suffix(g.meet_suffix(a, b), c) != g.meet_suffix(a, g.meet_suffix(b, c)) ||
      g.join_suffix(g.join_suffix(a, b), c) != g.join_suffix(a, g.join_suffix(b, c)))
    record("suffix lattice associativity", {a, b, c});
}

}  // namespace

AuditReport audit(const GarsideStructure& g, const AuditOptions& options) {
  const std::size_t n = g.size();
  if (n > AuditOptions::kMaxSimples)
    throw GuardRefusal("audit of " + g.descriptor() + " has too many simples",
                       static_cast<long long>(AuditOptions::kMaxSimples));

  AuditReport report;
  report.structure = g.descriptor();
  report.simple_count = n;
  report.tau_order = g.tau_order();
  Recorder record(report, options.max_recorded);

  const Simple one = g.identity(), delta = g.delta();
  if (one == delta) record("identity equals Δ", {one});
  for (Simple a : g.atoms())
    if (g.length(a) != 1) record("atom of length other than 1", {a});

  // Complement and τ.
  std::vector<char> hit(n, 0);
  for (Simple s : g.simples()) hit[g.complement(s).id] = 1;
  for (Simple s : g.simples())
    if (!hit[s.id]) record("∂ not bijective", {s});
  if (g.complement(one) != delta) record("∂(1) ≠ Δ", {one});
  if (g.complement(delta) != one) record("∂(Δ) ≠ 1", {delta});
  for (Simple s : g.simples()) {
    if (g.product(s, g.complement(s)) != delta) record("s·∂(s) ≠ Δ", {s});
    if (g.complement(g.complement(s)) != g.tau(s)) record("∂² ≠ τ", {s});
    if (g.tau_power(s, g.tau_order()) != s) record("τ^e ≠ id", {s});
  }
  for (int k = 1; k < g.tau_order(); ++k) {
    bool identity_map = true;
    for (Simple s : g.simples())
      if (g.tau_power(s, k) != s) identity_map = false;
    if (identity_map) record("τ has order below e", {});
  }

  std::unique_ptr<FallbackLattice> prefix_oracle, suffix_oracle;
  if (n <= options.fallback_limit) {
    prefix_oracle = std::make_unique<FallbackLattice>(g, FallbackLattice::Side::prefix);
    suffix_oracle = std::make_unique<FallbackLattice>(g, FallbackLattice::Side::suffix);
    report.fallback_compared = true;
  }
  check_pairs(g, kPrefixOps, prefix_oracle.get(), record);
  check_pairs(g, kSuffixOps, suffix_oracle.get(), record);

  for (Simple s : g.simples())
    for (Simple t : g.simples()) {
      // s ⪯ t gives ∂(s) = (s⁻¹t)·∂(t), so ∂(t) is a suffix of ∂(s).
      if (g.prefix_le(s, t) && !g.suffix_le(g.complement(t), g.complement(s)))
        record("∂ not order-reversing", {s, t});
      if (g.tau(g.meet_prefix(s, t)) != g.meet_prefix(g.tau(s), g.tau(t)))
        record("τ not a lattice automorphism", {s, t});
      // (s,t) left-weighted iff no atom of t can be absorbed by s.
      bool absorbs_left = false, absorbs_right = false;
      for (Simple a : g.atoms()) {
        if (g.prefix_le(a, t) && g.product(s, a)) absorbs_left = true;
        if (g.suffix_le(a, s) && g.product(a, t)) absorbs_right = true;
      }
      if (g.left_weighted(s, t) == absorbs_left) record("left weightedness inconsistent", {s, t});
      if (g.right_weighted(s, t) == absorbs_right)
        record("right weightedness inconsistent", {s, t});
    }
  report.pairs_checked = n * n;

  if (n <= options.exhaustive_triple_limit) {
    report.triples_exhaustive = true;
    for (Simple a : g.simples())
      for (Simple b : g.simples())
        for (Simple c : g.simples()) check_triple(g, a, b, c, record);
    report.triples_checked = n * n * n;
  } else {
    std::mt19937_64 rng(options.seed);
    auto draw = [&] { return Simple{static_cast<std::uint32_t>(rng() % n)}; };
    for (std::size_t i = 0; i < options.sampled_triples; ++i) {
      Simple a = draw(), b = draw(), c = draw();
      check_triple(g, a, b, c, record);
    }
    report.triples_checked = options.sampled_triples;
  }
  return report;
}

}  // namespace garside
