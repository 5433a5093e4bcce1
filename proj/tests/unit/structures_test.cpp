#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "garside/audit.hpp"
#include "garside/error.hpp"
#include "garside/structures.hpp"
#include "oracles/helpers.hpp"

using namespace garside;
using testing_support::simple_of;
using testing_support::structure;

TEST(Structures, SimpleCounts) {
  EXPECT_EQ(structure("braid:classical:n=3")->size(), 6u);
  EXPECT_EQ(structure("braid:classical:n=4")->size(), 24u);
  EXPECT_EQ(structure("braid:dual:n=3")->size(), 5u);
  EXPECT_EQ(structure("braid:dual:n=4")->size(), 14u);
  EXPECT_EQ(structure("braid:dual:n=5")->size(), 42u);
  EXPECT_EQ(structure("zn:n=3")->size(), 8u);
}

TEST(Structures, IdentityFirstDeltaLastAtomsNext) {
  for (const char* d : {"braid:classical:n=4", "braid:dual:n=4", "zn:n=3"}) {
    auto g = structure(d);
    EXPECT_EQ(g->payload(g->identity()), g->model().identity()) << d;
    EXPECT_EQ(g->payload(g->delta()), g->model().delta()) << d;
    for (std::size_t i = 0; i < g->atoms().size(); ++i)
      EXPECT_EQ(g->atoms()[i].id, i + 1) << d;
    EXPECT_EQ(g->proper_simples().size(), g->size() - 2) << d;
  }
}

TEST(Structures, AtomCounts) {
  EXPECT_EQ(structure("braid:classical:n=4")->atoms().size(), 3u);
  EXPECT_EQ(structure("braid:dual:n=4")->atoms().size(), 6u);
  EXPECT_EQ(structure("zn:n=5")->atoms().size(), 5u);
}

TEST(Structures, ClassicalAtomsAreAdjacentTranspositions) {
  auto g = structure("braid:classical:n=5");
  for (int k = 1; k <= 4; ++k) {
    oracle::Perm p{0, 1, 2, 3, 4};
    std::swap(p[k - 1], p[k]);
    EXPECT_EQ(g->payload(g->atoms()[k - 1]), p);
  }
}

TEST(Structures, DescriptorErrors) {
  EXPECT_THROW(structure("braid:classical:n=1"), InvalidInput);
  EXPECT_THROW(structure("braid:classical:n=8"), InvalidInput);
  EXPECT_THROW(structure("braid:dual:n=7"), InvalidInput);
  EXPECT_THROW(structure("zn:n=0"), InvalidInput);
  EXPECT_THROW(structure("braid:classical:n=3x"), InvalidInput);
  EXPECT_THROW(structure("artin:A:n=3"), InvalidInput);
  EXPECT_EQ(structure("zn:n=3")->descriptor(), "zn:n=3");
}

TEST(Structures, B3LatticeExamples) {
  auto g = structure("braid:classical:n=3");
  const Simple s1 = simple_of(*g, {1}), s2 = simple_of(*g, {2});
  EXPECT_EQ(g->meet_prefix(s1, s2), g->identity());
  EXPECT_EQ(g->join_prefix(s1, s2), g->delta());
  EXPECT_EQ(g->join_prefix(s1, s2), simple_of(*g, {1, 2, 1}));
  for (Simple s : g->simples()) EXPECT_EQ(g->meet_prefix(s, s), s);
}

TEST(Structures, B3ComplementsAndTau) {
  auto g = structure("braid:classical:n=3");
  const Simple s1 = simple_of(*g, {1}), s2 = simple_of(*g, {2});
  const Simple s2s1 = simple_of(*g, {2, 1});
  EXPECT_EQ(g->complement(s1), s2s1);
  EXPECT_EQ(g->product(s1, s2s1), g->delta());
  EXPECT_EQ(g->complement(g->delta()), g->identity());
  EXPECT_EQ(g->complement(g->identity()), g->delta());
  EXPECT_EQ(g->tau(s1), s2);
  EXPECT_EQ(g->tau(g->tau(s1)), s1);
  EXPECT_EQ(g->tau_order(), 2);
  // ∂⁻¹(s) = Δs⁻¹.
  for (Simple s : g->simples()) EXPECT_EQ(g->product(g->complement_inverse(s), s), g->delta());
  EXPECT_EQ(g->name(s2s1), "s2 s1");
}

TEST(Structures, TauOrders) {
  EXPECT_EQ(structure("braid:classical:n=2")->tau_order(), 1);
  EXPECT_EQ(structure("braid:classical:n=4")->tau_order(), 2);
  // B₂ has a single atom, so τ is trivial there.
  EXPECT_EQ(structure("braid:dual:n=2")->tau_order(), 1);
  for (int n = 3; n <= 6; ++n)
    EXPECT_EQ(structure("braid:dual:n=" + std::to_string(n))->tau_order(), n);
  EXPECT_EQ(structure("zn:n=3")->tau_order(), 1);
}

TEST(Structures, B3Weightedness) {
  auto g = structure("braid:classical:n=3");
  const Simple s1 = simple_of(*g, {1}), s2 = simple_of(*g, {2});
  EXPECT_TRUE(g->left_weighted(s1, s1));
  EXPECT_FALSE(g->right_weighted(s1, s2));
  for (Simple s : g->simples()) EXPECT_TRUE(g->left_weighted(s, g->identity()));
}

TEST(Structures, ClassicalMeetMatchesWeakOrderOracle) {
  for (int n = 2; n <= 4; ++n) {
    auto g = structure("braid:classical:n=" + std::to_string(n));
    for (Simple a : g->simples())
      for (Simple b : g->simples()) {
        const auto& pa = g->payload(a);
        const auto& pb = g->payload(b);
        EXPECT_EQ(g->prefix_le(a, b), oracle::weak_le(pa, pb));
        EXPECT_EQ(g->payload(g->meet_prefix(a, b)), oracle::weak_meet(pa, pb));
      }
  }
}

TEST(Structures, ClassicalSuffixOrderIsRightWeakOrder) {
  auto g = structure("braid:classical:n=4");
  auto inv = [](const oracle::Perm& p) {
    oracle::Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
  };
  for (Simple a : g->simples())
    for (Simple b : g->simples())
      EXPECT_EQ(g->suffix_le(a, b), oracle::weak_le(inv(g->payload(a)), inv(g->payload(b))));
}

TEST(Structures, ClassicalNativeOpsMatchFallbackOnLargerN) {
  // B₆ has 720 simples and uses native model calls instead of tables.
  auto g = structure("braid:classical:n=6");
  FallbackLattice prefix(*g, FallbackLattice::Side::prefix);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Simple a{static_cast<std::uint32_t>(rng() % g->size())};
    Simple b{static_cast<std::uint32_t>(rng() % g->size())};
    EXPECT_EQ(g->meet_prefix(a, b), *prefix.meet(a, b));
    EXPECT_EQ(g->join_prefix(a, b), *prefix.join(a, b));
  }
}

TEST(Structures, DualKrewerasHasOrderTwoN) {
  for (int n = 2; n <= 6; ++n) {
    auto g = structure("braid:dual:n=" + std::to_string(n));
    for (Simple s : g->simples()) {
      Simple t = s;
      for (int k = 0; k < 2 * n; ++k) t = g->complement(t);
      EXPECT_EQ(t, s);
      if (n <= 4) EXPECT_EQ(g->complement(g->complement(s)), g->tau(s));
    }
  }
}

TEST(Structures, DualTauIsRotation) {
  const int n = 5;
  auto g = structure("braid:dual:n=5");
  // Bands as unordered point pairs; τ must shift all of them by one fixed offset.
  auto band = [&](Simple a) {
    std::vector<int> pts;
    for (int i = 0; i < n; ++i)
      if (g->payload(a)[i] != i) pts.push_back(i);
    return std::make_pair(pts[0], pts[1]);
  };
  std::set<int> offsets;
  for (Simple a : g->atoms()) {
    auto [i, j] = band(a);
    auto [k, l] = band(g->tau(a));
    bool found = false;
    for (int r = 1; r < n; ++r) {
      std::set<int> shifted{(i + r) % n, (j + r) % n};
      if (shifted == std::set<int>{k, l}) {
        offsets.insert(r);
        found = true;
      }
    }
    EXPECT_TRUE(found);
  }
  ASSERT_EQ(offsets.size(), 1u);
  EXPECT_TRUE(*offsets.begin() == 1 || *offsets.begin() == n - 1);
}

TEST(Structures, DualMeetIsCommonRefinement) {
  auto g = structure("braid:dual:n=5");
  for (Simple a : g->simples())
    for (Simple b : g->simples()) {
      auto la = DualBraidModel::blocks(g->payload(a));
      auto lb = DualBraidModel::blocks(g->payload(b));
      auto lm = DualBraidModel::blocks(g->payload(g->meet_prefix(a, b)));
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          EXPECT_EQ(lm[i] == lm[j], la[i] == la[j] && lb[i] == lb[j]);
    }
}

TEST(Structures, FreeAbelianLattice) {
  auto g = structure("zn:n=3");
  for (Simple a : g->simples())
    for (Simple b : g->simples()) {
      const auto& pa = g->payload(a);
      const auto& pb = g->payload(b);
      for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(g->payload(g->meet_prefix(a, b))[i], std::min(pa[i], pb[i]));
        EXPECT_EQ(g->payload(g->join_suffix(a, b))[i], std::max(pa[i], pb[i]));
      }
      EXPECT_EQ(g->prefix_le(a, b), g->suffix_le(a, b));
    }
  for (Simple s : g->simples()) EXPECT_EQ(g->tau(s), s);
  EXPECT_FALSE(g->delta_pure());
  EXPECT_TRUE(structure("zn:n=1")->delta_pure());
}

TEST(Audit, ShippedStructuresPass) {
  for (const char* d : {"braid:classical:n=2", "braid:classical:n=3", "braid:classical:n=4",
                        "braid:dual:n=3", "braid:dual:n=4", "braid:dual:n=5", "zn:n=3",
                        "zn:n=4"}) {
    AuditReport r = audit(*structure(d));
    EXPECT_TRUE(r.ok()) << d << ": " << (r.ok() ? "" : r.violations.front().law);
    EXPECT_TRUE(r.fallback_compared) << d;
  }
}

TEST(Audit, LargerClassicalSampledTriples) {
  AuditOptions o;
  o.sampled_triples = 2000;
  AuditReport r = audit(*structure("braid:classical:n=5"), o);
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.triples_exhaustive);
  EXPECT_EQ(r.triples_checked, 2000u);
}

TEST(Audit, CorruptedComplementIsReported) {
  auto g = structure("braid:classical:n=3");
  const Simple s1 = simple_of(*g, {1});
  GarsideStructure bad = g->with_complement_override(s1, g->delta());
  AuditReport r = audit(bad);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(),
                          [](const AuditViolation& v) { return v.law == "∂ not bijective"; }));
}

TEST(Audit, RefusesHugeStructures) {
  EXPECT_THROW(audit(*structure("zn:n=16")), GuardRefusal);
}
