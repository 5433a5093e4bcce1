#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <random>

#include "garside/error.hpp"
#include "oracles/helpers.hpp"

using namespace garside;
using namespace testing_support;

namespace {

const char* const kStructures[] = {"braid:classical:n=3", "braid:classical:n=4",
                                   "braid:classical:n=5", "braid:dual:n=3",
                                   "braid:dual:n=4",      "braid:dual:n=5",
                                   "zn:n=3",              "zn:n=5"};

void expect_normal_form(const Element& g) {
  const GarsideStructure& s = g.structure();
  for (std::size_t i = 0; i < g.factors().size(); ++i) {
    EXPECT_TRUE(s.is_proper(g.factors()[i]));
    if (i > 0) EXPECT_TRUE(s.left_weighted(g.factors()[i - 1], g.factors()[i]));
  }
}

}  // namespace

TEST(NormalForm, B3Examples) {
  auto g = structure("braid:classical:n=3");
  Element x = parse_word(g, "s1 s2 s1 s2");
  EXPECT_EQ(x.inf(), 1);
  EXPECT_EQ(x.sup(), 2);
  ASSERT_EQ(x.factors().size(), 1u);
  EXPECT_EQ(x.factors()[0], simple_of(*g, {2}));

  Element e = normalize(g, {});
  EXPECT_TRUE(e.is_identity());

  Element sq = parse_word(g, "s1 s1");
  EXPECT_EQ(sq.inf(), 0);
  EXPECT_EQ(sq.factors(), (std::vector<Simple>{simple_of(*g, {1}), simple_of(*g, {1})}));

  Element cube = parse_word(g, "s1 s2 s1 s2 s1 s2");
  EXPECT_EQ(cube.inf(), 2);
  EXPECT_TRUE(cube.factors().empty());
}

TEST(NormalForm, NormalizeRouteMatchesParsedProduct) {
  auto g = structure("braid:classical:n=3");
  const Simple s1 = simple_of(*g, {1}), s2 = simple_of(*g, {2});
  std::vector<SignedSimple> w{{s1, 1}, {s2, 1}, {s1, 1}, {s2, 1}};
  EXPECT_EQ(normalize(g, w), parse_word(g, "s1 s2 s1 s2"));
  std::vector<SignedSimple> w2{{s1, 1}, {s2, -1}};
  EXPECT_EQ(normalize(g, w2), parse_word(g, "s1 s2^-1"));
}

TEST(NormalForm, InverseAndDeltaPowers) {
  auto g = structure("braid:classical:n=3");
  for (long long k = -4; k <= 4; ++k) {
    Element d = Element::delta_power(g, k);
    EXPECT_EQ(d.inverse(), Element::delta_power(g, -k));
    EXPECT_EQ(d.word_length(), std::llabs(k));
    EXPECT_EQ(d.length(), 0u);
  }
  Element x = parse_word(g, "s1 s2^-1");
  EXPECT_TRUE((x.inverse() * x).is_identity());
  EXPECT_TRUE((x * x.inverse()).is_identity());
}

TEST(NormalForm, FractionsExample) {
  auto g = structure("braid:classical:n=3");
  Element x = parse_word(g, "s1 s2^-1");
  EXPECT_EQ(x.inf(), -1);
  Fraction f = left_fraction(x);
  EXPECT_EQ(f.denominator, Element::simple(g, simple_of(*g, {1, 2})));
  EXPECT_EQ(f.numerator, Element::simple(g, simple_of(*g, {2, 1})));
  auto mixed = mixed_word(x);
  ASSERT_EQ(mixed.size(), 2u);
  EXPECT_EQ(mixed[0].simple, simple_of(*g, {1, 2}));
  EXPECT_EQ(mixed[0].sign, -1);
  EXPECT_EQ(mixed[1].simple, simple_of(*g, {2, 1}));
  EXPECT_EQ(mixed[1].sign, 1);
  EXPECT_EQ(x.word_length(), 2);
  // The classical identity σ₂⁻¹σ₁⁻¹σ₂σ₁ = σ₁σ₂⁻¹, checked in the free group.
  EXPECT_EQ(oracle::act(3, {-2, -1, 2, 1}), oracle::act(3, {1, -2}));

  Element pos = parse_word(g, "s1 s1 s2");
  EXPECT_TRUE(left_fraction(pos).denominator.is_identity());
  EXPECT_EQ(left_fraction(pos).numerator, pos);

  auto dm = mixed_word(Element::delta_power(g, -1));
  ASSERT_EQ(dm.size(), 1u);
  EXPECT_EQ(dm[0].simple, g->delta());
  EXPECT_EQ(dm[0].sign, -1);
}

TEST(NormalForm, RightMultiplyTranscript) {
  auto g = structure("braid:classical:n=3");
  const Simple s1 = simple_of(*g, {1}), s2 = simple_of(*g, {2});
  Element x = parse_word(g, "s1 s1");
  std::vector<Simple> t;
  Element y = x.right_multiply(s2, &t);
  EXPECT_EQ(y.factors(), (std::vector<Simple>{s1, simple_of(*g, {1, 2})}));
  ASSERT_EQ(t.size(), 2u);
  // i-th prefix of the new form = i-th prefix of the old one times tᵢ.
  for (std::size_t i = 0; i < t.size(); ++i) {
    Element old_prefix = Element::from_normal_form(
        g, 0, std::vector<Simple>(x.factors().begin(), x.factors().begin() + i + 1));
    Element new_prefix = Element::from_normal_form(
        g, 0, std::vector<Simple>(y.factors().begin(), y.factors().begin() + i + 1));
    EXPECT_EQ(old_prefix * Element::simple(g, t[i]), new_prefix);
  }
  Element same = x.right_multiply(g->identity(), &t);
  EXPECT_EQ(same, x);
  EXPECT_TRUE(t.empty());
  Element one = Element(g).right_multiply(s1);
  EXPECT_EQ(one.inf(), 0);
  EXPECT_EQ(one.factors(), std::vector<Simple>{s1});
}

TEST(NormalForm, TranscriptPrefixLawRandom) {
  std::mt19937_64 rng(11);
  for (const char* d : kStructures) {
    auto g = structure(d);
    for (int it = 0; it < 200; ++it) {
      Element x = random_element(g, rng, 1 + rng() % 6);
      Simple s{static_cast<std::uint32_t>(rng() % g->size())};
      std::vector<Simple> t;
      Element y = x.right_multiply(s, &t);
      EXPECT_EQ(y, x * Element::simple(g, s));
      expect_normal_form(y);
      ASSERT_EQ(t.size(), s == g->identity() ? 0u : x.factors().size());
      // Rebuild the factor sequence before Δ migrates into inf and 1s drop.
      std::vector<Simple> pre(static_cast<std::size_t>(y.inf() - x.inf()), g->delta());
      pre.insert(pre.end(), y.factors().begin(), y.factors().end());
      pre.resize(x.factors().size() + 1, g->identity());
      Element old_prefix = Element::delta_power(g, x.inf());
      Element new_prefix = old_prefix;
      for (std::size_t i = 0; i < t.size(); ++i) {
        old_prefix = old_prefix.right_multiply(x.factors()[i]);
        new_prefix = new_prefix.right_multiply(pre[i]);
        EXPECT_EQ(old_prefix.right_multiply(t[i]), new_prefix) << d;
      }
    }
  }
}

TEST(NormalForm, ProductAndNormalizeAgree) {
  std::mt19937_64 rng(3);
  for (const char* d : kStructures) {
    auto g = structure(d);
    for (int it = 0; it < 300; ++it) {
      auto w = random_word(*g, rng, rng() % 9);
      Element direct = normalize(g, w);
      Element prod(g);
      for (auto& tok : w) prod = tok.sign > 0 ? prod.right_multiply(tok.simple)
                                               : prod.right_divide(tok.simple);
      EXPECT_EQ(direct, prod) << d;
      expect_normal_form(direct);
      EXPECT_EQ(normalize(g, mixed_word(direct)), direct) << d;
    }
  }
}

TEST(NormalForm, ClassicalAgreesWithFreeGroupAction) {
  std::mt19937_64 rng(5);
  for (int n = 3; n <= 5; ++n) {
    auto g = structure("braid:classical:n=" + std::to_string(n));
    for (int it = 0; it < 300; ++it) {
      auto w = random_word(*g, rng, 1 + rng() % 7);
      std::vector<int> braid;
      for (auto& tok : w) {
        auto bw = oracle::braid_word(g->payload(tok.simple));
        if (tok.sign > 0) {
          braid.insert(braid.end(), bw.begin(), bw.end());
        } else {
          for (auto r = bw.rbegin(); r != bw.rend(); ++r) braid.push_back(-*r);
        }
      }
      EXPECT_EQ(action_of(normalize(g, w)), oracle::act(n, braid));
    }
  }
}

TEST(NormalForm, GroupLaws) {
  std::mt19937_64 rng(9);
  for (const char* d : kStructures) {
    auto g = structure(d);
    for (int it = 0; it < 200; ++it) {
      Element a = random_element(g, rng, rng() % 6);
      Element b = random_element(g, rng, rng() % 6);
      Element c = random_element(g, rng, rng() % 6);
      EXPECT_EQ((a * b) * c, a * (b * c)) << d;
      EXPECT_TRUE((a * a.inverse()).is_identity()) << d;
      EXPECT_EQ(a.inverse().inverse(), a) << d;
    }
  }
}

TEST(NormalForm, UniqueUnderRandomRewriting) {
  std::mt19937_64 rng(17);
  for (const char* d : kStructures) {
    auto g = structure(d);
    for (int it = 0; it < 1000 / 8 + 1; ++it) {
      auto w = random_word(*g, rng, 1 + rng() % 6);
      Element target = normalize(g, w);
      for (int rewrite = 0; rewrite < 8; ++rewrite) {
        std::size_t pos = w.empty() ? 0 : rng() % w.size();
        switch (rng() % 3) {
          case 0: {  // insert s s⁻¹
            Simple s{static_cast<std::uint32_t>(rng() % g->size())};
            w.insert(w.begin() + pos, {{s, 1}, {s, -1}});
            break;
          }
          case 1: {  // split a positive token into prefix · quotient
            if (w.empty() || w[pos].sign < 0) break;
            Simple s = w[pos].simple;
            Simple a{static_cast<std::uint32_t>(rng() % g->size())};
            a = g->meet_prefix(a, s);
            Simple q = *g->left_quotient(a, s);
            w[pos] = {a, 1};
            w.insert(w.begin() + pos + 1, {q, 1});
            break;
          }
          default: {  // merge two adjacent positive tokens whose product is simple
            if (pos + 1 >= w.size() || w[pos].sign < 0 || w[pos + 1].sign < 0) break;
            if (auto p = g->product(w[pos].simple, w[pos + 1].simple)) {
              w[pos] = {*p, 1};
              w.erase(w.begin() + pos + 1);
            }
          }
        }
        EXPECT_EQ(normalize(g, w), target) << d;
      }
    }
  }
}

TEST(NormalForm, RightNormalFormSharesInfAndSup) {
  std::mt19937_64 rng(23);
  for (const char* d : kStructures) {
    auto g = structure(d);
    for (int it = 0; it < 1000 / 8 + 1; ++it) {
      Element x = random_element(g, rng, rng() % 8);
      RightNormalForm r = right_normal_form(x);
      EXPECT_EQ(r.sup_power, x.inf()) << d;
      EXPECT_EQ(r.factors.size(), x.length()) << d;
      for (std::size_t i = 0; i < r.factors.size(); ++i) {
        EXPECT_TRUE(g->is_proper(r.factors[i]));
        if (i > 0) EXPECT_TRUE(g->right_weighted(r.factors[i - 1], r.factors[i]));
      }
      EXPECT_EQ(from_right_normal_form(g, r), x) << d;
    }
  }
}

TEST(NormalForm, FractionInvariants) {
  std::mt19937_64 rng(29);
  for (const char* d : kStructures) {
    auto g = structure(d);
    for (int it = 0; it < 150; ++it) {
      Element x = random_element(g, rng, rng() % 7);
      Fraction l = left_fraction(x), r = right_fraction(x);
      ASSERT_TRUE(l.denominator.is_positive() && l.numerator.is_positive());
      ASSERT_TRUE(r.denominator.is_positive() && r.numerator.is_positive());
      EXPECT_EQ(l.denominator.inverse() * l.numerator, x) << d;
      EXPECT_EQ(r.numerator * r.denominator.inverse(), x) << d;
      EXPECT_TRUE(meet_prefix(l.denominator, l.numerator).is_identity()) << d;
      EXPECT_TRUE(meet_suffix(r.denominator, r.numerator).is_identity()) << d;
      EXPECT_EQ(l.denominator.inf(), r.denominator.inf()) << d;
      EXPECT_EQ(l.denominator.sup(), r.denominator.sup()) << d;
      EXPECT_EQ(l.numerator.inf(), r.numerator.inf()) << d;
      EXPECT_EQ(l.numerator.sup(), r.numerator.sup()) << d;
      EXPECT_EQ(static_cast<long long>(mixed_word(x).size()), x.word_length()) << d;
    }
  }
}

TEST(NormalForm, LeftFractionMinimality) {
  std::mt19937_64 rng(31);
  auto g = structure("braid:classical:n=4");
  int tested = 0;
  for (int it = 0; it < 100; ++it) {
    Element x = random_element(g, rng, 1 + rng() % 5);
    Element dl = left_fraction(x).denominator;
    Element dr = right_fraction(x).denominator;
    for (int trial = 0; trial < 20; ++trial) {
      Element c = random_element(g, rng, rng() % 5, true);
      if (trial % 2 == 0) c = c.right_multiply_delta(std::max(0LL, -x.inf()));
      if ((c * x).is_positive()) {
        EXPECT_TRUE(suffix_le(dl, c));
        ++tested;
      }
      if ((x * c).is_positive()) EXPECT_TRUE(prefix_le(dr, c));
    }
  }
  EXPECT_GE(tested, 100);
}

TEST(NormalForm, PositiveMeetIsGreatestCommonPrefix) {
  std::mt19937_64 rng(37);
  auto g = structure("braid:classical:n=4");
  for (int it = 0; it < 200; ++it) {
    Element a = random_element(g, rng, rng() % 5, true);
    Element b = random_element(g, rng, rng() % 5, true);
    Element m = meet_prefix(a, b);
    EXPECT_TRUE(prefix_le(m, a));
    EXPECT_TRUE(prefix_le(m, b));
    Element ra = m.inverse() * a, rb = m.inverse() * b;
    for (Simple s : g->atoms())
      EXPECT_FALSE(prefix_le(Element::simple(g, s), ra) && prefix_le(Element::simple(g, s), rb));
  }
}

TEST(NormalForm, FreeAbelianThresholdForm) {
  std::mt19937_64 rng(41);
  for (int n = 1; n <= 5; ++n) {
    auto g = structure("zn:n=" + std::to_string(n));
    for (int it = 0; it < 1000 / 5; ++it) {
      std::vector<int> v(n);
      Element x(g);
      for (int i = 0; i < n; ++i) {
        v[i] = static_cast<int>(rng() % 13) - 6;
        std::string word = "s" + std::to_string(i + 1) + "^" + std::to_string(v[i]);
        x = x * parse_word(g, word);
      }
      const int lo = *std::min_element(v.begin(), v.end());
      const int hi = *std::max_element(v.begin(), v.end());
      EXPECT_EQ(x.inf(), lo);
      EXPECT_EQ(x.sup(), hi);
      for (int k = lo + 1; k <= hi; ++k) {
        Payload threshold(n);
        for (int i = 0; i < n; ++i) threshold[i] = v[i] >= k ? 1 : 0;
        EXPECT_EQ(g->payload(x.factors()[k - lo - 1]), threshold);
      }
    }
  }
}

TEST(NormalForm, WordLengthMatchesCayleyBfsInB3) {
  // BFS over Γ(B₃) with generators the nontrivial simples and their
  // inverses; vertices are identified through the free-group action.
  auto g = structure("braid:classical:n=3");
  std::vector<std::pair<Simple, int>> gens;
  for (Simple s : g->simples())
    if (s != g->identity()) {
      gens.push_back({s, 1});
      gens.push_back({s, -1});
    }
  std::map<std::vector<oracle::FreeWord>, int> dist;
  std::deque<std::pair<oracle::ArtinAction, std::vector<SignedSimple>>> queue;
  dist[oracle::ArtinAction(3).images()] = 0;
  queue.push_back({oracle::ArtinAction(3), {}});
  std::size_t checked = 0;
  while (!queue.empty()) {
    auto [act, word] = queue.front();
    queue.pop_front();
    const int d = dist[act.images()];
    EXPECT_EQ(normalize(g, word).word_length(), d);
    ++checked;
    if (d == 3) continue;
    for (auto [s, sign] : gens) {
      oracle::ArtinAction next = act;
      auto bw = oracle::braid_word(g->payload(s));
      if (sign > 0) {
        next.apply_word(bw);
      } else {
        for (auto r = bw.rbegin(); r != bw.rend(); ++r) next.apply(*r, -1);
      }
      if (dist.emplace(next.images(), d + 1).second) {
        auto w = word;
        w.push_back({s, sign});
        queue.push_back({next, w});
      }
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Words, ParseAndRender) {
  auto g = structure("braid:classical:n=3");
  Element x = parse_word(g, "D^-2 s1");
  EXPECT_EQ(x.inf(), -2);
  EXPECT_EQ(to_word(x), "D^-2 s1");
  EXPECT_EQ(to_word(Element(g)), "");
  EXPECT_EQ(to_word(parse_word(g, "s1 s2 s1")), "D");
  EXPECT_EQ(factor_names(parse_word(g, "s1 s2")), std::vector<std::string>{"s1 s2"});
  EXPECT_EQ(parse_word(g, "  s1   s2^+1 "), parse_word(g, "s1 s2"));
  EXPECT_EQ(parse_word(g, "s1^0"), Element(g));
}

TEST(Words, Errors) {
  auto g = structure("braid:classical:n=3");
  try {
    parse_word(g, "s1 s9");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown atom s9"), std::string::npos);
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_word(g, "s1^x"), ParseError);
  EXPECT_THROW(parse_word(g, "s1^"), ParseError);
  EXPECT_THROW(parse_word(g, "t1"), ParseError);
  EXPECT_THROW(parse_word(g, "s0"), ParseError);
}
