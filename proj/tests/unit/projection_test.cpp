#include <gtest/gtest.h>

#include "garside/axis.hpp"
#include "garside/error.hpp"
#include "garside/projection.hpp"
#include "garside/rigidity.hpp"

#include <set>
#include "oracles/helpers.hpp"

using namespace garside;
using namespace testing_support;

namespace {

bool predicate(const AxisContext& ctx, long long m, const Element& h) {
  return prefix_le(ctx.x(), VertexX(power(ctx.x(), m) * h).rep());
}

// λ by linear scan for the false→true transition of the predicate.
long long lambda_scan(const AxisContext& ctx, const Element& h, long long range = 40) {
  for (long long m = -range; m < range; ++m)
    if (!predicate(ctx, m, h) && predicate(ctx, m + 1, h)) return -m;
  throw std::logic_error("no transition");
}

}  // namespace

TEST(Axis, RejectsInvalidInputs) {
  auto b3 = structure("braid:classical:n=3");
  EXPECT_THROW(AxisContext(parse_word(b3, "s1 s2")), InvalidInput);
  EXPECT_THROW(AxisContext(parse_word(b3, "D s1")), InvalidInput);
  EXPECT_THROW(AxisContext(parse_word(b3, "D^2")), InvalidInput);
  EXPECT_THROW(AxisContext(parse_word(b3, "s1"), 0), InvalidInput);
  auto z3 = structure("zn:n=3");
  try {
    AxisContext(parse_word(z3, "s1"));
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("Δ-pure"), std::string::npos);
  }
}

TEST(Axis, PowersCached) {
  auto b3 = structure("braid:classical:n=3");
  AxisContext ctx(parse_word(b3, "s1"));
  for (long long k = -12; k <= 12; ++k) EXPECT_EQ(ctx.power(k), power(ctx.x(), k));
}

TEST(Projection, LambdaOnAxis) {
  auto b3 = structure("braid:classical:n=3");
  AxisContext ctx(parse_word(b3, "s1"));
  for (long long k = -10; k <= 10; ++k) {
    const ProjectionResult p = project(ctx, ctx.power(k));
    EXPECT_EQ(p.lambda, k);
    EXPECT_EQ(p.vertex, ctx.axis_vertex(k));
  }
}

TEST(Projection, LambdaOfOtherAtom) {
  auto b3 = structure("braid:classical:n=3");
  AxisContext ctx(parse_word(b3, "s1"));
  const Element s2 = parse_word(b3, "s2");
  EXPECT_FALSE(prefix_le(ctx.x(), s2));
  EXPECT_TRUE(prefix_le(ctx.x(), VertexX(ctx.x() * s2).rep()));
  const ProjectionResult p = project(ctx, s2);
  EXPECT_EQ(p.lambda, 0);
  EXPECT_TRUE(p.vertex.is_base());
}

TEST(Projection, MatchesLinearScanAndBrackets) {
  for (const char* desc : {"braid:classical:n=3", "braid:classical:n=4", "braid:dual:n=4"}) {
    auto g = structure(desc);
    const Element x = g->descriptor() == "braid:classical:n=4" ? parse_word(g, "s2 s1 s3 s2")
                                                                : parse_word(g, "s1");
    if (!is_right_rigid(x)) continue;
    AxisContext ctx(x);
    std::mt19937_64 rng(23);
    for (int it = 0; it < 150; ++it) {
      const Element h = random_element(g, rng, rng() % 7);
      const ProjectionResult p = project(ctx, h);
      EXPECT_EQ(p.lambda, lambda_scan(ctx, h)) << desc << " " << to_word(h);
      EXPECT_FALSE(predicate(ctx, -p.lambda, h));
      EXPECT_TRUE(predicate(ctx, -p.lambda + 1, h));
      EXPECT_EQ(p.bracket_hi, p.bracket_lo + 1);
    }
  }
}

TEST(Projection, DeltaInvarianceAndEquivariance) {
  auto b3 = structure("braid:classical:n=3");
  AxisContext ctx(parse_word(b3, "s1"));
  std::mt19937_64 rng(29);
  for (int it = 0; it < 200; ++it) {
    const Element h = random_element(b3, rng, rng() % 7);
    const long long l = lambda(ctx, h);
    const long long t = static_cast<long long>(rng() % 9) - 4;
    EXPECT_EQ(lambda(ctx, h.right_multiply_delta(t)), l);
    const long long k = static_cast<long long>(rng() % 7) - 3;
    EXPECT_EQ(lambda(ctx, ctx.power(k) * h), l + k);
  }
}

TEST(Projection, LipschitzOnEdges) {
  auto b4 = structure("braid:classical:n=4");
  AxisContext ctx(parse_word(b4, "s2 s1 s3 s2"));
  std::mt19937_64 rng(31);
  for (int it = 0; it < 200; ++it) {
    const VertexX v(random_element(b4, rng, rng() % 6));
    const long long l = lambda(ctx, v.rep());
    for (const VertexX& u : neighbors_x(v)) {
      EXPECT_LE(std::llabs(lambda(ctx, u.rep()) - l), 1);
    }
  }
}

TEST(Projection, AxisDistanceMatchesDirectMinimum) {
  auto b3 = structure("braid:classical:n=3");
  AxisContext ctx(parse_word(b3, "s1"));
  std::mt19937_64 rng(37);
  for (int it = 0; it < 100; ++it) {
    const VertexX v(random_element(b3, rng, rng() % 6));
    const AxisDistance ad = axis_distance(ctx, v, 8);
    long long best = -1;
    for (long long k = -40; k <= 40; ++k) {
      const long long d = dist_x(v, ctx.axis_vertex(k));
      if (best < 0 || d < best) best = d;
    }
    EXPECT_EQ(ad.distance, best);
    EXPECT_EQ(dist_x(v, ctx.axis_vertex(ad.nearest_power)), best);
  }
}

TEST(Projection, GeodesicPassesNearProjection) {
  auto b3 = structure("braid:classical:n=3");
  AxisContext ctx(parse_word(b3, "s1"));
  const VertexX h(parse_word(b3, "s2"));
  const DiagnosticsOptions opts{200, 6, 3, 8, 3};
  const ScanReport r = projection_diagnostics(ctx, opts);
  const long long d_hat = r.constants["D_hat"].get<long long>();
  long long best = -1;
  for (const VertexX& v : preferred_path(ctx.axis_vertex(3), h)) {
    const long long d = dist_x(v, VertexX::base(b3));
    if (best < 0 || d < best) best = d;
  }
  EXPECT_LE(best, d_hat);
}

TEST(Projection, DiagnosticsClean) {
  auto b3 = structure("braid:classical:n=3");
  AxisContext ctx(parse_word(b3, "s1"));
  DiagnosticsOptions opts;
  opts.samples = 300;
  const ScanReport r = projection_diagnostics(ctx, opts);
  EXPECT_TRUE(r.ok()) << r.to_json().dump(2);
  EXPECT_LE(r.details["max_lambda_jump"].get<long long>(), 1);
  EXPECT_LE(r.details["closest_point_gap"].get<long long>(),
            2 * r.constants["D_hat"].get<long long>());
  EXPECT_EQ(r.to_json().dump(), projection_diagnostics(ctx, opts).to_json().dump());
}

TEST(Projection, InnerLipschitzLaw) {
  auto b3 = structure("braid:classical:n=3");
  AxisContext ctx(parse_word(b3, "s1"));
  const ScanReport r = inner_lipschitz_check(ctx, 3);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.details["pairs_checked"].get<long long>(), 0);
}

TEST(Projection, PositiveConeMatchesEnumeration) {
  // Distinct positive inf-0 elements reachable as products of ≤ k proper simples.
  auto b3 = structure("braid:classical:n=3");
  const auto cone = positive_cone(b3, 2);
  std::set<Element> expect;
  for (Simple a : b3->simples())
    for (Simple b : b3->simples()) {
      Element e = Element::simple(b3, a) * Element::simple(b3, b);
      if (e.inf() == 0) expect.insert(e);
    }
  EXPECT_EQ(std::set<Element>(cone.begin(), cone.end()), expect);
}

TEST(Projection, ContractionSmallWindow) {
  auto b3 = structure("braid:classical:n=3");
  AxisContext ctx(parse_word(b3, "s1"));
  ContractionOptions opts;
  opts.radius = 2;
  opts.window = 6;
  const ScanReport r = contraction_scan(ctx, opts);
  EXPECT_TRUE(r.ok());
  ASSERT_FALSE(r.witnesses.empty());
  const auto& w = r.witnesses.front();
  const VertexX a(parse_word(b3, w["a"].get<std::string>()));
  const VertexX b(parse_word(b3, w["b"].get<std::string>()));
  EXPECT_EQ(std::llabs(lambda(ctx, a.rep()) - lambda(ctx, b.rep())) * ctx.ell(),
            w["value"].get<long long>());
}

TEST(Projection, ConstrictionOnAxisEndpoints) {
  auto b3 = structure("braid:classical:n=3");
  AxisContext ctx(parse_word(b3, "s1"));
  ConstrictionOptions opts;
  opts.samples = 30;
  const ScanReport r = constriction_check(ctx, opts);
  EXPECT_TRUE(r.constants["C_hat"].is_number());
  EXPECT_FALSE(r.witnesses.empty());
}
