#include "doctest.h"
#include "framecert/retrieval.hpp"

using namespace framecert;

namespace {

Vec rvec(const std::vector<Rational>& entries) {
  Vec v;
  for (const Rational& e : entries) v.push_back(Scalar(e));
  return v;
}

Vec cvec(const std::vector<std::pair<Rational, Rational>>& entries) {
  Vec v;
  for (const auto& [re, im] : entries) v.push_back(Scalar(GaussianRational(re, im)));
  return v;
}

FrameSpec triple_frame() {
  return make_real_frame(2, {rvec({1, 0}), rvec({0, 1}), rvec({1, 1})});
}

FrameSpec onb2() { return make_real_frame(2, {rvec({1, 0}), rvec({0, 1})}); }

FrameSpec hadamard_pair() {
  return make_real_frame(2, {rvec({1, 1}), rvec({1, -1})});
}

FrameSpec shear_pair() {
  return make_real_frame(2, {rvec({1, 0}), rvec({1, 1})});
}

FrameSpec audit_frame() {
  return make_real_frame(3, {rvec({1, 0, 0}), rvec({0, 1, 0}), rvec({0, 0, 1}),
                             rvec({1, 1, 1}), rvec({1, -1, 1})});
}

}  // namespace

TEST_CASE("weakly_same_phase over the rationals") {
  PhasePredicateResult r =
      weakly_same_phase(rvec({1, 2, 0}), rvec({-1, -2, 5}));
  CHECK(r.same);
  CHECK(r.alpha == Scalar(Rational(-1)));
  CHECK(r.alpha_normalized);
  CHECK(r.common_support == std::vector<int>{0, 1});

  CHECK_FALSE(weakly_same_phase(rvec({1, 2}), rvec({1, -2})).same);

  // disjoint supports are vacuously aligned
  PhasePredicateResult d = weakly_same_phase(rvec({1, 0}), rvec({0, 1}));
  CHECK(d.same);
  CHECK(d.common_support.empty());

  CHECK_THROWS_AS(weakly_same_phase(rvec({1}), rvec({1, 2})), Error);
}

TEST_CASE("weakly_same_phase over the gaussian rationals") {
  // y = i x is a global phase: aligned
  Vec x = cvec({{1, 0}, {0, 1}});   // (1, i)
  Vec y = cvec({{0, 1}, {-1, 0}});  // (i, -1)
  PhasePredicateResult r = weakly_same_phase(x, y);
  CHECK(r.same);
  CHECK(r.alpha_normalized);
  CHECK(r.alpha.abs_squared_exact() == 1);
  CHECK(r.alpha == Scalar(GaussianRational(Rational(0), Rational(-1))));

  // a genuine sign flip on one coordinate is not
  CHECK_FALSE(weakly_same_phase(cvec({{1, 0}, {1, 0}}),
                                cvec({{1, 0}, {-1, 0}}))
                  .same);
}

TEST_CASE("pair_from_sigma builds and validates the equal-measurement pair") {
  FrameSpec f = onb2();
  CounterexamplePair p = pair_from_sigma(f, {0}, rvec({0, 1}), rvec({1, 0}));
  CHECK(vec_equal(p.x, rvec({Rational(1, 2), Rational(1, 2)})));
  CHECK(vec_equal(p.y, rvec({Rational(1, 2), Rational(-1, 2)})));
  CHECK(p.sigma == std::vector<int>{0});
  CHECK(equal_measurements(f, p.x, p.y));

  // u must be orthogonal to phi_sigma
  CHECK_THROWS_AS(pair_from_sigma(f, {0}, rvec({1, 1}), rvec({1, 0})), Error);
}

TEST_CASE("equal_measurements is exact") {
  FrameSpec f = triple_frame();
  CHECK(equal_measurements(f, rvec({1, 1}), rvec({-1, -1})));
  CHECK_FALSE(equal_measurements(f, rvec({1, 1}), rvec({1, -1})));
  FrameSpec b = onb2();
  CHECK(equal_measurements(b, rvec({1, 1}), rvec({1, -1})));
}

TEST_CASE("classify_pair flags") {
  FrameSpec b = onb2();
  PairFlags flags =
      classify_pair(b, rvec({Rational(1, 2), Rational(1, 2)}),
                    rvec({Rational(1, 2), Rational(-1, 2)}));
  CHECK_FALSE(flags.trivial);
  CHECK(flags.phase_violation);
  CHECK_FALSE(flags.norm_violation);  // equal norms
  CHECK(flags.weak_violation);

  PairFlags trivial = classify_pair(b, rvec({1, 2}), rvec({-1, -2}));
  CHECK(trivial.trivial);
  CHECK_FALSE(trivial.phase_violation);

  // shear pair: same measurements, different norms
  FrameSpec s = shear_pair();
  PairFlags norm = classify_pair(s, rvec({Rational(1, 2), 0}),
                                 rvec({Rational(1, 2), -1}));
  CHECK(norm.phase_violation);
  CHECK(norm.norm_violation);
}

TEST_CASE("phase retrieval verdicts on small frozen frames") {
  CHECK(certify_phase_retrieval(triple_frame()).outcome == Outcome::Yes);

  Verdict onb = certify_phase_retrieval(onb2());
  CHECK(onb.outcome == Outcome::No);
  REQUIRE(onb.pair.has_value());
  CHECK(equal_measurements(onb2(), onb.pair->x, onb.pair->y));
  PairFlags flags = classify_pair(onb2(), onb.pair->x, onb.pair->y);
  CHECK_FALSE(flags.trivial);
  CHECK(flags.phase_violation);

  Verdict audit = certify_phase_retrieval(audit_frame());
  CHECK(audit.outcome == Outcome::No);
  REQUIRE(audit.witness_subset.has_value());
  CHECK(*audit.witness_subset == std::vector<int>{0, 2});
  REQUIRE(audit.pair.has_value());
  CHECK(vec_equal(audit.pair->u, rvec({0, 1, 0})));
  CHECK(vec_equal(audit.pair->v, rvec({1, 0, -1})));
  CHECK(vec_equal(audit.pair->x,
                  rvec({Rational(1, 2), Rational(1, 2), Rational(-1, 2)})));
  CHECK(vec_equal(audit.pair->y,
                  rvec({Rational(1, 2), Rational(-1, 2), Rational(-1, 2)})));
  CHECK(equal_measurements(audit_frame(), audit.pair->x, audit.pair->y));
}

TEST_CASE("norm retrieval for real frames") {
  CHECK(certify_norm_retrieval_real(onb2()).outcome == Outcome::Yes);
  CHECK(certify_norm_retrieval_real(hadamard_pair()).outcome == Outcome::Yes);
  CHECK(certify_norm_retrieval_real(triple_frame()).outcome == Outcome::Yes);

  Verdict v = certify_norm_retrieval_real(shear_pair());
  CHECK(v.outcome == Outcome::No);
  REQUIRE(v.pair.has_value());
  CHECK(equal_measurements(shear_pair(), v.pair->x, v.pair->y));
  CHECK(norm_squared_exact(v.pair->x) != norm_squared_exact(v.pair->y));

  // complex inputs are declined, not certified
  FrameSpec complex_onb = make_complex_frame(
      2, {cvec({{1, 0}, {0, 0}}), cvec({{0, 0}, {1, 0}})});
  CHECK(certify_norm_retrieval_real(complex_onb).outcome == Outcome::Unknown);
}

TEST_CASE("weak phase retrieval verdicts") {
  // two generic vectors in R^2 determine signals up to a global sign
  CHECK(decide_weak_phase(hadamard_pair()).outcome == Outcome::Yes);
  CHECK(certify_phase_retrieval(hadamard_pair()).outcome == Outcome::No);

  CHECK(decide_weak_phase(triple_frame()).outcome == Outcome::Yes);

  Verdict onb = decide_weak_phase(onb2());
  CHECK(onb.outcome == Outcome::No);
  REQUIRE(onb.pair.has_value());
  CHECK(equal_measurements(onb2(), onb.pair->x, onb.pair->y));
  CHECK_FALSE(weakly_same_phase(onb.pair->x, onb.pair->y).same);
  CHECK(onb.pair->kind == PairKind::WeakPhase);

  Verdict audit = decide_weak_phase(audit_frame());
  CHECK(audit.outcome == Outcome::No);
  REQUIRE(audit.pair.has_value());
  CHECK(equal_measurements(audit_frame(), audit.pair->x, audit.pair->y));
  CHECK_FALSE(weakly_same_phase(audit.pair->x, audit.pair->y).same);
}

TEST_CASE("lift: disjoint-support pair becomes a weak-phase violation") {
  FrameSpec f = hadamard_pair();
  Verdict v = certify_phase_retrieval(f);
  REQUIRE(v.pair.has_value());
  // the pair splits onto disjoint supports
  CHECK(vec_equal(v.pair->x, rvec({1, 0})));
  CHECK(vec_equal(v.pair->y, rvec({0, 1})));

  LiftResult lift = lift_counterexample_operator(f, *v.pair);
  CHECK(lift.case_tag == 1);
  CHECK(lift.op.invertible);
  CHECK(equal_measurements(lift.transformed, lift.pair.x, lift.pair.y));
  CHECK_FALSE(weakly_same_phase(lift.pair.x, lift.pair.y).same);
  CHECK_FALSE(vec_is_zero(lift.pair.x));
  CHECK_FALSE(vec_is_zero(lift.pair.y));
}

TEST_CASE("lift: shared-support pair goes through the phase-aligned branch") {
  FrameSpec f = shear_pair();
  Verdict v = certify_phase_retrieval(f);
  REQUIRE(v.pair.has_value());
  CHECK(vec_equal(v.pair->x, rvec({Rational(1, 2), 0})));
  CHECK(vec_equal(v.pair->y, rvec({Rational(1, 2), -1})));
  REQUIRE(weakly_same_phase(v.pair->x, v.pair->y).same);

  LiftResult lift = lift_counterexample_operator(f, *v.pair);
  CHECK(lift.case_tag == 2);
  CHECK(lift.op.invertible);
  CHECK(equal_measurements(lift.transformed, lift.pair.x, lift.pair.y));
  CHECK_FALSE(weakly_same_phase(lift.pair.x, lift.pair.y).same);
}

TEST_CASE("lift: an already-violating pair passes through unchanged") {
  FrameSpec f = onb2();
  Verdict v = certify_phase_retrieval(f);
  REQUIRE(v.pair.has_value());
  REQUIRE_FALSE(weakly_same_phase(v.pair->x, v.pair->y).same);
  LiftResult lift = lift_counterexample_operator(f, *v.pair);
  CHECK(lift.case_tag == 0);
  CHECK(lift.op.mat.is_identity());
  CHECK(equal_measurements(lift.transformed, lift.pair.x, lift.pair.y));
}

TEST_CASE("project_frame carries gram data for a two-dimensional slice") {
  FrameSpec f = triple_frame();
  ProjectedFrame p = project_frame(f, rvec({1, 0}), rvec({1, 1}));
  CHECK(p.gram1 == 1);
  CHECK(p.gram2 == 1);
  CHECK(vec_equal(p.w1, rvec({1, 0})));
  CHECK(vec_equal(p.w2, rvec({0, 1})));
  REQUIRE(p.frame.count() == 3);
  CHECK(vec_equal(p.frame.vectors[0], rvec({1, 0})));
  CHECK(vec_equal(p.frame.vectors[1], rvec({0, 1})));
  CHECK(vec_equal(p.frame.vectors[2], rvec({1, 1})));
}
