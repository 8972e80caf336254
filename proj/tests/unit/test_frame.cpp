#include "doctest.h"
#include "framecert/frame.hpp"

using namespace framecert;

namespace {

Vec rvec(const std::vector<Rational>& entries) {
  Vec v;
  for (const Rational& e : entries) v.push_back(Scalar(e));
  return v;
}

FrameSpec triple_frame() {
  return make_real_frame(2, {rvec({1, 0}), rvec({0, 1}), rvec({1, 1})});
}

// basis of R^3 extended by (1,1,1) and (1,-1,1)
FrameSpec audit_frame() {
  return make_real_frame(3, {rvec({1, 0, 0}), rvec({0, 1, 0}), rvec({0, 0, 1}),
                             rvec({1, 1, 1}), rvec({1, -1, 1})});
}

}  // namespace

TEST_CASE("validate_frame flags spanning and rejects bad input") {
  RawFrame raw;
  raw.dim = 2;
  raw.vectors = {rvec({1, 0})};
  FrameSpec f = validate_frame(raw);
  CHECK_FALSE(f.spans);
  CHECK(f.count() == 1);

  raw.vectors = {rvec({1, 0}), rvec({0, 1})};
  CHECK(validate_frame(raw).spans);

  RawFrame bad;
  bad.dim = 2;
  bad.vectors = {rvec({1, 0, 0})};  // wrong length
  CHECK_THROWS_AS(validate_frame(bad), Error);

  RawFrame empty;
  empty.dim = 2;
  CHECK_THROWS_AS(validate_frame(empty), Error);
}

TEST_CASE("gram and frame operator of the triple frame") {
  FrameSpec f = triple_frame();
  Matrix g = gram_matrix(f);
  Matrix s = frame_operator(f);
  Matrix g_expect = Matrix::from_rows(
      {rvec({1, 0, 1}), rvec({0, 1, 1}), rvec({1, 1, 2})});
  Matrix s_expect = Matrix::from_rows({rvec({2, 1}), rvec({1, 2})});
  CHECK(g == g_expect);
  CHECK(s == s_expect);
  CHECK(excess(f) == 1);
}

TEST_CASE("canonical dual of the triple frame is frozen") {
  FrameSpec f = triple_frame();
  DualFrame d = canonical_dual(f);
  REQUIRE(d.vectors.size() == 3);
  CHECK(vec_equal(d.vectors[0], rvec({Rational(2, 3), Rational(-1, 3)})));
  CHECK(vec_equal(d.vectors[1], rvec({Rational(-1, 3), Rational(2, 3)})));
  CHECK(vec_equal(d.vectors[2], rvec({Rational(1, 3), Rational(1, 3)})));
  CHECK(d.provenance == DualProvenance::Canonical);
  CHECK(verify_dual(f, d.vectors).ok);
  CHECK(is_dual_pair(f, d));
}

TEST_CASE("canonical dual of the five-vector audit family is frozen") {
  FrameSpec f = audit_frame();
  DualFrame d = canonical_dual(f);
  REQUIRE(d.vectors.size() == 5);
  CHECK(vec_equal(d.vectors[0], rvec({Rational(3, 5), 0, Rational(-2, 5)})));
  CHECK(vec_equal(d.vectors[1], rvec({0, Rational(1, 3), 0})));
  CHECK(vec_equal(d.vectors[2], rvec({Rational(-2, 5), 0, Rational(3, 5)})));
  CHECK(vec_equal(d.vectors[3],
                  rvec({Rational(1, 5), Rational(1, 3), Rational(1, 5)})));
  CHECK(vec_equal(d.vectors[4],
                  rvec({Rational(1, 5), Rational(-1, 3), Rational(1, 5)})));
  CHECK(verify_dual(f, d.vectors).ok);
}

TEST_CASE("verify_dual rejects a perturbed family with a residual") {
  FrameSpec f = triple_frame();
  DualFrame d = canonical_dual(f);
  std::vector<Vec> wrong = d.vectors;
  wrong[0][0] = wrong[0][0] + Scalar(Rational(1, 7));
  DualCheck check = verify_dual(f, wrong);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(check.residual.is_zero());
}

TEST_CASE("canonical dual requires a spanning family") {
  FrameSpec f = make_real_frame(2, {rvec({1, 0}), rvec({2, 0})});
  CHECK_FALSE(f.spans);
  CHECK_THROWS_AS(canonical_dual(f), Error);
  CHECK_THROWS_AS(excess(f), Error);
}

TEST_CASE("operators transport frames and duals") {
  FrameSpec f = triple_frame();
  Matrix t = Matrix::from_rows({rvec({2, 1}), rvec({1, 1})});
  OperatorT op = OperatorT::from_matrix(t);
  CHECK(op.invertible);
  CHECK(op.det == Scalar(Rational(1)));
  CHECK_FALSE(op.unitary);
  CHECK_FALSE(op.diagonal);

  FrameSpec tf = apply_operator(op, f);
  CHECK(tf.dim == 2);
  CHECK(vec_equal(tf.vectors[2], rvec({3, 2})));

  // duals transport through the inverse adjoint
  DualFrame d = canonical_dual(f);
  Matrix t_inv_adj = inverse_exact(t.conjugate_transpose());
  std::vector<Vec> moved;
  for (const Vec& v : d.vectors) moved.push_back(t_inv_adj.apply(v));
  CHECK(verify_dual(tf, moved).ok);

  OperatorT sing = OperatorT::from_matrix(
      Matrix::from_rows({rvec({1, 2}), rvec({2, 4})}));
  CHECK_FALSE(sing.invertible);
  CHECK_THROWS_AS(apply_operator(sing, f), Error);
}

TEST_CASE("standard_form maps a leading independent set to the basis") {
  FrameSpec f = make_real_frame(
      2, {rvec({2, 0}), rvec({4, 0}), rvec({0, 3}), rvec({2, 3})});
  StandardFormResult r = standard_form(f);
  CHECK(vec_equal(r.frame.vectors[0], rvec({1, 0})));
  CHECK(vec_equal(r.frame.vectors[1], rvec({0, 1})));
  CHECK(r.transform.invertible);
  // the dependent vector (4,0) was pushed behind the independent pair
  CHECK(vec_equal(r.frame.vectors[2], rvec({2, 0})));
  CHECK(vec_equal(r.frame.vectors[3], rvec({1, 1})));
}

TEST_CASE("frame bounds: tight for the basis, 1..3 for the triple frame") {
  FrameBounds onb = frame_bounds(make_real_frame(2, {rvec({1, 0}), rvec({0, 1})}));
  CHECK(onb.lower == doctest::Approx(1.0));
  CHECK(onb.upper == doctest::Approx(1.0));
  CHECK(onb.tight);

  FrameBounds tri = frame_bounds(triple_frame());
  CHECK(tri.lower == doctest::Approx(1.0));
  CHECK(tri.upper == doctest::Approx(3.0));
  CHECK_FALSE(tri.tight);
}

TEST_CASE("complex frames validate and build synthesis matrices") {
  Vec v1{Scalar(GaussianRational(Rational(1), Rational(0))),
         Scalar(GaussianRational(Rational(0), Rational(0)))};
  Vec v2{Scalar(GaussianRational(Rational(0), Rational(0))),
         Scalar(GaussianRational(Rational(0), Rational(1)))};
  FrameSpec f = make_complex_frame(2, {v1, v2});
  CHECK(f.spans);
  CHECK(f.scalar_kind() == ScalarKind::Gaussian);
  Matrix synth = f.synthesis();
  CHECK(synth.rows() == 2);
  CHECK(synth.cols() == 2);
  CHECK(synth.at(1, 1) == Scalar(GaussianRational(Rational(0), Rational(1))));
  // unit-norm vectors with identity frame operator are self-dual
  DualFrame d = canonical_dual(f);
  CHECK(vec_equal(d.vectors[0], v1));
  CHECK(vec_equal(d.vectors[1], v2));
}
