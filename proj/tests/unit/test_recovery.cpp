#include <cmath>

#include "doctest.h"
#include "framecert/recovery.hpp"

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

Magnitudes mags(const std::vector<Rational>& squared) {
  Magnitudes m;
  m.squared = squared;
  return m;
}

}  // namespace

TEST_CASE("squarefree decomposition") {
  BigInt core, root;
  squarefree_decompose(72, &core, &root);
  CHECK(core == 2);
  CHECK(root == 6);
  squarefree_decompose(49, &core, &root);
  CHECK(core == 1);
  CHECK(root == 7);
  squarefree_decompose(1, &core, &root);
  CHECK(core == 1);
  CHECK(root == 1);
  squarefree_decompose(12, &core, &root);
  CHECK(core == 3);
  CHECK(root == 2);
  // needs more than naive trial division: 5 * 1000003^2
  squarefree_decompose(BigInt("5000030000045"), &core, &root);
  CHECK(core == 5);
  CHECK(root == 1000003);
  CHECK_THROWS_AS(squarefree_decompose(0, &core, &root), Error);
  CHECK_THROWS_AS(squarefree_decompose(-4, &core, &root), Error);
}

TEST_CASE("measure produces exact squared magnitudes") {
  Magnitudes m = measure(triple_frame(), rvec({1, 1}));
  CHECK(m.squared == std::vector<Rational>{1, 1, 4});
  Magnitudes q = measure(triple_frame(), rvec({Rational(3, 5), Rational(-2, 7)}));
  CHECK(q.squared == std::vector<Rational>{Rational(9, 25), Rational(4, 49),
                                           Rational(121, 1225)});
}

TEST_CASE("recover a rational signal uniquely from a deciding frame") {
  FrameSpec f = triple_frame();
  RecoveryResult r = recover_real(f, mags({1, 1, 4}));
  CHECK(r.status == RecoveryStatus::UniqueUpToSign);
  REQUIRE(r.candidates.size() == 1);
  const RadicalVector& x = r.candidates[0];
  CHECK(x.is_rational());
  REQUIRE(x.parts.count(BigInt(1)) == 1);
  CHECK(x.parts.at(BigInt(1)) == std::vector<Rational>{1, 1});
  CHECK(r.residual == doctest::Approx(0.0));
}

TEST_CASE("recover an irrational signal exactly") {
  // x = sqrt(2) * (1, 1): squared measurements (2, 2, 8)
  RecoveryResult r = recover_real(triple_frame(), mags({2, 2, 8}));
  CHECK(r.status == RecoveryStatus::UniqueUpToSign);
  REQUIRE(r.candidates.size() == 1);
  const RadicalVector& x = r.candidates[0];
  CHECK_FALSE(x.is_rational());
  REQUIRE(x.parts.count(BigInt(2)) == 1);
  CHECK(x.parts.at(BigInt(2)) == std::vector<Rational>{1, 1});
  std::vector<double> approx = x.to_doubles();
  CHECK(approx[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(approx[1] == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("recover flags inconsistent magnitudes") {
  RecoveryResult r = recover_real(triple_frame(), mags({1, 1, 3}));
  CHECK(r.status == RecoveryStatus::Infeasible);
  CHECK(r.candidates.empty());
}

TEST_CASE("recover reports ambiguity for non-deciding frames") {
  FrameSpec onb = make_real_frame(2, {rvec({1, 0}), rvec({0, 1})});
  RecoveryResult r = recover_real(onb, mags({1, 1}));
  CHECK(r.status == RecoveryStatus::Ambiguous);
  REQUIRE(r.candidates.size() == 2);
  CHECK(r.candidates[0].parts.at(BigInt(1)) == std::vector<Rational>{1, 1});
  CHECK(r.candidates[1].parts.at(BigInt(1)) == std::vector<Rational>{1, -1});
}

TEST_CASE("recover the zero signal") {
  RecoveryResult r = recover_real(triple_frame(), mags({0, 0, 0}));
  CHECK(r.status == RecoveryStatus::UniqueUpToSign);
  REQUIRE(r.candidates.size() == 1);
  CHECK(r.candidates[0].is_zero());
}

TEST_CASE("recover round trips measure for random rational signals") {
  FrameSpec f = triple_frame();
  std::vector<Vec> signals = {
      rvec({Rational(3, 5), Rational(-2, 7)}),
      rvec({Rational(-1, 2), Rational(-1, 3)}),
      rvec({0, Rational(5, 4)}),
      rvec({Rational(7, 3), 0}),
  };
  for (const Vec& x : signals) {
    RecoveryResult r = recover_real(f, measure(f, x));
    REQUIRE(r.status == RecoveryStatus::UniqueUpToSign);
    REQUIRE(r.candidates.size() == 1);
    const std::vector<Rational>& coeffs = r.candidates[0].parts.at(BigInt(1));
    std::vector<Rational> plain, negated;
    for (const Scalar& c : x) {
      plain.push_back(c.rational());
      negated.push_back(-c.rational());
    }
    const bool matches = coeffs == plain || coeffs == negated;
    CHECK(matches);
  }
}

TEST_CASE("recover input validation") {
  FrameSpec f = triple_frame();
  CHECK_THROWS_AS(recover_real(f, mags({1, 1})), Error);  // length mismatch
  CHECK_THROWS_AS(recover_real(f, mags({-1, 1, 1})), Error);  // negative square

  FrameSpec non_spanning = make_real_frame(2, {rvec({1, 0}), rvec({2, 0})});
  CHECK_THROWS_AS(recover_real(non_spanning, mags({1, 4})), Error);

  RawFrame raw;
  raw.dim = 1;
  raw.mode = ModeTag::Float;
  raw.vectors = {Vec{Scalar(1.0)}};
  CHECK_THROWS_AS(recover_real(validate_frame(raw), mags({1})), Error);
}

TEST_CASE("status names are stable") {
  CHECK(std::string(recovery_status_name(RecoveryStatus::UniqueUpToSign)) ==
        "unique-up-to-sign");
  CHECK(std::string(recovery_status_name(RecoveryStatus::Ambiguous)) ==
        "ambiguous");
  CHECK(std::string(recovery_status_name(RecoveryStatus::Infeasible)) ==
        "infeasible");
}
