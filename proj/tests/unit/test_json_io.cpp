#include "doctest.h"
#include "framecert/json_io.hpp"

using namespace framecert;

namespace {

Vec rvec(const std::vector<Rational>& entries) {
  Vec v;
  for (const Rational& e : entries) v.push_back(Scalar(e));
  return v;
}

}  // namespace

TEST_CASE("real exact frames round trip through JSON") {
  Json j = Json::parse(R"({
    "dim": 2,
    "field": "real",
    "mode": "exact",
    "vectors": [["1", "0"], [0, 1], ["1/2", "-2/3"]]
  })");
  FrameSpec f = frame_from_json(j);
  CHECK(f.dim == 2);
  CHECK(f.field == FieldTag::Real);
  CHECK(f.exact());
  CHECK(f.spans);
  CHECK(vec_equal(f.vectors[2], rvec({Rational(1, 2), Rational(-2, 3)})));

  Json out = frame_to_json(f);
  FrameSpec again = frame_from_json(out);
  CHECK(again.dim == f.dim);
  for (int i = 0; i < f.count(); ++i)
    CHECK(vec_equal(again.vectors[i], f.vectors[i]));
}

TEST_CASE("complex exact frames round trip through JSON") {
  Json j = Json::parse(R"({
    "dim": 2,
    "field": "complex",
    "mode": "exact",
    "vectors": [[{"re": "1", "im": "0"}, {"re": "0", "im": "0"}],
                [{"re": "0", "im": "1"}, "1/3"]]
  })");
  FrameSpec f = frame_from_json(j);
  CHECK(f.field == FieldTag::Complex);
  CHECK(f.scalar_kind() == ScalarKind::Gaussian);
  CHECK(f.vectors[1][0] ==
        Scalar(GaussianRational(Rational(0), Rational(1))));
  // bare rationals promote to gaussian entries
  CHECK(f.vectors[1][1] ==
        Scalar(GaussianRational(Rational(1, 3), Rational(0))));

  FrameSpec again = frame_from_json(frame_to_json(f));
  for (int i = 0; i < f.count(); ++i)
    CHECK(vec_equal(again.vectors[i], f.vectors[i]));
}

TEST_CASE("float frames parse numeric entries") {
  Json j = Json::parse(R"({
    "dim": 2,
    "field": "real",
    "mode": "float",
    "vectors": [[1.5, 0.0], [0.25, -2.0]]
  })");
  FrameSpec f = frame_from_json(j);
  CHECK_FALSE(f.exact());
  CHECK(f.scalar_kind() == ScalarKind::Float64);
  CHECK(f.vectors[0][0].float64() == doctest::Approx(1.5));
}

TEST_CASE("malformed frame JSON is rejected with a clear error") {
  CHECK_THROWS_AS(frame_from_json(Json::parse("[1,2]")), Error);
  CHECK_THROWS_AS(frame_from_json(Json::parse(R"({"dim": 2})")), Error);
  CHECK_THROWS_AS(frame_from_json(Json::parse(
                      R"({"dim": 2, "vectors": []})")),
                  Error);
  // non-integer numeric literal in exact mode
  CHECK_THROWS_AS(frame_from_json(Json::parse(
                      R"({"dim": 1, "vectors": [[0.5]]})")),
                  Error);
  // complex entry in a real frame
  CHECK_THROWS_AS(frame_from_json(Json::parse(
                      R"({"dim": 1, "vectors": [[{"re": "1", "im": "0"}]]})")),
                  Error);
  // bad field tag
  CHECK_THROWS_AS(frame_from_json(Json::parse(
                      R"({"dim": 1, "field": "quaternion", "vectors": [[1]]})")),
                  Error);
  // vector length mismatch surfaces through validation
  CHECK_THROWS_AS(frame_from_json(Json::parse(
                      R"({"dim": 2, "vectors": [[1, 0, 0]]})")),
                  Error);
}

TEST_CASE("magnitudes parse and serialize") {
  Magnitudes m = magnitudes_from_json(
      Json::parse(R"({"squared": ["1/4", 2, "0"]})"));
  CHECK(m.squared == std::vector<Rational>{Rational(1, 4), 2, 0});
  Json j = magnitudes_to_json(m);
  CHECK(j["squared"][0] == "1/4");
  CHECK(j["squared"][1] == "2");
  CHECK_THROWS_AS(magnitudes_from_json(Json::parse(R"({"squared": []})")),
                  Error);
  CHECK_THROWS_AS(magnitudes_from_json(Json::parse(R"({})")), Error);
}

TEST_CASE("verdict serialization uses 1-based witnesses and string seeds") {
  Verdict v = Verdict::no();
  v.witness_subset = std::vector<int>{0, 2};
  v.reason = "test reason";
  Budget b;
  b.seed = 18446744073709551615ull;  // would overflow a double
  b.iterations = 42;
  v.budget = b;
  Json j = verdict_to_json(v);
  CHECK(j["outcome"] == "no");
  CHECK(j["witness_subset"] == Json::array({1, 3}));
  CHECK(j["reason"] == "test reason");
  REQUIRE(j["budget"]["seed"].is_string());
  CHECK(j["budget"]["seed"] == "18446744073709551615");
  CHECK(j["budget"]["iterations"] == 42);
}

TEST_CASE("scalar serialization forms") {
  CHECK(scalar_to_json(Scalar(Rational(-7, 3))) == "-7/3");
  Json g = scalar_to_json(Scalar(GaussianRational(Rational(1, 2), Rational(-1))));
  CHECK(g["re"] == "1/2");
  CHECK(g["im"] == "-1");
  Json f = scalar_to_json(Scalar(0.25));
  CHECK(f.is_number());
  CHECK(f.get<double>() == doctest::Approx(0.25));
}

TEST_CASE("hyperplane serialization renders readable equations") {
  AffineHyperplane h;
  h.subset = {0, 1};
  h.normal = {Rational(1), Rational(1)};
  h.offset = Rational(-1, 3);
  Json j = hyperplane_to_json(h, {"x", "y"});
  CHECK(j["subset"] == Json::array({1, 2}));
  CHECK(j["offset"] == "-1/3");
  CHECK(j["equation"] == "x + y - 1/3 = 0");

  AffineHyperplane deg;
  deg.subset = {1, 2};
  deg.degenerate = true;
  Json dj = hyperplane_to_json(deg);
  CHECK(dj["degenerate"] == true);
}

TEST_CASE("input digests are stable fingerprints") {
  CHECK(input_digest("") == "fnv1a:cbf29ce484222325");
  CHECK(input_digest("abc") == "fnv1a:e71fa2190541574b");
  CHECK(input_digest("{\"dim\": 2}") == "fnv1a:8d785b645d2f08eb");
  CHECK(input_digest("abc") != input_digest("abd"));
}

TEST_CASE("radical vectors serialize terms, display text, and approximations") {
  FrameSpec f = make_real_frame(
      2, {rvec({1, 0}), rvec({0, 1}), rvec({1, 1})});
  Magnitudes m;
  m.squared = {2, 2, 8};
  RecoveryResult r = recover_real(f, m);
  REQUIRE(r.status == RecoveryStatus::UniqueUpToSign);
  Json j = recovery_to_json(r);
  CHECK(j["status"] == "unique-up-to-sign");
  REQUIRE(j["candidates"].size() == 1);
  const Json& cand = j["candidates"][0];
  REQUIRE(cand["terms"].size() == 1);
  CHECK(cand["terms"][0]["core"] == "2");
  CHECK(cand["terms"][0]["coeffs"] == Json::array({"1", "1"}));
  CHECK(cand["approx"][0].get<double>() == doctest::Approx(1.4142135623730951));
  CHECK(cand["display"].is_string());
}

TEST_CASE("equation rendering composes coefficients and default names") {
  AffineHyperplane h;
  h.subset = {2, 4};
  h.normal = {Rational(1), Rational(0), Rational(-2, 3)};
  h.offset = Rational(0);
  Json j = hyperplane_to_json(h);
  CHECK(j["subset"] == Json::array({3, 5}));
  CHECK(j["equation"] == "x1 - 2/3*x3 = 0");
}
