#include <random>
#include <vector>

#include "doctest.h"
#include "framecert/linalg.hpp"

using namespace framecert;

namespace {

// Independent determinant oracle: Laplace expansion along the first row.
Scalar laplace_det(const Matrix& m) {
  const int n = m.rows();
  REQUIRE(m.cols() == n);
  if (n == 0) return Scalar::one(m.kind());
  if (n == 1) return m.at(0, 0);
  Scalar sum = Scalar::zero(m.kind());
  for (int j = 0; j < n; ++j) {
    std::vector<int> keep;
    for (int c = 0; c < n; ++c)
      if (c != j) keep.push_back(c);
    Matrix minor = m.select_columns(keep);
    std::vector<int> rows;
    for (int r = 1; r < n; ++r) rows.push_back(r);
    minor = minor.select_rows(rows);
    Scalar term = m.at(0, j) * laplace_det(minor);
    sum = (j % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

// Independent rank oracle: largest k with a nonsingular k x k submatrix.
int minor_rank(const Matrix& m) {
  const int r = m.rows(), c = m.cols();
  auto combos = [](int total, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      out.push_back(idx);
      int i = k - 1;
      while (i >= 0 && idx[i] == total - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
  };
  for (int k = std::min(r, c); k >= 1; --k) {
    for (const auto& ri : combos(r, k))
      for (const auto& ci : combos(c, k)) {
        Matrix sub = m.select_rows(ri).select_columns(ci);
        if (!laplace_det(sub).is_zero()) return k;
      }
  }
  return 0;
}

Matrix random_rational_matrix(int rows, int cols, std::mt19937_64& rng) {
  Matrix m(rows, cols, ScalarKind::Rational);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = Scalar(rational_of(num(rng), den(rng)));
  return m;
}

Vec rvec(const std::vector<Rational>& entries) {
  Vec v;
  for (const Rational& e : entries) v.push_back(Scalar(e));
  return v;
}

}  // namespace

TEST_CASE("det_exact agrees with Laplace expansion on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    Matrix m = random_rational_matrix(n, n, rng);
    CHECK(det_exact(m) == laplace_det(m));
  }
}

TEST_CASE("det_exact handles gaussian rational entries") {
  Matrix m(2, 2, ScalarKind::Gaussian);
  m.at(0, 0) = Scalar(GaussianRational(Rational(1), Rational(1)));   // 1+i
  m.at(0, 1) = Scalar(GaussianRational(Rational(0), Rational(1)));   // i
  m.at(1, 0) = Scalar(GaussianRational(Rational(2), Rational(0)));   // 2
  m.at(1, 1) = Scalar(GaussianRational(Rational(1), Rational(-1)));  // 1-i
  // (1+i)(1-i) - 2i = 2 - 2i
  CHECK(det_exact(m) ==
        Scalar(GaussianRational(Rational(2), Rational(-2))));
  CHECK(det_exact(m) == laplace_det(m));
}

TEST_CASE("rank_of agrees with the minor oracle on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    Matrix m = random_rational_matrix(r, c, rng);
    CHECK(rank_of(m) == minor_rank(m));
  }
  // deliberately rank deficient: row3 = row1 + row2
  Matrix m(3, 3, ScalarKind::Rational);
  std::mt19937_64 rng2(13);
  m = random_rational_matrix(3, 3, rng2);
  for (int c = 0; c < 3; ++c) m.at(2, c) = m.at(0, c) + m.at(1, c);
  CHECK(rank_of(m) == minor_rank(m));
  CHECK(rank_of(m) <= 2);
}

TEST_CASE("solve_exact frozen arrow system") {
  // S = [[3,0,2],[0,3,0],[2,0,3]], b = (1,1,1) -> x = (1/5, 1/3, 1/5)
  Matrix s = Matrix::from_rows({rvec({3, 0, 2}), rvec({0, 3, 0}), rvec({2, 0, 3})});
  Vec x = solve_exact(s, rvec({1, 1, 1}));
  CHECK(vec_equal(x, rvec({Rational(1, 5), Rational(1, 3), Rational(1, 5)})));
  CHECK(vec_equal(s.apply(x), rvec({1, 1, 1})));
}

TEST_CASE("solve_exact reports a null-space witness for singular systems") {
  Matrix s = Matrix::from_rows({rvec({1, 2}), rvec({2, 4})});
  try {
    solve_exact(s, rvec({1, 0}));
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    REQUIRE(e.nullspace_witness.size() >= 1);
    CHECK(vec_is_zero(s.apply(e.nullspace_witness.front())));
    CHECK_FALSE(vec_is_zero(e.nullspace_witness.front()));
  }
}

TEST_CASE("nullspace_exact normalizes the first nonzero coordinate to one") {
  Matrix m = Matrix::from_rows({rvec({1, 0, 1}), rvec({0, 1, 1})});
  std::vector<Vec> ns = nullspace_exact(m);
  REQUIRE(ns.size() == 1);
  CHECK(vec_equal(ns[0], rvec({1, 1, -1})));
  CHECK(vec_is_zero(m.apply(ns[0])));
}

TEST_CASE("rref_exact reports pivot columns") {
  Matrix m = Matrix::from_rows({rvec({0, 1, 2}), rvec({0, 2, 4})});
  std::vector<int> pivots;
  Matrix r = rref_exact(m, &pivots);
  REQUIRE(pivots.size() == 1);
  CHECK(pivots[0] == 1);
  CHECK(r.at(0, 1) == Scalar(Rational(1)));
  CHECK(r.at(0, 2) == Scalar(Rational(2)));
  CHECK(r.at(1, 0).is_zero());
  CHECK(r.at(1, 1).is_zero());
  CHECK(r.at(1, 2).is_zero());
}

TEST_CASE("inverse_exact round trips") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix m = random_rational_matrix(3, 3, rng);
    if (det_exact(m).is_zero()) continue;
    CHECK((m * inverse_exact(m)).is_identity());
    CHECK((inverse_exact(m) * m).is_identity());
  }
  Matrix sing = Matrix::from_rows({rvec({1, 2}), rvec({2, 4})});
  CHECK_THROWS_AS(inverse_exact(sing), SingularMatrixError);
}

TEST_CASE("symmetric_eigenvalues on a frozen 2x2") {
  // [[2,1],[1,2]] -> eigenvalues 1 and 3
  Matrix m(2, 2, ScalarKind::Float64);
  m.at(0, 0) = Scalar(2.0);
  m.at(0, 1) = Scalar(1.0);
  m.at(1, 0) = Scalar(1.0);
  m.at(1, 1) = Scalar(2.0);
  std::vector<double> ev = symmetric_eigenvalues(m);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[1] == doctest::Approx(3.0));
}

TEST_CASE("matrix building blocks") {
  Matrix id = Matrix::identity(3, ScalarKind::Rational);
  CHECK(id.is_identity());
  CHECK(det_exact(id) == Scalar(Rational(1)));

  Matrix a = Matrix::from_rows({rvec({1, 2}), rvec({3, 4})});
  CHECK(a.transpose().at(0, 1) == Scalar(Rational(3)));
  CHECK(vec_equal(a.column(1), rvec({2, 4})));
  CHECK(vec_equal(a.apply(rvec({1, 1})), rvec({3, 7})));

  Matrix g(1, 2, ScalarKind::Gaussian);
  g.at(0, 0) = Scalar(GaussianRational(Rational(1), Rational(2)));
  g.at(0, 1) = Scalar(GaussianRational(Rational(0), Rational(-1)));
  Matrix gh = g.conjugate_transpose();
  CHECK(gh.rows() == 2);
  CHECK(gh.at(0, 0) == Scalar(GaussianRational(Rational(1), Rational(-2))));

  // inner product conjugates the second slot
  Vec x{Scalar(GaussianRational(Rational(0), Rational(1)))};   // i
  Vec y{Scalar(GaussianRational(Rational(1), Rational(1)))};   // 1+i
  // <x, y> = i * conj(1+i) = i * (1-i) = 1 + i
  CHECK(inner_product(x, y) ==
        Scalar(GaussianRational(Rational(1), Rational(1))));
  CHECK(norm_squared_exact(y) == 2);
}
