#include "framecert/lambda_lift.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "framecert/combinatorics.hpp"

namespace framecert {

namespace {

Rational re_of(const Scalar& s) { return s.real_part_exact(); }
Rational im_of(const Scalar& s) { return s.imag_part_exact(); }

Matrix outer_product(const Vec& u) {
  const int n = static_cast<int>(u.size());
  Matrix m(n, n, vec_kind(u));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = u[i] * u[j].conj();
  return m;
}

// w^* A w as an exact rational (A Hermitian).
Rational quad_form(const Matrix& a, const Vec& w) {
  Scalar q = inner_product(a.apply(w), w);
  if (!(im_of(q) == 0)) throw Error("quad_form: non-real value on Hermitian matrix");
  return re_of(q);
}

std::vector<Rational> scalar_vec_to_rationals(const Vec& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const Scalar& s : v) out.push_back(s.rational());
  return out;
}

Scalar rational_as(ScalarKind kind, const Rational& r) {
  return kind == ScalarKind::Rational
             ? Scalar(r)
             : Scalar(GaussianRational(r, Rational(0)));
}

}  // namespace

std::vector<Rational> HermitianBasis::coords_of(const Matrix& a) const {
  if (a.rows() != n || a.cols() != n)
    throw Error("hermitian coords: shape mismatch");
  if (!a.is_hermitian()) throw Error("hermitian coords: matrix not Hermitian");
  std::vector<Rational> coords;
  coords.reserve(dims());
  for (int i = 0; i < n; ++i) coords.push_back(re_of(a.at(i, i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) coords.push_back(re_of(a.at(i, j)));
  if (field == FieldTag::Complex)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) coords.push_back(im_of(a.at(i, j)));
  return coords;
}

Matrix HermitianBasis::reconstruct(const std::vector<Rational>& coords) const {
  if (static_cast<int>(coords.size()) != dims())
    throw Error("hermitian reconstruct: coordinate count mismatch");
  const ScalarKind kind =
      field == FieldTag::Real ? ScalarKind::Rational : ScalarKind::Gaussian;
  Matrix a(n, n, kind);
  int pos = 0;
  for (int i = 0; i < n; ++i, ++pos)
    a.at(i, i) = kind == ScalarKind::Rational
                     ? Scalar(coords[pos])
                     : Scalar(GaussianRational(coords[pos], Rational(0)));
  const int off = n * (n - 1) / 2;
  int re_base = pos;
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx) {
      Rational re = coords[re_base + idx];
      Rational im(0);
      if (field == FieldTag::Complex) im = coords[re_base + off + idx];
      if (kind == ScalarKind::Rational) {
        a.at(i, j) = Scalar(re);
        a.at(j, i) = Scalar(re);
      } else {
        a.at(i, j) = Scalar(GaussianRational(re, im));
        a.at(j, i) = Scalar(GaussianRational(re, -im));
      }
    }
  return a;
}

std::vector<Rational> HermitianBasis::row_for(const Vec& phi) const {
  if (static_cast<int>(phi.size()) != n)
    throw Error("hermitian row: vector length mismatch");
  std::vector<Rational> row;
  row.reserve(dims());
  for (int i = 0; i < n; ++i) row.push_back(phi[i].abs_squared_exact());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar prod = phi[i].conj() * phi[j];
      row.push_back(2 * re_of(prod));
    }
  if (field == FieldTag::Complex)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Scalar prod = phi[i].conj() * phi[j];
        row.push_back(-2 * im_of(prod));
      }
  return row;
}

std::vector<Rational> HermitianBasis::coords_of_outer(const Vec& f) const {
  return coords_of(outer_product(f));
}

LambdaMatrix lambda_matrix(const FrameSpec& frame) {
  if (!frame.exact()) throw Error("lambda_matrix: exact mode required");
  LambdaMatrix lam;
  lam.basis.n = frame.dim;
  lam.basis.field = frame.field;
  lam.mat = Matrix(frame.count(), lam.basis.dims(), ScalarKind::Rational);
  for (int i = 0; i < frame.count(); ++i) {
    std::vector<Rational> row = lam.basis.row_for(frame.vectors[i]);
    for (int c = 0; c < lam.basis.dims(); ++c) lam.mat.at(i, c) = Scalar(row[c]);
  }
  return lam;
}

std::vector<Rational> lambda_apply(const LambdaMatrix& lam,
                                   const std::vector<Rational>& coords) {
  Vec v;
  v.reserve(coords.size());
  for (const Rational& r : coords) v.push_back(Scalar(r));
  return scalar_vec_to_rationals(lam.mat.apply(v));
}

std::vector<std::vector<Rational>> lambda_nullspace(const LambdaMatrix& lam) {
  std::vector<std::vector<Rational>> out;
  for (const Vec& v : nullspace_exact(lam.mat))
    out.push_back(scalar_vec_to_rationals(v));
  return out;
}

Rank2Split split_rank2(const Matrix& a) {
  if (!a.is_hermitian()) throw Error("split_rank2: matrix not Hermitian");
  const int n = a.rows();
  const ScalarKind kind = a.kind();
  auto probe = [&](const Matrix& mat) -> Vec {
    for (int p = 0; p < n; ++p) {
      Vec w = unit_vector(n, p, kind);
      if (quad_form(mat, w) != 0) return w;
    }
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (mat.at(p, q).is_zero()) continue;
        Vec w = unit_vector(n, p, kind);
        w[q] = Scalar::one(kind);
        if (quad_form(mat, w) != 0) return w;
        if (kind == ScalarKind::Gaussian) {
          w[q] = Scalar(GaussianRational(Rational(0), Rational(1)));
          if (quad_form(mat, w) != 0) return w;
        }
      }
    return {};
  };

  Rank2Split out;
  Matrix work = a;
  Vec w1 = probe(work);
  if (w1.empty()) throw Error("split_rank2: zero matrix");
  Rational q1 = quad_form(work, w1);
  out.u = work.apply(w1);
  out.c1 = 1 / q1;
  work = work - outer_product(out.u).scaled(rational_as(kind, out.c1));
  Vec w2 = probe(work);
  if (w2.empty()) {
    if (!work.is_zero()) throw Error("split_rank2: rank exceeds 2");
    out.c2 = Rational(0);
    out.v = vec_zero(n, kind);
  } else {
    Rational q2 = quad_form(work, w2);
    out.v = work.apply(w2);
    out.c2 = 1 / q2;
    Matrix check = work - outer_product(out.v).scaled(rational_as(kind, out.c2));
    if (!check.is_zero()) throw Error("split_rank2: rank exceeds 2");
  }
  if (out.c1 < 0 && out.c2 > 0) {
    std::swap(out.u, out.v);
    std::swap(out.c1, out.c2);
  }
  if (out.c1 > 0 && out.c2 < 0) {
    Rational ratio = out.c1 / (-out.c2);
    Rational root;
    if (rational_sqrt(ratio, &root)) {
      out.pair_exact = true;
      Scalar rho = kind == ScalarKind::Rational
                       ? Scalar(root)
                       : Scalar(GaussianRational(root, Rational(0)));
      out.x = vec_scale(rho, out.u);
      out.y = out.v;
    }
  }
  return out;
}

namespace {

double rank2_objective(const HermitianBasis& basis,
                       const std::vector<Matrix>& gens,
                       const std::vector<double>& c,
                       const TolerancePolicy& tol) {
  const int n = basis.n;
  const bool complex_field = basis.field == FieldTag::Complex;
  const int en = complex_field ? 2 * n : n;
  Matrix sym(en, en, ScalarKind::Float64);
  for (size_t g = 0; g < gens.size(); ++g) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!complex_field) {
          double val = gens[g].at(i, j).to_double() * c[g];
          sym.at(i, j) = Scalar(sym.at(i, j).float64() + val);
        } else {
          GaussianRational e = gens[g].at(i, j).to_gaussian();
          double re = e.re.get_d() * c[g];
          double im = e.im.get_d() * c[g];
          sym.at(i, j) = Scalar(sym.at(i, j).float64() + re);
          sym.at(i + n, j + n) = Scalar(sym.at(i + n, j + n).float64() + re);
          sym.at(i, j + n) = Scalar(sym.at(i, j + n).float64() - im);
          sym.at(i + n, j) = Scalar(sym.at(i + n, j).float64() + im);
        }
      }
  }
  std::vector<double> eig = symmetric_eigenvalues(sym, tol);
  std::vector<double> mags;
  mags.reserve(eig.size());
  for (double e : eig) mags.push_back(std::fabs(e));
  std::sort(mags.rbegin(), mags.rend());
  size_t idx = complex_field ? 4 : 2;  // third singular value (doubled spectrum)
  return idx < mags.size() ? mags[idx] : 0.0;
}

}  // namespace

Verdict rank2_search(const LambdaMatrix& lam, const SearchOptions& opts) {
  std::vector<std::vector<Rational>> null = lambda_nullspace(lam);
  const size_t dim = null.size();
  if (dim == 0) {
    Verdict v = Verdict::yes();
    v.reason = "lifted null space is trivial";
    return v;
  }
  std::vector<Matrix> gens;
  gens.reserve(dim);
  for (const auto& coords : null) gens.push_back(lam.basis.reconstruct(coords));

  if (dim == 1) {
    int r = rank_of(gens[0]);
    if (r <= 2) {
      Verdict v = Verdict::no();
      v.witness_matrix = gens[0];
      v.reason = "one-dimensional lifted null space has rank <= 2";
      return v;
    }
    Verdict v = Verdict::yes();
    v.reason = "one-dimensional lifted null space has rank > 2";
    return v;
  }

  Budget budget;
  budget.seed = opts.seed;

  auto try_combo = [&](const std::vector<Rational>& coeffs) -> std::optional<Matrix> {
    Matrix acc(lam.basis.n, lam.basis.n, gens[0].kind());
    bool nonzero = false;
    for (size_t g = 0; g < dim; ++g) {
      if (coeffs[g] == 0) continue;
      nonzero = true;
      acc = acc + gens[g].scaled(rational_as(gens[g].kind(), coeffs[g]));
    }
    if (!nonzero || acc.is_zero()) return std::nullopt;
    if (rank_of(acc) <= 2) return acc;
    return std::nullopt;
  };

  // Coarse deterministic grid.
  std::vector<Rational> grid_values;
  double combos5 = std::pow(5.0, static_cast<double>(dim));
  if (combos5 <= static_cast<double>(opts.sample_budget)) {
    grid_values = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2),
                   Rational(1)};
  } else {
    grid_values = {Rational(-1), Rational(0), Rational(1)};
  }
  double combos = std::pow(static_cast<double>(grid_values.size()),
                           static_cast<double>(dim));
  if (combos <= static_cast<double>(opts.sample_budget)) {
    std::vector<size_t> odo(dim, 0);
    while (true) {
      std::vector<Rational> coeffs(dim);
      for (size_t g = 0; g < dim; ++g) coeffs[g] = grid_values[odo[g]];
      ++budget.iterations;
      if (auto hit = try_combo(coeffs)) {
        Verdict v = Verdict::no();
        v.witness_matrix = *hit;
        v.reason = "rank <= 2 combination found on coarse grid";
        v.budget = budget;
        return v;
      }
      size_t pos = 0;
      while (pos < dim && ++odo[pos] == grid_values.size()) odo[pos++] = 0;
      if (pos == dim) break;
    }
  }

  // Random dyadic samples.
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> dist(-256, 256);
  for (int it = 0; it < opts.sample_budget; ++it) {
    std::vector<Rational> coeffs(dim);
    for (size_t g = 0; g < dim; ++g) coeffs[g] = rational_of(dist(rng), 256);
    ++budget.iterations;
    if (auto hit = try_combo(coeffs)) {
      Verdict v = Verdict::no();
      v.witness_matrix = *hit;
      v.reason = "rank <= 2 combination found by random sampling";
      v.budget = budget;
      return v;
    }
  }

  // Float descent on the third singular value, then rationalize.
  TolerancePolicy tol;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int restart = 0; restart < opts.descent_restarts; ++restart) {
    std::vector<double> c(dim);
    double norm = 0.0;
    for (double& x : c) {
      x = gauss(rng);
      norm += x * x;
    }
    norm = std::sqrt(std::max(norm, 1e-12));
    for (double& x : c) x /= norm;
    double best = rank2_objective(lam.basis, gens, c, tol);
    double step = 0.5;
    for (int it = 0; it < 200 && step > 1e-10; ++it) {
      std::vector<double> cand = c;
      double cn = 0.0;
      for (double& x : cand) {
        x += step * gauss(rng);
        cn += x * x;
      }
      cn = std::sqrt(std::max(cn, 1e-12));
      for (double& x : cand) x /= cn;
      double obj = rank2_objective(lam.basis, gens, cand, tol);
      ++budget.iterations;
      if (obj < best) {
        best = obj;
        c = cand;
        step *= 1.1;
      } else {
        step *= 0.8;
      }
    }
    for (int denom_pow = 2; denom_pow <= 12; denom_pow += 2) {
      long denom = 1L << denom_pow;
      std::vector<Rational> coeffs(dim);
      for (size_t g = 0; g < dim; ++g)
        coeffs[g] = Rational(std::lround(c[g] * static_cast<double>(denom)), denom);
      ++budget.iterations;
      if (auto hit = try_combo(coeffs)) {
        Verdict v = Verdict::no();
        v.witness_matrix = *hit;
        v.reason = "rank <= 2 combination found by descent + rationalization";
        v.budget = budget;
        return v;
      }
    }
  }

  budget.note = "no rank <= 2 combination found within budget";
  Verdict v = Verdict::unknown(
      "lifted null space dimension >= 2; search budget exhausted without a "
      "rank <= 2 witness");
  v.budget = budget;
  return v;
}

Verdict certify_pr_via_lambda(const FrameSpec& frame, const SearchOptions& opts) {
  if (!frame.exact()) throw Error("certify_pr_via_lambda: exact mode required");
  if (!frame.spans) {
    Verdict v = Verdict::no();
    v.reason = "family does not span; it cannot do phase retrieval";
    return v;
  }
  LambdaMatrix lam = lambda_matrix(frame);
  Verdict lifted = rank2_search(lam, opts);

  if (lifted.no_certified() && lifted.witness_matrix.has_value()) {
    Rank2Split split = split_rank2(*lifted.witness_matrix);
    if (split.pair_exact) {
      CounterexamplePair pair;
      pair.x = split.x;
      pair.y = split.y;
      pair.kind = PairKind::Phase;
      if (frame.field == FieldTag::Real) {
        pair.u = vec_sub(pair.x, pair.y);
        pair.v = vec_add(pair.x, pair.y);
        for (int i = 0; i < frame.count(); ++i)
          if (inner_product(pair.u, frame.vectors[i]).is_zero())
            pair.sigma.push_back(i);
      }
      lifted.pair = pair;
    }
  }

  if (frame.field == FieldTag::Real) {
    Verdict cp = complement_property(frame);
    if (lifted.outcome != Outcome::Unknown && lifted.outcome != cp.outcome)
      throw InternalError(
          "internal inconsistency: lifted rank-2 verdict disagrees with the "
          "complement property");
    if (lifted.outcome == Outcome::Unknown) {
      cp.reason = "lifted search inconclusive; resolved by the complement "
                  "property cross-check";
      return cp;
    }
  }
  return lifted;
}

}  // namespace framecert
