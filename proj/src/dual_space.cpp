#include "framecert/dual_space.hpp"

#include <algorithm>
#include <random>

#include "framecert/retrieval.hpp"

namespace framecert {

namespace {

void require_exact_spanning(const FrameSpec& frame, const char* op) {
  if (!frame.exact()) throw Error(std::string(op) + ": exact mode required");
  if (!frame.spans) throw Error(std::string(op) + ": frame must span");
}

Matrix entrywise_conj(const Matrix& m) {
  Matrix out = m;
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out.at(i, j) = out.at(i, j).conj();
  return out;
}

Scalar rational_as(ScalarKind kind, const Rational& r) {
  return kind == ScalarKind::Rational
             ? Scalar(r)
             : Scalar(GaussianRational(r, Rational(0)));
}

FrameSpec family_as_frame(const FrameSpec& base, const std::vector<Vec>& dual) {
  RawFrame raw{base.dim, base.field, ModeTag::Exact, dual};
  return validate_frame(raw);
}

bool families_equal(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!vec_equal(a[i], b[i])) return false;
  return true;
}

void require_excess(const DualParameterization& param, const char* op) {
  if (param.excess() == 0)
    throw Error(std::string(op) +
                ": frame has no excess; the canonical dual is the only dual");
}

}  // namespace

DualParameterization dual_parameterization(const FrameSpec& frame) {
  require_exact_spanning(frame, "dual_parameterization");
  // dependencies z with sum_t z_t conj(phi_t) = 0 column-wise, i.e. the
  // kernel of the conjugated synthesis matrix
  Matrix conj_synth = entrywise_conj(frame.synthesis());
  std::vector<Vec> kernel = nullspace_exact(conj_synth);
  DualParameterization out;
  out.base = frame;
  out.canonical = canonical_dual(frame).vectors;
  out.kernel = std::move(kernel);
  return out;
}

DualParameterization dual_parameterization_with_kernel(
    const FrameSpec& frame, std::vector<Vec> kernel) {
  require_exact_spanning(frame, "dual_parameterization");
  const int m = frame.count();
  Matrix conj_synth = entrywise_conj(frame.synthesis());
  for (const Vec& z : kernel) {
    if (static_cast<int>(z.size()) != m)
      throw Error("dual_parameterization: kernel vector length mismatch");
    if (!vec_is_zero(conj_synth.apply(z)))
      throw Error("dual_parameterization: kernel vector is not a dependency");
  }
  const int expected = m - rank_of(frame.synthesis());
  if (static_cast<int>(kernel.size()) != expected)
    throw Error("dual_parameterization: kernel basis has wrong size");
  if (!kernel.empty() &&
      rank_of(Matrix::from_columns(kernel)) != static_cast<int>(kernel.size()))
    throw Error("dual_parameterization: kernel vectors are dependent");
  DualParameterization out;
  out.base = frame;
  out.canonical = canonical_dual(frame).vectors;
  out.kernel = std::move(kernel);
  return out;
}

std::vector<Vec> dual_at(const DualParameterization& param,
                         const Matrix& params) {
  require_excess(param, "dual_at");
  const int n = param.base.dim;
  const int e = param.excess();
  if (params.rows() != n || params.cols() != e)
    throw Error("dual_at: parameter matrix must be dim x excess");
  std::vector<Vec> dual = param.canonical;
  for (int s = 0; s < e; ++s) {
    Vec direction = params.column(s);
    for (int t = 0; t < param.base.count(); ++t) {
      const Scalar& zt = param.kernel[s][t];
      if (zt.is_zero()) continue;
      dual[t] = vec_add(dual[t], vec_scale(zt, direction));
    }
  }
  return dual;
}

DualFrame dual_frame_at(const DualParameterization& param,
                        const Matrix& params) {
  DualFrame out;
  out.base = param.base;
  out.vectors = dual_at(param, params);
  out.provenance = DualProvenance::Parameterized;
  DualCheck check = verify_dual(param.base, out.vectors);
  if (!check.ok) throw InternalError("dual_at: family fails the duality check");
  return out;
}

Matrix params_of(const DualParameterization& param,
                 const std::vector<Vec>& dual) {
  require_excess(param, "params_of");
  const int m = param.base.count();
  if (static_cast<int>(dual.size()) != m)
    throw Error("params_of: family size mismatch");
  DualCheck check = verify_dual(param.base, dual);
  if (!check.ok) throw Error("params_of: family is not a dual of the frame");

  std::vector<Vec> diff;
  diff.reserve(m);
  for (int t = 0; t < m; ++t) diff.push_back(vec_sub(dual[t], param.canonical[t]));
  Matrix w = Matrix::from_columns(diff);                 // n x m
  Matrix z = Matrix::from_columns(param.kernel);         // m x e
  Matrix zbar = entrywise_conj(z);
  Matrix gram = z.transpose() * zbar;                    // e x e, invertible
  Matrix v = w * zbar * inverse_exact(gram);
  if (!families_equal(dual_at(param, v), dual))
    throw Error("params_of: family is outside the parameterized dual set");
  return v;
}

Verdict dual_pr_verdict(const FrameSpec& base, const std::vector<Vec>& dual,
                        const SearchOptions& opts) {
  FrameSpec family = family_as_frame(base, dual);
  // for 2n-1 real spanning families, phase retrieval is exactly full spark
  if (base.field == FieldTag::Real && family.count() == 2 * family.dim - 1 &&
      family.spans) {
    Verdict spark = is_full_spark(family);
    if (spark.yes_certified()) {
      Verdict v = Verdict::yes();
      v.reason = "full spark with 2*dim - 1 vectors";
      return v;
    }
    Verdict v = Verdict::no();
    v.witness_subset = spark.witness_subset;
    v.reason = "rank-deficient subfamily with 2*dim - 1 vectors";
    return v;
  }
  return certify_phase_retrieval(family, opts);
}

Scalar dual_det_product(const FrameSpec& base, const std::vector<Vec>& dual) {
  FrameSpec family = family_as_frame(base, dual);
  const int n = family.dim;
  const int m = family.count();
  if (m < n) throw Error("dual_det_product: fewer vectors than the dimension");
  if (m > kMaxSweepSize)
    throw Error("dual_det_product: family exceeds desk-scale cap");
  Matrix synth = family.synthesis();
  Scalar product = Scalar::one(family.scalar_kind());
  for_each_subset_colex(m, n, [&](const std::vector<int>& sigma) {
    product = product * det_exact(synth.select_columns(sigma));
    return true;
  });
  return product;
}

namespace {

void require_standard_form_2n1(const FrameSpec& base) {
  const int n = base.dim;
  if (base.count() != 2 * n - 1)
    throw Error("standard-form dual coordinates need 2*dim - 1 vectors");
  for (int i = 0; i < n; ++i)
    if (!vec_equal(base.vectors[i], unit_vector(n, i, base.scalar_kind())))
      throw Error(
          "standard-form dual coordinates need the leading vectors to be the "
          "standard basis (apply a standard-form transform first)");
}

}  // namespace

Vec xi_coordinates(const FrameSpec& base, const std::vector<Vec>& dual) {
  require_exact_spanning(base, "xi_coordinates");
  require_standard_form_2n1(base);
  DualCheck check = verify_dual(base, dual);
  if (!check.ok) throw Error("xi_coordinates: family is not a dual");
  Vec xi;
  for (int t = base.dim; t < base.count(); ++t)
    for (const Scalar& c : dual[t]) xi.push_back(c);
  return xi;
}

std::vector<Vec> dual_from_xi(const FrameSpec& base,
                              const std::vector<Vec>& tail) {
  require_exact_spanning(base, "dual_from_xi");
  require_standard_form_2n1(base);
  const int n = base.dim;
  if (static_cast<int>(tail.size()) != n - 1)
    throw Error("dual_from_xi: expected dim - 1 trailing vectors");
  for (const Vec& u : tail)
    if (static_cast<int>(u.size()) != n)
      throw Error("dual_from_xi: trailing vector dimension mismatch");

  // duality forces u_i = e_i - sum_j a_i^j u_j over the trailing vectors,
  // with a_i^j the i-th coordinate of base vector j
  std::vector<Vec> dual;
  const ScalarKind kind = base.scalar_kind();
  for (int i = 0; i < n; ++i) {
    Vec u = unit_vector(n, i, kind);
    for (int j = 0; j < n - 1; ++j) {
      const Scalar& a = base.vectors[n + j][i];
      if (!a.is_zero()) u = vec_sub(u, vec_scale(a, tail[j]));
    }
    dual.push_back(std::move(u));
  }
  for (const Vec& u : tail) dual.push_back(u);
  DualCheck check = verify_dual(base, dual);
  if (!check.ok)
    throw InternalError("dual_from_xi: constructed family fails duality");
  return dual;
}

DualSampleStats sample_pr_duals(const DualParameterization& param, int count,
                                uint64_t seed, const Matrix* center,
                                const Rational& radius) {
  require_excess(param, "sample_pr_duals");
  if (count <= 0) throw Error("sample_pr_duals: count must be positive");
  if (radius <= 0) throw Error("sample_pr_duals: radius must be positive");
  const int n = param.base.dim;
  const int e = param.excess();
  if (center != nullptr && (center->rows() != n || center->cols() != e))
    throw Error("sample_pr_duals: center must be dim x excess");
  const ScalarKind kind = param.base.scalar_kind();
  const bool complex_mode = kind == ScalarKind::Gaussian;

  std::mt19937_64 rng(seed);
  const long grid = 1 << 20;
  std::uniform_int_distribution<long> dist(-grid, grid);
  SearchOptions opts;
  opts.seed = seed;

  DualSampleStats stats;
  stats.seed = seed;
  for (int it = 0; it < count; ++it) {
    Matrix v(n, e, kind);
    for (int k = 0; k < n; ++k)
      for (int s = 0; s < e; ++s) {
        Rational re = radius * rational_of(dist(rng), grid);
        Scalar offset = complex_mode
                            ? Scalar(GaussianRational(
                                  re, radius * rational_of(dist(rng), grid)))
                            : Scalar(re);
        v.at(k, s) = center == nullptr ? offset : center->at(k, s) + offset;
      }
    Verdict verdict = dual_pr_verdict(param.base, dual_at(param, v), opts);
    ++stats.total;
    if (verdict.yes_certified()) {
      ++stats.pr;
    } else {
      if (verdict.outcome == Outcome::No)
        ++stats.non_pr;
      else
        ++stats.unknown;
      if (stats.failures.size() < 32)
        stats.failures.push_back({v, verdict.outcome});
    }
  }
  return stats;
}

VarietyResult failure_variety_excess1(const DualParameterization& param) {
  if (param.base.field != FieldTag::Real)
    throw Error("failure_variety_excess1: real frames only");
  if (param.excess() != 1)
    throw Error("failure_variety_excess1: requires excess exactly 1");
  const int n = param.base.dim;
  const int m = param.base.count();

  auto det_at = [&](const Vec& x, const std::vector<int>& sigma) {
    Matrix v(n, 1, ScalarKind::Rational);
    for (int k = 0; k < n; ++k) v.at(k, 0) = x[k];
    std::vector<Vec> dual = dual_at(param, v);
    std::vector<Vec> cols;
    for (int i : sigma) cols.push_back(dual[i]);
    return det_exact(Matrix::from_columns(cols)).rational();
  };

  VarietyResult out;
  out.param = param;
  for_each_subset_colex(m, n, [&](const std::vector<int>& sigma) {
    // each dual column is affine in the single parameter vector x, and any
    // multilinear term picking x twice cancels, so the determinant is affine
    Vec zero = vec_zero(n, ScalarKind::Rational);
    Rational c0 = det_at(zero, sigma);
    AffineHyperplane plane;
    plane.subset = sigma;
    plane.offset = c0;
    plane.normal.resize(n);
    bool any_nonzero = c0 != 0;
    for (int k = 0; k < n; ++k) {
      Vec ek = unit_vector(n, k, ScalarKind::Rational);
      plane.normal[k] = det_at(ek, sigma) - c0;
      if (plane.normal[k] != 0) any_nonzero = true;
    }
    // affine-form sanity check at a mixed point
    Vec probe = vec_zero(n, ScalarKind::Rational);
    Rational expect = c0;
    for (int k = 0; k < n; ++k) {
      Rational pk = rational_of(2 * k + 3, 7);
      probe[k] = Scalar(pk);
      expect += plane.normal[k] * pk;
    }
    if (det_at(probe, sigma) != expect)
      throw InternalError(
          "failure_variety_excess1: determinant is not affine in the "
          "parameters");

    plane.degenerate = !any_nonzero;
    if (!plane.degenerate) {
      Rational lead(0);
      for (int k = 0; k < n && lead == 0; ++k) lead = plane.normal[k];
      if (lead == 0) lead = plane.offset;
      for (Rational& c : plane.normal) c /= lead;
      plane.offset /= lead;
    }
    out.planes.push_back(std::move(plane));
    return true;
  });

  // count geometrically distinct non-degenerate planes
  std::vector<std::pair<std::vector<Rational>, Rational>> seen;
  for (const AffineHyperplane& p : out.planes) {
    if (p.degenerate) continue;
    bool fresh = true;
    for (const auto& [nrm, off] : seen)
      if (nrm == p.normal && off == p.offset) {
        fresh = false;
        break;
      }
    if (fresh) seen.push_back({p.normal, p.offset});
  }
  out.distinct_planes = static_cast<int>(seen.size());
  return out;
}

void dual_distance_enclosure(const std::vector<Vec>& g,
                             const std::vector<Vec>& h, const Rational& width,
                             Rational* lo, Rational* hi) {
  if (g.size() != h.size())
    throw Error("dual_distance_enclosure: family size mismatch");
  if (width <= 0) throw Error("dual_distance_enclosure: width must be positive");
  Rational per = width / Rational(static_cast<long>(g.size()) + 1);
  Rational sum_lo(0), sum_hi(0);
  for (size_t i = 0; i < g.size(); ++i) {
    Rational n2 = norm_squared_exact(vec_sub(g[i], h[i]));
    Rational a, b;
    sqrt_enclosure(n2, per, &a, &b);
    sum_lo += a;
    sum_hi += b;
  }
  *lo = sum_lo;
  *hi = sum_hi;
}

NearestDualResult nearest_pr_dual(const DualParameterization& param,
                                  const Matrix& start, const Rational& radius,
                                  uint64_t seed) {
  require_excess(param, "nearest_pr_dual");
  if (param.base.field != FieldTag::Real)
    throw Error("nearest_pr_dual: real frames only");
  if (radius <= 0) throw Error("nearest_pr_dual: radius must be positive");
  const int n = param.base.dim;
  const int e = param.excess();
  if (start.rows() != n || start.cols() != e)
    throw Error("nearest_pr_dual: start must be dim x excess");
  SearchOptions opts;
  opts.seed = seed;

  NearestDualResult out;
  std::vector<Vec> start_dual = dual_at(param, start);
  if (dual_pr_verdict(param.base, start_dual, opts).yes_certified()) {
    out.params = start;
    out.dual = start_dual;
    out.distance_lo = 0;
    out.distance_hi = 0;
    out.exact_distance = true;
    return out;
  }

  // a unit step in parameter V[k][s] moves dual vector t by kernel[s][t] e_k,
  // so the dual metric cost of step h is h * sum_t |kernel[s][t]|
  std::vector<Rational> column_cost(e, Rational(0));
  for (int s = 0; s < e; ++s)
    for (const Scalar& z : param.kernel[s]) {
      Rational r = z.rational();
      column_cost[s] += r < 0 ? -r : r;
    }

  auto try_params = [&](const Matrix& v) {
    return dual_pr_verdict(param.base, dual_at(param, v), opts)
        .yes_certified();
  };

  // single-coordinate dyadic steps carry an exact rational distance
  for (int s = 0; s < e; ++s) {
    if (column_cost[s] == 0) continue;
    Rational h(1);
    while (h * column_cost[s] >= radius) h /= 2;
    for (int shrink = 0; shrink < 40; ++shrink) {
      for (int k = 0; k < n; ++k) {
        for (int sign = 0; sign < 2; ++sign) {
          Matrix v = start;
          Scalar step(sign == 0 ? h : -h);
          v.at(k, s) = v.at(k, s) + step;
          ++out.attempts;
          if (try_params(v)) {
            out.params = v;
            out.dual = dual_at(param, v);
            out.distance_lo = h * column_cost[s];
            out.distance_hi = out.distance_lo;
            out.exact_distance = true;
            return out;
          }
        }
      }
      h /= 2;
    }
  }

  // fallback: random dyadic directions with a certified distance enclosure
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-8, 8);
  Rational total_cost(0);
  for (const Rational& c : column_cost) total_cost += c;
  for (int it = 0; it < 256; ++it) {
    Rational h(1);
    while (h * total_cost * 8 >= radius) h /= 2;
    for (int shrink = 0; shrink < 8; ++shrink) {
      Matrix v = start;
      for (int k = 0; k < n; ++k)
        for (int s = 0; s < e; ++s)
          v.at(k, s) = v.at(k, s) + Scalar(h * Rational(dist(rng)));
      ++out.attempts;
      if (try_params(v)) {
        std::vector<Vec> dual = dual_at(param, v);
        Rational lo, hi;
        dual_distance_enclosure(start_dual, dual, radius / 1024, &lo, &hi);
        if (hi < radius) {
          out.params = v;
          out.dual = std::move(dual);
          out.distance_lo = lo;
          out.distance_hi = hi;
          out.exact_distance = false;
          return out;
        }
      }
      h /= 2;
    }
  }
  throw Error("nearest_pr_dual: no phase-retrieval dual found within radius");
}

Polynomial dual_subset_det_polynomial(const DualParameterization& param,
                                      const std::vector<int>& subset) {
  if (param.base.field != FieldTag::Real)
    throw Error("dual_subset_det_polynomial: real frames only");
  const int n = param.base.dim;
  const int e = param.excess();
  if (static_cast<int>(subset.size()) != n)
    throw Error("dual_subset_det_polynomial: subset size must equal dim");
  for (int i : subset)
    if (i < 0 || i >= param.base.count())
      throw Error("dual_subset_det_polynomial: subset index out of range");

  auto f = [&](const std::vector<Rational>& coords) {
    Matrix v(n, e, ScalarKind::Rational);
    for (int k = 0; k < n; ++k)
      for (int s = 0; s < e; ++s) v.at(k, s) = Scalar(coords[k * e + s]);
    std::vector<Vec> dual = dual_at(param, v);
    std::vector<Vec> cols;
    for (int i : subset) cols.push_back(dual[i]);
    return det_exact(Matrix::from_columns(cols)).rational();
  };
  return interpolate_polynomial(n * e, n, f);
}

}  // namespace framecert
