#include "framecert/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "framecert/combinatorics.hpp"
#include "framecert/linalg.hpp"

namespace framecert {

Magnitudes measure(const FrameSpec& frame, const Vec& x) {
  if (!frame.exact()) throw Error("measure: exact mode required");
  if (static_cast<int>(x.size()) != frame.dim)
    throw Error("measure: signal dimension mismatch");
  Magnitudes out;
  out.squared.reserve(frame.count());
  for (const Vec& phi : frame.vectors)
    out.squared.push_back(inner_product(x, phi).abs_squared_exact());
  return out;
}

namespace {

BigInt pollard_rho(const BigInt& n, unsigned long salt) {
  // Brent-style cycle detection; n must be composite and odd
  BigInt x(2 + salt), y = x, d(1);
  BigInt c(1 + salt);
  while (d == 1) {
    x = (x * x + c) % n;
    y = (y * y + c) % n;
    y = (y * y + c) % n;
    BigInt diff = x > y ? x - y : y - x;
    if (diff == 0) return BigInt(0);  // cycle without factor; caller retries
    mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
  }
  return d == n ? BigInt(0) : d;
}

void factor_into(const BigInt& n, std::map<BigInt, int>& powers) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    ++powers[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    factor_into(r, powers);
    factor_into(r, powers);
    return;
  }
  for (unsigned long salt = 0;; ++salt) {
    if (salt > 64) throw Error("squarefree_decompose: factorization budget exceeded");
    BigInt d = pollard_rho(n, salt);
    if (d != 0 && d != 1 && d != n) {
      factor_into(d, powers);
      factor_into(n / d, powers);
      return;
    }
  }
}

}  // namespace

void squarefree_decompose(const BigInt& n, BigInt* core, BigInt* root) {
  if (n <= 0) throw Error("squarefree_decompose: positive input required");
  BigInt rest = n;
  BigInt c(1), r(1);
  // strip small primes first
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    int count = 0;
    while (rest % p == 0) {
      rest /= p;
      ++count;
    }
    for (int i = 0; i + 1 < count; i += 2) r *= p;
    if (count % 2 == 1) c *= p;
  }
  if (rest > 1) {
    std::map<BigInt, int> powers;
    factor_into(rest, powers);
    for (const auto& [p, e] : powers) {
      for (int i = 0; i + 1 < e; i += 2) r *= p;
      if (e % 2 == 1) c *= p;
    }
  }
  *core = c;
  *root = r;
}

bool RadicalVector::is_rational() const {
  return parts.empty() ||
         (parts.size() == 1 && parts.begin()->first == 1);
}

std::vector<double> RadicalVector::to_doubles() const {
  std::vector<double> out(dim, 0.0);
  for (const auto& [core, coeff] : parts) {
    double root = std::sqrt(core.get_d());
    for (int t = 0; t < dim; ++t) out[t] += root * coeff[t].get_d();
  }
  return out;
}

std::string RadicalVector::str() const {
  std::ostringstream os;
  os << "(";
  for (int t = 0; t < dim; ++t) {
    if (t > 0) os << ", ";
    bool first = true;
    for (const auto& [core, coeff] : parts) {
      if (coeff[t] == 0) continue;
      Rational c = coeff[t];
      if (!first) os << (c < 0 ? " - " : " + ");
      if (!first && c < 0) c = -c;
      if (core == 1) {
        os << format_rational(c);
      } else {
        if (c == 1) {
        } else if (c == -1 && first) {
          os << "-";
        } else {
          os << format_rational(c) << "*";
        }
        os << "sqrt(" << core.get_str() << ")";
      }
      first = false;
    }
    if (first) os << "0";
  }
  os << ")";
  return os.str();
}

const char* recovery_status_name(RecoveryStatus status) {
  switch (status) {
    case RecoveryStatus::UniqueUpToSign:
      return "unique-up-to-sign";
    case RecoveryStatus::Ambiguous:
      return "ambiguous";
    case RecoveryStatus::Infeasible:
      return "infeasible";
  }
  return "?";
}

namespace {

struct RadicalTerm {
  BigInt core;       // squarefree
  Rational scale;    // sqrt(M) = scale * sqrt(core)
};

RadicalTerm radical_of(const Rational& m) {
  // sqrt(p/q) = sqrt(p*q)/q
  BigInt p = m.get_num();
  BigInt q = m.get_den();
  BigInt core, root;
  squarefree_decompose(p * q, &core, &root);
  return {core, Rational(root) / Rational(q)};
}

// inner products of a radical vector with a rational frame vector, per core
std::map<BigInt, Rational> radical_inner(const RadicalVector& x,
                                         const Vec& phi) {
  std::map<BigInt, Rational> out;
  for (const auto& [core, coeff] : x.parts) {
    Rational w(0);
    for (size_t t = 0; t < phi.size(); ++t) w += coeff[t] * phi[t].rational();
    if (w != 0) out[core] = w;
  }
  return out;
}

bool radical_square_equals(const std::map<BigInt, Rational>& w,
                           const Rational& target) {
  // sum_k w_k sqrt(k) over >= 2 distinct squarefree cores is a primitive
  // element of a multiquadratic field whose conjugates are not just +-x,
  // so its square is irrational; a rational square needs a single core
  if (w.size() > 1) return false;
  if (w.empty()) return target == 0;
  const auto& [core, coeff] = *w.begin();
  return Rational(core) * coeff * coeff == target;
}

void normalize_sign(RadicalVector* x) {
  for (const auto& [core, coeff] : x->parts)
    for (const Rational& c : coeff) {
      if (c == 0) continue;
      if (c < 0)
        for (auto& [k2, coeff2] : x->parts)
          for (Rational& c2 : coeff2) c2 = -c2;
      return;
    }
}

bool radical_equal(const RadicalVector& a, const RadicalVector& b) {
  if (a.dim != b.dim || a.parts.size() != b.parts.size()) return false;
  auto it = a.parts.begin();
  auto jt = b.parts.begin();
  for (; it != a.parts.end(); ++it, ++jt)
    if (it->first != jt->first || it->second != jt->second) return false;
  return true;
}

}  // namespace

RecoveryResult recover_real(const FrameSpec& frame, const Magnitudes& mags) {
  if (frame.field != FieldTag::Real)
    throw Error("recover_real: real frames only");
  if (!frame.exact()) throw Error("recover_real: exact mode required");
  if (!frame.spans) throw Error("recover_real: frame must span");
  if (frame.count() > kMaxSweepSize)
    throw Error("recover_real: family exceeds desk-scale cap");
  const int m = frame.count();
  const int n = frame.dim;
  if (static_cast<int>(mags.squared.size()) != m)
    throw Error("recover_real: magnitude count mismatch");
  for (const Rational& s : mags.squared)
    if (s < 0) throw Error("recover_real: squared magnitudes must be >= 0");

  // lexicographically first spanning subfamily
  std::vector<int> sigma0;
  std::vector<Vec> chosen;
  for (int i = 0; i < m && static_cast<int>(sigma0.size()) < n; ++i) {
    chosen.push_back(frame.vectors[i]);
    if (rank_of(Matrix::from_columns(chosen)) ==
        static_cast<int>(chosen.size()))
      sigma0.push_back(i);
    else
      chosen.pop_back();
  }
  if (static_cast<int>(sigma0.size()) != n)
    throw InternalError("recover_real: failed to select a spanning subfamily");

  Matrix b = Matrix::from_columns(chosen);
  Matrix binv = inverse_exact(b);  // row i is biorthogonal to chosen[i]

  struct Pinned {
    int slot;            // position within sigma0
    RadicalTerm value;   // |<x, phi>| as scale * sqrt(core)
  };
  std::vector<Pinned> active;
  for (int slot = 0; slot < n; ++slot) {
    const Rational& target = mags.squared[sigma0[slot]];
    if (target != 0) active.push_back({slot, radical_of(target)});
  }
  if (static_cast<int>(active.size()) > 20)
    throw Error("recover_real: too many nonzero anchor magnitudes");

  RecoveryResult result;
  const long patterns =
      active.empty() ? 1 : 1L << (static_cast<long>(active.size()) - 1);
  for (long bits = 0; bits < patterns; ++bits) {
    RadicalVector x;
    x.dim = n;
    for (size_t a = 0; a < active.size(); ++a) {
      // first active sign pinned positive; global flips are quotiented out
      const int sign = (a == 0 || ((bits >> (a - 1)) & 1) == 0) ? 1 : -1;
      const auto& [slot, value] = active[a];
      auto& coeff = x.parts[value.core];
      if (coeff.empty()) coeff.assign(n, Rational(0));
      Rational factor = Rational(sign) * value.scale;
      for (int t = 0; t < n; ++t)
        coeff[t] += factor * binv.at(slot, t).rational();
    }
    for (auto it = x.parts.begin(); it != x.parts.end();) {
      bool zero = true;
      for (const Rational& c : it->second)
        if (c != 0) {
          zero = false;
          break;
        }
      it = zero ? x.parts.erase(it) : std::next(it);
    }

    bool consistent = true;
    for (int j = 0; j < m && consistent; ++j)
      consistent = radical_square_equals(radical_inner(x, frame.vectors[j]),
                                         mags.squared[j]);
    if (!consistent) continue;

    normalize_sign(&x);
    bool fresh = true;
    for (const RadicalVector& seen : result.candidates)
      if (radical_equal(seen, x)) {
        fresh = false;
        break;
      }
    if (fresh) result.candidates.push_back(std::move(x));
  }

  if (result.candidates.empty()) {
    result.status = RecoveryStatus::Infeasible;
    result.note = "no signal reproduces the measurements exactly";
    return result;
  }
  result.status = result.candidates.size() == 1 ? RecoveryStatus::UniqueUpToSign
                                                : RecoveryStatus::Ambiguous;
  if (result.status == RecoveryStatus::Ambiguous) {
    std::ostringstream os;
    os << result.candidates.size()
       << " sign-inequivalent signals reproduce the measurements";
    result.note = os.str();
  }

  // float diagnostic on the first candidate
  std::vector<double> xd = result.candidates.front().to_doubles();
  double residual = 0.0;
  for (int j = 0; j < m; ++j) {
    double ip = 0.0;
    for (int t = 0; t < n; ++t)
      ip += xd[t] * frame.vectors[j][t].to_double();
    residual = std::max(residual,
                        std::abs(ip * ip - mags.squared[j].get_d()));
  }
  result.residual = residual;
  return result;
}

}  // namespace framecert
