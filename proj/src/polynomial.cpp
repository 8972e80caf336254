#include "framecert/polynomial.hpp"

#include <sstream>

#include "framecert/linalg.hpp"
#include "framecert/matrix.hpp"

namespace framecert {

Polynomial::Polynomial(int vars) : vars_(vars) {
  if (vars <= 0) throw Error("Polynomial: variable count must be positive");
}

void Polynomial::add_term(const std::vector<int>& exponents,
                          const Rational& coeff) {
  if (static_cast<int>(exponents.size()) != vars_)
    throw Error("Polynomial: exponent arity mismatch");
  for (int e : exponents)
    if (e < 0) throw Error("Polynomial: negative exponent");
  Rational& slot = terms_[exponents];
  slot += coeff;
  if (slot == 0) terms_.erase(exponents);
}

Rational Polynomial::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != vars_)
    throw Error("Polynomial: evaluation arity mismatch");
  Rational acc(0);
  for (const auto& [exps, coeff] : terms_) {
    Rational term = coeff;
    for (int i = 0; i < vars_; ++i)
      for (int e = 0; e < exps[i]; ++e) term *= point[i];
    acc += term;
  }
  return acc;
}

int Polynomial::total_degree() const {
  int best = 0;
  for (const auto& [exps, coeff] : terms_) {
    int d = 0;
    for (int e : exps) d += e;
    best = std::max(best, d);
  }
  return best;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  Polynomial out(vars_);
  if (factor == 0) return out;
  for (const auto& [exps, coeff] : terms_) out.terms_[exps] = coeff * factor;
  return out;
}

Polynomial Polynomial::minus(const Polynomial& other) const {
  if (other.vars_ != vars_) throw Error("Polynomial: arity mismatch");
  Polynomial out = *this;
  for (const auto& [exps, coeff] : other.terms_) out.add_term(exps, -coeff);
  return out;
}

bool Polynomial::proportional_to(const Polynomial& other,
                                 Rational* factor) const {
  if (other.vars_ != vars_) throw Error("Polynomial: arity mismatch");
  if (is_zero() || other.is_zero()) return false;
  if (terms_.size() != other.terms_.size()) return false;
  Rational ratio = other.terms_.begin()->second / terms_.begin()->second;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (it->second * ratio != jt->second) return false;
  }
  if (factor != nullptr) *factor = ratio;
  return true;
}

Polynomial Polynomial::normalized() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / terms_.begin()->second);
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::vector<std::string> vn = names;
  if (vn.empty()) {
    for (int i = 0; i < vars_; ++i) vn.push_back("v" + std::to_string(i + 1));
  }
  if (static_cast<int>(vn.size()) != vars_)
    throw Error("Polynomial: name arity mismatch");

  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, coeff] : terms_) {
    Rational c = coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    std::string mono;
    for (int i = 0; i < vars_; ++i) {
      if (exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vn[i];
      if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
    }
    if (mono.empty()) {
      os << format_rational(c);
    } else {
      if (c != 1) os << format_rational(c) << "*";
      os << mono;
    }
    first = false;
  }
  return os.str();
}

namespace {

void lattice_points(int vars, int budget, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == vars) {
    out.push_back(prefix);
    return;
  }
  for (int a = 0; a <= budget; ++a) {
    prefix.push_back(a);
    lattice_points(vars, budget - a, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Polynomial interpolate_polynomial(
    int vars, int degree,
    const std::function<Rational(const std::vector<Rational>&)>& f) {
  if (vars <= 0 || degree < 0)
    throw Error("interpolate_polynomial: bad arity or degree");
  std::vector<std::vector<int>> lattice;
  std::vector<int> prefix;
  lattice_points(vars, degree, prefix, lattice);
  const size_t count = lattice.size();
  if (count > 1000)
    throw Error("interpolate_polynomial: lattice exceeds desk-scale cap");

  // evaluation matrix over the principal lattice (poised for total degree)
  Matrix system(static_cast<int>(count), static_cast<int>(count),
                ScalarKind::Rational);
  for (size_t p = 0; p < count; ++p) {
    for (size_t e = 0; e < count; ++e) {
      Rational entry(1);
      for (int i = 0; i < vars; ++i)
        for (int rep = 0; rep < lattice[e][i]; ++rep)
          entry *= Rational(lattice[p][i]);
      system.at(static_cast<int>(p), static_cast<int>(e)) = Scalar(entry);
    }
  }
  Vec values;
  values.reserve(count);
  for (const auto& point : lattice) {
    std::vector<Rational> coords;
    coords.reserve(vars);
    for (int a : point) coords.emplace_back(a);
    values.push_back(Scalar(f(coords)));
  }
  Vec coeffs = solve_exact(system, values);

  Polynomial poly(vars);
  for (size_t e = 0; e < count; ++e) {
    const Rational& c = coeffs[e].rational();
    if (c != 0) poly.add_term(lattice[e], c);
  }
  return poly;
}

}  // namespace framecert
