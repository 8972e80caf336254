#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "framecert/scalar.hpp"

namespace framecert {

// Sparse multivariate polynomial with rational coefficients.  Term order is
// the lexicographic order on exponent vectors (the map key order), which is
// also the normalization and printing order.
class Polynomial {
 public:
  explicit Polynomial(int vars);

  int vars() const { return vars_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exponents, const Rational& coeff);
  Rational coefficient(const std::vector<int>& exponents) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  Polynomial scaled(const Rational& factor) const;
  Polynomial minus(const Polynomial& other) const;

  // true when other == factor * this for a nonzero rational factor
  bool proportional_to(const Polynomial& other, Rational* factor = nullptr) const;

  // first term in map order gets coefficient 1
  Polynomial normalized() const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int vars_;
  std::map<std::vector<int>, Rational> terms_;
};

// Exact interpolation of a polynomial of total degree <= degree from
// evaluations on the principal lattice {a in N^vars : sum a_i <= degree}.
Polynomial interpolate_polynomial(
    int vars, int degree,
    const std::function<Rational(const std::vector<Rational>&)>& f);

}  // namespace framecert
