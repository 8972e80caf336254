#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace framecert {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// invariant violations inside the library itself, as opposed to bad input
struct InternalError : Error {
  using Error::Error;
};

// Exact arbitrary-precision rational. gmp keeps values canonical
// (lowest terms, positive denominator) through arithmetic; we
// canonicalize explicitly after raw construction or parsing.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& value);
double to_double(const Rational& value);

// canonicalized num/den; the raw two-argument mpq_class constructor must
// not leak into arithmetic when gcd(num, den) > 1
Rational rational_of(long num, long den);

// If value is the square of a rational, stores the nonnegative root
// and returns true.
bool rational_sqrt(const Rational& value, Rational* root);

// Rational interval [lo, hi] enclosing sqrt(value), tightened until
// hi - lo <= width. Exact endpoints when value is a perfect square.
void sqrt_enclosure(const Rational& value, const Rational& width, Rational* lo,
                    Rational* hi);

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm_squared() const { return re * re + im * im; }

  GaussianRational operator+(const GaussianRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator/(const GaussianRational& o) const;
  bool operator==(const GaussianRational& o) const {
    return re == o.re && im == o.im;
  }
};

enum class ScalarKind { Rational, Gaussian, Float64 };

const char* scalar_kind_name(ScalarKind kind);

// Tagged scalar: exact rational, exact Gaussian rational, or a machine
// double. Exact and float values never mix in arithmetic; rationals
// promote losslessly to Gaussian rationals.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  explicit Scalar(Rational r) : v_(std::move(r)) {}
  explicit Scalar(GaussianRational g) : v_(std::move(g)) {}
  explicit Scalar(double d) : v_(d) {}

  static Scalar integer(long n, ScalarKind kind);
  static Scalar zero(ScalarKind kind) { return integer(0, kind); }
  static Scalar one(ScalarKind kind) { return integer(1, kind); }

  ScalarKind kind() const;
  bool is_exact() const { return kind() != ScalarKind::Float64; }
  bool is_zero() const;

  const Rational& rational() const;
  const GaussianRational& gaussian() const;
  double float64() const;

  GaussianRational to_gaussian() const;
  Rational real_part_exact() const;
  Rational imag_part_exact() const;
  // Exact |.|^2 as a rational; exact kinds only.
  Rational abs_squared_exact() const;

  double to_double() const;
  std::complex<double> to_complex() const;

  Scalar conj() const;
  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::variant<Rational, GaussianRational, double> v_;
};

}  // namespace framecert
