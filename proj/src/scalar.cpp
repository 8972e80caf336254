#include "framecert/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace framecert {

namespace {

// [sign] digits [. digits] [(e|E) [sign] digits], evaluated exactly
Rational parse_decimal_rational(const std::string& text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_len = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    digits += text[i++];
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      ++frac_len;
    }
  }
  if (digits.empty())
    throw Error("malformed rational literal: '" + text + "'");
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size())
      throw Error("malformed rational literal: '" + text + "'");
    long mag = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      mag = mag * 10 + (text[i++] - '0');
      if (mag > 4096) throw Error("exponent out of range: '" + text + "'");
    }
    exponent = exp_neg ? -mag : mag;
  }
  if (i != text.size())
    throw Error("malformed rational literal: '" + text + "'");

  mpz_class mantissa(digits, 10);
  mpq_class q(mantissa);
  long ten_power = exponent - frac_len;
  if (ten_power != 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10,
                  static_cast<unsigned long>(std::labs(ten_power)));
    if (ten_power > 0)
      q *= mpq_class(scale);
    else
      q /= mpq_class(scale);
  }
  if (negative) q = -q;
  q.canonicalize();
  return q;
}

}  // namespace

Rational rational_of(long num, long den) {
  if (den == 0) throw Error("rational_of: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '+') s = s.substr(1);
  if (s.empty()) throw Error("empty rational literal");
  if (s.find('/') == std::string::npos &&
      s.find_first_of(".eE") != std::string::npos)
    return parse_decimal_rational(s);
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw Error("malformed rational literal: '" + text + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw Error("zero denominator in rational literal: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

bool rational_sqrt(const Rational& value, Rational* root) {
  if (value < 0) return false;
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  if (root != nullptr) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = Rational(rn, rd);
    root->canonicalize();
  }
  return true;
}

void sqrt_enclosure(const Rational& value, const Rational& width, Rational* lo,
                    Rational* hi) {
  if (value < 0) throw Error("sqrt_enclosure of negative value");
  if (width <= 0) throw Error("sqrt_enclosure width must be positive");
  Rational exact;
  if (rational_sqrt(value, &exact)) {
    *lo = exact;
    *hi = exact;
    return;
  }
  // Bisection; endpoints stay rational throughout. sqrt(v) <= max(v, 1)
  // brackets from above, a float seed narrows the bracket when finite
  // (mpq_class from double is exact).
  Rational a(0);
  Rational b = value >= 1 ? value : Rational(1);
  double guess = std::sqrt(value.get_d());
  if (std::isfinite(guess) && guess > 0) {
    Rational seed(guess);
    Rational pad = seed / 1048576 + Rational(1, 1048576);
    Rational seed_lo = seed - pad;
    Rational seed_hi = seed + pad;
    if (seed_lo > 0 && seed_lo * seed_lo <= value) a = seed_lo;
    if (seed_hi < b && seed_hi * seed_hi >= value) b = seed_hi;
  }
  while (b - a > width) {
    Rational mid = (a + b) / 2;
    if (mid * mid <= value)
      a = mid;
    else
      b = mid;
  }
  *lo = a;
  *hi = b;
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
  Rational n = o.norm_squared();
  if (n == 0) throw Error("division by zero (gaussian rational)");
  GaussianRational top = *this * o.conj();
  return {top.re / n, top.im / n};
}

const char* scalar_kind_name(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::Rational:
      return "rational";
    case ScalarKind::Gaussian:
      return "gaussian-rational";
    case ScalarKind::Float64:
      return "float64";
  }
  return "?";
}

Scalar Scalar::integer(long n, ScalarKind kind) {
  switch (kind) {
    case ScalarKind::Rational:
      return Scalar(Rational(n));
    case ScalarKind::Gaussian:
      return Scalar(GaussianRational(Rational(n), Rational(0)));
    case ScalarKind::Float64:
      return Scalar(static_cast<double>(n));
  }
  throw Error("bad scalar kind");
}

ScalarKind Scalar::kind() const {
  if (std::holds_alternative<Rational>(v_)) return ScalarKind::Rational;
  if (std::holds_alternative<GaussianRational>(v_)) return ScalarKind::Gaussian;
  return ScalarKind::Float64;
}

bool Scalar::is_zero() const {
  switch (kind()) {
    case ScalarKind::Rational:
      return rational() == 0;
    case ScalarKind::Gaussian:
      return gaussian().is_zero();
    case ScalarKind::Float64:
      return float64() == 0.0;
  }
  return false;
}

const Rational& Scalar::rational() const {
  if (kind() != ScalarKind::Rational) throw Error("scalar is not rational");
  return std::get<Rational>(v_);
}

const GaussianRational& Scalar::gaussian() const {
  if (kind() != ScalarKind::Gaussian)
    throw Error("scalar is not gaussian-rational");
  return std::get<GaussianRational>(v_);
}

double Scalar::float64() const {
  if (kind() != ScalarKind::Float64) throw Error("scalar is not float64");
  return std::get<double>(v_);
}

GaussianRational Scalar::to_gaussian() const {
  switch (kind()) {
    case ScalarKind::Rational:
      return GaussianRational(rational(), Rational(0));
    case ScalarKind::Gaussian:
      return gaussian();
    case ScalarKind::Float64:
      throw Error("cannot promote float64 scalar to exact");
  }
  throw Error("bad scalar kind");
}

Rational Scalar::real_part_exact() const {
  switch (kind()) {
    case ScalarKind::Rational:
      return rational();
    case ScalarKind::Gaussian:
      return gaussian().re;
    case ScalarKind::Float64:
      throw Error("real_part_exact on float64 scalar");
  }
  throw Error("bad scalar kind");
}

Rational Scalar::imag_part_exact() const {
  switch (kind()) {
    case ScalarKind::Rational:
      return Rational(0);
    case ScalarKind::Gaussian:
      return gaussian().im;
    case ScalarKind::Float64:
      throw Error("imag_part_exact on float64 scalar");
  }
  throw Error("bad scalar kind");
}

Rational Scalar::abs_squared_exact() const {
  switch (kind()) {
    case ScalarKind::Rational:
      return rational() * rational();
    case ScalarKind::Gaussian:
      return gaussian().norm_squared();
    case ScalarKind::Float64:
      throw Error("abs_squared_exact on float64 scalar");
  }
  throw Error("bad scalar kind");
}

double Scalar::to_double() const {
  switch (kind()) {
    case ScalarKind::Rational:
      return rational().get_d();
    case ScalarKind::Gaussian:
      if (!gaussian().is_real())
        throw Error("to_double on scalar with nonzero imaginary part");
      return gaussian().re.get_d();
    case ScalarKind::Float64:
      return float64();
  }
  throw Error("bad scalar kind");
}

std::complex<double> Scalar::to_complex() const {
  switch (kind()) {
    case ScalarKind::Rational:
      return {rational().get_d(), 0.0};
    case ScalarKind::Gaussian:
      return {gaussian().re.get_d(), gaussian().im.get_d()};
    case ScalarKind::Float64:
      return {float64(), 0.0};
  }
  throw Error("bad scalar kind");
}

Scalar Scalar::conj() const {
  switch (kind()) {
    case ScalarKind::Gaussian:
      return Scalar(gaussian().conj());
    default:
      return *this;
  }
}

Scalar Scalar::operator-() const {
  switch (kind()) {
    case ScalarKind::Rational:
      return Scalar(Rational(-rational()));
    case ScalarKind::Gaussian:
      return Scalar(-gaussian());
    case ScalarKind::Float64:
      return Scalar(-float64());
  }
  throw Error("bad scalar kind");
}

namespace {

bool float_involved(const Scalar& a, const Scalar& b) {
  bool fa = a.kind() == ScalarKind::Float64;
  bool fb = b.kind() == ScalarKind::Float64;
  if (fa != fb)
    throw Error("mixed exact/float scalar arithmetic is not allowed");
  return fa;
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  if (float_involved(*this, o)) return Scalar(float64() + o.float64());
  if (kind() == ScalarKind::Rational && o.kind() == ScalarKind::Rational)
    return Scalar(Rational(rational() + o.rational()));
  return Scalar(to_gaussian() + o.to_gaussian());
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (float_involved(*this, o)) return Scalar(float64() - o.float64());
  if (kind() == ScalarKind::Rational && o.kind() == ScalarKind::Rational)
    return Scalar(Rational(rational() - o.rational()));
  return Scalar(to_gaussian() - o.to_gaussian());
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (float_involved(*this, o)) return Scalar(float64() * o.float64());
  if (kind() == ScalarKind::Rational && o.kind() == ScalarKind::Rational)
    return Scalar(Rational(rational() * o.rational()));
  return Scalar(to_gaussian() * o.to_gaussian());
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (float_involved(*this, o)) {
    if (o.float64() == 0.0) throw Error("division by zero (float64)");
    return Scalar(float64() / o.float64());
  }
  if (o.is_zero()) throw Error("division by zero (exact scalar)");
  if (kind() == ScalarKind::Rational && o.kind() == ScalarKind::Rational)
    return Scalar(Rational(rational() / o.rational()));
  return Scalar(to_gaussian() / o.to_gaussian());
}

bool Scalar::operator==(const Scalar& o) const {
  bool fa = kind() == ScalarKind::Float64;
  bool fb = o.kind() == ScalarKind::Float64;
  if (fa != fb) throw Error("mixed exact/float scalar comparison");
  if (fa) return float64() == o.float64();
  if (kind() == ScalarKind::Rational && o.kind() == ScalarKind::Rational)
    return rational() == o.rational();
  return to_gaussian() == o.to_gaussian();
}

std::string Scalar::str() const {
  switch (kind()) {
    case ScalarKind::Rational:
      return format_rational(rational());
    case ScalarKind::Gaussian: {
      std::ostringstream os;
      os << format_rational(gaussian().re) << (gaussian().im < 0 ? "" : "+")
         << format_rational(gaussian().im) << "i";
      return os.str();
    }
    case ScalarKind::Float64: {
      std::ostringstream os;
      os << float64();
      return os.str();
    }
  }
  throw Error("bad scalar kind");
}

}  // namespace framecert
