#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace cyclo {

// Smallest working precision accepted by the transcendental routines.
inline constexpr unsigned kMinPrecision = 53;

// Binary floating point number with a per-value precision in bits, backed by
// MPFR. Arithmetic results take the larger operand precision and round to
// nearest.
class BigFloat {
 public:
  explicit BigFloat(unsigned precision = kMinPrecision);
  BigFloat(double v, unsigned precision);
  BigFloat(long v, unsigned precision);
  static BigFloat from_string(const std::string& decimal, unsigned precision);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  // Rounds into a new precision.
  BigFloat rounded(unsigned precision) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 20) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
// x * 2^e, exact.
BigFloat ldexp(const BigFloat& x, long e);
// Nearest integer, ties away from zero.
BigFloat round(const BigFloat& x);

struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(unsigned precision = kMinPrecision) : re(precision), im(precision) {
    mpfr_set_zero(re.get(), 1);
    mpfr_set_zero(im.get(), 1);
  }
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(double r, double i, unsigned precision) : re(r, precision), im(i, precision) {}

  unsigned precision() const { return re.precision(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  BigComplex operator-() const { return {-re, -im}; }
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  // Throws std::domain_error on an exactly zero divisor.
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

BigComplex conj(const BigComplex& z);
BigFloat abs(const BigComplex& z);
// |a - b| rounded to double; for tolerance checks.
double distance(const BigComplex& a, const BigComplex& b);

// Principal square root: non-negative real part, and non-negative imaginary
// part on the negative real axis. sqrt(0) = 0.
BigComplex complex_sqrt(const BigComplex& z, unsigned precision);

// pi by Machin's arctangent formula, cached per precision.
BigFloat pi(unsigned precision);

// (sin x, cos x). Reduces x to |r| <= pi/4 with pi at precision + 32 bits and
// sums the Taylor series.
std::pair<BigFloat, BigFloat> sin_cos(const BigFloat& x, unsigned precision);

}  // namespace cyclo
