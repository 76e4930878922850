#include "cyclo/bigfloat.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace cyclo {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;
constexpr unsigned kGuardBits = 32;

unsigned max_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

// True once |x| < 2^-bits (or x == 0).
bool negligible(const BigFloat& x, long bits) {
  return x.is_zero() || mpfr_get_exp(x.get()) < -bits;
}

// atan(1/n) = sum_k (-1)^k / ((2k+1) n^(2k+1))
BigFloat atan_inverse(unsigned long n, unsigned precision) {
  BigFloat power(1L, precision);
  mpfr_div_ui(power.get(), power.get(), n, kRound);
  const unsigned long n2 = n * n;
  BigFloat sum(0L, precision);
  BigFloat term(precision);
  for (unsigned long k = 0;; ++k) {
    mpfr_div_ui(term.get(), power.get(), 2 * k + 1, kRound);
    if (negligible(term, static_cast<long>(precision) + 2)) break;
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    mpfr_div_ui(power.get(), power.get(), n2, kRound);
  }
  return sum;
}

BigFloat machin_pi(unsigned precision) {
  const unsigned w = precision + 16;
  BigFloat a = atan_inverse(5, w);
  BigFloat b = atan_inverse(239, w);
  mpfr_mul_ui(a.get(), a.get(), 16, kRound);
  mpfr_mul_ui(b.get(), b.get(), 4, kRound);
  return (a - b).rounded(precision);
}

// Taylor series for |r| <= pi/4.
std::pair<BigFloat, BigFloat> sin_cos_reduced(const BigFloat& r, unsigned w) {
  const BigFloat r2 = r * r;
  BigFloat s(0L, w);
  BigFloat c(0L, w);
  BigFloat term = r;  // r^(2n+1)/(2n+1)!
  for (unsigned long n = 1; !negligible(term, w + 2); n += 2) {
    s += term;
    term *= r2;
    mpfr_div_ui(term.get(), term.get(), (n + 1) * (n + 2), kRound);
    mpfr_neg(term.get(), term.get(), kRound);
  }
  term = BigFloat(1L, w);  // r^(2n)/(2n)!
  for (unsigned long n = 0; !negligible(term, w + 2); n += 2) {
    c += term;
    term *= r2;
    mpfr_div_ui(term.get(), term.get(), (n + 1) * (n + 2), kRound);
    mpfr_neg(term.get(), term.get(), kRound);
  }
  return {std::move(s), std::move(c)};
}

}  // namespace

BigFloat::BigFloat(unsigned precision) { mpfr_init2(v_, precision); }

BigFloat::BigFloat(double v, unsigned precision) {
  mpfr_init2(v_, precision);
  mpfr_set_d(v_, v, kRound);
}

BigFloat::BigFloat(long v, unsigned precision) {
  mpfr_init2(v_, precision);
  mpfr_set_si(v_, v, kRound);
}

BigFloat BigFloat::from_string(const std::string& decimal, unsigned precision) {
  BigFloat x(precision);
  if (mpfr_set_str(x.v_, decimal.c_str(), 10, kRound) != 0)
    throw std::invalid_argument("not a number: " + decimal);
  return x;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, kRound);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRound);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::rounded(unsigned precision) const {
  BigFloat x(precision);
  mpfr_set(x.v_, v_, kRound);
  return x;
}

std::string BigFloat::to_string(int digits) const {
  std::string fmt = "%." + std::to_string(digits > 1 ? digits - 1 : 0) + "Re";
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, fmt.c_str(), v_) < 0) throw std::bad_alloc();
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat BigFloat::operator-() const {
  BigFloat x(precision());
  mpfr_neg(x.v_, v_, kRound);
  return x;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), kRound);
  mpfr_add(v_, v_, rhs.v_, kRound);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), kRound);
  mpfr_sub(v_, v_, rhs.v_, kRound);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), kRound);
  mpfr_mul(v_, v_, rhs.v_, kRound);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), kRound);
  mpfr_div(v_, v_, rhs.v_, kRound);
  return *this;
}

BigFloat abs(const BigFloat& x) {
  BigFloat y(x.precision());
  mpfr_abs(y.get(), x.get(), kRound);
  return y;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat y(x.precision());
  mpfr_sqrt(y.get(), x.get(), kRound);
  return y;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat z(max_prec(x, y));
  mpfr_hypot(z.get(), x.get(), y.get(), kRound);
  return z;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat y(x.precision());
  mpfr_mul_2si(y.get(), x.get(), e, kRound);
  return y;
}

BigFloat round(const BigFloat& x) {
  BigFloat y(x.precision());
  mpfr_round(y.get(), x.get());
  return y;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  if (b.is_zero()) throw std::domain_error("complex division by zero");
  const BigFloat den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }

double distance(const BigComplex& a, const BigComplex& b) { return abs(a - b).to_double(); }

BigComplex complex_sqrt(const BigComplex& z, unsigned precision) {
  if (precision < kMinPrecision) throw std::invalid_argument("precision below 53 bits");
  const unsigned w = precision + 8;
  const BigFloat x = z.re.rounded(w);
  const BigFloat y = z.im.rounded(w);
  if (x.is_zero() && y.is_zero()) return BigComplex(precision);
  const BigFloat r = hypot(x, y);
  // The larger of |u|, |v| comes from (r + |x|)/2, which never cancels.
  BigFloat big = sqrt(ldexp(r + abs(x), -1));
  BigFloat small = y / ldexp(big, 1);
  if (x.sign() >= 0) return {big.rounded(precision), small.rounded(precision)};
  if (y.sign() < 0) {
    big = -big;
    small = -small;
  }
  return {small.rounded(precision), big.rounded(precision)};
}

BigFloat pi(unsigned precision) {
  static std::mutex mu;
  static std::map<unsigned, BigFloat> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(precision);
  if (it == cache.end()) it = cache.emplace(precision, machin_pi(precision)).first;
  return it->second;
}

std::pair<BigFloat, BigFloat> sin_cos(const BigFloat& x, unsigned precision) {
  if (precision < kMinPrecision) throw std::invalid_argument("precision below 53 bits");
  const unsigned w = precision + kGuardBits;
  const BigFloat half_pi = ldexp(pi(w), -1);
  const BigFloat xw = x.rounded(std::max(w, x.precision()));
  const BigFloat q = round(xw / half_pi);
  if (!mpfr_fits_slong_p(q.get(), kRound)) throw std::invalid_argument("sin_cos: argument too large");
  const long quadrant = ((mpfr_get_si(q.get(), kRound) % 4) + 4) % 4;
  const BigFloat r = (xw - q * half_pi).rounded(w);
  auto [s, c] = sin_cos_reduced(r, w);
  switch (quadrant) {
    case 1: std::swap(s, c); c = -c; break;
    case 2: s = -s; c = -c; break;
    case 3: std::swap(s, c); s = -s; break;
    default: break;
  }
  return {s.rounded(precision), c.rounded(precision)};
}

}  // namespace cyclo
