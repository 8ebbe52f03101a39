#pragma once

// Arbitrary-precision reals on top of MPFR: a value type with explicit
// rounding, closed real intervals with outward rounding, and rectangular
// complex intervals. Everything certified in this project goes through
// Interval / ComplexInterval.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace skolem::mp {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;

class Real {
 public:
  explicit Real(Precision prec = kDefaultPrecision);
  Real(long value, Precision prec);
  Real(const mpz_class& value, Precision prec, mpfr_rnd_t rnd);
  Real(const mpq_class& value, Precision prec, mpfr_rnd_t rnd);
  Real(double value, Precision prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  Precision precision() const { return mpfr_get_prec(value_); }
  // Rounds to nearest; keeps the numeric value when growing.
  void set_precision(Precision prec);

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  // Decimal rendering with `digits` significant digits, rounded in `rnd`.
  std::string to_string(int digits = 20, mpfr_rnd_t rnd = MPFR_RNDN) const;

  static Real infinity(Precision prec);
  static Real pow2(long exponent, Precision prec);

 private:
  mpfr_t value_;
};

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

// Directed-rounding primitives. The result precision is the maximum of the
// operand precisions.
Real add(const Real& a, const Real& b, mpfr_rnd_t rnd);
Real sub(const Real& a, const Real& b, mpfr_rnd_t rnd);
Real mul(const Real& a, const Real& b, mpfr_rnd_t rnd);
Real div(const Real& a, const Real& b, mpfr_rnd_t rnd);
Real neg(const Real& a);
Real abs(const Real& a);
Real sqrt(const Real& a, mpfr_rnd_t rnd);
Real log(const Real& a, mpfr_rnd_t rnd);
const Real& min(const Real& a, const Real& b);
const Real& max(const Real& a, const Real& b);

// Round-to-nearest arithmetic for approximate (uncertified) computations.
inline Real operator+(const Real& a, const Real& b) { return add(a, b, MPFR_RNDN); }
inline Real operator-(const Real& a, const Real& b) { return sub(a, b, MPFR_RNDN); }
inline Real operator*(const Real& a, const Real& b) { return mul(a, b, MPFR_RNDN); }
inline Real operator/(const Real& a, const Real& b) { return div(a, b, MPFR_RNDN); }
inline Real operator-(const Real& a) { return neg(a); }

mpz_class ceil_to_integer(const Real& a);
mpz_class floor_to_integer(const Real& a);

class Interval {
 public:
  explicit Interval(Precision prec = kDefaultPrecision);
  Interval(long value, Precision prec);
  Interval(const mpz_class& value, Precision prec);
  Interval(const mpq_class& value, Precision prec);
  // Encloses the exact value of `value` (a Real is exact).
  explicit Interval(const Real& value);
  Interval(Real lo, Real hi);

  static Interval pi(Precision prec);
  static Interval e(Precision prec);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  Precision precision() const;

  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool is_positive() const { return lo_.sign() > 0; }
  bool is_negative() const { return hi_.sign() < 0; }
  bool contains(const Real& x) const { return lo_ <= x && x <= hi_; }
  bool overlaps(const Interval& other) const { return !(hi_ < other.lo_ || other.hi_ < lo_); }

  Real mid() const;
  Real width() const;  // rounded up

 private:
  Real lo_;
  Real hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
// Throws std::domain_error when the divisor contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

Interval sqr(const Interval& a);
Interval abs(const Interval& a);
Interval sqrt(const Interval& a);  // a must be non-negative after clamping
Interval log(const Interval& a);   // a must be positive
Interval exp(const Interval& a);
Interval pow(const Interval& base, unsigned long exponent);
// Real power for a positive base.
Interval pow(const Interval& base, const Interval& exponent);
Interval hull(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);

class ComplexInterval {
 public:
  explicit ComplexInterval(Precision prec = kDefaultPrecision) : re_(prec), im_(prec) {}
  ComplexInterval(Interval re, Interval im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit ComplexInterval(Interval re);

  const Interval& re() const { return re_; }
  const Interval& im() const { return im_; }

  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }

 private:
  Interval re_;
  Interval im_;
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const Interval& a, const ComplexInterval& b);
ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a);
ComplexInterval conj(const ComplexInterval& a);
Interval norm(const ComplexInterval& a);  // |z|^2
Interval abs(const ComplexInterval& a);
ComplexInterval pow(const ComplexInterval& a, unsigned long exponent);

}  // namespace skolem::mp
