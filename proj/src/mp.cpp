#include "skolem/mp.hpp"

#include <algorithm>
#include <stdexcept>

namespace skolem::mp {

Real::Real(Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, Precision prec, mpfr_rnd_t rnd) {
  mpfr_init2(value_, prec);
  mpfr_set_z(value_, value.get_mpz_t(), rnd);
}

Real::Real(const mpq_class& value, Precision prec, mpfr_rnd_t rnd) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, value.get_mpq_t(), rnd);
}

Real::Real(double value, Precision prec) {
  mpfr_init2(value_, std::max<Precision>(prec, 53));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

void Real::set_precision(Precision prec) { mpfr_prec_round(value_, prec, MPFR_RNDN); }

std::string Real::to_string(int digits, mpfr_rnd_t rnd) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*R*g", digits, rnd, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

Real Real::infinity(Precision prec) {
  Real r(prec);
  mpfr_set_inf(r.get(), 1);
  return r;
}

Real Real::pow2(long exponent, Precision prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.get(), 1, exponent, MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

namespace {

Precision joint(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real add(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(joint(a, b));
  mpfr_add(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real sub(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(joint(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real mul(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(joint(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real div(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(joint(a, b));
  mpfr_div(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real neg(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a, mpfr_rnd_t rnd) {
  Real r(a.precision());
  mpfr_sqrt(r.get(), a.get(), rnd);
  return r;
}

Real log(const Real& a, mpfr_rnd_t rnd) {
  Real r(a.precision());
  mpfr_log(r.get(), a.get(), rnd);
  return r;
}

const Real& min(const Real& a, const Real& b) { return b < a ? b : a; }
const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }

mpz_class ceil_to_integer(const Real& a) {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), a.get(), MPFR_RNDU);
  return out;
}

mpz_class floor_to_integer(const Real& a) {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), a.get(), MPFR_RNDD);
  return out;
}

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(Precision prec) : lo_(prec), hi_(prec) {}

Interval::Interval(long value, Precision prec) : lo_(prec), hi_(prec) {
  mpfr_set_si(lo_.get(), value, MPFR_RNDD);
  mpfr_set_si(hi_.get(), value, MPFR_RNDU);
}

Interval::Interval(const mpz_class& value, Precision prec)
    : lo_(value, prec, MPFR_RNDD), hi_(value, prec, MPFR_RNDU) {}

Interval::Interval(const mpq_class& value, Precision prec)
    : lo_(value, prec, MPFR_RNDD), hi_(value, prec, MPFR_RNDU) {}

Interval::Interval(const Real& value) : lo_(value), hi_(value) {}

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("Interval: lo > hi");
}

Interval Interval::pi(Precision prec) {
  Real lo(prec), hi(prec);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::e(Precision prec) {
  Real lo(prec), hi(prec);
  Real one(1L, prec);
  mpfr_exp(lo.get(), one.get(), MPFR_RNDD);
  mpfr_exp(hi.get(), one.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Precision Interval::precision() const { return std::max(lo_.precision(), hi_.precision()); }

Real Interval::mid() const {
  Real r(precision());
  mpfr_add(r.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(r.get(), r.get(), 1, MPFR_RNDN);
  return r;
}

Real Interval::width() const { return sub(hi_, lo_, MPFR_RNDU); }

namespace {

Precision joint(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Evaluates op at the four corners and keeps the extremes. Valid for
// operations that are monotone in each argument separately.
Interval corners(const Interval& a, const Interval& b, BinaryOp op) {
  const Precision prec = joint(a, b);
  const Real* xs[2] = {&a.lo(), &a.hi()};
  const Real* ys[2] = {&b.lo(), &b.hi()};
  Real lo = Real::infinity(prec);
  Real hi = neg(Real::infinity(prec));
  Real t(prec);
  for (const Real* x : xs) {
    for (const Real* y : ys) {
      op(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (t < lo) lo = t;
      op(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (hi < t) hi = t;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(add(a.lo(), b.lo(), MPFR_RNDD), add(a.hi(), b.hi(), MPFR_RNDU));
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(sub(a.lo(), b.hi(), MPFR_RNDD), sub(a.hi(), b.lo(), MPFR_RNDU));
}

Interval operator*(const Interval& a, const Interval& b) { return corners(a, b, &mpfr_mul); }

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("Interval division by an interval containing zero");
  return corners(a, b, &mpfr_div);
}

Interval operator-(const Interval& a) { return Interval(neg(a.hi()), neg(a.lo())); }

Interval sqr(const Interval& a) {
  Interval m = abs(a);
  Real lo(m.precision()), hi(m.precision());
  mpfr_sqr(lo.get(), m.lo().get(), MPFR_RNDD);
  mpfr_sqr(hi.get(), m.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval abs(const Interval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return -a;
  return Interval(Real(a.precision()), max(neg(a.lo()), a.hi()));
}

Interval sqrt(const Interval& a) {
  if (a.hi().sign() < 0) throw std::domain_error("sqrt of a negative interval");
  Real lo = a.lo().sign() < 0 ? Real(a.precision()) : sqrt(a.lo(), MPFR_RNDD);
  return Interval(std::move(lo), sqrt(a.hi(), MPFR_RNDU));
}

Interval log(const Interval& a) {
  if (a.lo().sign() <= 0) throw std::domain_error("log of a non-positive interval");
  return Interval(log(a.lo(), MPFR_RNDD), log(a.hi(), MPFR_RNDU));
}

Interval exp(const Interval& a) {
  Real lo(a.precision()), hi(a.precision());
  mpfr_exp(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_exp(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval pow(const Interval& base, unsigned long exponent) {
  const Precision prec = base.precision();
  if (exponent == 0) return Interval(1L, prec);
  Real lo(prec), hi(prec);
  if (exponent % 2 == 1) {
    mpfr_pow_ui(lo.get(), base.lo().get(), exponent, MPFR_RNDD);
    mpfr_pow_ui(hi.get(), base.hi().get(), exponent, MPFR_RNDU);
  } else {
    Interval m = abs(base);
    mpfr_pow_ui(lo.get(), m.lo().get(), exponent, MPFR_RNDD);
    mpfr_pow_ui(hi.get(), m.hi().get(), exponent, MPFR_RNDU);
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval pow(const Interval& base, const Interval& exponent) {
  if (base.lo().sign() <= 0) throw std::domain_error("real power of a non-positive base");
  return corners(base, exponent, &mpfr_pow);
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(min(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

Interval max(const Interval& a, const Interval& b) {
  return Interval(max(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

// ---------------------------------------------------------------------------
// ComplexInterval

ComplexInterval::ComplexInterval(Interval re) : re_(std::move(re)), im_(re_.precision()) {}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re() + b.re(), a.im() + b.im()};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re() - b.re(), a.im() - b.im()};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}

ComplexInterval operator*(const Interval& a, const ComplexInterval& b) {
  return {a * b.re(), a * b.im()};
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  Interval n = norm(b);
  if (n.contains_zero()) throw std::domain_error("complex division by an interval containing zero");
  ComplexInterval t = a * conj(b);
  return {t.re() / n, t.im() / n};
}

ComplexInterval operator-(const ComplexInterval& a) { return {-a.re(), -a.im()}; }

ComplexInterval conj(const ComplexInterval& a) { return {a.re(), -a.im()}; }

Interval norm(const ComplexInterval& a) { return sqr(a.re()) + sqr(a.im()); }

Interval abs(const ComplexInterval& a) { return sqrt(norm(a)); }

ComplexInterval pow(const ComplexInterval& a, unsigned long exponent) {
  ComplexInterval result(Interval(1L, a.re().precision()));
  ComplexInterval base = a;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace skolem::mp
