#include "skolem/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "skolem/errors.hpp"

namespace skolem {

using mp::ComplexInterval;
using mp::Interval;
using mp::Real;

// ---------------------------------------------------------------------------
// RootBox

ComplexInterval RootBox::enclosure() const {
  return {Interval(mp::sub(center_re, radius, MPFR_RNDD), mp::add(center_re, radius, MPFR_RNDU)),
          Interval(mp::sub(center_im, radius, MPFR_RNDD), mp::add(center_im, radius, MPFR_RNDU))};
}

mp::Interval RootBox::modulus() const {
  ComplexInterval c{Interval(center_re), Interval(center_im)};
  Interval center_abs = mp::abs(c);
  Real lo = mp::sub(center_abs.lo(), radius, MPFR_RNDD);
  if (lo.sign() < 0) lo = Real(lo.precision());
  return Interval(std::move(lo), mp::add(center_abs.hi(), radius, MPFR_RNDU));
}

bool RootBox::meets_real_axis() const { return mp::abs(center_im) <= radius; }

bool RootBox::disjoint_from(const RootBox& other) const {
  ComplexInterval d{Interval(center_re) - Interval(other.center_re), Interval(center_im) - Interval(other.center_im)};
  return mp::abs(d).lo() > mp::add(radius, other.radius, MPFR_RNDU);
}

RootBox RootBox::conjugate() const { return {center_re, mp::neg(center_im), radius, multiplicity}; }

RootBox RootBox::negated() const { return {mp::neg(center_re), mp::neg(center_im), radius, multiplicity}; }

bool RootBox::inside(const RootBox& other) const {
  ComplexInterval d{Interval(center_re) - Interval(other.center_re), Interval(center_im) - Interval(other.center_im)};
  return mp::add(mp::abs(d).hi(), radius, MPFR_RNDU) < other.radius;
}

// ---------------------------------------------------------------------------
// Approximate complex arithmetic at working precision (round to nearest).

namespace {

struct Cx {
  Real re;
  Real im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
  Real n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
Real magnitude(const Cx& a) { return mp::sqrt(a.re * a.re + a.im * a.im, MPFR_RNDN); }

using LongComplex = std::complex<long double>;

// Aberth iteration in extended precision to seed the multiprecision phase.
std::vector<LongComplex> seed_roots(const IntPolynomial& f) {
  const int d = f.degree();
  std::vector<long double> a(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) a[static_cast<std::size_t>(i)] = static_cast<long double>(mpz_get_d(f.coeff(i).get_mpz_t()));
  long double radius = 0;
  for (int i = 0; i < d; ++i) {
    long double ratio = std::fabs(a[static_cast<std::size_t>(i)] / a[static_cast<std::size_t>(d)]);
    if (ratio > 0) radius = std::max(radius, std::pow(ratio, 1.0L / static_cast<long double>(d - i)));
  }
  radius = radius > 0 ? 2 * radius : 1;
  std::vector<LongComplex> z(static_cast<std::size_t>(d));
  const long double two_pi = 6.283185307179586476925286766559L;
  for (int k = 0; k < d; ++k) {
    long double angle = two_pi * k / d + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius * (0.5L + 0.5L * (k + 1) / d), angle);
  }
  auto eval = [&](LongComplex x, LongComplex& derivative) {
    LongComplex p = a[static_cast<std::size_t>(d)];
    derivative = 0;
    for (int i = d - 1; i >= 0; --i) {
      derivative = derivative * x + p;
      p = p * x + a[static_cast<std::size_t>(i)];
    }
    return p;
  };
  for (int iter = 0; iter < 400; ++iter) {
    long double worst = 0;
    for (int i = 0; i < d; ++i) {
      LongComplex& zi = z[static_cast<std::size_t>(i)];
      LongComplex dp;
      LongComplex p = eval(zi, dp);
      if (p == LongComplex(0)) continue;
      LongComplex ratio = dp == LongComplex(0) ? LongComplex(1e-3L) : p / dp;
      LongComplex sum = 0;
      for (int j = 0; j < d; ++j) {
        if (j != i) sum += 1.0L / (zi - z[static_cast<std::size_t>(j)]);
      }
      LongComplex corr = ratio / (1.0L - ratio * sum);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) corr = LongComplex(1e-6L, 1e-6L);
      zi -= corr;
      worst = std::max(worst, std::abs(corr) / std::max(1.0L, std::abs(zi)));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

}  // namespace

// ---------------------------------------------------------------------------
// RootIsolator

RootIsolator::RootIsolator(IntPolynomial f, IsolationConfig config)
    : f_(std::move(f)), config_(config), precision_(config.start_precision) {
  if (f_.degree() < 1) throw Error(ErrorCode::InvalidArgument, "root isolation needs positive degree");
  for (int i = 0; i <= f_.degree(); ++i) coeffs_.emplace_back(f_.coeff(i), precision_, MPFR_RNDN);
  for (const LongComplex& z : seed_roots(f_)) {
    re_.emplace_back(static_cast<double>(z.real()), precision_);
    im_.emplace_back(static_cast<double>(z.imag()), precision_);
    // Keep the extra bits of the long double seed.
    mpfr_set_ld(re_.back().get(), z.real(), MPFR_RNDN);
    mpfr_set_ld(im_.back().get(), z.imag(), MPFR_RNDN);
  }
  while (!polish_and_certify()) {
    if (precision_ * 2 > config_.max_precision) {
      throw Error(ErrorCode::PrecisionExhausted, "root isolation did not certify within the precision cap");
    }
    precision_ *= 2;
    for (int i = 0; i <= f_.degree(); ++i) coeffs_[static_cast<std::size_t>(i)] = Real(f_.coeff(i), precision_, MPFR_RNDN);
    for (auto& r : re_) r.set_precision(precision_);
    for (auto& r : im_) r.set_precision(precision_);
  }
}

void RootIsolator::aberth(int max_iterations) {
  const int d = f_.degree();
  const Real tolerance = Real::pow2(-static_cast<long>(precision_) + 8, precision_);
  for (int iter = 0; iter < max_iterations; ++iter) {
    Real worst(precision_);
    for (int i = 0; i < d; ++i) {
      Cx z{re_[static_cast<std::size_t>(i)], im_[static_cast<std::size_t>(i)]};
      Cx p{coeffs_.back(), Real(precision_)};
      Cx dp{Real(precision_), Real(precision_)};
      for (int k = d - 1; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + Cx{coeffs_[static_cast<std::size_t>(k)], Real(precision_)};
      }
      if (p.re.is_zero() && p.im.is_zero()) continue;
      Cx ratio = dp.re.is_zero() && dp.im.is_zero() ? Cx{Real::pow2(-20, precision_), Real(precision_)} : p / dp;
      Cx sum{Real(precision_), Real(precision_)};
      const Cx one{Real(1L, precision_), Real(precision_)};
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        Cx diff = z - Cx{re_[static_cast<std::size_t>(j)], im_[static_cast<std::size_t>(j)]};
        if (diff.re.is_zero() && diff.im.is_zero()) continue;
        sum = sum + one / diff;
      }
      Cx corr = ratio / (one - ratio * sum);
      if (!corr.re.is_finite() || !corr.im.is_finite()) corr = Cx{Real::pow2(-30, precision_), Real::pow2(-31, precision_)};
      re_[static_cast<std::size_t>(i)] = z.re - corr.re;
      im_[static_cast<std::size_t>(i)] = z.im - corr.im;
      Real scale = mp::max(Real(1L, precision_), magnitude(Cx{re_[static_cast<std::size_t>(i)], im_[static_cast<std::size_t>(i)]}));
      Real rel = magnitude(corr) / scale;
      if (worst < rel) worst = rel;
    }
    if (worst <= tolerance) break;
  }
}

bool RootIsolator::polish_and_certify() {
  const int d = f_.degree();
  for (int attempt = 0; attempt < 2; ++attempt) {
    if (attempt == 1) aberth(60 + 4 * d);
    std::vector<RootBox> boxes;
    boxes.reserve(static_cast<std::size_t>(d));
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      ComplexInterval z{Interval(re_[static_cast<std::size_t>(i)]), Interval(im_[static_cast<std::size_t>(i)])};
      ComplexInterval p(Interval(f_.leading(), precision_));
      for (int k = d - 1; k >= 0; --k) p = p * z + ComplexInterval(Interval(f_.coeff(k), precision_));
      ComplexInterval denom(Interval(f_.leading(), precision_));
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        denom = denom * (z - ComplexInterval{Interval(re_[static_cast<std::size_t>(j)]), Interval(im_[static_cast<std::size_t>(j)])});
      }
      if (denom.contains_zero()) {
        ok = false;
        break;
      }
      ComplexInterval w = p / denom;
      ComplexInterval center = z - w;
      Real mid_re = center.re().mid();
      Real mid_im = center.im().mid();
      ComplexInterval offset{center.re() - Interval(mid_re), center.im() - Interval(mid_im)};
      Real radius = mp::add(mp::mul(Real(static_cast<long>(d - 1), precision_), mp::abs(w).hi(), MPFR_RNDU),
                            mp::abs(offset).hi(), MPFR_RNDU);
      // Keep radii strictly positive.
      Real floor_radius = mp::mul(Real::pow2(-static_cast<long>(precision_) + 2, precision_),
                                  mp::max(Real(1L, precision_), mp::abs(mid_re) + mp::abs(mid_im)), MPFR_RNDU);
      if (radius < floor_radius) radius = floor_radius;
      boxes.push_back({std::move(mid_re), std::move(mid_im), std::move(radius), 1});
    }
    for (std::size_t i = 0; ok && i < boxes.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < boxes.size(); ++j) ok = boxes[i].disjoint_from(boxes[j]);
    }
    if (ok) {
      boxes_ = std::move(boxes);
      return true;
    }
  }
  return false;
}

void RootIsolator::refine() {
  const mp::Real before = max_radius();
  do {
    if (precision_ * 2 > config_.max_precision) {
      throw Error(ErrorCode::PrecisionExhausted, "root refinement hit the precision cap");
    }
    precision_ *= 2;
    for (int i = 0; i <= f_.degree(); ++i) coeffs_[static_cast<std::size_t>(i)] = Real(f_.coeff(i), precision_, MPFR_RNDN);
    for (auto& r : re_) r.set_precision(precision_);
    for (auto& r : im_) r.set_precision(precision_);
    aberth(20 + 2 * f_.degree());
  } while (!polish_and_certify() || !(max_radius() < before));
}

void RootIsolator::refine_to(const mp::Real& target) {
  while (target < max_radius()) refine();
}

mp::Real RootIsolator::max_radius() const {
  Real r(precision_);
  for (const auto& b : boxes_) {
    if (r < b.radius) r = b.radius;
  }
  return r;
}

std::vector<RootBox> isolate_roots(const IntPolynomial& f, const mp::Real& target_radius, IsolationConfig config) {
  RootIsolator iso(f, config);
  iso.refine_to(target_radius);
  return iso.boxes();
}

}  // namespace skolem
