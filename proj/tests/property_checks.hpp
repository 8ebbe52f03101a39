#pragma once

// Corpus-level checks shared by the doctest suites and the acceptance runner.
// Each returns counts; a check passes when every violation count is zero.

#include <random>
#include <string>

#include "bound_fixtures.hpp"
#include "oracle.hpp"
#include "skolem/poly_analysis.hpp"

namespace checks {

using oracle::Complex;
using oracle::Float;
using skolem::IntPolynomial;
using skolem::RootBox;

inline Float to_float(const skolem::mp::Real& r) { return Float(r.to_string(170, MPFR_RNDN)); }
inline Float upper(const skolem::mp::Real& r) { return Float(r.to_string(60, MPFR_RNDU)); }

inline bool box_contains(const RootBox& b, const Complex& z) {
  Complex c(to_float(b.center_re), to_float(b.center_im));
  return abs(z - c) <= upper(b.radius) + Float("1e-100");
}

// The unique oracle root inside the box, or nullptr.
inline const Complex* root_in(const RootBox& b, const std::vector<Complex>& rts) {
  const Complex* hit = nullptr;
  for (const auto& z : rts) {
    if (box_contains(b, z)) {
      if (hit != nullptr) return nullptr;
      hit = &z;
    }
  }
  return hit;
}

inline std::vector<Complex> distinct_roots(const IntPolynomial& f) {
  return oracle::roots(skolem::squarefree_part(f.split_zero_roots().second).g.ascending());
}

// m in {2..5}, H <= 50, a_0 a_m != 0.
inline std::vector<IntPolynomial> corpus(std::size_t count, std::uint64_t seed = 20240601) {
  std::mt19937_64 rng(seed);
  std::vector<IntPolynomial> out;
  while (out.size() < count) {
    int m = 2 + static_cast<int>(rng() % 4);
    long H = 1 + static_cast<long>(rng() % 50);
    out.emplace_back(oracle::random_poly(rng, m, H));
  }
  return out;
}

struct SeparationResult {
  std::size_t polynomials = 0;
  std::size_t pairs = 0;
  std::size_t violations = 0;
  std::size_t unmatched = 0;  // boxes without a unique oracle root
};

// Pairs of roots certified to have distinct moduli respect the quadratic,
// general and one-real separation bounds.
inline SeparationResult separation_check(const std::vector<IntPolynomial>& polys) {
  SeparationResult r;
  for (const IntPolynomial& f : polys) {
    ++r.polynomials;
    skolem::RootProfile p = skolem::root_profile(f);
    auto rts = distinct_roots(f);
    const int m = f.degree();
    const Float H = oracle::from_mpz(f.height());
    for (std::size_t i = 0; i < p.boxes.size(); ++i) {
      for (std::size_t j = i + 1; j < p.boxes.size(); ++j) {
        if (p.boxes[i].modulus().overlaps(p.boxes[j].modulus())) continue;
        const Complex* zi = root_in(p.boxes[i], rts);
        const Complex* zj = root_in(p.boxes[j], rts);
        if (zi == nullptr || zj == nullptr) {
          ++r.unmatched;
          continue;
        }
        ++r.pairs;
        // Measured on the oracle roots: the quadratic bound can be attained
        // (X^2 + X - 1 has gap exactly 1).
        const Float gap = abs(Float(abs(*zi)) - Float(abs(*zj)));
        const bool ri = oracle::is_real(*zi), rj = oracle::is_real(*zj);
        bool ok = true;
        if (m == 2) {
          if (ri && rj) ok = gap >= (Float(1) / H) * (1 - Float("1e-120"));
        } else {
          oracle::Params prm{m, 1, {}, H, 2};
          ok = gap > oracle::s_gap(prm) && (!(ri || rj) || gap > oracle::r_gap(prm));
        }
        if (!ok) ++r.violations;
      }
    }
  }
  return r;
}

struct LandauResult {
  std::size_t polynomials = 0;
  std::size_t boxes = 0;
  std::size_t annulus_violations = 0;
  std::size_t landau_violations = 0;
  std::size_t unmatched = 0;
};

// Every certified box lies in the open Cauchy annulus, and M(f) computed from
// oracle roots never exceeds the released Mahler upper bound.
inline LandauResult landau_cauchy_check(const std::vector<IntPolynomial>& polys) {
  LandauResult r;
  for (const IntPolynomial& f : polys) {
    ++r.polynomials;
    skolem::CauchyBounds c = skolem::cauchy_bounds(f);
    skolem::RootProfile p = skolem::root_profile(f);
    auto rts = distinct_roots(f);
    Float M = abs(oracle::from_mpz(f.leading()));
    for (const auto& b : p.boxes) {
      ++r.boxes;
      skolem::mp::Interval mod = b.modulus();
      if (!(mod.lo() > c.lower) || !(mod.hi() < c.upper)) ++r.annulus_violations;
      const Complex* z = root_in(b, rts);
      if (z == nullptr) {
        ++r.unmatched;
        continue;
      }
      for (int k = 0; k < b.multiplicity; ++k) M *= std::max(Float(1), Float(abs(*z)));
    }
    if (M * (1 - Float("1e-80")) > upper(skolem::mahler_upper(f))) ++r.landau_violations;
  }
  return r;
}

struct DegeneracyResult {
  std::size_t polynomials = 0;
  std::size_t degenerate = 0;
  std::size_t mismatches = 0;
  std::size_t ambiguous = 0;  // oracle values between the two thresholds
  std::string first_mismatch;
};

// All squarefree monic polynomials with m in {2, 3}, H <= 3 and a_m != 0:
// the exact cyclotomic test and the pair test agree with brute-force powers
// of the numeric root ratios.
inline DegeneracyResult degeneracy_equivalence() {
  DegeneracyResult r;
  for (int m = 2; m <= 3; ++m) {
    std::vector<long> coeffs(m, -3);
    while (true) {
      if (coeffs.back() != 0) {
        std::vector<mpz_class> desc{1};
        for (long c : coeffs) desc.emplace_back(c);
        IntPolynomial f = IntPolynomial::from_descending(desc);
        if (skolem::squarefree_part(f).is_simple) {
          ++r.polynomials;
          skolem::DegeneracyStatus s = skolem::degeneracy_status(f);
          auto rts = oracle::roots(f.ascending());
          const long n_max = skolem::unity_order_bound(m);
          Float top = 0;
          for (const auto& z : rts) top = std::max(top, Float(abs(z)));
          bool any = false, top_pair = false;
          for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
              if (i == j) continue;
              auto u = oracle::ratio_is_unity(rts[i], rts[j], n_max);
              if (u.ambiguous) ++r.ambiguous;
              any = any || u.found;
              bool both_top = abs(Float(abs(rts[i])) - top) < Float("1e-100") &&
                              abs(Float(abs(rts[j])) - top) < Float("1e-100");
              top_pair = top_pair || (both_top && u.found);
            }
          }
          if (any) ++r.degenerate;
          const bool agree = s.globally_degenerate == (any ? skolem::Tri::Yes : skolem::Tri::No) &&
                             s.max_pair_ratio_unity == (top_pair ? skolem::Tri::Yes : skolem::Tri::No);
          if (!agree) {
            if (r.mismatches == 0) r.first_mismatch = f.to_string();
            ++r.mismatches;
          }
        }
      }
      int k = 0;
      while (k < m && coeffs[k] == 3) coeffs[k++] = -3;
      if (k == m) break;
      ++coeffs[k];
    }
  }
  return r;
}

struct SafetyResult {
  std::size_t cases = 0;
  std::size_t violations = 0;
};

// Released ceilings never fall below the 4x-precision recomputation.
inline SafetyResult rounding_safety(std::size_t count, std::uint64_t seed) {
  using namespace skolem;
  SafetyResult r;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < count; ++t) {
    auto c = testing::random_bound_case(rng);
    const auto& in = c.inputs;
    const auto& p = c.params;
    ++r.cases;
    bool ok = testing::upper(b_height_bound(in)) >= oracle::B(p) && testing::upper(c1_constant(in)) >= oracle::C1(p) &&
              testing::upper(c2_constant(in)) >= oracle::C2(p);
    if (in.m == 2) {
      ok = ok && oracle::from_mpz(n3_n4_bound(in, BoundCase::Dominant).ceiling) >= oracle::N3(p) &&
           oracle::from_mpz(n3_n4_bound(in, BoundCase::EqualModulus).ceiling) >= oracle::N4(p);
    } else {
      ok = ok && testing::lower(r_gap(in)) <= oracle::r_gap(p) && testing::lower(s_gap(in)) <= oracle::s_gap(p) &&
           oracle::from_mpz(n1_bound(in).ceiling) >= oracle::N1(p) &&
           oracle::from_mpz(n2_bound(in).ceiling) >= oracle::N2(p);
    }
    if (!ok) ++r.violations;
  }
  return r;
}

}  // namespace checks
