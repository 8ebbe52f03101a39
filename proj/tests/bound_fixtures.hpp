#pragma once

#include <random>

#include "oracle.hpp"
#include "skolem/bounds.hpp"

namespace testing {

struct BoundCaseData {
  skolem::BoundInputs inputs;
  oracle::Params params;
};

// Exact rational inputs mirrored into both representations.
inline BoundCaseData make_bound_case(int m, int d, const std::vector<mpq_class>& heights, long H, long sumsq,
                                     bool irreducible = false, bool all_real = false) {
  BoundCaseData c;
  c.inputs.m = m;
  c.inputs.d = d;
  c.inputs.H_fstar = H;
  c.inputs.sumsq_fstar = sumsq;
  c.inputs.irreducible = irreducible;
  c.inputs.all_real_roots = all_real;
  c.params.m = m;
  c.params.d = d;
  c.params.H = H;
  c.params.sumsq = sumsq;
  c.params.irreducible = irreducible;
  c.params.all_real = all_real;
  for (const auto& h : heights) {
    c.inputs.heights_u.emplace_back(h, 64, MPFR_RNDU);
    // the engine sees the upward-rounded 64-bit value; the oracle uses it exactly
    c.params.h.push_back(oracle::Float(c.inputs.heights_u.back().to_string(40, MPFR_RNDN)));
  }
  return c;
}

inline BoundCaseData random_bound_case(std::mt19937_64& rng, int m_min = 2, int m_max = 6) {
  std::uniform_int_distribution<int> m_dist(m_min, m_max), d_dist(1, 3);
  std::uniform_int_distribution<long> H_dist(1, 100), num(0, 4000);
  const int m = m_dist(rng);
  const long H = H_dist(rng);
  std::uniform_int_distribution<long> extra(0, 5 * H * H);
  const long sumsq = std::max<long>(2, H * H + 1 + extra(rng));
  std::vector<mpq_class> h;
  for (int i = 0; i < m; ++i) h.emplace_back(num(rng), 100);
  return make_bound_case(m, d_dist(rng), h, H, sumsq, rng() % 2 == 0, rng() % 2 == 0);
}

inline oracle::Float upper(const skolem::mp::Interval& v) { return oracle::Float(v.hi().to_string(60, MPFR_RNDU)); }
inline oracle::Float lower(const skolem::mp::Interval& v) { return oracle::Float(v.lo().to_string(60, MPFR_RNDD)); }

}  // namespace testing
