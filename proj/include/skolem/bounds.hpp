#pragma once

// Explicit term-count bounds for SP/PP/UPP. Every quantity is evaluated in
// interval arithmetic (natural logarithms) and released through its upper
// endpoint, so ceilings never undershoot the exact real value.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "skolem/lrs.hpp"
#include "skolem/mp.hpp"

namespace skolem {

struct BoundInputs {
  int m = 0;
  int d = 1;                        // degree of the field of the initial terms
  std::vector<mp::Real> heights_u;  // h(u_0) .. h(u_{m-1})
  mpz_class H_fstar = 1;            // height of f*
  mpz_class sumsq_fstar = 2;        // sum of squared coefficients of f*
  bool irreducible = false;
  bool all_real_roots = false;
};

// Inputs for a rational sequence (d = 1). The irreducibility and real-root
// flags are left to the caller.
BoundInputs bound_inputs(const LRSpec& spec, mp::Precision prec = mp::kDefaultPrecision);

struct BigBound {
  mp::Interval value;  // enclosure of the bound
  mpz_class ceiling;   // ceil of the upper endpoint
  mpz_class floor;     // floor of the upper endpoint; scans cover 0..floor
  double log10 = 0;    // log10(ceiling)
  std::vector<std::pair<std::string, mp::Interval>> components;
};

// B(u), bounding |log |b_j||. Throws Error{OrderTooSmall} for m < 2.
mp::Interval b_height_bound(const BoundInputs& in, mp::Precision prec = mp::kDefaultPrecision);
// C_1 (generic) and C_2 (irreducible f).
mp::Interval c1_constant(const BoundInputs& in, mp::Precision prec = mp::kDefaultPrecision);
mp::Interval c2_constant(const BoundInputs& in, mp::Precision prec = mp::kDefaultPrecision);
// Dominant-root modulus gap r(u) and the general gap s(u).
mp::Interval r_gap(const BoundInputs& in, mp::Precision prec = mp::kDefaultPrecision);
mp::Interval s_gap(const BoundInputs& in, mp::Precision prec = mp::kDefaultPrecision);
mp::Interval f_constant(int m, int d, mp::Precision prec = mp::kDefaultPrecision);

// Dominant root, m >= 3. Uses C_2 when in.irreducible and also the real-root
// variant when in.all_real_roots, keeping the smaller value.
BigBound n1_bound(const BoundInputs& in, mp::Precision prec = mp::kDefaultPrecision);
// Two maximal roots with non-unity ratio, m >= 3 (SP only).
BigBound n2_bound(const BoundInputs& in, mp::Precision prec = mp::kDefaultPrecision);

enum class BoundCase { Dominant, EqualModulus };

// Order 2. Throws Error{OrderMismatch} unless m = 2.
BigBound n3_n4_bound(const BoundInputs& in, BoundCase bound_case, mp::Precision prec = mp::kDefaultPrecision);

// Lower bound for log|Lambda| of a non-vanishing linear form in k logarithms,
// rounded down.
mp::Real matveev_lower(int k, long D, const std::vector<mp::Real>& A, const mp::Real& B,
                       mp::Precision prec = mp::kDefaultPrecision);

struct BoundReport {
  std::string theorem;  // "N1", "N2", "N3" or "N4"
  BoundCase bound_case = BoundCase::Dominant;
  BigBound bound;
};

BoundReport bounds_from_parameters(const BoundInputs& in, BoundCase bound_case,
                                   mp::Precision prec = mp::kDefaultPrecision);

std::string_view to_string(BoundCase c);

}  // namespace skolem
