#pragma once

// Heights, root bounds, modulus separation and certified root classification
// for integer polynomials.

#include <string_view>
#include <vector>

#include "skolem/int_poly.hpp"
#include "skolem/mp.hpp"
#include "skolem/roots.hpp"

namespace skolem {

enum class Tri { Yes, No, Inconclusive };
enum class RootSign { Positive, Negative, NotApplicable };

std::string_view to_string(Tri value);
std::string_view to_string(RootSign value);

struct HeightLength {
  mpz_class height;
  mpz_class length;
};

HeightLength poly_height_length(const IntPolynomial& f);

// min(sqrt(sum a_i^2), H sqrt(m+1)), rounded up; an upper bound for M(f).
mp::Real mahler_upper(const IntPolynomial& f, mp::Precision prec = mp::kDefaultPrecision);

struct CauchyBounds {
  mp::Real lower;  // rounded down; 0 when some coefficient vanishes
  mp::Real upper;  // rounded up
};

// Every non-zero root x satisfies lower < |x| < upper.
// Throws Error{DegenerateShape} when f is a monomial.
CauchyBounds cauchy_bounds(const IntPolynomial& f, mp::Precision prec = mp::kDefaultPrecision);

enum class GapCase { Quadratic, General, OneReal };

// Lower bound for ||alpha| - |beta|| over roots of distinct modulus of a
// degree-m integer polynomial of height H, rounded down.
// Quadratic needs m = 2 (and two real roots); General and OneReal need m >= 3.
mp::Real modulus_gap_bound(int m, const mpz_class& height, GapCase gap_case,
                           mp::Precision prec = mp::kDefaultPrecision);

struct SquarefreePart {
  IntPolynomial g;  // f / gcd(f, f'), primitive
  bool is_simple;
};

SquarefreePart squarefree_part(const IntPolynomial& f);

struct RootProfile {
  int m = 0;
  bool is_squarefree = false;
  int k_max = 0;  // maximal-modulus roots counted with multiplicity
  bool dominant = false;
  RootSign dominant_root_real_sign = RootSign::NotApplicable;
  // Some root of maximal modulus is real and positive.
  bool positive_maximal_root = false;
  bool all_roots_real = false;
  Tri max_pair_ratio_unity = Tri::Inconclusive;
  Tri globally_degenerate = Tri::Inconclusive;
  int zero_root_multiplicity = 0;
  // Sorted by certified modulus, largest first; equal moduli keep a stable
  // order by real then imaginary part.
  std::vector<RootBox> boxes;
};

// Certified classification. Zero roots are allowed; they take part in the
// modulus comparison and are never dominant.
RootProfile root_profile(const IntPolynomial& f, IsolationConfig config = {});

// Res_Y(f(Y), f(XY)) / (X-1)^m made primitive: its roots are the ratios
// alpha_i / alpha_j, i != j. Throws Error{ZeroRoot} when f(0) = 0.
IntPolynomial ratio_poly(const IntPolynomial& f);

struct DegeneracyStatus {
  Tri globally_degenerate = Tri::No;
  Tri max_pair_ratio_unity = Tri::No;
  std::vector<int> unity_orders;  // n with Phi_n | ratio_poly(f)
};

// Largest n examined for a root-of-unity ratio, 2 (m(m-1))^2.
long unity_order_bound(int m);

DegeneracyStatus degeneracy_status(const IntPolynomial& f, IsolationConfig config = {});

struct IrreducibilityCertificate {
  bool proven = false;
  long prime = 0;  // witness prime when proven
};

// Irreducible over Q when f mod p keeps its degree and is irreducible over
// F_p for some p in {2, 3, 5, 7, 11, 13}.
IrreducibilityCertificate irreducibility_certificate(const IntPolynomial& f);

}  // namespace skolem
