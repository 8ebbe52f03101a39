#pragma once

// Linear recurrence sequences with rational data:
//   u_{n+m} = a_1 u_{n+m-1} + ... + a_m u_n.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skolem/int_poly.hpp"
#include "skolem/mp.hpp"

namespace skolem {

// mpq_class keeps numerator/denominator canonical (denominator > 0, coprime).
using Rational = mpq_class;

// Accepts "p" or "p/q" with optional leading sign; rejects zero denominators.
Rational parse_rational(std::string_view text);
// Canonical "p" or "p/q".
std::string format_rational(const Rational& q);

class LRSpec {
 public:
  int order() const { return static_cast<int>(coefficients_.size()); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  const std::vector<Rational>& initial_terms() const { return initial_; }
  bool minimal() const { return minimal_; }

  friend bool operator==(const LRSpec& a, const LRSpec& b) {
    return a.coefficients_ == b.coefficients_ && a.initial_ == b.initial_ && a.minimal_ == b.minimal_;
  }

 private:
  friend LRSpec validate_lrs(std::vector<Rational>, std::vector<Rational>);
  friend LRSpec minimal_annihilator(const LRSpec&);

  std::vector<Rational> coefficients_;
  std::vector<Rational> initial_;
  bool minimal_ = false;
};

// Throws Error{ZeroTrailingCoefficient | AllInitialTermsZero | LengthMismatch}.
LRSpec validate_lrs(std::vector<Rational> coefficients, std::vector<Rational> initial_terms);

// Least-order recurrence generating the same sequence (Berlekamp-Massey on
// the first 2m terms). The result has minimal() == true.
LRSpec minimal_annihilator(const LRSpec& spec);

struct CharPoly {
  IntPolynomial f_star;  // delta * (X^m - a_1 X^{m-1} - ... - a_m)
  mpz_class delta;       // lcm of the coefficient denominators
};

CharPoly primitive_char_poly(const LRSpec& spec);

std::vector<Rational> iterate_terms(const LRSpec& spec, std::size_t count);

// Exact term generator. Internally iterates the integer sequence
//   v_n = D * delta^n * u_n
// (D = lcm of the initial-term denominators), which has integer recurrence
// coefficients and the same signs and zeros as u_n.
class TermStream {
 public:
  explicit TermStream(const LRSpec& spec);

  std::uint64_t index() const { return index_; }
  // Integer multiple of the current term u_index with a positive factor.
  const mpz_class& scaled() const { return window_.front(); }
  int sign() const { return sgn(window_.front()); }
  Rational value() const;
  void advance();

  // Integer recurrence weights w with v_{n+m} = sum_i w_i v_{n+m-i}.
  const std::vector<mpz_class>& weights() const { return weights_; }
  // v_index .. v_{index+m-1}
  const std::vector<mpz_class>& window() const { return window_; }

 private:
  std::vector<mpz_class> weights_;  // recurrence weights for v_n
  std::vector<mpz_class> window_;   // v_index .. v_{index+m-1}
  mpz_class initial_scale_;         // D
  mpz_class delta_;
  std::uint64_t index_ = 0;
};

// First n in [0, last] with u_n = 0. Non-zero terms are certified either by
// exact integer iteration or by a non-zero residue modulo a prime; zeros are
// always confirmed by exact iteration.
std::optional<std::uint64_t> first_zero(const LRSpec& spec, std::uint64_t last);

// First n in [0, last] with u_n <= 0, by exact iteration.
std::optional<std::uint64_t> first_non_positive(const LRSpec& spec, std::uint64_t last);

// Exact u_n.
Rational term_at(const LRSpec& spec, std::uint64_t n);

// Absolute logarithmic height ln max(|p|, q) of p/q, rounded up; h(0) = 0.
mp::Real weil_height_rational(const Rational& q, mp::Precision prec = mp::kDefaultPrecision);

}  // namespace skolem
