#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skolem {

// Univariate polynomial with arbitrary-precision integer coefficients.
// Coefficients are stored in ascending powers and kept trimmed, so the zero
// polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> ascending);

  // a*_0 X^m + a*_1 X^{m-1} + ... + a*_m, leading coefficient first.
  static IntPolynomial from_descending(std::vector<mpz_class> descending);
  static IntPolynomial from_descending(std::initializer_list<long> descending);
  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(const mpz_class& c, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  // Coefficient of X^power (zero outside the stored range).
  const mpz_class& coeff(int power) const;
  const mpz_class& leading() const { return coeffs_.back(); }
  const mpz_class& trailing() const { return coeffs_.front(); }
  const std::vector<mpz_class>& ascending() const { return coeffs_; }
  std::vector<mpz_class> descending() const;

  mpz_class content() const;
  // Divides by the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;
  // f(-X)
  IntPolynomial negate_argument() const;
  // Largest k with X^k | f, and f / X^k.
  std::pair<int, IntPolynomial> split_zero_roots() const;

  mpz_class evaluate(const mpz_class& x) const;

  mpz_class height() const;       // max |a_i|
  mpz_class length() const;       // sum |a_i|
  mpz_class sum_squares() const;  // sum a_i^2

  // Human-readable form, e.g. "X^2 - X - 1".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& c, const IntPolynomial& a);

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// a / b when b divides a in Z[X]; nullopt otherwise. b must be non-zero.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial primitive_gcd(const IntPolynomial& a, const IntPolynomial& b);

struct SquarefreeFactor {
  IntPolynomial factor;  // primitive, squarefree, positive leading coefficient
  int multiplicity;
};

// f = c * prod factor_i^multiplicity_i with pairwise coprime factors of
// positive degree. Constant f yields an empty list.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& f);

// n-th cyclotomic polynomial.
IntPolynomial cyclotomic(int n);

// Euler's totient.
long euler_phi(long n);

// Determinant of a square integer matrix (fraction-free Bareiss elimination).
mpz_class determinant(std::vector<std::vector<mpz_class>> matrix);

}  // namespace skolem
