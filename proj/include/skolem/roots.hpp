#pragma once

// Certified complex root isolation for squarefree integer polynomials.
//
// Approximations come from Aberth-Ehrlich iteration; they are certified with
// Gerschgorin's theorem applied to the Weierstrass companion matrix
// diag(z) - W 1^T, whose characteristic polynomial is p / lc(p):
//   every root lies in the union of the disks D(z_i - W_i, (d-1)|W_i|),
//   and a connected component made of k disks holds exactly k roots.
// Pairwise disjoint disks therefore isolate one root each.

#include <vector>

#include "skolem/int_poly.hpp"
#include "skolem/mp.hpp"

namespace skolem {

struct IsolationConfig {
  mp::Precision start_precision = 128;
  mp::Precision max_precision = 1 << 16;
};

struct RootBox {
  mp::Real center_re;
  mp::Real center_im;
  mp::Real radius;  // closed disk
  int multiplicity = 1;

  // Rectangle enclosing the disk.
  mp::ComplexInterval enclosure() const;
  // Certified range of |z| over the disk.
  mp::Interval modulus() const;
  bool meets_real_axis() const;
  bool disjoint_from(const RootBox& other) const;
  RootBox conjugate() const;
  RootBox negated() const;
  // The whole disk lies inside `other`.
  bool inside(const RootBox& other) const;
};

// Keeps approximations between refinements so successive calls only pay for
// the extra precision.
class RootIsolator {
 public:
  // f must be squarefree with positive degree.
  explicit RootIsolator(IntPolynomial f, IsolationConfig config = {});

  const IntPolynomial& polynomial() const { return f_; }
  const std::vector<RootBox>& boxes() const { return boxes_; }
  mp::Precision precision() const { return precision_; }

  // Doubles the working precision and recertifies. Throws
  // Error{PrecisionExhausted} past the configured cap.
  void refine();
  // Refines until every radius is at most `target`.
  void refine_to(const mp::Real& target);
  mp::Real max_radius() const;

 private:
  bool polish_and_certify();
  void aberth(int max_iterations);

  IntPolynomial f_;
  IsolationConfig config_;
  mp::Precision precision_;
  std::vector<mp::Real> coeffs_;  // ascending, at working precision
  std::vector<mp::Real> re_;      // current approximations
  std::vector<mp::Real> im_;
  std::vector<RootBox> boxes_;
};

// deg f certified, pairwise disjoint boxes of radius <= target_radius.
std::vector<RootBox> isolate_roots(const IntPolynomial& f, const mp::Real& target_radius,
                                   IsolationConfig config = {});

}  // namespace skolem
