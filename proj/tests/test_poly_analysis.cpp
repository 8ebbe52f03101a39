#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "property_checks.hpp"
#include "skolem/errors.hpp"
#include "skolem/poly_analysis.hpp"

using namespace skolem;
using P = IntPolynomial;
using oracle::Complex;
using oracle::Float;

using checks::root_in;
using checks::upper;


TEST_SUITE("poly_analysis") {

TEST_CASE("height and length") {
  auto hl = poly_height_length(P::from_descending({2, 0, -3, 1}));
  CHECK(hl.height == 3);
  CHECK(hl.length == 6);
  hl = poly_height_length(P::from_descending({1, -1, -1}));
  CHECK(hl.height == 1);
  CHECK(hl.length == 3);
  hl = poly_height_length(P::from_descending({1, -2}));
  CHECK(hl.height == 2);
  CHECK(hl.length == 3);
}

TEST_CASE("mahler upper bound") {
  CHECK(mahler_upper(P::from_descending({1, -1, -1})).to_double() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(mahler_upper(P::from_descending({1, 0, 0, 0})).to_double() == doctest::Approx(1.0));
  CHECK(mahler_upper(P::from_descending({1, -2})).to_double() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  // golden ratio < sqrt(3)
  CHECK(mahler_upper(P::from_descending({1, -1, -1})).to_double() > 1.6180339887);
}

TEST_CASE("cauchy annulus") {
  auto c = cauchy_bounds(P::from_descending({1, -1, -1}));
  CHECK(c.lower.to_double() == doctest::Approx(0.5));
  CHECK(c.upper.to_double() == doctest::Approx(2.0));
  c = cauchy_bounds(P::from_descending({1, -3, 2}));
  CHECK(c.lower.to_double() == doctest::Approx(0.25));
  CHECK(c.upper.to_double() == doctest::Approx(4.0));
  c = cauchy_bounds(P::from_descending({1, 1, 1}));
  CHECK(c.lower.to_double() == doctest::Approx(0.5));
  CHECK(c.upper.to_double() == doctest::Approx(2.0));
  c = cauchy_bounds(P::from_descending({1, 0, -2}));
  CHECK(c.lower.is_zero());
  CHECK_THROWS_AS(cauchy_bounds(P::from_descending({3, 0, 0})), Error);
}

TEST_CASE("modulus gap bounds") {
  CHECK(modulus_gap_bound(2, 3, GapCase::Quadratic).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(modulus_gap_bound(3, 1, GapCase::OneReal).to_double() == doctest::Approx(std::ldexp(1.0, -27)).epsilon(1e-12));
  CHECK(modulus_gap_bound(3, 1, GapCase::General).to_double() == doctest::Approx(std::ldexp(1.0, -27)).epsilon(1e-12));
  // rounded down
  CHECK(upper(modulus_gap_bound(3, 7, GapCase::General)) <= oracle::s_gap({3, 1, {}, 7, 2}));
  CHECK(upper(modulus_gap_bound(4, 5, GapCase::OneReal)) <= oracle::r_gap({4, 1, {}, 5, 2}));
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code([] { modulus_gap_bound(3, 1, GapCase::Quadratic); }) == ErrorCode::CaseDegreeMismatch);
  CHECK(code([] { modulus_gap_bound(2, 1, GapCase::General); }) == ErrorCode::CaseDegreeMismatch);
}

TEST_CASE("squarefree part") {
  auto s = squarefree_part(P::from_descending({1, -4, 5, -2}));
  CHECK(s.g == P::from_descending({1, -3, 2}));
  CHECK_FALSE(s.is_simple);
  s = squarefree_part(P::from_descending({1, -1, -1}));
  CHECK(s.g == P::from_descending({1, -1, -1}));
  CHECK(s.is_simple);
  s = squarefree_part(P::from_descending({1, 0, 0, 0}));
  CHECK(s.g == P::from_descending({1, 0}));
  CHECK_FALSE(s.is_simple);
}

TEST_CASE("root isolation") {
  auto boxes = isolate_roots(P::from_descending({1, -1, -1}), mp::Real(1e-10, 128));
  REQUIRE(boxes.size() == 2);
  std::vector<double> re;
  for (const auto& b : boxes) {
    CHECK(b.radius.to_double() <= 1e-10);
    re.push_back(b.center_re.to_double());
  }
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(-0.6180339887).epsilon(1e-9));
  CHECK(re[1] == doctest::Approx(1.6180339887).epsilon(1e-9));
  CHECK(boxes[0].disjoint_from(boxes[1]));

  boxes = isolate_roots(P::from_descending({1, 0, 1}), mp::Real(1e-5, 128));
  REQUIRE(boxes.size() == 2);
  for (const auto& b : boxes) CHECK(std::abs(std::abs(b.center_im.to_double()) - 1.0) < 1e-5);

  boxes = isolate_roots(P::from_descending({1, -1, -1, -1}), mp::Real(1e-10, 128));
  REQUIRE(boxes.size() == 3);
  int real = 0;
  for (const auto& b : boxes) {
    double mod = std::hypot(b.center_re.to_double(), b.center_im.to_double());
    if (std::abs(b.center_im.to_double()) < 1e-12) {
      ++real;
      CHECK(b.center_re.to_double() == doctest::Approx(1.83928675521).epsilon(1e-10));
    } else {
      CHECK(mod == doctest::Approx(0.7373527).epsilon(1e-6));
    }
  }
  CHECK(real == 1);
}

TEST_CASE("isolation boxes contain exactly one oracle root") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    int m = 1 + static_cast<int>(rng() % 7);
    P f = squarefree_part(P(oracle::random_poly(rng, m, 20))).g;
    if (f.degree() < 1) continue;
    RootIsolator iso(f);
    auto rts = oracle::roots(f.ascending());
    REQUIRE(iso.boxes().size() == rts.size());
    for (const auto& b : iso.boxes()) REQUIRE(root_in(b, rts) != nullptr);
    for (std::size_t i = 0; i < iso.boxes().size(); ++i)
      for (std::size_t j = i + 1; j < iso.boxes().size(); ++j) REQUIRE(iso.boxes()[i].disjoint_from(iso.boxes()[j]));
    iso.refine_to(mp::Real(1e-30, 128));
    for (const auto& b : iso.boxes()) {
      REQUIRE(b.radius <= mp::Real(1e-30, 128));
      REQUIRE(root_in(b, rts) != nullptr);
    }
  }
}

TEST_CASE("root profiles") {
  RootProfile p = root_profile(P::from_descending({1, -1, -1}));
  CHECK(p.k_max == 1);
  CHECK(p.dominant);
  CHECK(p.dominant_root_real_sign == RootSign::Positive);
  CHECK(p.is_squarefree);

  p = root_profile(P::from_descending({1, 0, 1, -1}));
  CHECK(p.k_max == 2);
  CHECK_FALSE(p.dominant);
  CHECK(p.boxes[0].modulus().lo().to_double() == doctest::Approx(1.2106).epsilon(1e-4));
  CHECK(p.max_pair_ratio_unity == Tri::No);

  p = root_profile(P::from_descending({1, -1, 1}));
  CHECK(p.k_max == 2);
  CHECK_FALSE(p.dominant);
  CHECK(p.globally_degenerate == Tri::Yes);

  p = root_profile(P::from_descending({1, 1, -1}));
  CHECK(p.dominant);
  CHECK(p.dominant_root_real_sign == RootSign::Negative);

  // equal moduli forced by exact witnesses: +-sqrt(2), and 2 with +-2i
  p = root_profile(P::from_descending({1, 0, -2}));
  CHECK(p.k_max == 2);
  CHECK(p.positive_maximal_root);
  p = root_profile(P::from_descending({1, -2, 4, -8}));
  CHECK(p.k_max == 3);
  // 1+2i and 2+i have equal modulus without a conjugate or sign witness
  p = root_profile(P::from_descending({1, -6, 18, -30, 25}));
  CHECK(p.k_max == 4);

  // repeated maximal root is not dominant
  p = root_profile(P::from_descending({1, -4, 4}));
  CHECK_FALSE(p.is_squarefree);
  CHECK(p.k_max == 2);
  CHECK_FALSE(p.dominant);

  // zero roots never dominate
  p = root_profile(P::from_descending({1, 0}));
  CHECK_FALSE(p.dominant);
  CHECK(p.zero_root_multiplicity == 1);
  p = root_profile(P::from_descending({1, 1, 0}));
  CHECK(p.dominant);
}

TEST_CASE("ratio polynomial") {
  P g = ratio_poly(P::from_descending({1, -3, 2}));
  CHECK(g.degree() == 2);
  CHECK(g == P::from_descending({2, -5, 2}));
  CHECK(ratio_poly(P::from_descending({1, 0, 1})) == P::from_descending({1, 2, 1}));
  g = ratio_poly(P::from_descending({1, -1, -1}));
  CHECK(g == P::from_descending({1, 3, 1}));  // roots -phi^2, -phi^-2
  CHECK_THROWS_AS(ratio_poly(P::from_descending({1, 1, 0})), Error);
}

TEST_CASE("degeneracy status") {
  auto s = degeneracy_status(P::from_descending({1, 0, 1}));
  CHECK(s.globally_degenerate == Tri::Yes);
  CHECK(s.max_pair_ratio_unity == Tri::Yes);
  s = degeneracy_status(P::from_descending({1, -1, -1}));
  CHECK(s.globally_degenerate == Tri::No);
  CHECK(s.max_pair_ratio_unity == Tri::No);
  s = degeneracy_status(P::from_descending({1, 0, -2}));
  CHECK(s.globally_degenerate == Tri::Yes);
  CHECK(s.max_pair_ratio_unity == Tri::Yes);
  CHECK(unity_order_bound(3) == 72);
  // degenerate pair below the maximal modulus: roots 3, 1, -1
  s = degeneracy_status(P::from_descending({1, -3, -1, 3}));
  CHECK(s.globally_degenerate == Tri::Yes);
  CHECK(s.max_pair_ratio_unity == Tri::No);
}

TEST_CASE("irreducibility certificates") {
  auto c = irreducibility_certificate(P::from_descending({1, -1, -1}));
  CHECK(c.proven);
  CHECK(c.prime == 2);
  CHECK_FALSE(irreducibility_certificate(P::from_descending({1, 0, -1})).proven);
  CHECK(irreducibility_certificate(P::from_descending({1, -1, -1, -1})).proven);
  // irreducible over Q but reducible modulo every prime
  CHECK_FALSE(irreducibility_certificate(P::from_descending({1, 0, 0, 0, 1})).proven);
}

TEST_CASE("property: isolation is deterministic") {
  P f = P::from_descending({3, -7, 0, 11, -2, 5});
  auto a = root_profile(f), b = root_profile(f);
  REQUIRE(a.boxes.size() == b.boxes.size());
  for (std::size_t i = 0; i < a.boxes.size(); ++i) {
    CHECK(a.boxes[i].center_re == b.boxes[i].center_re);
    CHECK(a.boxes[i].center_im == b.boxes[i].center_im);
    CHECK(a.boxes[i].radius == b.boxes[i].radius);
  }
}

TEST_CASE("property: separation lemmas on a random corpus") {
  auto r = checks::separation_check(checks::corpus(1000));
  CHECK(r.polynomials == 1000);
  CHECK(r.pairs > 1000);
  CHECK(r.unmatched == 0);
  CHECK(r.violations == 0);
}

TEST_CASE("property: cauchy annulus and landau inequality on a random corpus") {
  auto r = checks::landau_cauchy_check(checks::corpus(1000));
  CHECK(r.polynomials == 1000);
  CHECK(r.unmatched == 0);
  CHECK(r.annulus_violations == 0);
  CHECK(r.landau_violations == 0);
}

TEST_CASE("property: ratio polynomial roots are the root ratios") {
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 120) {
    int m = 2 + static_cast<int>(rng() % 3);
    P f(oracle::random_poly(rng, m, 6));
    if (!squarefree_part(f).is_simple) continue;
    ++checked;
    P g = ratio_poly(f);
    REQUIRE(g.degree() == m * (m - 1));
    auto rts = oracle::roots(f.ascending());
    // lc(g) prod (X - a_i / a_j) must reproduce g
    std::vector<Complex> prod{Complex(1)};
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        Complex r = rts[i] / rts[j];
        std::vector<Complex> next(prod.size() + 1, Complex(0));
        for (std::size_t k = 0; k < prod.size(); ++k) {
          next[k + 1] += prod[k];
          next[k] -= r * prod[k];
        }
        prod = std::move(next);
      }
    }
    const Float lc = oracle::from_mpz(g.leading());
    for (int k = 0; k <= g.degree(); ++k) {
      Float expected = oracle::from_mpz(g.coeff(k));
      Complex got = prod[k] * lc;
      REQUIRE(abs(got.imag()) < Float("1e-60") * (1 + abs(expected)));
      REQUIRE(abs(got.real() - expected) < Float("1e-60") * (1 + abs(expected)));
    }
  }
}

TEST_CASE("property: degeneracy agrees with the numeric oracle") {
  auto r = checks::degeneracy_equivalence();
  INFO(r.first_mismatch);
  CHECK(r.polynomials > 200);
  CHECK(r.degenerate > 0);
  CHECK(r.ambiguous == 0);
  CHECK(r.mismatches == 0);
}

}  // TEST_SUITE
