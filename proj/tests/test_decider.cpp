#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "skolem/decider.hpp"
#include "skolem/errors.hpp"

using namespace skolem;
using testing::lrs;

namespace {

DecideOptions opts(Mode mode, std::uint64_t cutoff = 1000000) {
  DecideOptions o;
  o.mode = mode;
  o.cutoff = cutoff;
  return o;
}

// Exact sign of u_n by plain rational iteration.
std::vector<int> exact_signs(const LRSpec& s, std::size_t count) {
  std::vector<int> out;
  for (const auto& t : testing::naive_terms(s.coefficients(), s.initial_terms(), count)) out.push_back(sgn(t));
  return out;
}

// Soundness of any verdict by brute force.
void check_sound(const LRSpec& s, const Verdict& v) {
  if (v.answer == Answer::ZeroAt) {
    REQUIRE(v.witness.has_value());
    REQUIRE(term_at(s, *v.witness) == 0);
    REQUIRE(*v.witness_value == 0);
    if (*v.witness > 0) REQUIRE_FALSE(first_zero(s, *v.witness - 1).has_value());
  }
  if (v.problem == Problem::PP && v.answer == Answer::No && v.witness) {
    REQUIRE(term_at(s, *v.witness) <= 0);
  }
  if (v.answer == Answer::NoZero) {
    REQUIRE_FALSE(first_zero(s, 10000).has_value());
  }
  if (v.problem == Problem::PP && v.answer == Answer::Yes) {
    REQUIRE_FALSE(first_non_positive(s, 2000).has_value());
  }
}

LRSpec random_spec(std::mt19937_64& rng, int m, long H) {
  std::uniform_int_distribution<long> c(-H, H);
  std::vector<Rational> a(m), u(m);
  for (auto& x : a) x = c(rng);
  while (a.back() == 0) a.back() = c(rng);
  for (auto& x : u) x = c(rng);
  if (std::all_of(u.begin(), u.end(), [](const Rational& x) { return x == 0; })) u[0] = 1;
  return validate_lrs(a, u);
}

}  // namespace

TEST_SUITE("decider") {

TEST_CASE("classification") {
  CHECK(classify(lrs({"1", "1"}, {"1", "1"})) == CaseTag::Dominant);
  CHECK(classify(lrs({"1", "-2"}, {"1", "1"})) == CaseTag::TwoMaxNonDegenerate);
  CHECK(classify(lrs({"0", "1"}, {"1", "-1"})) == CaseTag::Dominant);  // reduces to u_n = (-1)^n
  CHECK(classify(lrs({"0", "1"}, {"1", "0"})) == CaseTag::DegenerateMaxPair);
  CHECK(classify(lrs({"2", "-1"}, {"1", "2"})) == CaseTag::NotSimple);
  CHECK(classify(lrs({"0", "-1", "1"}, {"1", "1", "1"})) == CaseTag::TwoMaxNonDegenerate);
  CHECK(classify(lrs({"3", "-2"}, {"1", "2"})) == CaseTag::Dominant);
  CHECK(classify_detailed(lrs({"3", "-2"}, {"1", "2"})).minimal.order() == 1);
}

TEST_CASE("skolem examples") {
  LRSpec fib = lrs({"1", "1"}, {"1", "1"});
  Verdict v = decide_skolem(fib, opts(Mode::Plain));
  CHECK(v.answer == Answer::NoZero);
  REQUIRE(v.scanned);
  CHECK(v.scanned->first == 0);
  CHECK(v.scanned->second == 12);
  REQUIRE(v.bound);
  CHECK(v.bound->theorem == "N3");

  v = decide_skolem(lrs({"1", "1"}, {"0", "1"}));
  CHECK(v.answer == Answer::ZeroAt);
  CHECK(v.witness == std::optional<std::uint64_t>(0));

  v = decide_skolem(lrs({"1", "-2"}, {"1", "1"}), opts(Mode::Plain));
  CHECK(v.answer == Answer::NoZero);
  CHECK(v.scanned->second == 33);
  CHECK(v.bound->theorem == "N4");

  LRSpec trib = lrs({"1", "1", "1"}, {"1", "1", "1"});
  v = decide_skolem(trib, opts(Mode::Plain));
  CHECK(v.answer == Answer::Unknown);
  REQUIRE(v.bound);
  CHECK(v.bound->bound.log10 == doctest::Approx(10.9954).epsilon(1e-4));
  v = decide_skolem(trib, opts(Mode::Sharp));
  CHECK(v.answer == Answer::NoZero);
  REQUIRE(v.n0);
  CHECK(*v.n0 <= 20);
}

TEST_CASE("skolem outside the bounded cases") {
  // (-1)^n interleaved with zeros: degenerate maximal pair, zero found by courtesy scan
  Verdict v = decide_skolem(lrs({"0", "1"}, {"1", "0"}));
  CHECK(v.answer == Answer::ZeroAt);
  CHECK(v.witness == std::optional<std::uint64_t>(1));
  // u_n = n + 1: repeated root, no zero, no bound
  v = decide_skolem(lrs({"2", "-1"}, {"1", "2"}), opts(Mode::Sharp, 5000));
  CHECK(v.answer == Answer::Unknown);
  CHECK(v.case_tag == CaseTag::NotSimple);
  CHECK_FALSE(v.reason.empty());
  // X^3 + X - 1 with a zero at n = 3
  v = decide_skolem(lrs({"0", "-1", "1"}, {"1", "1", "1"}), opts(Mode::Sharp, 1000));
  CHECK(v.answer == Answer::ZeroAt);
  CHECK(v.witness == std::optional<std::uint64_t>(3));
  // the same recurrence with a zero-free start stays undecided
  v = decide_skolem(lrs({"0", "-1", "1"}, {"1", "2", "1"}), opts(Mode::Sharp, 1000));
  CHECK(v.answer == Answer::Unknown);
  REQUIRE(v.bound);
  CHECK(v.bound->theorem == "N2");
}

TEST_CASE("positivity and ultimate positivity examples") {
  LRSpec fib = lrs({"1", "1"}, {"1", "1"});
  CHECK(decide_positivity(fib).answer == Answer::Yes);
  CHECK(decide_positivity(fib, opts(Mode::Plain)).answer == Answer::Yes);
  CHECK(decide_upp(fib).answer == Answer::Yes);
  CHECK(decide_upp(fib).sign_b1 == 1);

  Verdict v = decide_positivity(lrs({"1", "1"}, {"1", "-1"}));
  CHECK(v.answer == Answer::No);
  CHECK(v.witness == std::optional<std::uint64_t>(1));

  v = decide_positivity(lrs({"1", "-2"}, {"1", "1"}));
  CHECK(v.answer == Answer::No);
  CHECK(v.witness == std::optional<std::uint64_t>(2));
  CHECK(*v.witness_value == -1);
  CHECK(decide_upp(lrs({"1", "-2"}, {"1", "1"})).answer == Answer::No);

  v = decide_upp(lrs({"1", "1"}, {"-1", "-1"}));
  CHECK(v.answer == Answer::No);
  CHECK(v.sign_b1 == -1);

  // negative dominant root: both signs infinitely often
  CHECK(decide_upp(lrs({"-2"}, {"1"})).answer == Answer::No);
  CHECK(decide_upp(lrs({"-1", "1"}, {"1", "1"})).answer == Answer::No);
  CHECK(decide_positivity(lrs({"-1", "1"}, {"1", "1"})).answer == Answer::No);
  // order one
  CHECK(decide_positivity(lrs({"1/2"}, {"3"})).answer == Answer::Yes);
  CHECK(decide_positivity(lrs({"2"}, {"-3"})).answer == Answer::No);
  // u_n = 2 - 2^n
  v = decide_positivity(lrs({"3", "-2"}, {"1", "0"}));
  CHECK(v.answer == Answer::No);
  // tribonacci is positive
  CHECK(decide_positivity(lrs({"1", "1", "1"}, {"1", "1", "1"})).answer == Answer::Yes);
  CHECK(decide_upp(lrs({"1", "1", "1"}, {"1", "1", "1"})).answer == Answer::Yes);
}

TEST_CASE("sharp cutoff grows as b1 shrinks") {
  // u = (F_{k+1}, -F_k) makes b1 ~ phi^-2k
  std::uint64_t previous = 0;
  mpz_class a = 1, b = 1;
  for (int k = 1; k <= 12; ++k) {
    mpz_class next = a + b;
    a = b;
    b = next;
    LRSpec s = validate_lrs({1, 1}, {Rational(b), Rational(-a)});
    SharpCutoff c = sharp_cutoff(s);
    CHECK(c.n0 >= previous);
    previous = c.n0;
  }
  CHECK(previous >= 12);
  CHECK(sharp_cutoff(lrs({"1", "1"}, {"1", "1000000"})).n0 <= sharp_cutoff(lrs({"1", "1"}, {"1", "-618034"})).n0);
}

TEST_CASE("coefficients of the closed form") {
  CoefficientIntervals c = solve_coefficients_interval(lrs({"1", "1"}, {"0", "1"}));
  REQUIRE(c.b.size() == 2);
  // b = +-1/sqrt(5)
  for (const auto& b : c.b) {
    CHECK(std::abs(std::abs(b.re().mid().to_double()) - 1 / std::sqrt(5.0)) < 1e-15);
    CHECK(std::abs(b.im().mid().to_double()) < 1e-15);
  }
  CHECK_THROWS_AS(solve_coefficients_interval(lrs({"2", "-1"}, {"1", "2"})), Error);
}

TEST_CASE("property: verdict soundness on random sequences") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    int m = 1 + static_cast<int>(rng() % 4);
    LRSpec s = random_spec(rng, m, 3);
    for (Problem p : {Problem::SP, Problem::PP, Problem::UPP}) {
      for (Mode mode : {Mode::Plain, Mode::Sharp}) {
        Verdict v = decide(p, s, opts(mode, 20000));
        INFO(trial);
        check_sound(s, v);
      }
    }
  }
}

TEST_CASE("property: plain and sharp agree when the bound is small") {
  std::mt19937_64 rng(8);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    LRSpec s = random_spec(rng, 2, 4);
    Classification c = classify_detailed(s);
    auto bound = governing_bound(c, {});
    if (!bound || bound->bound.floor > 10000) continue;
    ++compared;
    for (Problem p : {Problem::SP, Problem::PP, Problem::UPP}) {
      Verdict plain = decide(p, s, opts(Mode::Plain)), sharp = decide(p, s, opts(Mode::Sharp));
      REQUIRE(plain.answer == sharp.answer);
      if (p == Problem::SP) REQUIRE(plain.witness == sharp.witness);
    }
  }
  CHECK(compared > 50);
}

TEST_CASE("property: sign constancy beyond n0 and n0 below the bound") {
  std::mt19937_64 rng(9);
  int dominant = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int m = 2 + static_cast<int>(rng() % 3);
    LRSpec s = random_spec(rng, m, 3);
    Classification c = classify_detailed(s);
    if (c.tag != CaseTag::Dominant || c.minimal.order() < 2) continue;
    ++dominant;
    SharpCutoff cut = sharp_cutoff(c.minimal);
    auto bound = governing_bound(c, {});
    REQUIRE(bound);
    REQUIRE(mpz_class(cut.n0) <= bound->bound.floor);
    auto signs = exact_signs(c.minimal, cut.n0 + 501);
    for (std::uint64_t n = cut.n0 + 1; n <= cut.n0 + 500; ++n) {
      int expected = cut.sign_b1 * ((cut.sign_alpha1 < 0 && n % 2 == 1) ? -1 : 1);
      REQUIRE(signs[n] == expected);
    }
  }
  CHECK(dominant > 30);
}

TEST_CASE("density scans") {
  DensityOptions o;
  o.m = 2;
  o.H = 1;
  DensityReport r = density_scan(o);
  CHECK(r.total == 9);
  CHECK(r.dominant == 4);
  CHECK(r.fraction(r.dominant) == doctest::Approx(4.0 / 9.0));
  for (long H = 1; H <= 4; ++H) {
    o.m = 1;
    o.H = H;
    r = density_scan(o);
    CHECK(r.total == static_cast<std::uint64_t>(2 * H + 1));
    CHECK(r.dominant == static_cast<std::uint64_t>(2 * H));
  }
  o.m = 2;
  o.H = 2;
  o.family = Family::General;
  r = density_scan(o);
  CHECK(r.total == 4 * 25);
  CHECK(r.k_max_1 + r.k_max_2 + r.k_max_3_plus + r.unresolved == r.total);
}

TEST_CASE("density sampling is deterministic and thread independent") {
  DensityOptions o;
  o.m = 3;
  o.H = 10;
  o.samples = 300;
  o.seed = 42;
  o.threads = 1;
  DensityReport a = density_scan(o);
  o.threads = 3;
  DensityReport b = density_scan(o);
  CHECK(a.total == 300);
  CHECK(a.dominant == b.dominant);
  CHECK(a.k_max_2 == b.k_max_2);
  CHECK(a.degenerate == b.degenerate);
  o.seed = 43;
  DensityReport c = density_scan(o);
  CHECK(c.total == 300);
}

}  // TEST_SUITE
