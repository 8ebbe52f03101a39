#include "skolem/decider.hpp"

#include <algorithm>

#include "skolem/errors.hpp"

namespace skolem {

using mp::ComplexInterval;
using mp::Interval;
using mp::Real;

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Dominant: return "Dominant";
    case CaseTag::TwoMaxNonDegenerate: return "TwoMaxNonDegenerate";
    case CaseTag::DegenerateMaxPair: return "DegenerateMaxPair";
    case CaseTag::NotSimple: return "NotSimple";
    case CaseTag::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string_view to_string(Problem problem) {
  switch (problem) {
    case Problem::SP: return "SP";
    case Problem::PP: return "PP";
    case Problem::UPP: return "UPP";
  }
  return "SP";
}

std::string_view to_string(Answer answer) {
  switch (answer) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    case Answer::ZeroAt: return "ZeroAt";
    case Answer::NoZero: return "NoZero";
    case Answer::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(Mode mode) { return mode == Mode::Plain ? "plain" : "sharp"; }

std::string_view to_string(Family family) { return family == Family::Monic ? "monic" : "general"; }

Classification classify_detailed(const LRSpec& spec, IsolationConfig config) {
  Classification c;
  c.minimal = spec.minimal() ? spec : minimal_annihilator(spec);
  c.profile = root_profile(primitive_char_poly(c.minimal).f_star, config);
  const RootProfile& p = c.profile;
  if (!p.is_squarefree) {
    c.tag = CaseTag::NotSimple;
  } else if (p.dominant) {
    c.tag = CaseTag::Dominant;
  } else if (p.k_max == 2 && p.max_pair_ratio_unity == Tri::Yes) {
    c.tag = CaseTag::DegenerateMaxPair;
  } else if (p.k_max == 2 && p.max_pair_ratio_unity == Tri::No) {
    c.tag = CaseTag::TwoMaxNonDegenerate;
  } else {
    c.tag = CaseTag::Inconclusive;
  }
  return c;
}

CaseTag classify(const LRSpec& spec) { return classify_detailed(spec).tag; }

namespace {

// b_j = sum_k q_k u_k / f'(alpha_j), q = f / (X - alpha_j). Empty when some
// enclosure still contains zero.
std::optional<std::vector<ComplexInterval>> coefficients_at(const RootIsolator& iso, const LRSpec& spec) {
  const IntPolynomial& f = iso.polynomial();
  const int m = f.degree();
  const mp::Precision prec = iso.precision();
  std::vector<ComplexInterval> out;
  for (const RootBox& box : iso.boxes()) {
    const ComplexInterval alpha = box.enclosure();
    std::vector<ComplexInterval> q(static_cast<std::size_t>(m), ComplexInterval(prec));
    q[static_cast<std::size_t>(m - 1)] = ComplexInterval(Interval(f.leading(), prec));
    for (int k = m - 1; k >= 1; --k) {
      q[static_cast<std::size_t>(k - 1)] = ComplexInterval(Interval(f.coeff(k), prec)) + alpha * q[static_cast<std::size_t>(k)];
    }
    ComplexInterval deriv(Interval(mpz_class(f.leading() * m), prec));
    for (int k = m - 1; k >= 1; --k) deriv = deriv * alpha + ComplexInterval(Interval(mpz_class(f.coeff(k) * k), prec));
    ComplexInterval num(prec);
    for (int k = 0; k < m; ++k) {
      num = num + Interval(spec.initial_terms()[static_cast<std::size_t>(k)], prec) * q[static_cast<std::size_t>(k)];
    }
    if (deriv.contains_zero()) return std::nullopt;
    ComplexInterval b = num / deriv;
    if (b.contains_zero()) return std::nullopt;
    out.push_back(std::move(b));
  }
  return out;
}

IsolationConfig config_for(mp::Precision precision) {
  IsolationConfig config;
  config.start_precision = std::max<mp::Precision>(precision, 64);
  return config;
}

const LRSpec& ensure_minimal(const LRSpec& spec, std::optional<LRSpec>& storage) {
  if (spec.minimal()) return spec;
  storage = minimal_annihilator(spec);
  return *storage;
}

}  // namespace

CoefficientIntervals solve_coefficients_interval(const LRSpec& spec, mp::Precision precision) {
  std::optional<LRSpec> storage;
  const LRSpec& minimal = ensure_minimal(spec, storage);
  const IntPolynomial f = primitive_char_poly(minimal).f_star;
  if (!squarefree_part(f).is_simple) throw Error(ErrorCode::NotSimple, "the characteristic polynomial has a repeated root");
  RootIsolator iso(f, config_for(precision));
  while (true) {
    if (auto b = coefficients_at(iso, minimal)) return {iso.boxes(), std::move(*b), iso.precision()};
    iso.refine();
  }
}

SharpCutoff sharp_cutoff(const LRSpec& spec, mp::Precision precision) {
  std::optional<LRSpec> storage;
  const LRSpec& minimal = ensure_minimal(spec, storage);
  const IntPolynomial f = primitive_char_poly(minimal).f_star;
  if (!squarefree_part(f).is_simple) throw Error(ErrorCode::NotSimple, "the characteristic polynomial has a repeated root");
  RootIsolator iso(f, config_for(precision));
  const std::size_t m = static_cast<std::size_t>(f.degree());

  while (true) {
    auto b = coefficients_at(iso, minimal);
    const auto& boxes = iso.boxes();
    std::optional<std::size_t> top;
    if (b) {
      for (std::size_t i = 0; i < m && !top; ++i) {
        const Interval mi = boxes[i].modulus();
        bool above = mi.lo().sign() > 0;
        for (std::size_t j = 0; j < m && above; ++j) above = j == i || boxes[j].modulus().hi() < mi.lo();
        if (above) top = i;
      }
    }
    if (top) {
      const ComplexInterval alpha = boxes[*top].enclosure();
      const Interval& b1 = (*b)[*top].re();
      const bool signs_known = (alpha.re().is_positive() || alpha.re().is_negative()) && (b1.is_positive() || b1.is_negative());
      if (signs_known) {
        SharpCutoff out;
        out.sign_alpha1 = alpha.re().is_positive() ? 1 : -1;
        out.sign_b1 = b1.is_positive() ? 1 : -1;
        const Real rho1 = boxes[*top].modulus().lo();
        const Real b1_abs = mp::abs((*b)[*top]).lo();
        std::vector<Real> t;
        std::vector<Real> rho;
        for (std::size_t j = 0; j < m; ++j) {
          if (j == *top) continue;
          t.push_back(mp::div(mp::abs((*b)[j]).hi(), b1_abs, MPFR_RNDU));
          rho.push_back(mp::div(boxes[j].modulus().hi(), rho1, MPFR_RNDU));
        }
        // Upper bound for sum_j t_j rho_j^n, decreasing in n.
        auto tail = [&](std::uint64_t n) {
          Real s(iso.precision());
          for (std::size_t j = 0; j < t.size(); ++j) {
            Real p(iso.precision());
            mpfr_pow_ui(p.get(), rho[j].get(), n, MPFR_RNDU);
            s = mp::add(s, mp::mul(t[j], p, MPFR_RNDU), MPFR_RNDU);
          }
          return s;
        };
        const Real one(1L, iso.precision());
        std::uint64_t first = 0;
        if (!(tail(0) < one)) {
          std::uint64_t hi = 1;
          while (!(tail(hi) < one)) {
            if (hi > (std::uint64_t{1} << 62)) throw Error(ErrorCode::PrecisionExhausted, "sharp cutoff search diverged");
            hi *= 2;
          }
          std::uint64_t lo = hi / 2;  // tail(lo) >= 1 or lo == 0 with tail(0) >= 1
          while (hi - lo > 1) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            if (tail(mid) < one) {
              hi = mid;
            } else {
              lo = mid;
            }
          }
          first = hi;
        }
        out.n0 = first == 0 ? 0 : first - 1;
        CoefficientIntervals coeffs{{}, {}, iso.precision()};
        coeffs.roots.push_back(boxes[*top]);
        coeffs.b.push_back((*b)[*top]);
        for (std::size_t j = 0; j < m; ++j) {
          if (j == *top) continue;
          coeffs.roots.push_back(boxes[j]);
          coeffs.b.push_back((*b)[j]);
        }
        out.coefficients = std::move(coeffs);
        return out;
      }
    }
    iso.refine();
  }
}

std::optional<BoundReport> governing_bound(const Classification& c, const DecideOptions& options) {
  if (c.minimal.order() < 2) return std::nullopt;
  if (c.tag != CaseTag::Dominant && c.tag != CaseTag::TwoMaxNonDegenerate) return std::nullopt;
  BoundInputs in = bound_inputs(c.minimal, options.precision);
  if (options.use_irreducibility) {
    in.irreducible = irreducibility_certificate(primitive_char_poly(c.minimal).f_star).proven;
    in.all_real_roots = c.profile.all_roots_real;
  }
  return bounds_from_parameters(in, c.tag == CaseTag::Dominant ? BoundCase::Dominant : BoundCase::EqualModulus,
                                options.precision);
}

namespace {

constexpr std::uint64_t kCourtesySignScan = 10000;

struct Setup {
  Classification c;
  Verdict v;
};

Setup prepare(Problem problem, const LRSpec& spec, const DecideOptions& options) {
  Setup s;
  s.c = classify_detailed(spec, config_for(options.precision));
  s.v.problem = problem;
  s.v.mode = options.mode;
  s.v.case_tag = s.c.tag;
  return s;
}

void set_witness(Verdict& v, const LRSpec& spec, std::uint64_t n) {
  v.witness = n;
  v.witness_value = term_at(spec, n);
}

// u_n = u_0 a^n.
Verdict order_one(Setup s, const DecideOptions&) {
  Verdict& v = s.v;
  const LRSpec& spec = s.c.minimal;
  const Rational& a = spec.coefficients()[0];
  const Rational& u0 = spec.initial_terms()[0];
  v.reason = "order-1 closed form u_n = u_0 a^n";
  if (v.problem == Problem::SP) {
    v.answer = Answer::NoZero;
    v.scanned = {0, 0};
    return v;
  }
  const bool positive = u0 > 0 && a > 0;
  if (positive) {
    v.answer = Answer::Yes;
    return v;
  }
  v.answer = Answer::No;
  if (v.problem == Problem::PP) set_witness(v, spec, u0 <= 0 ? 0 : 1);
  return v;
}

void scan_zero(Verdict& v, const LRSpec& spec, std::uint64_t last, Answer otherwise) {
  v.scanned = {0, last};
  if (auto z = first_zero(spec, last)) {
    v.answer = Answer::ZeroAt;
    v.scanned = {0, *z};
    set_witness(v, spec, *z);
  } else {
    v.answer = otherwise;
  }
}

// Looks for u_n <= 0 with n <= last; records a No verdict when found.
bool scan_non_positive(Verdict& v, const LRSpec& spec, std::uint64_t last) {
  if (auto w = first_non_positive(spec, last)) {
    v.answer = Answer::No;
    v.scanned = {0, *w};
    set_witness(v, spec, *w);
    return true;
  }
  v.scanned = {0, last};
  return false;
}

}  // namespace

Verdict decide_skolem(const LRSpec& spec, const DecideOptions& options) {
  Setup s = prepare(Problem::SP, spec, options);
  if (s.c.minimal.order() == 1) return order_one(std::move(s), options);
  Verdict& v = s.v;
  const LRSpec& seq = s.c.minimal;
  v.bound = governing_bound(s.c, options);

  if (!v.bound) {
    v.reason = "no explicit bound for case " + std::string(to_string(s.c.tag)) + "; courtesy scan only";
    scan_zero(v, seq, options.cutoff, Answer::Unknown);
    return v;
  }
  if (options.mode == Mode::Sharp && s.c.tag == CaseTag::Dominant) {
    SharpCutoff sc = sharp_cutoff(seq, options.precision);
    v.n0 = sc.n0;
    v.sign_b1 = sc.sign_b1;
    if (sc.n0 > options.cutoff) {
      v.reason = "sharp cutoff exceeds the scan cutoff";
      scan_zero(v, seq, options.cutoff, Answer::Unknown);
      return v;
    }
    v.reason = "dominant root; terms beyond n0 have certified sign";
    scan_zero(v, seq, sc.n0, Answer::NoZero);
    return v;
  }
  if (v.bound->bound.floor > options.cutoff) {
    v.reason = "bound exceeds the scan cutoff";
    scan_zero(v, seq, options.cutoff, Answer::Unknown);
    return v;
  }
  v.reason = options.mode == Mode::Sharp ? "sharp cutoff needs a dominant root; scanned up to the bound"
                                         : "scanned up to the bound";
  scan_zero(v, seq, v.bound->bound.floor.get_ui(), Answer::NoZero);
  return v;
}

Verdict decide_positivity(const LRSpec& spec, const DecideOptions& options) {
  Setup s = prepare(Problem::PP, spec, options);
  if (s.c.minimal.order() == 1) return order_one(std::move(s), options);
  Verdict& v = s.v;
  const LRSpec& seq = s.c.minimal;
  const RootProfile& p = s.c.profile;

  if (s.c.tag == CaseTag::Dominant && p.dominant_root_real_sign == RootSign::Positive) {
    v.bound = governing_bound(s.c, options);
    SharpCutoff sc = sharp_cutoff(seq, options.precision);
    v.n0 = sc.n0;
    v.sign_b1 = sc.sign_b1;
    if (options.mode == Mode::Plain && v.bound->bound.floor > options.cutoff) {
      v.reason = "bound exceeds the scan cutoff";
      if (!scan_non_positive(v, seq, std::min(options.cutoff, kCourtesySignScan))) v.answer = Answer::Unknown;
      return v;
    }
    const std::uint64_t last = options.mode == Mode::Sharp ? sc.n0 : v.bound->bound.floor.get_ui();
    if (last > options.cutoff) {
      v.reason = "sharp cutoff exceeds the scan cutoff";
      if (!scan_non_positive(v, seq, std::min(options.cutoff, kCourtesySignScan))) v.answer = Answer::Unknown;
      return v;
    }
    if (scan_non_positive(v, seq, last)) {
      v.reason = "non-positive term found";
      return v;
    }
    if (sc.sign_b1 > 0) {
      v.answer = Answer::Yes;
      v.reason = "all scanned terms positive and b1 > 0";
      return v;
    }
    // Beyond the scanned range every term has the sign of b1.
    v.answer = Answer::No;
    v.reason = "b1 < 0: terms are eventually negative";
    set_witness(v, seq, std::max(last, sc.n0) + 1);
    return v;
  }
  if (s.c.tag == CaseTag::Dominant) {
    v.reason = "negative dominant root: signs alternate eventually";
  } else if (!p.positive_maximal_root) {
    v.reason = "no positive root of maximal modulus: infinitely many negative terms";
  } else {
    v.reason = "positive maximal root without dominance; courtesy scan only";
    if (!scan_non_positive(v, seq, std::min(options.cutoff, kCourtesySignScan))) v.answer = Answer::Unknown;
    return v;
  }
  if (!scan_non_positive(v, seq, options.cutoff)) {
    v.answer = Answer::Unknown;
    v.reason += "; no witness within the cutoff";
  }
  return v;
}

Verdict decide_upp(const LRSpec& spec, const DecideOptions& options) {
  Setup s = prepare(Problem::UPP, spec, options);
  if (s.c.minimal.order() == 1) return order_one(std::move(s), options);
  Verdict& v = s.v;
  const LRSpec& seq = s.c.minimal;
  const RootProfile& p = s.c.profile;

  if (s.c.tag == CaseTag::Dominant && p.dominant_root_real_sign == RootSign::Positive) {
    v.bound = governing_bound(s.c, options);
    SharpCutoff sc = sharp_cutoff(seq, options.precision);
    v.n0 = sc.n0;
    v.sign_b1 = sc.sign_b1;
    v.answer = sc.sign_b1 > 0 ? Answer::Yes : Answer::No;
    v.reason = sc.sign_b1 > 0 ? "b1 > 0: terms beyond n0 are positive" : "b1 < 0: terms beyond n0 are negative";
    return v;
  }
  if (s.c.tag == CaseTag::Dominant) {
    v.answer = Answer::No;
    v.reason = "negative dominant root: both signs occur infinitely often";
    return v;
  }
  if (!p.positive_maximal_root) {
    v.answer = Answer::No;
    v.reason = "no positive root of maximal modulus: infinitely many negative terms";
    return v;
  }
  v.answer = Answer::Unknown;
  v.reason = "positive maximal root without dominance";
  return v;
}

Verdict decide(Problem problem, const LRSpec& spec, const DecideOptions& options) {
  switch (problem) {
    case Problem::SP: return decide_skolem(spec, options);
    case Problem::PP: return decide_positivity(spec, options);
    case Problem::UPP: return decide_upp(spec, options);
  }
  return decide_skolem(spec, options);
}

}  // namespace skolem
