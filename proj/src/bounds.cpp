#include "skolem/bounds.hpp"

#include "skolem/errors.hpp"

namespace skolem {

using mp::Interval;
using mp::Real;

namespace {

void check(const BoundInputs& in) {
  if (in.m < 1 || in.d < 1) throw Error(ErrorCode::InvalidArgument, "m and d must be positive");
  if (in.heights_u.size() != static_cast<std::size_t>(in.m)) {
    throw Error(ErrorCode::InvalidArgument, "one height per initial term is required");
  }
  for (const auto& h : in.heights_u) {
    if (h.sign() < 0) throw Error(ErrorCode::InvalidArgument, "heights are non-negative");
  }
  if (in.H_fstar < 1) throw Error(ErrorCode::InvalidArgument, "H(f*) must be at least 1");
  if (in.sumsq_fstar < 2) throw Error(ErrorCode::InvalidArgument, "sum of squares of f* must be at least 2");
}

Interval q(const mpq_class& v, mp::Precision prec) { return Interval(v, prec); }
Interval z(long v, mp::Precision prec) { return Interval(v, prec); }

Interval factorial(int m, mp::Precision prec) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
  return Interval(f, prec);
}

Interval height_sum(const BoundInputs& in, mp::Precision prec) {
  Interval s(0L, prec);
  for (const auto& h : in.heights_u) s = s + Interval(h);
  return s;
}

Interval log_sumsq(const BoundInputs& in, mp::Precision prec) { return mp::log(Interval(in.sumsq_fstar, prec)); }

// base^e for positive base and rational e.
Interval power(const Interval& base, const mpq_class& e, mp::Precision prec) {
  if (e.get_den() == 1 && e >= 0) return mp::pow(base, e.get_num().get_ui());
  return mp::pow(base, q(e, prec));
}

// The bracket shared by B(u), C_1 and C_2:
//   sum h(u_i) + 3/2 t log(sum a*^2) + 3/2 m^2 - m/2 + shift
Interval bracket(const BoundInputs& in, long t, long shift, mp::Precision prec) {
  const long m = in.m;
  return height_sum(in, prec) + q(mpq_class(3 * t, 2), prec) * log_sumsq(in, prec) + q(mpq_class(3 * m * m, 2), prec) -
         q(mpq_class(m, 2), prec) + z(shift, prec);
}

BigBound finish(Interval value, std::vector<std::pair<std::string, Interval>> components) {
  BigBound out{std::move(value), {}, {}, 0, std::move(components)};
  out.ceiling = mp::ceil_to_integer(out.value.hi());
  out.floor = mp::floor_to_integer(out.value.hi());
  Real c(out.ceiling, 128, MPFR_RNDN);
  mpfr_log10(c.get(), c.get(), MPFR_RNDN);
  out.log10 = c.to_double();
  return out;
}

}  // namespace

std::string_view to_string(BoundCase c) { return c == BoundCase::Dominant ? "dominant" : "equal_modulus"; }

BoundInputs bound_inputs(const LRSpec& spec, mp::Precision prec) {
  BoundInputs in;
  in.m = spec.order();
  in.d = 1;
  for (const auto& u : spec.initial_terms()) in.heights_u.push_back(weil_height_rational(u, prec));
  const IntPolynomial f = primitive_char_poly(spec).f_star;
  in.H_fstar = f.height();
  in.sumsq_fstar = f.sum_squares();
  return in;
}

Interval b_height_bound(const BoundInputs& in, mp::Precision prec) {
  check(in);
  if (in.m < 2) throw Error(ErrorCode::OrderTooSmall, "B(u) needs order at least 2");
  const long t = in.irreducible ? in.m : static_cast<long>(in.m) * in.m;
  return factorial(in.m, prec) * z(in.d, prec) * bracket(in, t, -1, prec);
}

Interval c1_constant(const BoundInputs& in, mp::Precision prec) {
  check(in);
  return factorial(in.m, prec) * z(4L * in.d, prec) * bracket(in, static_cast<long>(in.m) * in.m, 0, prec);
}

Interval c2_constant(const BoundInputs& in, mp::Precision prec) {
  check(in);
  return factorial(in.m, prec) * z(4L * in.d, prec) * bracket(in, in.m, 0, prec);
}

Interval r_gap(const BoundInputs& in, mp::Precision prec) {
  const long m = in.m;
  Interval denom = mp::pow(z(2, prec), static_cast<unsigned long>(m * (m - 1) * (m - 2) / 2)) *
                   mp::pow(z(m + 1, prec), static_cast<unsigned long>(m * (m - 1) + 6)) *
                   mp::pow(Interval(in.H_fstar, prec), static_cast<unsigned long>(2 * m * (m - 1) + 1));
  return z(1, prec) / denom;
}

Interval s_gap(const BoundInputs& in, mp::Precision prec) {
  const mpq_class m(in.m);
  Interval denom = power(z(2, prec), m * (m - 1) * (m - 2), prec) *
                   power(z(in.m + 1, prec), m * m * m / 4 - 3 * m / 4 + 6, prec) *
                   power(Interval(in.H_fstar, prec), m * m * m - m * m - m / 2 + 2, prec);
  return z(1, prec) / denom;
}

Interval f_constant(int m_int, int d, mp::Precision prec) {
  const mpq_class m(m_int);
  return power(z(2, prec), m * (m - 1) * (m - 2) + 42, prec) * Interval::pi(prec) *
         power(factorial(m_int, prec) * z(d, prec), mpq_class(7, 2), prec) *
         power(z(m_int + 1, prec), m * m * m / 4 - 3 * m / 4 + mpq_class(13, 2), prec);
}

BigBound n1_bound(const BoundInputs& in, mp::Precision prec) {
  check(in);
  if (in.m < 3) throw Error(ErrorCode::OrderTooSmall, "N1 needs order at least 3; order 2 uses N3/N4");
  const long m = in.m;
  const Interval H(in.H_fstar, prec);
  const Interval c = in.irreducible ? c2_constant(in, prec) : c1_constant(in, prec);
  Interval prefactor = mp::pow(z(2, prec), static_cast<unsigned long>(m * (m - 1) * (m - 2) / 2)) *
                       mp::pow(z(m + 1, prec), static_cast<unsigned long>(m * (m - 1) + 6)) *
                       mp::pow(H, static_cast<unsigned long>(2 * m * (m - 1) + 2));
  Interval generic = prefactor * c;
  std::vector<std::pair<std::string, Interval>> parts{
      {"B(u)", b_height_bound(in, prec)}, {"C1", c1_constant(in, prec)}, {"C2", c2_constant(in, prec)},
      {"r(u)", r_gap(in, prec)}};
  if (in.irreducible && in.all_real_roots) {
    Interval real_prefactor = mp::pow(z(2 * m + 1, prec), static_cast<unsigned long>(3 * m)) *
                              mp::pow(H, static_cast<unsigned long>(4 * m - 1));
    Interval real_variant = real_prefactor * c;
    parts.emplace_back("N1_generic", generic);
    parts.emplace_back("N1_real_irreducible", real_variant);
    if (real_variant.hi() < generic.hi()) {
      parts.emplace_back("prefactor", real_prefactor);
      parts.emplace_back("C", c);
      return finish(real_variant, std::move(parts));
    }
  }
  parts.emplace_back("prefactor", prefactor);
  parts.emplace_back("C", c);
  return finish(generic, std::move(parts));
}

BigBound n2_bound(const BoundInputs& in, mp::Precision prec) {
  check(in);
  if (in.m < 3) throw Error(ErrorCode::OrderTooSmall, "N2 needs order at least 3; order 2 uses N4");
  const mpq_class m(in.m);
  const Interval c = in.irreducible ? c2_constant(in, prec) : c1_constant(in, prec);
  const Interval f = f_constant(in.m, in.d, prec);
  const Interval c3 = f * power(Interval(in.H_fstar, prec), m * m * m - m * m - m / 2 + mpq_class(7, 2), prec) * c;
  Interval n2 = z(2, prec) * c3 * mp::log(c3);
  return finish(n2, {{"B(u)", b_height_bound(in, prec)},
                     {"C1", c1_constant(in, prec)},
                     {"C2", c2_constant(in, prec)},
                     {"C", c},
                     {"s(u)", s_gap(in, prec)},
                     {"F(m,d)", f},
                     {"C3", c3}});
}

BigBound n3_n4_bound(const BoundInputs& in, BoundCase bound_case, mp::Precision prec) {
  check(in);
  if (in.m != 2) throw Error(ErrorCode::OrderMismatch, "N3/N4 apply to order 2 only");
  Interval core = Interval(in.heights_u[0]) + Interval(in.heights_u[1]) +
                  q(mpq_class(3, 2), prec) * log_sumsq(in, prec) + q(mpq_class(3, 2), prec);
  Interval value = bound_case == BoundCase::Dominant
                       ? z(4L * in.d, prec) * mp::sqr(Interval(in.H_fstar, prec)) * core
                       : z(8L * in.d, prec) * core;
  return finish(value, {{"B(u)", b_height_bound(in, prec)}, {"core", core}});
}

Real matveev_lower(int k, long D, const std::vector<Real>& A, const Real& B, mp::Precision prec) {
  if (k < 2 || D < 1 || A.size() != static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::InvalidArgument, "Matveev's bound needs k >= 2, D >= 1 and k values A_j");
  }
  if (B < Real(1L, prec)) throw Error(ErrorCode::InvalidArgument, "B must be at least 1");
  Interval product = mp::pow(z(2, prec), static_cast<unsigned long>(6 * k + 20)) * mp::sqr(z(D, prec));
  for (const auto& a : A) {
    if (a.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "A_j must be positive");
    product = product * Interval(a);
  }
  const Interval e = Interval::e(prec);
  product = product * mp::log(e * z(D, prec)) * mp::log(e * Interval(B));
  return mp::neg(product.hi());
}

BoundReport bounds_from_parameters(const BoundInputs& in, BoundCase bound_case, mp::Precision prec) {
  check(in);
  if (in.m < 2) throw Error(ErrorCode::OrderTooSmall, "bounds need order at least 2");
  if (in.m == 2) {
    return {bound_case == BoundCase::Dominant ? "N3" : "N4", bound_case, n3_n4_bound(in, bound_case, prec)};
  }
  if (bound_case == BoundCase::Dominant) return {"N1", bound_case, n1_bound(in, prec)};
  return {"N2", bound_case, n2_bound(in, prec)};
}

}  // namespace skolem
