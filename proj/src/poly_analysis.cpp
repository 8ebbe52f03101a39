#include "skolem/poly_analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "skolem/errors.hpp"

namespace skolem {

using mp::ComplexInterval;
using mp::Interval;
using mp::Real;

std::string_view to_string(Tri value) {
  switch (value) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(RootSign value) {
  switch (value) {
    case RootSign::Positive: return "positive";
    case RootSign::Negative: return "negative";
    case RootSign::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

HeightLength poly_height_length(const IntPolynomial& f) { return {f.height(), f.length()}; }

Real mahler_upper(const IntPolynomial& f, mp::Precision prec) {
  Real l2 = mp::sqrt(Real(f.sum_squares(), prec, MPFR_RNDU), MPFR_RNDU);
  Real root = mp::sqrt(Real(static_cast<long>(f.degree() + 1), prec), MPFR_RNDU);
  Real landau = mp::mul(Real(f.height(), prec, MPFR_RNDU), root, MPFR_RNDU);
  return mp::min(l2, landau);
}

CauchyBounds cauchy_bounds(const IntPolynomial& f, mp::Precision prec) {
  const int m = f.degree();
  bool tail_zero = true;
  for (int i = 0; i < m; ++i) tail_zero = tail_zero && f.coeff(i) == 0;
  if (m < 1 || tail_zero) throw Error(ErrorCode::DegenerateShape, "Cauchy bounds need a non-monomial polynomial");
  mpz_class min_abs = abs(f.leading());
  mpz_class max_tail = 0;
  for (int i = 0; i <= m; ++i) {
    mpz_class a = abs(f.coeff(i));
    min_abs = std::min(min_abs, a);
    if (i < m) max_tail = std::max(max_tail, a);
  }
  const mpz_class height = f.height();
  Real lower = mp::div(Real(min_abs, prec, MPFR_RNDD), Real(mpz_class(height + min_abs), prec, MPFR_RNDU), MPFR_RNDD);
  mpq_class ratio(max_tail, abs(f.leading()));
  ratio.canonicalize();
  Real upper = mp::add(Real(1L, prec), Real(ratio, prec, MPFR_RNDU), MPFR_RNDU);
  return {std::move(lower), std::move(upper)};
}

Real modulus_gap_bound(int m, const mpz_class& height, GapCase gap_case, mp::Precision prec) {
  if (height < 1) throw Error(ErrorCode::InvalidArgument, "height must be positive");
  if (gap_case == GapCase::Quadratic) {
    if (m != 2) throw Error(ErrorCode::CaseDegreeMismatch, "the quadratic gap needs degree 2");
    return mp::div(Real(1L, prec), Real(height, prec, MPFR_RNDU), MPFR_RNDD);
  }
  if (m < 3) throw Error(ErrorCode::CaseDegreeMismatch, "the general gap bounds need degree at least 3");
  const mpq_class mq(m);
  mpq_class e2;
  mpq_class em;
  mpq_class eh;
  if (gap_case == GapCase::General) {
    e2 = -mq * (mq - 1) * (mq - 2);
    em = -mq * mq * mq / 4 + 3 * mq / 4 - 6;
    eh = -mq * mq * mq + mq * mq + mq / 2 - 2;
  } else {
    e2 = -mq * (mq - 1) * (mq - 2) / 2;
    em = -mq * (mq - 1) - 6;
    eh = -2 * mq * (mq - 1) - 1;
  }
  e2.canonicalize();
  em.canonicalize();
  eh.canonicalize();
  Interval exponent = Interval(e2, prec) * mp::log(Interval(2L, prec)) +
                      Interval(em, prec) * mp::log(Interval(static_cast<long>(m + 1), prec)) +
                      Interval(eh, prec) * mp::log(Interval(height, prec));
  return mp::exp(exponent).lo();
}

SquarefreePart squarefree_part(const IntPolynomial& f) {
  if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "squarefree part needs positive degree");
  IntPolynomial g = *divide_exact(f.primitive_part(), primitive_gcd(f, f.derivative()));
  g = g.primitive_part();
  const bool simple = g.degree() == f.degree();
  return {std::move(g), simple};
}

long unity_order_bound(int m) {
  const long r = static_cast<long>(m) * (m - 1);
  return 2 * r * r;
}

IntPolynomial ratio_poly(const IntPolynomial& f) {
  const int m = f.degree();
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "ratio polynomial needs degree at least 2");
  if (f.coeff(0) == 0) throw Error(ErrorCode::ZeroRoot, "f(0) = 0");

  // R(x) = Res_Y(f(Y), f(xY)) has degree <= m^2; sample it at x = 0..m^2.
  const int points = m * m + 1;
  const std::size_t size = 2 * static_cast<std::size_t>(m);
  std::vector<mpq_class> values(static_cast<std::size_t>(points));
  for (int x = 0; x < points; ++x) {
    std::vector<mpz_class> g(static_cast<std::size_t>(m) + 1);
    mpz_class power = 1;
    for (int i = 0; i <= m; ++i) {
      g[static_cast<std::size_t>(i)] = f.coeff(i) * power;
      power *= x;
    }
    std::vector<std::vector<mpz_class>> sylvester(size, std::vector<mpz_class>(size));
    for (std::size_t row = 0; row < static_cast<std::size_t>(m); ++row) {
      for (int i = 0; i <= m; ++i) {
        sylvester[row][row + static_cast<std::size_t>(m - i)] = f.coeff(i);
        sylvester[row + static_cast<std::size_t>(m)][row + static_cast<std::size_t>(m - i)] = g[static_cast<std::size_t>(i)];
      }
    }
    values[static_cast<std::size_t>(x)] = determinant(std::move(sylvester));
  }

  // Newton divided differences on the nodes 0..m^2, then expansion.
  std::vector<mpq_class> dd = values;
  for (int level = 1; level < points; ++level) {
    for (int i = points - 1; i >= level; --i) {
      dd[static_cast<std::size_t>(i)] = (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) / level;
    }
  }
  std::vector<mpq_class> poly{dd.back()};
  for (int k = points - 2; k >= 0; --k) {
    std::vector<mpq_class> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * k;
    }
    next[0] += dd[static_cast<std::size_t>(k)];
    poly = std::move(next);
  }
  std::vector<mpz_class> coeffs;
  coeffs.reserve(poly.size());
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("ratio_poly: non-integral interpolant");
    coeffs.push_back(c.get_num());
  }
  IntPolynomial r(std::move(coeffs));
  const IntPolynomial x_minus_one = IntPolynomial::from_descending({1, -1});
  for (int i = 0; i < m; ++i) {
    auto q = divide_exact(r, x_minus_one);
    if (!q) throw std::logic_error("ratio_poly: (X-1)^m does not divide the resultant");
    r = std::move(*q);
  }
  return r.primitive_part();
}

namespace {

std::vector<int> unity_orders_of(const IntPolynomial& g_tilde, int m) {
  std::vector<int> orders;
  const long bound = unity_order_bound(m);
  const int deg = g_tilde.degree();
  for (long n = 1; n <= bound; ++n) {
    if (euler_phi(n) > deg) continue;
    if (divide_exact(g_tilde, cyclotomic(static_cast<int>(n)))) orders.push_back(static_cast<int>(n));
  }
  return orders;
}

// Lower bound for the distance between distinct roots of a squarefree
// polynomial of degree D >= 2: sqrt(3) D^{-(D+2)/2} ||P||_2^{1-D}.
Real root_separation_bound(const IntPolynomial& p, mp::Precision prec) {
  const long d = p.degree();
  if (d < 2) return Real::infinity(prec);
  Interval log_sep = mp::log(Interval(3L, prec)) * Interval(mpq_class(1, 2), prec) -
                     Interval(mpq_class(d + 2, 2), prec) * mp::log(Interval(d, prec)) +
                     Interval(mpq_class(1 - d, 2), prec) * mp::log(Interval(p.sum_squares(), prec));
  return mp::exp(log_sep).lo();
}

// Disk hull of a rectangle.
RootBox rectangle_disk(const ComplexInterval& z) {
  Real cre = z.re().mid();
  Real cim = z.im().mid();
  ComplexInterval off{z.re() - Interval(cre), z.im() - Interval(cim)};
  return {std::move(cre), std::move(cim), mp::abs(off).hi(), 1};
}

Interval center_distance(const RootBox& a, const RootBox& b) {
  ComplexInterval d{Interval(a.center_re) - Interval(b.center_re), Interval(a.center_im) - Interval(b.center_im)};
  return mp::abs(d);
}

struct RootRef {
  std::size_t factor;
  std::size_t index;
  int multiplicity;
  int real = -1;  // -1 unknown, 0 non-real, 1 real
};

// Certified structure of the non-zero roots of a polynomial.
class RootStructure {
 public:
  RootStructure(const IntPolynomial& nonzero_part, IsolationConfig config) : config_(config) {
    sqf_ = IntPolynomial::constant(1);
    for (auto& factor : squarefree_decomposition(nonzero_part)) {
      sqf_ = sqf_ * factor.factor;
      isolators_.emplace_back(factor.factor, config);
      for (std::size_t i = 0; i < static_cast<std::size_t>(factor.factor.degree()); ++i) {
        roots_.push_back({isolators_.size() - 1, i, factor.multiplicity});
      }
    }
    sqf_ = sqf_.primitive_part();
    const std::size_t n = roots_.size();
    relation_.assign(n, std::vector<int>(n, 2));
    for (std::size_t i = 0; i < n; ++i) relation_[i][i] = 0;
    plus_minus_.assign(n, std::vector<bool>(n, false));
    if (sqf_.degree() >= 2) {
      IntPolynomial h = primitive_gcd(sqf_, sqf_.negate_argument());
      if (h.degree() >= 1) pm_isolator_.emplace(h, config);
    }
  }

  std::size_t size() const { return roots_.size(); }
  const RootRef& root(std::size_t i) const { return roots_[i]; }
  const RootBox& box(std::size_t i) const { return isolators_[roots_[i].factor].boxes()[roots_[i].index]; }
  int relation(std::size_t i, std::size_t j) const { return relation_[i][j]; }
  bool plus_minus(std::size_t i, std::size_t j) const { return plus_minus_[i][j]; }
  const IntPolynomial& squarefree() const { return sqf_; }

  void refine_factor(std::size_t factor) { isolators_[factor].refine(); }

  void resolve() {
    const std::size_t n = roots_.size();
    while (true) {
      std::set<std::size_t> to_refine;
      bool refine_pm = false;

      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (roots_[i].factor != roots_[j].factor && !box(i).disjoint_from(box(j))) {
            to_refine.insert(roots_[i].factor);
            to_refine.insert(roots_[j].factor);
          }
        }
      }
      if (!to_refine.empty()) {
        refine(to_refine, false);
        continue;
      }

      for (std::size_t i = 0; i < n; ++i) {
        if (roots_[i].real != -1) continue;
        roots_[i].real = certify_realness(i);
        if (roots_[i].real == -1) to_refine.insert(roots_[i].factor);
      }
      if (!to_refine.empty()) {
        refine(to_refine, false);
        continue;
      }

      const Real gap = gap_bound();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (relation_[i][j] != 2) continue;
          int r = compare(i, j, gap);
          if (r == 2) {
            to_refine.insert(roots_[i].factor);
            to_refine.insert(roots_[j].factor);
            refine_pm = pm_isolator_.has_value();
          } else {
            relation_[i][j] = r;
            relation_[j][i] = -r;
          }
        }
      }
      if (to_refine.empty()) break;
      refine(to_refine, refine_pm);
    }
    close_equalities();
  }

  // Refines real roots until the sign of each listed root is certified.
  int real_sign(std::size_t i) {
    while (true) {
      Interval re = box(i).enclosure().re();
      if (re.is_positive()) return 1;
      if (re.is_negative()) return -1;
      isolators_[roots_[i].factor].refine();
    }
  }

  void refine_plus_minus() {
    if (pm_isolator_) pm_isolator_->refine();
  }

 private:
  void refine(const std::set<std::size_t>& factors, bool pm) {
    for (std::size_t k : factors) isolators_[k].refine();
    if (pm && pm_isolator_) pm_isolator_->refine();
  }

  int certify_realness(std::size_t i) const {
    const RootBox& b = box(i);
    if (!b.meets_real_axis()) return 0;
    RootBox c = b.conjugate();
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      if (k == i || roots_[k].factor != roots_[i].factor) continue;
      if (!c.disjoint_from(box(k))) return -1;
    }
    return 1;
  }

  Real gap_bound() const {
    const int d = sqf_.degree();
    const mp::Precision prec = mp::kDefaultPrecision;
    if (d >= 3) return modulus_gap_bound(d, sqf_.height(), GapCase::General, prec);
    if (d == 2 && roots_.size() == 2 && roots_[0].real == 1 && roots_[1].real == 1) {
      return modulus_gap_bound(2, sqf_.height(), GapCase::Quadratic, prec);
    }
    return Real(prec);
  }

  int compare(std::size_t i, std::size_t j, const Real& gap) {
    const Interval mi = box(i).modulus();
    const Interval mj = box(j).modulus();
    if (mi.hi() < mj.lo()) return -1;
    if (mj.hi() < mi.lo()) return 1;
    if (conjugate_witness(i, j)) return 0;
    if (plus_minus_witness(i, j)) {
      plus_minus_[i][j] = plus_minus_[j][i] = true;
      return 0;
    }
    // Overlapping intervals narrower than the separation bound force equality.
    Interval span = mp::hull(mi, mj);
    if (gap.sign() > 0 && span.width() < gap) return 0;
    return 2;
  }

  bool conjugate_witness(std::size_t i, std::size_t j) const {
    if (roots_[i].factor != roots_[j].factor || roots_[i].real != 0 || roots_[j].real != 0) return false;
    RootBox c = box(i).conjugate();
    if (c.disjoint_from(box(j))) return false;
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      if (k == j || roots_[k].factor != roots_[i].factor) continue;
      if (!c.disjoint_from(box(k))) return false;
    }
    return true;
  }

  bool plus_minus_witness(std::size_t i, std::size_t j) const {
    if (!pm_isolator_) return false;
    for (const RootBox& b : pm_isolator_->boxes()) {
      if (b.inside(box(i)) && b.negated().inside(box(j))) return true;
    }
    return false;
  }

  // Equal moduli are transitive; separated pairs inherit through classes.
  void close_equalities() {
    const std::size_t n = roots_.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (relation_[i][j] == 0) parent[find(i)] = find(j);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (find(i) == find(j)) relation_[i][j] = 0;
      }
    }
  }

  IsolationConfig config_;
  IntPolynomial sqf_;
  std::vector<RootIsolator> isolators_;
  std::vector<RootRef> roots_;
  std::vector<std::vector<int>> relation_;
  std::vector<std::vector<bool>> plus_minus_;
  std::optional<RootIsolator> pm_isolator_;
};

Tri pair_ratio_unity(RootStructure& rs, std::size_t i, std::size_t j, const IntPolynomial& g_tilde,
                     const std::vector<int>& orders, IsolationConfig config) {
  if (rs.plus_minus(i, j)) return Tri::Yes;
  if (orders.empty()) return Tri::No;
  const IntPolynomial sqf_g = squarefree_part(g_tilde).g;
  const Real sep = root_separation_bound(sqf_g, mp::kDefaultPrecision);
  std::vector<RootIsolator> unity;
  for (int n : orders) unity.emplace_back(cyclotomic(n), config);

  for (int round = 0; round < 8; ++round) {
    std::optional<RootBox> ratio;
    try {
      ratio = rectangle_disk(rs.box(i).enclosure() / rs.box(j).enclosure());
    } catch (const std::domain_error&) {
    }
    if (ratio) {
      bool all_disjoint = true;
      for (const auto& iso : unity) {
        for (const RootBox& z : iso.boxes()) {
          Interval d = center_distance(*ratio, z);
          Real reach = mp::add(ratio->radius, z.radius, MPFR_RNDU);
          if (!(d.lo() > reach)) all_disjoint = false;
          if (mp::add(d.hi(), reach, MPFR_RNDU) < sep) return Tri::Yes;
        }
      }
      if (all_disjoint) return Tri::No;
    }
    try {
      rs.refine_factor(rs.root(i).factor);
      if (rs.root(j).factor != rs.root(i).factor) rs.refine_factor(rs.root(j).factor);
      for (auto& iso : unity) iso.refine();
    } catch (const Error&) {
      break;
    }
  }
  return Tri::Inconclusive;
}

struct Analysis {
  RootProfile profile;
  DegeneracyStatus degeneracy;
};

Analysis analyze(const IntPolynomial& f, IsolationConfig config) {
  if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "root profile needs positive degree");
  Analysis out;
  RootProfile& p = out.profile;
  p.m = f.degree();
  auto [zeros, rest] = f.split_zero_roots();
  p.zero_root_multiplicity = zeros;
  const mp::Precision prec = config.start_precision;
  RootBox zero_box{Real(prec), Real(prec), Real::pow2(-static_cast<long>(prec), prec), zeros};

  if (rest.degree() < 1) {
    p.is_squarefree = zeros == 1;
    p.k_max = zeros;
    p.dominant = false;
    p.all_roots_real = true;
    p.globally_degenerate = Tri::No;
    p.max_pair_ratio_unity = Tri::No;
    p.boxes.push_back(zero_box);
    out.degeneracy = {Tri::No, Tri::No, {}};
    return out;
  }

  RootStructure rs(rest, config);
  rs.resolve();
  const std::size_t n = rs.size();

  p.is_squarefree = zeros <= 1 && rs.squarefree().degree() == rest.degree();
  p.all_roots_real = true;
  for (std::size_t i = 0; i < n; ++i) p.all_roots_real = p.all_roots_real && rs.root(i).real == 1;

  std::vector<std::size_t> top;
  for (std::size_t i = 0; i < n; ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < n && maximal; ++j) maximal = rs.relation(j, i) != 1;
    if (maximal) top.push_back(i);
  }
  p.k_max = 0;
  for (std::size_t i : top) p.k_max += rs.root(i).multiplicity;
  p.dominant = top.size() == 1 && rs.root(top[0]).multiplicity == 1;
  for (std::size_t i : top) {
    if (rs.root(i).real != 1) continue;
    const int s = rs.real_sign(i);
    if (s > 0) p.positive_maximal_root = true;
    if (p.dominant) p.dominant_root_real_sign = s > 0 ? RootSign::Positive : RootSign::Negative;
  }

  DegeneracyStatus& deg = out.degeneracy;
  if (rs.squarefree().degree() >= 2) {
    IntPolynomial g_tilde = ratio_poly(rs.squarefree());
    deg.unity_orders = unity_orders_of(g_tilde, rs.squarefree().degree());
    deg.globally_degenerate = deg.unity_orders.empty() ? Tri::No : Tri::Yes;
    deg.max_pair_ratio_unity = Tri::No;
    for (std::size_t a = 0; a < top.size() && deg.max_pair_ratio_unity != Tri::Yes; ++a) {
      for (std::size_t b = a + 1; b < top.size(); ++b) {
        const Tri t = pair_ratio_unity(rs, top[a], top[b], g_tilde, deg.unity_orders, config);
        if (t == Tri::Yes) {
          deg.max_pair_ratio_unity = Tri::Yes;
          break;
        }
        if (t == Tri::Inconclusive) deg.max_pair_ratio_unity = Tri::Inconclusive;
      }
    }
  } else {
    deg.globally_degenerate = Tri::No;
    deg.max_pair_ratio_unity = Tri::No;
  }
  p.globally_degenerate = deg.globally_degenerate;
  p.max_pair_ratio_unity = deg.max_pair_ratio_unity;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int r = rs.relation(a, b);
    if (r != 0) return r == 1;
    const RootBox& x = rs.box(a);
    const RootBox& y = rs.box(b);
    if (x.center_re != y.center_re) return x.center_re > y.center_re;
    return x.center_im > y.center_im;
  });
  for (std::size_t i : order) {
    RootBox b = rs.box(i);
    b.multiplicity = rs.root(i).multiplicity;
    p.boxes.push_back(std::move(b));
  }
  if (zeros > 0) p.boxes.push_back(zero_box);
  return out;
}

// Arithmetic in F_p[X], ascending coefficients.
using ModPoly = std::vector<long>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long inverse_mod(long a, long p) {
  long result = 1;
  long base = ((a % p) + p) % p;
  for (long e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

ModPoly mod_reduce(ModPoly a, const ModPoly& m, long p) {
  trim(a);
  const long inv = inverse_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const long factor = a.back() * inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = ((a[shift + i] - factor * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& m, long p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return mod_reduce(std::move(out), m, p);
}

ModPoly mod_pow(ModPoly base, long e, const ModPoly& m, long p) {
  ModPoly result{1};
  base = mod_reduce(std::move(base), m, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mod_mul(result, base, m, p);
    base = mod_mul(base, base, m, p);
  }
  return result;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_reduce(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// X^(p^k) mod m.
ModPoly frobenius_power(const ModPoly& m, long p, int k) {
  ModPoly r{0, 1};
  for (int i = 0; i < k; ++i) r = mod_pow(r, p, m, p);
  return r;
}

bool irreducible_mod(const IntPolynomial& f, long p) {
  ModPoly m;
  for (int i = 0; i <= f.degree(); ++i) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), f.coeff(i).get_mpz_t(), static_cast<unsigned long>(p));
    m.push_back(r.get_si());
  }
  trim(m);
  const int n = f.degree();
  if (static_cast<int>(m.size()) != n + 1) return false;
  ModPoly dm;
  for (std::size_t i = 1; i < m.size(); ++i) dm.push_back(m[i] * static_cast<long>(i) % p);
  trim(dm);
  if (dm.empty() || mod_gcd(m, dm, p).size() != 1) return false;

  auto minus_x = [p](ModPoly r) {
    if (r.size() < 2) r.resize(2, 0);
    r[1] = (r[1] - 1 + p) % p;
    trim(r);
    return r;
  };
  if (!minus_x(frobenius_power(m, p, n)).empty()) return false;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= q; ++d) prime = prime && q % d != 0;
    if (!prime) continue;
    if (mod_gcd(m, minus_x(frobenius_power(m, p, n / q)), p).size() != 1) return false;
  }
  return true;
}

}  // namespace

RootProfile root_profile(const IntPolynomial& f, IsolationConfig config) { return analyze(f, config).profile; }

DegeneracyStatus degeneracy_status(const IntPolynomial& f, IsolationConfig config) {
  if (f.degree() >= 1 && f.coeff(0) == 0) throw Error(ErrorCode::ZeroRoot, "f(0) = 0");
  return analyze(f, config).degeneracy;
}

IrreducibilityCertificate irreducibility_certificate(const IntPolynomial& f) {
  if (f.degree() < 1) return {};
  if (f.degree() == 1) return {true, 0};
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), static_cast<unsigned long>(p)) != 0) continue;
    if (irreducible_mod(f.primitive_part(), p)) return {true, p};
  }
  return {};
}

}  // namespace skolem
