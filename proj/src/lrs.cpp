#include "skolem/lrs.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

#include "skolem/errors.hpp"

namespace skolem {

Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!digits_ok(num) || !digits_ok(den)) {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(negative ? mpz_class(-p) : p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

LRSpec validate_lrs(std::vector<Rational> coefficients, std::vector<Rational> initial_terms) {
  if (coefficients.empty() || coefficients.size() != initial_terms.size()) {
    throw Error(ErrorCode::LengthMismatch, "coefficients and initial terms must be non-empty lists of equal length");
  }
  if (coefficients.back() == 0) throw Error(ErrorCode::ZeroTrailingCoefficient, "a_m must be non-zero");
  if (std::all_of(initial_terms.begin(), initial_terms.end(), [](const Rational& u) { return u == 0; })) {
    throw Error(ErrorCode::AllInitialTermsZero, "at least one initial term must be non-zero");
  }
  LRSpec spec;
  spec.coefficients_ = std::move(coefficients);
  spec.initial_ = std::move(initial_terms);
  return spec;
}

LRSpec minimal_annihilator(const LRSpec& spec) {
  const int m = spec.order();
  const std::vector<Rational> s = iterate_terms(spec, static_cast<std::size_t>(2 * m));

  // Berlekamp-Massey over Q. Connection polynomial C(x) = 1 + c_1 x + ... + c_L x^L
  // with s_n + c_1 s_{n-1} + ... + c_L s_{n-L} = 0.
  std::vector<Rational> c{1}, b{1};
  int length = 0;
  int shift = 1;
  Rational last_discrepancy = 1;
  for (int n = 0; n < 2 * m; ++n) {
    Rational d = s[static_cast<std::size_t>(n)];
    for (int i = 1; i <= length; ++i) d += c[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(n - i)];
    if (d == 0) {
      ++shift;
      continue;
    }
    const Rational factor = d / last_discrepancy;
    std::vector<Rational> previous = c;
    if (c.size() < b.size() + static_cast<std::size_t>(shift)) c.resize(b.size() + static_cast<std::size_t>(shift), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) c[i + static_cast<std::size_t>(shift)] -= factor * b[i];
    if (2 * length <= n) {
      length = n + 1 - length;
      b = std::move(previous);
      last_discrepancy = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  c.resize(static_cast<std::size_t>(length) + 1, Rational(0));
  if (length == 0 || c.back() == 0) {
    throw std::logic_error("minimal_annihilator: degenerate connection polynomial");
  }

  LRSpec out;
  out.coefficients_.reserve(static_cast<std::size_t>(length));
  for (int i = 1; i <= length; ++i) out.coefficients_.push_back(-c[static_cast<std::size_t>(i)]);
  out.initial_.assign(s.begin(), s.begin() + length);
  out.minimal_ = true;
  return out;
}

CharPoly primitive_char_poly(const LRSpec& spec) {
  mpz_class delta = 1;
  for (const auto& a : spec.coefficients()) mpz_lcm(delta.get_mpz_t(), delta.get_mpz_t(), a.get_den_mpz_t());
  const int m = spec.order();
  std::vector<mpz_class> desc(static_cast<std::size_t>(m) + 1);
  desc[0] = delta;
  for (int i = 1; i <= m; ++i) {
    Rational scaled = -Rational(delta) * spec.coefficients()[static_cast<std::size_t>(i - 1)];
    scaled.canonicalize();
    desc[static_cast<std::size_t>(i)] = scaled.get_num();
  }
  return {IntPolynomial::from_descending(std::move(desc)), delta};
}

std::vector<Rational> iterate_terms(const LRSpec& spec, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  const std::size_t m = spec.coefficients().size();
  for (std::size_t n = 0; n < count; ++n) {
    if (n < m) {
      out.push_back(spec.initial_terms()[n]);
      continue;
    }
    Rational next = 0;
    for (std::size_t i = 1; i <= m; ++i) next += spec.coefficients()[i - 1] * out[n - i];
    out.push_back(next);
  }
  return out;
}

TermStream::TermStream(const LRSpec& spec) {
  const std::size_t m = spec.coefficients().size();
  delta_ = primitive_char_poly(spec).delta;
  initial_scale_ = 1;
  for (const auto& u : spec.initial_terms()) {
    mpz_lcm(initial_scale_.get_mpz_t(), initial_scale_.get_mpz_t(), u.get_den_mpz_t());
  }
  weights_.resize(m);
  mpz_class delta_power = 1;  // delta^(i-1)
  for (std::size_t i = 1; i <= m; ++i) {
    Rational c = Rational(delta_) * spec.coefficients()[i - 1];
    c.canonicalize();
    weights_[i - 1] = c.get_num() * delta_power;
    delta_power *= delta_;
  }
  window_.resize(m);
  delta_power = 1;
  for (std::size_t k = 0; k < m; ++k) {
    Rational v = Rational(initial_scale_ * delta_power) * spec.initial_terms()[k];
    v.canonicalize();
    window_[k] = v.get_num();
    delta_power *= delta_;
  }
}

Rational TermStream::value() const {
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), delta_.get_mpz_t(), index_);
  Rational r(window_.front(), initial_scale_ * scale);
  r.canonicalize();
  return r;
}

void TermStream::advance() {
  const std::size_t m = window_.size();
  mpz_class next = 0;
  for (std::size_t i = 1; i <= m; ++i) next += weights_[i - 1] * window_[m - i];
  std::rotate(window_.begin(), window_.begin() + 1, window_.end());
  window_.back() = std::move(next);
  ++index_;
}

namespace {

constexpr std::uint64_t kExactPrefix = 10000;
constexpr std::array<std::uint64_t, 3> kPrimes = {2305843009213693951ULL, 1000000007ULL, 998244353ULL};

std::uint64_t residue(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

// Residues of the integer sequence v_n modulo one prime.
class ModularStream {
 public:
  ModularStream(const std::vector<mpz_class>& weights, const std::vector<mpz_class>& window, std::uint64_t p)
      : p_(p) {
    for (const auto& w : weights) weights_.push_back(residue(w, p));
    for (const auto& v : window) window_.push_back(residue(v, p));
  }

  std::uint64_t current() const { return window_[head_]; }

  void advance() {
    const std::size_t m = window_.size();
    unsigned __int128 acc = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      acc += static_cast<unsigned __int128>(weights_[i - 1]) * window_[(head_ + m - i) % m];
      acc %= p_;
    }
    window_[head_] = static_cast<std::uint64_t>(acc);
    head_ = (head_ + 1) % m;
  }

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::uint64_t> window_;  // circular; head_ points at the current term
  std::size_t head_ = 0;
};

}  // namespace

std::optional<std::uint64_t> first_zero(const LRSpec& spec, std::uint64_t last) {
  TermStream stream(spec);
  const std::uint64_t exact_end = std::min(last, kExactPrefix);
  for (;; stream.advance()) {
    if (stream.sign() == 0) return stream.index();
    if (stream.index() >= exact_end) break;
  }
  if (last <= exact_end) return std::nullopt;

  std::vector<ModularStream> mods;
  for (std::uint64_t p : kPrimes) mods.emplace_back(stream.weights(), stream.window(), p);

  for (std::uint64_t n = exact_end + 1; n <= last; ++n) {
    bool all_zero = true;
    for (auto& mod : mods) {
      mod.advance();
      if (mod.current() != 0) all_zero = false;
    }
    if (all_zero && term_at(spec, n) == 0) return n;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> first_non_positive(const LRSpec& spec, std::uint64_t last) {
  TermStream stream(spec);
  for (;; stream.advance()) {
    if (stream.sign() <= 0) return stream.index();
    if (stream.index() >= last) return std::nullopt;
  }
}

Rational term_at(const LRSpec& spec, std::uint64_t n) {
  TermStream stream(spec);
  while (stream.index() < n) stream.advance();
  return stream.value();
}

mp::Real weil_height_rational(const Rational& q, mp::Precision prec) {
  if (q == 0) return mp::Real(prec);
  mpz_class top = abs(q.get_num());
  if (q.get_den() > top) top = q.get_den();
  mp::Real r(top, prec, MPFR_RNDU);
  mpfr_log(r.get(), r.get(), MPFR_RNDU);
  return r;
}

}  // namespace skolem
