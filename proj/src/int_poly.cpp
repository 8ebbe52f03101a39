#include "skolem/int_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace skolem {

namespace {

const mpz_class& zero_coefficient() {
  static const mpz_class zero = 0;
  return zero;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::from_descending(std::vector<mpz_class> descending) {
  std::reverse(descending.begin(), descending.end());
  return IntPolynomial(std::move(descending));
}

IntPolynomial IntPolynomial::from_descending(std::initializer_list<long> descending) {
  std::vector<mpz_class> c;
  c.reserve(descending.size());
  for (long v : descending) c.emplace_back(v);
  return from_descending(std::move(c));
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int power) {
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return zero_coefficient();
  return coeffs_[static_cast<std::size_t>(power)];
}

std::vector<mpz_class> IntPolynomial::descending() const {
  return {coeffs_.rbegin(), coeffs_.rend()};
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::negate_argument() const {
  std::vector<mpz_class> out = coeffs_;
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return IntPolynomial(std::move(out));
}

std::pair<int, IntPolynomial> IntPolynomial::split_zero_roots() const {
  if (is_zero()) return {0, {}};
  std::size_t k = 0;
  while (coeffs_[k] == 0) ++k;
  return {static_cast<int>(k), IntPolynomial(std::vector<mpz_class>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()))};
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class IntPolynomial::height() const {
  mpz_class h = 0;
  for (const auto& c : coeffs_) h = std::max(h, mpz_class(abs(c)));
  return h;
}

mpz_class IntPolynomial::length() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += abs(c);
  return s;
}

mpz_class IntPolynomial::sum_squares() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c * c;
  return s;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const mpz_class& c = coeff(p);
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (p == 0 || mag != 1) out << mag.get_str();
    if (p > 0) {
      out << "X";
      if (p > 1) out << "^" << p;
    }
    first = false;
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const mpz_class& c, const IntPolynomial& a) {
  std::vector<mpz_class> out = a.coeffs_;
  for (auto& v : out) v *= c;
  return IntPolynomial(std::move(out));
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> rem = a.ascending();
  const int db = b.degree();
  std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  mpz_class q;
  for (int k = a.degree() - db; k >= 0; --k) {
    mpz_class& top = rem[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
    quot[static_cast<std::size_t>(k)] = q;
  }
  for (int j = 0; j < db; ++j) {
    if (rem[static_cast<std::size_t>(j)] != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  std::vector<mpz_class> rem = a.ascending();
  const int db = b.degree();
  int dr = a.degree();
  int steps = std::max(dr - db + 1, 0);
  while (dr >= db && dr >= 0) {
    mpz_class top = rem[static_cast<std::size_t>(dr)];
    for (auto& c : rem) c *= b.leading();
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(dr - db + j)] -= top * b.coeff(j);
    --steps;
    rem.resize(static_cast<std::size_t>(dr));
    --dr;
    while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) {
      rem.pop_back();
      --dr;
    }
  }
  IntPolynomial r(std::move(rem));
  // Normalise to the textbook multiplier lc(b)^(deg a - deg b + 1).
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(std::max(steps, 0)));
  return scale * r;
}

IntPolynomial primitive_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& f) {
  std::vector<SquarefreeFactor> out;
  if (f.degree() <= 0) return out;
  // b[k] = product of the distinct irreducible factors of multiplicity > k.
  std::vector<IntPolynomial> b;
  IntPolynomial a = f.primitive_part();
  while (a.degree() > 0) {
    IntPolynomial g = primitive_gcd(a, a.derivative());
    b.push_back(*divide_exact(a, g));
    a = g;
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    IntPolynomial s = k + 1 < b.size() ? *divide_exact(b[k], b[k + 1]) : b[k];
    if (s.degree() > 0) out.push_back({s.primitive_part(), static_cast<int>(k) + 1});
  }
  return out;
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPolynomial cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  static std::mutex mutex;
  static std::map<int, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPolynomial value = IntPolynomial::monomial(1, n) - IntPolynomial::constant(1);
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) value = *divide_exact(value, cyclotomic(d));
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(n, value);
  return value;
}

mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace skolem
