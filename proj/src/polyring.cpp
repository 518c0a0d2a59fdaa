#include "bftorus/polyring.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>

#include "bftorus/exactmat.hpp"

namespace bftorus {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

IntPoly to_integer(const RatPoly& p) {
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) {
    if (v.get_den() != 1)
      throw Error(ErrorKind::NonIntegralResult, "coefficient " + v.get_str() + " is not an integer");
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

Integer common_denominator(const RatPoly& p) {
  Integer d = 1;
  for (const auto& v : p.coefficients()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  return d;
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& v : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational& lc = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Rational f = r[k] / lc;
    q[k - db] = f;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= f * b.coefficients()[i];
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly poly_mod(const RatPoly& g, const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::DivisionByZero, "reduction modulo the zero polynomial");
  return divmod(g, to_rational(p)).second;
}

IntPoly poly_mod(const IntPoly& g, const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::DivisionByZero, "reduction modulo the zero polynomial");
  if (!p.is_monic()) throw Error(ErrorKind::NotMonic, "integer reduction needs a monic modulus");
  std::vector<Integer> r = g.coefficients();
  const int dp = p.degree();
  for (int k = g.degree(); k >= dp; --k) {
    if (r[k] == 0) continue;
    Integer f = r[k];
    for (int i = 0; i <= dp; ++i) r[k - dp + i] -= f * p.coefficients()[i];
  }
  if (r.size() > static_cast<std::size_t>(dp)) r.resize(static_cast<std::size_t>(dp));
  return IntPoly(std::move(r));
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational lc = a.leading();
  return Rational(1) / lc * a;
}

Integer resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), k = b.degree();
  if (m == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a.leading().get_mpz_t(), static_cast<unsigned long>(k));
    return r;
  }
  if (k == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  const std::size_t n = static_cast<std::size_t>(m + k);
  IntMatrix s(n, n);
  for (int r = 0; r < k; ++r)
    for (int i = 0; i <= m; ++i) s(r, r + i) = a.coeff(static_cast<std::size_t>(m - i));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= k; ++i) s(k + r, r + i) = b.coeff(static_cast<std::size_t>(k - i));
  return determinant(s);
}

Integer discriminant(const IntPoly& p) {
  if (!p.is_monic()) throw Error(ErrorKind::NotMonic, "discriminant needs a monic polynomial");
  if (p.degree() < 2) throw Error(ErrorKind::InvalidArgument, "discriminant needs degree >= 2");
  const long n = p.degree();
  Integer r = resultant(p, p.derivative());
  return ((n * (n - 1) / 2) % 2 == 0) ? r : Integer(-r);
}

// ---------------------------------------------------------------- integers

namespace {

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Pollard rho with Brent's cycle detection. Returns a nontrivial factor or 0.
Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 64; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    std::uint64_t steps = 0;
    while (g == 1 && steps < (1ull << 22)) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        steps += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void split_cofactor(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    split_cofactor(s, out);
    split_cofactor(s, out);
    return;
  }
  Integer d = pollard_brent(n);
  if (d == 0) throw Error(ErrorKind::FactorizationIncomplete, "could not split " + n.get_str());
  split_cofactor(d, out);
  split_cofactor(Integer(n / d), out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n, unsigned long trial_bound) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cannot factor zero");
  Integer m = abs(n);
  std::map<Integer, unsigned> out;
  auto strip = [&](unsigned long d) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++out[Integer(d)];
    }
  };
  strip(2);
  for (unsigned long d = 3; d <= trial_bound; d += 2) {
    if (Integer(d) * d > m) break;
    strip(d);
  }
  if (m != 1) {
    Integer bound_sq = Integer(trial_bound) * trial_bound;
    if (m < bound_sq)
      ++out[m];  // no factor <= trial_bound, so m is prime
    else
      split_cofactor(m, out);
  }
  return {out.begin(), out.end()};
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> ds{1};
  for (const auto& [prime, e] : factor_integer(n)) {
    const std::size_t base = ds.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

SquarePart square_part(const Integer& d, unsigned long trial_bound) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "square_part of zero");
  SquarePart sp{1, sgn(d)};
  for (const auto& [prime, e] : factor_integer(d, trial_bound)) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), prime.get_mpz_t(), e / 2);
    sp.factor *= pk;
    if (e % 2) sp.squarefree *= prime;
  }
  return sp;
}

// ---------------------------------------------------------- irreducibility

namespace {

using ModPoly = std::vector<std::uint64_t>;  // constant first, trimmed

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1;
  b %= q;
  while (e) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

ModPoly mod_reduce(ModPoly a, const ModPoly& f, std::uint64_t q) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t inv = pow_mod(f.back(), q - 2, q);
  while (a.size() >= f.size()) {
    const std::uint64_t c = a.back() * inv % q;
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + q - c * f[i] % q) % q;
    trim(a);
  }
  return a;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
  return mod_reduce(std::move(r), f, q);
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_reduce(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly mod_div_exact(ModPoly a, const ModPoly& f, std::uint64_t q) {
  trim(a);
  const std::uint64_t inv = pow_mod(f.back(), q - 2, q);
  ModPoly quot(a.size() >= f.size() ? a.size() - f.size() + 1 : 0, 0);
  while (a.size() >= f.size()) {
    const std::uint64_t c = a.back() * inv % q;
    const std::size_t shift = a.size() - f.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < f.size(); ++i) a[shift + i] = (a[shift + i] + q - c * f[i] % q) % q;
    trim(a);
  }
  return quot;
}

ModPoly mod_pow_x(std::uint64_t e, const ModPoly& f, std::uint64_t q, ModPoly base) {
  ModPoly r{1};
  while (e) {
    if (e & 1) r = mod_mul(r, base, f, q);
    base = mod_mul(base, base, f, q);
    e >>= 1;
  }
  return r;
}

// Degrees that a factor of p mod q could have (bit k set = degree k
// reachable as a sum of irreducible factor degrees). Returns false when p
// is not square-free mod q, in which case the prime is skipped.
bool factor_degree_set(const IntPoly& p, std::uint64_t q, std::vector<bool>& reachable) {
  const std::size_t n = static_cast<std::size_t>(p.degree());
  ModPoly f(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), p.coeff(i).get_mpz_t(), q);
    f[i] = r.get_ui();
  }
  ModPoly df(n);
  for (std::size_t i = 1; i <= n; ++i) df[i - 1] = f[i] * (i % q) % q;
  trim(df);
  if (df.empty() || mod_gcd(f, df, q).size() != 1) return false;

  std::vector<std::size_t> degrees;
  ModPoly h{0, 1};
  for (std::size_t i = 1; 2 * i <= f.size() - 1; ++i) {
    h = mod_pow_x(q, f, q, h);
    h = mod_reduce(h, f, q);
    ModPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + q - 1) % q;
    ModPoly g = mod_gcd(hx, f, q);
    if (g.size() > 1) {
      for (std::size_t k = 0; k < (g.size() - 1) / i; ++k) degrees.push_back(i);
      f = mod_div_exact(f, g, q);
      h = mod_reduce(h, f, q);
    }
  }
  if (f.size() > 1) degrees.push_back(f.size() - 1);

  reachable.assign(n + 1, false);
  reachable[0] = true;
  for (std::size_t d : degrees)
    for (std::size_t s = n; s-- > 0;)
      if (reachable[s] && s + d <= n) reachable[s + d] = true;
  return true;
}

// Search for a monic integer factor of exact degree d by interpolation
// through divisors of p at d integer points.
bool has_factor_of_degree(const IntPoly& p, int d) {
  std::vector<std::pair<long, Integer>> pts;
  for (long k = 0; pts.size() < static_cast<std::size_t>(2 * d + 4); ++k) {
    for (long a : {k, -k}) {
      if (k == 0 && a != 0) continue;
      pts.emplace_back(a, p(Integer(a)));
      if (k == 0) break;
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> cost;  // (divisor count, idx)
  std::vector<std::vector<Integer>> divs(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    divs[i] = divisors(pts[i].second);
    cost.emplace_back(divs[i].size(), i);
  }
  std::sort(cost.begin(), cost.end());
  std::vector<std::size_t> chosen;
  for (int i = 0; i < d; ++i) chosen.push_back(cost[i].second);

  // W(x) = prod (x - a_i); g = W + h, h interpolates the chosen values.
  RatPoly w = RatPoly::constant(1);
  for (std::size_t idx : chosen) w = w * RatPoly{Rational(-pts[idx].first), Rational(1)};
  std::vector<RatPoly> lagrange;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    RatPoly li = RatPoly::constant(1);
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      if (i == j) continue;
      const Rational ai(pts[chosen[i]].first), aj(pts[chosen[j]].first);
      li = li * RatPoly{-aj / (ai - aj), Rational(1) / (ai - aj)};
    }
    lagrange.push_back(std::move(li));
  }

  std::vector<Integer> values(chosen.size());
  const RatPoly prat = to_rational(p);
  auto search = [&](auto&& self, std::size_t level) -> bool {
    if (level == chosen.size()) {
      RatPoly h;
      for (std::size_t i = 0; i < chosen.size(); ++i) h = h + Rational(values[i]) * lagrange[i];
      RatPoly g = w + h;
      if (common_denominator(g) != 1) return false;
      return divmod(prat, g).second.is_zero();
    }
    for (const auto& dv : divs[chosen[level]]) {
      for (int s : {1, -1}) {
        values[level] = s * dv;
        if (self(self, level + 1)) return true;
      }
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace

bool is_irreducible(const IntPoly& p) {
  if (!p.is_monic()) throw Error(ErrorKind::NotMonic, "irreducibility test needs a monic polynomial");
  const int n = p.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Integer& c0 = p.coeff(0);
  if (c0 == 0) return false;
  for (const auto& dv : divisors(c0)) {
    if (p(dv) == 0 || p(Integer(-dv)) == 0) return false;
  }
  if (n <= 3) return true;

  std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
  int used = 0;
  for (std::uint64_t q = 3; q < 2000 && used < 12; q += 2) {
    if (!mpz_probab_prime_p(Integer(static_cast<unsigned long>(q)).get_mpz_t(), 30)) continue;
    std::vector<bool> reach;
    if (!factor_degree_set(p, q, reach)) continue;
    ++used;
    for (int k = 0; k <= n; ++k) possible[k] = possible[k] && reach[k];
    bool any = false;
    for (int k = 1; k < n; ++k) any = any || possible[k];
    if (!any) return true;
  }
  for (int d = 2; 2 * d <= n; ++d) {
    if (!possible[d]) continue;
    if (has_factor_of_degree(p, d)) return false;
  }
  return true;
}

// ------------------------------------------------------------ text format

namespace {

template <class T>
std::string format_poly(const Poly<T>& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const T& c = p.coefficients()[k];
    if (c == 0) continue;
    if (c < 0)
      out << '-';
    else if (!first)
      out << '+';
    first = false;
    T a = abs(c);
    if (k == 0) {
      out << a.get_str();
      continue;
    }
    if (a != 1) {
      if constexpr (std::is_same_v<T, Rational>) {
        if (a.get_den() != 1)
          out << '(' << a.get_str() << ')';
        else
          out << a.get_str();
      } else {
        out << a.get_str();
      }
    }
    out << var;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

class PolyParser {
 public:
  PolyParser(std::string_view text, char var) : var_(var) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  RatPoly parse() {
    if (s_.empty()) fail("empty polynomial");
    RatPoly acc;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc = acc + term(sign);
      first = false;
    }
    return acc;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }

  Integer uint() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a digit");
    return Integer(s_.substr(start, pos_ - start));
  }

  Rational fraction() {
    Integer num = uint();
    Integer den = 1;
    if (peek() == '/') {
      ++pos_;
      den = uint();
      if (den == 0) fail("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  RatPoly term(int sign) {
    Rational coeff = 1;
    bool have_coeff = false;
    if (peek() == '(') {
      ++pos_;
      int inner = 1;
      if (peek() == '+' || peek() == '-') inner = get() == '-' ? -1 : 1;
      coeff = fraction();
      if (inner < 0) coeff = -coeff;
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = fraction();
      have_coeff = true;
    }
    if (have_coeff && peek() == '*') ++pos_;
    std::size_t power = 0;
    if (peek() == var_) {
      ++pos_;
      power = 1;
      if (peek() == '^') {
        ++pos_;
        Integer e = uint();
        if (!e.fits_ulong_p() || e > 100000) fail("exponent too large");
        power = e.get_ui();
      }
    } else if (!have_coeff) {
      fail(std::string("expected a coefficient or '") + var_ + "'");
    }
    if (sign < 0) coeff = -coeff;
    return RatPoly::monomial(coeff, power);
  }

  std::string s_;
  std::size_t pos_ = 0;
  char var_;
};

}  // namespace

std::string to_string(const IntPoly& p, char var) { return format_poly(p, var); }
std::string to_string(const RatPoly& p, char var) { return format_poly(p, var); }

RatPoly parse_poly(std::string_view text, char var) { return PolyParser(text, var).parse(); }

IntPoly parse_int_poly(std::string_view text, char var) { return to_integer(parse_poly(text, var)); }

}  // namespace bftorus
