#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bftorus/errors.hpp"

namespace bftorus {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial, constant term first. Trailing zero
// coefficients are never stored, so the zero polynomial is the empty
// sequence and equality is plain coefficient comparison.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
  static Poly monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coefficients() const { return c_; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  T operator()(const T& at) const {
    T acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(d));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> r(a.c_);
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  // Degree first, then coefficients from the top down.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rational(const IntPoly& p);
// Throws NonIntegralResult if some coefficient is not an integer.
IntPoly to_integer(const RatPoly& p);
// Least common multiple of the coefficient denominators (1 for the zero polynomial).
Integer common_denominator(const RatPoly& p);
Integer content(const IntPoly& p);

// Quotient and remainder over Q. Throws DivisionByZero for b = 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
// Unique representative of g modulo p with degree < deg p.
RatPoly poly_mod(const RatPoly& g, const IntPoly& p);
// Division by a monic integer polynomial stays in Z[x]. Throws NotMonic.
IntPoly poly_mod(const IntPoly& g, const IntPoly& p);
// Monic gcd over Q (zero if both inputs are zero).
RatPoly poly_gcd(RatPoly a, RatPoly b);

// Res(a, b) = det Sylvester(a, b) = lc(a)^deg(b) * prod b(roots of a).
// With this convention Res(x - a, x - b) = a - b.
Integer resultant(const IntPoly& a, const IntPoly& b);
// (-1)^(n(n-1)/2) Res(p, p') for monic p of degree >= 2. Throws NotMonic.
Integer discriminant(const IntPoly& p);

struct SquarePart {
  Integer factor;      // F > 0, maximal with F^2 | d
  Integer squarefree;  // d / F^2, square-free (sign carried here)
};

inline constexpr unsigned long kDefaultTrialBound = 1000000;

// Prime factorization of |n| (n != 0), primes ascending. Trial division up
// to trial_bound, Pollard-Brent rho beyond; throws FactorizationIncomplete
// when a cofactor cannot be split.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n,
                                                         unsigned long trial_bound = kDefaultTrialBound);
// All positive divisors of |n|, ascending.
std::vector<Integer> divisors(const Integer& n);
// d = F^2 * Delta with Delta square-free. Throws InvalidArgument for d = 0.
SquarePart square_part(const Integer& d, unsigned long trial_bound = kDefaultTrialBound);

// Exact irreducibility over Q for a monic integer polynomial. Uses
// distinct-degree factorization at several small primes to restrict the
// possible factor degrees, then a Kronecker search for the survivors.
bool is_irreducible(const IntPoly& p);

// Canonical text form, highest degree first: "x^3-23x^2+7x-1",
// "(3/2)x^2-(1/2)x+1/3". The zero polynomial prints as "0".
std::string to_string(const IntPoly& p, char var = 'x');
std::string to_string(const RatPoly& p, char var = 'x');

// Parses the grammar documented in README.md:
//   poly  := ws [sign] term (sign term)* ws
//   term  := coeff ['*'] var ['^' uint] | coeff | var ['^' uint]
//   coeff := uint ['/' uint] | '(' [sign] uint ['/' uint] ')'
// Whitespace is ignored everywhere. Throws ParseError.
RatPoly parse_poly(std::string_view text, char var = 'x');
// Same grammar; throws NonIntegralResult if a coefficient is fractional.
IntPoly parse_int_poly(std::string_view text, char var = 'x');

}  // namespace bftorus
