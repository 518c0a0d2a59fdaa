#include "bftorus/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bftorus {

namespace {

IntMatrix matrix_power(const IntMatrix& a, unsigned k) {
  IntMatrix r = IntMatrix::identity(a.rows());
  IntMatrix b = a;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

RatPoly x_power_minus_one(unsigned k) { return RatPoly::monomial(Rational(1), k) - RatPoly::constant(Rational(1)); }

// Shared characteristic polynomial of a pair, validated.
IntPoly common_char_poly(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square() || !b.is_square()) throw Error(ErrorKind::NotSquare, "equivalence tests need square matrices");
  IntPoly pa = char_poly(a);
  IntPoly pb = char_poly(b);
  if (pa != pb)
    throw Error(ErrorKind::CharPolyMismatch, "characteristic polynomials " + to_string(pa) + " and " + to_string(pb) + " differ");
  if (pa.degree() >= 1 && !is_irreducible(pa))
    throw Error(ErrorKind::ReduciblePolynomial, "characteristic polynomial " + to_string(pa) + " is reducible");
  return pa;
}

// Outcome of g at one matrix: the group, or nothing when g(A) is not integral.
std::optional<AbelianGroup> try_bf_group(const IntMatrix& a, const RatPoly& g) {
  try {
    return cokernel(eval_poly_at_matrix(g, a));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonIntegralResult) return std::nullopt;
    throw;
  }
}

std::string group_or_nonintegral(const std::optional<AbelianGroup>& g) {
  return g ? to_string(*g) : std::string("non-integral");
}

// Integer coefficient vectors of degree < n, non-constant, |c_i| <= bound, in
// the documented enumeration order.
std::vector<std::vector<long>> grid_candidates(std::size_t n, long bound) {
  std::vector<std::vector<long>> out;
  std::vector<long> c(n, -bound);
  const long width = 2 * bound + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(width);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t t = idx;
    bool nonconstant = false;
    // Top coefficient varies slowest, so idx order is lexicographic from the top.
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = static_cast<long>(t % width) - bound;
      t /= width;
      if (i > 0 && c[i] != 0) nonconstant = true;
    }
    if (nonconstant) out.push_back(c);
  }
  auto l1 = [](const std::vector<long>& v) {
    long s = 0;
    for (long x : v) s += std::labs(x);
    return s;
  };
  auto lex_top = [](const std::vector<long>& x, const std::vector<long>& y) {
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    long sx = l1(x), sy = l1(y);
    if (sx != sy) return sx < sy;
    return lex_top(x, y);
  });
  return out;
}

IntMatrix lincomb(const std::vector<IntMatrix>& powers, const std::vector<long>& c) {
  const std::size_t n = powers.front().rows();
  IntMatrix r(n, n);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const Integer ck = c[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r(i, j) += ck * powers[k](i, j);
  }
  return r;
}

RatPoly poly_from_coeffs(const std::vector<long>& c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RatPoly(v);
}

EquivalenceVerdict distinguished(const RatPoly& g, const std::optional<AbelianGroup>& ga,
                                 const std::optional<AbelianGroup>& gb) {
  EquivalenceVerdict v;
  v.kind = VerdictKind::BFDistinguished;
  v.witness = g;
  v.groups = std::make_pair(group_or_nonintegral(ga), group_or_nonintegral(gb));
  v.reason = ga && gb ? "BF groups differ" : "g(A) is integral for exactly one of the matrices";
  return v;
}

bool is_unit_mod(const Integer& d, unsigned m) {
  Integer g = gcd(d, Integer(m));
  return g == 1;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void append_word(std::ostringstream& out, const Word& w) {
  if (w.empty()) {
    out << '1';
    return;
  }
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) out << ' ';
    out << 'x' << w[t].first;
    if (w[t].second != 1) out << '^' << w[t].second.get_str();
  }
}

}  // namespace

AbelianGroup bf_group(const IntMatrix& a, const RatPoly& g) { return cokernel(eval_poly_at_matrix(g, a)); }

AbelianGroup bf_k(const IntMatrix& a, unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "period must be positive");
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "BF_k of a non-square matrix");
  return cokernel(matrix_power(a, k) - IntMatrix::identity(a.rows()));
}

BFProfile bf_profile(const IntMatrix& a, const std::vector<RatPoly>& gs) {
  BFProfile prof{a, {}};
  IntPoly p = char_poly(a);
  for (const auto& g : gs) {
    auto grp = try_bf_group(a, g);
    if (grp) prof.entries.insert_or_assign(poly_mod(g, p), *grp);
  }
  return prof;
}

PeriodicStructure periodic_structure(const IntMatrix& a, unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "period must be positive");
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "periodic points of a non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix m = matrix_power(a, k) - IntMatrix::identity(n);
  if (determinant(m) == 0)
    throw Error(ErrorKind::DegeneratePeriod, "det(A^" + std::to_string(k) + " - I) = 0: the fixed set is not finite");
  // U M V = D, so M^-1 Z^n = V D^-1 Z^n and column i of V over d_i generates.
  SmithDecomposition s = smith_normal_form(m);
  PeriodicStructure out;
  out.k = k;
  out.invariant_factors = s.diagonal();
  out.group = AbelianGroup::from_invariant_factors(out.invariant_factors);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = out.invariant_factors[i];
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < n; ++r) {
      Integer num;
      mpz_fdiv_r(num.get_mpz_t(), s.V(r, i).get_mpz_t(), d.get_mpz_t());
      x[r] = Rational(num, d);
      x[r].canonicalize();
    }
    out.generators.push_back(std::move(x));
  }
  return out;
}

FractionalIdeal matrix_to_ideal(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "matrix_to_ideal of a non-square matrix");
  const std::size_t n = a.rows();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "the ideal correspondence needs n >= 2");
  IntPoly p = char_poly(a);
  NumberField k(p);
  // Row echelon form of A^T - beta I over K; its kernel is one-dimensional.
  std::vector<std::vector<FieldElement>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FieldElement> row;
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement e = FieldElement::from_integer(k, a(j, i));
      if (i == j) e = e - FieldElement::beta(k);
      row.push_back(e);
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && rows[piv][c].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(rows[r], rows[piv]);
    FieldElement inv = rows[r][c].inverse();
    for (auto& e : rows[r]) e = e * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      FieldElement f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r != n - 1) throw Error(ErrorKind::CrossCheckFailed, "eigenspace of A^T at beta is not one-dimensional");
  std::size_t free = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) ++free;
  std::vector<FieldElement> v(n, FieldElement::zero(k));
  v[free] = FieldElement::one(k);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][free];
  // Make v[0] rational. The first canonical basis element of an ideal is
  // rational, so ideal_to_matrix followed by this recovers the ideal up to Q.
  const FieldElement first_inv = v[0].inverse();
  for (auto& e : v) e = e * first_inv;

  Integer den = 1;
  for (const auto& e : v)
    for (const auto& c : e.coords()) den = lcm(den, c.get_den());
  Integer content = 0;
  for (const auto& e : v)
    for (const auto& c : e.coords()) content = gcd(content, Integer(c * den));
  Rational scale(den, content);
  scale.canonicalize();
  for (const auto& e : v) {
    auto it = std::find_if(e.coords().begin(), e.coords().end(), [](const Rational& c) { return c != 0; });
    if (it != e.coords().end()) {
      if (*it < 0) scale = -scale;
      break;
    }
  }
  for (auto& e : v) e = scale * e;
  return FractionalIdeal(lattice_from_generators(k, v));
}

IntMatrix ideal_to_matrix(const FractionalIdeal& i) {
  const auto basis = i.elements();
  return to_integer(multiplication_matrix(FieldElement::beta(i.field()), basis));
}

std::string verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::LEquivalent: return "L-equivalent";
    case VerdictKind::NotLEquivalent: return "not-L-equivalent";
    case VerdictKind::BFDistinguished: return "BF-distinguished";
    case VerdictKind::BFCertified: return "BF-certified";
    case VerdictKind::StrongBFCertified: return "strong-BF-certified";
    case VerdictKind::StrongBFRefuted: return "strong-BF-refuted";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string verdict_to_json(const EquivalenceVerdict& v) {
  std::ostringstream out;
  out << "{\"verdict\":\"" << verdict_name(v.kind) << '"';
  if (v.witness) out << ",\"witness\":\"" << to_string(*v.witness) << '"';
  if (v.groups)
    out << ",\"groups\":{\"A\":\"" << v.groups->first << "\",\"B\":\"" << v.groups->second << "\"}";
  if (!v.reason.empty()) out << ",\"reason\":\"" << json_escape(v.reason) << '"';
  if (v.bound) out << ",\"bound\":" << *v.bound;
  out << '}';
  return out.str();
}

std::string verdict_to_text(const EquivalenceVerdict& v) {
  std::ostringstream out;
  out << "verdict: " << verdict_name(v.kind) << '\n';
  if (v.witness) out << "witness: " << to_string(*v.witness) << '\n';
  if (v.groups) out << "groups: A = " << v.groups->first << ", B = " << v.groups->second << '\n';
  if (!v.reason.empty()) out << "reason: " << v.reason << '\n';
  if (v.bound) out << "bound: " << *v.bound << '\n';
  return out.str();
}

EquivalenceVerdict l_equivalent(const IntMatrix& a, const IntMatrix& b) {
  common_char_poly(a, b);
  Order ra = coefficient_ring(matrix_to_ideal(a));
  Order rb = coefficient_ring(matrix_to_ideal(b));
  EquivalenceVerdict v;
  if (ra == rb) {
    v.kind = VerdictKind::LEquivalent;
    v.reason = "common coefficient ring " + to_string(ra);
  } else {
    v.kind = VerdictKind::NotLEquivalent;
    v.reason = "coefficient rings " + to_string(ra) + " and " + to_string(rb) + " differ";
  }
  return v;
}

EquivalenceVerdict bf_refute(const IntMatrix& a, const IntMatrix& b, unsigned bound) {
  const IntPoly p = common_char_poly(a, b);
  const std::size_t n = a.rows();

  auto check = [&](const RatPoly& g) -> std::optional<EquivalenceVerdict> {
    auto ga = try_bf_group(a, g);
    auto gb = try_bf_group(b, g);
    if (ga == gb) return std::nullopt;
    return distinguished(g, ga, gb);
  };

  for (unsigned k = 1; k <= bound; ++k)
    if (auto v = check(x_power_minus_one(k))) return *v;

  if (n >= 2) {
    for (const IntMatrix* m : {&a, &b})
      for (const auto& z : coefficient_ring(matrix_to_ideal(*m)).elements()) {
        RatPoly g = z.to_poly();
        if (g.degree() < 1) continue;
        if (auto v = check(g)) return *v;
      }

    // Integer candidates: g(A) is a combination of precomputed powers.
    std::vector<IntMatrix> pa{IntMatrix::identity(n)}, pb{IntMatrix::identity(n)};
    for (std::size_t i = 1; i < n; ++i) {
      pa.push_back(pa.back() * a);
      pb.push_back(pb.back() * b);
    }
    for (const auto& c : grid_candidates(n, static_cast<long>(bound))) {
      AbelianGroup ga = cokernel(lincomb(pa, c));
      AbelianGroup gb = cokernel(lincomb(pb, c));
      if (ga != gb) return distinguished(poly_from_coeffs(c), ga, gb);
    }
  }

  EquivalenceVerdict v;
  v.kind = VerdictKind::Inconclusive;
  v.bound = bound;
  v.reason = "no distinguishing polynomial within the search bound";
  return v;
}

EquivalenceVerdict bf_certify(const IntMatrix& a, const IntMatrix& b) {
  const IntPoly p = common_char_poly(a, b);
  const std::size_t n = a.rows();
  EquivalenceVerdict v;
  if (n < 2 || square_part(discriminant(p)).factor == 1) {
    v.kind = VerdictKind::StrongBFCertified;
    v.reason = "disc(p) is square-free, so Z[b] is the maximal order and every ideal is invertible";
    return v;
  }
  FractionalIdeal ia = matrix_to_ideal(a);
  FractionalIdeal ib = matrix_to_ideal(b);
  Order ra = coefficient_ring(ia);
  Order rb = coefficient_ring(ib);
  if (ra != rb) {
    v.kind = VerdictKind::NotLEquivalent;
    v.reason = "not BF-equivalent: BF-equivalence forces equal coefficient rings, here " + to_string(ra) + " and " +
               to_string(rb);
    return v;
  }
  const bool inv_a = is_invertible(ia, ra);
  const bool inv_b = is_invertible(ib, ra);
  if (inv_a && inv_b) {
    v.kind = VerdictKind::StrongBFCertified;
    v.reason = "both ideals are invertible in the common coefficient ring " + to_string(ra);
    return v;
  }
  if (n <= 3) {
    v.kind = VerdictKind::BFCertified;
    v.reason = "n <= 3 and equal coefficient rings";
    return v;
  }
  const FractionalIdeal zb(ZLattice::power_basis(ia.field()));
  auto pair_has_invertible = [&](const FractionalIdeal& i, bool inv_i) {
    if (inv_i) return true;
    FractionalIdeal dual = colon(zb, i);
    return is_invertible(dual, coefficient_ring(dual));
  };
  if (pair_has_invertible(ia, inv_a) && pair_has_invertible(ib, inv_b)) {
    v.kind = VerdictKind::BFCertified;
    v.reason = "equal coefficient rings and each of (I, (Z[b]:I)), (J, (Z[b]:J)) has an invertible member";
    return v;
  }
  v.kind = VerdictKind::Inconclusive;
  v.bound = 0;
  v.reason = "no sufficient condition applies";
  return v;
}

std::optional<IntMatrix> conjugator_mod(const IntMatrix& a, const IntMatrix& b, unsigned m) {
  const std::size_t n = a.rows();
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
  if (n * n > 16) throw Error(ErrorKind::InvalidArgument, "exhaustive conjugacy search is limited to small n");
  std::vector<unsigned> digits(n * n, 0);
  IntMatrix pm(n, n);
  while (true) {
    for (std::size_t t = 0; t < n * n; ++t) pm(t / n, t % n) = digits[t];
    if (is_unit_mod(determinant(pm), m)) {
      IntMatrix diff = pm * a - b * pm;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j)
          if (!mpz_divisible_ui_p(diff(i, j).get_mpz_t(), m)) ok = false;
      if (ok) return pm;
    }
    std::size_t t = 0;
    while (t < digits.size() && ++digits[t] == m) digits[t++] = 0;
    if (t == digits.size()) break;
  }
  return std::nullopt;
}

EquivalenceVerdict strong_bf_refute(const IntMatrix& a, const IntMatrix& b, unsigned bound) {
  EquivalenceVerdict v = bf_refute(a, b, bound);
  if (v.kind == VerdictKind::BFDistinguished) {
    v.kind = VerdictKind::StrongBFRefuted;
    v.reason += "; groups that differ as abelian groups differ as Z[b]-modules";
    return v;
  }
  if (a.rows() <= 2) {
    for (unsigned m = 2; m <= kConjugacyModulusLimit; ++m) {
      if (conjugator_mod(a, b, m)) continue;
      EquivalenceVerdict r;
      r.kind = VerdictKind::StrongBFRefuted;
      r.witness = RatPoly::constant(Rational(m));
      r.reason = "A and B are not conjugate mod " + std::to_string(m) + ", so BF_" + std::to_string(m) +
                 " differs as a Z[b]-module";
      return r;
    }
  }
  return v;
}

AbelianGroup suspension_h1(const IntMatrix& a) {
  return bf_group(a, RatPoly::x() - RatPoly::constant(Rational(1))).with_extra_free_rank(1);
}

Presentation pi1_presentation(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "presentation of a non-square matrix");
  const std::size_t n = a.rows();
  Presentation pres;
  pres.generators = n + 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      pres.relations.push_back({{{i, 1}, {j, 1}}, {{j, 1}, {i, 1}}});
  for (std::size_t j = 1; j <= n; ++j) {
    Word rhs;
    for (std::size_t i = 1; i <= n; ++i)
      if (a(j - 1, i - 1) != 0) rhs.emplace_back(i, a(j - 1, i - 1));
    pres.relations.push_back({{{0, 1}, {j, 1}, {0, -1}}, rhs});
  }
  return pres;
}

std::string to_string(const Presentation& p) {
  std::ostringstream out;
  out << '<';
  for (std::size_t g = 0; g < p.generators; ++g) out << (g ? ", " : "") << 'x' << g;
  out << " |";
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    out << (r ? ", " : " ");
    append_word(out, p.relations[r].lhs);
    out << " = ";
    append_word(out, p.relations[r].rhs);
  }
  out << '>';
  return out.str();
}

AbelianGroup abelianize(const Presentation& p) {
  IntMatrix rel(p.generators, p.relations.size());
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    for (const auto& [g, e] : p.relations[r].lhs) rel(g, r) += e;
    for (const auto& [g, e] : p.relations[r].rhs) rel(g, r) -= e;
  }
  if (p.relations.empty()) return AbelianGroup(p.generators, {});
  return cokernel(rel);
}

std::pair<Integer, AbelianGroup> flow_invariant_pair(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "flow invariants of a non-square matrix");
  const IntMatrix ia = IntMatrix::identity(a.rows()) - a;
  return {determinant(ia), bf_group(a, RatPoly::x() - RatPoly::constant(Rational(1)))};
}

}  // namespace bftorus
