#include "bftorus/orders.hpp"

#include <algorithm>
#include <sstream>

namespace bftorus {

namespace {

using IntVec = std::vector<Integer>;

// v in the column span of the upper triangular M.
bool in_span(const IntMatrix& m, IntVec v) {
  for (std::size_t k = m.rows(); k-- > 0;) {
    if (!mpz_divisible_p(v[k].get_mpz_t(), m(k, k).get_mpz_t())) return false;
    Integer y = v[k] / m(k, k);
    if (y != 0)
      for (std::size_t i = 0; i <= k; ++i) v[i] -= y * m(i, k);
  }
  return true;
}

// Product of two elements of Z[beta] given by power-basis coordinates.
IntVec mul_mod(const IntVec& a, const IntVec& b, const IntPoly& p) {
  const std::size_t n = a.size();
  IntVec prod(2 * n - 1, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
  }
  for (std::size_t k = 2 * n - 2; k >= n; --k) {
    const Integer c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < n; ++i) prod[k - n + i] -= c * p.coeff(i);
  }
  prod.resize(n);
  return prod;
}

// Orders R with Z[beta] in R in q^-e Z[beta] and [R : Z[beta]] | q^e, written
// as R = q^-e M with M in column Hermite form. Since R meets Q in Z, M(0,0) = q^e.
class PrimaryEnumerator {
 public:
  PrimaryEnumerator(const NumberField& k, const Integer& q, unsigned e) : k_(k), q_(q), e_(e), n_(k.degree()) {
    mpz_pow_ui(qe_.get_mpz_t(), q.get_mpz_t(), e);
    powers_.resize(e + 1);
    for (unsigned a = 0; a <= e; ++a) mpz_pow_ui(powers_[a].get_mpz_t(), q.get_mpz_t(), a);
  }

  std::vector<Order> run() {
    m_ = IntMatrix(n_, n_);
    m_(0, 0) = qe_;
    out_.clear();
    choose_column(1, e_);
    return out_;
  }

 private:
  void choose_column(std::size_t j, unsigned budget) {
    if (j == n_) {
      accept();
      return;
    }
    // Index [R : Z[beta]] = q^(sum of (e - a_j)), bounded by q^e.
    for (unsigned a = e_; a + budget >= e_; --a) {
      m_(j, j) = powers_[a];
      fill_above(j, 0, budget - (e_ - a));
      if (a == 0) break;
    }
    m_(j, j) = 0;
  }

  void fill_above(std::size_t j, std::size_t i, unsigned budget) {
    if (i == j) {
      if (column_ok(j)) choose_column(j + 1, budget);
      return;
    }
    for (Integer v = 0; v < m_(i, i); ++v) {
      m_(i, j) = v;
      fill_above(j, i + 1, budget);
    }
    m_(i, j) = 0;
  }

  // Cheap prefix test on the leading (j+1) x (j+1) block: q^e e_j must lie in
  // the span of the first j+1 columns.
  bool column_ok(std::size_t j) const {
    IntVec v(n_, Integer(0));
    v[j] = qe_;
    for (std::size_t k = j + 1; k-- > 0;) {
      if (!mpz_divisible_p(v[k].get_mpz_t(), m_(k, k).get_mpz_t())) return false;
      Integer y = v[k] / m_(k, k);
      for (std::size_t i = 0; i <= k; ++i) v[i] -= y * m_(i, k);
    }
    return true;
  }

  void accept() {
    const IntMatrix& comp = k_.companion();
    std::vector<IntVec> cols(n_);
    for (std::size_t j = 0; j < n_; ++j) cols[j] = m_.column(j);
    for (std::size_t j = 0; j < n_; ++j)
      if (!in_span(m_, comp * cols[j])) return;
    for (std::size_t i = 1; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) {
        IntVec w = mul_mod(cols[i], cols[j], k_.polynomial());
        for (auto& c : w) {
          if (!mpz_divisible_p(c.get_mpz_t(), qe_.get_mpz_t())) return;
          c /= qe_;
        }
        if (!in_span(m_, std::move(w))) return;
      }
    out_.emplace_back(ZLattice(k_, qe_, m_));
  }

  const NumberField& k_;
  Integer q_;
  unsigned e_;
  std::size_t n_;
  Integer qe_;
  std::vector<Integer> powers_;
  IntMatrix m_;
  std::vector<Order> out_;
};

}  // namespace

Integer order_index(const Order& r) {
  Rational v = r.covolume();
  Rational inv = abs(Rational(1) / v);
  return inv.get_num();
}

Integer order_discriminant(const Order& r) {
  RatMatrix w = r.rational_basis();
  Rational d = determinant(w.transpose() * to_rational(r.field().trace_form()) * w);
  return d.get_num();
}

OrderLattice enumerate_order_lattice(const NumberField& field) {
  const Integer f = square_part(discriminant(field.polynomial())).factor;
  std::vector<Order> nodes{Order::power_basis(field)};
  if (f > 1) {
    for (const auto& [q, e] : factor_integer(f)) {
      std::vector<Order> primary = PrimaryEnumerator(field, q, e).run();
      // Every order is the sum of its q-primary parts, one per prime of F.
      std::vector<Order> next;
      for (const auto& a : nodes)
        for (const auto& b : primary)
          next.emplace_back(sum(a, b));
      nodes = std::move(next);
    }
  }
  std::vector<std::pair<Integer, std::size_t>> keyed;
  for (std::size_t i = 0; i < nodes.size(); ++i) keyed.emplace_back(order_index(nodes[i]), i);
  std::sort(keyed.begin(), keyed.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return nodes[x.second] < nodes[y.second];
  });
  OrderLattice out{field, {}, {}, {}, 1, 1};
  for (const auto& [idx, i] : keyed) {
    if (!out.nodes.empty() && out.nodes.back() == nodes[i]) continue;
    out.nodes.push_back(nodes[i]);
    out.indices.push_back(idx);
  }
  const std::size_t m = out.nodes.size();
  // Containment relation, then transitive reduction.
  std::vector<std::vector<char>> below(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (mpz_divisible_p(out.indices[j].get_mpz_t(), out.indices[i].get_mpz_t()) && out.nodes[j].contains(out.nodes[i]))
        below[i][j] = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!below[i][j]) continue;
      bool cover = true;
      for (std::size_t k = i + 1; k < j && cover; ++k)
        if (below[i][k] && below[k][j]) cover = false;
      if (cover) out.edges.emplace_back(i, j);
    }
  out.min_index = out.indices.front();
  out.max_index = out.indices.back();
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (!below[i][m - 1]) throw Error(ErrorKind::CrossCheckFailed, "order lattice has no unique maximal element");
  return out;
}

Order maximal_order(const NumberField& field) {
  OrderLattice l = enumerate_order_lattice(field);
  return l.nodes.back();
}

FractionalIdeal conductor(const Order& r) { return colon(FractionalIdeal(ZLattice::power_basis(r.field())), r); }

std::vector<FractionalIdeal> non_invertible_primes(const OrderLattice& lattice) {
  std::vector<FractionalIdeal> out;
  for (const auto& [lo, hi] : lattice.edges)
    if (lo == 0) out.push_back(conductor(lattice.nodes[hi]));
  return out;
}

std::vector<FractionalIdeal> non_invertible_primes(const NumberField& field) {
  return non_invertible_primes(enumerate_order_lattice(field));
}

std::string render_hasse(const OrderLattice& lattice) {
  // Level of a node = length of the longest chain up from Z[beta]. Edges come
  // sorted by lower node, so one pass settles every level.
  const std::size_t m = lattice.nodes.size();
  std::vector<std::size_t> level(m, 0);
  for (const auto& [lo, hi] : lattice.edges) level[hi] = std::max(level[hi], level[lo] + 1);
  const std::size_t top = *std::max_element(level.begin(), level.end());
  std::ostringstream out;
  for (std::size_t l = top + 1; l-- > 0;) {
    out << "level " << l << ":";
    for (std::size_t i = 0; i < m; ++i)
      if (level[i] == l) out << "  [" << i << "] index " << lattice.indices[i].get_str();
    out << '\n';
    if (l == 0) break;
    out << "  covers:";
    for (const auto& [lo, hi] : lattice.edges)
      if (level[hi] == l) out << "  " << lo << " < " << hi;
    out << '\n';
  }
  for (std::size_t i = 0; i < m; ++i) out << '[' << i << "] " << to_string(lattice.nodes[i]) << '\n';
  return out.str();
}

std::string order_lattice_to_json(const OrderLattice& lattice) {
  std::ostringstream out;
  out << "{\"field\":\"" << to_string(lattice.field.polynomial()) << "\",\"nodes\":[";
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    out << (i ? "," : "") << "{\"index\":\"" << lattice.indices[i].get_str() << "\",\"basis\":\""
        << to_string(lattice.nodes[i]) << "\",\"lattice\":" << lattice_to_json(lattice.nodes[i]) << '}';
  }
  out << "],\"edges\":[";
  for (std::size_t e = 0; e < lattice.edges.size(); ++e)
    out << (e ? "," : "") << '[' << lattice.edges[e].first << ',' << lattice.edges[e].second << ']';
  out << "],\"min_index\":\"" << lattice.min_index.get_str() << "\",\"max_index\":\"" << lattice.max_index.get_str()
      << "\"}";
  return out.str();
}

}  // namespace bftorus
