#include "bftorus/exactmat.hpp"

#include <sstream>

#include "json_int.hpp"

namespace bftorus {

namespace {

void require_square(const IntMatrix& a, const char* what) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, what);
}

// Index (i, j) of the nonzero entry of least absolute value in the
// submatrix rows >= t, cols >= t; false if that submatrix is zero.
bool min_abs_entry(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Integer& v = d(i, j);
      if (v == 0) continue;
      if (!found || mpz_cmpabs((v).get_mpz_t(), (best).get_mpz_t()) < 0) {
        best = v;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <class T>
T charpoly_trace(const Matrix<T>& a) {
  T s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

// Faddeev-LeVerrier. Over Z every division by k is exact.
template <class T>
std::vector<T> faddeev_leverrier(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  std::vector<T> c(n + 1, T(0));
  c[n] = 1;
  Matrix<T> m = Matrix<T>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> am = a * m;
    T tr = charpoly_trace(am);
    if constexpr (std::is_same_v<T, Integer>) {
      c[n - k] = -tdiv(tr, Integer(static_cast<unsigned long>(k)));
    } else {
      c[n - k] = -tr / T(static_cast<unsigned long>(k));
    }
    m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
  }
  return c;
}

template <class T>
Matrix<T> gauss_jordan_inverse(Matrix<T> a) {
  const std::size_t n = a.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
    a.swap_rows(piv, col);
    inv.swap_rows(piv, col);
    T s = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      T f = -a(i, col);
      a.add_row_multiple(i, col, f);
      inv.add_row_multiple(i, col, f);
    }
  }
  return inv;
}

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  const std::size_t k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < k; ++i) d.push_back(D(i, i));
  return d;
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

IntMatrix to_integer(const RatMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).get_den() != 1)
        throw Error(ErrorKind::NonIntegralResult, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                      ") = " + a(i, j).get_str() + " is not an integer");
      r(i, j) = a(i, j).get_num();
    }
  return r;
}

// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& a) {
  require_square(a, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && m(i, k) == 0) ++i;
      if (i == n) return 0;
      m.swap_rows(i, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational determinant(const RatMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix m = a;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      m.swap_rows(piv, k);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = -m(i, k) / m(k, k);
      m.add_row_multiple(i, k, f);
    }
  }
  return det;
}

Integer trace(const IntMatrix& a) {
  require_square(a, "trace of a non-square matrix");
  return charpoly_trace(a);
}

IntPoly char_poly(const IntMatrix& a) {
  require_square(a, "characteristic polynomial of a non-square matrix");
  return IntPoly(faddeev_leverrier(a));
}

RatPoly char_poly(const RatMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "characteristic polynomial of a non-square matrix");
  return RatPoly(faddeev_leverrier(a));
}

IntMatrix eval_poly_at_matrix(const RatPoly& g, const IntMatrix& a) {
  require_square(a, "polynomial evaluation at a non-square matrix");
  const std::size_t n = a.rows();
  // Cayley-Hamilton: g(A) = (g mod charpoly(A))(A).
  RatPoly r = n == 0 ? g : poly_mod(g, char_poly(a));
  Integer den = common_denominator(r);
  IntPoly scaled = to_integer(Rational(den) * r);
  IntMatrix acc(n, n);
  for (std::size_t i = scaled.size(); i-- > 0;) {
    acc = a * acc;
    for (std::size_t k = 0; k < n; ++k) acc(k, k) += scaled.coeff(i);
  }
  if (den == 1) return acc;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!mpz_divisible_p(acc(i, j).get_mpz_t(), den.get_mpz_t()))
        throw Error(ErrorKind::NonIntegralResult, "g(A) has the non-integral entry " +
                                                      Rational(acc(i, j), den).get_str() + " at (" +
                                                      std::to_string(i) + "," + std::to_string(j) + ")");
      mpz_divexact(acc(i, j).get_mpz_t(), acc(i, j).get_mpz_t(), den.get_mpz_t());
    }
  return acc;
}

RatMatrix eval_poly_at_matrix_rational(const RatPoly& g, const RatMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "polynomial evaluation at a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix acc(n, n);
  for (std::size_t i = g.size(); i-- > 0;) {
    acc = a * acc;
    for (std::size_t k = 0; k < n; ++k) acc(k, k) += g.coeff(i);
  }
  return acc;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t k = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!min_abs_entry(d, t, pi, pj)) break;
    for (;;) {
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Integer q = -tdiv(d(i, t), d(t, t));
        d.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Integer q = -tdiv(d(t, j), d(t, t));
        d.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot survived; pivot on it next.
        min_abs_entry(d, t, pi, pj);
        continue;
      }
      // Row and column t are clear. Enforce d_t | every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, Integer(1));
            u.add_row_multiple(t, i, Integer(1));
            divides = false;
            break;
          }
      if (!divides) {
        min_abs_entry(d, t, pi, pj);
        continue;
      }
      break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

HermiteBasis hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix t = IntMatrix::identity(a.cols());
  std::size_t active = a.cols();  // columns [0, active) are not yet pivots
  std::size_t rank = 0;
  for (std::size_t row = a.rows(); row-- > 0 && active > 0;) {
    for (;;) {
      std::size_t piv = active;
      std::size_t nonzero = 0;
      for (std::size_t j = 0; j < active; ++j) {
        if (h(row, j) == 0) continue;
        ++nonzero;
        if (piv == active || mpz_cmpabs(h(row, j).get_mpz_t(), h(row, piv).get_mpz_t()) < 0) piv = j;
      }
      if (nonzero == 0) break;
      if (nonzero == 1) {
        const std::size_t dest = active - 1;
        h.swap_cols(piv, dest);
        t.swap_cols(piv, dest);
        if (h(row, dest) < 0) {
          h.negate_col(dest);
          t.negate_col(dest);
        }
        for (std::size_t j = active; j < h.cols(); ++j) {
          Integer q = -fdiv(h(row, j), h(row, dest));
          if (q == 0) continue;
          h.add_col_multiple(j, dest, q);
          t.add_col_multiple(j, dest, q);
        }
        --active;
        ++rank;
        break;
      }
      for (std::size_t j = 0; j < active; ++j) {
        if (j == piv || h(row, j) == 0) continue;
        Integer q = -tdiv(h(row, j), h(row, piv));
        h.add_col_multiple(j, piv, q);
        t.add_col_multiple(j, piv, q);
      }
    }
  }
  return {std::move(h), std::move(t), rank};
}

RatMatrix rational_inverse(const IntMatrix& a) {
  require_square(a, "inverse of a non-square matrix");
  return gauss_jordan_inverse(to_rational(a));
}

RatMatrix rational_inverse(const RatMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "inverse of a non-square matrix");
  return gauss_jordan_inverse(a);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  HermiteBasis hb = hermite_normal_form(a);
  const std::size_t nullity = a.cols() - hb.rank;
  IntMatrix k(a.cols(), nullity);
  for (std::size_t j = 0; j < nullity; ++j) k.set_column(j, hb.T.column(j));
  return k;
}

IntMatrix kernel_mod_m(const IntMatrix& a, const Integer& m) {
  if (m <= 0) throw Error(ErrorKind::InvalidArgument, "kernel_mod_m needs a positive modulus");
  const std::size_t rows = a.rows(), cols = a.cols();
  // x with A x = m y for some integer y: kernel of [A | -m I].
  IntMatrix aug(rows, cols + rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = a(i, j);
    aug(i, cols + i) = -m;
  }
  IntMatrix ker = kernel_basis(aug);
  IntMatrix gens(cols, ker.cols());
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) gens(i, j) = ker(i, j);
  HermiteBasis hb = hermite_normal_form(gens);
  std::vector<std::vector<Integer>> out;
  for (std::size_t j = gens.cols() - hb.rank; j < gens.cols(); ++j) {
    std::vector<Integer> col = hb.H.column(j);
    bool nonzero = false;
    for (auto& v : col) {
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
      if (v != 0) nonzero = true;
    }
    if (nonzero) out.push_back(std::move(col));
  }
  IntMatrix basis(cols, out.size());
  for (std::size_t j = 0; j < out.size(); ++j) basis.set_column(j, out[j]);
  return basis;
}

IntMatrix parse_matrix(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw Error(ErrorKind::ParseError, "empty matrix input");
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, std::string("matrix JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("rows")) throw Error(ErrorKind::ParseError, "matrix JSON needs n and rows");
    const auto n = j.at("n").get<long long>();
    if (n <= 0) throw Error(ErrorKind::ParseError, "matrix dimension must be positive");
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
      throw Error(ErrorKind::ParseError, "matrix JSON row count differs from n");
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (!rows[i].is_array() || rows[i].size() != a.cols())
        throw Error(ErrorKind::ParseError, "matrix JSON row " + std::to_string(i) + " has the wrong length");
      for (std::size_t jj = 0; jj < a.cols(); ++jj) a(i, jj) = detail::json_to_integer(rows[i][jj]);
    }
    return a;
  }
  std::istringstream in{std::string(text)};
  std::string tok;
  auto next = [&](const char* what) {
    if (!(in >> tok)) throw Error(ErrorKind::ParseError, std::string("matrix text ended before ") + what);
    try {
      return Integer(tok);
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::ParseError, "bad integer '" + tok + "' in matrix text");
    }
  };
  Integer n = next("the dimension");
  if (n <= 0 || !n.fits_slong_p()) throw Error(ErrorKind::ParseError, "matrix dimension must be positive");
  const auto dim = static_cast<std::size_t>(n.get_si());
  IntMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = next("all entries were read");
  if (in >> tok) throw Error(ErrorKind::ParseError, "trailing token '" + tok + "' after matrix");
  return a;
}

std::string format_matrix_text(const IntMatrix& a) {
  std::ostringstream out;
  out << a.rows() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j).get_str();
    out << '\n';
  }
  return out.str();
}

std::string format_matrix_json(const IntMatrix& a) {
  std::ostringstream out;
  out << "{\"n\":" << a.rows() << ",\"rows\":[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ',';
      out << detail::integer_to_json(a(i, j));
    }
    out << ']';
  }
  out << "]}";
  return out.str();
}

}  // namespace bftorus
