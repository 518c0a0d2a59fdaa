#include "bftorus/abelian_group.hpp"

#include <cctype>
#include <sstream>

namespace bftorus {

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw Error(ErrorKind::InvalidArgument, "torsion coefficients must be >= 2");
    if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
      throw Error(ErrorKind::InvalidArgument, "torsion coefficients must form a divisibility chain");
  }
}

AbelianGroup AbelianGroup::from_invariant_factors(const std::vector<Integer>& diagonal) {
  std::size_t free = 0;
  std::vector<Integer> tors;
  for (const auto& d : diagonal) {
    if (d == 0)
      ++free;
    else if (abs(d) != 1)
      tors.push_back(abs(d));
  }
  return AbelianGroup(free, std::move(tors));
}

Integer AbelianGroup::order() const {
  if (free_rank_ != 0) throw Error(ErrorKind::InvalidArgument, "infinite group has no finite order");
  Integer o = 1;
  for (const auto& t : torsion_) o *= t;
  return o;
}

AbelianGroup AbelianGroup::with_extra_free_rank(std::size_t k) const {
  return AbelianGroup(free_rank_ + k, torsion_);
}

AbelianGroup cokernel(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  std::vector<Integer> diag = s.diagonal();
  // Rows beyond the diagonal contribute free summands.
  diag.resize(a.rows(), Integer(0));
  return AbelianGroup::from_invariant_factors(diag);
}

std::string to_string(const AbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (g.free_rank() > 0) {
    out << "Z^" << g.free_rank();
    first = false;
  }
  for (const auto& t : g.torsion()) {
    if (!first) out << '+';
    out << 'Z' << t.get_str();
    first = false;
  }
  return out.str();
}

AbelianGroup parse_group(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s == "0") return {};
  std::size_t free = 0;
  std::vector<Integer> tors;
  std::size_t pos = 0;
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end == from) throw Error(ErrorKind::ParseError, "expected digits in group '" + s + "'");
    return end;
  };
  while (pos < s.size()) {
    if (s[pos] != 'Z') throw Error(ErrorKind::ParseError, "expected 'Z' in group '" + s + "'");
    ++pos;
    if (pos < s.size() && s[pos] == '^') {
      std::size_t end = digits(pos + 1);
      free += std::stoul(s.substr(pos + 1, end - pos - 1));
      pos = end;
    } else {
      std::size_t end = digits(pos);
      tors.emplace_back(s.substr(pos, end - pos));
      pos = end;
    }
    if (pos < s.size()) {
      if (s[pos] != '+') throw Error(ErrorKind::ParseError, "expected '+' in group '" + s + "'");
      ++pos;
      if (pos == s.size()) throw Error(ErrorKind::ParseError, "dangling '+' in group '" + s + "'");
    }
  }
  try {
    return AbelianGroup(free, std::move(tors));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace bftorus
