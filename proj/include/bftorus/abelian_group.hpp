#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bftorus/exactmat.hpp"

namespace bftorus {

// Finitely generated abelian group Z^r + Z_{a1} + ... + Z_{am} with
// a1 | a2 | ... | am and every ai >= 2. Equal groups have equal fields.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  // Throws InvalidArgument unless torsion is a divisibility chain of entries >= 2.
  AbelianGroup(std::size_t free_rank, std::vector<Integer> torsion);

  // Smith diagonal entries: zeros become free summands, ones are dropped.
  static AbelianGroup from_invariant_factors(const std::vector<Integer>& diagonal);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  // Throws InvalidArgument for infinite groups.
  Integer order() const;

  AbelianGroup with_extra_free_rank(std::size_t k) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

// Z^rows / A Z^cols.
AbelianGroup cokernel(const IntMatrix& a);

// "Z^r+Za1+Za2+..." in divisibility order; the trivial group prints "0".
std::string to_string(const AbelianGroup& g);
// Inverse of to_string. Throws ParseError.
AbelianGroup parse_group(std::string_view text);

}  // namespace bftorus
