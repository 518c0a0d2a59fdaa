#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bftorus/ideals.hpp"

namespace bftorus {

// All orders between Z[beta] and the maximal order, ordered by their index
// over Z[beta] and then by canonical (d, B). nodes[0] is Z[beta].
struct OrderLattice {
  NumberField field;
  std::vector<Order> nodes;
  std::vector<Integer> indices;  // [nodes[i] : Z[beta]]
  // Cover relations (lower, upper): nodes[lower] is a maximal proper suborder of nodes[upper].
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  Integer min_index;
  Integer max_index;

  std::size_t top() const { return nodes.size() - 1; }
};

// Throws FactorizationIncomplete when disc(p) cannot be factored.
OrderLattice enumerate_order_lattice(const NumberField& field);

Order maximal_order(const NumberField& field);
// (Z[beta] : R).
FractionalIdeal conductor(const Order& r);
// Conductors of the orders covering Z[beta]: exactly the non-invertible primes of Z[beta].
std::vector<FractionalIdeal> non_invertible_primes(const OrderLattice& lattice);
std::vector<FractionalIdeal> non_invertible_primes(const NumberField& field);

// [R : Z[beta]].
Integer order_index(const Order& r);
// det of the trace form on a basis of R.
Integer order_discriminant(const Order& r);

std::string render_hasse(const OrderLattice& lattice);
std::string order_lattice_to_json(const OrderLattice& lattice);

}  // namespace bftorus
