#pragma once

// Backtracking isomorphism search for small algebras and lattices.

#include <optional>
#include <vector>

#include "congrkit/algebra.hpp"
#include "congrkit/lattice.hpp"

namespace congrkit {

// Bijection b with b(op_A(x..)) = op_B(b(x)..) for every operation, matched
// by name/arity. Pruned by constant images and degree fingerprints; cap 12.
std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                                 int cap = 12);
bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b, int cap = 12);

bool lattices_isomorphic(const FiniteLattice& a, const FiniteLattice& b, int cap = 12);

}  // namespace congrkit
