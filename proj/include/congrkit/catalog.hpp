#pragma once

// Named example algebras with machine-checkable expected facts, ordinal
// sums, and the deterministic random/exhaustive corpora used by the tests.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congrkit/algebra.hpp"
#include "congrkit/congruence.hpp"
#include "congrkit/lattice.hpp"

namespace congrkit {

struct FixtureFacts {
    std::optional<int> congruence_count;
    std::optional<int> boolean_center_size;
    std::optional<bool> cblp;
    std::optional<bool> star;
    std::vector<std::string> cblp_failures;  // partition strings
    std::vector<std::string> blp_failures;   // filter names like "[c)"
    std::optional<int> max_count;
    std::optional<std::string> rad;          // partition string
    std::optional<bool> godel, bl, mv, gelfand;
    std::optional<bool> reticulation_iso_carrier;
    std::string note;
};

struct Fixture {
    std::string key;
    FiniteAlgebra algebra;
    bool residuated = false;
    FixtureFacts expected;
};

// Fixed keys: diamond, pentagon, lattice_e, lattice_z, l2, residuated_a;
// parametric: chain_N (N >= 2), boolean_K (K >= 1).
std::vector<std::string> catalog_keys();
Fixture fixture(const std::string& key);  // throws std::invalid_argument on unknown keys

// Stacks m on top of l, identifying top(l) with bottom(m); |l|+|m|-1
// elements. Labels from l are kept; labels from m get primes on collision.
FiniteLattice ordinal_sum(const FiniteLattice& l, const FiniteLattice& m);
// The congruence phi + psi on l + m (blocks of the shared element merged).
Partition ordinal_sum_congruence(const FiniteLattice& l, const FiniteLattice& m,
                                 const Partition& phi, const Partition& psi);

// Deterministic seeded generation. signature is "lattice" (size <= 6) or
// "residuated" (size <= 5); throws std::invalid_argument beyond the caps.
std::vector<FiniteAlgebra> random_algebras(const std::string& signature, int size, int count,
                                           uint64_t seed);

// Every lattice order on {0..n-1} compatible with the natural order of the
// indices (hits every isomorphism class); exact for n <= 7.
std::vector<FiniteLattice> all_lattices(int n);
// Every residuated structure over those lattices; exact for n <= 5.
std::vector<FiniteAlgebra> all_residuated(int n);

}  // namespace congrkit
