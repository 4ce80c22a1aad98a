#pragma once

// Congruences as canonical partitions, the generated-congruence closure,
// congruence lattice construction, quotients, and product congruences.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "congrkit/algebra.hpp"

namespace congrkit {

// Canonical form: block[i] is the block id of element i, ids assigned in
// order of first occurrence, so block[0] == 0 and equal partitions compare
// equal as plain vectors.
struct Partition {
    std::vector<int> block;
    int num_blocks = 0;

    static Partition identity(int n);
    static Partition all(int n);
    static Partition from_raw(std::vector<int> raw);  // canonicalizes

    int size() const { return (int)block.size(); }
    bool related(int a, int b) const { return block[a] == block[b]; }
    bool refines(const Partition& coarser) const;  // this <= coarser
    std::vector<std::vector<int>> blocks() const;  // by block id

    bool operator==(const Partition&) const = default;
};

// Order used everywhere a list of congruences is exposed: finer first
// (more blocks), ties by the canonical block sequence. Delta sorts first,
// nabla last.
bool canonical_less(const Partition& a, const Partition& b);

Partition meet(const Partition& a, const Partition& b);
// Join in the equivalence lattice (transitive closure of the union); for
// two congruences of the same algebra this is already their congruence join.
Partition join_eq(const Partition& a, const Partition& b);

// "0|x|y z|1": blocks in canonical order, members space-separated.
std::string partition_to_string(const Partition& p, const std::vector<std::string>& labels);
Partition parse_partition(const std::string& text, const FiniteAlgebra& a);

bool is_congruence(const FiniteAlgebra& a, const Partition& p);

// Least congruence containing the given pairs (union-find + worklist of
// merges, each pushed through every one-coordinate operation translation).
Partition cg(const FiniteAlgebra& a, const std::vector<std::pair<int, int>>& pairs);

// All congruences: principal ones closed under pairwise join, plus Delta.
std::vector<Partition> con(const FiniteAlgebra& a);

// Independent oracle: filters every set partition of the carrier.
// Throws std::invalid_argument when a.n exceeds the cap.
std::vector<Partition> con_bruteforce(const FiniteAlgebra& a, int cap = 8);

struct CongruenceLattice {
    FiniteAlgebra algebra;
    std::vector<Partition> elements;       // canonical order
    std::vector<std::vector<char>> leq;    // refinement
    std::vector<std::vector<int>> join_table, meet_table;
    int bottom_index = 0, top_index = 0;
    std::vector<int> principal;            // n*n -> index of Cg(a,b)

    int size() const { return (int)elements.size(); }
    int index_of(const Partition& p) const;  // -1 if absent
    int principal_index(int a, int b) const { return principal[a * algebra.n + b]; }
};

CongruenceLattice build_con_lattice(const FiniteAlgebra& a);

// (H): the total congruence is a finite join of principal ones. Automatic
// for finite algebras; re-derived explicitly so reports can state it.
bool hypothesis_h(const CongruenceLattice& conL);

struct QuotientMap {
    FiniteAlgebra source;
    Partition theta;
    FiniteAlgebra target;           // carrier = blocks of theta
    std::vector<int> projection;    // element -> block index
};

QuotientMap quotient(const FiniteAlgebra& a, const Partition& theta);

// Image of a congruence phi >= theta in the quotient (blocks of phi on
// theta-blocks); the inverse of the interval isomorphism phi -> phi/theta.
Partition push_congruence(const QuotientMap& q, const Partition& phi);
Partition pull_congruence(const QuotientMap& q, const Partition& psi);

Partition product_congruence(const ProductCodec& codec, const std::vector<Partition>& thetas);
Partition project_congruence(const ProductCodec& codec, const Partition& theta, int factor);

bool is_congruence_distributive(const CongruenceLattice& conL);
bool is_congruence_permutable(const CongruenceLattice& conL);
bool is_arithmetical(const CongruenceLattice& conL);

// Chinese-remainder style solve: find a with (a, targets[i]) in theta_i for
// all i. `compatible` reports the pairwise precondition
// (targets[i], targets[j]) in theta_i v theta_j.
struct CrtResult {
    bool compatible = false;
    std::optional<int> witness;
};
CrtResult crt_solve(const CongruenceLattice& conL, const std::vector<int>& theta_indices,
                    const std::vector<int>& targets);

}  // namespace congrkit
