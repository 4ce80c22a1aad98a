#pragma once

// Finite bounded lattices presented by order tables: profile predicates,
// Boolean center, normality family, filters/ideals, duals, intervals,
// text format and DOT export.

#include <string>
#include <utility>
#include <vector>

#include "congrkit/congruence.hpp"

namespace congrkit {

struct FiniteLattice {
    std::string name;
    int n = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<char>> leq;
    std::vector<std::vector<int>> join, meet;
    int bottom = 0, top = 0;

    bool le(int a, int b) const { return leq[a][b] != 0; }
    int jn(int a, int b) const { return join[a][b]; }
    int mt(int a, int b) const { return meet[a][b]; }
};

// Validates that leq is a partial order with all binary joins/meets and
// bounds; throws std::invalid_argument otherwise.
FiniteLattice lattice_from_leq(const std::string& name, std::vector<std::string> labels,
                               std::vector<std::vector<char>> leq);
FiniteLattice lattice_from_covers(const std::string& name, int n, std::vector<std::string> labels,
                                  const std::vector<std::pair<int, int>>& covers);

// Text format: `lattice NAME`, `size N`, optional `elements ...`, then
// either `leq` + N rows of N 0/1 entries or `covers` + lower/upper pairs.
FiniteLattice parse_lattice(const std::string& text);
std::string serialize_lattice(const FiniteLattice& l);  // covers form
std::string lattice_to_dot(const FiniteLattice& l);

std::vector<std::pair<int, int>> hasse_edges(const FiniteLattice& l);
FiniteLattice dual(const FiniteLattice& l);
// The principal filter [x) as a bounded lattice; element_map gives the
// original index of each interval element.
FiniteLattice interval(const FiniteLattice& l, int x, std::vector<int>* element_map = nullptr);

// View as an algebra with binary join/meet (congruence machinery applies).
FiniteAlgebra lattice_algebra(const FiniteLattice& l);
// The congruence lattice as an abstract lattice; labels are partition strings.
FiniteLattice lattice_of_con(const CongruenceLattice& conL);
// Inverse of lattice_algebra for algebras with binary ops named join/meet
// (or any pair of ops forming lattice operations); throws if not a lattice.
FiniteLattice algebra_lattice(const FiniteAlgebra& a);

struct LatticeProfile {
    bool is_distributive = false;
    bool is_modular = false;
    bool is_boolean = false;
};
LatticeProfile lattice_profile(const FiniteLattice& l);

struct BooleanCenter {
    std::vector<int> elements;     // ascending element index
    std::vector<int> complement;   // parallel to elements (least-index choice)
    bool unique_complements = true;
};
BooleanCenter boolean_center(const FiniteLattice& l);

struct NormalityProfile {
    bool normal = false, b_normal = false, conormal = false, b_conormal = false;
};
// Defined for distributive lattices only; throws std::invalid_argument.
NormalityProfile normality_profile(const FiniteLattice& l);

bool id_local(const FiniteLattice& l);       // x v y = 1 implies x = 1 or y = 1
std::vector<int> rad_id(const FiniteLattice& l);  // {a | a v x = 1 implies x = 1}, as a sorted ideal

// Filters/ideals are sorted element-index sets. Every filter of a finite
// lattice is principal, so enumeration is by generator; a subset-exhaustive
// cross-check lives in the tests.
std::vector<std::vector<int>> all_filters(const FiniteLattice& l);
std::vector<std::vector<int>> all_ideals(const FiniteLattice& l);
bool is_filter(const FiniteLattice& l, const std::vector<int>& f);
bool is_prime_filter(const FiniteLattice& l, const std::vector<int>& f);
bool is_prime_ideal(const FiniteLattice& l, const std::vector<int>& i);
std::vector<std::vector<int>> prime_filters(const FiniteLattice& l);
std::vector<std::vector<int>> maximal_filters(const FiniteLattice& l);
std::vector<std::vector<int>> prime_ideals(const FiniteLattice& l);
std::vector<std::vector<int>> maximal_ideals(const FiniteLattice& l);

// Lattice congruences induced by a filter (x ~ y iff x^a = y^a for some a
// in F) and dually by an ideal; used for the lattice-side lifting checks.
Partition filter_congruence(const FiniteLattice& l, const std::vector<int>& f);
Partition ideal_congruence(const FiniteLattice& l, const std::vector<int>& i);
// Boolean lifting along all filter (resp. ideal) congruences:
// B(L/~) = {e/~ : e in B(L)} for each filter/ideal.
bool lattice_blp_filters(const FiniteLattice& l);
bool lattice_blp_ideals(const FiniteLattice& l);

FiniteLattice quotient_lattice(const FiniteLattice& l, const Partition& p);

}  // namespace congrkit
