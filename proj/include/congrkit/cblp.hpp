#pragma once

// Congruence Boolean lifting: per-congruence and whole-algebra verdicts,
// the prime/maximal spectra with their topology, the property-(*) search,
// the six-way characterization, and semilocal decomposition into local
// factors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congrkit/congruence.hpp"
#include "congrkit/lattice.hpp"

namespace congrkit {

struct Spectra {
    std::vector<int> spec;  // prime congruence indices, ascending
    std::vector<int> max;   // maximal proper congruence indices, ascending
    int rad = 0;            // index of the intersection of max (top if none)
};
Spectra spectra(const CongruenceLattice& conL);

bool is_local(const CongruenceLattice& conL);
bool is_semilocal(const CongruenceLattice& conL);  // finitely many maximals: always true here

// Boolean elements of the interval [theta) as congruence-lattice indices.
std::vector<int> interval_boolean(const CongruenceLattice& conL, int theta);

struct CblpVerdict {
    bool holds = false;
    std::optional<int> witness;  // element of B([theta)) not of the form beta v theta
};
CblpVerdict has_cblp(const CongruenceLattice& conL, int theta);

struct CblpReport {
    bool algebra_verdict = false;
    std::vector<CblpVerdict> per_congruence;  // parallel to conL.elements
    std::vector<int> failing;                 // indices with verdict false
};
CblpReport algebra_has_cblp(const CongruenceLattice& conL);

// The commuting triangle around a quotient: [theta) with v(alpha) = alpha v
// theta, the congruence lattice of A/theta, and the interval isomorphism.
struct LiftingMaps {
    FiniteLattice interval_lattice;       // [theta)
    std::vector<int> interval_elements;   // conL indices of [theta) members
    std::vector<int> v_image_boolean;     // sorted conL indices {beta v theta : beta Boolean}
    CongruenceLattice quotient_con;       // Con(A/theta)
    std::vector<int> u_image_boolean;     // sorted quotient indices of the same image
    bool s_is_isomorphism = false;        // phi -> phi/theta bijective + order-preserving
    bool triangle_commutes = false;       // s(v(alpha)) == u(alpha) for all alpha
};
LiftingMaps lifting_maps(const CongruenceLattice& conL, int theta);

struct SpecTopology {
    std::vector<int> points;                      // conL indices of Spec
    std::vector<std::vector<uint64_t>> opens;     // D(theta) for every theta, as point bitsets
    std::vector<std::vector<uint64_t>> clopens;   // V(alpha) for Boolean alpha
};
SpecTopology spec_topology(const CongruenceLattice& conL);
bool is_strongly_zero_dimensional(const SpecTopology& t);

struct StarDecomposition {
    bool holds = false;
    std::optional<int> alpha;  // below Rad
    std::optional<int> beta;   // Boolean
};
struct StarReport {
    bool satisfied = false;
    std::vector<StarDecomposition> per_congruence;
};
StarReport satisfies_star(const CongruenceLattice& conL);

// Six independently computed forms of the same property; they must agree
// on every congruence-distributive input.
struct CblpEquivalents {
    bool cblp = false;
    bool b_normal = false;
    bool nary_splitting = false;
    bool compact_pairs = false;
    bool nary_compact = false;
    bool strongly_zero_dimensional = false;

    bool all_agree() const {
        return cblp == b_normal && cblp == nary_splitting && cblp == compact_pairs &&
               cblp == nary_compact && cblp == strongly_zero_dimensional;
    }
};
CblpEquivalents cblp_equivalents(const CongruenceLattice& conL, int max_arity = 4);

struct Decomposition {
    bool ok = false;
    std::vector<int> kernels;          // conL indices, Boolean, meet = Delta, pairwise join = nabla
    std::vector<QuotientMap> factors;  // local quotients, parallel to kernels
    bool iso_verified = false;         // canonical map A -> product of factors checked
    int failing = -1;                  // least failing congruence when !ok
    std::string reason;
};
// Requires an arithmetical, non-trivial input; throws std::invalid_argument
// otherwise. Success iff the algebra has CBLP.
Decomposition semilocal_decompose(const CongruenceLattice& conL);

}  // namespace congrkit
