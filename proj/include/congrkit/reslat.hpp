#pragma once

// Finite residuated lattices: axiom validation, filter theory, Boolean and
// idempotent lifting, classification, and the reticulation.

#include <optional>
#include <string>
#include <vector>

#include "congrkit/cblp.hpp"
#include "congrkit/congruence.hpp"
#include "congrkit/lattice.hpp"

namespace congrkit {

// Reserved operation names: join(2), meet(2), prod(2), imp(2), zero(0), one(0).
struct ResiduatedLattice {
    FiniteAlgebra alg;
    int zero = 0, one = 0;
    std::vector<std::vector<char>> leq;  // from meet

    int n() const { return alg.n; }
    bool le(int a, int b) const { return leq[a][b] != 0; }
    int jn(int a, int b) const;
    int mt(int a, int b) const;
    int pd(int a, int b) const;   // monoid product
    int im(int a, int b) const;   // residuum
    int equiv(int a, int b) const { return mt(im(a, b), im(b, a)); }
    int neg(int a) const { return im(a, zero); }

    FiniteLattice carrier_lattice() const;
};

// Exhaustively checks the bounded-lattice, commutative-monoid and
// residuation axioms; throws std::invalid_argument naming the failing
// axiom and triple.
ResiduatedLattice validate_residuated(const FiniteAlgebra& a);

// Filters: nonempty, product-closed, upward-closed subsets, all principal
// here. Represented as sorted element sets, listed smallest-first ({1}
// first, the whole carrier last).
std::vector<int> principal_filter(const ResiduatedLattice& a, int x);
std::vector<int> filter_generated(const ResiduatedLattice& a, const std::vector<int>& xs);
std::vector<std::vector<int>> filters(const ResiduatedLattice& a);
bool is_filter(const ResiduatedLattice& a, const std::vector<int>& f);
bool is_prime_filter_rl(const ResiduatedLattice& a, const std::vector<int>& f);
std::vector<std::vector<int>> prime_filters_rl(const ResiduatedLattice& a);
std::vector<std::vector<int>> maximal_filters_rl(const ResiduatedLattice& a);

// "[c)" style rendering using the principal generator.
std::string filter_name(const ResiduatedLattice& a, const std::vector<int>& f);

FiniteLattice filt_lattice(const ResiduatedLattice& a);
FiniteLattice pfilt_lattice(const ResiduatedLattice& a);

// x ~F y iff x<->y in F.
Partition cong_of_filter(const ResiduatedLattice& a, const std::vector<int>& f);
std::vector<int> filter_of_cong(const ResiduatedLattice& a, const Partition& theta);

struct RlQuotient {
    ResiduatedLattice target;
    Partition theta;
    std::vector<int> projection;
};
RlQuotient quotient_by_filter(const ResiduatedLattice& a, const std::vector<int>& f);

std::vector<int> boolean_center_rl(const ResiduatedLattice& a);  // complemented elements
std::vector<int> idempotents(const ResiduatedLattice& a);        // a*a = a
std::vector<int> regular_elements(const ResiduatedLattice& a);   // ~~a = a

struct BlpVerdict {
    bool holds = false;
    std::optional<int> witness;  // element of B(A/F) with no Boolean preimage
};
BlpVerdict has_blp(const ResiduatedLattice& a, const std::vector<int>& f);
bool has_ilp(const ResiduatedLattice& a, const std::vector<int>& f);  // I(A/F) = I(A)/F

struct BlpReport {
    bool algebra_verdict = false;
    std::vector<std::vector<int>> filters;
    std::vector<BlpVerdict> per_filter;
    std::vector<int> failing;  // indices into filters
};
BlpReport algebra_has_blp(const ResiduatedLattice& a);

struct RlClassification {
    bool is_godel = false;    // product coincides with meet
    bool is_bl = false;       // prelinearity + divisibility
    bool is_mv = false;       // BL + involutive negation
    bool is_gelfand = false;  // each prime filter below a unique maximal one
};
RlClassification classify(const ResiduatedLattice& a);

FiniteLattice reticulation(const ResiduatedLattice& a);  // dual of PFilt(A)

struct CrosscheckRow {
    std::vector<int> filter;
    bool blp = false;
    bool cblp = false;
};
struct Crosscheck {
    bool filt_con_iso = false;  // F -> ~F is a bounded lattice isomorphism
    bool agree = false;         // blp == cblp on every row
    std::vector<CrosscheckRow> rows;
};
Crosscheck blp_cblp_crosscheck(const ResiduatedLattice& a);

// Eight equivalent forms evaluated independently: CBLP; BLP; Con(A),
// Filt(A), PFilt(A) B-normal; reticulation B-conormal; reticulation lifts
// Booleans along filter congruences; PFilt lifts along ideal congruences.
struct EightWay {
    bool cblp = false, blp = false;
    bool con_b_normal = false, filt_b_normal = false, pfilt_b_normal = false;
    bool retic_b_conormal = false, retic_filter_blp = false, pfilt_ideal_blp = false;

    bool all_agree() const {
        return cblp == blp && cblp == con_b_normal && cblp == filt_b_normal &&
               cblp == pfilt_b_normal && cblp == retic_b_conormal && cblp == retic_filter_blp &&
               cblp == pfilt_ideal_blp;
    }
};
EightWay eight_way(const ResiduatedLattice& a);

}  // namespace congrkit
