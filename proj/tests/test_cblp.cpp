#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "congrkit/catalog.hpp"
#include "congrkit/cblp.hpp"
#include "congrkit/congruence.hpp"
#include "congrkit/iso.hpp"
#include "congrkit/lattice.hpp"

using namespace congrkit;

namespace {

CongruenceLattice conL_of(const std::string& key) {
    return build_con_lattice(fixture(key).algebra);
}

int idx(const CongruenceLattice& c, const std::string& text) {
    int i = c.index_of(parse_partition(text, c.algebra));
    REQUIRE(i >= 0);
    return i;
}

std::string pstr(const CongruenceLattice& c, int i) {
    return partition_to_string(c.elements[i], c.algebra.labels);
}

}  // namespace

TEST_CASE("spectra of the pentagon") {
    CongruenceLattice c = conL_of("pentagon");
    Spectra s = spectra(c);
    int alpha = idx(c, "0 x|y z 1"), beta = idx(c, "0 y z|x 1"), gamma = idx(c, "0|x|y z|1");
    CHECK(s.max == std::vector<int>{alpha, beta});
    CHECK(s.rad == gamma);  // the meet of the two maximals
    for (int m : s.max) CHECK(std::count(s.spec.begin(), s.spec.end(), m) == 1);
    CHECK_FALSE(is_local(c));
    CHECK(is_semilocal(c));
}

TEST_CASE("spectra of the stacked lattice") {
    CongruenceLattice c = conL_of("lattice_z");
    REQUIRE(c.size() == 10);
    Spectra s = spectra(c);
    CHECK(s.max.size() == 3);
    // the maximals are exactly the two-block congruences
    for (int m : s.max) CHECK(c.elements[m].num_blocks == 2);
    CHECK(pstr(c, s.rad) == "0|x|y z|u|1");

    // the radical really is the meet of the maximals
    int acc = c.top_index;
    for (int m : s.max) acc = c.meet_table[acc][m];
    CHECK(acc == s.rad);

    // maximal implies prime
    for (int m : s.max) CHECK(std::count(s.spec.begin(), s.spec.end(), m) == 1);
}

TEST_CASE("one-maximal algebras are local") {
    for (const char* key : {"diamond", "lattice_e", "l2"}) {
        CongruenceLattice c = conL_of(key);
        CAPTURE(key);
        CHECK(spectra(c).max.size() == 1);
        CHECK(is_local(c));
    }
    CHECK_FALSE(is_local(conL_of("boolean_2")));
}

TEST_CASE("interval boolean elements") {
    CongruenceLattice c = conL_of("pentagon");
    // globally only the bounds are complemented
    CHECK(interval_boolean(c, c.bottom_index) ==
          std::vector<int>{c.bottom_index, c.top_index});
    // but [gamma) is a four-element boolean interval
    int gamma = idx(c, "0|x|y z|1");
    CHECK(interval_boolean(c, gamma).size() == 4);
    CHECK(interval_boolean(c, c.top_index) == std::vector<int>{c.top_index});
}

TEST_CASE("boolean congruence lifting on the pentagon") {
    CongruenceLattice c = conL_of("pentagon");
    CblpReport r = algebra_has_cblp(c);
    CHECK_FALSE(r.algebra_verdict);
    int gamma = idx(c, "0|x|y z|1");
    CHECK(r.failing == std::vector<int>{gamma});
    REQUIRE(r.per_congruence.size() == 5);
    CHECK_FALSE(r.per_congruence[gamma].holds);
    REQUIRE(r.per_congruence[gamma].witness.has_value());
    CHECK(pstr(c, *r.per_congruence[gamma].witness) == "0 x|y z 1");
    for (int i = 0; i < c.size(); ++i)
        if (i != gamma) {
            CHECK(r.per_congruence[i].holds);
            CHECK_FALSE(r.per_congruence[i].witness.has_value());
        }
}

TEST_CASE("boolean congruence lifting on the stacked lattice") {
    CongruenceLattice c = conL_of("lattice_z");
    CblpReport r = algebra_has_cblp(c);
    CHECK_FALSE(r.algebra_verdict);
    int z3 = idx(c, "0|x|y z|u|1"), z4 = idx(c, "0|x|y z|u 1");
    CHECK(r.failing == std::vector<int>{z3, z4});
    CHECK(pstr(c, *r.per_congruence[z3].witness) == "0 x|y z u|1");
    CHECK(pstr(c, *r.per_congruence[z4].witness) == "0 x|y z u 1");

    // its center has four elements: bounds plus the two factor collapses
    std::vector<int> b = interval_boolean(c, c.bottom_index);
    REQUIRE(b.size() == 4);
    CHECK(pstr(c, b[0]) == "0|x|y|z|u|1");
    CHECK(pstr(c, b[1]) == "0|x|y|z|u 1");
    CHECK(pstr(c, b[2]) == "0 x y z u|1");
    CHECK(pstr(c, b[3]) == "0 x y z u 1");
}

TEST_CASE("lifting holds everywhere on the well-behaved fixtures") {
    for (const char* key : {"diamond", "lattice_e", "l2", "chain_3", "chain_4", "boolean_2",
                            "boolean_3"}) {
        CAPTURE(key);
        CblpReport r = algebra_has_cblp(conL_of(key));
        CHECK(r.algebra_verdict);
        CHECK(r.failing.empty());
    }
}

TEST_CASE("the lifting triangle commutes at every congruence") {
    for (const char* key : {"pentagon", "lattice_z", "lattice_e", "boolean_2"}) {
        CongruenceLattice c = conL_of(key);
        for (int t = 0; t < c.size(); ++t) {
            CAPTURE(key);
            CAPTURE(t);
            LiftingMaps m = lifting_maps(c, t);
            CHECK(m.s_is_isomorphism);
            CHECK(m.triangle_commutes);
            CHECK(m.interval_lattice.n == (int)m.interval_elements.size());
            CHECK(m.quotient_con.size() == (int)m.interval_elements.size());
            CHECK(m.u_image_boolean.size() == m.v_image_boolean.size());
        }
    }
}

TEST_CASE("lifting maps detail at the stacked radical") {
    CongruenceLattice c = conL_of("lattice_z");
    int z3 = idx(c, "0|x|y z|u|1");
    LiftingMaps m = lifting_maps(c, z3);
    CHECK(m.interval_elements.size() == 8);  // everything joining y with z
    // {beta v rad : beta in the center}: rad itself, the two one-sided
    // collapses, and the top
    std::vector<std::string> got;
    for (int i : m.v_image_boolean) got.push_back(pstr(c, i));
    CHECK(got == std::vector<std::string>{"0|x|y z|u|1", "0|x|y z|u 1", "0 x y z u|1",
                                          "0 x y z u 1"});
}

TEST_CASE("spec topology shape") {
    CongruenceLattice c = conL_of("lattice_z");
    Spectra s = spectra(c);
    SpecTopology t = spec_topology(c);
    CHECK(t.points == s.spec);
    CHECK(t.opens.size() == (size_t)c.size());
    CHECK(t.clopens.size() == interval_boolean(c, c.bottom_index).size());
    CHECK_FALSE(is_strongly_zero_dimensional(t));
    CHECK(is_strongly_zero_dimensional(spec_topology(conL_of("boolean_2"))));
}

TEST_CASE("the radical decomposition property on the pentagon") {
    CongruenceLattice c = conL_of("pentagon");
    StarReport r = satisfies_star(c);
    CHECK_FALSE(r.satisfied);
    int alpha = idx(c, "0 x|y z 1"), beta = idx(c, "0 y z|x 1"), gamma = idx(c, "0|x|y z|1");
    // the maximals themselves cannot be split; everything else can
    CHECK_FALSE(r.per_congruence[alpha].holds);
    CHECK_FALSE(r.per_congruence[beta].holds);
    CHECK(r.per_congruence[gamma].holds);
    CHECK(r.per_congruence[c.bottom_index].holds);
    CHECK(r.per_congruence[c.top_index].holds);
}

TEST_CASE("radical decompositions verify where they exist") {
    for (const char* key : {"diamond", "lattice_e", "chain_4", "boolean_2", "residuated_a"}) {
        CongruenceLattice c = conL_of(key);
        Spectra s = spectra(c);
        StarReport r = satisfies_star(c);
        std::vector<int> center = interval_boolean(c, c.bottom_index);
        for (int t = 0; t < c.size(); ++t) {
            const StarDecomposition& d = r.per_congruence[t];
            if (!d.holds) continue;
            REQUIRE(d.alpha.has_value());
            REQUIRE(d.beta.has_value());
            CHECK(c.leq[*d.alpha][s.rad]);
            CHECK(std::count(center.begin(), center.end(), *d.beta) == 1);
            CHECK(c.join_table[*d.alpha][*d.beta] == t);
        }
    }
}

TEST_CASE("the whole-algebra verdicts of star and lifting coincide") {
    // two routes to the same property on every finite instance we have
    std::vector<std::string> keys = {"diamond", "pentagon", "lattice_e", "lattice_z", "l2",
                                     "residuated_a", "chain_3", "chain_4", "boolean_2",
                                     "boolean_3"};
    for (const std::string& key : keys) {
        CongruenceLattice c = conL_of(key);
        CAPTURE(key);
        CHECK(satisfies_star(c).satisfied == algebra_has_cblp(c).algebra_verdict);
    }
}

TEST_CASE("six-way characterization agrees on the fixtures") {
    for (const char* key : {"diamond", "pentagon", "lattice_e", "lattice_z", "l2",
                            "residuated_a", "chain_3", "chain_4", "boolean_2", "boolean_3"}) {
        CongruenceLattice c = conL_of(key);
        CblpEquivalents e = cblp_equivalents(c);
        CAPTURE(key);
        CHECK(e.all_agree());
        CHECK(e.cblp == algebra_has_cblp(c).algebra_verdict);
    }
}

TEST_CASE("six-way characterization across random lattices") {
    for (int size = 3; size <= 6; ++size) {
        for (const FiniteAlgebra& a : random_algebras("lattice", size, 50, 0xFEED + size)) {
            CongruenceLattice c = build_con_lattice(a);
            CblpEquivalents e = cblp_equivalents(c);
            CAPTURE(a.name);
            CHECK(e.all_agree());
            CHECK(e.cblp == algebra_has_cblp(c).algebra_verdict);
            CHECK(e.cblp == satisfies_star(c).satisfied);
        }
    }
}

TEST_CASE("six-way characterization across all small residuated lattices") {
    for (int size = 2; size <= 5; ++size) {
        for (const FiniteAlgebra& a : all_residuated(size)) {
            CongruenceLattice c = build_con_lattice(a);
            CblpEquivalents e = cblp_equivalents(c);
            CAPTURE(a.name);
            CHECK(e.all_agree());
            CHECK(e.cblp == algebra_has_cblp(c).algebra_verdict);
            CHECK(e.cblp == satisfies_star(c).satisfied);
        }
    }
}

TEST_CASE("the characterization requires a distributive congruence lattice") {
    FiniteAlgebra bare;  // no operations: congruences are all partitions
    bare.name = "bare3";
    bare.n = 3;
    bare.labels = {"p", "q", "r"};
    CongruenceLattice c = build_con_lattice(bare);
    CHECK(c.size() == 5);
    CHECK_FALSE(is_congruence_distributive(c));
    CHECK_THROWS_AS(cblp_equivalents(c), std::invalid_argument);
}

TEST_CASE("semilocal decomposition splits boolean powers") {
    for (int k : {2, 3}) {
        CongruenceLattice c = conL_of("boolean_" + std::to_string(k));
        Decomposition d = semilocal_decompose(c);
        CAPTURE(k);
        CHECK(d.ok);
        CHECK(d.iso_verified);
        REQUIRE((int)d.kernels.size() == k);
        REQUIRE(d.factors.size() == d.kernels.size());
        for (const QuotientMap& f : d.factors) {
            CHECK(f.target.n == 2);
            CHECK(is_local(build_con_lattice(f.target)));
        }
        // kernels: boolean, meet to bottom, pairwise join to top
        std::vector<int> center = interval_boolean(c, c.bottom_index);
        int acc = c.top_index;
        for (int ker : d.kernels) {
            CHECK(std::count(center.begin(), center.end(), ker) == 1);
            acc = c.meet_table[acc][ker];
        }
        CHECK(acc == c.bottom_index);
        for (size_t i = 0; i < d.kernels.size(); ++i)
            for (size_t j = i + 1; j < d.kernels.size(); ++j)
                CHECK(c.join_table[d.kernels[i]][d.kernels[j]] == c.top_index);
    }
}

TEST_CASE("local algebras decompose as themselves") {
    for (const char* key : {"diamond", "lattice_e", "l2"}) {
        CongruenceLattice c = conL_of(key);
        Decomposition d = semilocal_decompose(c);
        CAPTURE(key);
        CHECK(d.ok);
        CHECK(d.iso_verified);
        REQUIRE(d.factors.size() == 1);
        CHECK(d.factors[0].target.n == c.algebra.n);
    }
}

TEST_CASE("decomposition fails gracefully without lifting") {
    CongruenceLattice c = conL_of("pentagon");
    Decomposition d = semilocal_decompose(c);
    CHECK_FALSE(d.ok);
    CHECK_FALSE(d.iso_verified);
    CHECK(d.kernels.empty());
    CHECK(d.failing == idx(c, "0|x|y z|1"));
    CHECK_FALSE(d.reason.empty());
}

TEST_CASE("decomposition preconditions") {
    // congruences must permute for the factoring argument
    CHECK_THROWS_AS(semilocal_decompose(conL_of("lattice_z")), std::invalid_argument);
    CHECK_THROWS_AS(semilocal_decompose(conL_of("chain_3")), std::invalid_argument);
    CHECK_THROWS_AS(semilocal_decompose(conL_of("chain_4")), std::invalid_argument);

    FiniteAlgebra one;
    one.name = "one";
    one.n = 1;
    one.labels = {"*"};
    CHECK_THROWS_AS(semilocal_decompose(build_con_lattice(one)), std::invalid_argument);
}

TEST_CASE("decomposition across the random corpus where it applies") {
    int decomposed = 0;
    for (int size = 3; size <= 6; ++size) {
        for (const FiniteAlgebra& a : random_algebras("lattice", size, 25, 0xDECAF + size)) {
            CongruenceLattice c = build_con_lattice(a);
            if (!is_arithmetical(c)) continue;
            bool lifts = algebra_has_cblp(c).algebra_verdict;
            Decomposition d = semilocal_decompose(c);
            CAPTURE(a.name);
            CHECK(d.ok == lifts);
            if (d.ok) {
                ++decomposed;
                CHECK(d.iso_verified);
                CHECK(d.kernels.size() == spectra(c).max.size());
                for (const QuotientMap& f : d.factors)
                    CHECK(is_local(build_con_lattice(f.target)));
            }
        }
    }
    CHECK(decomposed > 0);  // the corpus must actually exercise the success path
}
