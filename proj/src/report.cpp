#include "congrkit/report.hpp"

#include <algorithm>

namespace congrkit {

ordered_json partition_json(const Partition& p, const std::vector<std::string>& labels) {
    ordered_json blocks = ordered_json::array();
    for (const auto& blk : p.blocks()) {
        ordered_json b = ordered_json::array();
        for (int e : blk) b.push_back(labels[e]);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

ordered_json element_set_json(const std::vector<int>& xs, const std::vector<std::string>& labels) {
    ordered_json out = ordered_json::array();
    for (int x : xs) out.push_back(labels[x]);
    return out;
}

ordered_json cblp_report(const CongruenceLattice& conL) {
    const FiniteAlgebra& a = conL.algebra;
    ordered_json r;
    r["algebra"] = {{"name", a.name}, {"size", a.n}, {"congruence_count", conL.size()}};

    CblpReport rep = algebra_has_cblp(conL);
    StarReport star = satisfies_star(conL);
    Spectra sp = spectra(conL);
    r["cblp"] = rep.algebra_verdict;
    r["star"] = star.satisfied;
    ordered_json spec = ordered_json::array();
    for (int t : sp.spec) spec.push_back(partition_json(conL.elements[t], a.labels));
    r["spec"] = std::move(spec);
    ordered_json max = ordered_json::array();
    for (int t : sp.max) max.push_back(partition_json(conL.elements[t], a.labels));
    r["max"] = std::move(max);
    r["rad"] = partition_json(conL.elements[sp.rad], a.labels);

    ordered_json per = ordered_json::array();
    for (int t = 0; t < conL.size(); ++t) {
        ordered_json row;
        row["partition"] = partition_json(conL.elements[t], a.labels);
        row["cblp"] = rep.per_congruence[t].holds;
        if (rep.per_congruence[t].witness)
            row["witness"] = partition_json(conL.elements[*rep.per_congruence[t].witness],
                                            a.labels);
        per.push_back(std::move(row));
    }
    r["per_congruence"] = std::move(per);

    CblpEquivalents eq = cblp_equivalents(conL);
    r["equivalents"] = {{"cblp", eq.cblp},
                        {"b_normal", eq.b_normal},
                        {"nary_splitting", eq.nary_splitting},
                        {"compact_pairs", eq.compact_pairs},
                        {"nary_compact", eq.nary_compact},
                        {"strongly_zero_dimensional", eq.strongly_zero_dimensional},
                        {"all_agree", eq.all_agree()}};

    if (a.n > 1 && is_arithmetical(conL) && rep.algebra_verdict) {
        Decomposition d = semilocal_decompose(conL);
        ordered_json dec;
        ordered_json kernels = ordered_json::array();
        for (int k : d.kernels) kernels.push_back(partition_json(conL.elements[k], a.labels));
        dec["kernels"] = std::move(kernels);
        ordered_json factors = ordered_json::array();
        for (const auto& q : d.factors)
            factors.push_back({{"size", q.target.n}, {"elements", q.target.labels}});
        dec["factors"] = std::move(factors);
        dec["iso_verified"] = d.iso_verified;
        r["decomposition"] = std::move(dec);
    }
    return r;
}

ordered_json rl_report(const ResiduatedLattice& a) {
    CongruenceLattice conL = build_con_lattice(a.alg);
    ordered_json r = cblp_report(conL);

    BlpReport blp = algebra_has_blp(a);
    std::vector<std::vector<int>> primes = prime_filters_rl(a);
    std::vector<std::vector<int>> maxes = maximal_filters_rl(a);
    ordered_json filters_section;
    filters_section["algebra_blp"] = blp.algebra_verdict;
    ordered_json per = ordered_json::array();
    for (size_t i = 0; i < blp.filters.size(); ++i) {
        const std::vector<int>& f = blp.filters[i];
        ordered_json row;
        row["name"] = filter_name(a, f);
        row["members"] = element_set_json(f, a.alg.labels);
        row["blp"] = blp.per_filter[i].holds;
        if (blp.per_filter[i].witness) {
            RlQuotient q = quotient_by_filter(a, f);
            row["witness"] = q.target.alg.labels[*blp.per_filter[i].witness];
        }
        row["ilp"] = has_ilp(a, f);
        row["prime"] = std::find(primes.begin(), primes.end(), f) != primes.end();
        row["maximal"] = std::find(maxes.begin(), maxes.end(), f) != maxes.end();
        per.push_back(std::move(row));
    }
    filters_section["per_filter"] = std::move(per);
    r["filters"] = std::move(filters_section);
    return r;
}

}  // namespace congrkit
