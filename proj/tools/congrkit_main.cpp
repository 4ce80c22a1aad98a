// congrkit command-line front end. Every command reads the text formats
// documented in the README, prints either a text or JSON report, and uses
// the exit codes: 0 ok, 1 failed --assert, 2 bad input or precondition,
// 3 oracle disagreement under --brute-force.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "congrkit/algebra.hpp"
#include "congrkit/catalog.hpp"
#include "congrkit/cblp.hpp"
#include "congrkit/congruence.hpp"
#include "congrkit/iso.hpp"
#include "congrkit/lattice.hpp"
#include "congrkit/report.hpp"
#include "congrkit/reslat.hpp"

using namespace congrkit;

namespace {

struct ExitWith {
    int code;
};

struct Ctx {
    std::string format = "text";
    bool assert_flag = false;
    bool brute = false;
    uint64_t seed = 0;  // accepted for reproducibility of future sampling commands
    int max_size = 12;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string yn(bool b) { return b ? "yes" : "no"; }

FiniteAlgebra load_algebra(const Ctx& ctx, const std::string& path) {
    FiniteAlgebra a = parse_algebra(slurp(path));
    if (a.n > ctx.max_size)
        throw std::invalid_argument("algebra " + a.name + " exceeds the size limit (" +
                                    std::to_string(a.n) + " > " + std::to_string(ctx.max_size) +
                                    "); raise --max-size or CONGRKIT_MAX_SIZE");
    return a;
}

FiniteLattice load_lattice(const Ctx& ctx, const std::string& path) {
    FiniteLattice l = parse_lattice(slurp(path));
    if (l.n > ctx.max_size)
        throw std::invalid_argument("lattice " + l.name + " exceeds the size limit (" +
                                    std::to_string(l.n) + " > " + std::to_string(ctx.max_size) +
                                    "); raise --max-size or CONGRKIT_MAX_SIZE");
    return l;
}

bool oracle_agrees(const FiniteAlgebra& a, const CongruenceLattice& conL) {
    std::vector<Partition> bf = con_bruteforce(a);
    if ((int)bf.size() != conL.size()) return false;
    for (int i = 0; i < conL.size(); ++i)
        if (!(bf[i] == conL.elements[i])) return false;
    return true;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::string pstr(const CongruenceLattice& conL, int t) {
    return partition_to_string(conL.elements[t], conL.algebra.labels);
}

// partition string (contains '|' or no ','), or a ';'-separated pair list
// "x,y;u,v" whose generated congruence is taken
Partition parse_congruence_spec(const FiniteAlgebra& a, const std::string& spec) {
    if (spec.find(',') == std::string::npos || spec.find('|') != std::string::npos) {
        Partition p = parse_partition(spec, a);
        if (!is_congruence(a, p))
            throw std::invalid_argument("partition is not a congruence: " + spec);
        return p;
    }
    std::vector<std::pair<int, int>> pairs;
    std::istringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) {
        size_t comma = item.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("expected 'x,y' in pair list: " + item);
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string x = trim(item.substr(0, comma)), y = trim(item.substr(comma + 1));
        auto xi = a.element_index(x), yi = a.element_index(y);
        if (!xi || !yi) throw std::invalid_argument("unknown element in pair list: " + item);
        pairs.push_back({*xi, *yi});
    }
    return cg(a, pairs);
}

// ---- alg subcommands ----

void run_alg_validate(const Ctx& ctx, const std::string& path) {
    FiniteAlgebra a = load_algebra(ctx, path);
    std::vector<std::string> problems = validate_algebra(a);
    if (ctx.format == "json") {
        ordered_json j;
        j["name"] = a.name;
        j["size"] = a.n;
        j["valid"] = problems.empty();
        j["problems"] = problems;
        print_json(j);
    } else {
        if (problems.empty()) {
            std::cout << "valid: " << a.name << " (size " << a.n << ", " << a.ops.size()
                      << " ops)\n";
        } else {
            for (const auto& p : problems) std::cout << "problem: " << p << "\n";
        }
    }
    if (!problems.empty()) throw ExitWith{2};
}

void run_alg_con(const Ctx& ctx, const std::string& path) {
    FiniteAlgebra a = load_algebra(ctx, path);
    CongruenceLattice conL = build_con_lattice(a);
    std::optional<bool> oracle;
    if (ctx.brute) oracle = oracle_agrees(a, conL);
    if (ctx.format == "json") {
        ordered_json j;
        j["algebra"] = {{"name", a.name}, {"size", a.n}};
        j["congruence_count"] = conL.size();
        ordered_json cs = ordered_json::array();
        for (int t = 0; t < conL.size(); ++t)
            cs.push_back(partition_json(conL.elements[t], a.labels));
        j["congruences"] = std::move(cs);
        if (oracle) j["oracle_agreed"] = *oracle;
        print_json(j);
    } else {
        for (int t = 0; t < conL.size(); ++t) std::cout << pstr(conL, t) << "\n";
        if (oracle) std::cout << "oracle_agreed: " << yn(*oracle) << "\n";
    }
    if (oracle && !*oracle) throw ExitWith{3};
}

void run_alg_spectra(const Ctx& ctx, const std::string& path) {
    FiniteAlgebra a = load_algebra(ctx, path);
    CongruenceLattice conL = build_con_lattice(a);
    std::optional<bool> oracle;
    if (ctx.brute) oracle = oracle_agrees(a, conL);
    Spectra s = spectra(conL);
    if (ctx.format == "json") {
        ordered_json j;
        j["algebra"] = {{"name", a.name}, {"size", a.n}};
        ordered_json spec = ordered_json::array(), max = ordered_json::array();
        for (int t : s.spec) spec.push_back(partition_json(conL.elements[t], a.labels));
        for (int t : s.max) max.push_back(partition_json(conL.elements[t], a.labels));
        j["spec"] = std::move(spec);
        j["max"] = std::move(max);
        j["rad"] = partition_json(conL.elements[s.rad], a.labels);
        j["local"] = (s.max.size() == 1);
        if (oracle) j["oracle_agreed"] = *oracle;
        print_json(j);
    } else {
        for (int t : s.spec) std::cout << "spec: " << pstr(conL, t) << "\n";
        for (int t : s.max) std::cout << "max: " << pstr(conL, t) << "\n";
        std::cout << "rad: " << pstr(conL, s.rad) << "\n";
        std::cout << "local: " << yn(s.max.size() == 1) << "\n";
        if (oracle) std::cout << "oracle_agreed: " << yn(*oracle) << "\n";
    }
    if (oracle && !*oracle) throw ExitWith{3};
}

void run_alg_cblp(const Ctx& ctx, const std::string& path) {
    FiniteAlgebra a = load_algebra(ctx, path);
    CongruenceLattice conL = build_con_lattice(a);
    std::optional<bool> oracle;
    if (ctx.brute) oracle = oracle_agrees(a, conL);
    CblpReport rep = algebra_has_cblp(conL);
    if (ctx.format == "json") {
        ordered_json j = cblp_report(conL);
        if (oracle) j["oracle_agreed"] = *oracle;
        print_json(j);
    } else {
        std::cout << "algebra: " << a.name << " (size " << a.n << ")\n";
        std::cout << "congruences: " << conL.size() << "\n";
        std::cout << "cblp: " << yn(rep.algebra_verdict) << "\n";
        for (int t : rep.failing) {
            std::cout << "failing: " << pstr(conL, t);
            if (rep.per_congruence[t].witness)
                std::cout << " (unliftable: " << pstr(conL, *rep.per_congruence[t].witness)
                          << ")";
            std::cout << "\n";
        }
        CblpEquivalents eq = cblp_equivalents(conL);
        std::cout << "equivalents: cblp=" << yn(eq.cblp) << " b_normal=" << yn(eq.b_normal)
                  << " nary_splitting=" << yn(eq.nary_splitting)
                  << " compact_pairs=" << yn(eq.compact_pairs)
                  << " nary_compact=" << yn(eq.nary_compact)
                  << " strongly_zero_dimensional=" << yn(eq.strongly_zero_dimensional)
                  << " agree=" << yn(eq.all_agree()) << "\n";
        if (oracle) std::cout << "oracle_agreed: " << yn(*oracle) << "\n";
    }
    if (oracle && !*oracle) throw ExitWith{3};
    if (ctx.assert_flag && !rep.algebra_verdict) throw ExitWith{1};
}

void run_alg_star(const Ctx& ctx, const std::string& path) {
    FiniteAlgebra a = load_algebra(ctx, path);
    CongruenceLattice conL = build_con_lattice(a);
    std::optional<bool> oracle;
    if (ctx.brute) oracle = oracle_agrees(a, conL);
    StarReport r = satisfies_star(conL);
    if (ctx.format == "json") {
        ordered_json j;
        j["algebra"] = {{"name", a.name}, {"size", a.n}};
        j["star"] = r.satisfied;
        ordered_json per = ordered_json::array();
        for (int t = 0; t < conL.size(); ++t) {
            ordered_json row;
            row["partition"] = partition_json(conL.elements[t], a.labels);
            row["holds"] = r.per_congruence[t].holds;
            if (r.per_congruence[t].holds) {
                row["alpha"] = partition_json(conL.elements[*r.per_congruence[t].alpha],
                                              a.labels);
                row["beta"] = partition_json(conL.elements[*r.per_congruence[t].beta],
                                             a.labels);
            }
            per.push_back(std::move(row));
        }
        j["per_congruence"] = std::move(per);
        if (oracle) j["oracle_agreed"] = *oracle;
        print_json(j);
    } else {
        std::cout << "star: " << yn(r.satisfied) << "\n";
        for (int t = 0; t < conL.size(); ++t) {
            std::cout << "  " << pstr(conL, t);
            if (r.per_congruence[t].holds)
                std::cout << " = [" << pstr(conL, *r.per_congruence[t].alpha) << "] v ["
                          << pstr(conL, *r.per_congruence[t].beta) << "]";
            else
                std::cout << " unreachable";
            std::cout << "\n";
        }
        if (oracle) std::cout << "oracle_agreed: " << yn(*oracle) << "\n";
    }
    if (oracle && !*oracle) throw ExitWith{3};
    if (ctx.assert_flag && !r.satisfied) throw ExitWith{1};
}

void run_alg_quotient(const Ctx& ctx, const std::string& path, const std::string& spec) {
    FiniteAlgebra a = load_algebra(ctx, path);
    Partition theta = parse_congruence_spec(a, spec);
    QuotientMap q = quotient(a, theta);
    if (ctx.format == "json") {
        ordered_json j;
        j["source"] = {{"name", a.name}, {"size", a.n}};
        j["congruence"] = partition_json(theta, a.labels);
        j["quotient"] = {{"name", q.target.name}, {"size", q.target.n},
                         {"elements", q.target.labels}};
        j["text"] = serialize_algebra(q.target);
        print_json(j);
    } else {
        std::cout << serialize_algebra(q.target);
    }
}

void run_alg_product(const Ctx& ctx, const std::vector<std::string>& paths) {
    std::vector<FiniteAlgebra> factors;
    for (const auto& p : paths) factors.push_back(load_algebra(ctx, p));
    FiniteAlgebra prod = product(factors);
    if (prod.n > ctx.max_size)
        throw std::invalid_argument("product exceeds the size limit (" + std::to_string(prod.n) +
                                    " > " + std::to_string(ctx.max_size) + ")");
    if (ctx.format == "json") {
        ordered_json j;
        j["name"] = prod.name;
        j["size"] = prod.n;
        j["elements"] = prod.labels;
        j["text"] = serialize_algebra(prod);
        print_json(j);
    } else {
        std::cout << serialize_algebra(prod);
    }
}

void run_alg_decompose(const Ctx& ctx, const std::string& path) {
    FiniteAlgebra a = load_algebra(ctx, path);
    CongruenceLattice conL = build_con_lattice(a);
    std::optional<bool> oracle;
    if (ctx.brute) oracle = oracle_agrees(a, conL);
    Decomposition d = semilocal_decompose(conL);
    if (ctx.format == "json") {
        ordered_json j;
        j["algebra"] = {{"name", a.name}, {"size", a.n}};
        j["ok"] = d.ok;
        if (d.ok) {
            ordered_json kernels = ordered_json::array();
            for (int k : d.kernels) kernels.push_back(partition_json(conL.elements[k], a.labels));
            j["kernels"] = std::move(kernels);
            ordered_json factors = ordered_json::array();
            for (const auto& q : d.factors)
                factors.push_back({{"size", q.target.n}, {"elements", q.target.labels}});
            j["factors"] = std::move(factors);
            j["iso_verified"] = d.iso_verified;
        } else {
            j["failing"] = partition_json(conL.elements[d.failing], a.labels);
            j["reason"] = d.reason;
        }
        if (oracle) j["oracle_agreed"] = *oracle;
        print_json(j);
    } else {
        std::cout << "decompose: " << (d.ok ? "ok" : "failed") << "\n";
        if (d.ok) {
            for (size_t i = 0; i < d.kernels.size(); ++i)
                std::cout << "  kernel " << pstr(conL, d.kernels[i]) << " -> factor of size "
                          << d.factors[i].target.n << "\n";
            std::cout << "iso_verified: " << yn(d.iso_verified) << "\n";
        } else {
            std::cout << "  failing: " << pstr(conL, d.failing) << " (" << d.reason << ")\n";
        }
        if (oracle) std::cout << "oracle_agreed: " << yn(*oracle) << "\n";
    }
    if (oracle && !*oracle) throw ExitWith{3};
    if (ctx.assert_flag && !d.ok) throw ExitWith{1};
}

void run_alg_crt(const Ctx& ctx, const std::string& path,
                 const std::vector<std::string>& constraints) {
    FiniteAlgebra a = load_algebra(ctx, path);
    CongruenceLattice conL = build_con_lattice(a);
    std::vector<int> thetas, targets;
    for (const auto& c : constraints) {
        size_t colon = c.rfind(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("constraint wants '<partition> : <element>': " + c);
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string part = trim(c.substr(0, colon)), elem = trim(c.substr(colon + 1));
        Partition p = parse_partition(part, a);
        if (!is_congruence(a, p))
            throw std::invalid_argument("partition is not a congruence: " + part);
        auto ei = a.element_index(elem);
        if (!ei) throw std::invalid_argument("unknown element: " + elem);
        thetas.push_back(conL.index_of(p));
        targets.push_back(*ei);
    }
    CrtResult r = crt_solve(conL, thetas, targets);
    if (ctx.format == "json") {
        ordered_json j;
        j["compatible"] = r.compatible;
        j["solvable"] = r.witness.has_value();
        if (r.witness) j["witness"] = a.labels[*r.witness];
        print_json(j);
    } else {
        std::cout << "compatible: " << yn(r.compatible) << "\n";
        if (r.witness)
            std::cout << "witness: " << a.labels[*r.witness] << "\n";
        else
            std::cout << "witness: none\n";
    }
    if (ctx.assert_flag && !r.witness) throw ExitWith{1};
}

// ---- rl subcommands ----

ResiduatedLattice load_rl(const Ctx& ctx, const std::string& path) {
    return validate_residuated(load_algebra(ctx, path));
}

void run_rl_validate(const Ctx& ctx, const std::string& path) {
    ResiduatedLattice a = load_rl(ctx, path);
    if (ctx.format == "json") {
        ordered_json j;
        j["name"] = a.alg.name;
        j["size"] = a.n();
        j["valid"] = true;
        print_json(j);
    } else {
        std::cout << "valid residuated lattice: " << a.alg.name << " (size " << a.n() << ")\n";
    }
}

void run_rl_filters(const Ctx& ctx, const std::string& path) {
    ResiduatedLattice a = load_rl(ctx, path);
    std::vector<std::vector<int>> fs = filters(a);
    std::vector<std::vector<int>> primes = prime_filters_rl(a);
    std::vector<std::vector<int>> maxes = maximal_filters_rl(a);
    auto contains = [](const std::vector<std::vector<int>>& xs, const std::vector<int>& f) {
        return std::find(xs.begin(), xs.end(), f) != xs.end();
    };
    if (ctx.format == "json") {
        ordered_json j;
        j["algebra"] = {{"name", a.alg.name}, {"size", a.n()}};
        j["filter_count"] = (int)fs.size();
        ordered_json arr = ordered_json::array();
        for (const auto& f : fs)
            arr.push_back({{"name", filter_name(a, f)},
                           {"members", element_set_json(f, a.alg.labels)},
                           {"prime", contains(primes, f)},
                           {"maximal", contains(maxes, f)}});
        j["filters"] = std::move(arr);
        print_json(j);
    } else {
        for (const auto& f : fs) {
            std::cout << filter_name(a, f) << " =";
            for (int x : f) std::cout << " " << a.alg.labels[x];
            if (contains(primes, f)) std::cout << "  [prime]";
            if (contains(maxes, f)) std::cout << "  [maximal]";
            std::cout << "\n";
        }
    }
}

void run_rl_blp(const Ctx& ctx, const std::string& path) {
    ResiduatedLattice a = load_rl(ctx, path);
    BlpReport rep = algebra_has_blp(a);
    if (ctx.format == "json") {
        print_json(rl_report(a));
    } else {
        std::cout << "algebra: " << a.alg.name << " (size " << a.n() << ")\n";
        std::cout << "blp: " << yn(rep.algebra_verdict) << "\n";
        for (int i : rep.failing) {
            std::cout << "failing: " << filter_name(a, rep.filters[i]);
            if (rep.per_filter[i].witness) {
                RlQuotient q = quotient_by_filter(a, rep.filters[i]);
                std::cout << " (unliftable: " << q.target.alg.labels[*rep.per_filter[i].witness]
                          << ")";
            }
            std::cout << "\n";
        }
    }
    if (ctx.assert_flag && !rep.algebra_verdict) throw ExitWith{1};
}

void run_rl_ilp(const Ctx& ctx, const std::string& path) {
    ResiduatedLattice a = load_rl(ctx, path);
    std::vector<std::vector<int>> fs = filters(a);
    bool all = true;
    std::vector<bool> per;
    for (const auto& f : fs) {
        per.push_back(has_ilp(a, f));
        all = all && per.back();
    }
    if (ctx.format == "json") {
        ordered_json j;
        j["algebra"] = {{"name", a.alg.name}, {"size", a.n()}};
        j["ilp"] = all;
        ordered_json arr = ordered_json::array();
        for (size_t i = 0; i < fs.size(); ++i)
            arr.push_back({{"name", filter_name(a, fs[i])}, {"ilp", (bool)per[i]}});
        j["per_filter"] = std::move(arr);
        print_json(j);
    } else {
        std::cout << "ilp: " << yn(all) << "\n";
        for (size_t i = 0; i < fs.size(); ++i)
            std::cout << "  " << filter_name(a, fs[i]) << " " << yn(per[i]) << "\n";
    }
    if (ctx.assert_flag && !all) throw ExitWith{1};
}

void run_rl_classify(const Ctx& ctx, const std::string& path) {
    ResiduatedLattice a = load_rl(ctx, path);
    RlClassification c = classify(a);
    if (ctx.format == "json") {
        ordered_json j;
        j["algebra"] = {{"name", a.alg.name}, {"size", a.n()}};
        j["godel"] = c.is_godel;
        j["bl"] = c.is_bl;
        j["mv"] = c.is_mv;
        j["gelfand"] = c.is_gelfand;
        print_json(j);
    } else {
        std::cout << "godel: " << yn(c.is_godel) << "\n";
        std::cout << "bl: " << yn(c.is_bl) << "\n";
        std::cout << "mv: " << yn(c.is_mv) << "\n";
        std::cout << "gelfand: " << yn(c.is_gelfand) << "\n";
    }
}

void run_rl_reticulate(const Ctx& ctx, const std::string& path) {
    ResiduatedLattice a = load_rl(ctx, path);
    FiniteLattice l = reticulation(a);
    if (ctx.format == "json") {
        ordered_json j;
        j["name"] = l.name;
        j["size"] = l.n;
        j["elements"] = l.labels;
        j["text"] = serialize_lattice(l);
        print_json(j);
    } else {
        std::cout << serialize_lattice(l);
    }
}

void run_rl_crosscheck(const Ctx& ctx, const std::string& path) {
    ResiduatedLattice a = load_rl(ctx, path);
    Crosscheck c = blp_cblp_crosscheck(a);
    if (ctx.format == "json") {
        ordered_json j;
        j["algebra"] = {{"name", a.alg.name}, {"size", a.n()}};
        j["filt_con_iso"] = c.filt_con_iso;
        j["agree"] = c.agree;
        ordered_json arr = ordered_json::array();
        for (const auto& row : c.rows)
            arr.push_back({{"filter", filter_name(a, row.filter)},
                           {"blp", row.blp},
                           {"cblp", row.cblp}});
        j["rows"] = std::move(arr);
        print_json(j);
    } else {
        std::cout << "filt_con_iso: " << yn(c.filt_con_iso) << "\n";
        std::cout << "agree: " << yn(c.agree) << "\n";
        for (const auto& row : c.rows)
            std::cout << "  " << filter_name(a, row.filter) << " blp=" << yn(row.blp)
                      << " cblp=" << yn(row.cblp) << "\n";
    }
    if (ctx.assert_flag && !(c.filt_con_iso && c.agree)) throw ExitWith{1};
}

// ---- lat subcommands ----

void run_lat_profile(const Ctx& ctx, const std::string& path) {
    FiniteLattice l = load_lattice(ctx, path);
    LatticeProfile p = lattice_profile(l);
    if (ctx.format == "json") {
        ordered_json j;
        j["name"] = l.name;
        j["size"] = l.n;
        j["distributive"] = p.is_distributive;
        j["modular"] = p.is_modular;
        j["boolean"] = p.is_boolean;
        print_json(j);
    } else {
        std::cout << "distributive: " << yn(p.is_distributive) << "\n";
        std::cout << "modular: " << yn(p.is_modular) << "\n";
        std::cout << "boolean: " << yn(p.is_boolean) << "\n";
    }
}

void run_lat_normality(const Ctx& ctx, const std::string& path) {
    FiniteLattice l = load_lattice(ctx, path);
    NormalityProfile p = normality_profile(l);
    if (ctx.format == "json") {
        ordered_json j;
        j["name"] = l.name;
        j["size"] = l.n;
        j["normal"] = p.normal;
        j["b_normal"] = p.b_normal;
        j["conormal"] = p.conormal;
        j["b_conormal"] = p.b_conormal;
        print_json(j);
    } else {
        std::cout << "normal: " << yn(p.normal) << "\n";
        std::cout << "b_normal: " << yn(p.b_normal) << "\n";
        std::cout << "conormal: " << yn(p.conormal) << "\n";
        std::cout << "b_conormal: " << yn(p.b_conormal) << "\n";
    }
}

void run_lat_center(const Ctx& ctx, const std::string& path) {
    FiniteLattice l = load_lattice(ctx, path);
    BooleanCenter c = boolean_center(l);
    if (ctx.format == "json") {
        ordered_json j;
        j["name"] = l.name;
        j["size"] = l.n;
        j["center_size"] = (int)c.elements.size();
        ordered_json arr = ordered_json::array();
        for (size_t i = 0; i < c.elements.size(); ++i)
            arr.push_back({{"element", l.labels[c.elements[i]]},
                           {"complement", l.labels[c.complement[i]]}});
        j["center"] = std::move(arr);
        j["unique_complements"] = c.unique_complements;
        print_json(j);
    } else {
        for (size_t i = 0; i < c.elements.size(); ++i)
            std::cout << l.labels[c.elements[i]] << " (complement "
                      << l.labels[c.complement[i]] << ")\n";
        std::cout << "unique_complements: " << yn(c.unique_complements) << "\n";
    }
}

// ---- hasse / catalog ----

void run_hasse(const Ctx& ctx, const std::string& path, const std::string& out_path) {
    std::string text = slurp(path);
    std::istringstream ss(text);
    std::string line, first;
    while (std::getline(ss, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (ls >> tok && tok[0] != '#') { first = tok; break; }
    }
    std::string dot;
    if (first == "lattice") {
        dot = lattice_to_dot(load_lattice(ctx, path));
    } else if (first == "algebra") {
        FiniteAlgebra a = load_algebra(ctx, path);
        dot = lattice_to_dot(lattice_of_con(build_con_lattice(a)));
    } else {
        throw ParseError("expected a file starting with 'algebra' or 'lattice'");
    }
    if (out_path.empty()) {
        std::cout << dot;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ParseError("cannot write " + out_path);
        out << dot;
    }
}

void run_catalog_list(const Ctx& ctx) {
    std::vector<std::string> keys = catalog_keys();
    if (ctx.format == "json") {
        ordered_json j;
        j["keys"] = keys;
        j["parametric"] = {"chain_N (N >= 2)", "boolean_K (K >= 1)"};
        print_json(j);
    } else {
        for (const auto& k : keys) std::cout << k << "\n";
    }
}

void run_catalog_show(const Ctx& ctx, const std::string& key) {
    Fixture f = fixture(key);
    const FixtureFacts& e = f.expected;
    if (ctx.format == "json") {
        ordered_json j;
        j["key"] = f.key;
        j["residuated"] = f.residuated;
        j["size"] = f.algebra.n;
        j["elements"] = f.algebra.labels;
        ordered_json exp;
        if (e.congruence_count) exp["congruence_count"] = *e.congruence_count;
        if (e.boolean_center_size) exp["boolean_center_size"] = *e.boolean_center_size;
        if (e.cblp) exp["cblp"] = *e.cblp;
        if (e.star) exp["star"] = *e.star;
        if (!e.cblp_failures.empty()) exp["cblp_failures"] = e.cblp_failures;
        if (!e.blp_failures.empty()) exp["blp_failures"] = e.blp_failures;
        if (e.max_count) exp["max_count"] = *e.max_count;
        if (e.rad) exp["rad"] = *e.rad;
        if (e.godel) exp["godel"] = *e.godel;
        if (e.bl) exp["bl"] = *e.bl;
        if (e.mv) exp["mv"] = *e.mv;
        if (e.gelfand) exp["gelfand"] = *e.gelfand;
        if (e.reticulation_iso_carrier)
            exp["reticulation_iso_carrier"] = *e.reticulation_iso_carrier;
        if (!e.note.empty()) exp["note"] = e.note;
        j["expected"] = std::move(exp);
        print_json(j);
    } else {
        std::cout << "key: " << f.key << "\n";
        std::cout << "size: " << f.algebra.n << "\n";
        std::cout << "residuated: " << yn(f.residuated) << "\n";
        if (e.congruence_count) std::cout << "congruence_count: " << *e.congruence_count << "\n";
        if (e.boolean_center_size)
            std::cout << "boolean_center_size: " << *e.boolean_center_size << "\n";
        if (e.cblp) std::cout << "cblp: " << yn(*e.cblp) << "\n";
        if (e.star) std::cout << "star: " << yn(*e.star) << "\n";
        for (const auto& s : e.cblp_failures) std::cout << "cblp_failure: " << s << "\n";
        for (const auto& s : e.blp_failures) std::cout << "blp_failure: " << s << "\n";
        if (e.max_count) std::cout << "max_count: " << *e.max_count << "\n";
        if (e.rad) std::cout << "rad: " << *e.rad << "\n";
        if (e.godel) std::cout << "godel: " << yn(*e.godel) << "\n";
        if (e.bl) std::cout << "bl: " << yn(*e.bl) << "\n";
        if (e.mv) std::cout << "mv: " << yn(*e.mv) << "\n";
        if (e.gelfand) std::cout << "gelfand: " << yn(*e.gelfand) << "\n";
        if (e.reticulation_iso_carrier)
            std::cout << "reticulation_iso_carrier: " << yn(*e.reticulation_iso_carrier) << "\n";
        if (!e.note.empty()) std::cout << "note: " << e.note << "\n";
    }
}

void run_catalog_export(const Ctx&, const std::string& key, const std::string& out_path) {
    Fixture f = fixture(key);
    std::string text = serialize_algebra(f.algebra);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ParseError("cannot write " + out_path);
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    Ctx ctx;
    if (const char* env = std::getenv("CONGRKIT_MAX_SIZE")) {
        int v = std::atoi(env);
        if (v > 0) ctx.max_size = v;
    }

    CLI::App app{"finite universal algebras: congruence lattices, Boolean lifting, spectra"};
    app.require_subcommand(1);
    app.add_option("--format", ctx.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--assert", ctx.assert_flag, "exit 1 when the checked property fails");
    app.add_flag("--brute-force", ctx.brute,
                 "cross-check the congruence enumeration against the partition filter; "
                 "exit 3 on disagreement");
    app.add_option("--seed", ctx.seed, "sampling seed (reserved)");
    app.add_option("--max-size", ctx.max_size, "carrier size limit");

    std::string file, file2, spec_arg, key, out_path;
    std::vector<std::string> files, constraints;
    int exit_code = 0;

    CLI::App* alg = app.add_subcommand("alg", "operations on plain algebra files");
    alg->require_subcommand(1);
    alg->fallthrough();
    {
        CLI::App* c = alg->add_subcommand("validate", "check the algebra invariants");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_alg_validate(ctx, file); });
    }
    {
        CLI::App* c = alg->add_subcommand("con", "list all congruences");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_alg_con(ctx, file); });
    }
    {
        CLI::App* c = alg->add_subcommand("spectra", "prime/maximal spectrum and radical");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_alg_spectra(ctx, file); });
    }
    {
        CLI::App* c = alg->add_subcommand("cblp", "congruence Boolean lifting report");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_alg_cblp(ctx, file); });
    }
    {
        CLI::App* c = alg->add_subcommand("star", "radical-plus-Boolean decompositions");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_alg_star(ctx, file); });
    }
    {
        CLI::App* c = alg->add_subcommand("quotient", "quotient by a congruence");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->add_option("spec", spec_arg, "partition string or pair list x,y;u,v")->required();
        c->callback([&] { run_alg_quotient(ctx, file, spec_arg); });
    }
    {
        CLI::App* c = alg->add_subcommand("product", "direct product of algebra files");
        c->fallthrough();
        c->add_option("files", files)->required()->expected(-1);
        c->callback([&] { run_alg_product(ctx, files); });
    }
    {
        CLI::App* c = alg->add_subcommand("decompose",
                                          "split into local factors (arithmetical input)");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_alg_decompose(ctx, file); });
    }
    {
        CLI::App* c = alg->add_subcommand("crt", "simultaneous congruence constraints");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->add_option("--constraint", constraints, "'<partition> : <element>'")->required();
        c->callback([&] { run_alg_crt(ctx, file, constraints); });
    }

    CLI::App* rl = app.add_subcommand("rl", "operations on residuated lattice files");
    rl->require_subcommand(1);
    rl->fallthrough();
    {
        CLI::App* c = rl->add_subcommand("validate", "check the residuation axioms");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_rl_validate(ctx, file); });
    }
    {
        CLI::App* c = rl->add_subcommand("filters", "list filters with prime/maximal flags");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_rl_filters(ctx, file); });
    }
    {
        CLI::App* c = rl->add_subcommand("blp", "Boolean lifting along every filter");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_rl_blp(ctx, file); });
    }
    {
        CLI::App* c = rl->add_subcommand("ilp", "idempotent lifting along every filter");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_rl_ilp(ctx, file); });
    }
    {
        CLI::App* c = rl->add_subcommand("classify", "Godel/BL/MV/Gelfand tests");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_rl_classify(ctx, file); });
    }
    {
        CLI::App* c = rl->add_subcommand("reticulate", "reticulation lattice");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_rl_reticulate(ctx, file); });
    }
    {
        CLI::App* c = rl->add_subcommand("crosscheck",
                                         "filter-side BLP against congruence-side CBLP");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_rl_crosscheck(ctx, file); });
    }

    CLI::App* lat = app.add_subcommand("lat", "operations on lattice files");
    lat->require_subcommand(1);
    lat->fallthrough();
    {
        CLI::App* c = lat->add_subcommand("profile", "distributive/modular/Boolean");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_lat_profile(ctx, file); });
    }
    {
        CLI::App* c = lat->add_subcommand("normality", "normality family (distributive input)");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_lat_normality(ctx, file); });
    }
    {
        CLI::App* c = lat->add_subcommand("center", "complemented elements");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->callback([&] { run_lat_center(ctx, file); });
    }

    {
        CLI::App* c = app.add_subcommand(
            "hasse", "DOT diagram of a lattice file or of an algebra's congruence lattice");
        c->fallthrough();
        c->add_option("file", file)->required();
        c->add_option("--dot", out_path, "write to a file instead of stdout");
        c->callback([&] { run_hasse(ctx, file, out_path); });
    }

    CLI::App* cat = app.add_subcommand("catalog", "built-in example algebras");
    cat->require_subcommand(1);
    cat->fallthrough();
    {
        CLI::App* c = cat->add_subcommand("list", "available keys");
        c->fallthrough();
        c->callback([&] { run_catalog_list(ctx); });
    }
    {
        CLI::App* c = cat->add_subcommand("show", "expected facts for a key");
        c->fallthrough();
        c->add_option("key", key)->required();
        c->callback([&] { run_catalog_show(ctx, key); });
    }
    {
        CLI::App* c = cat->add_subcommand("export", "write the algebra file for a key");
        c->fallthrough();
        c->add_option("key", key)->required();
        c->add_option("--out", out_path, "write to a file instead of stdout");
        c->callback([&] { run_catalog_export(ctx, key, out_path); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ExitWith& e) {
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
