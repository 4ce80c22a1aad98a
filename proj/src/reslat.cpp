#include "congrkit/reslat.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace congrkit {

namespace {

int table2(const FiniteAlgebra& alg, const char* op, int a, int b) {
    int i = alg.op_index(op);
    assert(i >= 0);
    return alg.ops[i].table[(size_t)a * alg.n + b];
}

}  // namespace

int ResiduatedLattice::jn(int a, int b) const { return table2(alg, "join", a, b); }
int ResiduatedLattice::mt(int a, int b) const { return table2(alg, "meet", a, b); }
int ResiduatedLattice::pd(int a, int b) const { return table2(alg, "prod", a, b); }
int ResiduatedLattice::im(int a, int b) const { return table2(alg, "imp", a, b); }

FiniteLattice ResiduatedLattice::carrier_lattice() const {
    std::vector<std::vector<char>> lq = leq;
    FiniteLattice l = lattice_from_leq(alg.name, alg.labels, std::move(lq));
    return l;
}

ResiduatedLattice validate_residuated(const FiniteAlgebra& a) {
    {
        std::vector<std::string> problems = validate_algebra(a);
        if (!problems.empty())
            throw std::invalid_argument("residuated lattice: " + problems.front());
    }
    const struct {
        const char* name;
        int arity;
    } required[] = {{"join", 2}, {"meet", 2}, {"prod", 2}, {"imp", 2}, {"zero", 0}, {"one", 0}};
    for (const auto& r : required) {
        int i = a.op_index(r.name);
        if (i < 0)
            throw std::invalid_argument(std::string("residuated lattice: missing operation ") +
                                        r.name);
        if (a.ops[i].arity != r.arity)
            throw std::invalid_argument(std::string("residuated lattice: operation ") + r.name +
                                        " must have arity " + std::to_string(r.arity));
    }

    ResiduatedLattice rl;
    rl.alg = a;
    rl.zero = a.ops[a.op_index("zero")].table[0];
    rl.one = a.ops[a.op_index("one")].table[0];
    rl.leq.assign(a.n, std::vector<char>(a.n, 0));
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y) rl.leq[x][y] = (rl.mt(x, y) == x);

    auto lbl = [&](int x) { return a.labels[x]; };
    auto fail = [&](const std::string& axiom, int x, int y, int z) {
        std::string at = "(" + lbl(x) + ", " + lbl(y);
        if (z >= 0) at += ", " + lbl(z);
        at += ")";
        throw std::invalid_argument("residuated lattice: " + axiom + " fails at " + at);
    };

    // bounded lattice part; join/meet agreement with the order is implied
    // by absorption + commutativity + associativity + bounds
    for (int x = 0; x < a.n; ++x) {
        if (rl.jn(x, rl.one) != rl.one) fail("top bound", x, rl.one, -1);
        if (rl.mt(x, rl.zero) != rl.zero) fail("bottom bound", x, rl.zero, -1);
        if (rl.jn(x, x) != x) fail("join idempotence", x, x, -1);
        if (rl.mt(x, x) != x) fail("meet idempotence", x, x, -1);
        for (int y = 0; y < a.n; ++y) {
            if (rl.jn(x, y) != rl.jn(y, x)) fail("join commutativity", x, y, -1);
            if (rl.mt(x, y) != rl.mt(y, x)) fail("meet commutativity", x, y, -1);
            if (rl.jn(x, rl.mt(x, y)) != x) fail("absorption", x, y, -1);
            if (rl.mt(x, rl.jn(x, y)) != x) fail("absorption", x, y, -1);
            for (int z = 0; z < a.n; ++z) {
                if (rl.jn(rl.jn(x, y), z) != rl.jn(x, rl.jn(y, z)))
                    fail("join associativity", x, y, z);
                if (rl.mt(rl.mt(x, y), z) != rl.mt(x, rl.mt(y, z)))
                    fail("meet associativity", x, y, z);
            }
        }
    }
    // commutative monoid with unit one
    for (int x = 0; x < a.n; ++x) {
        if (rl.pd(x, rl.one) != x) fail("product unit", x, rl.one, -1);
        for (int y = 0; y < a.n; ++y) {
            if (rl.pd(x, y) != rl.pd(y, x)) fail("product commutativity", x, y, -1);
            for (int z = 0; z < a.n; ++z)
                if (rl.pd(rl.pd(x, y), z) != rl.pd(x, rl.pd(y, z)))
                    fail("product associativity", x, y, z);
        }
    }
    // residuation: x*y <= z iff x <= y -> z
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y)
            for (int z = 0; z < a.n; ++z) {
                bool lhs = rl.le(rl.pd(x, y), z);
                bool rhs = rl.le(x, rl.im(y, z));
                if (lhs != rhs) fail("residuation", x, y, z);
            }
    return rl;
}

std::vector<int> principal_filter(const ResiduatedLattice& a, int x) {
    // powers of x descend and stabilize at an idempotent
    int p = x;
    while (a.pd(p, p) != p) p = a.pd(p, x);
    std::vector<int> f;
    for (int y = 0; y < a.n(); ++y)
        if (a.le(p, y)) f.push_back(y);
    return f;
}

std::vector<int> filter_generated(const ResiduatedLattice& a, const std::vector<int>& xs) {
    std::vector<char> in(a.n(), 0);
    in[a.one] = 1;
    for (int x : xs) in[x] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < a.n(); ++u) {
            if (!in[u]) continue;
            for (int v = 0; v < a.n(); ++v) {
                if (!in[v]) continue;
                int p = a.pd(u, v);
                if (!in[p]) {
                    in[p] = 1;
                    changed = true;
                }
            }
            for (int w = 0; w < a.n(); ++w)
                if (!in[w] && a.le(u, w)) {
                    in[w] = 1;
                    changed = true;
                }
        }
    }
    std::vector<int> f;
    for (int y = 0; y < a.n(); ++y)
        if (in[y]) f.push_back(y);
    return f;
}

bool is_filter(const ResiduatedLattice& a, const std::vector<int>& f) {
    if (f.empty()) return false;
    std::vector<char> in(a.n(), 0);
    for (int x : f) {
        if (x < 0 || x >= a.n() || in[x]) return false;
        in[x] = 1;
    }
    for (int x : f) {
        for (int y : f)
            if (!in[a.pd(x, y)]) return false;
        for (int w = 0; w < a.n(); ++w)
            if (a.le(x, w) && !in[w]) return false;
    }
    return true;
}

namespace {

bool filter_order_less(const std::vector<int>& f, const std::vector<int>& g) {
    if (f.size() != g.size()) return f.size() < g.size();
    return f < g;
}

}  // namespace

std::vector<std::vector<int>> filters(const ResiduatedLattice& a) {
    // every filter of a finite residuated lattice is generated by the
    // product of its members, so principal generation is exhaustive
    std::set<std::vector<int>> seen;
    for (int x = 0; x < a.n(); ++x) seen.insert(filter_generated(a, {x}));
    std::vector<std::vector<int>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), filter_order_less);
    return out;
}

bool is_prime_filter_rl(const ResiduatedLattice& a, const std::vector<int>& f) {
    if (!is_filter(a, f)) return false;
    std::vector<char> in(a.n(), 0);
    for (int x : f) in[x] = 1;
    if (in[a.zero]) return false;  // proper
    for (int x = 0; x < a.n(); ++x)
        for (int y = 0; y < a.n(); ++y)
            if (in[a.jn(x, y)] && !in[x] && !in[y]) return false;
    return true;
}

std::vector<std::vector<int>> prime_filters_rl(const ResiduatedLattice& a) {
    std::vector<std::vector<int>> out;
    for (const auto& f : filters(a))
        if (is_prime_filter_rl(a, f)) out.push_back(f);
    return out;
}

std::vector<std::vector<int>> maximal_filters_rl(const ResiduatedLattice& a) {
    std::vector<std::vector<int>> proper;
    for (const auto& f : filters(a))
        if ((int)f.size() < a.n()) proper.push_back(f);
    std::vector<std::vector<int>> out;
    for (const auto& f : proper) {
        bool maximal = true;
        for (const auto& g : proper)
            if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(f);
    }
    return out;
}

std::string filter_name(const ResiduatedLattice& a, const std::vector<int>& f) {
    // the generator is the least member
    int g = f.front();
    for (int x : f)
        if (a.le(x, g)) g = x;
    return "[" + a.alg.labels[g] + ")";
}

namespace {

FiniteLattice filters_as_lattice(const ResiduatedLattice& a,
                                 const std::vector<std::vector<int>>& fs,
                                 const std::string& name) {
    int m = (int)fs.size();
    std::vector<std::string> labels;
    for (const auto& f : fs) labels.push_back(filter_name(a, f));
    std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            leq[i][j] = std::includes(fs[j].begin(), fs[j].end(), fs[i].begin(), fs[i].end());
    return lattice_from_leq(name, std::move(labels), std::move(leq));
}

}  // namespace

FiniteLattice filt_lattice(const ResiduatedLattice& a) {
    return filters_as_lattice(a, filters(a), a.alg.name + "_filt");
}

FiniteLattice pfilt_lattice(const ResiduatedLattice& a) {
    std::set<std::vector<int>> seen;
    for (int x = 0; x < a.n(); ++x) seen.insert(principal_filter(a, x));
    std::vector<std::vector<int>> fs(seen.begin(), seen.end());
    std::sort(fs.begin(), fs.end(), filter_order_less);
    return filters_as_lattice(a, fs, a.alg.name + "_pfilt");
}

Partition cong_of_filter(const ResiduatedLattice& a, const std::vector<int>& f) {
    std::vector<char> in(a.n(), 0);
    for (int x : f) in[x] = 1;
    // x ~ y iff x <-> y lies in F; the relation is already transitive
    std::vector<int> raw(a.n(), -1);
    int next = 0;
    for (int x = 0; x < a.n(); ++x) {
        if (raw[x] >= 0) continue;
        raw[x] = next;
        for (int y = x + 1; y < a.n(); ++y)
            if (raw[y] < 0 && in[a.equiv(x, y)]) raw[y] = next;
        ++next;
    }
    return Partition::from_raw(std::move(raw));
}

std::vector<int> filter_of_cong(const ResiduatedLattice& a, const Partition& theta) {
    std::vector<int> f;
    for (int x = 0; x < a.n(); ++x)
        if (theta.related(x, a.one)) f.push_back(x);
    return f;
}

RlQuotient quotient_by_filter(const ResiduatedLattice& a, const std::vector<int>& f) {
    if (!is_filter(a, f))
        throw std::invalid_argument("quotient_by_filter: not a filter");
    RlQuotient out;
    out.theta = cong_of_filter(a, f);
    QuotientMap q = quotient(a.alg, out.theta);
    out.target = validate_residuated(q.target);
    out.projection = q.projection;
    return out;
}

std::vector<int> boolean_center_rl(const ResiduatedLattice& a) {
    return boolean_center(a.carrier_lattice()).elements;
}

std::vector<int> idempotents(const ResiduatedLattice& a) {
    std::vector<int> out;
    for (int x = 0; x < a.n(); ++x)
        if (a.pd(x, x) == x) out.push_back(x);
    return out;
}

std::vector<int> regular_elements(const ResiduatedLattice& a) {
    std::vector<int> out;
    for (int x = 0; x < a.n(); ++x)
        if (a.neg(a.neg(x)) == x) out.push_back(x);
    return out;
}

BlpVerdict has_blp(const ResiduatedLattice& a, const std::vector<int>& f) {
    RlQuotient q = quotient_by_filter(a, f);
    std::vector<char> image(q.target.n(), 0);
    for (int e : boolean_center_rl(a)) image[q.projection[e]] = 1;
    BlpVerdict v;
    v.holds = true;
    for (int e : boolean_center_rl(q.target))
        if (!image[e]) {
            v.holds = false;
            v.witness = e;
            break;
        }
    return v;
}

bool has_ilp(const ResiduatedLattice& a, const std::vector<int>& f) {
    RlQuotient q = quotient_by_filter(a, f);
    std::vector<char> image(q.target.n(), 0);
    for (int e : idempotents(a)) image[q.projection[e]] = 1;
    for (int e : idempotents(q.target))
        if (!image[e]) return false;
    return true;
}

BlpReport algebra_has_blp(const ResiduatedLattice& a) {
    BlpReport r;
    r.algebra_verdict = true;
    r.filters = filters(a);
    for (size_t i = 0; i < r.filters.size(); ++i) {
        r.per_filter.push_back(has_blp(a, r.filters[i]));
        if (!r.per_filter.back().holds) {
            r.algebra_verdict = false;
            r.failing.push_back((int)i);
        }
    }
    return r;
}

RlClassification classify(const ResiduatedLattice& a) {
    RlClassification c;
    c.is_godel = true;
    bool prelinear = true, divisible = true, involutive = true;
    for (int x = 0; x < a.n(); ++x)
        for (int y = 0; y < a.n(); ++y) {
            if (a.pd(x, y) != a.mt(x, y)) c.is_godel = false;
            if (a.jn(a.im(x, y), a.im(y, x)) != a.one) prelinear = false;
            if (a.pd(x, a.im(x, y)) != a.mt(x, y)) divisible = false;
        }
    for (int x = 0; x < a.n(); ++x)
        if (a.neg(a.neg(x)) != x) involutive = false;
    c.is_bl = prelinear && divisible;
    c.is_mv = c.is_bl && involutive;
    c.is_gelfand = true;
    std::vector<std::vector<int>> maxes = maximal_filters_rl(a);
    for (const auto& p : prime_filters_rl(a)) {
        int count = 0;
        for (const auto& m : maxes)
            if (std::includes(m.begin(), m.end(), p.begin(), p.end())) ++count;
        if (count != 1) c.is_gelfand = false;
    }
    return c;
}

FiniteLattice reticulation(const ResiduatedLattice& a) {
    FiniteLattice l = dual(pfilt_lattice(a));
    l.name = a.alg.name + "_retic";
    return l;
}

Crosscheck blp_cblp_crosscheck(const ResiduatedLattice& a) {
    Crosscheck c;
    CongruenceLattice conL = build_con_lattice(a.alg);
    std::vector<std::vector<int>> fs = filters(a);
    c.filt_con_iso = ((int)fs.size() == conL.size());
    std::vector<int> cong_index(fs.size(), -1);
    for (size_t i = 0; i < fs.size(); ++i) {
        cong_index[i] = conL.index_of(cong_of_filter(a, fs[i]));
        if (cong_index[i] < 0) c.filt_con_iso = false;
    }
    if (c.filt_con_iso) {
        std::vector<char> hit(conL.size(), 0);
        for (int ci : cong_index) {
            if (hit[ci]) c.filt_con_iso = false;
            hit[ci] = 1;
        }
        for (size_t i = 0; i < fs.size() && c.filt_con_iso; ++i)
            for (size_t j = 0; j < fs.size(); ++j) {
                bool sub =
                    std::includes(fs[j].begin(), fs[j].end(), fs[i].begin(), fs[i].end());
                if (sub != (bool)conL.leq[cong_index[i]][cong_index[j]]) {
                    c.filt_con_iso = false;
                    break;
                }
            }
    }
    c.agree = true;
    for (size_t i = 0; i < fs.size(); ++i) {
        CrosscheckRow row;
        row.filter = fs[i];
        row.blp = has_blp(a, fs[i]).holds;
        row.cblp = cong_index[i] >= 0 && has_cblp(conL, cong_index[i]).holds;
        if (row.blp != row.cblp) c.agree = false;
        c.rows.push_back(std::move(row));
    }
    return c;
}

EightWay eight_way(const ResiduatedLattice& a) {
    EightWay e;
    CongruenceLattice conL = build_con_lattice(a.alg);
    e.cblp = algebra_has_cblp(conL).algebra_verdict;
    e.blp = algebra_has_blp(a).algebra_verdict;
    e.con_b_normal = normality_profile(lattice_of_con(conL)).b_normal;
    e.filt_b_normal = normality_profile(filt_lattice(a)).b_normal;
    e.pfilt_b_normal = normality_profile(pfilt_lattice(a)).b_normal;
    FiniteLattice retic = reticulation(a);
    e.retic_b_conormal = normality_profile(retic).b_conormal;
    e.retic_filter_blp = lattice_blp_filters(retic);
    e.pfilt_ideal_blp = lattice_blp_ideals(pfilt_lattice(a));
    return e;
}

}  // namespace congrkit
