#include "congrkit/cblp.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace congrkit {

Spectra spectra(const CongruenceLattice& conL) {
    Spectra s;
    int m = conL.size();
    int top = conL.top_index;
    for (int t = 0; t < m; ++t) {
        if (t == top) continue;
        bool prime = true;
        for (int i = 0; i < m && prime; ++i)
            for (int j = 0; j < m; ++j)
                if (conL.leq[conL.meet_table[i][j]][t] && !conL.leq[i][t] && !conL.leq[j][t]) {
                    prime = false;
                    break;
                }
        if (prime) s.spec.push_back(t);
    }
    for (int t = 0; t < m; ++t) {
        if (t == top) continue;
        bool maximal = true;
        for (int u = 0; u < m && maximal; ++u)
            if (u != t && u != top && conL.leq[t][u]) maximal = false;
        if (maximal) s.max.push_back(t);
    }
    s.rad = top;
    for (int t : s.max) s.rad = conL.meet_table[s.rad][t];
    return s;
}

bool is_local(const CongruenceLattice& conL) { return spectra(conL).max.size() == 1; }

bool is_semilocal(const CongruenceLattice& conL) {
    return spectra(conL).max.size() < (size_t)conL.size() + 1;  // finitely many: always
}

std::vector<int> interval_boolean(const CongruenceLattice& conL, int theta) {
    std::vector<int> members;
    int m = conL.size();
    for (int i = 0; i < m; ++i)
        if (conL.leq[theta][i]) members.push_back(i);
    std::vector<int> result;
    for (int i : members) {
        for (int j : members)
            if (conL.meet_table[i][j] == theta && conL.join_table[i][j] == conL.top_index) {
                result.push_back(i);
                break;
            }
    }
    return result;
}

CblpVerdict has_cblp(const CongruenceLattice& conL, int theta) {
    std::vector<char> image(conL.size(), 0);
    for (int b : interval_boolean(conL, conL.bottom_index))
        image[conL.join_table[b][theta]] = 1;
    CblpVerdict v;
    v.holds = true;
    for (int e : interval_boolean(conL, theta))
        if (!image[e]) {
            v.holds = false;
            v.witness = e;
            break;
        }
    return v;
}

CblpReport algebra_has_cblp(const CongruenceLattice& conL) {
    CblpReport r;
    r.algebra_verdict = true;
    for (int t = 0; t < conL.size(); ++t) {
        r.per_congruence.push_back(has_cblp(conL, t));
        if (!r.per_congruence.back().holds) {
            r.algebra_verdict = false;
            r.failing.push_back(t);
        }
    }
    return r;
}

LiftingMaps lifting_maps(const CongruenceLattice& conL, int theta) {
    LiftingMaps lm;
    FiniteLattice conLat = lattice_of_con(conL);
    lm.interval_lattice = interval(conLat, theta, &lm.interval_elements);

    std::vector<char> seen(conL.size(), 0);
    for (int b : interval_boolean(conL, conL.bottom_index)) seen[conL.join_table[b][theta]] = 1;
    for (int i = 0; i < conL.size(); ++i)
        if (seen[i]) lm.v_image_boolean.push_back(i);

    QuotientMap q = quotient(conL.algebra, conL.elements[theta]);
    lm.quotient_con = build_con_lattice(q.target);

    // s: phi in [theta) -> phi/theta; verify bijection + double order preservation
    std::vector<int> s_map(lm.interval_elements.size(), -1);
    lm.s_is_isomorphism = true;
    std::vector<char> hit(lm.quotient_con.size(), 0);
    for (size_t i = 0; i < lm.interval_elements.size(); ++i) {
        Partition img = push_congruence(q, conL.elements[lm.interval_elements[i]]);
        s_map[i] = lm.quotient_con.index_of(img);
        if (s_map[i] < 0 || hit[s_map[i]]) lm.s_is_isomorphism = false;
        if (s_map[i] >= 0) hit[s_map[i]] = 1;
    }
    if ((int)lm.interval_elements.size() != lm.quotient_con.size()) lm.s_is_isomorphism = false;
    if (lm.s_is_isomorphism)
        for (size_t i = 0; i < lm.interval_elements.size() && lm.s_is_isomorphism; ++i)
            for (size_t j = 0; j < lm.interval_elements.size(); ++j) {
                bool a = conL.leq[lm.interval_elements[i]][lm.interval_elements[j]];
                bool b = lm.quotient_con.leq[s_map[i]][s_map[j]];
                if (a != b) {
                    lm.s_is_isomorphism = false;
                    break;
                }
            }

    // u(alpha) = (alpha v theta)/theta; triangle: u = s after v
    lm.triangle_commutes = true;
    std::vector<char> hitq(lm.quotient_con.size(), 0);
    for (int b : interval_boolean(conL, conL.bottom_index)) {
        int v = conL.join_table[b][theta];
        Partition img = push_congruence(q, conL.elements[v]);
        int uq = lm.quotient_con.index_of(img);
        assert(uq >= 0);
        hitq[uq] = 1;
        auto it = std::find(lm.interval_elements.begin(), lm.interval_elements.end(), v);
        if (it == lm.interval_elements.end() ||
            s_map[it - lm.interval_elements.begin()] != uq)
            lm.triangle_commutes = false;
    }
    for (int i = 0; i < lm.quotient_con.size(); ++i)
        if (hitq[i]) lm.u_image_boolean.push_back(i);
    return lm;
}

namespace {

int bitwords(int n) { return (n + 63) / 64; }

void set_bit(std::vector<uint64_t>& v, int i) { v[i >> 6] |= uint64_t(1) << (i & 63); }

bool subset(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

}  // namespace

SpecTopology spec_topology(const CongruenceLattice& conL) {
    SpecTopology t;
    Spectra s = spectra(conL);
    t.points = s.spec;
    int np = (int)t.points.size();
    int w = bitwords(np);
    for (int th = 0; th < conL.size(); ++th) {
        std::vector<uint64_t> open(w, 0);
        for (int p = 0; p < np; ++p)
            if (!conL.leq[th][t.points[p]]) set_bit(open, p);
        t.opens.push_back(std::move(open));
    }
    for (int a : interval_boolean(conL, conL.bottom_index)) {
        std::vector<uint64_t> clo(w, 0);
        for (int p = 0; p < np; ++p)
            if (conL.leq[a][t.points[p]]) set_bit(clo, p);
        t.clopens.push_back(std::move(clo));
    }
    return t;
}

bool is_strongly_zero_dimensional(const SpecTopology& t) {
    int np = (int)t.points.size();
    int w = bitwords(np);
    std::vector<uint64_t> full(w, 0);
    for (int p = 0; p < np; ++p) set_bit(full, p);
    for (const auto& u : t.opens)
        for (const auto& v : t.opens) {
            std::vector<uint64_t> uni(w, 0);
            for (int i = 0; i < w; ++i) uni[i] = u[i] | v[i];
            if (uni != full) continue;
            bool split = false;
            for (const auto& c : t.clopens) {
                if (split) break;
                if (!subset(c, u)) continue;
                for (const auto& d : t.clopens) {
                    bool disjoint = true, covering = true;
                    for (int i = 0; i < w; ++i) {
                        if (c[i] & d[i]) disjoint = false;
                        if ((c[i] | d[i]) != full[i]) covering = false;
                    }
                    if (disjoint && covering && subset(d, v)) {
                        split = true;
                        break;
                    }
                }
            }
            if (!split) return false;
        }
    return true;
}

StarReport satisfies_star(const CongruenceLattice& conL) {
    StarReport r;
    r.satisfied = true;
    Spectra s = spectra(conL);
    std::vector<int> booleans = interval_boolean(conL, conL.bottom_index);
    for (int t = 0; t < conL.size(); ++t) {
        StarDecomposition d;
        for (int a = 0; a < conL.size() && !d.holds; ++a) {
            if (!conL.leq[a][s.rad]) continue;
            for (int b : booleans)
                if (conL.join_table[a][b] == t) {
                    d.holds = true;
                    d.alpha = a;
                    d.beta = b;
                    break;
                }
        }
        if (!d.holds) r.satisfied = false;
        r.per_congruence.push_back(d);
    }
    return r;
}

namespace {

// Greedy Boolean refinement: splits target t (Boolean) as a disjoint join
// of Boolean elements below the phis. Greedily taking the greatest Boolean
// element below phi_1 ^ t is complete: any witness can be exchanged into
// the greedy one.
bool boolean_split(const CongruenceLattice& conL, const std::vector<int>& booleans,
                   const std::vector<int>& neg, const std::vector<int>& phis, size_t from, int t,
                   std::vector<int>* out) {
    int bottom = conL.bottom_index;
    if (from == phis.size()) return t == bottom;
    int best = bottom;
    for (size_t k = 0; k < booleans.size(); ++k) {
        int b = booleans[k];
        if (conL.leq[b][phis[from]] && conL.leq[b][t]) best = conL.join_table[best][b];
    }
    // best is Boolean (B is closed under join); remaining target: t ^ -best
    auto it = std::find(booleans.begin(), booleans.end(), best);
    assert(it != booleans.end());
    int rest = conL.meet_table[t][neg[it - booleans.begin()]];
    if (out) out->push_back(best);
    return boolean_split(conL, booleans, neg, phis, from + 1, rest, out);
}

}  // namespace

CblpEquivalents cblp_equivalents(const CongruenceLattice& conL, int max_arity) {
    CblpEquivalents e;
    FiniteLattice conLat = lattice_of_con(conL);
    if (!lattice_profile(conLat).is_distributive)
        throw std::invalid_argument("cblp_equivalents requires a distributive congruence lattice");

    e.cblp = algebra_has_cblp(conL).algebra_verdict;
    e.b_normal = normality_profile(conLat).b_normal;

    int m = conL.size();
    int top = conL.top_index, bottom = conL.bottom_index;
    std::vector<int> booleans = interval_boolean(conL, bottom);
    std::vector<int> neg(booleans.size(), -1);
    for (size_t i = 0; i < booleans.size(); ++i)
        for (int b : booleans)
            if (conL.meet_table[booleans[i]][b] == bottom &&
                conL.join_table[booleans[i]][b] == top) {
                neg[i] = b;
                break;
            }

    // least Boolean alpha with phi v alpha = nabla; candidates form a filter
    // of B(Con), so the meet of all of them is itself a candidate
    std::vector<int> least_split(m, -1);
    for (int phi = 0; phi < m; ++phi) {
        int acc = top;
        for (int b : booleans)
            if (conL.join_table[phi][b] == top) acc = conL.meet_table[acc][b];
        if (conL.join_table[phi][acc] == top) least_split[phi] = acc;
    }

    // binary compact pairs by direct witness search over B x B
    e.compact_pairs = true;
    for (int i = 0; i < m && e.compact_pairs; ++i)
        for (int j = 0; j < m; ++j) {
            if (conL.join_table[i][j] != top) continue;
            bool found = false;
            for (int a : booleans) {
                if (conL.join_table[i][a] != top) continue;
                for (int b : booleans)
                    if (conL.meet_table[a][b] == bottom && conL.join_table[j][b] == top) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) {
                e.compact_pairs = false;
                break;
            }
        }

    // n-ary versions over multisets (the conditions are symmetric)
    e.nary_splitting = true;
    e.nary_compact = true;
    std::vector<int> tuple;
    auto check_tuple = [&](const std::vector<int>& phis, int join) {
        if (join != top) return;
        if (e.nary_splitting) {
            int acc = top;
            for (int phi : phis) {
                if (least_split[phi] < 0) {
                    acc = -1;
                    break;
                }
                acc = conL.meet_table[acc][least_split[phi]];
            }
            if (acc != bottom) e.nary_splitting = false;
        }
        if (e.nary_compact) {
            std::vector<int> betas;
            if (!boolean_split(conL, booleans, neg, phis, 0, top, &betas)) {
                e.nary_compact = false;
            } else {
                // defensive verification of the constructed witnesses
                int join_b = bottom;
                for (size_t i = 0; i < betas.size(); ++i) {
                    assert(conL.leq[betas[i]][phis[i]]);
                    for (size_t j = i + 1; j < betas.size(); ++j)
                        assert(conL.meet_table[betas[i]][betas[j]] == bottom);
                    join_b = conL.join_table[join_b][betas[i]];
                }
                assert(join_b == top);
            }
        }
    };
    auto enumerate = [&](auto&& self, int start, int depth, int join) -> void {
        if (depth > 0) check_tuple(tuple, join);
        if (depth == max_arity) return;
        for (int i = start; i < m; ++i) {
            tuple.push_back(i);
            self(self, i, depth + 1, depth == 0 ? i : conL.join_table[join][i]);
            tuple.pop_back();
        }
    };
    enumerate(enumerate, 0, 0, bottom);

    e.strongly_zero_dimensional = is_strongly_zero_dimensional(spec_topology(conL));
    return e;
}

Decomposition semilocal_decompose(const CongruenceLattice& conL) {
    if (conL.algebra.n <= 1)
        throw std::invalid_argument("semilocal_decompose: trivial algebra");
    if (!is_arithmetical(conL))
        throw std::invalid_argument("semilocal_decompose: algebra is not arithmetical");
    Decomposition d;
    CblpReport rep = algebra_has_cblp(conL);
    if (!rep.algebra_verdict) {
        d.ok = false;
        d.failing = rep.failing.front();
        d.reason = "congruence without CBLP";
        return d;
    }
    Spectra s = spectra(conL);
    std::vector<int> booleans = interval_boolean(conL, conL.bottom_index);
    for (int phi : s.max) {
        int alpha = -1;
        for (int b : booleans)
            if (conL.join_table[b][s.rad] == phi) {
                alpha = b;
                break;
            }
        if (alpha < 0)
            throw std::logic_error("semilocal_decompose: maximal congruence not liftable");
        d.kernels.push_back(alpha);
    }
    // the kernels must meet to Delta and pairwise join to nabla
    int acc = conL.top_index;
    for (int a : d.kernels) acc = conL.meet_table[acc][a];
    if (acc != conL.bottom_index)
        throw std::logic_error("semilocal_decompose: kernels do not intersect to identity");
    for (size_t i = 0; i < d.kernels.size(); ++i)
        for (size_t j = i + 1; j < d.kernels.size(); ++j)
            if (conL.join_table[d.kernels[i]][d.kernels[j]] != conL.top_index)
                throw std::logic_error("semilocal_decompose: kernels are not pairwise co-maximal");
    for (int a : d.kernels) {
        QuotientMap q = quotient(conL.algebra, conL.elements[a]);
        CongruenceLattice ql = build_con_lattice(q.target);
        if (!is_local(ql)) throw std::logic_error("semilocal_decompose: factor is not local");
        d.factors.push_back(std::move(q));
    }
    // canonical map a -> (a/alpha_1, ..., a/alpha_k) is an isomorphism onto
    // the direct product: injective by the meet condition, surjective by
    // cardinality, and a homomorphism coordinatewise; verified explicitly
    std::vector<FiniteAlgebra> facs;
    for (const auto& q : d.factors) facs.push_back(q.target);
    FiniteAlgebra prod = product(facs);
    d.iso_verified = prod.n == conL.algebra.n;
    if (d.iso_verified) {
        ProductCodec codec = product_codec(facs);
        std::vector<int> mapv(conL.algebra.n);
        std::vector<char> hit(prod.n, 0);
        for (int x = 0; x < conL.algebra.n; ++x) {
            std::vector<int> tup;
            for (const auto& q : d.factors) tup.push_back(q.projection[x]);
            mapv[x] = codec.encode(tup);
            if (hit[mapv[x]]) d.iso_verified = false;
            hit[mapv[x]] = 1;
        }
        for (size_t oi = 0; oi < conL.algebra.ops.size() && d.iso_verified; ++oi) {
            const Operation& op = conL.algebra.ops[oi];
            const Operation& pop = prod.ops[oi];
            int k = op.arity;
            std::vector<int> args(k, 0), pargs(k, 0);
            long long len = 1;
            for (int i = 0; i < k; ++i) len *= conL.algebra.n;
            for (long long idx = 0; idx < len && d.iso_verified; ++idx) {
                long long rem = idx;
                for (int i = k - 1; i >= 0; --i) {
                    args[i] = (int)(rem % conL.algebra.n);
                    rem /= conL.algebra.n;
                }
                for (int i = 0; i < k; ++i) pargs[i] = mapv[args[i]];
                if (mapv[op.eval(args, conL.algebra.n)] != pop.eval(pargs, prod.n))
                    d.iso_verified = false;
            }
        }
    }
    if (!d.iso_verified)
        throw std::logic_error("semilocal_decompose: product reconstruction failed");
    d.ok = true;
    return d;
}

}  // namespace congrkit
