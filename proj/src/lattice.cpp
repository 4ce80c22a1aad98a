#include "congrkit/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

namespace congrkit {

namespace {

// least upper bound of {a,b} under leq, or -1
int lub(const std::vector<std::vector<char>>& leq, int n, int a, int b) {
    int best = -1;
    for (int c = 0; c < n; ++c) {
        if (!leq[a][c] || !leq[b][c]) continue;
        if (best < 0 || leq[c][best]) best = c;
    }
    if (best < 0) return -1;
    for (int c = 0; c < n; ++c)
        if (leq[a][c] && leq[b][c] && !leq[best][c]) return -1;  // incomparable upper bounds
    return best;
}

}  // namespace

FiniteLattice lattice_from_leq(const std::string& name, std::vector<std::string> labels,
                               std::vector<std::vector<char>> leq) {
    FiniteLattice l;
    l.name = name;
    l.n = (int)leq.size();
    if (l.n < 1) throw std::invalid_argument("lattice: empty carrier");
    l.labels = std::move(labels);
    if (l.labels.empty())
        for (int i = 0; i < l.n; ++i) l.labels.push_back(std::to_string(i));
    if ((int)l.labels.size() != l.n) throw std::invalid_argument("lattice: label count mismatch");
    l.leq = std::move(leq);
    for (int i = 0; i < l.n; ++i) {
        if (!l.leq[i][i]) throw std::invalid_argument("lattice: order not reflexive");
        for (int j = 0; j < l.n; ++j) {
            if (i != j && l.leq[i][j] && l.leq[j][i])
                throw std::invalid_argument("lattice: order not antisymmetric");
            for (int k = 0; k < l.n; ++k)
                if (l.leq[i][j] && l.leq[j][k] && !l.leq[i][k])
                    throw std::invalid_argument("lattice: order not transitive");
        }
    }
    l.join.assign(l.n, std::vector<int>(l.n, -1));
    l.meet.assign(l.n, std::vector<int>(l.n, -1));
    std::vector<std::vector<char>> geq(l.n, std::vector<char>(l.n, 0));
    for (int i = 0; i < l.n; ++i)
        for (int j = 0; j < l.n; ++j) geq[i][j] = l.leq[j][i];
    for (int i = 0; i < l.n; ++i)
        for (int j = 0; j < l.n; ++j) {
            l.join[i][j] = lub(l.leq, l.n, i, j);
            l.meet[i][j] = lub(geq, l.n, i, j);
            if (l.join[i][j] < 0 || l.meet[i][j] < 0)
                throw std::invalid_argument("lattice: missing join or meet of " + l.labels[i] +
                                            ", " + l.labels[j]);
        }
    l.bottom = 0;
    l.top = 0;
    for (int i = 0; i < l.n; ++i) {
        l.bottom = l.meet[l.bottom][i];
        l.top = l.join[l.top][i];
    }
    return l;
}

FiniteLattice lattice_from_covers(const std::string& name, int n, std::vector<std::string> labels,
                                  const std::vector<std::pair<int, int>>& covers) {
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) leq[i][i] = 1;
    for (auto [lo, hi] : covers) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n)
            throw std::invalid_argument("lattice: cover pair out of range");
        leq[lo][hi] = 1;
    }
    for (int k = 0; k < n; ++k)  // transitive closure
        for (int i = 0; i < n; ++i)
            if (leq[i][k])
                for (int j = 0; j < n; ++j)
                    if (leq[k][j]) leq[i][j] = 1;
    return lattice_from_leq(name, std::move(labels), std::move(leq));
}

FiniteLattice parse_lattice(const std::string& text) {
    // reuse the algebra tokenizer conventions: whitespace-separated, '#' comments
    std::istringstream in(text);
    std::vector<std::string> toks;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string t;
        while (ls >> t) toks.push_back(t);
    }
    size_t p = 0;
    auto next = [&]() -> std::string {
        if (p >= toks.size()) throw ParseError("lattice: unexpected end of input");
        return toks[p++];
    };
    if (next() != "lattice") throw ParseError("expected 'lattice NAME' header");
    std::string name = next();
    if (next() != "size") throw ParseError("expected 'size N'");
    int n = 0;
    try {
        n = std::stoi(next());
    } catch (const std::exception&) {
        throw ParseError("lattice: bad size");
    }
    if (n < 1) throw ParseError("lattice: size must be at least 1");
    std::vector<std::string> labels;
    if (p < toks.size() && toks[p] == "elements") {
        ++p;
        for (int i = 0; i < n; ++i) labels.push_back(next());
    } else {
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    auto elem = [&](const std::string& t) -> int {
        for (int i = 0; i < n; ++i)
            if (labels[i] == t) return i;
        try {
            int v = std::stoi(t);
            if (v >= 0 && v < n) return v;
        } catch (const std::exception&) {
        }
        throw ParseError("lattice: unknown element '" + t + "'");
    };
    std::string mode = next();
    if (mode == "leq") {
        std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::string t = next();
                if (t != "0" && t != "1") throw ParseError("lattice: leq entries must be 0/1");
                leq[i][j] = t == "1";
            }
        return lattice_from_leq(name, std::move(labels), std::move(leq));
    }
    if (mode == "covers") {
        std::vector<std::pair<int, int>> covers;
        while (p < toks.size()) {
            int lo = elem(next());
            int hi = elem(next());
            covers.emplace_back(lo, hi);
        }
        return lattice_from_covers(name, n, std::move(labels), covers);
    }
    throw ParseError("lattice: expected 'leq' or 'covers', got '" + mode + "'");
}

std::vector<std::pair<int, int>> hasse_edges(const FiniteLattice& l) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < l.n; ++a)
        for (int b = 0; b < l.n; ++b) {
            if (a == b || !l.le(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < l.n && cover; ++c)
                if (c != a && c != b && l.le(a, c) && l.le(c, b)) cover = false;
            if (cover) edges.emplace_back(a, b);
        }
    return edges;
}

std::string serialize_lattice(const FiniteLattice& l) {
    std::ostringstream out;
    out << "lattice " << l.name << "\n";
    out << "size " << l.n << "\n";
    out << "elements";
    for (const auto& s : l.labels) out << ' ' << s;
    out << "\n";
    out << "covers\n";
    for (auto [a, b] : hasse_edges(l)) out << l.labels[a] << ' ' << l.labels[b] << "\n";
    return out.str();
}

std::string lattice_to_dot(const FiniteLattice& l) {
    // heights give the ranks: longest chain distance from bottom
    std::vector<int> height(l.n, 0);
    auto edges = hasse_edges(l);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [a, b] : edges)
            if (height[b] < height[a] + 1) {
                height[b] = height[a] + 1;
                changed = true;
            }
    }
    int maxh = 0;
    for (int h : height) maxh = std::max(maxh, h);
    std::ostringstream out;
    out << "digraph \"" << l.name << "\" {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=plaintext];\n";
    for (int i = 0; i < l.n; ++i)
        out << "  e" << i << " [label=\"" << l.labels[i] << "\"];\n";
    for (int h = 0; h <= maxh; ++h) {
        std::vector<int> level;
        for (int i = 0; i < l.n; ++i)
            if (height[i] == h) level.push_back(i);
        if (level.empty()) continue;
        out << "  { rank=same;";
        for (int i : level) out << " e" << i << ";";
        out << " }\n";
    }
    for (auto [a, b] : edges) out << "  e" << a << " -> e" << b << ";\n";
    out << "}\n";
    return out.str();
}

FiniteLattice dual(const FiniteLattice& l) {
    FiniteLattice d = l;
    d.name = l.name + "_dual";
    for (int i = 0; i < l.n; ++i)
        for (int j = 0; j < l.n; ++j) d.leq[i][j] = l.leq[j][i];
    d.join = l.meet;
    d.meet = l.join;
    d.bottom = l.top;
    d.top = l.bottom;
    return d;
}

FiniteLattice interval(const FiniteLattice& l, int x, std::vector<int>* element_map) {
    std::vector<int> members;
    for (int y = 0; y < l.n; ++y)
        if (l.le(x, y)) members.push_back(y);
    std::vector<std::string> labels;
    for (int y : members) labels.push_back(l.labels[y]);
    int m = (int)members.size();
    std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) leq[i][j] = l.leq[members[i]][members[j]];
    if (element_map) *element_map = members;
    return lattice_from_leq(l.name + "_up_" + l.labels[x], std::move(labels), std::move(leq));
}

FiniteAlgebra lattice_algebra(const FiniteLattice& l) {
    FiniteAlgebra a;
    a.name = l.name;
    a.n = l.n;
    a.labels = l.labels;
    Operation jn{"join", 2, {}}, mt{"meet", 2, {}};
    jn.table.resize(l.n * l.n);
    mt.table.resize(l.n * l.n);
    for (int i = 0; i < l.n; ++i)
        for (int j = 0; j < l.n; ++j) {
            jn.table[i * l.n + j] = l.join[i][j];
            mt.table[i * l.n + j] = l.meet[i][j];
        }
    a.ops.push_back(std::move(jn));
    a.ops.push_back(std::move(mt));
    return a;
}

FiniteLattice algebra_lattice(const FiniteAlgebra& a) {
    int ji = a.op_index("join"), mi = a.op_index("meet");
    if (ji < 0 || mi < 0 || a.ops[ji].arity != 2 || a.ops[mi].arity != 2)
        throw std::invalid_argument("algebra has no binary join/meet operations");
    std::vector<std::vector<char>> leq(a.n, std::vector<char>(a.n, 0));
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y) leq[x][y] = a.ops[mi].table[x * a.n + y] == x;
    FiniteLattice l = lattice_from_leq(a.name, a.labels, std::move(leq));
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y)
            if (l.join[x][y] != a.ops[ji].table[x * a.n + y] ||
                l.meet[x][y] != a.ops[mi].table[x * a.n + y])
                throw std::invalid_argument("join/meet tables are not lattice operations");
    return l;
}

FiniteLattice lattice_of_con(const CongruenceLattice& conL) {
    FiniteLattice l;
    l.name = "Con_" + conL.algebra.name;
    l.n = conL.size();
    for (const Partition& p : conL.elements)
        l.labels.push_back(partition_to_string(p, conL.algebra.labels));
    l.leq.assign(l.n, std::vector<char>(l.n, 0));
    for (int i = 0; i < l.n; ++i)
        for (int j = 0; j < l.n; ++j) l.leq[i][j] = conL.leq[i][j];
    l.join = conL.join_table;
    l.meet = conL.meet_table;
    l.bottom = conL.bottom_index;
    l.top = conL.top_index;
    return l;
}

LatticeProfile lattice_profile(const FiniteLattice& l) {
    LatticeProfile p;
    p.is_distributive = true;
    p.is_modular = true;
    for (int x = 0; x < l.n && (p.is_distributive || p.is_modular); ++x)
        for (int y = 0; y < l.n; ++y)
            for (int z = 0; z < l.n; ++z) {
                if (l.mt(x, l.jn(y, z)) != l.jn(l.mt(x, y), l.mt(x, z))) p.is_distributive = false;
                if (l.le(x, z) && l.jn(x, l.mt(y, z)) != l.mt(l.jn(x, y), z)) p.is_modular = false;
            }
    BooleanCenter b = boolean_center(l);
    p.is_boolean = p.is_distributive && (int)b.elements.size() == l.n;
    return p;
}

BooleanCenter boolean_center(const FiniteLattice& l) {
    BooleanCenter b;
    for (int x = 0; x < l.n; ++x) {
        std::vector<int> comps;
        for (int y = 0; y < l.n; ++y)
            if (l.mt(x, y) == l.bottom && l.jn(x, y) == l.top) comps.push_back(y);
        if (!comps.empty()) {
            b.elements.push_back(x);
            b.complement.push_back(comps.front());
            if (comps.size() > 1) b.unique_complements = false;
        }
    }
    return b;
}

namespace {

bool normal_impl(const FiniteLattice& l, const std::vector<int>& pool) {
    for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y) {
            if (l.jn(x, y) != l.top) continue;
            bool found = false;
            for (int e : pool) {
                if (l.jn(x, e) != l.top) continue;
                for (int f : pool)
                    if (l.mt(e, f) == l.bottom && l.jn(y, f) == l.top) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) return false;
        }
    return true;
}

std::vector<int> everything(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

NormalityProfile normality_profile(const FiniteLattice& l) {
    if (!lattice_profile(l).is_distributive)
        throw std::invalid_argument("normality profile requires a distributive lattice");
    NormalityProfile p;
    p.normal = normal_impl(l, everything(l.n));
    p.b_normal = normal_impl(l, boolean_center(l).elements);
    FiniteLattice d = dual(l);
    p.conormal = normal_impl(d, everything(d.n));
    p.b_conormal = normal_impl(d, boolean_center(d).elements);
    return p;
}

bool id_local(const FiniteLattice& l) {
    for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y)
            if (l.jn(x, y) == l.top && x != l.top && y != l.top) return false;
    return true;
}

std::vector<int> rad_id(const FiniteLattice& l) {
    std::vector<int> out;
    for (int a = 0; a < l.n; ++a) {
        bool in = true;
        for (int x = 0; x < l.n && in; ++x)
            if (l.jn(a, x) == l.top && x != l.top) in = false;
        if (in) out.push_back(a);
    }
    return out;
}

bool is_filter(const FiniteLattice& l, const std::vector<int>& f) {
    if (f.empty()) return false;
    std::vector<char> in(l.n, 0);
    for (int x : f) in[x] = 1;
    for (int x : f) {
        for (int y = 0; y < l.n; ++y)
            if (l.le(x, y) && !in[y]) return false;
        for (int y : f)
            if (!in[l.mt(x, y)]) return false;
    }
    return true;
}

std::vector<std::vector<int>> all_filters(const FiniteLattice& l) {
    // every filter of a finite lattice is a principal up-set
    std::vector<std::vector<int>> out;
    for (int g = 0; g < l.n; ++g) {
        std::vector<int> f;
        for (int y = 0; y < l.n; ++y)
            if (l.le(g, y)) f.push_back(y);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<std::vector<int>> all_ideals(const FiniteLattice& l) {
    auto dl = dual(l);
    return all_filters(dl);  // same index sets, dual order
}

bool is_prime_filter(const FiniteLattice& l, const std::vector<int>& f) {
    std::vector<char> in(l.n, 0);
    for (int x : f) in[x] = 1;
    if (in[l.bottom]) return false;  // proper
    for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y)
            if (in[l.jn(x, y)] && !in[x] && !in[y]) return false;
    return true;
}

bool is_prime_ideal(const FiniteLattice& l, const std::vector<int>& i) {
    return is_prime_filter(dual(l), i);
}

std::vector<std::vector<int>> prime_filters(const FiniteLattice& l) {
    std::vector<std::vector<int>> out;
    for (const auto& f : all_filters(l))
        if (is_prime_filter(l, f)) out.push_back(f);
    return out;
}

std::vector<std::vector<int>> maximal_filters(const FiniteLattice& l) {
    auto fs = all_filters(l);
    std::vector<std::vector<int>> proper;
    for (const auto& f : fs)
        if ((int)f.size() < l.n) proper.push_back(f);
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

std::vector<std::vector<int>> prime_ideals(const FiniteLattice& l) { return prime_filters(dual(l)); }

std::vector<std::vector<int>> maximal_ideals(const FiniteLattice& l) {
    return maximal_filters(dual(l));
}

Partition filter_congruence(const FiniteLattice& l, const std::vector<int>& f) {
    if (!is_filter(l, f)) throw std::invalid_argument("filter_congruence: not a filter");
    int g = f.front();  // generator: the meet of all members
    for (int x : f) g = l.mt(g, x);
    std::vector<int> raw(l.n);
    for (int x = 0; x < l.n; ++x) raw[x] = l.mt(x, g);
    return Partition::from_raw(std::move(raw));
}

Partition ideal_congruence(const FiniteLattice& l, const std::vector<int>& i) {
    if (!is_filter(dual(l), i)) throw std::invalid_argument("ideal_congruence: not an ideal");
    int g = i.front();
    for (int x : i) g = l.jn(g, x);
    std::vector<int> raw(l.n);
    for (int x = 0; x < l.n; ++x) raw[x] = l.jn(x, g);
    return Partition::from_raw(std::move(raw));
}

FiniteLattice quotient_lattice(const FiniteLattice& l, const Partition& p) {
    QuotientMap q = quotient(lattice_algebra(l), p);
    return algebra_lattice(q.target);
}

namespace {

bool lattice_blp_along(const FiniteLattice& l, const Partition& p) {
    QuotientMap q = quotient(lattice_algebra(l), p);
    FiniteLattice lq = algebra_lattice(q.target);
    auto b_up = boolean_center(lq).elements;
    std::vector<char> lifted(lq.n, 0);
    for (int e : boolean_center(l).elements) lifted[q.projection[e]] = 1;
    for (int e : b_up)
        if (!lifted[e]) return false;
    return true;
}

}  // namespace

bool lattice_blp_filters(const FiniteLattice& l) {
    for (const auto& f : all_filters(l))
        if (!lattice_blp_along(l, filter_congruence(l, f))) return false;
    return true;
}

bool lattice_blp_ideals(const FiniteLattice& l) {
    for (const auto& i : all_ideals(l))
        if (!lattice_blp_along(l, ideal_congruence(l, i))) return false;
    return true;
}

}  // namespace congrkit
