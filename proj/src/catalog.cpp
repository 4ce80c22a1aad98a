#include "congrkit/catalog.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "congrkit/reslat.hpp"

namespace congrkit {

namespace {

FiniteLattice l2_lattice() {
    return lattice_from_covers("l2", 2, {"0", "1"}, {{0, 1}});
}

FiniteLattice diamond_lattice() {
    return lattice_from_covers("diamond", 5, {"0", "a", "b", "c", "1"},
                               {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FiniteLattice pentagon_lattice() {
    // 0 < x < 1 and 0 < y < z < 1
    return lattice_from_covers("pentagon", 5, {"0", "x", "y", "z", "1"},
                               {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}});
}

FiniteLattice lattice_e_lattice() {
    // atoms a, c join straight to the top; 0 < b < d < 1
    return lattice_from_covers("lattice_e", 6, {"0", "a", "b", "c", "d", "1"},
                               {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {1, 5}, {3, 5}, {4, 5}});
}

FiniteLattice lattice_z_lattice() {
    // pentagon with a new top stacked above its unit
    return lattice_from_covers("lattice_z", 6, {"0", "x", "y", "z", "u", "1"},
                               {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}, {4, 5}});
}

FiniteLattice chain_lattice(int n) {
    std::vector<std::string> labels;
    labels.push_back("0");
    for (int i = 1; i + 1 < n; ++i) labels.push_back("a" + std::to_string(i));
    labels.push_back("1");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.push_back({i, i + 1});
    return lattice_from_covers("chain_" + std::to_string(n), n, std::move(labels), covers);
}

FiniteAlgebra residuated_a_algebra() {
    FiniteLattice carrier =
        lattice_from_covers("residuated_a", 5, {"0", "a", "b", "c", "1"},
                            {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
    FiniteAlgebra alg = lattice_algebra(carrier);
    alg.name = "residuated_a";
    Operation prod;
    prod.name = "prod";
    prod.arity = 2;
    prod.table = alg.ops[alg.op_index("meet")].table;
    alg.ops.push_back(std::move(prod));
    Operation imp;
    imp.name = "imp";
    imp.arity = 2;
    imp.table = {
        4, 4, 4, 4, 4,  // 0 -> .
        2, 4, 2, 4, 4,  // a -> .
        1, 1, 4, 4, 4,  // b -> .
        0, 1, 2, 4, 4,  // c -> .
        0, 1, 2, 3, 4,  // 1 -> .
    };
    alg.ops.push_back(std::move(imp));
    alg.ops.push_back(Operation{"zero", 0, {0}});
    alg.ops.push_back(Operation{"one", 0, {4}});
    return alg;
}

std::string delta_string(const FiniteAlgebra& a) {
    std::string s;
    for (int i = 0; i < a.n; ++i) {
        if (i) s += "|";
        s += a.labels[i];
    }
    return s;
}

bool parse_param(const std::string& key, const std::string& prefix, int* out) {
    if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0) return false;
    int v = 0;
    for (size_t i = prefix.size(); i < key.size(); ++i) {
        if (!isdigit((unsigned char)key[i])) return false;
        v = v * 10 + (key[i] - '0');
        if (v > 1000000) return false;
    }
    *out = v;
    return true;
}

}  // namespace

std::vector<std::string> catalog_keys() {
    return {"diamond", "pentagon", "lattice_e", "lattice_z",  "l2",
            "residuated_a", "chain_3", "chain_4", "boolean_2", "boolean_3"};
}

Fixture fixture(const std::string& key) {
    Fixture f;
    f.key = key;
    if (key == "diamond") {
        f.algebra = lattice_algebra(diamond_lattice());
        f.expected.congruence_count = 2;
        f.expected.boolean_center_size = 2;
        f.expected.cblp = true;
        f.expected.star = true;
        f.expected.max_count = 1;
        f.expected.rad = "0|a|b|c|1";
        f.expected.note = "simple modular non-distributive lattice";
        return f;
    }
    if (key == "pentagon") {
        f.algebra = lattice_algebra(pentagon_lattice());
        f.expected.congruence_count = 5;
        f.expected.boolean_center_size = 2;
        f.expected.cblp = false;
        f.expected.star = false;
        f.expected.cblp_failures = {"0|x|y z|1"};
        f.expected.max_count = 2;
        f.expected.rad = "0|x|y z|1";
        f.expected.note = "the radical congruence itself has no Boolean lift";
        return f;
    }
    if (key == "lattice_e") {
        f.algebra = lattice_algebra(lattice_e_lattice());
        f.expected.congruence_count = 3;
        f.expected.boolean_center_size = 2;
        f.expected.cblp = true;
        f.expected.star = true;
        f.expected.max_count = 1;
        f.expected.rad = "0|a|b d|c|1";
        f.expected.note = "local; quotient by the radical is the diamond";
        return f;
    }
    if (key == "lattice_z") {
        f.algebra = lattice_algebra(lattice_z_lattice());
        f.expected.congruence_count = 10;
        f.expected.boolean_center_size = 4;
        f.expected.cblp = false;
        f.expected.star = false;
        f.expected.cblp_failures = {"0|x|y z|u|1", "0|x|y z|u 1"};
        f.expected.max_count = 3;
        f.expected.rad = "0|x|y z|u|1";
        f.expected.note = "lifting fails at the radical and at its join with the top factor "
                          "collapse";
        return f;
    }
    if (key == "l2") {
        f.algebra = lattice_algebra(l2_lattice());
        f.expected.congruence_count = 2;
        f.expected.boolean_center_size = 2;
        f.expected.cblp = true;
        f.expected.star = true;
        f.expected.max_count = 1;
        f.expected.rad = "0|1";
        return f;
    }
    if (key == "residuated_a") {
        f.algebra = residuated_a_algebra();
        f.residuated = true;
        f.expected.congruence_count = 5;
        f.expected.boolean_center_size = 2;
        f.expected.cblp = false;
        f.expected.star = false;
        f.expected.cblp_failures = {"0|a|b|c 1"};
        f.expected.blp_failures = {"[c)"};
        f.expected.max_count = 2;
        f.expected.rad = "0|a|b|c 1";
        f.expected.godel = true;
        f.expected.bl = false;
        f.expected.mv = false;
        f.expected.gelfand = false;
        f.expected.reticulation_iso_carrier = true;
        f.expected.note =
            "idempotent product; the one-element filter sits below two maximal filters, "
            "so the unique-maximal test reports false";
        return f;
    }
    int n = 0;
    if (parse_param(key, "chain_", &n)) {
        if (n < 2 || n > 20) throw std::invalid_argument("fixture: chain_N wants 2 <= N <= 20");
        f.algebra = lattice_algebra(chain_lattice(n));
        f.expected.congruence_count = 1 << (n - 1);
        f.expected.boolean_center_size = 1 << (n - 1);
        f.expected.cblp = true;
        f.expected.star = true;
        f.expected.max_count = n - 1;
        f.expected.rad = delta_string(f.algebra);
        f.expected.note = "interval collapses are exactly the congruences";
        return f;
    }
    if (parse_param(key, "boolean_", &n)) {
        if (n < 1 || n > 6) throw std::invalid_argument("fixture: boolean_K wants 1 <= K <= 6");
        std::vector<FiniteAlgebra> copies(n, lattice_algebra(l2_lattice()));
        f.algebra = product(copies);
        f.algebra.name = key;
        f.expected.congruence_count = 1 << n;
        f.expected.boolean_center_size = 1 << n;
        f.expected.cblp = true;
        f.expected.star = true;
        f.expected.max_count = n;
        f.expected.rad = delta_string(f.algebra);
        f.expected.note = "factor collapses are exactly the congruences";
        return f;
    }
    throw std::invalid_argument("fixture: unknown key " + key);
}

FiniteLattice ordinal_sum(const FiniteLattice& l, const FiniteLattice& m) {
    int n = l.n + m.n - 1;
    std::vector<std::string> labels = l.labels;
    std::set<std::string> used(labels.begin(), labels.end());
    std::vector<int> mmap(m.n, -1);  // m element -> sum element
    mmap[m.bottom] = l.top;
    for (int j = 0; j < m.n; ++j) {
        if (j == m.bottom) continue;
        std::string lab = m.labels[j];
        while (used.count(lab)) lab += "'";
        used.insert(lab);
        mmap[j] = (int)labels.size();
        labels.push_back(lab);
    }
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (int i = 0; i < l.n; ++i)
        for (int j = 0; j < l.n; ++j) leq[i][j] = l.leq[i][j];
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.leq[i][j]) leq[mmap[i]][mmap[j]] = 1;
    for (int i = 0; i < l.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (j != m.bottom) leq[i][mmap[j]] = 1;
    return lattice_from_leq(l.name + "+" + m.name, std::move(labels), std::move(leq));
}

Partition ordinal_sum_congruence(const FiniteLattice& l, const FiniteLattice& m,
                                 const Partition& phi, const Partition& psi) {
    int n = l.n + m.n - 1;
    std::vector<int> raw(n, -1);
    for (int i = 0; i < l.n; ++i) raw[i] = phi.block[i];
    // dense ids above phi's keep every id below n, as from_raw requires
    std::vector<int> remap(psi.num_blocks, -1);
    int next = phi.num_blocks;
    int idx = l.n;
    for (int j = 0; j < m.n; ++j) {
        if (j == m.bottom) continue;
        if (psi.related(j, m.bottom)) {
            raw[idx++] = phi.block[l.top];
        } else {
            int& r = remap[psi.block[j]];
            if (r < 0) r = next++;
            raw[idx++] = r;
        }
    }
    return Partition::from_raw(std::move(raw));
}

namespace {

// natural-order-compatible lattice orders: bottom 0, top n-1, free bits on
// the mid pairs, kept only when already transitive and with all joins/meets
std::vector<FiniteLattice> lattices_on(int n, const std::string& stem) {
    std::vector<FiniteLattice> out;
    if (n == 1) return out;  // bounded lattices here have distinct bounds
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i + 1 < n; ++i)
        for (int j = i + 1; j + 1 < n; ++j) pairs.push_back({i, j});
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    for (uint64_t mask = 0; mask < (uint64_t(1) << pairs.size()); ++mask) {
        std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i) {
            leq[i][i] = 1;
            leq[0][i] = 1;
            leq[i][n - 1] = 1;
        }
        for (size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1) leq[pairs[k].first][pairs[k].second] = 1;
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            for (int j = 0; j < n && transitive; ++j)
                for (int k = 0; k < n; ++k)
                    if (leq[i][j] && leq[j][k] && !leq[i][k]) {
                        transitive = false;
                        break;
                    }
        if (!transitive) continue;
        try {
            out.push_back(lattice_from_leq(stem + std::to_string(out.size()), labels, leq));
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

// every residuated product/residuum pair over a fixed lattice
std::vector<FiniteAlgebra> residuated_on(const FiniteLattice& l, const std::string& stem) {
    std::vector<FiniteAlgebra> out;
    int n = l.n;
    std::vector<std::pair<int, int>> slots;  // i <= j, both strictly inside
    for (int i = 1; i + 1 < n; ++i)
        for (int j = i; j + 1 < n; ++j) slots.push_back({i, j});
    std::vector<int> choice(slots.size(), 0);
    FiniteAlgebra base = lattice_algebra(l);
    while (true) {
        std::vector<int> prod(n * n, 0);
        for (int x = 0; x < n; ++x) {
            prod[x * n + (n - 1)] = prod[(n - 1) * n + x] = x;  // unit
            prod[x * n + 0] = prod[0 * n + x] = 0;              // annihilator
        }
        bool in_range = true;
        for (size_t s = 0; s < slots.size() && in_range; ++s) {
            auto [i, j] = slots[s];
            int v = choice[s];
            if (!l.le(v, l.mt(i, j))) in_range = false;
            prod[i * n + j] = prod[j * n + i] = v;
        }
        if (in_range) {
            bool ok = true;
            for (int x = 0; x < n && ok; ++x)
                for (int y = 0; y < n && ok; ++y)
                    for (int z = 0; z < n; ++z)
                        if (prod[prod[x * n + y] * n + z] != prod[x * n + prod[y * n + z]]) {
                            ok = false;
                            break;
                        }
            std::vector<int> imp(n * n, -1);
            for (int y = 0; y < n && ok; ++y)
                for (int z = 0; z < n; ++z) {
                    int acc = -1;
                    for (int x = 0; x < n; ++x)
                        if (l.le(prod[x * n + y], z)) acc = acc < 0 ? x : l.jn(acc, x);
                    if (acc < 0 || !l.le(prod[acc * n + y], z)) {
                        ok = false;
                        break;
                    }
                    imp[y * n + z] = acc;
                }
            if (ok) {
                FiniteAlgebra a = base;
                a.name = stem + std::to_string(out.size());
                a.ops.push_back(Operation{"prod", 2, prod});
                a.ops.push_back(Operation{"imp", 2, imp});
                a.ops.push_back(Operation{"zero", 0, {l.bottom}});
                a.ops.push_back(Operation{"one", 0, {l.top}});
                try {
                    validate_residuated(a);
                    out.push_back(std::move(a));
                } catch (const std::invalid_argument&) {
                }
            }
        }
        // next choice vector (odometer)
        size_t s = 0;
        while (s < slots.size()) {
            if (++choice[s] < n) break;
            choice[s] = 0;
            ++s;
        }
        if (s == slots.size()) break;
    }
    return out;
}

}  // namespace

std::vector<FiniteLattice> all_lattices(int n) {
    if (n < 2 || n > 7) throw std::invalid_argument("all_lattices: size must be in [2, 7]");
    return lattices_on(n, "lat" + std::to_string(n) + "_");
}

std::vector<FiniteAlgebra> all_residuated(int n) {
    if (n < 2 || n > 5) throw std::invalid_argument("all_residuated: size must be in [2, 5]");
    std::vector<FiniteAlgebra> out;
    for (const FiniteLattice& l : all_lattices(n)) {
        std::vector<FiniteAlgebra> r =
            residuated_on(l, "res" + std::to_string(n) + "_" + l.name + "_");
        for (auto& a : r) out.push_back(std::move(a));
    }
    for (size_t i = 0; i < out.size(); ++i)
        out[i].name = "res" + std::to_string(n) + "_" + std::to_string(i);
    return out;
}

std::vector<FiniteAlgebra> random_algebras(const std::string& signature, int size, int count,
                                           uint64_t seed) {
    bool residuated = signature == "residuated";
    if (!residuated && signature != "lattice")
        throw std::invalid_argument("random_algebras: signature must be lattice or residuated");
    if (residuated && (size < 2 || size > 5))
        throw std::invalid_argument("random_algebras: residuated size must be in [2, 5]");
    if (!residuated && (size < 2 || size > 6))
        throw std::invalid_argument("random_algebras: lattice size must be in [2, 6]");
    std::mt19937_64 rng(seed);
    std::vector<FiniteAlgebra> out;
    int guard = 0;
    while ((int)out.size() < count) {
        if (++guard > 100000)
            throw std::logic_error("random_algebras: generation did not converge");
        // random mid-order aligned with the element numbering, then close
        std::vector<std::vector<char>> leq(size, std::vector<char>(size, 0));
        for (int i = 0; i < size; ++i) {
            leq[i][i] = 1;
            leq[0][i] = 1;
            leq[i][size - 1] = 1;
        }
        for (int i = 1; i + 1 < size; ++i)
            for (int j = i + 1; j + 1 < size; ++j)
                if (rng() % 3 == 0) leq[i][j] = 1;
        for (int k = 0; k < size; ++k)
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j)
                    if (leq[i][k] && leq[k][j]) leq[i][j] = 1;
        FiniteLattice l;
        try {
            std::vector<std::string> labels;
            for (int i = 0; i < size; ++i) labels.push_back(std::to_string(i));
            l = lattice_from_leq("r" + std::to_string(out.size()), std::move(labels),
                                 std::move(leq));
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (!residuated) {
            FiniteAlgebra a = lattice_algebra(l);
            a.name = "random_lattice_" + std::to_string(out.size());
            out.push_back(std::move(a));
            continue;
        }
        std::vector<FiniteAlgebra> candidates = residuated_on(l, "t");
        if (candidates.empty()) continue;
        FiniteAlgebra a = candidates[rng() % candidates.size()];
        a.name = "random_residuated_" + std::to_string(out.size());
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace congrkit
