#include "congrkit/congruence.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

namespace congrkit {

Partition Partition::identity(int n) {
    Partition p;
    p.block.resize(n);
    std::iota(p.block.begin(), p.block.end(), 0);
    p.num_blocks = n;
    return p;
}

Partition Partition::all(int n) {
    Partition p;
    p.block.assign(n, 0);
    p.num_blocks = n > 0 ? 1 : 0;
    return p;
}

Partition Partition::from_raw(std::vector<int> raw) {
    Partition p;
    p.block.assign(raw.size(), -1);
    std::vector<int> remap(raw.size(), -1);
    int next = 0;
    for (size_t i = 0; i < raw.size(); ++i) {
        // raw ids may be arbitrary ints >= 0 below raw.size()
        int r = raw[i];
        if (remap[r] < 0) remap[r] = next++;
        p.block[i] = remap[r];
    }
    p.num_blocks = next;
    return p;
}

bool Partition::refines(const Partition& coarser) const {
    assert(block.size() == coarser.block.size());
    // map each block of *this to the coarser block of its first member
    std::vector<int> img(num_blocks, -1);
    for (size_t i = 0; i < block.size(); ++i) {
        int b = block[i];
        if (img[b] < 0)
            img[b] = coarser.block[i];
        else if (img[b] != coarser.block[i])
            return false;
    }
    return true;
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(num_blocks);
    for (size_t i = 0; i < block.size(); ++i) out[block[i]].push_back((int)i);
    return out;
}

bool canonical_less(const Partition& a, const Partition& b) {
    if (a.num_blocks != b.num_blocks) return a.num_blocks > b.num_blocks;
    return a.block < b.block;
}

Partition meet(const Partition& a, const Partition& b) {
    assert(a.block.size() == b.block.size());
    int n = (int)a.block.size();
    std::vector<int> raw(n);
    std::vector<std::pair<int, int>> key(n);
    for (int i = 0; i < n; ++i) key[i] = {a.block[i], b.block[i]};
    // assign ids by first occurrence of the key pair
    for (int i = 0; i < n; ++i) {
        raw[i] = i;
        for (int j = 0; j < i; ++j)
            if (key[j] == key[i]) {
                raw[i] = raw[j];
                break;
            }
    }
    return Partition::from_raw(std::move(raw));
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // returns true if the classes were distinct
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
    Partition to_partition() {
        std::vector<int> raw(parent.size());
        for (size_t i = 0; i < parent.size(); ++i) raw[i] = find((int)i);
        // roots are arbitrary element indices; from_raw expects ids < n which holds
        return Partition::from_raw(std::move(raw));
    }
};

}  // namespace

Partition join_eq(const Partition& a, const Partition& b) {
    assert(a.block.size() == b.block.size());
    int n = (int)a.block.size();
    Dsu dsu(n);
    std::vector<int> first_a(a.num_blocks, -1), first_b(b.num_blocks, -1);
    for (int i = 0; i < n; ++i) {
        int& fa = first_a[a.block[i]];
        if (fa < 0)
            fa = i;
        else
            dsu.unite(fa, i);
        int& fb = first_b[b.block[i]];
        if (fb < 0)
            fb = i;
        else
            dsu.unite(fb, i);
    }
    return dsu.to_partition();
}

std::string partition_to_string(const Partition& p, const std::vector<std::string>& labels) {
    std::ostringstream out;
    auto bl = p.blocks();
    for (size_t b = 0; b < bl.size(); ++b) {
        if (b) out << '|';
        for (size_t k = 0; k < bl[b].size(); ++k) {
            if (k) out << ' ';
            out << labels[bl[b][k]];
        }
    }
    return out.str();
}

Partition parse_partition(const std::string& text, const FiniteAlgebra& a) {
    std::vector<int> raw(a.n, -1);
    int block_id = 0;
    std::string tok;
    auto take = [&](bool end_block) {
        if (!tok.empty()) {
            auto e = a.element_index(tok);
            if (!e) throw ParseError("unknown element in partition: '" + tok + "'");
            if (raw[*e] != -1) throw ParseError("element repeated in partition: '" + tok + "'");
            raw[*e] = block_id;
            tok.clear();
        }
        if (end_block) ++block_id;
    };
    for (char c : text) {
        if (c == '|')
            take(true);
        else if (c == ' ' || c == '\t')
            take(false);
        else
            tok += c;
    }
    take(true);
    for (int i = 0; i < a.n; ++i)
        if (raw[i] < 0)
            throw ParseError("partition misses element '" + a.labels[i] + "'");
    return Partition::from_raw(std::move(raw));
}

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
    // An equivalence is compatible iff it is closed under all one-coordinate
    // translations x -> op(c_1,..,x,..,c_k).
    int n = a.n;
    for (const Operation& op : a.ops) {
        int k = op.arity;
        if (k == 0) continue;
        std::vector<int> args(k, 0);
        for (int pos = 0; pos < k; ++pos) {
            // iterate over all assignments of the other coordinates
            std::vector<int> rest(k - 1, 0);
            std::vector<int> rep(p.num_blocks);
            while (true) {
                for (int i = 0, j = 0; i < k; ++i)
                    if (i != pos) args[i] = rest[j++];
                // related x must map to related images: record the image block
                // of each source block's first member and compare the rest
                rep.assign(p.num_blocks, -1);
                for (int x = 0; x < n; ++x) {
                    args[pos] = x;
                    int img = op.eval(args, n);
                    int b = p.block[x];
                    if (rep[b] < 0)
                        rep[b] = p.block[img];
                    else if (rep[b] != p.block[img])
                        return false;
                }
                int j = (int)rest.size() - 1;
                while (j >= 0 && rest[j] == n - 1) rest[j--] = 0;
                if (j < 0) break;
                ++rest[j];
            }
        }
    }
    return true;
}

Partition cg(const FiniteAlgebra& a, const std::vector<std::pair<int, int>>& pairs) {
    int n = a.n;
    for (auto [x, y] : pairs)
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw std::invalid_argument("cg: element out of range");
    Dsu dsu(n);
    std::vector<std::pair<int, int>> work;
    for (auto [x, y] : pairs)
        if (dsu.unite(x, y)) work.emplace_back(x, y);
    std::vector<int> args;
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        for (const Operation& op : a.ops) {
            int k = op.arity;
            if (k == 0) continue;
            args.assign(k, 0);
            for (int pos = 0; pos < k; ++pos) {
                std::vector<int> rest(k - 1, 0);
                while (true) {
                    for (int i = 0, j = 0; i < k; ++i)
                        if (i != pos) args[i] = rest[j++];
                    args[pos] = x;
                    int ix = op.eval(args, n);
                    args[pos] = y;
                    int iy = op.eval(args, n);
                    if (dsu.unite(ix, iy)) work.emplace_back(ix, iy);
                    int j = (int)rest.size() - 1;
                    while (j >= 0 && rest[j] == n - 1) rest[j--] = 0;
                    if (j < 0) break;
                    ++rest[j];
                }
            }
        }
    }
    return dsu.to_partition();
}

std::vector<Partition> con(const FiniteAlgebra& a) {
    int n = a.n;
    std::set<std::vector<int>> seen;
    std::vector<Partition> result;
    auto add = [&](const Partition& p) -> bool {
        if (seen.insert(p.block).second) {
            result.push_back(p);
            return true;
        }
        return false;
    };
    add(Partition::identity(n));
    std::vector<Partition> fresh;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            Partition p = cg(a, {{x, y}});
            if (add(p)) fresh.push_back(p);
        }
    // close under pairwise join; joins of congruences are congruences
    while (!fresh.empty()) {
        std::vector<Partition> next;
        for (const Partition& p : fresh)
            for (size_t i = 0; i < result.size(); ++i) {
                Partition j = join_eq(p, result[i]);
                if (add(j)) next.push_back(j);
            }
        fresh = std::move(next);
    }
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
}

std::vector<Partition> con_bruteforce(const FiniteAlgebra& a, int cap) {
    if (a.n > cap)
        throw std::invalid_argument("con_bruteforce: size " + std::to_string(a.n) +
                                    " exceeds cap " + std::to_string(cap));
    int n = a.n;
    std::vector<Partition> result;
    // restricted growth strings enumerate each set partition exactly once
    std::vector<int> rgs(n, 0);
    while (true) {
        Partition p = Partition::from_raw(rgs);
        if (is_congruence(a, p)) result.push_back(p);
        int i = n - 1;
        while (i > 0) {
            int maxv = 0;
            for (int j = 0; j < i; ++j) maxv = std::max(maxv, rgs[j]);
            if (rgs[i] <= maxv) break;
            --i;
        }
        if (i == 0) break;
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) rgs[j] = 0;
    }
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
}

int CongruenceLattice::index_of(const Partition& p) const {
    for (int i = 0; i < (int)elements.size(); ++i)
        if (elements[i] == p) return i;
    return -1;
}

CongruenceLattice build_con_lattice(const FiniteAlgebra& a) {
    CongruenceLattice L;
    L.algebra = a;
    L.elements = con(a);
    int m = (int)L.elements.size();
    L.leq.assign(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) L.leq[i][j] = L.elements[i].refines(L.elements[j]);
    L.join_table.assign(m, std::vector<int>(m, -1));
    L.meet_table.assign(m, std::vector<int>(m, -1));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            int ji = L.index_of(join_eq(L.elements[i], L.elements[j]));
            int mi = L.index_of(meet(L.elements[i], L.elements[j]));
            assert(ji >= 0 && mi >= 0);
            L.join_table[i][j] = L.join_table[j][i] = ji;
            L.meet_table[i][j] = L.meet_table[j][i] = mi;
        }
    L.bottom_index = L.index_of(Partition::identity(a.n));
    L.top_index = L.index_of(Partition::all(a.n));
    assert(L.bottom_index == 0 && L.top_index == m - 1);
    L.principal.assign(a.n * a.n, -1);
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y) {
            Partition p = x == y ? Partition::identity(a.n) : cg(a, {{x, y}});
            L.principal[x * a.n + y] = L.index_of(p);
        }
    return L;
}

bool hypothesis_h(const CongruenceLattice& conL) {
    // nabla must be a finite join of principal congruences
    Partition acc = Partition::identity(conL.algebra.n);
    for (int x = 0; x < conL.algebra.n; ++x)
        for (int y = x + 1; y < conL.algebra.n; ++y)
            acc = join_eq(acc, conL.elements[conL.principal_index(x, y)]);
    return acc == Partition::all(conL.algebra.n);
}

QuotientMap quotient(const FiniteAlgebra& a, const Partition& theta) {
    if ((int)theta.block.size() != a.n)
        throw std::invalid_argument("quotient: partition size mismatch");
    if (!is_congruence(a, theta))
        throw std::invalid_argument("quotient: partition is not a congruence");
    QuotientMap q;
    q.source = a;
    q.theta = theta;
    q.projection = theta.block;
    FiniteAlgebra& t = q.target;
    t.name = a.name + "_quo";
    t.n = theta.num_blocks;
    auto bl = theta.blocks();
    for (const auto& b : bl) {
        if (b.size() == 1) {
            t.labels.push_back(a.labels[b[0]]);
        } else {
            std::string lab = "{";
            for (size_t k = 0; k < b.size(); ++k) {
                if (k) lab += ",";
                lab += a.labels[b[k]];
            }
            lab += "}";
            t.labels.push_back(lab);
        }
    }
    std::vector<int> rep(t.n);
    for (int b = 0; b < t.n; ++b) rep[b] = bl[b][0];
    for (const Operation& op : a.ops) {
        Operation to;
        to.name = op.name;
        to.arity = op.arity;
        long long len = 1;
        for (int i = 0; i < op.arity; ++i) len *= t.n;
        to.table.resize(len);
        std::vector<int> args(op.arity), src_args(op.arity);
        for (long long idx = 0; idx < len; ++idx) {
            long long rem = idx;
            for (int k = op.arity - 1; k >= 0; --k) {
                args[k] = (int)(rem % t.n);
                rem /= t.n;
            }
            for (int k = 0; k < op.arity; ++k) src_args[k] = rep[args[k]];
            to.table[idx] = theta.block[op.eval(src_args, a.n)];
        }
        t.ops.push_back(std::move(to));
    }
    return q;
}

Partition push_congruence(const QuotientMap& q, const Partition& phi) {
    assert(q.theta.refines(phi));
    std::vector<int> raw(q.target.n, 0);
    for (int x = 0; x < q.source.n; ++x) raw[q.projection[x]] = phi.block[x];
    return Partition::from_raw(std::move(raw));
}

Partition pull_congruence(const QuotientMap& q, const Partition& psi) {
    std::vector<int> raw(q.source.n, 0);
    for (int x = 0; x < q.source.n; ++x) raw[x] = psi.block[q.projection[x]];
    return Partition::from_raw(std::move(raw));
}

Partition product_congruence(const ProductCodec& codec, const std::vector<Partition>& thetas) {
    if (thetas.size() != codec.sizes.size())
        throw std::invalid_argument("product_congruence: dimension mismatch");
    int n = codec.total();
    std::vector<int> raw(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> t = codec.decode(i);
        // mixed-radix over block ids keys each tuple of blocks uniquely
        int key = 0;
        for (size_t k = 0; k < thetas.size(); ++k) key = key * codec.sizes[k] + thetas[k].block[t[k]];
        raw[i] = key;
    }
    // keys may exceed n-1? no: block ids < size_k, so key < total
    return Partition::from_raw(std::move(raw));
}

Partition project_congruence(const ProductCodec& codec, const Partition& theta, int factor) {
    int nf = codec.sizes[factor];
    // pr_i(theta) = {(a,b) : exists tuples related by theta with i-th coords a,b}
    std::vector<int> raw(nf);
    std::iota(raw.begin(), raw.end(), 0);
    Dsu dsu(nf);
    int n = codec.total();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (theta.related(i, j)) dsu.unite(codec.decode(i)[factor], codec.decode(j)[factor]);
    return dsu.to_partition();
}

bool is_congruence_distributive(const CongruenceLattice& conL) {
    int m = conL.size();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                int lhs = conL.meet_table[i][conL.join_table[j][k]];
                int rhs = conL.join_table[conL.meet_table[i][j]][conL.meet_table[i][k]];
                if (lhs != rhs) return false;
            }
    return true;
}

bool is_congruence_permutable(const CongruenceLattice& conL) {
    int n = conL.algebra.n;
    int m = conL.size();
    auto compose = [&](const Partition& p, const Partition& q) {
        std::vector<char> rel(n * n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (p.related(a, b))
                    for (int c = 0; c < n; ++c)
                        if (q.related(b, c)) rel[a * n + c] = 1;
        return rel;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (compose(conL.elements[i], conL.elements[j]) !=
                compose(conL.elements[j], conL.elements[i]))
                return false;
    return true;
}

bool is_arithmetical(const CongruenceLattice& conL) {
    return is_congruence_distributive(conL) && is_congruence_permutable(conL);
}

CrtResult crt_solve(const CongruenceLattice& conL, const std::vector<int>& theta_indices,
                    const std::vector<int>& targets) {
    if (theta_indices.size() != targets.size())
        throw std::invalid_argument("crt_solve: length mismatch");
    CrtResult r;
    r.compatible = true;
    for (size_t i = 0; i < theta_indices.size() && r.compatible; ++i)
        for (size_t j = i + 1; j < theta_indices.size(); ++j) {
            int jidx = conL.join_table[theta_indices[i]][theta_indices[j]];
            if (!conL.elements[jidx].related(targets[i], targets[j])) {
                r.compatible = false;
                break;
            }
        }
    if (!r.compatible) return r;
    for (int a = 0; a < conL.algebra.n; ++a) {
        bool ok = true;
        for (size_t i = 0; i < theta_indices.size() && ok; ++i)
            ok = conL.elements[theta_indices[i]].related(a, targets[i]);
        if (ok) {
            r.witness = a;
            break;
        }
    }
    return r;
}

}  // namespace congrkit
