#include "congrkit/iso.hpp"

#include <algorithm>

namespace congrkit {

namespace {

// invariant per element: multiset of (op, result-is-self) for unary slices of
// each operation where the element appears on the diagonal, plus in/out
// degrees in each binary operation's "row image" profile. Cheap and effective
// at pruning for the small algebras in scope.
std::vector<long long> invariants(const FiniteAlgebra& a) {
    std::vector<long long> inv(a.n, 0);
    long long mul = 1;
    for (const Operation& op : a.ops) {
        if (op.arity == 0) {
            inv[op.table[0]] += mul;
        } else if (op.arity == 1) {
            for (int x = 0; x < a.n; ++x)
                if (op.table[x] == x) inv[x] += mul;
        } else if (op.arity == 2) {
            for (int x = 0; x < a.n; ++x) {
                long long idem = (op.table[x * a.n + x] == x) ? 1 : 0;
                long long row = 0, col = 0;
                for (int y = 0; y < a.n; ++y) {
                    if (op.table[x * a.n + y] == x) ++row;
                    if (op.table[y * a.n + x] == x) ++col;
                }
                inv[x] += mul * (idem + 3 * row + 5 * col);
            }
        }
        mul *= 131;
    }
    return inv;
}

bool compatible_so_far(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<int>& map,
                       int placed) {
    // check all op instances whose arguments are already mapped
    for (size_t oi = 0; oi < a.ops.size(); ++oi) {
        const Operation& fa = a.ops[oi];
        const Operation& fb = b.ops[oi];
        int k = fa.arity;
        std::vector<int> args(k, 0);
        long long len = 1;
        for (int i = 0; i < k; ++i) len *= a.n;
        for (long long idx = 0; idx < len; ++idx) {
            long long rem = idx;
            bool ready = true;
            for (int i = k - 1; i >= 0; --i) {
                args[i] = (int)(rem % a.n);
                rem /= a.n;
                if (map[args[i]] < 0) ready = false;
            }
            if (!ready) continue;
            int ra = fa.eval(args, a.n);
            if (map[ra] < 0) {
                if (ra >= placed) continue;  // will be checked once mapped
                return false;
            }
            std::vector<int> bargs(k);
            for (int i = 0; i < k; ++i) bargs[i] = map[args[i]];
            if (fb.eval(bargs, b.n) != map[ra]) return false;
        }
    }
    return true;
}

bool extend(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<long long>& ia,
            const std::vector<long long>& ib, std::vector<int>& map, std::vector<char>& used,
            int next) {
    if (next == a.n) return true;
    for (int cand = 0; cand < b.n; ++cand) {
        if (used[cand] || ia[next] != ib[cand]) continue;
        map[next] = cand;
        used[cand] = 1;
        if (compatible_so_far(a, b, map, next + 1) &&
            extend(a, b, ia, ib, map, used, next + 1))
            return true;
        map[next] = -1;
        used[cand] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                                 int cap) {
    if (a.n != b.n) return std::nullopt;
    if (a.ops.size() != b.ops.size()) return std::nullopt;
    for (size_t i = 0; i < a.ops.size(); ++i)
        if (a.ops[i].arity != b.ops[i].arity || a.ops[i].name != b.ops[i].name)
            return std::nullopt;
    if (a.n > cap) throw std::invalid_argument("find_isomorphism: algebra exceeds size cap");
    std::vector<long long> ia = invariants(a), ib = invariants(b);
    {
        std::vector<long long> sa = ia, sb = ib;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::vector<int> map(a.n, -1);
    std::vector<char> used(b.n, 0);
    if (extend(a, b, ia, ib, map, used, 0)) return map;
    return std::nullopt;
}

bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b, int cap) {
    return find_isomorphism(a, b, cap).has_value();
}

bool lattices_isomorphic(const FiniteLattice& a, const FiniteLattice& b, int cap) {
    return isomorphic(lattice_algebra(a), lattice_algebra(b), cap);
}

}  // namespace congrkit
