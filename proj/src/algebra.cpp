#include "congrkit/algebra.hpp"

#include <cassert>
#include <set>
#include <sstream>

namespace congrkit {

int Operation::eval(const std::vector<int>& args, int n) const {
    assert((int)args.size() == arity);
    int idx = 0;
    for (int a : args) idx = idx * n + a;
    return table[idx];
}

int FiniteAlgebra::op_index(const std::string& op_name) const {
    for (int i = 0; i < (int)ops.size(); ++i)
        if (ops[i].name == op_name) return i;
    return -1;
}

std::optional<int> FiniteAlgebra::element_index(const std::string& label) const {
    for (int i = 0; i < n; ++i)
        if (labels[i] == label) return i;
    return std::nullopt;
}

static long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<std::string> validate_algebra(const FiniteAlgebra& a) {
    std::vector<std::string> problems;
    if (a.n < 1) problems.push_back("size must be at least 1");
    if ((int)a.labels.size() != a.n) problems.push_back("label count differs from size");
    std::set<std::string> label_set(a.labels.begin(), a.labels.end());
    if ((int)label_set.size() != (int)a.labels.size()) problems.push_back("duplicate element label");
    std::set<std::string> seen;
    for (const Operation& op : a.ops) {
        if (!seen.insert(op.name).second)
            problems.push_back("duplicate op name: " + op.name);
        if (op.arity < 0) {
            problems.push_back("op " + op.name + ": negative arity");
            continue;
        }
        long long want = ipow(a.n, op.arity);
        if ((long long)op.table.size() != want) {
            problems.push_back("op " + op.name + ": wrong table length");
            continue;
        }
        for (size_t i = 0; i < op.table.size(); ++i)
            if (op.table[i] < 0 || op.table[i] >= a.n) {
                problems.push_back("op " + op.name + ": entry out of range at index " +
                                   std::to_string(i));
                break;
            }
    }
    return problems;
}

namespace {

struct Tokenizer {
    std::vector<std::pair<std::string, int>> tokens;  // token, line number
    size_t pos = 0;

    explicit Tokenizer(const std::string& text) {
        int line = 1;
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) {
                tokens.emplace_back(cur, line);
                cur.clear();
            }
        };
        for (size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c == '#') {
                flush();
                while (i < text.size() && text[i] != '\n') ++i;
                ++line;
            } else if (c == '\n') {
                flush();
                ++line;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                flush();
            } else {
                cur += c;
            }
        }
        flush();
    }

    bool done() const { return pos >= tokens.size(); }
    const std::string& peek() const { return tokens[pos].first; }
    int line() const { return pos < tokens.size() ? tokens[pos].second : -1; }
    std::string next() {
        if (done()) throw ParseError("unexpected end of input");
        return tokens[pos++].first;
    }
};

int parse_int(const std::string& tok, int line, const char* what) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": expected " + what + ", got '" + tok +
                         "'");
    }
}

}  // namespace

FiniteAlgebra parse_algebra(const std::string& text) {
    Tokenizer tz(text);
    FiniteAlgebra a;
    if (tz.done() || tz.next() != "algebra")
        throw ParseError("expected 'algebra NAME' header");
    a.name = tz.next();
    if (tz.done() || tz.next() != "size") throw ParseError("expected 'size N'");
    a.n = parse_int(tz.next(), tz.line(), "size");
    if (a.n < 1) throw ParseError("size must be at least 1");
    if (!tz.done() && tz.peek() == "elements") {
        tz.next();
        for (int i = 0; i < a.n; ++i) a.labels.push_back(tz.next());
    } else {
        for (int i = 0; i < a.n; ++i) a.labels.push_back(std::to_string(i));
    }
    auto entry = [&](const std::string& tok, int line) -> int {
        if (auto e = a.element_index(tok)) return *e;
        int v = parse_int(tok, line, "element");
        if (v < 0 || v >= a.n)
            throw ParseError("line " + std::to_string(line) + ": entry out of range: " + tok);
        return v;
    };
    while (!tz.done()) {
        std::string kw = tz.next();
        if (kw != "op")
            throw ParseError("line " + std::to_string(tz.line()) + ": expected 'op', got '" + kw +
                             "'");
        Operation op;
        op.name = tz.next();
        op.arity = parse_int(tz.next(), tz.line(), "arity");
        if (op.arity < 0) throw ParseError("negative arity for op " + op.name);
        long long len = ipow(a.n, op.arity);
        op.table.reserve(len);
        for (long long i = 0; i < len; ++i) {
            int line = tz.line();
            op.table.push_back(entry(tz.next(), line));
        }
        a.ops.push_back(std::move(op));
    }
    auto problems = validate_algebra(a);
    if (!problems.empty()) throw ParseError(problems.front());
    return a;
}

std::string serialize_algebra(const FiniteAlgebra& a) {
    std::ostringstream out;
    out << "algebra " << a.name << "\n";
    out << "size " << a.n << "\n";
    out << "elements";
    for (const auto& l : a.labels) out << ' ' << l;
    out << "\n";
    for (const Operation& op : a.ops) {
        out << "op " << op.name << ' ' << op.arity << "\n";
        if (op.arity == 0) {
            out << a.labels[op.table[0]] << "\n";
            continue;
        }
        long long rows = ipow(a.n, op.arity - 1);
        for (long long r = 0; r < rows; ++r) {
            for (int c = 0; c < a.n; ++c) {
                if (c) out << ' ';
                out << a.labels[op.table[r * a.n + c]];
            }
            out << "\n";
        }
    }
    return out.str();
}

int ProductCodec::total() const {
    int t = 1;
    for (int s : sizes) t *= s;
    return t;
}

int ProductCodec::encode(const std::vector<int>& tuple) const {
    assert(tuple.size() == sizes.size());
    int idx = 0;
    for (size_t i = 0; i < sizes.size(); ++i) idx = idx * sizes[i] + tuple[i];
    return idx;
}

std::vector<int> ProductCodec::decode(int index) const {
    std::vector<int> tuple(sizes.size());
    for (int i = (int)sizes.size() - 1; i >= 0; --i) {
        tuple[i] = index % sizes[i];
        index /= sizes[i];
    }
    return tuple;
}

ProductCodec product_codec(const std::vector<FiniteAlgebra>& factors) {
    ProductCodec c;
    for (const auto& f : factors) c.sizes.push_back(f.n);
    return c;
}

FiniteAlgebra product(const std::vector<FiniteAlgebra>& factors) {
    if (factors.empty()) throw std::invalid_argument("product: no factors");
    if (factors.size() == 1) return factors[0];
    const FiniteAlgebra& first = factors[0];
    for (const auto& f : factors) {
        if (f.ops.size() != first.ops.size())
            throw std::invalid_argument("product: signature mismatch");
        for (size_t i = 0; i < f.ops.size(); ++i)
            if (f.ops[i].name != first.ops[i].name || f.ops[i].arity != first.ops[i].arity)
                throw std::invalid_argument("product: signature mismatch at op " + f.ops[i].name);
    }
    ProductCodec codec = product_codec(factors);
    FiniteAlgebra p;
    p.name = "prod";
    for (const auto& f : factors) p.name += "_" + f.name;
    p.n = codec.total();
    for (int i = 0; i < p.n; ++i) {
        std::vector<int> t = codec.decode(i);
        std::string lab = "(";
        for (size_t k = 0; k < t.size(); ++k) {
            if (k) lab += ",";
            lab += factors[k].labels[t[k]];
        }
        lab += ")";
        p.labels.push_back(lab);
    }
    for (size_t oi = 0; oi < first.ops.size(); ++oi) {
        Operation op;
        op.name = first.ops[oi].name;
        op.arity = first.ops[oi].arity;
        long long len = ipow(p.n, op.arity);
        op.table.resize(len);
        std::vector<int> args(op.arity, 0);
        for (long long idx = 0; idx < len; ++idx) {
            long long rem = idx;
            for (int k = op.arity - 1; k >= 0; --k) {
                args[k] = (int)(rem % p.n);
                rem /= p.n;
            }
            std::vector<int> result_tuple(factors.size());
            std::vector<int> comp_args(op.arity);
            for (size_t f = 0; f < factors.size(); ++f) {
                for (int k = 0; k < op.arity; ++k) comp_args[k] = codec.decode(args[k])[f];
                result_tuple[f] = factors[f].ops[oi].eval(comp_args, factors[f].n);
            }
            op.table[idx] = codec.encode(result_tuple);
        }
        p.ops.push_back(std::move(op));
    }
    return p;
}

}  // namespace congrkit
