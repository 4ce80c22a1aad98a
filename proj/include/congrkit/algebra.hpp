#pragma once

// Finite algebras with explicitly tabulated operations, plus the text
// format used by the CLI and the fixture files.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace congrkit {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Operation {
    std::string name;
    int arity = 0;
    std::vector<int> table;  // row-major over argument tuples, n^arity entries

    // args.size() must equal arity; no bounds checking beyond debug asserts
    int eval(const std::vector<int>& args, int n) const;
};

struct FiniteAlgebra {
    std::string name;
    int n = 0;
    std::vector<std::string> labels;  // always size n
    std::vector<Operation> ops;

    int op_index(const std::string& op_name) const;  // -1 if absent
    std::optional<int> element_index(const std::string& label) const;
    const std::string& label_of(int i) const { return labels[i]; }
};

// Returns the list of invariant violations (empty = valid): table sizes,
// entry ranges, duplicate op names, label count.
std::vector<std::string> validate_algebra(const FiniteAlgebra& a);

// Line-oriented text format:
//   algebra NAME
//   size N
//   elements a b c ...        (optional)
//   op NAME ARITY
//   <table lines>             (arity 0: one entry; arity k>0: N^(k-1) lines of N)
// '#' starts a comment. Table entries are element names or indices.
FiniteAlgebra parse_algebra(const std::string& text);
std::string serialize_algebra(const FiniteAlgebra& a);

// Mixed-radix tuple codec for direct products; the first factor is the
// most significant digit.
struct ProductCodec {
    std::vector<int> sizes;

    int total() const;
    int encode(const std::vector<int>& tuple) const;
    std::vector<int> decode(int index) const;
};

// All factors must share the operation signature (names and arities, in
// order). A single factor is returned unchanged.
FiniteAlgebra product(const std::vector<FiniteAlgebra>& factors);
ProductCodec product_codec(const std::vector<FiniteAlgebra>& factors);

}  // namespace congrkit
