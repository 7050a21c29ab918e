#pragma once

#include "homalg/exactnum/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace homalg {

enum class Sort { Algebra, Module, Scalar };

std::string sort_name(Sort s);
Sort parse_sort(const std::string& s);

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { Var, TwistA, TwistB, Prod, Act, Apply, Form, Scale, Sum };

    Kind kind = Kind::Var;
    Sort sort = Sort::Algebra;
    // Variable name, product/action label, operator or form name.
    std::string name;
    // Exponent of a twist node.
    unsigned power = 1;
    // Position of a variable in the identity's variable list.
    std::size_t slot = 0;
    std::vector<NodePtr> children;
    // Scale: one coefficient; Sum: one per child.
    std::vector<Scalar> coeffs;
};

bool same_tree(const Node& a, const Node& b);

// Linear operator usable as op(name, e), with its domain and codomain sorts.
struct OperatorDecl {
    Sort domain = Sort::Algebra;
    Sort codomain = Sort::Algebra;
};

// A product or action defined from stored ones, e.g. bracket = dot - dot^T.
struct Derivation {
    struct Term {
        long coeff = 1;
        std::string source;
        // Use the source with its arguments swapped (products only).
        bool swapped = false;
    };
    bool is_action = false;
    // Only fill in the label when the inputs lack it.
    bool if_absent = false;
    std::string target;
    std::vector<Term> terms;
};

struct Signature {
    std::vector<std::pair<std::string, Sort>> vars;
    std::map<std::string, OperatorDecl> ops;
    std::vector<std::string> forms;

    const Sort* var_sort(const std::string& name) const;
    static Signature standard();
};

struct IdentityExpr {
    NodePtr root;
    // Variables in enumeration order (declaration order, restricted to those used).
    std::vector<std::pair<std::string, Sort>> vars;
    Sort sort = Sort::Algebra;
};

struct Identity {
    std::string id;
    IdentityExpr expr;
    std::string anchor;
};

struct IdentitySet {
    std::string name;
    Signature signature;
    std::vector<Derivation> derivations;
    std::vector<Identity> identities;
};

} // namespace homalg
