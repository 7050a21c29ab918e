#include "homalg/identity/parser.hpp"

#include "homalg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace homalg {

std::string sort_name(Sort s) {
    switch (s) {
    case Sort::Algebra: return "algebra";
    case Sort::Module: return "module";
    case Sort::Scalar: return "scalar";
    }
    return "?";
}

Sort parse_sort(const std::string& s) {
    if (s == "algebra") return Sort::Algebra;
    if (s == "module") return Sort::Module;
    if (s == "scalar") return Sort::Scalar;
    throw SortError("unknown sort '" + s + "'");
}

bool same_tree(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.sort != b.sort || a.name != b.name || a.power != b.power || a.slot != b.slot ||
        a.coeffs != b.coeffs || a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!same_tree(*a.children[i], *b.children[i])) return false;
    return true;
}

const Sort* Signature::var_sort(const std::string& name) const {
    for (const auto& [n, s] : vars)
        if (n == name) return &s;
    return nullptr;
}

Signature Signature::standard() {
    Signature sig;
    for (const char* v : {"x", "y", "z", "t", "s"}) sig.vars.emplace_back(v, Sort::Algebra);
    sig.vars.emplace_back("v", Sort::Module);
    return sig;
}

namespace {

using MutNode = std::shared_ptr<Node>;

bool is_twist_keyword(const std::string& id, char letter, unsigned& power) {
    if (id.empty() || id[0] != letter) return false;
    if (id.size() == 1) {
        power = 1;
        return true;
    }
    for (std::size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    if (id[1] == '0') return false;
    power = static_cast<unsigned>(std::stoul(id.substr(1)));
    return true;
}

class Parser {
public:
    Parser(const std::string& src, const Signature& sig, const std::map<std::string, std::size_t>* slots)
        : s_(src), sig_(sig), slots_(slots) {}

    MutNode parse() {
        MutNode n = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return n;
    }

    const std::set<std::string>& used() const { return used_; }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, i_); }
    [[noreturn]] void fail_at(const std::string& what, std::size_t pos) const { throw SyntaxError(what, pos); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++i_;
    }
    std::string ident() {
        skip();
        std::size_t b = i_;
        if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
            ++i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        }
        if (b == i_) fail("expected identifier");
        return s_.substr(b, i_ - b);
    }

    MutNode expr() {
        std::vector<std::pair<Scalar, MutNode>> terms;
        std::size_t start = (skip(), i_);
        Scalar sign(1);
        if (peek('-')) {
            ++i_;
            sign = Scalar(-1);
        }
        while (true) {
            auto [c, atom_node] = term();
            terms.emplace_back(sign * c, atom_node);
            if (peek('+')) {
                ++i_;
                sign = Scalar(1);
            } else if (peek('-')) {
                ++i_;
                sign = Scalar(-1);
            } else {
                break;
            }
        }
        Sort sort = terms[0].second->sort;
        for (const auto& t : terms)
            if (t.second->sort != sort)
                throw SortError("sum mixes " + sort_name(sort) + " and " + sort_name(t.second->sort) +
                                " terms at position " + std::to_string(start));
        if (terms.size() == 1) {
            if (terms[0].first.is_one()) return terms[0].second;
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Scale;
            n->sort = sort;
            n->coeffs = {terms[0].first};
            n->children = {terms[0].second};
            return n;
        }
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Sum;
        n->sort = sort;
        for (auto& [c, t] : terms) {
            n->coeffs.push_back(c);
            n->children.push_back(t);
        }
        return n;
    }

    std::pair<Scalar, MutNode> term() {
        skip();
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            std::size_t b = i_;
            while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '/')) ++i_;
            Scalar c = coefficient(s_.substr(b, i_ - b), b);
            expect('*');
            return {c, atom()};
        }
        if (peek('(')) {
            std::size_t close = matching(i_);
            std::size_t after = close + 1;
            while (after < s_.size() && std::isspace(static_cast<unsigned char>(s_[after]))) ++after;
            if (after < s_.size() && s_[after] == '*') {
                Scalar c = coefficient(s_.substr(i_ + 1, close - i_ - 1), i_ + 1);
                i_ = after + 1;
                return {c, atom()};
            }
        }
        return {Scalar(1), atom()};
    }

    Scalar coefficient(const std::string& text, std::size_t pos) {
        Scalar c;
        try {
            c = parse_scalar(text);
        } catch (const SyntaxError& e) {
            fail_at("bad coefficient", pos + e.position());
        } catch (const MathError&) {
            fail_at("bad coefficient", pos);
        }
        for (const auto& v : c.variables())
            if (sig_.var_sort(v)) fail_at("variable '" + v + "' inside a coefficient", pos);
        return c;
    }

    std::size_t matching(std::size_t open) const {
        int depth = 0;
        for (std::size_t k = open; k < s_.size(); ++k) {
            if (s_[k] == '(') ++depth;
            else if (s_[k] == ')' && --depth == 0) return k;
        }
        fail_at("unbalanced '('", open);
    }

    MutNode atom() {
        skip();
        std::size_t pos = i_;
        if (peek('(')) {
            ++i_;
            MutNode n = expr();
            expect(')');
            return n;
        }
        std::string id = ident();
        bool call = peek('(');
        auto n = std::make_shared<Node>();
        unsigned power = 1;
        if (call && (is_twist_keyword(id, 'A', power) || is_twist_keyword(id, 'B', power))) {
            bool a = id[0] == 'A';
            ++i_;
            MutNode c = expr();
            expect(')');
            Sort want = a ? Sort::Algebra : Sort::Module;
            if (c->sort != want)
                throw SortError(id + "(...) needs a " + sort_name(want) + " argument at position " +
                                std::to_string(pos));
            n->kind = a ? Node::Kind::TwistA : Node::Kind::TwistB;
            n->sort = want;
            n->power = power;
            n->children = {c};
            return n;
        }
        if (call && (id == "p" || id == "act" || id == "form")) {
            ++i_;
            n->name = ident();
            expect(',');
            MutNode l = expr();
            expect(',');
            MutNode r = expr();
            expect(')');
            if (id == "p") {
                n->kind = Node::Kind::Prod;
                n->sort = Sort::Algebra;
                if (l->sort != Sort::Algebra || r->sort != Sort::Algebra)
                    throw SortError("p(" + n->name + ", ...) needs algebra arguments at position " +
                                    std::to_string(pos));
            } else if (id == "act") {
                n->kind = Node::Kind::Act;
                n->sort = Sort::Module;
                if (l->sort != Sort::Algebra || r->sort != Sort::Module)
                    throw SortError("act(" + n->name + ", ...) needs an algebra then a module argument at position " +
                                    std::to_string(pos));
            } else {
                n->kind = Node::Kind::Form;
                n->sort = Sort::Scalar;
                if (std::find(sig_.forms.begin(), sig_.forms.end(), n->name) == sig_.forms.end())
                    fail_at("undeclared form '" + n->name + "'", pos);
                if (l->sort != Sort::Algebra || r->sort != Sort::Algebra)
                    throw SortError("form(" + n->name + ", ...) needs algebra arguments at position " +
                                    std::to_string(pos));
            }
            n->children = {l, r};
            return n;
        }
        if (call && id == "op") {
            ++i_;
            n->name = ident();
            expect(',');
            MutNode c = expr();
            expect(')');
            auto it = sig_.ops.find(n->name);
            if (it == sig_.ops.end()) fail_at("undeclared operator '" + n->name + "'", pos);
            if (c->sort != it->second.domain)
                throw SortError("op(" + n->name + ", ...) needs a " + sort_name(it->second.domain) +
                                " argument at position " + std::to_string(pos));
            n->kind = Node::Kind::Apply;
            n->sort = it->second.codomain;
            n->children = {c};
            return n;
        }
        const Sort* sort = sig_.var_sort(id);
        if (!sort) fail_at("undeclared variable '" + id + "'", pos);
        n->kind = Node::Kind::Var;
        n->sort = *sort;
        n->name = id;
        if (slots_) n->slot = slots_->at(id);
        used_.insert(id);
        return n;
    }

    const std::string& s_;
    const Signature& sig_;
    const std::map<std::string, std::size_t>* slots_;
    std::size_t i_ = 0;
    std::set<std::string> used_;
};

using VarBag = std::vector<std::string>;

std::set<VarBag> monomials(const Node& n) {
    switch (n.kind) {
    case Node::Kind::Var: return {{n.name}};
    case Node::Kind::TwistA:
    case Node::Kind::TwistB:
    case Node::Kind::Apply:
    case Node::Kind::Scale: return monomials(*n.children[0]);
    case Node::Kind::Sum: {
        std::set<VarBag> out;
        for (const auto& c : n.children) {
            auto m = monomials(*c);
            out.insert(m.begin(), m.end());
        }
        return out;
    }
    case Node::Kind::Prod:
    case Node::Kind::Act:
    case Node::Kind::Form: {
        auto l = monomials(*n.children[0]);
        auto r = monomials(*n.children[1]);
        std::set<VarBag> out;
        for (const auto& a : l)
            for (const auto& b : r) {
                VarBag m = a;
                m.insert(m.end(), b.begin(), b.end());
                std::sort(m.begin(), m.end());
                out.insert(m);
            }
        return out;
    }
    }
    return {};
}

std::string join(const VarBag& m, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? sep : "") + m[i];
    return s;
}

void check_multilinear(const Node& root, const std::vector<std::pair<std::string, Sort>>& vars) {
    for (const auto& m : monomials(root)) {
        for (std::size_t i = 1; i < m.size(); ++i)
            if (m[i] == m[i - 1])
                throw NotMultilinear("variable '" + m[i] + "' occurs more than once in monomial " + join(m, "*"));
        for (const auto& [v, s] : vars)
            if (!std::binary_search(m.begin(), m.end(), v))
                throw NotMultilinear("variable '" + v + "' is missing from monomial " + join(m, "*"));
    }
}

std::string render_coeff(const Scalar& c) {
    if (c.is_constant()) {
        mpq_class q = c.constant_value();
        return q.get_str();
    }
    return "(" + c.to_string() + ")";
}

bool negative_constant(const Scalar& c) { return c.is_constant() && sgn(c.constant_value()) < 0; }

std::string render_scaled(const Scalar& c, const Node& child) {
    std::string body = render_node(child);
    if (child.kind == Node::Kind::Sum || child.kind == Node::Kind::Scale) body = "(" + body + ")";
    if (c.is_one()) return body;
    if (c == Scalar(-1)) return "-" + body;
    return render_coeff(c) + "*" + body;
}

} // namespace

std::string render_node(const Node& n) {
    switch (n.kind) {
    case Node::Kind::Var: return n.name;
    case Node::Kind::TwistA:
    case Node::Kind::TwistB: {
        std::string k = n.kind == Node::Kind::TwistA ? "A" : "B";
        if (n.power != 1) k += std::to_string(n.power);
        return k + "(" + render_node(*n.children[0]) + ")";
    }
    case Node::Kind::Prod:
    case Node::Kind::Act:
    case Node::Kind::Form: {
        const char* f = n.kind == Node::Kind::Prod ? "p" : n.kind == Node::Kind::Act ? "act" : "form";
        return std::string(f) + "(" + n.name + ", " + render_node(*n.children[0]) + ", " +
               render_node(*n.children[1]) + ")";
    }
    case Node::Kind::Apply: return "op(" + n.name + ", " + render_node(*n.children[0]) + ")";
    case Node::Kind::Scale: return render_scaled(n.coeffs[0], *n.children[0]);
    case Node::Kind::Sum: {
        std::string out;
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            const Scalar& c = n.coeffs[i];
            if (i == 0) {
                out = render_scaled(c, *n.children[i]);
            } else if (negative_constant(c)) {
                out += " - " + render_scaled(-c, *n.children[i]);
            } else {
                out += " + " + render_scaled(c, *n.children[i]);
            }
        }
        return out;
    }
    }
    return "";
}

std::string render_identity(const IdentityExpr& e) { return render_node(*e.root); }

IdentityExpr parse_identity(const std::string& source, const Signature& sig) {
    Parser first(source, sig, nullptr);
    first.parse();
    IdentityExpr out;
    std::map<std::string, std::size_t> slots;
    for (const auto& [name, sort] : sig.vars)
        if (first.used().count(name)) {
            slots[name] = out.vars.size();
            out.vars.emplace_back(name, sort);
        }
    Parser second(source, sig, &slots);
    out.root = second.parse();
    out.sort = out.root->sort;
    check_multilinear(*out.root, out.vars);
    return out;
}

namespace {

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> w;
    for (std::string t; in >> t;) w.push_back(t);
    return w;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Derivation parse_derivation(const std::string& rest, bool is_action, std::size_t line) {
    auto err = [&](const std::string& what) {
        return SyntaxError(what + " on line " + std::to_string(line), 0);
    };
    Derivation d;
    d.is_action = is_action;
    std::size_t eq = rest.find('=');
    if (eq == std::string::npos) throw err("expected '=' in derivation");
    std::string lhs = trim(rest.substr(0, eq));
    if (!lhs.empty() && lhs.back() == '?') {
        d.if_absent = true;
        lhs = trim(lhs.substr(0, lhs.size() - 1));
    }
    if (!is_parameter_name(lhs)) throw err("bad derived label '" + lhs + "'");
    d.target = lhs;
    std::string rhs = rest.substr(eq + 1);
    std::size_t i = 0;
    long sign = 1;
    bool first = true;
    while (true) {
        while (i < rhs.size() && std::isspace(static_cast<unsigned char>(rhs[i]))) ++i;
        if (i == rhs.size()) break;
        if (rhs[i] == '+' || rhs[i] == '-') {
            sign = rhs[i] == '-' ? -1 : 1;
            ++i;
            continue;
        }
        if (!first && sign == 0) throw err("expected '+' or '-'");
        Derivation::Term t;
        t.coeff = sign;
        if (std::isdigit(static_cast<unsigned char>(rhs[i]))) {
            std::size_t b = i;
            while (i < rhs.size() && std::isdigit(static_cast<unsigned char>(rhs[i]))) ++i;
            t.coeff *= std::stol(rhs.substr(b, i - b));
            while (i < rhs.size() && std::isspace(static_cast<unsigned char>(rhs[i]))) ++i;
            if (i == rhs.size() || rhs[i] != '*') throw err("expected '*'");
            ++i;
            while (i < rhs.size() && std::isspace(static_cast<unsigned char>(rhs[i]))) ++i;
        }
        std::size_t b = i;
        while (i < rhs.size() && (std::isalnum(static_cast<unsigned char>(rhs[i])) || rhs[i] == '_')) ++i;
        if (b == i) throw err("expected label");
        t.source = rhs.substr(b, i - b);
        if (rhs.compare(i, 2, "^T") == 0) {
            if (is_action) throw err("actions cannot be transposed");
            t.swapped = true;
            i += 2;
        }
        d.terms.push_back(t);
        sign = 0;
        first = false;
    }
    if (d.terms.empty()) throw err("empty derivation");
    return d;
}

} // namespace

IdentitySet parse_identity_file(const std::string& text, const std::string& name) {
    IdentitySet set;
    set.name = name;
    bool declared_vars = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    std::set<std::string> ids;
    while (std::getline(in, raw)) {
        ++line;
        std::string l = trim(raw);
        if (l.empty() || l[0] == '#') continue;
        auto err = [&](const std::string& what) {
            return SyntaxError(what + " on line " + std::to_string(line), 0);
        };
        if (l[0] == '%') {
            auto sp = l.find_first_of(" \t");
            std::string dir = l.substr(1, sp == std::string::npos ? std::string::npos : sp - 1);
            std::string rest = sp == std::string::npos ? "" : trim(l.substr(sp));
            if (dir == "name") {
                set.name = rest;
            } else if (dir == "var") {
                auto colon = rest.find(':');
                if (colon == std::string::npos) throw err("expected ': sort' in %var");
                Sort s = parse_sort(trim(rest.substr(colon + 1)));
                for (const auto& v : words(rest.substr(0, colon))) {
                    if (!is_parameter_name(v)) throw err("bad variable name '" + v + "'");
                    if (set.signature.var_sort(v)) throw err("variable '" + v + "' declared twice");
                    set.signature.vars.emplace_back(v, s);
                }
                declared_vars = true;
            } else if (dir == "op") {
                auto colon = rest.find(':');
                auto arrow = rest.find("->");
                if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
                    throw err("expected '%op name : sort -> sort'");
                std::string opname = trim(rest.substr(0, colon));
                if (!is_parameter_name(opname)) throw err("bad operator name '" + opname + "'");
                set.signature.ops[opname] = {parse_sort(trim(rest.substr(colon + 1, arrow - colon - 1))),
                                             parse_sort(trim(rest.substr(arrow + 2)))};
            } else if (dir == "form") {
                for (const auto& f : words(rest)) set.signature.forms.push_back(f);
            } else if (dir == "product" || dir == "action") {
                set.derivations.push_back(parse_derivation(rest, dir == "action", line));
            } else {
                throw err("unknown directive '%" + dir + "'");
            }
            continue;
        }
        if (!declared_vars) {
            auto std_sig = Signature::standard();
            set.signature.vars = std_sig.vars;
            declared_vars = true;
        }
        auto colon = l.find(':');
        if (colon == std::string::npos) throw err("expected 'id: expr'");
        Identity id;
        id.id = trim(l.substr(0, colon));
        if (id.id.empty()) throw err("empty identity id");
        if (!ids.insert(id.id).second) throw DuplicateLabel("identity id '" + id.id + "' used twice");
        std::string body = l.substr(colon + 1);
        auto hash = body.find('#');
        if (hash != std::string::npos) {
            id.anchor = trim(body.substr(hash + 1));
            body = body.substr(0, hash);
        }
        try {
            id.expr = parse_identity(body, set.signature);
        } catch (const SyntaxError& e) {
            throw SyntaxError(std::string(e.what()) + " (identity '" + id.id + "', line " + std::to_string(line) + ")",
                              e.position());
        }
        set.identities.push_back(std::move(id));
    }
    return set;
}

std::string render_identity_file(const IdentitySet& set) {
    std::ostringstream out;
    if (!set.name.empty()) out << "%name " << set.name << "\n";
    std::vector<std::pair<Sort, std::vector<std::string>>> groups;
    for (const auto& [v, s] : set.signature.vars) {
        if (groups.empty() || groups.back().first != s) groups.push_back({s, {}});
        groups.back().second.push_back(v);
    }
    for (const auto& [s, vs] : groups) {
        out << "%var";
        for (const auto& v : vs) out << " " << v;
        out << " : " << sort_name(s) << "\n";
    }
    for (const auto& [n, d] : set.signature.ops)
        out << "%op " << n << " : " << sort_name(d.domain) << " -> " << sort_name(d.codomain) << "\n";
    if (!set.signature.forms.empty()) {
        out << "%form";
        for (const auto& f : set.signature.forms) out << " " << f;
        out << "\n";
    }
    for (const auto& d : set.derivations) {
        out << (d.is_action ? "%action " : "%product ") << d.target << (d.if_absent ? " ?= " : " = ");
        for (std::size_t i = 0; i < d.terms.size(); ++i) {
            const auto& t = d.terms[i];
            long c = t.coeff;
            if (i) out << (c < 0 ? " - " : " + ");
            else if (c < 0) out << "-";
            if (std::labs(c) != 1) out << std::labs(c) << "*";
            out << t.source << (t.swapped ? "^T" : "");
        }
        out << "\n";
    }
    for (const auto& id : set.identities) {
        out << id.id << ": " << render_identity(id.expr);
        if (!id.anchor.empty()) out << "  # " << id.anchor;
        out << "\n";
    }
    return out.str();
}

} // namespace homalg
