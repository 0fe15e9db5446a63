#include "odakit/term.hpp"

#include "odakit/errors.hpp"

#include <algorithm>
#include <cctype>

namespace odakit {

Term Term::variable(int v) {
    Term t;
    t.nodes_.push_back(Node{-1, v, {}});
    t.root_ = 0;
    return t;
}

Term Term::apply(int op, std::vector<Term> args) {
    Term t;
    std::vector<int> kids;
    for (const auto& a : args) {
        int base = static_cast<int>(t.nodes_.size());
        for (const auto& n : a.nodes_) {
            Node m = n;
            for (int& k : m.kids)
                k += base;
            t.nodes_.push_back(m);
        }
        kids.push_back(base + a.root_);
    }
    t.nodes_.push_back(Node{op, -1, std::move(kids)});
    t.root_ = static_cast<int>(t.nodes_.size()) - 1;
    return t;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    std::string next() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos >= s.size())
            return "";
        if (s[pos] == '(' || s[pos] == ')')
            return std::string(1, s[pos++]);
        std::size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
               s[pos] != '(' && s[pos] != ')')
            ++pos;
        return s.substr(start, pos - start);
    }
};

int find_op(const Signature& sig, const std::string& name) {
    for (std::size_t i = 0; i < sig.size(); ++i)
        if (sig[i].name == name)
            return static_cast<int>(i);
    return -1;
}

int find_var(const std::vector<std::string>& vars, const std::string& name) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name)
            return static_cast<int>(i);
    return -1;
}

Term parse_one(Lexer& lex, const std::vector<std::string>& vars, const Signature& sig) {
    std::string tok = lex.next();
    if (tok.empty())
        throw input_error("unexpected end of term");
    if (tok == ")")
        throw input_error("unexpected ')'");
    if (tok == "(") {
        std::string head = lex.next();
        if (head.empty() || head == "(" || head == ")")
            throw input_error("expected operation name after '('");
        int op = find_op(sig, head);
        if (op < 0)
            throw input_error("unknown operation '" + head + "'");
        std::vector<Term> args;
        for (;;) {
            std::size_t save = lex.pos;
            std::string peek = lex.next();
            if (peek == ")")
                break;
            if (peek.empty())
                throw input_error("missing ')' in term");
            lex.pos = save;
            args.push_back(parse_one(lex, vars, sig));
        }
        if (static_cast<int>(args.size()) != sig[static_cast<std::size_t>(op)].arity)
            throw input_error("operation '" + head + "' expects " +
                              std::to_string(sig[static_cast<std::size_t>(op)].arity) +
                              " arguments, got " + std::to_string(args.size()));
        return Term::apply(op, std::move(args));
    }
    // bare atom: variable first, then 0-ary operation
    if (int v = find_var(vars, tok); v >= 0)
        return Term::variable(v);
    if (int op = find_op(sig, tok); op >= 0) {
        if (sig[static_cast<std::size_t>(op)].arity != 0)
            throw input_error("operation '" + tok + "' used without arguments");
        return Term::apply(op, {});
    }
    throw input_error("unknown atom '" + tok + "'");
}

} // namespace

Term Term::parse(const std::string& sexpr, const std::vector<std::string>& vars,
                 const Signature& sig) {
    Lexer lex{sexpr};
    Term t = parse_one(lex, vars, sig);
    std::string rest = lex.next();
    if (!rest.empty())
        throw input_error("trailing input after term: '" + rest + "'");
    return t;
}

int Term::depth_of(int node) const {
    const Node& n = at(node);
    int d = 1;
    for (int k : n.kids)
        d = std::max(d, 1 + depth_of(k));
    return d;
}

int Term::depth() const { return depth_of(root_); }

std::vector<int> Term::variables() const {
    std::vector<int> out;
    for (const auto& n : nodes_)
        if (n.op < 0)
            out.push_back(n.var);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Term::linear() const {
    std::vector<int> occ;
    for (const auto& n : nodes_)
        if (n.op < 0)
            occ.push_back(n.var);
    std::sort(occ.begin(), occ.end());
    return std::adjacent_find(occ.begin(), occ.end()) == occ.end();
}

int Term::max_var() const {
    int m = -1;
    for (const auto& n : nodes_)
        if (n.op < 0)
            m = std::max(m, n.var);
    return m;
}

std::string Term::to_string(const std::vector<std::string>& vars, const Signature& sig) const {
    std::vector<std::string> memo(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        if (n.op < 0) {
            memo[i] = vars[static_cast<std::size_t>(n.var)];
        } else if (n.kids.empty()) {
            memo[i] = sig[static_cast<std::size_t>(n.op)].name;
        } else {
            std::string s = "(" + sig[static_cast<std::size_t>(n.op)].name;
            for (int k : n.kids)
                s += " " + memo[static_cast<std::size_t>(k)];
            memo[i] = s + ")";
        }
    }
    return memo[static_cast<std::size_t>(root_)];
}

} // namespace odakit
