#include "odakit/expansion.hpp"

#include "odakit/errors.hpp"

#include <algorithm>

namespace odakit {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

// iterate over all tuples in {0..n-1}^k; returns false when done
bool next_tuple(std::vector<int>& t, int n) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (++t[static_cast<std::size_t>(i)] < n)
            return true;
        t[static_cast<std::size_t>(i)] = 0;
    }
    return false;
}

} // namespace

PosetExpansion::PosetExpansion(PosetPtr poset, std::vector<Op> ops)
    : poset_(std::move(poset)), ops_(std::move(ops)) {
    const int n = poset_->size();
    for (const auto& op : ops_) {
        if (op.arity < 0)
            throw input_error("operation '" + op.name + "' has negative arity");
        if (op.table.size() != ipow(static_cast<std::uint64_t>(n), op.arity))
            throw input_error("operation '" + op.name + "' table has wrong size");
        for (int v : op.table)
            if (v < 0 || v >= n)
                throw input_error("operation '" + op.name + "' table value out of range");
        // isotone in each coordinate separately (equivalent to joint
        // isotonicity by composing one-step moves)
        if (op.arity == 0)
            continue;
        std::vector<int> t(static_cast<std::size_t>(op.arity), 0);
        do {
            std::size_t idx = 0;
            for (int c : t)
                idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(c);
            int val = op.table[idx];
            for (int pos = 0; pos < op.arity; ++pos) {
                int orig = t[static_cast<std::size_t>(pos)];
                for (int up = 0; up < n; ++up) {
                    if (up == orig || !poset_->leq(orig, up))
                        continue;
                    std::size_t jdx = 0;
                    for (int k = 0; k < op.arity; ++k) {
                        int c = k == pos ? up : t[static_cast<std::size_t>(k)];
                        jdx = jdx * static_cast<std::size_t>(n) + static_cast<std::size_t>(c);
                    }
                    if (!poset_->leq(val, op.table[jdx]))
                        throw input_error("operation '" + op.name + "' is not isotone at '" +
                                          poset_->name(orig) + "' -> '" + poset_->name(up) + "'");
                }
            }
        } while (next_tuple(t, n));
    }
    std::sort(ops_.begin(), ops_.end(), [](const Op& a, const Op& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < ops_.size(); ++i)
        if (ops_[i].name == ops_[i - 1].name)
            throw input_error("duplicate operation name '" + ops_[i].name + "'");
}

Signature PosetExpansion::signature() const {
    Signature sig;
    for (const auto& op : ops_)
        sig.push_back({op.name, op.arity});
    return sig;
}

int PosetExpansion::op_index(const std::string& name) const {
    for (std::size_t i = 0; i < ops_.size(); ++i)
        if (ops_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

int PosetExpansion::apply(int op, const std::vector<int>& args) const {
    const Op& o = ops_[static_cast<std::size_t>(op)];
    if (static_cast<int>(args.size()) != o.arity)
        throw input_error("operation '" + o.name + "' arity mismatch");
    std::size_t idx = 0;
    for (int a : args)
        idx = idx * static_cast<std::size_t>(poset_->size()) + static_cast<std::size_t>(a);
    return o.table[idx];
}

int PosetExpansion::eval(const Term& t, const std::vector<int>& assignment) const {
    std::vector<int> memo(t.nodes().size(), -1);
    for (std::size_t i = 0; i < t.nodes().size(); ++i) {
        const Term::Node& n = t.nodes()[i];
        if (n.op < 0) {
            if (n.var >= static_cast<int>(assignment.size()))
                throw input_error("assignment missing variable " + std::to_string(n.var));
            memo[i] = assignment[static_cast<std::size_t>(n.var)];
        } else {
            std::vector<int> args;
            for (int k : n.kids)
                args.push_back(memo[static_cast<std::size_t>(k)]);
            memo[i] = apply(n.op, args);
        }
    }
    return memo[static_cast<std::size_t>(t.root())];
}

// ---------------------------------------------------------------------------

CompletedExpansion::CompletedExpansion(PosetExpansion expansion, ClosureOperator gamma,
                                       const Guards& guards)
    : expansion_(std::move(expansion)), gamma_(std::move(gamma)) {
    if (gamma_.parent().get() != expansion_.poset().get() &&
        !gamma_.parent()->same_structure(*expansion_.poset()))
        throw input_error("closure operator and expansion have different posets");
    if (auto r = is_standard_closure(gamma_, guards); !r.ok)
        throw input_error("not a standard closure: " + r.detail);
    for (const auto& s : all_up_sets(expansion_.poset(), guards))
        if (gamma_(s) == s)
            closed_.push_back(s);
}

int CompletedExpansion::index_of(const UpSet& s) const {
    for (std::size_t i = 0; i < closed_.size(); ++i)
        if (closed_[i] == s)
            return static_cast<int>(i);
    return -1;
}

UpSet CompletedExpansion::lift_apply(int op, const std::vector<UpSet>& args) const {
    const auto& poset = expansion_.poset();
    const auto& o = expansion_.ops()[static_cast<std::size_t>(op)];
    if (static_cast<int>(args.size()) != o.arity)
        throw input_error("operation '" + o.name + "' arity mismatch");
    for (const auto& a : args)
        if (a.is_empty())
            return gamma_(UpSet::empty(poset)); // empty image convention
    // image over the generating antichains; up-closure absorbs the rest
    std::vector<int> gens;
    std::vector<std::size_t> pick(args.size(), 0);
    for (;;) {
        std::vector<int> tuple;
        for (std::size_t i = 0; i < args.size(); ++i)
            tuple.push_back(args[i].minimals()[pick[i]]);
        gens.push_back(expansion_.apply(op, tuple));
        std::size_t i = args.size();
        while (i > 0) {
            --i;
            if (++pick[i] < args[i].minimals().size())
                break;
            pick[i] = 0;
            if (i == 0)
                goto done;
        }
        if (args.empty())
            break;
    }
done:
    return gamma_(UpSet(poset, gens));
}

UpSet CompletedExpansion::eval(const Term& t, const std::vector<UpSet>& assignment) const {
    std::vector<std::optional<UpSet>> memo(t.nodes().size());
    for (std::size_t i = 0; i < t.nodes().size(); ++i) {
        const Term::Node& n = t.nodes()[i];
        if (n.op < 0) {
            if (n.var >= static_cast<int>(assignment.size()))
                throw input_error("assignment missing variable " + std::to_string(n.var));
            memo[i] = assignment[static_cast<std::size_t>(n.var)];
        } else {
            std::vector<UpSet> args;
            for (int k : n.kids)
                args.push_back(*memo[static_cast<std::size_t>(k)]);
            memo[i] = lift_apply(n.op, args);
        }
    }
    return *memo[static_cast<std::size_t>(t.root())];
}

UpSet pointwise_image_up(const PosetExpansion& m, const Term& t,
                         const std::vector<UpSet>& assignment) {
    const auto& poset = m.poset();
    const int nvars = t.max_var() + 1;
    if (nvars > static_cast<int>(assignment.size()))
        throw input_error("assignment missing variables of the term");
    std::vector<std::vector<int>> domains;
    for (int v = 0; v < nvars; ++v)
        domains.push_back(assignment[static_cast<std::size_t>(v)].elements());
    for (const auto& d : domains)
        if (d.empty())
            return UpSet::empty(poset);
    std::vector<int> gens;
    std::vector<std::size_t> pick(domains.size(), 0);
    std::vector<int> asg(domains.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < domains.size(); ++i)
            asg[i] = domains[i][pick[i]];
        gens.push_back(m.eval(t, asg));
        std::size_t i = domains.size();
        for (;;) {
            if (i == 0)
                return UpSet(poset, gens);
            --i;
            if (++pick[i] < domains[i].size())
                break;
            pick[i] = 0;
        }
    }
}

InequalityResult holds_inequality(const PosetExpansion& m, const Term& phi, const Term& psi) {
    const int n = m.poset()->size();
    const int nvars = std::max(phi.max_var(), psi.max_var()) + 1;
    std::vector<int> asg(static_cast<std::size_t>(std::max(nvars, 1)), 0);
    if (nvars == 0) {
        if (!m.poset()->leq(m.eval(phi, {}), m.eval(psi, {})))
            return {false, "(no variables)"};
        return {};
    }
    do {
        if (!m.poset()->leq(m.eval(phi, asg), m.eval(psi, asg))) {
            std::string w;
            for (std::size_t i = 0; i < asg.size(); ++i)
                w += (i ? "," : "") + m.poset()->name(asg[i]);
            return {false, "x=(" + w + ")"};
        }
    } while (next_tuple(asg, n));
    return {};
}

InequalityResult holds_inequality(const CompletedExpansion& m, const Term& phi, const Term& psi) {
    const int nclosed = static_cast<int>(m.closed().size());
    const int nvars = std::max(phi.max_var(), psi.max_var()) + 1;
    if (nvars == 0) {
        if (!m.leq(m.eval(phi, {}), m.eval(psi, {})))
            return {false, "(no variables)"};
        return {};
    }
    std::vector<int> pick(static_cast<std::size_t>(nvars), 0);
    do {
        std::vector<UpSet> asg;
        for (int i : pick)
            asg.push_back(m.closed()[static_cast<std::size_t>(i)]);
        if (!m.leq(m.eval(phi, asg), m.eval(psi, asg))) {
            std::string w;
            for (std::size_t i = 0; i < asg.size(); ++i)
                w += (i ? "," : "") + asg[i].to_string();
            return {false, "x=(" + w + ")"};
        }
    } while (next_tuple(pick, nclosed));
    return {};
}

CheckResult term_respects_closure(const CompletedExpansion& m, const Term& psi,
                                  const std::vector<std::vector<UpSet>>& tuples) {
    for (const auto& asg : tuples) {
        UpSet lifted = m.eval(psi, asg);
        UpSet image = m.gamma()(pointwise_image_up(m.expansion(), psi, asg));
        if (lifted != image) {
            std::string w;
            for (std::size_t i = 0; i < asg.size(); ++i)
                w += (i ? "," : "") + asg[i].to_string();
            return {false, "differs at (" + w + "): lifted " + lifted.to_string() +
                               " vs closed image " + image.to_string()};
        }
    }
    return {};
}

CheckResult term_respects_closure(const CompletedExpansion& m, const Term& psi) {
    const int nclosed = static_cast<int>(m.closed().size());
    const int nvars = psi.max_var() + 1;
    std::vector<std::vector<UpSet>> tuples;
    if (nvars == 0) {
        tuples.push_back({});
        return term_respects_closure(m, psi, tuples);
    }
    std::vector<int> pick(static_cast<std::size_t>(nvars), 0);
    do {
        std::vector<UpSet> asg;
        for (int i : pick)
            asg.push_back(m.closed()[static_cast<std::size_t>(i)]);
        tuples.push_back(std::move(asg));
    } while (next_tuple(pick, nclosed));
    return term_respects_closure(m, psi, tuples);
}

} // namespace odakit
