#pragma once

#include <string>
#include <vector>

namespace odakit {

struct OpDecl {
    std::string name;
    int arity = 0;
};
using Signature = std::vector<OpDecl>;

// Term over a signature and declared variables, held as a node arena.
// Concrete syntax is s-expressions: "(comp (dom x) y)"; a bare atom is a
// variable or a 0-ary operation.
class Term {
  public:
    struct Node {
        int op = -1;  // index into the signature, -1 for a variable
        int var = -1; // variable index when op < 0
        std::vector<int> kids;
    };

    static Term variable(int v);
    static Term apply(int op, std::vector<Term> args);
    static Term parse(const std::string& sexpr, const std::vector<std::string>& vars,
                      const Signature& sig);

    const std::vector<Node>& nodes() const { return nodes_; }
    int root() const { return root_; }
    const Node& at(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

    int depth() const;
    std::vector<int> variables() const;     // sorted, distinct
    bool linear() const;                    // no variable occurs twice
    int max_var() const;                    // -1 when no variables

    std::string to_string(const std::vector<std::string>& vars, const Signature& sig) const;

  private:
    std::vector<Node> nodes_;
    int root_ = -1;

    int depth_of(int node) const;
};

} // namespace odakit
