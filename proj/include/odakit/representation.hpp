#pragma once

#include "odakit/guards.hpp"
#include "odakit/oda.hpp"
#include "odakit/oda_completion.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace odakit {

// Binary relation over an arbitrary (not 32-capped) point count, row-major
// bit-packed.  Used for the images of the representation, whose point set is
// a family of closed up-sets and routinely exceeds the element count of the
// algebra being represented.
class DenseRel {
  public:
    explicit DenseRel(int points);
    static DenseRel identity(int points);

    int points() const { return n_; }
    bool at(int u, int v) const;
    void set(int u, int v);
    bool empty() const;
    std::size_t pair_count() const;
    std::vector<std::pair<int, int>> pairs() const;

    DenseRel compose(const DenseRel& other) const;
    DenseRel converse() const;
    DenseRel domain() const;
    DenseRel range() const;
    bool subset_of(const DenseRel& other) const;
    bool operator==(const DenseRel& other) const = default;

  private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_; // words_ per row
};

// Representation of a finite algebra over the base of its nondegenerate
// closed up-sets: the empty up-set and any closed set containing zero are
// excluded, every other closed set is a point.  h(a) relates points X, Y
// exactly when X;a-up lies inside Y and Y;conv(a)-up lies inside X.
struct Representation {
    std::vector<UpSet> points;
    std::vector<DenseRel> image; // h per algebra element
    int point_count() const { return static_cast<int>(points.size()); }
};

// Pre: the algebra passes check_axioms (input_error otherwise).
Representation build_representation(const AbstractODA& a, const Guards& guards = global_guards());

// Faithfulness clauses: order preserved and reflected, comp/conv/dom/ran
// carried to the concrete relation operations, zero to the empty relation,
// id to the identity on the points.
AxiomReport verify_representation(const AbstractODA& a, const Representation& r);

} // namespace odakit
