#pragma once

#include <cstddef>
#include <vector>

#include "geograph/numeric.hpp"

namespace geograph {

// Integer class in a fixed basis of a lattice.
struct LineClass {
    std::vector<Int> coeffs;

    static LineClass zero(std::size_t rank);
    static LineClass basis(std::size_t rank, std::size_t i);

    // coeffs[i] += scale; returns *this so classes can be built fluently.
    LineClass& add(const Int& scale, std::size_t i);

    friend bool operator==(const LineClass&, const LineClass&) = default;
};

// Symmetric integer bilinear form given by its Gram matrix in a fixed basis.
class IntersectionLattice {
  public:
    IntersectionLattice() = default;
    IntersectionLattice(std::size_t rank, std::vector<Int> gram);

    std::size_t rank() const { return rank_; }
    const Int& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Int& value);  // symmetric set

    // <u, v>; throws DimensionMismatch when a class has the wrong rank.
    Int pair(const LineClass& u, const LineClass& v) const;

    // The row vector (<u, basis_0>, ..., <u, basis_{rank-1}>).
    std::vector<Int> pairings(const LineClass& u) const;

    bool symmetric() const;

    // Exact determinant by fraction-free (Bareiss) elimination.
    Int determinant() const;

    bool unimodular() const;  // |det| == 1

    // In-place direct sum with another block.
    IntersectionLattice& append(const IntersectionLattice& other);

  private:
    std::size_t rank_ = 0;
    std::vector<Int> gram_;  // row-major rank_ x rank_
};

IntersectionLattice diag_lattice(const std::vector<Int>& entries);

// [[0, 1], [1, d]]; d = 0 gives the standard hyperbolic block U.
IntersectionLattice rank2_block(const Int& d);

// Negative definite E8 form: -2 on the diagonal, -1 on Dynkin-diagram edges.
// Nodes 0..6 form the long chain, node 7 hangs off node 4.
IntersectionLattice minus_e8();

}  // namespace geograph
