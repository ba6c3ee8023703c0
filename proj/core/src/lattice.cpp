#include "geograph/lattice.hpp"

#include <utility>

#include "geograph/errors.hpp"

namespace geograph {

LineClass LineClass::zero(std::size_t rank) {
    return LineClass{std::vector<Int>(rank, Int(0))};
}

LineClass LineClass::basis(std::size_t rank, std::size_t i) {
    LineClass c = zero(rank);
    c.coeffs.at(i) = 1;
    return c;
}

LineClass& LineClass::add(const Int& scale, std::size_t i) {
    coeffs.at(i) += scale;
    return *this;
}

IntersectionLattice::IntersectionLattice(std::size_t rank, std::vector<Int> gram)
    : rank_(rank), gram_(std::move(gram)) {
    if (gram_.size() != rank_ * rank_) {
        throw DimensionMismatch("gram matrix size does not match rank");
    }
}

const Int& IntersectionLattice::at(std::size_t i, std::size_t j) const {
    return gram_.at(i * rank_ + j);
}

void IntersectionLattice::set(std::size_t i, std::size_t j, const Int& value) {
    gram_.at(i * rank_ + j) = value;
    gram_.at(j * rank_ + i) = value;
}

Int IntersectionLattice::pair(const LineClass& u, const LineClass& v) const {
    if (u.coeffs.size() != rank_ || v.coeffs.size() != rank_) {
        throw DimensionMismatch("class rank does not match lattice rank");
    }
    Int total = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
        if (u.coeffs[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < rank_; ++j) {
            if (v.coeffs[j] == 0) continue;
            row += at(i, j) * v.coeffs[j];
        }
        total += u.coeffs[i] * row;
    }
    return total;
}

std::vector<Int> IntersectionLattice::pairings(const LineClass& u) const {
    if (u.coeffs.size() != rank_) {
        throw DimensionMismatch("class rank does not match lattice rank");
    }
    std::vector<Int> out(rank_, Int(0));
    for (std::size_t j = 0; j < rank_; ++j) {
        for (std::size_t i = 0; i < rank_; ++i) {
            if (u.coeffs[i] == 0) continue;
            out[j] += u.coeffs[i] * at(i, j);
        }
    }
    return out;
}

bool IntersectionLattice::symmetric() const {
    for (std::size_t i = 0; i < rank_; ++i) {
        for (std::size_t j = i + 1; j < rank_; ++j) {
            if (at(i, j) != at(j, i)) return false;
        }
    }
    return true;
}

Int IntersectionLattice::determinant() const {
    if (rank_ == 0) return 1;
    std::vector<Int> m = gram_;
    auto cell = [&](std::size_t i, std::size_t j) -> Int& {
        return m[i * rank_ + j];
    };
    int sign = 1;
    Int prev = 1;
    for (std::size_t col = 0; col < rank_ - 1; ++col) {
        std::size_t pivot = col;
        while (pivot < rank_ && cell(pivot, col) == 0) ++pivot;
        if (pivot == rank_) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < rank_; ++j) {
                std::swap(cell(pivot, j), cell(col, j));
            }
            sign = -sign;
        }
        for (std::size_t i = col + 1; i < rank_; ++i) {
            for (std::size_t j = col + 1; j < rank_; ++j) {
                // Every division in Bareiss elimination is exact.
                cell(i, j) = (cell(i, j) * cell(col, col) -
                              cell(i, col) * cell(col, j)) /
                             prev;
            }
            cell(i, col) = 0;
        }
        prev = cell(col, col);
    }
    return sign * cell(rank_ - 1, rank_ - 1);
}

bool IntersectionLattice::unimodular() const {
    Int d = determinant();
    return d == 1 || d == -1;
}

IntersectionLattice& IntersectionLattice::append(const IntersectionLattice& other) {
    std::size_t n = rank_ + other.rank_;
    std::vector<Int> gram(n * n, Int(0));
    for (std::size_t i = 0; i < rank_; ++i) {
        for (std::size_t j = 0; j < rank_; ++j) {
            gram[i * n + j] = at(i, j);
        }
    }
    for (std::size_t i = 0; i < other.rank_; ++i) {
        for (std::size_t j = 0; j < other.rank_; ++j) {
            gram[(rank_ + i) * n + (rank_ + j)] = other.at(i, j);
        }
    }
    rank_ = n;
    gram_ = std::move(gram);
    return *this;
}

IntersectionLattice diag_lattice(const std::vector<Int>& entries) {
    std::size_t n = entries.size();
    std::vector<Int> gram(n * n, Int(0));
    for (std::size_t i = 0; i < n; ++i) gram[i * n + i] = entries[i];
    return IntersectionLattice(n, std::move(gram));
}

IntersectionLattice rank2_block(const Int& d) {
    return IntersectionLattice(2, {Int(0), Int(1), Int(1), d});
}

IntersectionLattice minus_e8() {
    IntersectionLattice l(8, std::vector<Int>(64, Int(0)));
    for (std::size_t i = 0; i < 8; ++i) l.set(i, i, Int(-2));
    for (std::size_t i = 0; i + 1 < 7; ++i) l.set(i, i + 1, Int(-1));
    l.set(4, 7, Int(-1));
    return l;
}

}  // namespace geograph
