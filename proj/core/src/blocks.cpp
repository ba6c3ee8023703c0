#include "geograph/blocks.hpp"

#include <charconv>

#include "geograph/errors.hpp"

namespace geograph {

namespace {

constexpr std::size_t kMaxDenseRank = 2048;

void check_rank_budget(std::size_t rank, std::string_view name) {
    if (rank > kMaxDenseRank) {
        throw Error(std::string("building_block: dense lattice for ") +
                    std::string(name) + " would have rank " +
                    std::to_string(rank) +
                    "; use xn_characteristics/bundle_on_Xn instead");
    }
}

// U^3 + r<-1>, c1 = -(e_1 + ... + e_r): the rational building blocks with
// r = 2 (Q) and r = 3 (Q*).
FourManifoldData rational_block(std::string name, std::size_t r, Int c2) {
    FourManifoldData d;
    d.name = std::move(name);
    IntersectionLattice l = rank2_block(0);
    l.append(rank2_block(0)).append(rank2_block(0));
    l.append(diag_lattice(std::vector<Int>(r, Int(-1))));
    LineClass c1 = LineClass::zero(l.rank());
    for (std::size_t i = 0; i < r; ++i) c1.add(-1, 6 + i);
    d.c1sq = l.pair(c1, c1);
    d.c1_pairings = l.pairings(c1);
    d.lattice = std::move(l);
    d.c1 = std::move(c1);
    d.c2 = std::move(c2);
    return d;
}

FourManifoldData p_block() {
    FourManifoldData d;
    d.name = "P";
    std::vector<Int> diag{Int(1)};
    diag.insert(diag.end(), 16, Int(-1));
    IntersectionLattice l = diag_lattice(diag);
    LineClass c1 = LineClass::zero(17);
    c1.add(3, 0);
    for (std::size_t i = 1; i <= 16; ++i) c1.add(-1, i);
    d.c1sq = l.pair(c1, c1);
    d.c1_pairings = l.pairings(c1);
    d.lattice = std::move(l);
    d.c1 = std::move(c1);
    d.c2 = 19;
    return d;
}

// Surface of general type used as an optional block; only its characteristic
// numbers are tracked (c1^2 = 2 c2 + 3 sigma with c2 = 23, sigma = -15).
// The planner never selects it.
FourManifoldData s_block() {
    FourManifoldData d;
    d.name = "S";
    d.c1sq = 1;
    d.c2 = 23;
    return d;
}

FourManifoldData xn_block(int n) {
    if (n < 1) throw UnknownBlock("X(n) requires n >= 1");
    check_rank_budget(static_cast<std::size_t>(n) * 8, "X(n)");
    FourManifoldData d = xn_characteristics(Int(n));
    IntersectionLattice l = minus_e8();
    for (int i = 1; i < n; ++i) l.append(minus_e8());
    // c1 pairs to zero with every vanishing cycle, but is not a class of
    // this sublattice, so it stays abstract.
    d.c1_pairings = std::vector<Int>(l.rank(), Int(0));
    d.lattice = std::move(l);
    return d;
}

}  // namespace

Int FourManifoldData::c1N_pair(const LineClass& v) const {
    if (!c1_pairings) {
        throw AbstractManifold(name + ": c1 pairings are not known");
    }
    if (v.coeffs.size() != c1_pairings->size()) {
        throw DimensionMismatch(name + ": class rank does not match");
    }
    Int total = 0;
    for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
        total += (*c1_pairings)[i] * v.coeffs[i];
    }
    return total;
}

bool FourManifoldData::consistent() const {
    if (lattice && !lattice->symmetric()) return false;
    if (c1) {
        if (!lattice) return false;
        if (lattice->pair(*c1, *c1) != c1sq) return false;
        if (c1_pairings && lattice->pairings(*c1) != *c1_pairings) return false;
    }
    return divides(12, c1sq + c2);
}

FourManifoldData elliptic_surface(int n) {
    if (n < 1) throw Error("elliptic_surface: n must be >= 1");
    check_rank_budget(static_cast<std::size_t>(n) * 12, "E(n)");
    FourManifoldData d;
    d.name = "E(" + std::to_string(n) + ")";
    IntersectionLattice l = minus_e8();
    for (int i = 1; i < n; ++i) l.append(minus_e8());
    for (int i = 0; i < 2 * (n - 1); ++i) l.append(rank2_block(-2));
    l.append(rank2_block(Int(-n)));
    LineClass c1 = LineClass::zero(l.rank());
    c1.add(Int(2 - n), l.rank() - 2);  // f = first vector of the last block
    d.c1sq = l.pair(c1, c1);
    d.c1_pairings = l.pairings(c1);
    d.lattice = std::move(l);
    d.c1 = std::move(c1);
    d.c2 = 12 * Int(n);
    return d;
}

FourManifoldData building_block(std::string_view name) {
    if (name == "Q") return rational_block("Q", 2, Int(2));
    if (name == "Q*") return rational_block("Q*", 3, Int(3));
    if (name == "S") return s_block();
    if (name == "P") return p_block();
    if (name.size() >= 4 && (name[0] == 'E' || name[0] == 'X') &&
        name[1] == '(' && name.back() == ')') {
        int n = 0;
        const char* first = name.data() + 2;
        const char* last = name.data() + name.size() - 1;
        auto [ptr, ec] = std::from_chars(first, last, n);
        if (ec == std::errc() && ptr == last && n >= 1) {
            return name[0] == 'E' ? elliptic_surface(n) : xn_block(n);
        }
    }
    throw UnknownBlock("unknown building block '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
    return {"Q", "Q*", "S", "P", "E(1)", "E(2)", "E(3)", "X(1)", "X(2)"};
}

FourManifoldData xn_characteristics(const Int& n) {
    if (n < 1) throw UnknownBlock("X(n) requires n >= 1");
    FourManifoldData base = building_block("Q*");
    FourManifoldData d;
    d.name = "X(" + to_string(n) + ")";
    d.c1sq = base.c1sq;
    d.c2 = base.c2 + 12 * n;
    return d;
}

LineClass xn_bundle_class(int n) {
    if (n < 1) throw UnknownBlock("X(n) requires n >= 1");
    LineClass c = LineClass::zero(static_cast<std::size_t>(n) * 8);
    for (int i = 0; i + 1 < n; ++i) c.add(2, static_cast<std::size_t>(i) * 8);
    std::size_t last = static_cast<std::size_t>(n - 1) * 8;
    c.add(1, last).add(1, last + 1).add(1, last + 2).add(1, last + 7);
    return c;
}

std::pair<Int, Int> bundle_on_Xn(const Int& n) {
    if (n < 1) throw UnknownBlock("X(n) requires n >= 1");
    IntersectionLattice e8 = minus_e8();
    LineClass doubled = LineClass::zero(8);
    doubled.add(2, 0);
    LineClass tail = LineClass::zero(8);
    tail.add(1, 0).add(1, 1).add(1, 2).add(1, 7);
    // The n(-E8) Gram matrix is block diagonal, so the self-pairing is a sum
    // of per-copy pairings: n - 1 doubled cycles plus the 4-cycle tail.
    Int c1sq_e = (n - 1) * e8.pair(doubled, doubled) + e8.pair(tail, tail);
    // c1(X(n)) pairs to zero with every vanishing cycle.
    std::vector<Int> zero_pairings(8, Int(0));
    Int c1n_c1e = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        c1n_c1e += zero_pairings[i] * (doubled.coeffs[i] * (n - 1) + tail.coeffs[i]);
    }
    return {c1sq_e, c1n_c1e};
}

}  // namespace geograph
