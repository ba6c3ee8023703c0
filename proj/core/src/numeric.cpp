#include "geograph/numeric.hpp"

#include <cctype>

#include "geograph/errors.hpp"

namespace geograph {

Int residue(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool divides(const Int& d, const Int& x) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

Int exact_div(const Int& x, const Int& d) {
    if (!divides(d, x)) {
        throw DivisibilityViolation("exact_div: " + to_string(d) +
                                    " does not divide " + to_string(x));
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return q;
}

Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rat& q) {
    return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0;
}

Int to_integer(const Rat& q) {
    if (!is_integer(q)) {
        throw DivisibilityViolation("to_integer: " + to_string(q) +
                                    " is not integral");
    }
    return q.get_num();
}

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()),
               mpq_denref(q.get_mpq_t()));
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()),
               mpq_denref(q.get_mpq_t()));
    return r;
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& q) { return q.get_str(); }

Int parse_int(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) {
        throw MalformedPlan("parse_int: '" + text + "' is not an integer");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw MalformedPlan("parse_int: '" + text + "' is not an integer");
        }
    }
    return Int(text, 10);
}

}  // namespace geograph
