#include "unicount/arith.hpp"

namespace unicount {

Rat rat_sqrt(const Rat& q, const char* what) {
    if (sgn(q) < 0) throw internal_error(what);
    Rat c = q;
    c.canonicalize();
    const mpz_class& num = c.get_num();
    const mpz_class& den = c.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        throw internal_error(what);
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(rn, rd);
}

Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Int parse_int(const std::string& s) {
    if (s.empty()) throw input_error("empty integer literal");
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw input_error("bad integer literal: " + s);
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw input_error("bad integer literal: " + s);
    return Int(s, 10);
}

std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace unicount
