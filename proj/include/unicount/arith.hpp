#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace unicount {

using Int = mpz_class;
using Rat = mpq_class;

// Invalid user-supplied data: bad file, singular matrix, dimension mismatch.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A violated internal invariant. Reaching one of these is a bug, not a
// property of the input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Estimated work exceeds the configured budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_mod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact square root of a nonnegative rational; both numerator and
// denominator must be perfect squares.
Rat rat_sqrt(const Rat& q, const char* what);

Int factorial(unsigned n);

// Strict base-10 integer parse (optional leading '-').
Int parse_int(const std::string& s);

std::string rat_str(const Rat& q);

}  // namespace unicount
