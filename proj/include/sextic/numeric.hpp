#ifndef SEXTIC_NUMERIC_HPP
#define SEXTIC_NUMERIC_HPP

/* Exact scalars for the whole library: arbitrary-precision integers and
 * rationals on top of GMP.  Everything downstream is exact; there is no
 * floating point anywhere.
 */

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace sextic {

using Int = mpz_class;
using Rat = mpq_class;

/* Input violating a documented precondition (excluded parameter, zero
 * polynomial, mismatched fields, ...). */
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* A property the mathematics guarantees has failed to hold.  Signals a bug
 * in this library (or a corrupted table), never a bad input. */
struct inconsistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

/* An explicitly configured work limit would be exceeded. */
struct work_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(Int num, Int den) {
    if (sgn(den) == 0)
        throw domain_error("make_rat: zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int to_int(const Rat& r) {
    if (!is_integer(r))
        throw inconsistency_error("expected an integer, got " + r.get_str());
    return r.get_num();
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    return sgn(d) != 0 && mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int exact_div(const Int& a, const Int& d) {
    if (!divides(d, a))
        throw inconsistency_error("exact_div: " + d.get_str() + " does not divide " + a.get_str());
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

/* Residue in [0, m), m > 0. */
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline std::optional<Int> mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        return std::nullopt;
    return r;
}

/* Exact square root of a nonnegative perfect square, nullopt otherwise. */
inline std::optional<Int> exact_sqrt(const Int& n) {
    if (sgn(n) < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0)
        return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/* Strict decimal parse (optional leading '-', digits only). */
inline Int parse_int(const std::string& s) {
    if (s.empty())
        throw domain_error("parse_int: empty string");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size())
        throw domain_error("parse_int: no digits in '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw domain_error("parse_int: bad digit in '" + s + "'");
    return Int(s, 10);
}

}  // namespace sextic

#endif
