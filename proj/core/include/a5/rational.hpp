// rational.hpp - exact integers and rationals (GMP backed)
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace a5 {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown for malformed textual input (rationals, words, JSON fields).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Accepts "p", "-p", "p/q"; surrounding blanks are ignored.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_even_integer(const Rational& q)
{
    return is_integer(q) && mpz_even_p(q.get_num_mpz_t()) != 0;
}

Integer floor(const Rational& q);

// Representative of q mod Z in [0, 1).
Rational frac(const Rational& q);

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace a5
