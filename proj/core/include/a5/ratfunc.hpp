// ratfunc.hpp - rational functions of t over Q in canonical form
#pragma once

#include "a5/poly.hpp"

#include <string>

namespace a5 {

// num/den with gcd(num, den) = 1 and den monic. Structural equality is
// field equality.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {} // NOLINT
    RatFunc(Poly p) : num_(std::move(p)), den_(Rational(1)) {} // NOLINT
    // Throws std::domain_error when den is zero.
    RatFunc(const Poly& num, const Poly& den);

    static RatFunc t() { return RatFunc(Poly::t()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    Rational eval(const Rational& x) const; // throws at a pole
    RatFunc derivative() const;
    RatFunc reflected() const; // f(-t)
    bool is_odd() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend RatFunc operator-(const RatFunc& a);
    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    static RatFunc raw(Poly num, Poly den);
    void canonicalize();
    Poly num_;
    Poly den_;
};

} // namespace a5
