// poly.hpp - dense univariate polynomials over Q
#pragma once

#include "a5/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace a5 {

// Coefficient k multiplies t^k. The zero polynomial has no coefficients;
// otherwise the last stored coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(const Rational& c); // NOLINT: constants convert implicitly

    static Poly monomial(const Rational& c, int k);
    static Poly t() { return monomial(Rational(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    // Exponent of the lowest nonzero term; -1 for the zero polynomial.
    int valuation() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    const Rational& lead() const { return c_.back(); }

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly monic() const;
    Poly shifted(const Rational& c) const;   // p(t + c)
    Poly reflected() const;                   // p(-t)
    Poly reversed(int n) const;               // t^n p(1/t), requires n >= degree
    Poly drop_low(int k) const;               // p / t^k, requires k <= valuation

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Quotient when b | a is known; throws std::domain_error otherwise.
Poly exact_div(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Squarefree part (product of distinct irreducible factors), monic.
Poly squarefree_part(const Poly& p);

// Integer coefficient vector proportional to p with content 1 and
// positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const Poly& p);

// Distinct rational roots of p, ascending.
std::vector<Rational> rational_roots(const Poly& p);

} // namespace a5
