// laurent.hpp - truncated Laurent expansions at 0, infinity, or a rational point
#pragma once

#include "a5/ratfunc.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace a5 {

struct ExpansionPoint {
    enum class Kind { Zero, Infinity, Finite };
    Kind kind = Kind::Zero;
    Rational c; // used when kind == Finite

    static ExpansionPoint zero() { return {Kind::Zero, Rational(0)}; }
    static ExpansionPoint infinity() { return {Kind::Infinity, Rational(0)}; }
    static ExpansionPoint at(const Rational& c)
    {
        return c == 0 ? zero() : ExpansionPoint{Kind::Finite, c};
    }
    std::string to_string() const;
};

// Coefficients in the local variable u: u = t (zero), u = t - c (finite),
// u = 1/t (infinity). Stored u-exponents run from min_exponent through
// order; at infinity this is t^(-min_exponent) down to t^(-order).
struct LaurentSeries {
    ExpansionPoint point;
    int min_exponent = 0;
    int order = 0;
    std::vector<Rational> coeffs;

    // Coefficient of u^k.
    Rational local(int k) const;
    // Coefficient of t^e at infinity, (t - c)^e at a finite point, t^e at 0.
    Rational at(int e) const;
    bool is_zero() const;
};

// Expansion through u^order (at infinity: through t^(-order)).
LaurentSeries laurent_expand(const RatFunc& f, const ExpansionPoint& p, int order);

// Coefficient of (t-c)^-1 (finite), t^-1 (zero), or minus the t^-1
// coefficient at infinity.
Rational residue(const RatFunc& f, const ExpansionPoint& p);

// Exponent of u in the leading term (+infinity for the zero function is
// reported as a large sentinel).
int local_valuation(const RatFunc& f, const ExpansionPoint& p);

struct PoleSupport {
    std::vector<Rational> rational;
    bool irrational = false; // den has a nonconstant factor without rational roots
};

PoleSupport pole_support(const RatFunc& f);

} // namespace a5
