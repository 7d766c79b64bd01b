// laurent.cpp
#include "a5/laurent.hpp"

#include <climits>
#include <stdexcept>

namespace a5 {

std::string ExpansionPoint::to_string() const
{
    switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Infinity: return "inf";
    case Kind::Finite: return a5::to_string(c);
    }
    return "?";
}

Rational LaurentSeries::local(int k) const
{
    if (k < min_exponent || k > order) return 0;
    return coeffs[static_cast<std::size_t>(k - min_exponent)];
}

Rational LaurentSeries::at(int e) const
{
    return point.kind == ExpansionPoint::Kind::Infinity ? local(-e) : local(e);
}

bool LaurentSeries::is_zero() const
{
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

namespace {

// f written in the local variable u as num(u)/den(u).
std::pair<Poly, Poly> localize(const RatFunc& f, const ExpansionPoint& p)
{
    switch (p.kind) {
    case ExpansionPoint::Kind::Zero: return {f.num(), f.den()};
    case ExpansionPoint::Kind::Finite: return {f.num().shifted(p.c), f.den().shifted(p.c)};
    case ExpansionPoint::Kind::Infinity: {
        const int n = std::max(f.num().degree(), f.den().degree());
        return {f.num().reversed(n), f.den().reversed(n)};
    }
    }
    throw std::logic_error("bad expansion point");
}

} // namespace

int local_valuation(const RatFunc& f, const ExpansionPoint& p)
{
    if (f.is_zero()) return INT_MAX;
    auto [n, d] = localize(f, p);
    return n.valuation() - d.valuation();
}

LaurentSeries laurent_expand(const RatFunc& f, const ExpansionPoint& p, int order)
{
    LaurentSeries s;
    s.point = p;
    s.order = order;
    if (f.is_zero()) {
        s.min_exponent = order;
        s.coeffs.assign(1, Rational(0));
        return s;
    }
    auto [n, d] = localize(f, p);
    const int vn = n.valuation();
    const int vd = d.valuation();
    n = n.drop_low(vn);
    d = d.drop_low(vd);
    const int v = vn - vd;
    s.min_exponent = v;
    if (order < v) throw std::domain_error("laurent_expand: order below the leading exponent");
    const int terms = order - v + 1;
    // Power series division n/d with d(0) != 0.
    std::vector<Rational> q(static_cast<std::size_t>(terms));
    const Rational inv = 1 / d.coeff(0);
    for (int k = 0; k < terms; ++k) {
        Rational acc = n.coeff(k);
        const int top = std::min(k, d.degree());
        for (int j = 1; j <= top; ++j) acc -= d.coeffs()[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
        q[static_cast<std::size_t>(k)] = acc * inv;
    }
    s.coeffs = std::move(q);
    return s;
}

Rational residue(const RatFunc& f, const ExpansionPoint& p)
{
    if (f.is_zero()) return 0;
    if (p.kind == ExpansionPoint::Kind::Infinity) {
        const int v = local_valuation(f, p);
        if (v > 1) return 0;
        return -laurent_expand(f, p, 1).local(1);
    }
    const int v = local_valuation(f, p);
    if (v >= 0) return 0;
    return laurent_expand(f, p, -1).local(-1);
}

PoleSupport pole_support(const RatFunc& f)
{
    PoleSupport ps;
    if (f.den().degree() <= 0) return ps;
    ps.rational = rational_roots(f.den());
    Poly rest = squarefree_part(f.den());
    for (const auto& r : ps.rational) rest = exact_div(rest, Poly(std::vector<Rational>{-r, Rational(1)}));
    ps.irrational = rest.degree() > 0;
    return ps;
}

} // namespace a5
