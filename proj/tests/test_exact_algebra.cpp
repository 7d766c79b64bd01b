// test_exact_algebra.cpp - rationals, polynomials, rational functions, Laurent series
#include "support.hpp"

#include <doctest.h>

using namespace a5;
using namespace a5::testing;

namespace {

RatFunc T() { return RatFunc::t(); }

Poly P(std::vector<Rational> c) { return Poly(std::move(c)); }

RatFunc rf(std::vector<Rational> num, std::vector<Rational> den)
{
    return RatFunc(Poly(std::move(num)), Poly(std::move(den)));
}

// Schoolbook long division on plain coefficient lists (oracle).
std::vector<Rational> long_division(std::vector<Rational> a, const std::vector<Rational>& b)
{
    std::vector<Rational> quo(a.size() - b.size() + 1);
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rational c = a[k + b.size() - 1] / b.back();
        quo[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    return quo;
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational(" -2/4 ") == q(-1, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK(floor(q(-1, 2)) == -1);
    CHECK(frac(q(-1, 3)) == q(2, 3));
    CHECK(is_even_integer(q(-4)));
    CHECK_FALSE(is_even_integer(q(3)));
}

TEST_CASE("canonical rational functions")
{
    CHECK(T() + T() == RatFunc(Poly::monomial(2, 1)));
    CHECK(T() * (RatFunc(1) / T()) == RatFunc(1));
    const RatFunc f = rf({2, 4}, {4, 2}); // (4t+2)/(2t+4) = (2t+1)/(t+2)
    CHECK(f.den().lead() == 1);
    CHECK(f == rf({1, 2}, {2, 1}));
    CHECK_THROWS_AS(T() / RatFunc(0), std::domain_error);
    CHECK_THROWS(rf({1}, {}));
}

TEST_CASE("division against long division oracle")
{
    // (t^2 - 1)/(t - 1) = t + 1
    const RatFunc a = rf({-1, 0, 1}, {1});
    const RatFunc b = rf({-1, 1}, {1});
    CHECK(a / b == rf({1, 1}, {1}));
    Gen g(11);
    for (int n = 0; n < 50; ++n) {
        const Poly b2 = g.poly(3);
        const Poly qt = g.poly(3);
        if (b2.is_zero() || b2.degree() < 1 || qt.is_zero()) continue;
        const Poly prod = b2 * qt;
        const auto oracle = long_division(prod.coeffs(), b2.coeffs());
        CHECK(Poly(oracle) == qt);
        CHECK(divmod(prod, b2).first == qt);
        CHECK(divmod(prod, b2).second.is_zero());
    }
}

TEST_CASE("derivative examples")
{
    CHECK(T().derivative() == RatFunc(1));
    CHECK((RatFunc(1) / T()).derivative() == rf({-1}, {0, 0, 1}));
    const RatFunc f = T() + RatFunc(q(1, 2)) / T();
    CHECK(f.derivative() == RatFunc(1) - RatFunc(q(1, 2)) / (T() * T()));
    // numeric check through difference quotients with shrinking step
    for (const Rational x : {q(1), q(2), q(-3), q(1, 2), q(5, 3)}) {
        const Rational h(1, 1000000);
        const Rational dq = (f.eval(x + h) - f.eval(x - h)) / (2 * h);
        const Rational err = dq - f.derivative().eval(x);
        CHECK(abs(err) < Rational(1, 100000));
    }
}

TEST_CASE("Laurent expansion examples")
{
    const RatFunc f = T() + RatFunc(q(1, 2)) / T();
    const auto s = laurent_expand(f, ExpansionPoint::infinity(), 3);
    CHECK(s.at(1) == 1);
    CHECK(s.at(-1) == q(1, 2));
    for (int e : {0, -2, -3}) CHECK(s.at(e) == 0);

    const RatFunc g = RatFunc(q(-1, 2)) / T();
    CHECK(laurent_expand(g, ExpansionPoint::zero(), 2).at(-1) == q(-1, 2));

    // t/(t^2 - 1) = -t (1 + t^2 + t^4 + ...)
    const RatFunc h = rf({0, 1}, {-1, 0, 1});
    const auto hs = laurent_expand(h, ExpansionPoint::zero(), 5);
    for (int e = 0; e <= 5; ++e) CHECK(hs.at(e) == (e % 2 == 1 ? -1 : 0));
    CHECK_THROWS_AS(laurent_expand(RatFunc(1) / (T() * T()), ExpansionPoint::zero(), -3), std::domain_error);
}

TEST_CASE("residues")
{
    CHECK(residue(T() + RatFunc(q(1, 2)) / T(), ExpansionPoint::infinity()) == q(-1, 2));
    CHECK(residue(RatFunc(q(-1, 2)) / T(), ExpansionPoint::zero()) == q(-1, 2));
    const RatFunc f = rf({0, 1}, {-4, 0, 1});
    const Rational limit = (rf({-2, 1}, {1}) * f).eval(2); // (t-2) f at t=2
    CHECK(residue(f, ExpansionPoint::at(2)) == limit);
    CHECK(limit == q(1, 2));
    CHECK(residue(T(), ExpansionPoint::at(3)) == 0);
}

TEST_CASE("pole support")
{
    auto s1 = pole_support(RatFunc(1) / T());
    CHECK(s1.rational == std::vector<Rational>{0});
    CHECK_FALSE(s1.irrational);
    auto s2 = pole_support(T());
    CHECK(s2.rational.empty());
    CHECK_FALSE(s2.irrational);
    auto s3 = pole_support(rf({1}, {1, 0, 1}));
    CHECK(s3.rational.empty());
    CHECK(s3.irrational);
    // rational root theorem oracle on a product of known linear factors
    const Poly p = P({-3, 2}) * P({5, 7}) * P({1, 0, 1});
    std::vector<Rational> roots = rational_roots(p);
    CHECK(roots == std::vector<Rational>{q(-5, 7), q(3, 2)});
}

TEST_CASE("gcd and squarefree part")
{
    const Poly a = P({-1, 1}) * P({2, 1}) * P({2, 1});
    const Poly b = P({2, 1}) * P({1, 0, 1});
    CHECK(gcd(a, b) == P({2, 1}));
    CHECK(squarefree_part(a) == (P({-1, 1}) * P({2, 1})).monic());
    CHECK(gcd(Poly(), Poly()).is_zero());
}

TEST_CASE("property: field laws and canonical form")
{
    Gen g(2024);
    for (int n = 0; n < 150; ++n) {
        const RatFunc a = g.ratfunc(), b = g.ratfunc(), c = g.ratfunc();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        // canonicalizing again changes nothing
        CHECK(RatFunc(a.num(), a.den()) == a);
        CHECK(a.den().lead() == 1);
        CHECK(gcd(a.num(), a.den()).degree() <= 0);
    }
}

TEST_CASE("property: derivative linearity and Leibniz rule")
{
    Gen g(7);
    for (int n = 0; n < 100; ++n) {
        const RatFunc a = g.ratfunc(), b = g.ratfunc();
        const Rational k = g.rational();
        CHECK((a + RatFunc(k) * b).derivative() == a.derivative() + RatFunc(k) * b.derivative());
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("property: residue agrees with expansion and re-summation")
{
    Gen g(99);
    for (int n = 0; n < 100; ++n) {
        const RatFunc f = g.ratfunc();
        for (const auto& pt : {ExpansionPoint::zero(), ExpansionPoint::infinity(), ExpansionPoint::at(q(1, 2))}) {
            const int v = local_valuation(f, pt);
            if (f.is_zero()) continue;
            const int order = std::max(v, 0) + 4;
            const auto s = laurent_expand(f, pt, order);
            const Rational expected = pt.kind == ExpansionPoint::Kind::Infinity ? -s.local(1) : s.local(-1);
            CHECK(residue(f, pt) == expected);
            // f minus the re-summed series vanishes beyond the order
            RatFunc u = pt.kind == ExpansionPoint::Kind::Infinity ? RatFunc(1) / T()
                      : pt.kind == ExpansionPoint::Kind::Zero     ? T()
                                                                  : T() - RatFunc(pt.c);
            RatFunc sum;
            for (int k = s.min_exponent; k <= order; ++k) {
                if (s.local(k) == 0) continue;
                RatFunc term(s.local(k));
                for (int e = 0; e < std::abs(k); ++e) term = k > 0 ? term * u : term / u;
                sum += term;
            }
            CHECK(local_valuation(f - sum, pt) > order);
        }
    }
}

TEST_CASE("property: oddness detector")
{
    Gen g(5);
    for (int n = 0; n < 60; ++n) {
        const RatFunc f = g.ratfunc();
        const RatFunc odd = f - f.reflected();
        CHECK(odd.is_odd());
        CHECK(odd.reflected() == -odd);
        CHECK(f.is_odd() == (f.reflected() == -f));
    }
    CHECK((T() + RatFunc(q(1, 2)) / T()).is_odd());
    CHECK_FALSE((T() + RatFunc(1)).is_odd());
}
