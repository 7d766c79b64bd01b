// ratfunc.cpp
#include "a5/ratfunc.hpp"

#include <stdexcept>

namespace a5 {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den)
{
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    canonicalize();
}

RatFunc RatFunc::raw(Poly num, Poly den)
{
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

void RatFunc::canonicalize()
{
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    const Rational l = den_.lead();
    if (l != 1) {
        const Rational inv = 1 / l;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFunc::eval(const Rational& x) const
{
    const Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.eval(x) / d;
}

RatFunc RatFunc::derivative() const
{
    if (is_polynomial()) return RatFunc(num_.derivative());
    // (n' d - n d') / d^2, reduced by g = gcd(d, d') first.
    const Poly dd = den_.derivative();
    const Poly g = gcd(den_, dd);
    const Poly d1 = exact_div(den_, g);
    const Poly top = num_.derivative() * d1 - num_ * exact_div(dd, g);
    RatFunc r = raw(top, d1 * den_);
    r.canonicalize();
    return r;
}

RatFunc RatFunc::reflected() const
{
    RatFunc r = raw(num_.reflected(), den_.reflected());
    r.canonicalize();
    return r;
}

bool RatFunc::is_odd() const { return reflected() == -*this; }

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (den_.degree() > 0) canonicalize();
        else if (num_.is_zero()) den_ = Poly(Rational(1));
        return *this;
    }
    const Poly g = gcd(den_, o.den_);
    const Poly a = exact_div(den_, g);
    const Poly b = exact_div(o.den_, g);
    num_ = num_ * b + o.num_ * a;
    den_ = a * o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    // Cross-cancel before multiplying to keep degrees small.
    const Poly g1 = gcd(num_, o.den_);
    const Poly g2 = gcd(o.num_, den_);
    Poly n = exact_div(num_, g1) * exact_div(o.num_, g2);
    Poly d = exact_div(den_, g2) * exact_div(o.den_, g1);
    num_ = std::move(n);
    den_ = std::move(d);
    const Rational l = den_.lead();
    if (l != 1) {
        const Rational inv = 1 / l;
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o)
{
    if (o.is_zero()) throw std::domain_error("division by the zero function");
    RatFunc inv = raw(o.den_, o.num_);
    const Rational l = inv.den_.lead();
    inv.num_ *= 1 / l;
    inv.den_ *= 1 / l;
    return *this *= inv;
}

RatFunc operator-(const RatFunc& a)
{
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
}

std::string RatFunc::to_string() const
{
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace a5
