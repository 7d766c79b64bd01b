// poly.cpp
#include "a5/poly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace a5 {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& c)
{
    if (c != 0) c_.push_back(c);
}

Poly Poly::monomial(const Rational& c, int k)
{
    if (c == 0) return {};
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::valuation() const
{
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<int>(k);
    return -1;
}

Rational Poly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

Rational Poly::eval(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return Poly(std::move(d));
}

Poly Poly::monic() const
{
    if (is_zero()) return {};
    Poly r = *this;
    const Rational inv = 1 / lead();
    for (auto& x : r.c_) x *= inv;
    return r;
}

Poly Poly::shifted(const Rational& c) const
{
    // Horner in the shifted variable.
    Poly r;
    const Poly lin(std::vector<Rational>{c, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + Poly(*it);
    return r;
}

Poly Poly::reflected() const
{
    Poly r = *this;
    for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
    return r;
}

Poly Poly::reversed(int n) const
{
    if (n < degree()) throw std::domain_error("reversed: n below degree");
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= degree(); ++k) v[static_cast<std::size_t>(n - k)] = c_[static_cast<std::size_t>(k)];
    return Poly(std::move(v));
}

Poly Poly::drop_low(int k) const
{
    if (is_zero()) return {};
    if (k > valuation()) throw std::domain_error("drop_low: not divisible");
    return Poly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

Poly operator-(const Poly& a)
{
    Poly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

std::string Poly::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const bool unit = mag == 1 && k > 0;
        if (!unit) os << a5::to_string(mag);
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
    const Rational inv = 1 / b.lead();
    for (int k = a.degree(); k >= db; --k) {
        const Rational c = r[static_cast<std::size_t>(k)] * inv;
        if (c == 0) continue;
        q[static_cast<std::size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p)
{
    Integer g = 0;
    for (const auto& x : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (p.back() < 0) g = -g;
    if (g != 1 && g != 0)
        for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntPoly to_int(const Poly& p)
{
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntPoly v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Integer x = c.get_num() * (l / c.get_den());
        v.push_back(x);
    }
    make_primitive(v);
    return v;
}

// Pseudo-remainder of a by b.
IntPoly prem(IntPoly a, const IntPoly& b)
{
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& x : a) x *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

Poly from_int(const IntPoly& v)
{
    std::vector<Rational> c(v.begin(), v.end());
    return Poly(std::move(c));
}

} // namespace

std::vector<Integer> primitive_integer_coeffs(const Poly& p)
{
    if (p.is_zero()) return {};
    return to_int(p);
}

Poly gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Poly(Rational(1));
    IntPoly x = to_int(a), y = to_int(b);
    if (x.size() < y.size()) std::swap(x, y);
    for (;;) {
        IntPoly r = prem(x, y);
        if (r.empty()) return from_int(y).monic();
        if (r.size() == 1) return Poly(Rational(1));
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
}

Poly squarefree_part(const Poly& p)
{
    if (p.degree() <= 0) return p.is_zero() ? Poly() : Poly(Rational(1));
    return exact_div(p.monic(), gcd(p, p.derivative())).monic();
}

namespace {

Integer pollard_rho(const Integer& n)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        auto f = [&](const Integer& v) {
            Integer r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            Integer diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, int>& out)
{
    if (n <= 1) return;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<Integer> divisors(const Integer& n)
{
    std::map<Integer, int> f;
    factor_into(abs(n), f);
    std::vector<Integer> ds{Integer(1)};
    for (const auto& [p, e] : f) {
        const std::size_t base = ds.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    return ds;
}

bool is_root(const IntPoly& a, const Integer& p, const Integer& q)
{
    // sum a_k p^k q^(n-k) == 0
    Integer acc = 0;
    Integer qpow = 1;
    const std::size_t n = a.size() - 1;
    std::vector<Integer> qp(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        qp[k] = qpow;
        qpow *= q;
    }
    for (std::size_t k = n + 1; k-- > 0;) acc = acc * p + a[k] * qp[n - k];
    return acc == 0;
}

} // namespace

std::vector<Rational> rational_roots(const Poly& poly)
{
    std::vector<Rational> roots;
    if (poly.degree() <= 0) return roots;
    Poly p = squarefree_part(poly);
    if (p.valuation() > 0) {
        roots.emplace_back(0);
        p = p.drop_low(p.valuation());
    }
    if (p.degree() >= 1) {
        IntPoly a = to_int(p);
        std::set<Rational> found;
        const auto ps = divisors(a.front());
        const auto qs = divisors(a.back());
        for (const auto& q : qs) {
            for (const auto& pp : ps) {
                for (int sign : {1, -1}) {
                    Integer num = pp * sign;
                    Integer g;
                    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
                    if (g != 1) continue;
                    if (is_root(a, num, q)) found.insert(Rational(num, q));
                }
            }
        }
        roots.insert(roots.end(), found.begin(), found.end());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace a5
