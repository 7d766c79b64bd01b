// support.hpp - generators and independent oracles shared by the tests
#pragma once

#include "a5/classifier.hpp"

#include <array>
#include <random>
#include <set>
#include <vector>

namespace a5::testing {

inline Rational q(long n, long d = 1) { return make_rational(n, d); }

inline Params params(std::initializer_list<Rational> xs)
{
    std::array<Rational, 6> a;
    std::size_t k = 0;
    for (const auto& x : xs) a[k++] = x;
    return Params(a);
}

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int span = 12, int max_den = 9)
    {
        return make_rational(uniform(-span, span), uniform(1, max_den));
    }

    // Generic free value: avoids small denominators that create coincidences.
    Rational generic_value()
    {
        static const int dens[] = {7, 11, 13, 17, 19, 23};
        return make_rational(uniform(-30, 30), dens[uniform(0, 5)]);
    }

    Poly poly(int max_deg = 3)
    {
        std::vector<Rational> c;
        const int d = uniform(0, max_deg);
        for (int k = 0; k <= d; ++k) c.push_back(rational(5, 4));
        return Poly(c);
    }

    RatFunc ratfunc()
    {
        Poly den = poly(2);
        while (den.is_zero()) den = poly(2);
        return RatFunc(poly(3), den);
    }

    Params params()
    {
        std::array<Rational, 6> a;
        Rational sum = 0;
        for (int k = 0; k < 5; ++k) {
            a[static_cast<std::size_t>(k)] = rational(6, 6);
            sum += a[static_cast<std::size_t>(k)];
        }
        a[5] = 1 - sum;
        return Params(a);
    }

    Generator letter()
    {
        const int g = uniform(0, 7);
        if (g < 6) return Generator::s(g);
        return g == 6 ? Generator::pi() : Generator::pi_inv();
    }

    TransformWord word(int max_len = 8)
    {
        TransformWord w;
        const int n = uniform(0, max_len);
        for (int k = 0; k < n; ++k) w.letters.push_back(letter());
        return w;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

inline constexpr std::array<SeedKind, 5> kSeedKinds = {SeedKind::A1, SeedKind::A2, SeedKind::A3, SeedKind::B,
                                                      SeedKind::C};

struct Generated {
    Solution solution;
    SeedKind kind;
    Rational x;
    TransformWord word;
};

// Seed images under random words; deterministic for a fixed rng seed.
inline std::vector<Generated> generated_solutions(unsigned seed, int per_kind, int max_len = 8)
{
    Gen g(seed);
    std::vector<Generated> out;
    for (SeedKind k : kSeedKinds) {
        for (int n = 0; n < per_kind; ++n) {
            const Rational x = g.generic_value();
            const int anchor = g.uniform(0, 5);
            const TransformWord w = g.word(max_len);
            out.push_back({act_solution_word(a5::seed(k, x, anchor), w), k, x, w});
        }
    }
    return out;
}

// ---- independent oracles (raw coefficient evaluation, no RatFunc arithmetic) ----

inline Rational horner(const std::vector<Rational>& c, const Rational& x)
{
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline std::vector<Rational> raw_derivative(const std::vector<Rational>& c)
{
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<long>(k));
    return d;
}

struct PointValue {
    Rational value;
    Rational slope;
};

// f(x) and f'(x) from the coefficient lists by the quotient rule.
inline std::optional<PointValue> eval_raw(const RatFunc& f, const Rational& x)
{
    const auto& n = f.num().coeffs();
    const auto& d = f.den().coeffs();
    const Rational dv = horner(d, x);
    if (dv == 0) return std::nullopt;
    const Rational nv = horner(n, x);
    const Rational np = horner(raw_derivative(n), x);
    const Rational dp = horner(raw_derivative(d), x);
    return PointValue{nv / dv, (np * dv - nv * dp) / (dv * dv)};
}

// Evaluates the six equations at sample points; true when all vanish.
inline bool residual_oracle(const Solution& s, const std::vector<Rational>& points)
{
    int used = 0;
    for (const auto& x : points) {
        std::array<PointValue, 6> v;
        bool ok = true;
        for (int j = 0; j < 6 && ok; ++j) {
            auto pv = eval_raw(s[j], x);
            ok = pv.has_value();
            if (ok) v[static_cast<std::size_t>(j)] = *pv;
        }
        if (!ok) continue;
        ++used;
        auto F = [&](int j) -> const Rational& { return v[static_cast<std::size_t>(mod6(j))].value; };
        for (int i = 0; i < 6; ++i) {
            const Rational quad = F(i + 1) * F(i + 2) + F(i + 1) * F(i + 4) + F(i + 3) * F(i + 4)
                                - F(i + 2) * F(i + 3) - F(i + 2) * F(i + 5) - F(i + 4) * F(i + 5);
            const Rational lhs = x / 2 * v[static_cast<std::size_t>(i)].slope;
            const Rational rhs = F(i) * quad + (Rational(1, 2) - s.params[i + 2] - s.params[i + 4]) * F(i)
                               + s.params[i] * (F(i + 2) + F(i + 4));
            if (lhs != rhs) return false;
        }
        if (F(0) + F(2) + F(4) != x || F(1) + F(3) + F(5) != x) return false;
    }
    return used >= 3;
}

inline std::vector<Rational> sample_points()
{
    return {q(1, 3), q(2, 7), q(5, 11), q(-7, 5), q(13, 4), q(17, 19), q(-23, 29)};
}

// H evaluated pointwise from the raw function values.
inline Rational hamiltonian_oracle(const std::array<Rational, 6>& f, const Params& a)
{
    Rational tot = 0;
    for (int i = 0; i < 6; ++i) {
        auto F = [&](int k) { return f[static_cast<std::size_t>(mod6(i + k))]; };
        auto A = [&](int k) { return a[i + k]; };
        Rational h = 0;
        for (int j = 0; j < 6; ++j) h += F(j) * F(j + 1) * F(j + 2) * F(j + 3);
        const Rational th(1, 3);
        h += th * (A(1) + 2 * A(2) + A(4) - A(5)) * F(0) * F(1);
        h += th * (A(1) + 2 * A(2) + 3 * A(3) + A(4) + 2 * A(5)) * F(1) * F(2);
        h -= th * (2 * A(1) + A(2) - A(4) + A(5)) * F(2) * F(3);
        h += th * (A(1) - A(2) + A(4) + 2 * A(5)) * F(3) * F(4);
        h -= th * (2 * A(1) + A(2) + 3 * A(3) + 2 * A(4) + A(5)) * F(4) * F(5);
        h += th * (A(1) - A(2) - 2 * A(4) - A(5)) * F(5) * F(0);
        h += th * (A(1) - A(2) + A(4) - A(5)) * F(0) * F(3);
        h += th * (A(1) + 2 * A(2) + A(4) + 2 * A(5)) * F(1) * F(4);
        h -= th * (2 * A(1) + A(2) + 2 * A(4) + A(5)) * F(2) * F(5);
        tot += h;
    }
    return tot / 6;
}

// Brute-force scan of every Type-A (condition, anchor) pair; returns all hits.
inline std::set<std::pair<int, int>> type_a_hits(const Params& a)
{
    std::set<std::pair<int, int>> hits;
    auto Z = [](const Rational& v) { return v.get_den() == 1; };
    for (int i = 0; i < 6; ++i) {
        auto A = [&](int k) { return a[i + k]; };
        if (Z(A(2)) && Z(A(3)) && Z(A(4)) && Z(A(5))) hits.insert({1, i});
        if (Z(A(1)) && Z(A(2)) && Z(A(4)) && Z(A(5))) hits.insert({2, i});
        if (Z(A(3)) && Z(A(5)) && Z(A(0) + A(4)) && Z(A(0) - A(2))) hits.insert({3, i});
        if (Z(A(3) + A(4)) && Z(A(4) + A(5)) && Z(A(0) + A(1)) && Z(A(0) - A(4))) hits.insert({4, i});
        if (Z(A(0) + A(1)) && Z(A(0) + A(5)) && Z(A(2) + A(3)) && Z(A(3) + A(4)) && Z(A(0) + A(3)))
            hits.insert({5, i});
    }
    return hits;
}

} // namespace a5::testing
