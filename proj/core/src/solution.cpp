// solution.cpp
#include "a5/solution.hpp"

namespace a5 {

std::array<RatFunc, 6> residual(const Solution& s)
{
    std::array<RatFunc, 6> r;
    const RatFunc half_t = RatFunc(Poly::monomial(Rational(1, 2), 1));
    for (int i = 0; i < 6; ++i) {
        const auto& f = s;
        const auto& a = s.params;
        RatFunc q = f[i + 1] * (f[i + 2] + f[i + 4]) + f[i + 3] * f[i + 4]
                  - f[i + 2] * (f[i + 3] + f[i + 5]) - f[i + 4] * f[i + 5];
        RatFunc lhs = half_t * f[i].derivative();
        RatFunc rhs = f[i] * q + RatFunc(Rational(1, 2) - a[i + 2] - a[i + 4]) * f[i]
                    + RatFunc(a[i]) * (f[i + 2] + f[i + 4]);
        r[static_cast<std::size_t>(i)] = lhs - rhs;
    }
    return r;
}

VerifyReport verify_solution(const Solution& s)
{
    const RatFunc t = RatFunc::t();
    const RatFunc o;
    if (s[0] + s[2] + s[4] != t) return {false, "normalization f0+f2+f4"};
    if (s[1] + s[3] + s[5] != t) return {false, "normalization f1+f3+f5"};
    const auto r = residual(s);
    for (int i = 0; i < 6; ++i)
        if (!r[static_cast<std::size_t>(i)].is_zero())
            return {false, "residual equation " + std::to_string(i) + " nonzero"};
    for (int i = 0; i < 6; ++i)
        if (!s[i].is_odd()) return {false, "f" + std::to_string(i) + " not odd"};
    return {};
}

Solution act_solution(const Solution& s, const Generator& g)
{
    if (g.is_macro()) return act_solution_word(s, TransformWord{{g}}.expanded());
    Solution out = s;
    switch (g.kind) {
    case Generator::Kind::S: {
        const int i = g.index;
        if (s[i].is_zero()) return s;
        out.params = act_params(s.params, g);
        if (s.params[i] == 0) return out;
        const RatFunc q = RatFunc(s.params[i]) / s[i];
        out.f[static_cast<std::size_t>(mod6(i + 1))] += q;
        out.f[static_cast<std::size_t>(mod6(i - 1))] -= q;
        return out;
    }
    case Generator::Kind::Pi:
        for (int j = 0; j < 6; ++j) out.f[static_cast<std::size_t>(j)] = s[j + 1];
        break;
    case Generator::Kind::PiInv:
        for (int j = 0; j < 6; ++j) out.f[static_cast<std::size_t>(j)] = s[j - 1];
        break;
    default: break;
    }
    out.params = act_params(s.params, g);
    return out;
}

Solution act_solution_word(const Solution& s, const TransformWord& w)
{
    Solution cur = s;
    for (const auto& g : w.letters) cur = act_solution(cur, g);
    return cur;
}

Solution seed(SeedKind kind, const Rational& x, int anchor)
{
    const RatFunc t = RatFunc::t();
    const RatFunc o;
    const Rational h(1, 2), th(1, 3);
    std::array<RatFunc, 6> f;
    std::array<Rational, 6> a;
    switch (kind) {
    case SeedKind::A1:
        f = {t, t, o, o, o, o};
        a = {x, 1 - x, 0, 0, 0, 0};
        break;
    case SeedKind::A2:
        f = {t, o, o, t, o, o};
        a = {x, 0, 0, 1 - x, 0, 0};
        break;
    case SeedKind::A3:
        f = {t, t, t, o, -t, o};
        a = {x, 1 - x, x, 0, -x, 0};
        break;
    case SeedKind::B: {
        const RatFunc ht(Poly::monomial(h, 1));
        f = {ht, ht, ht, ht, o, o};
        a = {x, h - x, x, h - x, 0, 0};
        break;
    }
    case SeedKind::C: {
        const RatFunc tt(Poly::monomial(th, 1));
        f = {tt, tt, tt, tt, tt, tt};
        a = {x, th - x, x, th - x, x, th - x};
        break;
    }
    }
    std::array<RatFunc, 6> fr;
    std::array<Rational, 6> ar;
    for (int k = 0; k < 6; ++k) {
        fr[static_cast<std::size_t>(mod6(anchor + k))] = f[static_cast<std::size_t>(k)];
        ar[static_cast<std::size_t>(mod6(anchor + k))] = a[static_cast<std::size_t>(k)];
    }
    return Solution{fr, Params(ar)};
}

std::string seed_name(SeedKind kind)
{
    switch (kind) {
    case SeedKind::A1: return "A1";
    case SeedKind::A2: return "A2";
    case SeedKind::A3: return "A3";
    case SeedKind::B: return "B";
    case SeedKind::C: return "C";
    }
    return "?";
}

SeedKind parse_seed_kind(const std::string& name)
{
    for (SeedKind k : {SeedKind::A1, SeedKind::A2, SeedKind::A3, SeedKind::B, SeedKind::C})
        if (seed_name(k) == name) return k;
    throw ParseError("unknown seed family '" + name + "' (expected A1, A2, A3, B or C)");
}

} // namespace a5
