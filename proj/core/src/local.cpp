// local.cpp
#include "a5/local.hpp"

#include <sstream>

namespace a5 {

namespace {

const Rational kHalf(1, 2);
const Rational kThird(1, 3);

Sextet rotate_from_anchor(const Sextet& local, int anchor)
{
    Sextet out;
    for (int k = 0; k < 6; ++k) out[static_cast<std::size_t>(mod6(anchor + k))] = local[static_cast<std::size_t>(k)];
    return out;
}

Rational slope_of(const RatFunc& f)
{
    if (f.is_zero()) return 0;
    const int excess = f.num().degree() - f.den().degree();
    if (excess > 1) throw AnalysisError("pole of order " + std::to_string(excess) + " at infinity");
    return excess == 1 ? f.num().lead() : Rational(0);
}

Poly linear(const Rational& c) { return Poly(std::vector<Rational>{-c, Rational(1)}); }

// Splits a squarefree locus into its rational roots and the remaining factor.
std::vector<std::pair<Poly, std::optional<Rational>>> split_locus(const Poly& g)
{
    std::vector<std::pair<Poly, std::optional<Rational>>> out;
    Poly rest = g.monic();
    for (const auto& r : rational_roots(g)) {
        out.emplace_back(linear(r), r);
        rest = exact_div(rest, linear(r));
    }
    if (rest.degree() > 0) out.emplace_back(rest, std::nullopt);
    return out;
}

Poly lcm_den(const Solution& s)
{
    Poly l(Rational(1));
    for (const auto& f : s.f) {
        if (f.den().degree() <= 0) continue;
        l = exact_div(l * f.den(), gcd(l, f.den())).monic();
    }
    return l;
}

} // namespace

std::string InfinityType::to_string() const
{
    switch (kind) {
    case Kind::A1: return "A1@" + std::to_string(anchor);
    case Kind::A2: return "A2@" + std::to_string(anchor);
    case Kind::A3: return "A3@" + std::to_string(anchor);
    case Kind::B: return "B@" + std::to_string(anchor);
    case Kind::C: return "C";
    }
    return "?";
}

InfinityType parse_infinity_type(const std::string& text)
{
    const auto at = text.find('@');
    const std::string head = text.substr(0, at);
    int anchor = 0;
    if (at != std::string::npos) {
        const std::string a = text.substr(at + 1);
        if (a.size() != 1 || a[0] < '0' || a[0] > '5') throw ParseError("bad anchor in '" + text + "'");
        anchor = a[0] - '0';
    }
    InfinityType ty;
    ty.anchor = anchor;
    if (head == "A1") ty.kind = InfinityType::Kind::A1;
    else if (head == "A2") ty.kind = InfinityType::Kind::A2;
    else if (head == "A3") ty.kind = InfinityType::Kind::A3;
    else if (head == "B") ty.kind = InfinityType::Kind::B;
    else if (head == "C") {
        ty.kind = InfinityType::Kind::C;
        ty.anchor = 0;
    } else throw ParseError("unknown infinity type '" + text + "'");
    return ty;
}

Sextet leading_slopes(const InfinityType& ty)
{
    Sextet l;
    switch (ty.kind) {
    case InfinityType::Kind::A1: l = {1, 1, 0, 0, 0, 0}; break;
    case InfinityType::Kind::A2: l = {1, 0, 0, 1, 0, 0}; break;
    case InfinityType::Kind::A3: l = {1, 1, 1, 0, -1, 0}; break;
    case InfinityType::Kind::B: l = {kHalf, kHalf, kHalf, kHalf, 0, 0}; break;
    case InfinityType::Kind::C: l = {kThird, kThird, kThird, kThird, kThird, kThird}; break;
    }
    return rotate_from_anchor(l, ty.kind == InfinityType::Kind::C ? 0 : ty.anchor);
}

InfinityType infinity_type(const Solution& s)
{
    Sextet slopes;
    for (int j = 0; j < 6; ++j) slopes[static_cast<std::size_t>(j)] = slope_of(s[j]);
    using K = InfinityType::Kind;
    if (slopes == leading_slopes({K::C, 0})) return {K::C, 0};
    for (int i = 0; i < 6; ++i) {
        for (K k : {K::A1, K::A2, K::A3, K::B}) {
            if (k == K::A2 && i >= 3) continue;
            if (slopes == leading_slopes({k, i})) return {k, i};
        }
    }
    std::string v;
    for (const auto& x : slopes) v += (v.empty() ? "" : ", ") + to_string(x);
    throw AnalysisError("leading slopes (" + v + ") fit no admissible type at infinity");
}

Sextet infinity_residue_table(const Params& p, const InfinityType& ty)
{
    const int i = ty.anchor;
    auto A = [&](int k) { return p[i + k]; };
    Sextet r;
    switch (ty.kind) {
    case InfinityType::Kind::A1:
        r = {-(A(2) + A(4)), A(3) + A(5), A(2), -A(3), A(4), -A(5)};
        break;
    case InfinityType::Kind::A2:
        r = {A(2) - A(4), A(1), -A(2), A(5) - A(1), A(4), -A(5)};
        break;
    case InfinityType::Kind::A3:
        r = {-A(2) - 2 * A(3) - A(4), -A(3) + A(5), A(0) + A(4) + 2 * A(5), A(3),
             -A(0) + A(2) + 2 * A(3) - 2 * A(5), -A(5)};
        break;
    case InfinityType::Kind::B:
        r = {A(1) - A(3) - 2 * A(4) - A(5), -A(0) + A(2) - A(4), -A(1) + A(3) + A(5),
             A(0) - A(2) + A(4) + 2 * A(5), 2 * A(4), -2 * A(5)};
        break;
    case InfinityType::Kind::C: {
        Sextet c;
        for (int j = 0; j < 6; ++j)
            c[static_cast<std::size_t>(j)] = 2 * p[j + 1] + p[j + 2] - p[j + 4] - 2 * p[j + 5];
        return c;
    }
    }
    return rotate_from_anchor(r, i);
}

std::string ZeroPattern::to_string() const
{
    switch (kind) {
    case Kind::Regular: return "Regular";
    case Kind::Pair: return "Pair@" + std::to_string(anchor);
    case Kind::Quad: return "Quad@" + std::to_string(anchor);
    }
    return "?";
}

ZeroPattern parse_zero_pattern(const std::string& text)
{
    if (text == "Regular") return {};
    const auto at = text.find('@');
    if (at == std::string::npos || at + 2 != text.size() || text[at + 1] < '0' || text[at + 1] > '5')
        throw ParseError("bad zero pattern '" + text + "'");
    const std::string head = text.substr(0, at);
    const int anchor = text[at + 1] - '0';
    if (head == "Pair") return {ZeroPattern::Kind::Pair, anchor};
    if (head == "Quad") return {ZeroPattern::Kind::Quad, anchor};
    throw ParseError("bad zero pattern '" + text + "'");
}

Sextet zero_residue_formula(const Params& p, const ZeroPattern& zp)
{
    Sextet r{};
    const int i = zp.anchor;
    auto A = [&](int k) { return p[i + k]; };
    auto put = [&](int k, const Rational& v) { r[static_cast<std::size_t>(mod6(i + k))] = v; };
    switch (zp.kind) {
    case ZeroPattern::Kind::Regular: break;
    case ZeroPattern::Kind::Pair: {
        const Rational v = A(1) - A(3) - A(5);
        put(0, v);
        put(2, -v);
        break;
    }
    case ZeroPattern::Kind::Quad: {
        const Rational v = A(1) - A(3) - 2 * A(4) - A(5);
        const Rational w = -A(0) - 2 * A(1) - A(2) + A(4);
        put(0, v);
        put(2, -v);
        put(3, w);
        put(5, -w);
        break;
    }
    }
    return r;
}

ZeroAnalysis zero_pattern(const Solution& s)
{
    ZeroAnalysis z;
    std::array<bool, 6> pole{};
    for (int j = 0; j < 6; ++j) {
        const RatFunc& f = s[j];
        if (f.is_zero() || f.den().coeff(0) != 0) continue;
        if (local_valuation(f, ExpansionPoint::zero()) < -1)
            throw AnalysisError("f" + std::to_string(j) + " has a pole of order > 1 at 0");
        pole[static_cast<std::size_t>(j)] = true;
        z.observed[static_cast<std::size_t>(j)] = residue(f, ExpansionPoint::zero());
    }
    auto is_set = [&](std::initializer_list<int> ks) {
        std::array<bool, 6> want{};
        for (int k : ks) want[static_cast<std::size_t>(mod6(k))] = true;
        return want == pole;
    };
    bool found = is_set({});
    for (int i = 0; i < 6 && !found; ++i)
        if (is_set({i, i + 2})) {
            z.pattern = {ZeroPattern::Kind::Pair, i};
            found = true;
        }
    for (int i = 0; i < 3 && !found; ++i)
        if (is_set({i, i + 2, i + 3, i + 5})) {
            z.pattern = {ZeroPattern::Kind::Quad, i};
            found = true;
        }
    if (!found) {
        std::string v;
        for (int j = 0; j < 6; ++j)
            if (pole[static_cast<std::size_t>(j)]) v += (v.empty() ? "f" : ", f") + std::to_string(j);
        throw AnalysisError("pole set at 0 {" + v + "} is neither a pair nor a quadruple");
    }
    z.predicted = zero_residue_formula(s.params, z.pattern);
    return z;
}

bool residue_integrality_check(const Solution& s)
{
    for (int j = 0; j < 6; ++j) {
        const Rational a_inf = -residue(s[j], ExpansionPoint::infinity());
        const Rational r0 = residue(s[j], ExpansionPoint::zero());
        if (!is_integer(a_inf - r0)) return false;
    }
    return true;
}

std::string to_string(FinitePoleCase::Label l)
{
    switch (l) {
    case FinitePoleCase::Label::PairI: return "PairI";
    case FinitePoleCase::Label::PairII: return "PairII";
    case FinitePoleCase::Label::QuadI: return "QuadI";
    case FinitePoleCase::Label::QuadII: return "QuadII";
    case FinitePoleCase::Label::QuadIII: return "QuadIII";
    }
    return "?";
}

std::string FinitePoleCase::to_string() const
{
    const std::string where = location ? "c = " + a5::to_string(*location) : "roots of " + locus.to_string();
    return a5::to_string(label) + "@" + std::to_string(anchor) + " at " + where;
}

std::vector<FinitePoleCase> finite_pole_cases(const Solution& s)
{
    std::vector<FinitePoleCase> out;
    Poly rest = squarefree_part(lcm_den(s));
    if (rest.valuation() > 0) rest = rest.drop_low(rest.valuation());
    if (rest.degree() <= 0) return out;

    std::array<Poly, 6> dd;
    for (int j = 0; j < 6; ++j) {
        const RatFunc& f = s[j];
        dd[static_cast<std::size_t>(j)] = f.den().derivative();
        const Poly multiple = gcd(rest, gcd(f.den(), dd[static_cast<std::size_t>(j)]));
        if (multiple.degree() > 0)
            throw AnalysisError("f" + std::to_string(j) + " has a multiple pole at the roots of " + multiple.to_string());
    }

    using L = FinitePoleCase::Label;
    struct Pattern {
        L label;
        std::array<int, 4> idx;
        std::array<Rational, 4> res;
        int n;
    };
    const Rational h = kHalf, h3(3, 2);
    const std::vector<Pattern> patterns = {
        {L::PairI, {0, 2, 0, 0}, {h, -h, 0, 0}, 2},
        {L::PairII, {0, 2, 0, 0}, {-h, h, 0, 0}, 2},
        {L::QuadI, {0, 2, 3, 5}, {-h, h, -h, h}, 4},
        {L::QuadII, {0, 2, 3, 5}, {-h3, h3, h, -h}, 4},
        {L::QuadIII, {0, 2, 3, 5}, {h, -h, -h3, h3}, 4},
    };
    for (const auto& pat : patterns) {
        for (int i = 0; i < 6 && rest.degree() > 0; ++i) {
            Sextet r{};
            for (int k = 0; k < pat.n; ++k)
                r[static_cast<std::size_t>(mod6(i + pat.idx[static_cast<std::size_t>(k)]))] = pat.res[static_cast<std::size_t>(k)];
            Poly g = rest;
            for (int j = 0; j < 6 && g.degree() > 0; ++j) {
                const RatFunc& f = s[j];
                const Rational& rj = r[static_cast<std::size_t>(j)];
                if (rj != 0) {
                    g = gcd(g, f.den());
                    g = gcd(g, f.num() - rj * dd[static_cast<std::size_t>(j)]);
                } else if (f.den().degree() > 0) {
                    g = exact_div(g, gcd(g, f.den()));
                }
            }
            if (g.degree() <= 0) continue;
            rest = exact_div(rest, g).monic();
            for (auto& [locus, loc] : split_locus(g)) out.push_back({pat.label, i, locus, loc, r});
        }
    }
    if (rest.degree() > 0) {
        std::ostringstream os;
        os << "unclassifiable finite pole at the roots of " << rest.to_string();
        const auto roots = rational_roots(rest);
        if (!roots.empty()) {
            os << "; at c = " << to_string(roots.front()) << " residues (";
            for (int j = 0; j < 6; ++j)
                os << (j ? ", " : "") << to_string(residue(s[j], ExpansionPoint::at(roots.front())));
            os << ")";
        }
        throw AnalysisError(os.str());
    }
    return out;
}

RatFunc hamiltonian(const Solution& s)
{
    const auto& f = s;
    RatFunc quartic;
    for (int j = 0; j < 6; ++j) quartic += f[j] * f[j + 1] * f[j + 2] * f[j + 3];
    // Coefficient of each product f_a f_b, accumulated over the six h_i.
    std::array<std::array<Rational, 6>, 6> w{};
    auto add = [&](int a, int b, const Rational& c) {
        a = mod6(a);
        b = mod6(b);
        if (a > b) std::swap(a, b);
        w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += c;
    };
    for (int i = 0; i < 6; ++i) {
        auto A = [&](int k) { return s.params[i + k]; };
        add(i, i + 1, (A(1) + 2 * A(2) + A(4) - A(5)) / 3);
        add(i + 1, i + 2, (A(1) + 2 * A(2) + 3 * A(3) + A(4) + 2 * A(5)) / 3);
        add(i + 2, i + 3, -(2 * A(1) + A(2) - A(4) + A(5)) / 3);
        add(i + 3, i + 4, (A(1) - A(2) + A(4) + 2 * A(5)) / 3);
        add(i + 4, i + 5, -(2 * A(1) + A(2) + 3 * A(3) + 2 * A(4) + A(5)) / 3);
        add(i + 5, i, (A(1) - A(2) - 2 * A(4) - A(5)) / 3);
        add(i, i + 3, (A(1) - A(2) + A(4) - A(5)) / 3);
        add(i + 1, i + 4, (A(1) + 2 * A(2) + A(4) + 2 * A(5)) / 3);
        add(i + 2, i + 5, -(2 * A(1) + A(2) + 2 * A(4) + A(5)) / 3);
    }
    RatFunc quad;
    for (int a = 0; a < 6; ++a)
        for (int b = a; b < 6; ++b) {
            const Rational& c = w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (c != 0) quad += RatFunc(c) * f[a] * f[b];
        }
    return quartic + RatFunc(Rational(1, 6)) * quad;
}

Rational HamiltonianData::pair_eps_sum() const
{
    Rational total = 0;
    for (const auto& r : finite_pole_residue_ratios) total += r.eps * r.locus.degree();
    return total / 2;
}

HamiltonianData hamiltonian_data(const Solution& s)
{
    HamiltonianData hd;
    const RatFunc H = hamiltonian(s);
    // clamp the order so a vanishing constant term does not trip the expansion
    auto expand0 = [&](const ExpansionPoint& pt) {
        return laurent_expand(H, pt, H.is_zero() ? 0 : std::max(0, local_valuation(H, pt)));
    };
    const auto inf = expand0(ExpansionPoint::infinity());
    if (inf.min_exponent < -4) throw AnalysisError("H grows faster than t^4 at infinity");
    hd.h_inf_4 = inf.at(4);
    hd.h_inf_2 = inf.at(2);
    hd.h_inf_0 = inf.at(0);
    const auto zero = expand0(ExpansionPoint::zero());
    hd.h_0_m2 = zero.at(-2);
    hd.h_0_0 = zero.at(0);

    Poly q = H.den();
    if (q.valuation() > 0) q = q.drop_low(q.valuation());
    if (q.degree() <= 0) return hd;
    if (gcd(q, q.derivative()).degree() > 0) hd.simple_finite_poles = false;
    Poly rest = squarefree_part(q);
    const Poly dq = H.den().derivative();
    for (const Rational& eps : {Rational(1, 6), Rational(1, 12), Rational(5, 12)}) {
        // Res_c H = P(c)/Q'(c) = eps c
        const Poly g = gcd(rest, H.num() - eps * Poly::t() * dq);
        if (g.degree() <= 0) continue;
        rest = exact_div(rest, g).monic();
        for (auto& [locus, loc] : split_locus(g)) hd.finite_pole_residue_ratios.push_back({locus, loc, eps});
    }
    for (auto& [locus, loc] : split_locus(rest)) {
        // Residue ratio outside the admissible set; reported for diagnostics.
        Rational eps = 0;
        if (loc) eps = residue(H, ExpansionPoint::at(*loc)) / *loc;
        hd.finite_pole_residue_ratios.push_back({locus, loc, eps});
        hd.simple_finite_poles = hd.simple_finite_poles && loc.has_value();
    }
    return hd;
}

TypeBInvariants type_b_invariants(const Params& p, int i)
{
    return {-p[i] + p[i + 2] - p[i + 4], -p[i + 1] + p[i + 3] + p[i + 5], 2 * p[i + 4], -2 * p[i + 5]};
}

TypeCInvariants type_c_invariants(const Params& p)
{
    TypeCInvariants c{p[2] - p[4], p[3] - p[5], p[0] - p[4], p[1] - p[5], 0};
    c.chi = c.x + c.y + c.z + c.w;
    return c;
}

Rational h_constant_at_infinity(const Params& p, const InfinityType& ty)
{
    const int i = ty.anchor;
    auto A = [&](int k) { return p[i + k]; };
    const Rational sixth(1, 6);
    switch (ty.kind) {
    case InfinityType::Kind::A1:
        return -sixth * (2 * A(2) + A(3) + A(4) + 2 * A(5)) + A(2) * A(3) + A(4) * A(5) + A(2) * A(5);
    case InfinityType::Kind::A2:
        return A(1) * A(2) + A(4) * A(5) - sixth * (A(1) + A(2) + A(4) + A(5));
    case InfinityType::Kind::A3:
        return sixth * (-1 + A(1) - 3 * A(3) - A(4) - 3 * A(5)) + A(3) * (A(0) + A(4) + A(5))
             + A(5) * (A(2) + A(3) + A(4));
    case InfinityType::Kind::B: {
        const auto b = type_b_invariants(p, i);
        return Rational(1, 12) * (b.beta - b.gamma) + sixth * (b.phi - b.epsilon)
             + Rational(1, 4) * (b.beta * b.beta + b.gamma * b.gamma) - kHalf * b.epsilon * b.phi;
    }
    case InfinityType::Kind::C: {
        const auto c = type_c_invariants(p);
        const Rational &x = c.x, &y = c.y, &z = c.z, &w = c.w;
        return kThird * (2 * x * x + 2 * y * y + 2 * z * z + 2 * w * w + x * y - 2 * y * z + z * w
                         - 2 * y * w + x * w - 2 * x * z);
    }
    }
    return 0;
}

Rational h_constant_at_zero(const Params& p, const ZeroPattern& zp)
{
    const int i = zp.anchor;
    auto A = [&](int k) { return p[i + k]; };
    switch (zp.kind) {
    case ZeroPattern::Kind::Regular: return 0;
    case ZeroPattern::Kind::Pair: return kThird * A(1) + (Rational(1, 6) - A(1)) * (A(3) + A(5));
    case ZeroPattern::Kind::Quad:
        return Rational(1, 6) + (A(1) - A(4)) * (A(0) + A(1) + A(2) - kHalf);
    }
    return 0;
}

std::string ObstructionVerdict::to_string() const
{
    switch (kind) {
    case Kind::AdmissibleRegular: return "admissible_regular";
    case Kind::AdmissibleWithFinitePoles: return "admissible_with_finite_poles(" + poles.get_str() + ")";
    case Kind::Violated: return "violated (d = " + a5::to_string(d) + ")";
    }
    return "?";
}

ObstructionVerdict obstruction_check(const Params& p, const InfinityType& ty, const ZeroPattern& zp)
{
    ObstructionVerdict v;
    v.d = 6 * (h_constant_at_zero(p, zp) - h_constant_at_infinity(p, ty));
    if (v.d == 0) v.kind = ObstructionVerdict::Kind::AdmissibleRegular;
    else if (is_integer(v.d) && v.d < 0) {
        v.kind = ObstructionVerdict::Kind::AdmissibleWithFinitePoles;
        v.poles = -v.d.get_num();
    } else v.kind = ObstructionVerdict::Kind::Violated;
    return v;
}

namespace {

// Truncated series in t: c[k] is the coefficient of t^(top - k).
struct TSeries {
    int top = 0;
    std::vector<Rational> c;

    Rational at(int e) const
    {
        const int k = top - e;
        return (k < 0 || k >= static_cast<int>(c.size())) ? Rational(0) : c[static_cast<std::size_t>(k)];
    }
};

TSeries mul(const TSeries& a, const TSeries& b, int low)
{
    TSeries r;
    r.top = a.top + b.top;
    const int n = r.top - low + 1;
    r.c.assign(static_cast<std::size_t>(std::max(n, 0)), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size() && static_cast<int>(i + j) < n; ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

// Coefficients of the six equations at t^e.
Sextet equations_at(const std::array<TSeries, 6>& f, const Params& p, int e)
{
    Sextet out;
    const int low = e;
    for (int i = 0; i < 6; ++i) {
        auto F = [&](int k) -> const TSeries& { return f[static_cast<std::size_t>(mod6(i + k))]; };
        const TSeries& fi = F(0);
        TSeries half_t_d;
        half_t_d.top = fi.top;
        half_t_d.c.resize(fi.c.size());
        for (std::size_t k = 0; k < fi.c.size(); ++k)
            half_t_d.c[k] = fi.c[k] * make_rational(fi.top - static_cast<long>(k), 2);
        const int qlow = low - 1;
        TSeries q;
        q.top = 2;
        q.c.assign(static_cast<std::size_t>(2 - qlow + 1), Rational(0));
        auto acc = [&](const TSeries& a, const TSeries& b, int sign) {
            const TSeries m = mul(a, b, qlow);
            for (int x = qlow; x <= 2; ++x) q.c[static_cast<std::size_t>(2 - x)] += sign * m.at(x);
        };
        acc(F(1), F(2), 1);
        acc(F(1), F(4), 1);
        acc(F(3), F(4), 1);
        acc(F(2), F(3), -1);
        acc(F(2), F(5), -1);
        acc(F(4), F(5), -1);
        const TSeries cubic = mul(fi, q, low);
        const Rational lam = kHalf - p[i + 2] - p[i + 4];
        Rational v = half_t_d.at(e) - cubic.at(e) - lam * fi.at(e) - p[i] * (F(2).at(e) + F(4).at(e));
        out[static_cast<std::size_t>(i)] = v;
    }
    return out;
}

// Exact solve of an overdetermined system; empty optional if rank < n or inconsistent.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs, int n)
{
    const int rows = static_cast<int>(m.size());
    int r = 0;
    std::vector<int> pivcol;
    for (int col = 0; col < n && r < rows; ++col) {
        int piv = -1;
        for (int k = r; k < rows; ++k)
            if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)] != 0) {
                piv = k;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(r)]);
        std::swap(rhs[static_cast<std::size_t>(piv)], rhs[static_cast<std::size_t>(r)]);
        const Rational inv = 1 / m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        for (auto& x : m[static_cast<std::size_t>(r)]) x *= inv;
        rhs[static_cast<std::size_t>(r)] *= inv;
        for (int k = 0; k < rows; ++k) {
            if (k == r) continue;
            const Rational f = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j)
                m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] -= f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
            rhs[static_cast<std::size_t>(k)] -= f * rhs[static_cast<std::size_t>(r)];
        }
        ++r;
    }
    if (r < n) return std::nullopt;
    for (int k = r; k < rows; ++k)
        if (rhs[static_cast<std::size_t>(k)] != 0) return std::nullopt;
    return std::vector<Rational>(rhs.begin(), rhs.begin() + n);
}

} // namespace

std::array<LaurentSeries, 6> expand_solution_ansatz(const Params& p, const InfinityType& ty, int order)
{
    if (order < 1) throw AnalysisError("ansatz order must be at least 1");
    const Sextet slopes = leading_slopes(ty);
    std::array<TSeries, 6> f;
    for (int j = 0; j < 6; ++j) {
        f[static_cast<std::size_t>(j)].top = 1;
        f[static_cast<std::size_t>(j)].c = {slopes[static_cast<std::size_t>(j)]};
    }
    {
        for (auto& s : f) s.c.emplace_back(0);
        const Sextet lead = equations_at(f, p, 3);
        for (const auto& v : lead)
            if (v != 0) throw AnalysisError("leading slopes do not balance the cubic terms");
        for (auto& s : f) s.c.pop_back();
    }
    for (int m = 0; m <= order; ++m) {
        // Unknown: coefficients of t^-m, entering first at t^(2-m).
        for (auto& s : f) s.c.emplace_back(0);
        const int e = 2 - m;
        const Sextet r0 = equations_at(f, p, e);
        std::vector<std::vector<Rational>> mat(8, std::vector<Rational>(6));
        std::vector<Rational> rhs(8);
        for (int k = 0; k < 6; ++k) {
            f[static_cast<std::size_t>(k)].c.back() = 1;
            const Sextet rk = equations_at(f, p, e);
            f[static_cast<std::size_t>(k)].c.back() = 0;
            for (int i = 0; i < 6; ++i)
                mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = rk[static_cast<std::size_t>(i)] - r0[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < 6; ++i) rhs[static_cast<std::size_t>(i)] = -r0[static_cast<std::size_t>(i)];
        for (int k = 0; k < 6; ++k) mat[static_cast<std::size_t>(6 + (k % 2))][static_cast<std::size_t>(k)] = 1;
        const auto sol = solve_exact(mat, rhs, 6);
        if (!sol)
            throw AnalysisError("per-order system for the t^-" + std::to_string(m) + " coefficients is not uniquely solvable");
        for (int k = 0; k < 6; ++k) f[static_cast<std::size_t>(k)].c.back() = (*sol)[static_cast<std::size_t>(k)];
    }
    std::array<LaurentSeries, 6> out;
    for (int j = 0; j < 6; ++j) {
        LaurentSeries& s = out[static_cast<std::size_t>(j)];
        s.point = ExpansionPoint::infinity();
        s.min_exponent = -1;
        s.order = order;
        s.coeffs = f[static_cast<std::size_t>(j)].c;
    }
    return out;
}

DiagnosticReport diagnose(const Solution& s)
{
    DiagnosticReport d;
    d.infinity = infinity_type(s);
    for (int j = 0; j < 6; ++j)
        d.infinity_observed[static_cast<std::size_t>(j)] = -residue(s[j], ExpansionPoint::infinity());
    d.infinity_predicted = infinity_residue_table(s.params, d.infinity);
    d.zero = zero_pattern(s);
    d.residue_integrality = residue_integrality_check(s);
    d.finite_poles = finite_pole_cases(s);
    d.hamiltonian = hamiltonian_data(s);
    d.h_inf_0_formula = h_constant_at_infinity(s.params, d.infinity);
    d.h_0_0_formula = h_constant_at_zero(s.params, d.zero.pattern);
    d.obstruction = obstruction_check(s.params, d.infinity, d.zero.pattern);
    return d;
}

namespace {

std::string sextet(const Sextet& v)
{
    std::string s = "(";
    for (int j = 0; j < 6; ++j) s += (j ? ", " : "") + to_string(v[static_cast<std::size_t>(j)]);
    return s + ")";
}

} // namespace

std::string DiagnosticReport::render_text() const
{
    std::ostringstream os;
    os << "type at infinity: " << infinity.to_string() << "\n";
    os << "  t^-1 coefficients observed:  " << sextet(infinity_observed) << "\n";
    os << "  t^-1 coefficients predicted: " << sextet(infinity_predicted)
       << (infinity_observed == infinity_predicted ? "  [match]" : "  [MISMATCH]") << "\n";
    os << "pattern at 0: " << zero.pattern.to_string() << "\n";
    os << "  residues observed:  " << sextet(zero.observed) << "\n";
    os << "  residues predicted: " << sextet(zero.predicted) << (zero.matches() ? "  [match]" : "  [MISMATCH]") << "\n";
    os << "residue integrality: " << (residue_integrality ? "holds" : "FAILS") << "\n";
    os << "finite poles: " << (finite_poles.empty() ? "none" : "") << "\n";
    for (const auto& c : finite_poles) os << "  " << c.to_string() << "\n";
    const auto& h = hamiltonian;
    os << "H at infinity: t^4 " << to_string(h.h_inf_4) << ", t^2 " << to_string(h.h_inf_2) << ", t^0 "
       << to_string(h.h_inf_0) << " (formula " << to_string(h_inf_0_formula) << ")\n";
    os << "H at 0: t^-2 " << to_string(h.h_0_m2) << ", t^0 " << to_string(h.h_0_0) << " (formula "
       << to_string(h_0_0_formula) << ")\n";
    for (const auto& r : h.finite_pole_residue_ratios) {
        os << "  Res H / c = " << to_string(r.eps) << " at "
           << (r.location ? "c = " + to_string(*r.location) : "roots of " + r.locus.to_string()) << "\n";
    }
    os << "bookkeeping h_inf0 - 2 sum eps = h_00: " << (h.bookkeeping_holds() ? "holds" : "FAILS") << "\n";
    os << "obstruction: " << obstruction.to_string() << "\n";
    return os.str();
}

} // namespace a5
