// classifier.cpp
#include "a5/classifier.hpp"

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

namespace a5 {

namespace {

const Rational kHalf(1, 2);
const Rational kThird(1, 3);

Rational mod1(const Rational& q) { return frac(q); }

} // namespace

std::string to_string(SolutionType ty)
{
    switch (ty) {
    case SolutionType::A: return "A";
    case SolutionType::B: return "B";
    case SolutionType::C: return "C";
    }
    return "?";
}

std::string ConditionId::to_string() const
{
    std::ostringstream os;
    os << a5::to_string(theorem) << "(" << index << ") anchor " << anchor;
    if (!recipe.empty()) os << " recipe (" << recipe << ")";
    if (!witness.empty()) {
        os << " witness [";
        for (std::size_t k = 0; k < witness.size(); ++k) os << (k ? ", " : "") << witness[k].get_str();
        os << "]";
    }
    if (reading_divergence) os << " [readings of (8) disagree]";
    return os.str();
}

namespace {

// Exact arithmetic on the parameters themselves.
struct RationalDomain {
    using V = Rational;
    const Params& p;
    V alpha(int j) const { return p[j]; }
    V constant(int num, int den) const { return make_rational(num, den); }
    bool integral(const V& v) const { return is_integer(v); }
    bool even(const V& v) const { return is_even_integer(v); }
    bool zero(const V& v) const { return v == 0; }
    bool divisible_by_3(const V& v) const { return is_integer(v / 3); }
    bool frac_is(const V& v, int num, int den) const { return frac(v) == frac(make_rational(num, den)); }
    Integer whole(const V& v) const { return floor(v); }
};

// Parameters scaled by a common denominator D (a multiple of 6) into int64.
struct ScaledDomain {
    using V = std::int64_t;
    std::array<std::int64_t, 6> n;
    std::int64_t d;
    V alpha(int j) const { return n[static_cast<std::size_t>(mod6(j))]; }
    V constant(int num, int den) const { return num * (d / den); }
    bool integral(V v) const { return v % d == 0; }
    bool even(V v) const { return v % (2 * d) == 0; }
    bool zero(V v) const { return v == 0; }
    bool divisible_by_3(V v) const { return v % (3 * d) == 0; }
    bool frac_is(V v, int num, int den) const
    {
        const V r = ((v % d) + d) % d;
        const V t = (((num * (d / den)) % d) + d) % d;
        return r == t;
    }
    Integer whole(V v) const
    {
        V q = v / d;
        if (v % d != 0 && v < 0) --q;
        return Integer(static_cast<long>(q));
    }
};

std::optional<ScaledDomain> scaled(const Params& p)
{
    constexpr std::int64_t kLimit = std::int64_t{1} << 48;
    Integer l = 6;
    for (const auto& x : p.values()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    if (abs(l) >= kLimit) return std::nullopt;
    ScaledDomain s{};
    s.d = l.get_si();
    for (int j = 0; j < 6; ++j) {
        const Integer v = p[j].get_num() * (l / p[j].get_den());
        if (abs(v) >= kLimit) return std::nullopt;
        s.n[static_cast<std::size_t>(j)] = v.get_si();
    }
    return s;
}

template <class Dom>
std::vector<Integer> wholes(const Dom& dom, const std::vector<typename Dom::V>& v)
{
    std::vector<Integer> out;
    for (const auto& x : v) out.push_back(dom.whole(x));
    return out;
}

template <class Dom>
bool all_integral(const Dom& dom, const std::vector<typename Dom::V>& v)
{
    for (const auto& x : v)
        if (!dom.integral(x)) return false;
    return true;
}

template <class Dom>
std::optional<ConditionId> scan_A(const Dom& dom)
{
    using V = typename Dom::V;
    for (int cond = 1; cond <= 5; ++cond) {
        for (int i = 0; i < 6; ++i) {
            auto A = [&](int k) -> V { return dom.alpha(i + k); };
            std::vector<V> v;
            switch (cond) {
            case 1: v = {A(2), A(3), A(4), A(5)}; break;
            case 2: v = {A(1), A(2), A(4), A(5)}; break;
            case 3: v = {A(3), A(5), V(A(0) + A(4)), V(A(0) - A(2))}; break;
            case 4: v = {V(A(3) + A(4)), V(A(4) + A(5)), V(A(0) + A(1)), V(A(0) - A(4))}; break;
            default:
                v = {V(A(0) + A(1)), V(A(0) + A(5)), V(A(2) + A(3)), V(A(3) + A(4)), V(A(0) + A(3))};
                break;
            }
            if (all_integral(dom, v)) return ConditionId{SolutionType::A, cond, i, "", wholes(dom, v), false};
        }
    }
    return std::nullopt;
}

template <class V>
struct BCondition {
    std::vector<int> nonzero;   // offsets k with alpha_{i+k} != 0 required
    std::array<V, 4> terms;     // must be integers
    std::optional<V> parity;    // must be even; defaults to terms[0] + terms[1]
};

template <class Dom>
std::array<BCondition<typename Dom::V>, 10> b_conditions(const Dom& dom, int i)
{
    using V = typename Dom::V;
    auto A = [&](int k) -> V { return dom.alpha(i + k); };
    return {{
        {{}, {V(-A(0) + A(2) - A(4)), V(-A(1) + A(3) + A(5)), V(2 * A(4)), V(-2 * A(5))}, {}},
        {{1}, {V(-A(0) + A(2) - A(4)), V(A(1) + A(3) + A(5)), V(2 * A(4)), V(-2 * A(5))}, {}},
        {{2}, {V(-A(0) - A(2) - A(4)), V(-A(1) + A(3) + A(5)), V(2 * A(4)), V(-2 * A(5))}, {}},
        {{3}, {V(-A(0) + A(2) - A(4)), V(-A(1) - A(3) + A(5)), V(2 * A(3) + 2 * A(4)), V(-2 * A(5))}, {}},
        {{4},
         {V(A(1) - A(3) - A(5)), V(-A(0) + A(2) - A(4)), V(2 * A(3) + 2 * A(4)), V(-2 * A(4))},
         V(A(1) - A(3) - 2 * A(4) - A(5) - A(0) + A(2) - A(4))},
        {{5}, {V(-A(1) + A(3) + A(5)), V(A(0) - A(2) + A(4) + 2 * A(5)), V(-2 * A(5)), V(-2 * A(0) - 2 * A(5))}, {}},
        {{0}, {V(A(0) + A(2) - A(4)), V(-A(1) + A(3) + A(5)), V(2 * A(4)), V(-2 * A(0) - 2 * A(5))}, {}},
        {{1, 4},
         {V(-A(1) - A(3) - 2 * A(4) - A(5)), V(-A(0) + A(2) - A(4)), V(2 * A(3) + 2 * A(4)), V(2 * A(4))},
         {}},
        {{2, 5},
         {V(-A(0) - A(2) - A(4) - 2 * A(5)), V(-A(1) + A(3) - A(5)), V(-2 * A(5)), V(-2 * A(0) - 2 * A(5))},
         {}},
        {{3, 0},
         {V(A(0) + A(2) - A(4)), V(-A(1) - A(3) + A(5)), V(2 * A(3) + 2 * A(4)), V(-2 * A(0) - 2 * A(5))},
         {}},
    }};
}

template <class Dom>
bool b_condition_holds(const Dom& dom, int i, const BCondition<typename Dom::V>& c)
{
    using V = typename Dom::V;
    for (int k : c.nonzero)
        if (dom.zero(dom.alpha(i + k))) return false;
    for (const auto& x : c.terms)
        if (!dom.integral(x)) return false;
    return dom.even(c.parity ? *c.parity : V(c.terms[0] + c.terms[1]));
}

template <class Dom>
std::optional<ConditionId> scan_B(const Dom& dom)
{
    using V = typename Dom::V;
    std::array<std::array<BCondition<V>, 10>, 6> lists;
    for (int i = 0; i < 6; ++i) lists[static_cast<std::size_t>(i)] = b_conditions(dom, i);
    for (int cond = 1; cond <= 10; ++cond) {
        for (int i = 0; i < 6; ++i) {
            const auto& c = lists[static_cast<std::size_t>(i)][static_cast<std::size_t>(cond - 1)];
            if (!b_condition_holds(dom, i, c)) continue;
            ConditionId id{SolutionType::B, cond, i, "", wholes(dom, {c.terms.begin(), c.terms.end()}), false};
            if (cond == 8) {
                // The necessary-condition list prints -2 alpha_{i+4} for the last term.
                BCondition<V> alt = c;
                alt.terms[3] = -alt.terms[3];
                id.reading_divergence = !b_condition_holds(dom, i, alt);
            }
            return id;
        }
    }
    // Condition (11): alpha mod Z equals one of three patterns (in halves).
    const std::array<std::array<int, 6>, 3> patterns = {{
        {1, 1, 1, 1, 0, 0},
        {1, 1, 0, 1, 1, 0},
        {1, 0, 1, 0, 0, 0},
    }};
    for (int i = 0; i < 6; ++i) {
        for (const auto& pat : patterns) {
            bool ok = true;
            for (int k = 0; k < 6 && ok; ++k) ok = dom.frac_is(dom.alpha(i + k), pat[static_cast<std::size_t>(k)], 2);
            if (!ok) continue;
            std::vector<V> v;
            for (int k = 0; k < 6; ++k) v.push_back(dom.alpha(i + k));
            return ConditionId{SolutionType::B, 11, i, "", wholes(dom, v), false};
        }
    }
    return std::nullopt;
}

template <class Dom>
std::optional<ConditionId> scan_C(const Dom& dom)
{
    using V = typename Dom::V;
    const char* recipes[] = {"i", "ii", "iii"};
    for (int r = 0; r < 3; ++r) {
        for (int k = 0; k < 6; ++k) {
            std::array<V, 6> h;
            for (int j = 0; j < 6; ++j) h[static_cast<std::size_t>(j)] = dom.alpha(j);
            auto at = [&](int j) -> V& { return h[static_cast<std::size_t>(mod6(j))]; };
            auto a = [&](int j) -> V { return dom.alpha(j); };
            if (r >= 1) {
                if (dom.zero(a(k + 1))) continue;
                at(k) = a(k) + a(k + 1);
                at(k + 1) = -a(k + 1);
                at(k + 2) = a(k + 2) + a(k + 1);
            }
            if (r == 2) {
                if (dom.zero(a(k + 4))) continue;
                at(k + 3) = a(k + 3) + a(k + 4);
                at(k + 4) = -a(k + 4);
                at(k + 5) = a(k + 5) + a(k + 4);
            }
            auto H = [&](int j) -> V { return at(k + j); };
            const std::array<V, 4> q{V(H(2) - H(4)), V(H(3) - H(5)), V(H(0) - H(4)), V(H(1) - H(5))};
            const V chi = q[0] + q[1] + q[2] + q[3];
            const std::array<int, 4> sg{-1, 1, 1, -1};
            for (int cond = 1; cond <= 4; ++cond) {
                // (2): hats congruent to (-1, 1, 1, -1)/3; (4): to (1, -1, -1, 1)/3.
                const int shift_sign = cond == 2 ? -1 : cond == 4 ? 1 : 0;
                std::vector<V> v;
                for (std::size_t j = 0; j < 4; ++j) v.push_back(q[j] + dom.constant(shift_sign * sg[j], 3));
                const V c = cond <= 2 ? chi : V(chi + dom.constant(1, 1));
                if (all_integral(dom, v) && dom.divisible_by_3(c)) {
                    std::vector<Integer> wit = wholes(dom, v);
                    wit.push_back(dom.whole(c) / 3);
                    return ConditionId{SolutionType::C, cond, k, recipes[r], wit, false};
                }
            }
        }
    }
    const std::array<std::array<int, 6>, 3> patterns = {{
        {1, -1, 1, 1, 0, 1},
        {1, 0, -1, -1, 0, 1},
        {1, 0, 1, 0, 1, 0},
    }};
    for (int k = 0; k < 6; ++k) {
        for (const auto& pat : patterns) {
            for (int s : {1, -1}) {
                bool ok = true;
                for (int j = 0; j < 6 && ok; ++j)
                    ok = dom.frac_is(dom.alpha(k + j), s * pat[static_cast<std::size_t>(j)], 3);
                if (!ok) continue;
                std::vector<V> v;
                for (int j = 0; j < 6; ++j) v.push_back(dom.alpha(k + j));
                return ConditionId{SolutionType::C, 5, k, "", wholes(dom, v), false};
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<ConditionId> check_conditions_A(const Params& a)
{
    if (const auto s = scaled(a)) return scan_A(*s);
    return scan_A(RationalDomain{a});
}

std::optional<ConditionId> check_conditions_B(const Params& a)
{
    if (const auto s = scaled(a)) return scan_B(*s);
    return scan_B(RationalDomain{a});
}

std::optional<ConditionId> check_conditions_C(const Params& a)
{
    if (const auto s = scaled(a)) return scan_C(*s);
    return scan_C(RationalDomain{a});
}

std::optional<ConditionId> check_conditions(SolutionType ty, const Params& p)
{
    switch (ty) {
    case SolutionType::A: return check_conditions_A(p);
    case SolutionType::B: return check_conditions_B(p);
    case SolutionType::C: return check_conditions_C(p);
    }
    return std::nullopt;
}

// ---- standard families ----

namespace {

struct FamilyData {
    std::array<Rational, 6> base;
    std::array<Rational, 6> dir;
    int slot;
};

FamilyData family_data(StandardFamily f)
{
    const Rational h = kHalf, t = kThird;
    switch (f) {
    case StandardFamily::A_i: return {{0, 1, 0, 0, 0, 0}, {1, -1, 0, 0, 0, 0}, 0};
    case StandardFamily::A_ii: return {{0, 0, 0, 1, 0, 0}, {1, 0, 0, -1, 0, 0}, 0};
    case StandardFamily::B_1: return {{0, h, 0, h, 0, 0}, {1, -1, 1, -1, 0, 0}, 0};
    case StandardFamily::B_2: return {{h, 0, h, 0, 0, 0}, {0, 0, 0, 1, 0, -1}, 3};
    case StandardFamily::B_3: return {{0, 0, 1, 0, 0, 0}, {1, 0, -1, 0, 0, 0}, 0};
    case StandardFamily::C_1: return {{0, t, 0, t, 0, t}, {1, -1, 1, -1, 1, -1}, 4};
    case StandardFamily::C_2: return {{t, t, t, 0, 0, 0}, {-1, 0, 0, 1, 0, 0}, 3};
    case StandardFamily::C_3: return {{0, 0, 0, 1, 0, 0}, {1, 0, 0, -1, 0, 0}, 0};
    case StandardFamily::C_4: return {{0, t, t, t, 0, 0}, {1, 0, 0, -1, 0, 0}, 0};
    }
    return {};
}

// x with q = base + x dir modulo Z^6 (exactly when exact is set).
std::optional<Rational> family_member(StandardFamily f, const Params& q, bool exact)
{
    const FamilyData d = family_data(f);
    const auto s = static_cast<std::size_t>(d.slot);
    const Rational x = (q.values()[s] - d.base[s]) / d.dir[s];
    for (std::size_t k = 0; k < 6; ++k) {
        const Rational diff = q.values()[k] - d.base[k] - x * d.dir[k];
        if (exact ? diff != 0 : !is_integer(diff)) return std::nullopt;
    }
    return x;
}

std::vector<StandardFamily> seeded_families(SolutionType ty)
{
    switch (ty) {
    case SolutionType::A: return {StandardFamily::A_i, StandardFamily::A_ii};
    case SolutionType::B: return {StandardFamily::B_1};
    case SolutionType::C: return {StandardFamily::C_1};
    }
    return {};
}

void push_shift(TransformWord& w, int i, const Integer& n)
{
    const bool inv = n < 0;
    for (Integer k = 0; k < abs(n); ++k) w.letters.push_back(Generator::shift(i, inv));
}

// Translation word taking q to target when target - q lies in Z^6.
TransformWord translation_word(const Params& q, const Params& target)
{
    // T_i adds e_{i-1} - e_i, so with k_6 = 0: k_1 = v_0, k_{j+1} = k_j + v_j.
    std::array<Integer, 7> k{};
    for (int j = 0; j < 5; ++j) {
        const Rational v = target[j] - q[j];
        k[static_cast<std::size_t>(j + 1)] = k[static_cast<std::size_t>(j)] + v.get_num();
    }
    TransformWord w;
    for (int i = 1; i <= 5; ++i) push_shift(w, i, k[static_cast<std::size_t>(i)]);
    return w;
}

std::array<Rational, 6> class_key(const Params& p)
{
    std::array<Rational, 6> k;
    for (int j = 0; j < 6; ++j) k[static_cast<std::size_t>(j)] = mod1(p[j]);
    return k;
}

std::optional<Reduction> schedule_A(const Params& p, const ConditionId& c)
{
    TransformWord w;
    for (int k = 0; k < c.anchor; ++k) w.letters.push_back(Generator::pi());
    Params q = act_params_word(p, w);
    bool ok = true;
    auto shift = [&](int i, const std::function<Rational(const Params&)>& expo) {
        if (!ok) return;
        const Rational e = expo(q);
        if (!is_integer(e)) {
            ok = false;
            return;
        }
        TransformWord part;
        push_shift(part, i, e.get_num());
        q = act_params_word(q, part);
        w.append(part);
    };
    switch (c.index) {
    case 1:
        shift(6, [](const Params& a) -> Rational { return -a[5]; });
        shift(4, [](const Params& a) -> Rational { return a[4]; });
        shift(3, [](const Params& a) -> Rational { return a[3]; });
        shift(2, [](const Params& a) -> Rational { return a[2]; });
        break;
    case 2:
        shift(6, [](const Params& a) -> Rational { return -a[5]; });
        shift(4, [](const Params& a) -> Rational { return a[4]; });
        shift(3, [](const Params& a) -> Rational { return -a[2]; });
        shift(1, [](const Params& a) -> Rational { return a[1]; });
        break;
    case 3:
        shift(4, [](const Params& a) -> Rational { return -a[3]; });
        shift(5, [](const Params& a) -> Rational { return a[5]; });
        shift(1, [](const Params& a) -> Rational { return -(a[0] + a[4]); });
        shift(2, [](const Params& a) -> Rational { return -(a[2] + a[4]); });
        if (ok && q[4] != 0) {
            const TransformWord cleanup = parse_word("pi^2 s4 s5 s3 s4").inverse();
            q = act_params_word(q, cleanup);
            w.append(cleanup);
        }
        break;
    default: return std::nullopt;
    }
    if (!ok) return std::nullopt;
    for (StandardFamily f : {StandardFamily::A_i, StandardFamily::A_ii})
        if (auto x = family_member(f, q, true)) return Reduction{{f, *x}, w};
    return std::nullopt;
}

} // namespace

std::string to_string(StandardFamily f)
{
    switch (f) {
    case StandardFamily::A_i: return "A_i";
    case StandardFamily::A_ii: return "A_ii";
    case StandardFamily::B_1: return "B_1";
    case StandardFamily::B_2: return "B_2";
    case StandardFamily::B_3: return "B_3";
    case StandardFamily::C_1: return "C_1";
    case StandardFamily::C_2: return "C_2";
    case StandardFamily::C_3: return "C_3";
    case StandardFamily::C_4: return "C_4";
    }
    return "?";
}

SolutionType family_type(StandardFamily f)
{
    switch (f) {
    case StandardFamily::A_i:
    case StandardFamily::A_ii: return SolutionType::A;
    case StandardFamily::B_1:
    case StandardFamily::B_2:
    case StandardFamily::B_3: return SolutionType::B;
    default: return SolutionType::C;
    }
}

Params family_params(StandardFamily f, const Rational& x)
{
    const FamilyData d = family_data(f);
    std::array<Rational, 6> a;
    for (std::size_t k = 0; k < 6; ++k) a[k] = d.base[k] + x * d.dir[k];
    return Params(a);
}

int family_free_slot(StandardFamily f) { return family_data(f).slot; }

Params StandardForm::instantiate() const { return family_params(family, free_parameter); }

std::string StandardForm::to_string() const
{
    return a5::to_string(family) + " at " + a5::to_string(free_parameter) + " " + instantiate().to_string();
}

std::vector<Reduction> seeded_reductions(const Params& p, SolutionType ty, std::size_t limit)
{
    std::vector<Reduction> out;
    const auto families = seeded_families(ty);
    std::map<std::array<Rational, 6>, bool> seen;
    std::vector<std::pair<Params, TransformWord>> frontier{{p, {}}};
    seen[class_key(p)] = true;
    const std::vector<Generator> moves = {Generator::s(0), Generator::s(1), Generator::s(2), Generator::s(3),
                                          Generator::s(4), Generator::s(5), Generator::pi(), Generator::pi_inv()};
    while (!frontier.empty() && out.size() < limit) {
        std::vector<std::pair<Params, TransformWord>> next;
        for (const auto& [q, w] : frontier) {
            for (StandardFamily f : families) {
                const auto x = family_member(f, q, false);
                if (!x) continue;
                const StandardForm sf{f, *x};
                const Params target = sf.instantiate();
                Reduction r{sf, w + translation_word(q, target)};
                if (act_params_word(p, r.word) == target) out.push_back(std::move(r));
                if (out.size() >= limit) return out;
            }
            for (const auto& g : moves) {
                Params n = act_params(q, g);
                if (seen.emplace(class_key(n), true).second) {
                    TransformWord nw = w;
                    nw.letters.push_back(g);
                    next.emplace_back(std::move(n), std::move(nw));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

Reduction reduce_to_standard(const Params& p, SolutionType ty, const std::optional<ConditionId>& cond)
{
    if (cond && ty == SolutionType::A && cond->index <= 3)
        if (auto r = schedule_A(p, *cond)) return *r;
    auto rs = seeded_reductions(p, ty, 1);
    if (rs.empty())
        throw ClassificationError("no reduction of " + p.to_string() + " to a seeded Type " + to_string(ty) + " family");
    return rs.front();
}

Solution seed_solution(const StandardForm& sf)
{
    const Rational& x = sf.free_parameter;
    auto seeded = [&](SeedKind k) {
        Solution s = seed(k, x);
        if (!(s.params == sf.instantiate())) throw ClassificationError("seed parameters disagree with " + sf.to_string());
        return s;
    };
    switch (sf.family) {
    case StandardFamily::A_i: return seeded(SeedKind::A1);
    case StandardFamily::A_ii: return seeded(SeedKind::A2);
    case StandardFamily::B_1: return seeded(SeedKind::B);
    case StandardFamily::C_1: return seeded(SeedKind::C);
    case StandardFamily::B_2:
    case StandardFamily::B_3: {
        const Params p = sf.instantiate();
        if (is_integer(x - kHalf)) {
            for (const auto& r : seeded_reductions(p, SolutionType::B)) {
                try {
                    return synthesize_solution(p, r.standard, r.word);
                } catch (const ClassificationError&) {
                }
            }
        }
        throw ClassificationError("no seed: family " + to_string(sf.family)
                                  + " has a rational solution of Type B only for half-integer parameter, got "
                                  + to_string(x));
    }
    case StandardFamily::C_2:
    case StandardFamily::C_3:
    case StandardFamily::C_4:
        throw ClassificationError("no seed: family " + to_string(sf.family) + " has no rational solution of Type C");
    }
    throw ClassificationError("unknown family");
}

Solution synthesize_solution(const Params& p, const StandardForm& sf, const TransformWord& w)
{
    const Solution s = act_solution_word(seed_solution(sf), w.inverse());
    if (!(s.params == p))
        throw ClassificationError("synthesis mismatch: word " + w.to_string() + " from " + sf.to_string()
                                  + " reaches " + s.params.to_string() + " instead of " + p.to_string());
    const VerifyReport v = verify_solution(s);
    if (!v.ok) throw ClassificationError("synthesized solution fails verification: " + v.failure);
    return s;
}

int default_orbit_depth()
{
    if (const char* env = std::getenv("A5KIT_ORBIT_DEPTH")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v < 64) return static_cast<int>(v);
    }
    return kDefaultOrbitDepth;
}

namespace {

bool type_matches(SolutionType ty, const InfinityType& inf)
{
    switch (ty) {
    case SolutionType::A:
        return inf.kind == InfinityType::Kind::A1 || inf.kind == InfinityType::Kind::A2
            || inf.kind == InfinityType::Kind::A3;
    case SolutionType::B: return inf.kind == InfinityType::Kind::B;
    case SolutionType::C: return inf.kind == InfinityType::Kind::C;
    }
    return false;
}

} // namespace

ClassificationReport classify(const Params& p, int orbit_depth)
{
    ClassificationReport rep{p, {}, {}, {}, {}, {}};
    for (SolutionType ty : {SolutionType::A, SolutionType::B, SolutionType::C}) {
        TypeVerdict& v = rep.verdicts[static_cast<std::size_t>(ty)];
        v.type = ty;
        std::vector<Reduction> candidates;
        v.matched = check_conditions(ty, p);
        if (v.matched) {
            v.route = "literal";
            if (ty == SolutionType::A)
                if (auto r = schedule_A(p, *v.matched)) candidates.push_back(*r);
        } else if (auto hit = orbit_search(p, [ty](const Params& q) { return check_conditions(ty, q).has_value(); },
                                           orbit_depth)) {
            v.route = "orbit";
            v.via_orbit = hit->word;
            v.matched = check_conditions(ty, hit->params);
            if (ty == SolutionType::A)
                if (auto r = schedule_A(hit->params, *v.matched)) {
                    r->word = hit->word + r->word;
                    candidates.push_back(*r);
                }
        }
        const auto generic = seeded_reductions(p, ty);
        candidates.insert(candidates.end(), generic.begin(), generic.end());
        if (!v.matched && !candidates.empty()) v.route = "reduction";
        if (v.route.empty()) continue;

        std::string trace;
        for (const auto& r : candidates) {
            try {
                Solution s = synthesize_solution(p, r.standard, r.word);
                const InfinityType inf = infinity_type(s);
                if (!type_matches(ty, inf)) {
                    trace += "\n  " + r.word.to_string() + ": solution has type " + inf.to_string() + " at infinity";
                    continue;
                }
                v.exists = true;
                v.reduction = r;
                v.solution = std::move(s);
                break;
            } catch (const std::exception& e) {
                trace += "\n  " + r.word.to_string() + ": " + e.what();
            }
        }
        if (!v.exists)
            throw ClassificationError("Type " + to_string(ty) + " condition matched for " + p.to_string() + " via "
                                      + v.route + " but no synthesis succeeded:" + (trace.empty() ? " no candidate" : trace));
    }
    for (const auto& v : rep.verdicts) {
        if (!v.exists) continue;
        rep.standard = v.reduction;
        rep.solution = v.solution;
        rep.seed_used = to_string(v.reduction->standard.family) + " seed";
        ClassificationChecks c;
        c.residue_integrality = residue_integrality_check(*v.solution);
        c.infinity = infinity_type(*v.solution);
        c.obstruction = obstruction_check(p, c.infinity, zero_pattern(*v.solution).pattern);
        rep.checks = c;
        break;
    }
    return rep;
}

std::string ClassificationReport::render_text() const
{
    std::ostringstream os;
    os << "input: " << input.to_string() << "\n";
    for (const auto& v : verdicts) {
        os << "Type " << to_string(v.type) << ": " << v.verdict();
        if (!v.route.empty()) os << " [" << v.route << "]";
        os << "\n";
        if (v.matched) os << "  condition: " << v.matched->to_string() << "\n";
        if (v.via_orbit) os << "  orbit word: " << v.via_orbit->to_string() << "\n";
        if (v.reduction)
            os << "  standard form: " << v.reduction->standard.to_string() << "\n  reduction word: "
               << v.reduction->word.to_string() << "\n";
    }
    if (!solution) {
        os << "no rational solution found\n";
        return os.str();
    }
    os << "seed: " << seed_used << "\nsolution:\n";
    for (int j = 0; j < 6; ++j) os << "  f" << j << " = " << (*solution)[j].to_string() << "\n";
    os << "checks: residue integrality " << (checks->residue_integrality ? "holds" : "FAILS") << ", type at infinity "
       << checks->infinity.to_string() << ", obstruction " << checks->obstruction.to_string() << "\n";
    return os.str();
}

} // namespace a5
