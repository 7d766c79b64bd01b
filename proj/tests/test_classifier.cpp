// test_classifier.cpp - condition scanners, reductions, seeds, synthesis, classify
#include "support.hpp"

#include <doctest.h>

#include <tuple>

using namespace a5;
using namespace a5::testing;

namespace {

bool Z(const Rational& v) { return is_integer(v); }
bool Z2(const Rational& v) { return is_even_integer(v); }

// Type-B conditions (1)-(11), transcribed term by term; returns every (index, anchor) hit.
std::set<std::pair<int, int>> type_b_hits(const Params& a)
{
    std::set<std::pair<int, int>> hits;
    for (int i = 0; i < 6; ++i) {
        auto A = [&](int k) { return a[i + k]; };
        const Rational u1 = -A(0) + A(2) - A(4), v1 = -A(1) + A(3) + A(5);
        if (Z(u1) && Z(v1) && Z(2 * A(4)) && Z(-2 * A(5)) && Z2(u1 + v1)) hits.insert({1, i});
        const Rational v2 = A(1) + A(3) + A(5);
        if (A(1) != 0 && Z(u1) && Z(v2) && Z(2 * A(4)) && Z(-2 * A(5)) && Z2(u1 + v2)) hits.insert({2, i});
        const Rational u3 = -A(0) - A(2) - A(4);
        if (A(2) != 0 && Z(u3) && Z(v1) && Z(2 * A(4)) && Z(-2 * A(5)) && Z2(u3 + v1)) hits.insert({3, i});
        const Rational v4 = -A(1) - A(3) + A(5);
        if (A(3) != 0 && Z(u1) && Z(v4) && Z(2 * A(3) + 2 * A(4)) && Z(-2 * A(5)) && Z2(u1 + v4))
            hits.insert({4, i});
        const Rational p5 = A(1) - A(3) - A(5);
        if (A(4) != 0 && Z(p5) && Z(u1) && Z(2 * A(3) + 2 * A(4)) && Z(-2 * A(4))
            && Z2(A(1) - A(3) - 2 * A(4) - A(5) + u1))
            hits.insert({5, i});
        const Rational q6 = A(0) - A(2) + A(4) + 2 * A(5);
        if (A(5) != 0 && Z(v1) && Z(q6) && Z(-2 * A(5)) && Z(-2 * A(0) - 2 * A(5)) && Z2(v1 + q6)) hits.insert({6, i});
        const Rational u7 = A(0) + A(2) - A(4);
        if (A(0) != 0 && Z(u7) && Z(v1) && Z(2 * A(4)) && Z(-2 * A(0) - 2 * A(5)) && Z2(u7 + v1)) hits.insert({7, i});
        const Rational p8 = -A(1) - A(3) - 2 * A(4) - A(5);
        if (A(1) != 0 && A(4) != 0 && Z(p8) && Z(u1) && Z(2 * A(3) + 2 * A(4)) && Z(2 * A(4)) && Z2(p8 + u1))
            hits.insert({8, i});
        const Rational p9 = -A(0) - A(2) - A(4) - 2 * A(5), q9 = -A(1) + A(3) - A(5);
        if (A(2) != 0 && A(5) != 0 && Z(p9) && Z(q9) && Z(-2 * A(5)) && Z(-2 * A(0) - 2 * A(5)) && Z2(p9 + q9))
            hits.insert({9, i});
        if (A(3) != 0 && A(0) != 0 && Z(u7) && Z(v4) && Z(2 * A(3) + 2 * A(4)) && Z(-2 * A(0) - 2 * A(5))
            && Z2(u7 + v4))
            hits.insert({10, i});
        const Rational h(1, 2);
        const std::array<std::array<Rational, 6>, 3> pats = {{{h, h, h, h, 0, 0}, {h, h, 0, h, h, 0}, {h, 0, h, 0, 0, 0}}};
        for (const auto& pat : pats) {
            bool ok = true;
            for (int k = 0; k < 6; ++k) ok = ok && Z(A(k) - pat[static_cast<std::size_t>(k)]);
            if (ok) hits.insert({11, i});
        }
    }
    return hits;
}

// Type-C conditions; hits are (recipe 1..3 or 0 for condition 5, anchor, index).
std::set<std::tuple<int, int, int>> type_c_hits(const Params& a)
{
    std::set<std::tuple<int, int, int>> hits;
    const Rational th(1, 3);
    auto congruent = [](const std::array<Rational, 4>& v, const std::array<Rational, 4>& w) {
        for (std::size_t k = 0; k < 4; ++k)
            if (!Z(v[k] - w[k])) return false;
        return true;
    };
    for (int recipe = 1; recipe <= 3; ++recipe) {
        for (int k = 0; k < 6; ++k) {
            auto A = [&](int j) { return a[k + j]; };
            std::array<Rational, 6> hat; // indexed relative to k
            for (int j = 0; j < 6; ++j) hat[static_cast<std::size_t>(j)] = A(j);
            if (recipe >= 2) {
                if (A(1) == 0) continue;
                hat[0] = A(0) + A(1);
                hat[1] = -A(1);
                hat[2] = A(2) + A(1);
            }
            if (recipe == 3) {
                if (A(4) == 0) continue;
                hat[3] = A(3) + A(4);
                hat[4] = -A(4);
                hat[5] = A(5) + A(4);
            }
            const Rational x = hat[2] - hat[4], y = hat[3] - hat[5], z = hat[0] - hat[4], w = hat[1] - hat[5];
            const Rational chi = x + y + z + w;
            const std::array<Rational, 4> v{x, y, z, w};
            const std::array<Rational, 4> zero{0, 0, 0, 0};
            const std::array<Rational, 4> third{-th, th, th, -th};
            const std::array<Rational, 4> mthird{th, -th, -th, th};
            if (congruent(v, zero) && Z(chi / 3)) hits.insert({recipe, k, 1});
            if (congruent(v, third) && Z(chi / 3)) hits.insert({recipe, k, 2});
            if (congruent(v, zero) && Z((chi + 1) / 3)) hits.insert({recipe, k, 3});
            if (congruent(v, mthird) && Z((chi + 1) / 3)) hits.insert({recipe, k, 4});
        }
    }
    const std::array<std::array<int, 6>, 3> pats = {{{1, -1, 1, 1, 0, 1}, {1, 0, -1, -1, 0, 1}, {1, 0, 1, 0, 1, 0}}};
    for (int k = 0; k < 6; ++k)
        for (const auto& pat : pats)
            for (int sign : {1, -1}) {
                bool ok = true;
                for (int j = 0; j < 6; ++j) {
                    const Rational target = make_rational(sign * pat[static_cast<std::size_t>(j)], 3);
                    ok = ok && Z(a[k + j] - target);
                }
                if (ok) hits.insert({0, k, 5});
            }
    return hits;
}

// Parameter tuples with many coincidences: small denominators 1, 2, 3, 6.
Params structured(Gen& g)
{
    static const int dens[] = {1, 2, 3, 6};
    std::array<Rational, 6> a;
    Rational sum = 0;
    for (int k = 0; k < 5; ++k) {
        const int d = dens[g.uniform(0, 3)];
        a[static_cast<std::size_t>(k)] = g.uniform(0, 2) == 0 ? Rational(0) : make_rational(g.uniform(-4, 4), d);
        sum += a[static_cast<std::size_t>(k)];
    }
    a[5] = 1 - sum;
    return Params(a);
}

const std::array<StandardFamily, 4> kSeeded = {StandardFamily::A_i, StandardFamily::A_ii, StandardFamily::B_1,
                                               StandardFamily::C_1};

} // namespace

TEST_CASE("Type-A scanner golden values")
{
    auto a = check_conditions_A(params({q(1, 2), q(1, 2), 0, 0, 0, 0}));
    REQUIRE(a);
    CHECK(a->index == 1);
    CHECK(a->anchor == 0);
    const Params two = params({q(1, 3), 0, 0, q(2, 3), 0, 0});
    CHECK_FALSE(type_a_hits(two).empty());
    a = check_conditions_A(two);
    REQUIRE(a);
    CHECK(a->index == 2);
    CHECK(a->anchor == 0);
    const Params fifth = params({q(1, 5), q(1, 5), q(1, 5), q(1, 5), q(1, 5), 0});
    CHECK(type_a_hits(fifth).empty());
    CHECK_FALSE(check_conditions_A(fifth));
}

TEST_CASE("Type-B scanner golden values")
{
    // condition (1) at anchor 0 precedes the mod-Z pattern of condition (11)
    const Params half = params({q(1, 2), 0, q(1, 2), 0, 0, 0});
    CHECK(type_b_hits(half).count({11, 0}) == 1);
    auto b = check_conditions_B(half);
    REQUIRE(b);
    CHECK(b->index == 1);
    CHECK(b->anchor == 0);
    b = check_conditions_B(family_params(StandardFamily::B_1, q(1, 5)));
    REQUIRE(b);
    CHECK(b->index == 1);
    CHECK(b->anchor == 0);
    const Params fifth = params({q(1, 5), q(1, 5), q(1, 5), q(1, 5), q(1, 5), 0});
    CHECK(type_b_hits(fifth).empty());
    CHECK_FALSE(check_conditions_B(fifth));
}

TEST_CASE("Type-C scanner golden values")
{
    auto c = check_conditions_C(params({0, q(1, 3), 0, q(1, 3), 0, q(1, 3)}));
    REQUIRE(c);
    CHECK(c->index == 1);
    CHECK(c->recipe == "i");
    CHECK(c->anchor == 0);
    CHECK_FALSE(check_conditions_C(params({q(1, 3), q(1, 3), q(1, 3), 0, 0, 0})));
    CHECK(type_c_hits(params({q(1, 5), q(1, 5), q(1, 5), q(1, 5), q(1, 5), 0})).empty());
    CHECK_FALSE(check_conditions_C(params({q(1, 5), q(1, 5), q(1, 5), q(1, 5), q(1, 5), 0})));
    // a condition-5 pattern that conditions 1-4 already cover
    const Params pat = params({q(1, 3), 0, q(1, 3), 0, q(1, 3), 0});
    CHECK(type_c_hits(pat).count({0, 0, 5}) == 1);
    c = check_conditions_C(pat);
    REQUIRE(c);
    CHECK(c->index == 1);
}

TEST_CASE("property: scanners agree with brute-force oracles")
{
    Gen g(31337);
    int a_hits = 0, b_hits = 0, c_hits = 0;
    for (int n = 0; n < 600; ++n) {
        const Params p = n % 2 ? structured(g) : g.params();

        const auto ha = type_a_hits(p);
        const auto ra = check_conditions_A(p);
        CHECK(ra.has_value() == !ha.empty());
        if (ra) {
            ++a_hits;
            CHECK(std::make_pair(ra->index, ra->anchor) == *ha.begin());
        }

        const auto hb = type_b_hits(p);
        const auto rb = check_conditions_B(p);
        CHECK(rb.has_value() == !hb.empty());
        if (rb) {
            ++b_hits;
            CHECK(std::make_pair(rb->index, rb->anchor) == *hb.begin());
        }

        const auto hc = type_c_hits(p);
        const auto rc = check_conditions_C(p);
        CHECK(rc.has_value() == !hc.empty());
        if (rc) {
            ++c_hits;
            // conditions 1-4 in (recipe, anchor, index) order, condition 5 last
            std::tuple<int, int, int> first = *hc.begin();
            for (const auto& h : hc)
                if (std::get<0>(h) != 0) {
                    first = h;
                    break;
                }
            const int recipe = rc->recipe == "i" ? 1 : rc->recipe == "ii" ? 2 : rc->recipe == "iii" ? 3 : 0;
            CHECK(std::make_tuple(recipe, rc->anchor, rc->index) == first);
        }
    }
    CHECK(a_hits > 20);
    CHECK(b_hits > 20);
    CHECK(c_hits > 2);
}

TEST_CASE("standard families")
{
    Gen g(5);
    for (int f = 0; f <= static_cast<int>(StandardFamily::C_4); ++f) {
        const auto fam = static_cast<StandardFamily>(f);
        const Rational x = g.generic_value();
        const Params p = family_params(fam, x);
        CHECK(p[family_free_slot(fam)] == x);
        CHECK((StandardForm{fam, x}.instantiate() == p));
    }
    CHECK(family_params(StandardFamily::A_i, q(2, 7)) == params({q(2, 7), q(5, 7), 0, 0, 0, 0}));
    CHECK(family_params(StandardFamily::B_2, q(2, 7)) == params({q(1, 2), 0, q(1, 2), q(2, 7), 0, q(-2, 7)}));
    CHECK(family_params(StandardFamily::C_2, q(2, 7))
          == params({q(1, 3) - q(2, 7), q(1, 3), q(1, 3), q(2, 7), 0, 0}));
    CHECK(family_type(StandardFamily::B_3) == SolutionType::B);
}

TEST_CASE("reductions: worked examples")
{
    const Params p = params({-3, 4, 2, -1, 0, -1});
    const auto cond = check_conditions_A(p);
    REQUIRE(cond);
    CHECK(cond->index == 1);
    const Reduction r = reduce_to_standard(p, SolutionType::A, cond);
    CHECK(r.standard.family == StandardFamily::A_i);
    CHECK(act_params_word(p, r.word) == r.standard.instantiate());

    // Type-B case (2) source tuple, replayed through the printed word
    for (const Rational x : {q(2, 7), q(-3, 11)}) {
        const Params src = params({x, -x, x, -x + q(3, 2), 0, q(-1, 2)});
        const Params tgt = family_params(StandardFamily::B_2, x);
        CHECK(act_params_word(tgt, parse_word("pi^3 s2 T5 T4")) == src);
        const Params c_src = params({x, -x, x, -x + 1, x, -x});
        CHECK(act_params_word(params({x, 0, 0, 1 - x, 0, 0}), parse_word("pi^-1 T4 s4 s1")) == c_src);
        // away from half-integers no Type-B condition holds, so there is nothing to reduce to
        CHECK_FALSE(check_conditions_B(src));
        CHECK_THROWS_AS(reduce_to_standard(src, SolutionType::B, std::nullopt), ClassificationError);
        const Params b1 = act_params_word(family_params(StandardFamily::B_1, x), parse_word("s1 pi s3 T2"));
        const Reduction rb = reduce_to_standard(b1, SolutionType::B, check_conditions_B(b1));
        CHECK(act_params_word(b1, rb.word) == rb.standard.instantiate());
        CHECK(rb.standard.family == StandardFamily::B_1);
    }
    CHECK_THROWS_AS(reduce_to_standard(params({q(1, 5), q(1, 5), q(1, 5), q(1, 5), q(1, 5), 0}), SolutionType::A,
                                       std::nullopt),
                    ClassificationError);
}

TEST_CASE("seeds of standard forms")
{
    const Solution a = seed_solution({StandardFamily::A_i, q(1, 2)});
    CHECK(a.f[0] == RatFunc::t());
    CHECK(a.f[1] == RatFunc::t());
    CHECK(a.f[2].is_zero());
    const Solution b = seed_solution({StandardFamily::B_1, q(1, 4)});
    for (int j = 0; j < 4; ++j) CHECK(b[j] == RatFunc(q(1, 2)) * RatFunc::t());
    CHECK(b.params == family_params(StandardFamily::B_1, q(1, 4)));
    const Solution c = seed_solution({StandardFamily::C_1, q(1, 7)});
    for (int j = 0; j < 6; ++j) CHECK(c[j] == RatFunc(q(1, 3)) * RatFunc::t());
    for (StandardFamily f : {StandardFamily::C_2, StandardFamily::C_3, StandardFamily::C_4}) {
        try {
            (void)seed_solution({f, q(2, 7)});
            CHECK_MESSAGE(false, "expected no seed");
        } catch (const ClassificationError& e) {
            CHECK(std::string(e.what()).find("no seed") != std::string::npos);
        }
    }
    // B_2 and B_3 away from their half-integer points carry no seed either
    CHECK_THROWS_AS(seed_solution({StandardFamily::B_2, q(2, 7)}), ClassificationError);
    CHECK_THROWS_AS(seed_solution({StandardFamily::B_3, q(2, 7)}), ClassificationError);
    for (StandardFamily f : kSeeded) {
        const Solution s = seed_solution({f, q(3, 13)});
        CHECK(verify_solution(s).ok);
    }
}

TEST_CASE("synthesis examples")
{
    const Params half = params({q(1, 2), q(1, 2), 0, 0, 0, 0});
    CHECK(synthesize_solution(half, {StandardFamily::A_i, q(1, 2)}, {})
          == seed_solution({StandardFamily::A_i, q(1, 2)}));

    const Params img = params({q(-1, 2), 1, 0, 0, 0, q(1, 2)});
    const Solution s = synthesize_solution(img, {StandardFamily::A_i, q(1, 2)}, parse_word("s0"));
    const RatFunc t = RatFunc::t();
    CHECK(s.f[1] == t + RatFunc(q(1, 2)) / t);
    CHECK(s.f[5] == RatFunc(q(-1, 2)) / t);
    CHECK(residual_oracle(s, sample_points()));

    const Params shifted = params({q(3, 2), q(-1, 2), 0, 0, 0, 0});
    const Solution viaT = synthesize_solution(shifted, {StandardFamily::A_i, q(1, 2)}, parse_word("T1^-1"));
    CHECK(viaT.params == shifted);
    CHECK(residual_oracle(viaT, sample_points()));
    // (3/2, -1/2, 0, 0, 0, 0) is itself an A_i member, so the shift returns the seed
    CHECK(viaT == seed_solution({StandardFamily::A_i, q(3, 2)}));
    const Params far = params({q(3, 2), q(1, 2), -1, 0, 0, 0});
    const Solution h = synthesize_solution(far, {StandardFamily::A_i, q(1, 2)}, parse_word("T1^-1 T2^-1"));
    CHECK(h.params == far);
    CHECK(residual_oracle(h, sample_points()));
    CHECK(h.f[0].num().degree() == 3);

    CHECK_THROWS_AS(synthesize_solution(img, {StandardFamily::A_i, q(1, 2)}, parse_word("s1")), ClassificationError);
}

TEST_CASE("classify examples")
{
    const auto r = classify(params({q(1, 2), q(1, 2), 0, 0, 0, 0}));
    REQUIRE(r.exists());
    CHECK(r.verdicts[0].route == "literal");
    CHECK(r.solution->f[0] == RatFunc::t());
    CHECK(r.solution->f[1] == RatFunc::t());

    const auto o = classify(params({q(-1, 2), 1, 0, 0, 0, q(1, 2)}));
    REQUIRE(o.exists());
    CHECK(o.solution->params == params({q(-1, 2), 1, 0, 0, 0, q(1, 2)}));
    CHECK(verify_solution(*o.solution).ok);

    const auto none = classify(params({q(1, 5), q(1, 5), q(1, 5), q(1, 5), q(1, 5), 0}), 4);
    CHECK_FALSE(none.exists());
    for (const auto& v : none.verdicts) CHECK(v.verdict() == "none (bounded)");

    for (const Params& p : {params({q(1, 3), q(1, 3), q(1, 3), 0, 0, 0}), params({q(1, 3), 0, 0, q(2, 3), 0, 0})}) {
        const auto rc = classify(p);
        CHECK_FALSE(rc.verdicts[2].exists);
    }
}

TEST_CASE("property: classify is sound on random admissible tuples")
{
    Gen g(1701);
    int found = 0;
    for (int n = 0; n < 100; ++n) {
        const StandardFamily fam = kSeeded[static_cast<std::size_t>(n % 4)];
        const Params start = family_params(fam, g.generic_value());
        const Params p = act_params_word(start, g.word(6));
        const auto rep = classify(p);
        CHECK(rep.exists());
        if (!rep.exists()) continue;
        ++found;
        CHECK(rep.solution->params == p);
        CHECK(verify_solution(*rep.solution).ok);
        CHECK(residual_oracle(*rep.solution, sample_points()));
        // literal monotonicity
        for (int k = 0; k < 3; ++k) {
            const auto ty = static_cast<SolutionType>(k);
            if (check_conditions(ty, p)) CHECK(rep.verdicts[static_cast<std::size_t>(k)].exists);
        }
        // dead-end families never appear as seeds
        if (rep.standard) {
            const auto f = rep.standard->standard.family;
            CHECK(f != StandardFamily::C_2);
            CHECK(f != StandardFamily::C_3);
            CHECK(f != StandardFamily::C_4);
        }
    }
    CHECK(found == 100);
}
