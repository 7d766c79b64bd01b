// solution.hpp - solutions of the A5 system and the Backlund action on them
#pragma once

#include "a5/params.hpp"
#include "a5/ratfunc.hpp"

#include <array>
#include <string>

namespace a5 {

struct Solution {
    std::array<RatFunc, 6> f;
    Params params;

    const RatFunc& operator[](int i) const { return f[static_cast<std::size_t>(mod6(i))]; }
    friend bool operator==(const Solution&, const Solution&) = default;
};

// i-th component: (t/2) f_i' - f_i * Q_i - (1/2 - a_{i+2} - a_{i+4}) f_i - a_i (f_{i+2} + f_{i+4}),
// Q_i = f_{i+1}f_{i+2} + f_{i+1}f_{i+4} + f_{i+3}f_{i+4} - f_{i+2}f_{i+3} - f_{i+2}f_{i+5} - f_{i+4}f_{i+5}.
std::array<RatFunc, 6> residual(const Solution& s);

struct VerifyReport {
    bool ok = true;
    std::string failure; // first violated identity, empty when ok
};

// Checks, in order: f0+f2+f4 = t, f1+f3+f5 = t, the six equations, oddness.
VerifyReport verify_solution(const Solution& s);

// s_i: f_{i+1} += a_i/f_i, f_{i-1} -= a_i/f_i (identity when f_i == 0);
// pi: f_j <- f_{j+1}. Shift letters act through their generator words.
Solution act_solution(const Solution& s, const Generator& g);
Solution act_solution_word(const Solution& s, const TransformWord& w);

// Polynomial seed families, placed at an anchor i by index rotation:
//   A1: f_i = f_{i+1} = t,                       a = (x, 1-x, 0, 0, 0, 0)
//   A2: f_i = f_{i+3} = t,                       a = (x, 0, 0, 1-x, 0, 0)
//   A3: f_i = f_{i+1} = f_{i+2} = t, f_{i+4} = -t, a = (x, 1-x, x, 0, -x, 0)
//   B:  f_i = ... = f_{i+3} = t/2,               a = (x, 1/2-x, x, 1/2-x, 0, 0)
//   C:  all f_j = t/3,                           a = (x, 1/3-x, x, 1/3-x, x, 1/3-x)
enum class SeedKind { A1, A2, A3, B, C };

Solution seed(SeedKind kind, const Rational& x, int anchor = 0);
std::string seed_name(SeedKind kind);
SeedKind parse_seed_kind(const std::string& name); // throws ParseError

} // namespace a5
