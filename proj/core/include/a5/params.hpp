// params.hpp - parameter tuples and the affine Weyl group action on them
#pragma once

#include "a5/rational.hpp"

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace a5 {

inline constexpr int mod6(int i) { return ((i % 6) + 6) % 6; }

// (alpha_0, ..., alpha_5) with sum 1; indices are taken mod 6.
class Params {
public:
    // Throws std::invalid_argument when the entries do not sum to 1.
    explicit Params(const std::array<Rational, 6>& a);

    const Rational& operator[](int i) const { return a_[static_cast<std::size_t>(mod6(i))]; }
    const std::array<Rational, 6>& values() const { return a_; }

    friend bool operator==(const Params& x, const Params& y) { return x.a_ == y.a_; }
    friend bool operator<(const Params& x, const Params& y) { return x.a_ < y.a_; }

    std::string to_string() const;

    // Internal constructor for results of group actions (sum is preserved).
    static Params trusted(const std::array<Rational, 6>& a);

private:
    Params() = default;
    std::array<Rational, 6> a_;
};

// Six comma-separated rationals; throws ParseError or std::invalid_argument.
Params parse_params(const std::string& text);

// One letter of a transformation word. Shift letters stand for the fixed
// generator word of T_i (or its inverse).
struct Generator {
    enum class Kind { S, Pi, PiInv, Shift, ShiftInv };
    Kind kind = Kind::S;
    int index = 0; // 0..5 for S, 1..6 for shifts

    static Generator s(int i) { return {Kind::S, mod6(i)}; }
    static Generator pi() { return {Kind::Pi, 0}; }
    static Generator pi_inv() { return {Kind::PiInv, 0}; }
    static Generator shift(int i, bool inverse = false)
    {
        return {inverse ? Kind::ShiftInv : Kind::Shift, i};
    }

    Generator inverse() const;
    bool is_macro() const { return kind == Kind::Shift || kind == Kind::ShiftInv; }
    friend bool operator==(const Generator&, const Generator&) = default;
};

// Letters are applied left to right: [g1, g2, ..., gk] acts as gk o ... o g1.
struct TransformWord {
    std::vector<Generator> letters;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }
    TransformWord inverse() const;
    // Replaces shift letters by their generator words.
    TransformWord expanded() const;
    TransformWord& append(const TransformWord& w);
    friend TransformWord operator+(TransformWord a, const TransformWord& b) { return a.append(b); }
    friend bool operator==(const TransformWord&, const TransformWord&) = default;

    // Tokens s0..s5, pi, pi^k, T1..T6, Ti^k; runs are folded into powers.
    std::string to_string() const;
};

// Whitespace-separated tokens: s0..s5, pi, pi^-1, pi^k, T1..T6, Ti^k.
TransformWord parse_word(const std::string& text);

// The generator word for T_i (1 <= i <= 6), letters in application order:
// T_1 = pi s5 s4 s3 s2 s1, T_2 = s1 pi s5 s4 s3 s2, ..., T_6 = s5 s4 s3 s2 s1 pi.
TransformWord shift_word(int i);

Params act_params(const Params& p, const Generator& g);
Params act_params_word(const Params& p, const TransformWord& w);

struct OrbitHit {
    Params params;
    TransformWord word;
};

// Breadth-first search over words in s0..s5, pi, pi^-1, T1..T6, T1^-1..T6^-1
// up to max_depth letters; nodes are deduplicated by exact parameter value.
std::optional<OrbitHit> orbit_search(const Params& p,
                                     const std::function<bool(const Params&)>& target,
                                     int max_depth);

} // namespace a5
