// params.cpp
#include "a5/params.hpp"

#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace a5 {

Params::Params(const std::array<Rational, 6>& a) : a_(a)
{
    Rational sum = 0;
    for (const auto& x : a_) sum += x;
    if (sum != 1)
        throw std::invalid_argument("alpha entries sum to " + a5::to_string(sum) + ", expected 1");
}

Params Params::trusted(const std::array<Rational, 6>& a)
{
    Params p;
    p.a_ = a;
    return p;
}

std::string Params::to_string() const
{
    std::string s = "(";
    for (int i = 0; i < 6; ++i) {
        if (i) s += ", ";
        s += a5::to_string(a_[static_cast<std::size_t>(i)]);
    }
    return s + ")";
}

Params parse_params(const std::string& text)
{
    std::array<Rational, 6> a;
    std::size_t start = 0;
    int n = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (n == 6) throw ParseError("alpha needs exactly six entries, got more");
        a[static_cast<std::size_t>(n++)] = parse_rational(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (n != 6) throw ParseError("alpha needs exactly six entries, got " + std::to_string(n));
    return Params(a);
}

Generator Generator::inverse() const
{
    switch (kind) {
    case Kind::S: return *this;
    case Kind::Pi: return pi_inv();
    case Kind::PiInv: return pi();
    case Kind::Shift: return {Kind::ShiftInv, index};
    case Kind::ShiftInv: return {Kind::Shift, index};
    }
    return *this;
}

TransformWord TransformWord::inverse() const
{
    TransformWord w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(it->inverse());
    return w;
}

TransformWord TransformWord::expanded() const
{
    TransformWord w;
    for (const auto& g : letters) {
        if (g.kind == Generator::Kind::Shift) w.append(shift_word(g.index));
        else if (g.kind == Generator::Kind::ShiftInv) w.append(shift_word(g.index).inverse());
        else w.letters.push_back(g);
    }
    return w;
}

TransformWord& TransformWord::append(const TransformWord& w)
{
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
    return *this;
}

std::string TransformWord::to_string() const
{
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& tok) {
        if (!first) os << ' ';
        os << tok;
        first = false;
    };
    for (std::size_t i = 0; i < letters.size();) {
        const Generator g = letters[i];
        if (g.kind == Generator::Kind::S) {
            emit("s" + std::to_string(g.index));
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < letters.size() && letters[j] == g) ++j;
        const long run = static_cast<long>(j - i);
        const bool inv = g.kind == Generator::Kind::PiInv || g.kind == Generator::Kind::ShiftInv;
        const long power = inv ? -run : run;
        std::string base = (g.kind == Generator::Kind::Pi || g.kind == Generator::Kind::PiInv)
                               ? std::string("pi")
                               : "T" + std::to_string(g.index);
        emit(power == 1 ? base : base + "^" + std::to_string(power));
        i = j;
    }
    return first ? std::string("id") : os.str();
}

TransformWord parse_word(const std::string& text)
{
    TransformWord w;
    std::istringstream is(text);
    std::string tok;
    std::size_t pos = 0;
    while (is >> tok) {
        ++pos;
        auto fail = [&]() {
            throw ParseError("bad word token '" + tok + "' at position " + std::to_string(pos));
        };
        if (tok == "id") continue;
        std::string head = tok;
        long power = 1;
        if (const auto caret = tok.find('^'); caret != std::string::npos) {
            head = tok.substr(0, caret);
            const std::string e = tok.substr(caret + 1);
            try {
                std::size_t used = 0;
                power = std::stol(e, &used);
                if (used != e.size()) fail();
            } catch (const std::logic_error&) {
                fail();
            }
        }
        if (head == "pi") {
            const Generator g = power < 0 ? Generator::pi_inv() : Generator::pi();
            for (long k = 0; k < std::labs(power); ++k) w.letters.push_back(g);
        } else if (head.size() == 2 && (head[0] == 's' || head[0] == 'T') && std::isdigit(static_cast<unsigned char>(head[1]))) {
            const int idx = head[1] - '0';
            if (head[0] == 's') {
                if (idx > 5) fail();
                for (long k = 0; k < std::labs(power); ++k) w.letters.push_back(Generator::s(idx));
            } else {
                if (idx < 1 || idx > 6) fail();
                const Generator g = Generator::shift(idx, power < 0);
                for (long k = 0; k < std::labs(power); ++k) w.letters.push_back(g);
            }
        } else {
            fail();
        }
    }
    return w;
}

TransformWord shift_word(int i)
{
    if (i < 1 || i > 6) throw std::invalid_argument("shift index must be in 1..6");
    // T_i = s_{i-1} ... s_1 pi s5 ... s_i
    TransformWord w;
    for (int k = i - 1; k >= 1; --k) w.letters.push_back(Generator::s(k));
    w.letters.push_back(Generator::pi());
    for (int k = 5; k >= i; --k) w.letters.push_back(Generator::s(k));
    return w;
}

Params act_params(const Params& p, const Generator& g)
{
    std::array<Rational, 6> a = p.values();
    switch (g.kind) {
    case Generator::Kind::S: {
        const int i = g.index;
        const Rational ai = p[i];
        if (ai == 0) return p;
        a[static_cast<std::size_t>(i)] = -ai;
        a[static_cast<std::size_t>(mod6(i + 1))] += ai;
        a[static_cast<std::size_t>(mod6(i - 1))] += ai;
        return Params::trusted(a);
    }
    case Generator::Kind::Pi:
        for (int j = 0; j < 6; ++j) a[static_cast<std::size_t>(j)] = p[j + 1];
        return Params::trusted(a);
    case Generator::Kind::PiInv:
        for (int j = 0; j < 6; ++j) a[static_cast<std::size_t>(j)] = p[j - 1];
        return Params::trusted(a);
    case Generator::Kind::Shift:
    case Generator::Kind::ShiftInv: {
        // T_i adds 1 to alpha_{i-1} and subtracts 1 from alpha_i.
        const int sign = g.kind == Generator::Kind::Shift ? 1 : -1;
        a[static_cast<std::size_t>(mod6(g.index - 1))] += sign;
        a[static_cast<std::size_t>(mod6(g.index))] -= sign;
        return Params::trusted(a);
    }
    }
    return p;
}

Params act_params_word(const Params& p, const TransformWord& w)
{
    Params q = p;
    for (const auto& g : w.letters) q = act_params(q, g);
    return q;
}

std::optional<OrbitHit> orbit_search(const Params& p,
                                     const std::function<bool(const Params&)>& target,
                                     int max_depth)
{
    if (target(p)) return OrbitHit{p, {}};
    std::vector<Generator> moves;
    for (int i = 0; i < 6; ++i) moves.push_back(Generator::s(i));
    moves.push_back(Generator::pi());
    moves.push_back(Generator::pi_inv());
    for (int i = 1; i <= 6; ++i) moves.push_back(Generator::shift(i));
    for (int i = 1; i <= 6; ++i) moves.push_back(Generator::shift(i, true));

    struct Node {
        Params params;
        int parent;
        Generator via;
    };
    std::vector<Node> nodes{{p, -1, {}}};
    std::set<Params> seen{p};
    std::size_t level_begin = 0;
    for (int depth = 1; depth <= max_depth; ++depth) {
        const std::size_t level_end = nodes.size();
        for (std::size_t k = level_begin; k < level_end; ++k) {
            for (const auto& g : moves) {
                Params q = act_params(nodes[k].params, g);
                if (!seen.insert(q).second) continue;
                nodes.push_back({q, static_cast<int>(k), g});
                if (target(q)) {
                    TransformWord w;
                    for (int at = static_cast<int>(nodes.size()) - 1; nodes[static_cast<std::size_t>(at)].parent >= 0;
                         at = nodes[static_cast<std::size_t>(at)].parent)
                        w.letters.push_back(nodes[static_cast<std::size_t>(at)].via);
                    return OrbitHit{q, TransformWord{{w.letters.rbegin(), w.letters.rend()}}};
                }
            }
        }
        level_begin = level_end;
    }
    return std::nullopt;
}

} // namespace a5
