// io.cpp
#include "io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace a5::io {

namespace {

const json& field(const json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
    return j.at(name);
}

Rational rational_from_json(const json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(integer_from_json(j));
    throw ParseError("expected a rational as \"p/q\" string, got " + j.dump());
}

Integer lcm_of_denominators(const Poly& p, Integer acc)
{
    for (const auto& c : p.coeffs()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
    return acc;
}

json int_list(const Poly& p, const Integer& scale)
{
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(Integer(c.get_num() * (scale / c.get_den()))));
    return out;
}

Poly poly_from_list(const json& j, const char* name)
{
    if (!j.is_array()) throw ParseError(std::string("field '") + name + "' must be an array of integers");
    std::vector<Rational> c;
    for (const auto& x : j) c.emplace_back(integer_from_json(x));
    return Poly(std::move(c));
}

SolutionType solution_type_from(const std::string& s)
{
    if (s == "A") return SolutionType::A;
    if (s == "B") return SolutionType::B;
    if (s == "C") return SolutionType::C;
    throw ParseError("unknown solution type '" + s + "'");
}

StandardFamily family_from(const std::string& s)
{
    for (auto f : {StandardFamily::A_i, StandardFamily::A_ii, StandardFamily::B_1, StandardFamily::B_2,
                   StandardFamily::B_3, StandardFamily::C_1, StandardFamily::C_2, StandardFamily::C_3,
                   StandardFamily::C_4})
        if (to_string(f) == s) return f;
    throw ParseError("unknown standard family '" + s + "'");
}

json params_or_null(const std::optional<Solution>& s) { return s ? to_json(*s) : json(nullptr); }

json reduction_json(const std::optional<Reduction>& r)
{
    if (!r) return nullptr;
    return {{"standard_form", to_json(r->standard)}, {"word", to_json(r->word)}};
}

std::optional<Reduction> reduction_from(const json& j)
{
    if (j.is_null()) return std::nullopt;
    return Reduction{standard_form_from_json(field(j, "standard_form")), word_from_json(field(j, "word"))};
}

} // namespace

json to_json(const Integer& z)
{
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

Integer integer_from_json(const json& j)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        Integer z;
        if (s.empty() || z.set_str(s, 10) != 0) throw ParseError("bad integer string '" + s + "'");
        return z;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

json to_json(const Params& p)
{
    json out = json::array();
    for (const auto& a : p.values()) out.push_back(to_string(a));
    return out;
}

Params params_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 6) throw ParseError("alpha must be an array of six rationals");
    std::array<Rational, 6> a;
    for (std::size_t k = 0; k < 6; ++k) a[k] = rational_from_json(j[k]);
    return Params(a);
}

json to_json(const RatFunc& f)
{
    const Integer scale = lcm_of_denominators(f.den(), lcm_of_denominators(f.num(), 1));
    return {{"num", int_list(f.num(), scale)}, {"den", int_list(f.den(), scale)}, {"denominator", to_json(scale)}};
}

RatFunc ratfunc_from_json(const json& j)
{
    const Poly num = poly_from_list(field(j, "num"), "num");
    const Poly den = poly_from_list(field(j, "den"), "den");
    if (den.is_zero()) throw ParseError("den is the zero polynomial");
    if (j.contains("denominator") && integer_from_json(j.at("denominator")) == 0)
        throw ParseError("denominator must be nonzero");
    return RatFunc(num, den);
}

json to_json(const Solution& s)
{
    json f = json::array();
    for (const auto& fi : s.f) f.push_back(to_json(fi));
    return {{"f", f}, {"alpha", to_json(s.params)}};
}

Solution solution_from_json(const json& j)
{
    const json& f = field(j, "f");
    if (!f.is_array() || f.size() != 6) throw ParseError("f must be an array of six rational functions");
    std::array<RatFunc, 6> fs;
    for (std::size_t k = 0; k < 6; ++k) {
        try {
            fs[k] = ratfunc_from_json(f[k]);
        } catch (const ParseError& e) {
            throw ParseError("f[" + std::to_string(k) + "]: " + e.what());
        }
    }
    return Solution{fs, params_from_json(field(j, "alpha"))};
}

json to_json(const TransformWord& w) { return w.to_string(); }

TransformWord word_from_json(const json& j)
{
    if (!j.is_string()) throw ParseError("a word must be a string");
    return parse_word(j.get<std::string>());
}

json to_json(const LaurentSeries& s)
{
    json terms = json::array();
    for (int k = s.min_exponent; k <= s.order; ++k) {
        const Rational c = s.local(k);
        const int e = s.point.kind == ExpansionPoint::Kind::Infinity ? -k : k;
        terms.push_back({{"exponent", e}, {"coefficient", to_string(c)}});
    }
    return {{"point", s.point.to_string()}, {"min_exponent", s.min_exponent}, {"order", s.order}, {"terms", terms}};
}

json to_json(const ConditionId& c)
{
    json wit = json::array();
    for (const auto& w : c.witness) wit.push_back(to_json(w));
    return {{"theorem", to_string(c.theorem)}, {"index", c.index},        {"anchor", c.anchor},
            {"recipe", c.recipe},              {"witness", wit},          {"reading_divergence", c.reading_divergence}};
}

ConditionId condition_from_json(const json& j)
{
    ConditionId c;
    c.theorem = solution_type_from(field(j, "theorem").get<std::string>());
    c.index = field(j, "index").get<int>();
    c.anchor = field(j, "anchor").get<int>();
    c.recipe = field(j, "recipe").get<std::string>();
    for (const auto& w : field(j, "witness")) c.witness.push_back(integer_from_json(w));
    c.reading_divergence = field(j, "reading_divergence").get<bool>();
    return c;
}

json to_json(const StandardForm& sf)
{
    return {{"family", to_string(sf.family)},
            {"free_parameter", to_string(sf.free_parameter)},
            {"params", to_json(sf.instantiate())}};
}

StandardForm standard_form_from_json(const json& j)
{
    return {family_from(field(j, "family").get<std::string>()), rational_from_json(field(j, "free_parameter"))};
}

json to_json(const ObstructionVerdict& v)
{
    std::string kind = v.kind == ObstructionVerdict::Kind::AdmissibleRegular          ? "admissible_regular"
                     : v.kind == ObstructionVerdict::Kind::AdmissibleWithFinitePoles ? "admissible_with_finite_poles"
                                                                                     : "violated";
    return {{"kind", kind}, {"d", to_string(v.d)}, {"poles", to_json(v.poles)}};
}

ObstructionVerdict obstruction_from_json(const json& j)
{
    ObstructionVerdict v;
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "admissible_regular") v.kind = ObstructionVerdict::Kind::AdmissibleRegular;
    else if (kind == "admissible_with_finite_poles") v.kind = ObstructionVerdict::Kind::AdmissibleWithFinitePoles;
    else if (kind == "violated") v.kind = ObstructionVerdict::Kind::Violated;
    else throw ParseError("unknown obstruction kind '" + kind + "'");
    v.d = rational_from_json(field(j, "d"));
    v.poles = integer_from_json(field(j, "poles"));
    return v;
}

json to_json(const ClassificationReport& r)
{
    json verdicts = json::object();
    for (const auto& v : r.verdicts) {
        verdicts[to_string(v.type)] = {
            {"exists", v.exists},
            {"verdict", v.verdict()},
            {"route", v.route},
            {"matched", v.matched ? to_json(*v.matched) : json(nullptr)},
            {"via_orbit", v.via_orbit ? to_json(*v.via_orbit) : json(nullptr)},
            {"reduction", reduction_json(v.reduction)},
            {"solution", params_or_null(v.solution)},
        };
    }
    json checks = nullptr;
    if (r.checks)
        checks = {{"residue_integrality", r.checks->residue_integrality},
                  {"obstruction", to_json(r.checks->obstruction)},
                  {"infinity_type", r.checks->infinity.to_string()}};
    return {
        {"input", to_json(r.input)},
        {"exists", r.exists()},
        {"verdicts", verdicts},
        {"standard_form", r.standard ? to_json(r.standard->standard) : json(nullptr)},
        {"reduction_word", r.standard ? to_json(r.standard->word) : json(nullptr)},
        {"solution", params_or_null(r.solution)},
        {"seed_used", r.seed_used},
        {"checks", checks},
    };
}

ClassificationReport report_from_json(const json& j)
{
    ClassificationReport r{params_from_json(field(j, "input")), {}, {}, {}, {}, {}};
    const json& verdicts = field(j, "verdicts");
    for (auto ty : {SolutionType::A, SolutionType::B, SolutionType::C}) {
        const json& v = field(verdicts, to_string(ty).c_str());
        TypeVerdict& out = r.verdicts[static_cast<std::size_t>(ty)];
        out.type = ty;
        out.exists = field(v, "exists").get<bool>();
        out.route = field(v, "route").get<std::string>();
        if (!field(v, "matched").is_null()) out.matched = condition_from_json(v.at("matched"));
        if (!field(v, "via_orbit").is_null()) out.via_orbit = word_from_json(v.at("via_orbit"));
        out.reduction = reduction_from(field(v, "reduction"));
        if (!field(v, "solution").is_null()) out.solution = solution_from_json(v.at("solution"));
    }
    if (!field(j, "standard_form").is_null())
        r.standard = Reduction{standard_form_from_json(j.at("standard_form")), word_from_json(field(j, "reduction_word"))};
    if (!field(j, "solution").is_null()) r.solution = solution_from_json(j.at("solution"));
    r.seed_used = field(j, "seed_used").get<std::string>();
    if (!field(j, "checks").is_null()) {
        const json& c = j.at("checks");
        r.checks = ClassificationChecks{field(c, "residue_integrality").get<bool>(),
                                        obstruction_from_json(field(c, "obstruction")),
                                        parse_infinity_type(field(c, "infinity_type").get<std::string>())};
    }
    return r;
}

json to_json(const DiagnosticReport& d)
{
    auto sextet = [](const Sextet& s) {
        json out = json::array();
        for (const auto& x : s) out.push_back(to_string(x));
        return out;
    };
    json poles = json::array();
    for (const auto& c : d.finite_poles) {
        poles.push_back({{"label", to_string(c.label)},
                         {"anchor", c.anchor},
                         {"locus", c.locus.to_string()},
                         {"location", c.location ? json(to_string(*c.location)) : json(nullptr)},
                         {"residues", sextet(c.residues)}});
    }
    json ratios = json::array();
    for (const auto& r : d.hamiltonian.finite_pole_residue_ratios) {
        ratios.push_back({{"locus", r.locus.to_string()},
                          {"location", r.location ? json(to_string(*r.location)) : json(nullptr)},
                          {"eps", to_string(r.eps)}});
    }
    const auto& h = d.hamiltonian;
    return {
        {"infinity_type", d.infinity.to_string()},
        {"infinity_t_inverse", {{"observed", sextet(d.infinity_observed)}, {"predicted", sextet(d.infinity_predicted)}}},
        {"zero_pattern", d.zero.pattern.to_string()},
        {"zero_residues", {{"observed", sextet(d.zero.observed)}, {"predicted", sextet(d.zero.predicted)}}},
        {"residue_integrality", d.residue_integrality},
        {"finite_poles", poles},
        {"hamiltonian",
         {{"h_inf_4", to_string(h.h_inf_4)},
          {"h_inf_2", to_string(h.h_inf_2)},
          {"h_inf_0", to_string(h.h_inf_0)},
          {"h_0_m2", to_string(h.h_0_m2)},
          {"h_0_0", to_string(h.h_0_0)},
          {"h_inf_0_formula", to_string(d.h_inf_0_formula)},
          {"h_0_0_formula", to_string(d.h_0_0_formula)},
          {"finite_pole_residue_ratios", ratios},
          {"simple_finite_poles", h.simple_finite_poles},
          {"bookkeeping_holds", h.bookkeeping_holds()}}},
        {"obstruction", to_json(d.obstruction)},
    };
}

Solution read_solution_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        return solution_from_json(j);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace a5::io
