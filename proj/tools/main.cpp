// main.cpp - a5kit command-line front end
#include "io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace a5;
using io::json;

enum Exit { kOk = 0, kNoSolution = 1, kInputError = 2, kInternalError = 3 };

struct Config {
    std::string alpha;
    std::string word;
    std::string seed;
    std::string input;
    std::string output;
    std::string format = "text";
    std::string type;
    std::string point = "inf";
    int order = 12;
    int orbit_depth = default_orbit_depth();
};

void emit(const Config& cfg, const std::string& text)
{
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw ParseError("cannot write '" + cfg.output + "'");
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string solution_text(const Solution& s)
{
    std::ostringstream os;
    os << "alpha = " << s.params.to_string() << "\n";
    for (int j = 0; j < 6; ++j) os << "f" << j << " = " << s[j].to_string() << "\n";
    return os.str();
}

// Seed named like "A1@2": the free value is read from alpha at the anchor.
Solution seeded_input(const Config& cfg)
{
    const Params p = parse_params(cfg.alpha);
    const auto at = cfg.seed.find('@');
    const SeedKind kind = parse_seed_kind(cfg.seed.substr(0, at));
    int anchor = 0;
    if (at != std::string::npos) {
        const std::string a = cfg.seed.substr(at + 1);
        if (a.size() != 1 || a[0] < '0' || a[0] > '5') throw ParseError("bad seed anchor in '" + cfg.seed + "'");
        anchor = a[0] - '0';
    }
    const Solution s = seed(kind, p[anchor], anchor);
    if (!(s.params == p))
        throw ParseError("alpha " + p.to_string() + " is not a parameter of the " + cfg.seed + " seed family (expected "
                         + s.params.to_string() + ")");
    return s;
}

Solution solution_input(const Config& cfg)
{
    if (!cfg.input.empty()) return io::read_solution_file(cfg.input);
    if (!cfg.seed.empty() && !cfg.alpha.empty()) return seeded_input(cfg);
    throw ParseError("a solution is required: pass --input FILE or --alpha with --seed");
}

int run_classify(const Config& cfg)
{
    const ClassificationReport r = classify(parse_params(cfg.alpha), cfg.orbit_depth);
    emit(cfg, cfg.format == "json" ? dump(io::to_json(r)) : r.render_text());
    return r.exists() ? kOk : kNoSolution;
}

int run_transform(const Config& cfg)
{
    const TransformWord w = parse_word(cfg.word);
    if (cfg.input.empty() && cfg.seed.empty()) {
        const Params q = act_params_word(parse_params(cfg.alpha), w);
        emit(cfg, cfg.format == "json" ? dump(json{{"alpha", io::to_json(q)}}) : "alpha = " + q.to_string() + "\n");
        return kOk;
    }
    const Solution s = act_solution_word(solution_input(cfg), w);
    emit(cfg, cfg.format == "json" ? dump(io::to_json(s)) : solution_text(s));
    return kOk;
}

int run_verify(const Config& cfg)
{
    const Solution s = solution_input(cfg);
    const VerifyReport v = verify_solution(s);
    if (cfg.format == "json") {
        emit(cfg, dump(json{{"ok", v.ok}, {"failure", v.failure}}));
    } else {
        emit(cfg, v.ok ? "ok\n" : "FAIL: " + v.failure + "\n");
    }
    return v.ok ? kOk : kNoSolution;
}

ExpansionPoint parse_point(const std::string& text)
{
    if (text == "inf" || text == "infinity") return ExpansionPoint::infinity();
    return ExpansionPoint::at(parse_rational(text));
}

std::string series_text(const LaurentSeries& s)
{
    std::ostringstream os;
    bool any = false;
    for (int k = s.min_exponent; k <= s.order; ++k) {
        const Rational c = s.local(k);
        if (c == 0) continue;
        const int e = s.point.kind == ExpansionPoint::Kind::Infinity ? -k : k;
        const std::string var = s.point.kind == ExpansionPoint::Kind::Finite ? "(t - " + to_string(s.point.c) + ")" : "t";
        os << (any ? " + " : "") << to_string(c) << "*" << var << "^" << e;
        any = true;
    }
    if (!any) os << "0";
    os << " + O(" << (s.point.kind == ExpansionPoint::Kind::Infinity ? "t^" + std::to_string(-s.order - 1)
                                                                    : "u^" + std::to_string(s.order + 1))
       << ")";
    return os.str();
}

int run_expand(const Config& cfg)
{
    std::array<LaurentSeries, 6> series;
    std::string header;
    if (!cfg.type.empty()) {
        const Params p = parse_params(cfg.alpha);
        const InfinityType ty = parse_infinity_type(cfg.type);
        series = expand_solution_ansatz(p, ty, cfg.order);
        header = "formal solution of type " + ty.to_string() + " at infinity, alpha = " + p.to_string();
    } else {
        const Solution s = solution_input(cfg);
        const ExpansionPoint pt = parse_point(cfg.point);
        for (int j = 0; j < 6; ++j) {
            auto& out = series[static_cast<std::size_t>(j)];
            if (!s[j].is_zero() && local_valuation(s[j], pt) > cfg.order) {
                // vanishes beyond the requested order
                out = LaurentSeries{pt, cfg.order, cfg.order, {Rational(0)}};
            } else {
                out = laurent_expand(s[j], pt, cfg.order);
            }
        }
        header = "expansion at " + pt.to_string() + ", alpha = " + s.params.to_string();
    }
    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& s : series) out.push_back(io::to_json(s));
        emit(cfg, dump(json{{"series", out}}));
    } else {
        std::ostringstream os;
        os << header << "\n";
        for (int j = 0; j < 6; ++j) os << "f" << j << " = " << series_text(series[static_cast<std::size_t>(j)]) << "\n";
        emit(cfg, os.str());
    }
    return kOk;
}

int run_diagnose(const Config& cfg)
{
    Solution s = solution_input(cfg);
    if (!cfg.word.empty()) s = act_solution_word(s, parse_word(cfg.word));
    const VerifyReport v = verify_solution(s);
    if (!v.ok) {
        emit(cfg, cfg.format == "json" ? dump(json{{"ok", false}, {"failure", v.failure}}) : "FAIL: " + v.failure + "\n");
        return kNoSolution;
    }
    const DiagnosticReport d = diagnose(s);
    emit(cfg, cfg.format == "json" ? dump(io::to_json(d)) : d.render_text());
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"a5kit: rational solutions of the A5 Painleve system"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output,-o", cfg.output, "write the report to a file");
    };
    auto* classify_cmd = app.add_subcommand("classify", "decide existence and synthesize a rational solution");
    classify_cmd->add_option("--alpha", cfg.alpha, "six comma-separated rationals summing to 1")->required();
    classify_cmd->add_option("--orbit-depth", cfg.orbit_depth, "bound for the orbit search")
        ->check(CLI::NonNegativeNumber);
    add_common(classify_cmd);

    auto* transform_cmd = app.add_subcommand("transform", "apply a transformation word");
    transform_cmd->add_option("--alpha", cfg.alpha, "parameters");
    transform_cmd->add_option("--seed", cfg.seed, "seed family A1, A2, A3, B, C with optional @anchor");
    transform_cmd->add_option("--input", cfg.input, "solution JSON file");
    transform_cmd->add_option("--word", cfg.word, "e.g. \"s0 pi T2^-1\"")->required();
    add_common(transform_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "check that a tuple solves the system");
    verify_cmd->add_option("--input", cfg.input, "solution JSON file");
    verify_cmd->add_option("--alpha", cfg.alpha, "parameters (with --seed)");
    verify_cmd->add_option("--seed", cfg.seed, "seed family");
    add_common(verify_cmd);

    auto* expand_cmd = app.add_subcommand("expand", "Laurent expansions of a solution or of the formal ansatz");
    expand_cmd->add_option("--input", cfg.input, "solution JSON file");
    expand_cmd->add_option("--alpha", cfg.alpha, "parameters");
    expand_cmd->add_option("--seed", cfg.seed, "seed family");
    expand_cmd->add_option("--type", cfg.type, "infinity type for the ansatz, e.g. A1@0 or C");
    expand_cmd->add_option("--point", cfg.point, "inf, 0 or a rational c");
    expand_cmd->add_option("--order", cfg.order, "truncation order")->check(CLI::Range(1, 200));
    add_common(expand_cmd);

    auto* diagnose_cmd = app.add_subcommand("diagnose", "local analysis, H data and obstruction");
    diagnose_cmd->add_option("--input", cfg.input, "solution JSON file");
    diagnose_cmd->add_option("--alpha", cfg.alpha, "parameters");
    diagnose_cmd->add_option("--seed", cfg.seed, "seed family");
    diagnose_cmd->add_option("--word", cfg.word, "word applied before the analysis");
    add_common(diagnose_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*classify_cmd) return run_classify(cfg);
        if (*transform_cmd) return run_transform(cfg);
        if (*verify_cmd) return run_verify(cfg);
        if (*expand_cmd) return run_expand(cfg);
        if (*diagnose_cmd) return run_diagnose(cfg);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const io::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const AnalysisError& e) {
        std::cerr << "analysis error: " << e.what() << "\n";
        return kNoSolution;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kInputError;
}
