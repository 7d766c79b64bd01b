// io.hpp - JSON encoding of parameters, solutions, series and reports
#pragma once

#include "a5/classifier.hpp"

#include <json.hpp>

#include <string>

namespace a5::io {

using nlohmann::json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
json to_json(const Integer& z);
Integer integer_from_json(const json& j);

json to_json(const Params& p); // ["p/q" x 6]
Params params_from_json(const json& j);

// {num: [ints], den: [ints], denominator: int}: f = num(t)/den(t) with
// coefficients listed by ascending power; dividing both lists by
// `denominator` gives the canonical form (monic den). On input the
// denominator field is optional.
json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);

json to_json(const Solution& s); // {f: [...x6], alpha: [...]}
Solution solution_from_json(const json& j);

json to_json(const TransformWord& w); // text form
TransformWord word_from_json(const json& j);

json to_json(const LaurentSeries& s);
json to_json(const ConditionId& c);
ConditionId condition_from_json(const json& j);
json to_json(const StandardForm& sf);
StandardForm standard_form_from_json(const json& j);
json to_json(const ObstructionVerdict& v);
ObstructionVerdict obstruction_from_json(const json& j);

json to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const json& j);

json to_json(const DiagnosticReport& d);

// Reads a solution from a JSON file; throws ParseError with the file name.
Solution read_solution_file(const std::string& path);

} // namespace a5::io
