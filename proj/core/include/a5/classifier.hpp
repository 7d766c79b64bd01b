// classifier.hpp - existence conditions, standard forms, solution synthesis
#pragma once

#include "a5/local.hpp"
#include "a5/solution.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace a5 {

enum class SolutionType { A, B, C };
std::string to_string(SolutionType ty);

class ClassificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ConditionId {
    SolutionType theorem = SolutionType::A;
    int index = 0;      // A: 1..5, B: 1..11, C: 1..5
    int anchor = 0;
    std::string recipe; // C only: "i", "ii", "iii" (empty for condition 5)
    std::vector<Integer> witness;
    // B only: the two printed readings of condition (8) disagree on p.
    bool reading_divergence = false;

    std::string to_string() const;
};

// Scan order: condition index, then anchor.
std::optional<ConditionId> check_conditions_A(const Params& p);
std::optional<ConditionId> check_conditions_B(const Params& p);
// Scan order: recipe, then anchor, then condition 1..4; condition 5 last by anchor.
std::optional<ConditionId> check_conditions_C(const Params& p);
std::optional<ConditionId> check_conditions(SolutionType ty, const Params& p);

enum class StandardFamily { A_i, A_ii, B_1, B_2, B_3, C_1, C_2, C_3, C_4 };
std::string to_string(StandardFamily f);
SolutionType family_type(StandardFamily f);

struct StandardForm {
    StandardFamily family = StandardFamily::A_i;
    Rational free_parameter;

    Params instantiate() const;
    std::string to_string() const;
    friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

// Family members are base + x * direction; x is read from the designated slot.
Params family_params(StandardFamily f, const Rational& x);
int family_free_slot(StandardFamily f);

struct Reduction {
    StandardForm standard;
    TransformWord word; // act_params_word(p, word) == standard.instantiate()
};

// Follows the shift schedules for Type-A conditions (1)-(3) and otherwise
// searches the group modulo translations for a seeded family of type ty.
// Throws ClassificationError when no reduction exists.
Reduction reduce_to_standard(const Params& p, SolutionType ty, const std::optional<ConditionId>& cond);

// All reductions to seeded families of type ty found by the modular search,
// in search order.
std::vector<Reduction> seeded_reductions(const Params& p, SolutionType ty, std::size_t limit = 8);

// Throws ClassificationError ("no seed ...") for solution-free families.
Solution seed_solution(const StandardForm& sf);

// act_solution_word(seed, inverse(w)); throws ClassificationError when the
// result does not carry params p or fails verification.
Solution synthesize_solution(const Params& p, const StandardForm& sf, const TransformWord& w);

struct TypeVerdict {
    SolutionType type = SolutionType::A;
    bool exists = false;
    std::string route; // "literal", "orbit", "reduction" or "" when none
    std::optional<ConditionId> matched;
    std::optional<TransformWord> via_orbit;
    std::optional<Reduction> reduction;
    std::optional<Solution> solution;
    std::string verdict() const { return exists ? "exists" : "none (bounded)"; }
};

struct ClassificationChecks {
    bool residue_integrality = false;
    ObstructionVerdict obstruction;
    InfinityType infinity;
};

struct ClassificationReport {
    Params input;
    std::array<TypeVerdict, 3> verdicts;
    std::optional<Reduction> standard;
    std::optional<Solution> solution;
    std::string seed_used;
    std::optional<ClassificationChecks> checks;

    bool exists() const { return solution.has_value(); }
    std::string render_text() const;
};

inline constexpr int kDefaultOrbitDepth = 4;
// kDefaultOrbitDepth unless A5KIT_ORBIT_DEPTH holds a non-negative integer.
int default_orbit_depth();

ClassificationReport classify(const Params& p, int orbit_depth = kDefaultOrbitDepth);

} // namespace a5
