// local.hpp - pole patterns, local residues, the auxiliary Hamiltonian H
#pragma once

#include "a5/laurent.hpp"
#include "a5/solution.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace a5 {

class AnalysisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Sextet = std::array<Rational, 6>;

// Leading behaviour at infinity:
//   A1(i): f_i, f_{i+1} ~ t        A2(i): f_i, f_{i+3} ~ t (anchor 0..2)
//   A3(i): f_i, f_{i+1}, f_{i+2} ~ t and f_{i+4} ~ -t
//   B(i):  f_i, ..., f_{i+3} ~ t/2 C: every f_j ~ t/3
struct InfinityType {
    enum class Kind { A1, A2, A3, B, C };
    Kind kind = Kind::A1;
    int anchor = 0;

    std::string to_string() const;
    friend bool operator==(const InfinityType&, const InfinityType&) = default;
};

InfinityType parse_infinity_type(const std::string& text); // "A1@2", "C"

// Slopes (t-coefficients at infinity) demanded by a type.
Sextet leading_slopes(const InfinityType& ty);

InfinityType infinity_type(const Solution& s);

// Predicted t^-1 coefficients at infinity.
Sextet infinity_residue_table(const Params& p, const InfinityType& ty);

struct ZeroPattern {
    enum class Kind { Regular, Pair, Quad };
    Kind kind = Kind::Regular;
    int anchor = 0; // Pair(i): f_i, f_{i+2}; Quad(i): f_i, f_{i+2}, f_{i+3}, f_{i+5}

    std::string to_string() const;
    friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;
};

ZeroPattern parse_zero_pattern(const std::string& text); // "Regular", "Pair@4", "Quad@1"

// Predicted residues at t = 0 for a pattern.
Sextet zero_residue_formula(const Params& p, const ZeroPattern& zp);

struct ZeroAnalysis {
    ZeroPattern pattern;
    Sextet observed;
    Sextet predicted;
    bool matches() const { return observed == predicted; }
};

ZeroAnalysis zero_pattern(const Solution& s);

// For each j: (t^-1 coefficient at infinity) - (residue at 0) is an integer.
bool residue_integrality_check(const Solution& s);

struct FinitePoleCase {
    enum class Label { PairI, PairII, QuadI, QuadII, QuadIII };
    Label label = Label::PairI;
    int anchor = 0;
    Poly locus;                      // monic squarefree polynomial whose roots are the poles
    std::optional<Rational> location; // set when locus is linear
    Sextet residues;                 // residues of f_0..f_5 at each root of locus

    std::string to_string() const;
};

std::string to_string(FinitePoleCase::Label l);

// Residue patterns at a nonzero pole c:
//   PairI(i)  (f_i, f_{i+2}) = (1/2, -1/2)       PairII(i) = (-1/2, 1/2)
//   QuadI(i)  (f_i, f_{i+2}, f_{i+3}, f_{i+5}) = (-1/2, 1/2, -1/2, 1/2)
//   QuadII(i) = (-3/2, 3/2, 1/2, -1/2)          QuadIII(i) = (1/2, -1/2, -3/2, 3/2)
// Poles are grouped by squarefree factors of the denominators, so irrational
// poles are handled exactly. Throws AnalysisError for unclassifiable poles.
std::vector<FinitePoleCase> finite_pole_cases(const Solution& s);

// H = (1/6) sum_i (h_i - (1/4)(a_{i+1} + a_{i+3} + a_{i+5})^2).
RatFunc hamiltonian(const Solution& s);

struct PoleResidueRatio {
    Poly locus;                      // roots c of locus share Res_c H = eps * c
    std::optional<Rational> location; // when locus is linear
    Rational eps;
};

struct HamiltonianData {
    Rational h_inf_4, h_inf_2, h_inf_0; // t^4, t^2, t^0 coefficients at infinity
    Rational h_0_m2, h_0_0;             // t^-2, t^0 coefficients at 0
    std::vector<PoleResidueRatio> finite_pole_residue_ratios;
    bool simple_finite_poles = true;
    // sum of eps over the +-c pairs (half the sum over all poles)
    Rational pair_eps_sum() const;
    bool bookkeeping_holds() const { return h_inf_0 - 2 * pair_eps_sum() == h_0_0; }
};

HamiltonianData hamiltonian_data(const Solution& s);

Rational h_constant_at_infinity(const Params& p, const InfinityType& ty);
Rational h_constant_at_zero(const Params& p, const ZeroPattern& zp);

struct ObstructionVerdict {
    enum class Kind { AdmissibleRegular, AdmissibleWithFinitePoles, Violated };
    Kind kind = Kind::AdmissibleRegular;
    Rational d;    // 6 (h_0_0 - h_inf_0)
    Integer poles; // -d when admissible with finite poles
    std::string to_string() const;
};

ObstructionVerdict obstruction_check(const Params& p, const InfinityType& ty, const ZeroPattern& zp);

// Formal Laurent solution at infinity with the leading behaviour of ty,
// through t^-order; solved order by order. Throws AnalysisError when a
// per-order system is singular or inconsistent.
std::array<LaurentSeries, 6> expand_solution_ansatz(const Params& p, const InfinityType& ty, int order);

struct TypeBInvariants {
    Rational beta, gamma, epsilon, phi;
};
TypeBInvariants type_b_invariants(const Params& p, int anchor);

struct TypeCInvariants {
    Rational x, y, z, w, chi;
};
TypeCInvariants type_c_invariants(const Params& p);

struct DiagnosticReport {
    InfinityType infinity;
    Sextet infinity_observed;
    Sextet infinity_predicted;
    ZeroAnalysis zero;
    bool residue_integrality = false;
    std::vector<FinitePoleCase> finite_poles;
    HamiltonianData hamiltonian;
    Rational h_inf_0_formula, h_0_0_formula;
    ObstructionVerdict obstruction;

    std::string render_text() const;
};

DiagnosticReport diagnose(const Solution& s);

} // namespace a5
