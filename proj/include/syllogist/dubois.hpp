#pragma once

#include <optional>

#include "syllogist/fuzzy_number.hpp"
#include "syllogist/interval.hpp"
#include "syllogist/oracle.hpp"
#include "syllogist/quantifier.hpp"

namespace syllogist {

/// Quantifier slots of the four-premise chaining pattern
/// "Q1 As are Bs / Q1' Bs are As / Q2 Bs are Cs / Q2' Cs are Bs".
struct PatternIInput {
    QuantifierKind q1;
    QuantifierKind q1_conv;
    QuantifierKind q2;
    QuantifierKind q2_conv;
};

struct Pattern1Options {
    double grid_step = 0.01;   // sweep resolution inside the input box
    double delta = 1e-6;       // floor replacing open-at-0 endpoints
    int max_grid_points = 400000;
};

/// Conclusion bounds for precise quantifiers.
///   lower = q1 * max(0, 1 - (1-q2)/q1')
///   upper = min(1, 1 - q1 + q1 q2/q1', q1 q2/(q1' q2'), q1 + q1 q2 (1-q2')/(q1' q2'))
/// The four upper terms are the expansion of
///   P(A∩C) <= min(P(A∩B), P(C∩B)) + min(P(A\B), P(C\B)).
Interval pattern1_precise(double q1, double q1_conv, double q2, double q2_conv);

/// Conclusion of the converse direction ("Q' Cs are As"): the same chain read
/// from C through B to A, i.e. the role swap (q1,q1',q2,q2') <- (q2',q2,q1',q1).
Interval pattern1_precise_converse(double q1, double q1_conv, double q2, double q2_conv);

struct Pattern1Bounds {
    Interval conclusion;
    // Diagnostics: extrema found by corner enumeration alone vs. by the grid
    // sweep with coordinate refinement.  The final bounds take the vertex
    // lower (exact by monotonicity) and the best of all upper candidates.
    double vertex_lower = 0.0;
    double sweep_lower = 0.0;
    double vertex_upper = 0.0;
    double sweep_upper = 0.0;
};

/// Minimizes the lower expression and maximizes the upper one over the input
/// box.  Open-at-0 converse bounds are swept from `delta`.
Pattern1Bounds pattern1_imprecise(const Interval& q1, const Interval& q1_conv,
                                  const Interval& q2, const Interval& q2_conv,
                                  const Pattern1Options& opt = {});

Pattern1Bounds pattern1_imprecise(const PatternIInput& in, const Pattern1Options& opt = {});

/// Fuzzy quantifiers: support and kernel computed independently as two
/// imprecise runs; errors with kernel_not_in_support if independence breaks
/// the nesting.
TrapezoidalQuantifier pattern1_fuzzy(const PatternIInput& in, const Pattern1Options& opt = {});

/// Three-term conjunction patterns.  Slots follow the schemes
///   "Q As and Bs are Cs"   (pattern 2, conclusion |A∩B∩C|/|A∩B|)
///   "Q Cs are As and Bs"   (pattern 3, conclusion |A∩B∩C|/|C|)
/// The general version carries all six premises; particular pattern 2 takes
/// q1, q1_conv, q2, q3 and particular pattern 3 takes q2_conv, q3_conv.
struct Pattern23Input {
    int pattern = 3;  // 2 or 3
    bool general = false;
    std::optional<Interval> q1;       // As are Bs
    std::optional<Interval> q1_conv;  // Bs are As
    std::optional<Interval> q2;       // Bs are Cs
    std::optional<Interval> q2_conv;  // Cs are Bs
    std::optional<Interval> q3;       // As are Cs
    std::optional<Interval> q3_conv;  // Cs are As
};

/// Tightest attained interval over the oracle's model space (exact rational
/// endpoints).  Errors: unsatisfiable_premises, undefined_proportion.
RationalRange pattern23_bounds(const Pattern23Input& in, int total_max = 60);

} // namespace syllogist
