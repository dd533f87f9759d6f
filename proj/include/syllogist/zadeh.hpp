#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "syllogist/fuzzy_number.hpp"
#include "syllogist/quantifier.hpp"

namespace syllogist {

/// A fuzzy subset of a named finite universe.
struct FuzzySet {
    std::vector<std::string> universe;
    std::vector<double> membership;

    static FuzzySet make(std::vector<std::string> universe, std::vector<double> membership);
};

enum class TNorm { Min, Product };

/// Scalar cardinality: the sum of membership degrees.
double sigma_count(const FuzzySet& s);

FuzzySet fuzzy_intersect(const FuzzySet& a, const FuzzySet& b, TNorm t = TNorm::Min);

/// Pointwise inclusion mu_B <= mu_A over a shared universe.
bool check_inclusion(const FuzzySet& b, const FuzzySet& a);

/// Truth of "Q subject are predicate".  Proportional quantifiers evaluate
/// mu_Q(count(S∩P)/count(S)); absolute ones evaluate mu_Q(count(S∩P)).
double statement_truth(const QuantifierKind& q, const FuzzySet& subject,
                       const FuzzySet& predicate, TNorm t = TNorm::Min);

/// Multiplicative chaining: Q >= Q1 ⊗ Q2, valid only under the declared (or
/// verified) inclusion of the middle term in the conclusion's subject.
BoundedQuantifier mc_conclude(const AlphaCutNumber& q1, const AlphaCutNumber& q2,
                              bool constraint_ok);

/// Reversed-premise chaining: Q >= max(0, Q1 ⊕ Q2 ⊖ 1).  The caller supplies
/// the already-reversed first premise ("Q1 Bs are As").
BoundedQuantifier mpr_conclude(const AlphaCutNumber& q1, const AlphaCutNumber& q2);

enum class ZadehPattern {
    MC,
    MPR,
    IntersectionProduct,
    AntecedentAnd,
    AntecedentOr,
    ConsequentAnd,
    ConsequentOr,
};

const char* zadeh_pattern_name(ZadehPattern p);

/// Result of a symmetric / product combination.  Crisp inputs collapse to a
/// plain interval; fuzzy inputs carry the per-cut bounds.
struct CombineResult {
    std::variant<BoundedQuantifier, Interval> value;
    std::string note;  // non-empty when the bounds are vacuous or loose

    bool is_interval() const { return std::holds_alternative<Interval>(value); }
    const Interval& interval() const { return std::get<Interval>(value); }
    const BoundedQuantifier& bounded() const { return std::get<BoundedQuantifier>(value); }
};

/// Bound semantics for the non-chaining patterns:
///   IntersectionProduct       -> AtLeast(Q1 ⊗ Q2)
///   ConsequentAnd             -> [max(0, q1+q2-1), min(q1, q2)] per cut
///   ConsequentOr              -> [max(q1, q2), min(1, q1+q2)] per cut
///   AntecedentOr without mix  -> hull [min(q1, q2), max(q1, q2)]
///   AntecedentOr with mix m   -> m*q1 + (1-m)*q2 per cut endpoint
///   AntecedentAnd             -> vacuous [0,1] with a diagnostic note
/// `want_point` requests a point result for antecedent disjunction and
/// errors with missing_mix_ratio when no mix is given.
CombineResult combine(ZadehPattern p, const AlphaCutNumber& q1, const AlphaCutNumber& q2,
                      std::optional<double> mix = std::nullopt, bool want_point = false);

} // namespace syllogist
