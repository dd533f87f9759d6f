#pragma once

#include <string>
#include <variant>

#include "syllogist/fuzzy_number.hpp"
#include "syllogist/interval.hpp"

namespace syllogist {

struct PreciseQ { double value; };
struct ImpreciseQ { Interval interval; };
struct ClassicalQ { Letter letter; };
struct FuzzyQ { TrapezoidalQuantifier trapezoid; };

/// A quantifier value plus the lexicon-level properties that matter for
/// inference: absolute entries quantify counts rather than proportions, and
/// symmetric entries survive premise reversal (built-in for E and I).
struct QuantifierKind {
    std::variant<PreciseQ, ImpreciseQ, ClassicalQ, FuzzyQ> value;
    bool absolute = false;
    bool symmetric = false;

    static QuantifierKind precise(double v) { return {PreciseQ{v}, false, false}; }
    static QuantifierKind imprecise(const Interval& iv) { return {ImpreciseQ{iv}, false, false}; }
    static QuantifierKind classical(Letter l) {
        return {ClassicalQ{l}, false, l == Letter::E || l == Letter::I};
    }
    static QuantifierKind fuzzy(const TrapezoidalQuantifier& t) { return {FuzzyQ{t}, false, false}; }

    bool is_fuzzy() const { return std::holds_alternative<FuzzyQ>(value); }
    bool is_precise() const { return std::holds_alternative<PreciseQ>(value); }
    bool is_classical() const { return std::holds_alternative<ClassicalQ>(value); }

    /// Interval view (Precise(v) == [v,v]; Classical maps per the LSO
    /// encoding).  Errors on fuzzy values; use as_trapezoid for those.
    Interval as_interval() const;

    /// Trapezoid view; interval-like kinds degenerate to kernel == support.
    TrapezoidalQuantifier as_trapezoid() const;
};

/// A quantified statement "Q subject are predicate".  `quantifier_name` keeps
/// the lexicon word (or a derived expression label) for rendering; empty for
/// anonymous values.  `at_least` marks lower-bound conclusions ("Q >= ...").
struct Statement {
    QuantifierKind quantifier;
    std::string quantifier_name;
    std::string subject;
    std::string predicate;
    bool at_least = false;
};

struct Syllogism {
    std::vector<Statement> premises;
    Statement conclusion;
};

} // namespace syllogist
