#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syllogist/aristotle.hpp"
#include "syllogist/interval.hpp"

namespace syllogist {

enum class PatternId {
    Dubois1,
    Dubois2,
    Dubois3,
    MC,
    MPR,
    IntersectionProduct,
    AntecedentCD,
    ConsequentCD,
};

const char* pattern_id_name(PatternId p);
PatternId pattern_id_from_name(const std::string& name);

enum class Verdict {
    Compatible,
    FigureMismatch,
    MissingPremise,
    NonSymmetricReversal,
    ConclusionNotEntailed,
    StructurallyExcluded,
};

const char* verdict_name(Verdict v);

struct MoodVerdict {
    Mood mood;
    Verdict verdict;
    std::optional<Interval> computed;  // conclusion interval when one was derived
    std::string note;

    bool compatible() const { return verdict == Verdict::Compatible; }
};

struct CompatReport {
    PatternId pattern;
    std::vector<MoodVerdict> entries;  // the 24 valid moods, catalog order
};

struct CompatOptions {
    double sweep_step = 0.01;  // grid for unknown converse proportions
    double delta = 1e-6;       // floor standing in for strict positive bounds
    int oracle_max = 8;        // budget for premise-entailment searches
};

/// Middle-term position gate: the chaining patterns place the middle term as
/// subject of the major premise and predicate of the minor one.
bool figure_compatible(PatternId p, Figure f);

/// Decides whether the mood's premises suffice to instantiate the pattern
/// and whether the pattern's conclusion entails the mood's conclusion.
/// Slot filling maps minor->A, middle->B, major->C; unknown converse
/// proportions sweep over a positive grid up to 1.
MoodVerdict check_mood(PatternId p, const Mood& mood, const CompatOptions& opt = {});

/// Full verdict tables for the three mood-facing patterns.
std::vector<CompatReport> reproduce_tables(const CompatOptions& opt = {});

/// Patterns whose shape extends rather than instantiates the two-premise
/// chain; they are reported without per-mood checks.
const std::vector<PatternId>& structurally_excluded_patterns();

} // namespace syllogist
