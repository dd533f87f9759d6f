#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "syllogist/aristotle.hpp"
#include "syllogist/interval.hpp"
#include "syllogist/rational.hpp"

namespace syllogist {

/// A crisp three-set world as cardinalities of the 8 Venn atoms.
/// Atom index bits: 4 = in A, 2 = in B, 1 = in C.
struct VennModel {
    std::array<int, 8> atoms{};

    int total() const;
    /// Cardinality of the region selected by `mask` (bit m = atom m included).
    int count(std::uint8_t mask) const;

    std::string to_string() const;
};

/// Atom masks of the three base sets; combine with & | ~ for any region.
inline constexpr std::uint8_t atoms_a = 0xF0;
inline constexpr std::uint8_t atoms_b = 0xCC;
inline constexpr std::uint8_t atoms_c = 0xAA;
inline constexpr std::uint8_t atoms_all = 0xFF;

/// Parses "A&B", "C & ~(A|B)", ... into an atom mask.
std::uint8_t parse_set_expr(const std::string& text);

/// Visits every atom vector with total() <= total_max, in lexicographic
/// order; stops early when the visitor returns false.  With require_nonempty,
/// only models with |A|,|B|,|C| >= 1 are visited.
void enumerate_models(int total_max, bool require_nonempty,
                      const std::function<bool(const VennModel&)>& visit);

std::int64_t model_count(int total_max);  // C(total_max + 8, 8)

struct MoodCheck {
    bool valid;
    std::optional<VennModel> counterexample;
};

/// Crisp truth of "letter subject are predicate" on a model, regions given
/// as atom masks.
bool crisp_letter_holds(Letter l, const VennModel& m,
                        std::uint8_t subject_mask, std::uint8_t predicate_mask);

/// Exhaustively checks a mood against all models with total <= total_max
/// under existential import.  The four classical quantifiers depend only on
/// the emptiness pattern of the atoms, so any counterexample shrinks to one
/// with 0/1 atoms; total_max >= 8 is conclusive.
MoodCheck mood_valid(const Mood& mood, int total_max);

/// num/den constrained to [lower, upper]; openness makes the bound strict.
/// Any admissible model must have den > 0.
struct ProportionConstraint {
    std::uint8_t num_mask;
    std::uint8_t den_mask;
    Rational lower{0, 1};
    Rational upper{1, 1};
    bool lower_open = false;
    bool upper_open = false;

    static ProportionConstraint from_interval(std::uint8_t num, std::uint8_t den,
                                              const Interval& bounds);
};

struct ProportionTarget {
    std::uint8_t num_mask;
    std::uint8_t den_mask;
};

struct RationalRange {
    Rational lower;
    Rational upper;

    Interval to_interval() const {
        return Interval::closed(lower.to_double(), upper.to_double());
    }
};

/// Exact [min, max] of the target proportion over every model with
/// total <= total_max satisfying all constraints.  Models where the target
/// denominator is empty are admissible but contribute no value; if only such
/// models exist the proportion is undefined.  Errors: unsatisfiable_premises
/// when no model satisfies the constraints, undefined_proportion when the
/// target denominator is forced empty.
RationalRange attained_range(const std::vector<ProportionConstraint>& constraints,
                             const ProportionTarget& target, int total_max);

} // namespace syllogist
