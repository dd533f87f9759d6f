#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "syllogist/quantifier.hpp"

namespace syllogist {

enum class Figure { I = 1, II = 2, III = 3, IV = 4 };

enum class TermRole { Minor, Middle, Major };

struct PremiseShape {
    TermRole subject;
    TermRole predicate;
};

/// Premise templates per figure; the conclusion is always "Q minor are major".
std::array<PremiseShape, 2> figure_premises(Figure f);

/// Position of the middle term in (major premise, minor premise).
enum class TermPosition { Subject, Predicate };
std::array<TermPosition, 2> middle_positions(Figure f);

struct Mood {
    Figure figure;
    Letter major;       // quantifier of the major premise
    Letter minor;       // quantifier of the minor premise
    Letter conclusion;

    std::string name() const;  // "AAA-1", "EIO-4", ...
    bool operator==(const Mood&) const = default;
    auto operator<=>(const Mood&) const = default;
};

Mood mood_from_name(const std::string& name);

/// The 24-mood catalog, six per figure, in catalog order.
const std::vector<Mood>& valid_moods();

struct TermAssignment {
    std::string major;
    std::string minor;
    std::string middle;
};

/// Expands a mood into concrete premises and conclusion.
Syllogism instantiate(const Mood& mood, const TermAssignment& terms);

/// Crisp truth of "letter subject are predicate" over finite sets.
/// Existential import: errors on an empty subject.
bool crisp_holds(Letter letter, const std::set<int>& subject, const std::set<int>& predicate);

} // namespace syllogist
