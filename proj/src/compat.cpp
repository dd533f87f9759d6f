#include "syllogist/compat.hpp"

#include <algorithm>
#include <cmath>

#include "syllogist/dubois.hpp"
#include "syllogist/errors.hpp"
#include "syllogist/oracle.hpp"

namespace syllogist {

const char* pattern_id_name(PatternId p) {
    switch (p) {
    case PatternId::Dubois1: return "dubois1";
    case PatternId::Dubois2: return "dubois2";
    case PatternId::Dubois3: return "dubois3";
    case PatternId::MC: return "mc";
    case PatternId::MPR: return "mpr";
    case PatternId::IntersectionProduct: return "intersection";
    case PatternId::AntecedentCD: return "antecedent";
    case PatternId::ConsequentCD: return "consequent";
    }
    return "?";
}

PatternId pattern_id_from_name(const std::string& name) {
    for (PatternId p : {PatternId::Dubois1, PatternId::Dubois2, PatternId::Dubois3,
                        PatternId::MC, PatternId::MPR, PatternId::IntersectionProduct,
                        PatternId::AntecedentCD, PatternId::ConsequentCD})
        if (name == pattern_id_name(p)) return p;
    raise(errc::syntax_error, "unknown pattern id: " + name);
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Compatible: return "Compatible";
    case Verdict::FigureMismatch: return "FigureMismatch";
    case Verdict::MissingPremise: return "MissingPremise";
    case Verdict::NonSymmetricReversal: return "NonSymmetricReversal";
    case Verdict::ConclusionNotEntailed: return "ConclusionNotEntailed";
    case Verdict::StructurallyExcluded: return "StructurallyExcluded";
    }
    return "?";
}

bool figure_compatible(PatternId p, Figure f) {
    switch (p) {
    case PatternId::Dubois1:
    case PatternId::MC:
    case PatternId::MPR:
        break;
    default:
        return false;  // structurally excluded patterns gate nothing
    }
    // All three chaining patterns read "Q As are Bs / Q' Bs are Cs": middle
    // as subject of the major premise, predicate of the minor one.
    auto pos = middle_positions(f);
    return pos[0] == TermPosition::Subject && pos[1] == TermPosition::Predicate;
}

namespace {

// Effective scalar lower end of a classical premise interval, with the
// delta floor standing in for strict-positive bounds.
double effective_lower(const Interval& iv, double delta) {
    return iv.lower_open ? iv.lower + delta : iv.lower;
}

std::vector<double> converse_grid(const CompatOptions& opt) {
    std::vector<double> g;
    g.push_back(opt.delta);
    int steps = static_cast<int>(std::lround(1.0 / opt.sweep_step));
    for (int k = 1; k <= steps; ++k)
        g.push_back(std::min(1.0, k * opt.sweep_step));
    return g;
}

MoodVerdict check_dubois1(const Mood& mood, const CompatOptions& opt) {
    MoodVerdict out{mood, Verdict::Compatible, std::nullopt, ""};

    Interval q1 = classical_interval(mood.minor);  // "Q1 As are Bs" = minor premise
    Interval q2 = classical_interval(mood.major);  // "Q2 Bs are Cs" = major premise

    Pattern1Options popt;
    popt.delta = opt.delta;
    popt.grid_step = opt.sweep_step;

    bool have = false;
    Interval hull = Interval::point(0.0);
    for (double c1 : converse_grid(opt)) {
        for (double c2 : converse_grid(opt)) {
            Interval concl =
                pattern1_imprecise(q1, Interval::point(c1), q2, Interval::point(c2), popt)
                    .conclusion;
            hull = have ? iv_hull(hull, concl) : concl;
            have = true;
        }
    }
    out.computed = hull;
    if (!iv_entails(hull, classical_interval(mood.conclusion)))
        out.verdict = Verdict::ConclusionNotEntailed;
    return out;
}

// Does the mood's premise pair force middle ⊆ minor?  Search for a crisp
// countermodel; the classical quantifiers only see atom emptiness, so the
// default budget is conclusive.
bool premises_entail_middle_in_minor(const Mood& mood, int total_max) {
    auto shapes = figure_premises(mood.figure);
    auto mask = [](TermRole r) {
        switch (r) {
        case TermRole::Minor: return atoms_a;
        case TermRole::Middle: return atoms_b;
        default: return atoms_c;
        }
    };
    bool entailed = true;
    enumerate_models(total_max, /*require_nonempty=*/true, [&](const VennModel& m) {
        if (crisp_letter_holds(mood.major, m, mask(shapes[0].subject), mask(shapes[0].predicate)) &&
            crisp_letter_holds(mood.minor, m, mask(shapes[1].subject), mask(shapes[1].predicate)) &&
            m.count(atoms_b & static_cast<std::uint8_t>(~atoms_a)) > 0) {
            entailed = false;
            return false;
        }
        return true;
    });
    return entailed;
}

MoodVerdict check_mc(const Mood& mood, const CompatOptions& opt) {
    MoodVerdict out{mood, Verdict::Compatible, std::nullopt, ""};
    if (!premises_entail_middle_in_minor(mood, opt.oracle_max)) {
        out.verdict = Verdict::MissingPremise;
        out.note = "required inclusion (all middles are minors) is not entailed by the premises";
        return out;
    }
    double lo1 = effective_lower(classical_interval(mood.minor), opt.delta);
    double lo2 = effective_lower(classical_interval(mood.major), opt.delta);
    Interval computed = Interval::closed(lo1 * lo2, 1.0);  // Q >= Q1 ⊗ Q2
    out.computed = computed;
    if (!iv_entails(computed, classical_interval(mood.conclusion)))
        out.verdict = Verdict::ConclusionNotEntailed;
    return out;
}

MoodVerdict check_mpr(const Mood& mood, const CompatOptions& opt) {
    MoodVerdict out{mood, Verdict::Compatible, std::nullopt, ""};
    QuantifierKind minor_q = QuantifierKind::classical(mood.minor);
    if (!minor_q.symmetric) {
        out.verdict = Verdict::NonSymmetricReversal;
        out.note = std::string("minor premise quantifier ") + letter_name(mood.minor) +
                   " does not survive argument reversal";
        return out;
    }
    // Reversed minor premise keeps its quantifier; conclusion is the
    // Lukasiewicz lower bound, so everything up to 1 stays possible.
    double lo1 = effective_lower(classical_interval(mood.minor), opt.delta);
    double lo2 = effective_lower(classical_interval(mood.major), opt.delta);
    Interval computed = Interval::closed(std::max(0.0, lo1 + lo2 - 1.0), 1.0);
    out.computed = computed;
    if (!iv_entails(computed, classical_interval(mood.conclusion))) {
        out.verdict = Verdict::ConclusionNotEntailed;
        if (mood.conclusion == Letter::O)
            out.note = "bound degenerates to [0,1]: a decreasing conclusion quantifier "
                       "(strictly below 1) is unreachable from a lower-bound scheme";
    }
    return out;
}

} // namespace

MoodVerdict check_mood(PatternId p, const Mood& mood, const CompatOptions& opt) {
    switch (p) {
    case PatternId::Dubois1:
    case PatternId::MC:
    case PatternId::MPR:
        break;
    default:
        return MoodVerdict{mood, Verdict::StructurallyExcluded, std::nullopt,
                           "pattern extends the two-premise chain syntactically"};
    }
    if (!figure_compatible(p, mood.figure))
        return MoodVerdict{mood, Verdict::FigureMismatch, std::nullopt,
                           "middle term positions do not match"};
    switch (p) {
    case PatternId::Dubois1: return check_dubois1(mood, opt);
    case PatternId::MC: return check_mc(mood, opt);
    default: return check_mpr(mood, opt);
    }
}

std::vector<CompatReport> reproduce_tables(const CompatOptions& opt) {
    std::vector<CompatReport> reports;
    for (PatternId p : {PatternId::Dubois1, PatternId::MC, PatternId::MPR}) {
        CompatReport r;
        r.pattern = p;
        for (const Mood& m : valid_moods())
            r.entries.push_back(check_mood(p, m, opt));
        reports.push_back(std::move(r));
    }
    return reports;
}

const std::vector<PatternId>& structurally_excluded_patterns() {
    static const std::vector<PatternId> v = {
        PatternId::Dubois2, PatternId::Dubois3, PatternId::IntersectionProduct,
        PatternId::AntecedentCD, PatternId::ConsequentCD};
    return v;
}

} // namespace syllogist
