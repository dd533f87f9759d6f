#include "syllogist/aristotle.hpp"

#include <algorithm>

#include "syllogist/errors.hpp"

namespace syllogist {

std::array<PremiseShape, 2> figure_premises(Figure f) {
    using R = TermRole;
    switch (f) {
    case Figure::I:   return {{{R::Middle, R::Major}, {R::Minor, R::Middle}}};
    case Figure::II:  return {{{R::Major, R::Middle}, {R::Minor, R::Middle}}};
    case Figure::III: return {{{R::Middle, R::Major}, {R::Middle, R::Minor}}};
    case Figure::IV:  return {{{R::Major, R::Middle}, {R::Middle, R::Minor}}};
    }
    raise(errc::domain_error, "bad figure");
}

std::array<TermPosition, 2> middle_positions(Figure f) {
    auto shapes = figure_premises(f);
    auto pos = [](const PremiseShape& s) {
        return s.subject == TermRole::Middle ? TermPosition::Subject : TermPosition::Predicate;
    };
    return {pos(shapes[0]), pos(shapes[1])};
}

std::string Mood::name() const {
    std::string s;
    s += letter_name(major);
    s += letter_name(minor);
    s += letter_name(conclusion);
    s += '-';
    s += std::to_string(static_cast<int>(figure));
    return s;
}

Mood mood_from_name(const std::string& name) {
    if (name.size() != 5 || name[3] != '-' || name[4] < '1' || name[4] > '4')
        raise(errc::syntax_error, "mood name must look like AAA-1: " + name);
    return Mood{static_cast<Figure>(name[4] - '0'),
                letter_from_char(name[0]), letter_from_char(name[1]), letter_from_char(name[2])};
}

const std::vector<Mood>& valid_moods() {
    static const std::vector<Mood> catalog = [] {
        auto m = [](Figure f, const char* s) {
            return Mood{f, letter_from_char(s[0]), letter_from_char(s[1]), letter_from_char(s[2])};
        };
        std::vector<Mood> v;
        for (const char* s : {"AAA", "EAE", "AII", "EIO", "AAI", "EAO"}) v.push_back(m(Figure::I, s));
        for (const char* s : {"EAE", "AEE", "EIO", "AOO", "EAO", "AEO"}) v.push_back(m(Figure::II, s));
        for (const char* s : {"AAI", "EAO", "IAI", "AII", "OAO", "EIO"}) v.push_back(m(Figure::III, s));
        for (const char* s : {"AAI", "AEE", "IAI", "EAO", "EIO", "AEO"}) v.push_back(m(Figure::IV, s));
        return v;
    }();
    return catalog;
}

Syllogism instantiate(const Mood& mood, const TermAssignment& terms) {
    auto label = [&](TermRole r) -> const std::string& {
        switch (r) {
        case TermRole::Minor: return terms.minor;
        case TermRole::Middle: return terms.middle;
        default: return terms.major;
        }
    };
    if (terms.major == terms.minor || terms.major == terms.middle || terms.minor == terms.middle)
        raise(errc::domain_error, "term labels must be pairwise distinct");

    auto shapes = figure_premises(mood.figure);
    auto stmt = [&](Letter l, const PremiseShape& s) {
        Statement st;
        st.quantifier = QuantifierKind::classical(l);
        st.subject = label(s.subject);
        st.predicate = label(s.predicate);
        return st;
    };

    Syllogism out;
    out.premises.push_back(stmt(mood.major, shapes[0]));
    out.premises.push_back(stmt(mood.minor, shapes[1]));
    out.conclusion = stmt(mood.conclusion, PremiseShape{TermRole::Minor, TermRole::Major});
    return out;
}

bool crisp_holds(Letter letter, const std::set<int>& subject, const std::set<int>& predicate) {
    if (subject.empty())
        raise(errc::empty_term, "subject term is empty (existential import)");
    bool subset = std::includes(predicate.begin(), predicate.end(),
                                subject.begin(), subject.end());
    bool overlap = std::any_of(subject.begin(), subject.end(),
                               [&](int x) { return predicate.count(x) > 0; });
    switch (letter) {
    case Letter::A: return subset;
    case Letter::E: return !overlap;
    case Letter::I: return overlap;
    case Letter::O: return !subset;  // "not all As are Bs"
    }
    raise(errc::domain_error, "bad letter");
}

} // namespace syllogist
