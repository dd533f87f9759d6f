#include "syllogist/zadeh.hpp"

#include <algorithm>
#include <cmath>

#include "syllogist/errors.hpp"

namespace syllogist {

FuzzySet FuzzySet::make(std::vector<std::string> universe, std::vector<double> membership) {
    if (universe.size() != membership.size())
        raise(errc::domain_error, "universe and membership sizes differ");
    for (size_t i = 0; i < universe.size(); ++i)
        for (size_t j = i + 1; j < universe.size(); ++j)
            if (universe[i] == universe[j])
                raise(errc::domain_error, "duplicate universe label: " + universe[i]);
    for (double m : membership)
        if (!(m >= 0.0 && m <= 1.0))
            raise(errc::domain_error, "membership degree outside [0,1]");
    return FuzzySet{std::move(universe), std::move(membership)};
}

namespace {

void check_shared_universe(const FuzzySet& a, const FuzzySet& b) {
    if (a.universe != b.universe)
        raise(errc::domain_error, "fuzzy sets live on different universes");
}

} // namespace

double sigma_count(const FuzzySet& s) {
    double t = 0.0;
    for (double m : s.membership) t += m;
    return t;
}

FuzzySet fuzzy_intersect(const FuzzySet& a, const FuzzySet& b, TNorm t) {
    check_shared_universe(a, b);
    FuzzySet out = a;
    for (size_t i = 0; i < out.membership.size(); ++i)
        out.membership[i] = t == TNorm::Min ? std::min(a.membership[i], b.membership[i])
                                            : a.membership[i] * b.membership[i];
    return out;
}

bool check_inclusion(const FuzzySet& b, const FuzzySet& a) {
    check_shared_universe(a, b);
    for (size_t i = 0; i < a.membership.size(); ++i)
        if (b.membership[i] > a.membership[i]) return false;
    return true;
}

namespace {

double quantifier_membership(const QuantifierKind& q, double x) {
    if (const auto* p = std::get_if<PreciseQ>(&q.value))
        return std::fabs(x - p->value) <= kEndpointTol ? 1.0 : 0.0;
    if (const auto* i = std::get_if<ImpreciseQ>(&q.value))
        return i->interval.contains(x) ? 1.0 : 0.0;
    if (const auto* c = std::get_if<ClassicalQ>(&q.value))
        return classical_interval(c->letter).contains(x) ? 1.0 : 0.0;
    return std::get<FuzzyQ>(q.value).trapezoid.membership(x);
}

} // namespace

double statement_truth(const QuantifierKind& q, const FuzzySet& subject,
                       const FuzzySet& predicate, TNorm t) {
    FuzzySet both = fuzzy_intersect(subject, predicate, t);
    double overlap = sigma_count(both);
    if (q.absolute)
        return quantifier_membership(q, overlap);
    double denom = sigma_count(subject);
    if (denom <= 0.0)
        raise(errc::empty_subject, "subject has zero cardinality");
    return quantifier_membership(q, overlap / denom);
}

BoundedQuantifier mc_conclude(const AlphaCutNumber& q1, const AlphaCutNumber& q2,
                              bool constraint_ok) {
    if (!constraint_ok)
        raise(errc::constraint_violated,
              "chaining needs the middle term included in the subject "
              "(declare it or verify it before concluding)");
    return BoundedQuantifier::at_least(fz_mul(q1, q2));
}

BoundedQuantifier mpr_conclude(const AlphaCutNumber& q1, const AlphaCutNumber& q2) {
    AlphaCutNumber one = AlphaCutNumber::crisp(1.0, q1.resolution());
    return BoundedQuantifier::at_least(fz_clamp_floor(fz_sub(fz_add(q1, q2), one), 0.0));
}

const char* zadeh_pattern_name(ZadehPattern p) {
    switch (p) {
    case ZadehPattern::MC: return "mc";
    case ZadehPattern::MPR: return "mpr";
    case ZadehPattern::IntersectionProduct: return "intersection";
    case ZadehPattern::AntecedentAnd: return "antecedent-and";
    case ZadehPattern::AntecedentOr: return "antecedent-or";
    case ZadehPattern::ConsequentAnd: return "consequent-and";
    case ZadehPattern::ConsequentOr: return "consequent-or";
    }
    return "?";
}

namespace {

bool is_crisp_point(const AlphaCutNumber& n) {
    return n.support().is_point();
}

template <typename Op>
AlphaCutNumber per_cut(const AlphaCutNumber& a, const AlphaCutNumber& b, Op op) {
    if (!a.same_grid(b))
        raise(errc::mismatched_alpha_grid, "operands carry different alpha grids");
    std::vector<AlphaCutNumber::Level> out;
    out.reserve(a.levels().size());
    for (size_t i = 0; i < a.levels().size(); ++i)
        out.push_back({a.levels()[i].alpha, op(a.levels()[i].cut, b.levels()[i].cut)});
    return AlphaCutNumber::from_levels(std::move(out));
}

CombineResult wrap(AlphaCutNumber value, bool crisp, std::string note) {
    if (crisp)
        return CombineResult{value.support(), std::move(note)};
    return CombineResult{BoundedQuantifier::exact(std::move(value)), std::move(note)};
}

} // namespace

CombineResult combine(ZadehPattern p, const AlphaCutNumber& q1, const AlphaCutNumber& q2,
                      std::optional<double> mix, bool want_point) {
    for (const AlphaCutNumber* q : {&q1, &q2}) {
        Interval sup = q->support();
        if (sup.lower < -kEndpointTol || sup.upper > 1.0 + kEndpointTol)
            raise(errc::domain_error, "combine expects proportional quantifiers in [0,1]");
    }
    bool crisp = is_crisp_point(q1) && is_crisp_point(q2);

    switch (p) {
    case ZadehPattern::MC:
    case ZadehPattern::MPR:
        raise(errc::domain_error, "chaining patterns go through mc_conclude/mpr_conclude");

    case ZadehPattern::IntersectionProduct:
        return CombineResult{BoundedQuantifier::at_least(fz_mul(q1, q2)), ""};

    case ZadehPattern::ConsequentAnd:
        return wrap(per_cut(q1, q2,
                            [](const Interval& a, const Interval& b) {
                                double hi = std::min(a.upper, b.upper);
                                double lo = std::max(0.0, a.lower + b.lower - 1.0);
                                return Interval::closed(std::min(lo, hi), hi);  // float noise
                            }),
                    crisp, "");

    case ZadehPattern::ConsequentOr:
        return wrap(per_cut(q1, q2,
                            [](const Interval& a, const Interval& b) {
                                double lo = std::max(a.lower, b.lower);
                                double hi = std::max(lo, std::min(1.0, a.upper + b.upper));
                                return Interval::closed(lo, hi);
                            }),
                    crisp, "");

    case ZadehPattern::AntecedentOr:
        if (mix) {
            if (!(*mix >= 0.0 && *mix <= 1.0))
                raise(errc::domain_error, "mix ratio must lie in [0,1]");
            double m = *mix;
            return wrap(per_cut(q1, q2,
                                [m](const Interval& a, const Interval& b) {
                                    return Interval::closed(
                                        m * a.lower + (1.0 - m) * b.lower,
                                        m * a.upper + (1.0 - m) * b.upper);
                                }),
                        crisp, "");
        }
        if (want_point)
            raise(errc::missing_mix_ratio,
                  "a point result for antecedent disjunction needs the subject mix ratio");
        return wrap(per_cut(q1, q2,
                            [](const Interval& a, const Interval& b) {
                                return Interval::closed(std::min(a.lower, b.lower),
                                                        std::max(a.upper, b.upper));
                            }),
                    crisp, "hull of the two premise proportions; tightening needs overlap data");

    case ZadehPattern::AntecedentAnd: {
        AlphaCutNumber vac = AlphaCutNumber::from_interval(Interval::closed(0.0, 1.0),
                                                           q1.resolution());
        return wrap(vac, crisp,
                    "vacuous bound: the premises do not determine the conjunction's subject");
    }
    }
    raise(errc::domain_error, "bad pattern");
}

} // namespace syllogist
