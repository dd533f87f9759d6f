#include "syllogist/quantifier.hpp"

#include "syllogist/errors.hpp"

namespace syllogist {

Interval QuantifierKind::as_interval() const {
    if (const auto* p = std::get_if<PreciseQ>(&value))
        return Interval::point(p->value);
    if (const auto* i = std::get_if<ImpreciseQ>(&value))
        return i->interval;
    if (const auto* c = std::get_if<ClassicalQ>(&value))
        return classical_interval(c->letter);
    raise(errc::domain_error, "fuzzy quantifier has no single interval view");
}

TrapezoidalQuantifier QuantifierKind::as_trapezoid() const {
    if (const auto* f = std::get_if<FuzzyQ>(&value))
        return f->trapezoid;
    Interval iv = as_interval();
    return TrapezoidalQuantifier::from_interval(iv);
}

} // namespace syllogist
