#include "syllogist/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>

#include "syllogist/errors.hpp"

namespace syllogist {

TrapezoidalQuantifier TrapezoidalQuantifier::make(double a, double b, double c, double d) {
    if (!(a <= b && b <= c && c <= d))
        raise(errc::malformed_interval, "trapezoid points must be ordered");
    return TrapezoidalQuantifier{a, b, c, d};
}

double TrapezoidalQuantifier::membership(double x) const {
    if (x < support_low || x > support_high) return 0.0;
    if (x >= kernel_low && x <= kernel_high) return 1.0;
    if (x < kernel_low)
        return (x - support_low) / (kernel_low - support_low);  // ramp up
    return (support_high - x) / (support_high - kernel_high);   // ramp down
}

AlphaCutNumber AlphaCutNumber::from_trapezoid(const TrapezoidalQuantifier& t, int levels) {
    if (levels < 2) raise(errc::domain_error, "need at least support and kernel levels");
    std::vector<Level> out;
    out.reserve(levels);
    for (int i = 0; i < levels; ++i) {
        double alpha = static_cast<double>(i) / (levels - 1);
        double lo = t.support_low + alpha * (t.kernel_low - t.support_low);
        double hi = t.support_high - alpha * (t.support_high - t.kernel_high);
        out.push_back(Level{alpha, Interval::closed(lo, hi)});
    }
    AlphaCutNumber n;
    n.levels_ = std::move(out);
    return n;
}

AlphaCutNumber AlphaCutNumber::from_levels(std::vector<Level> levels) {
    if (levels.size() < 2) raise(errc::domain_error, "need at least two levels");
    AlphaCutNumber n;
    n.levels_ = std::move(levels);
    return n;
}

bool AlphaCutNumber::same_grid(const AlphaCutNumber& other) const {
    if (levels_.size() != other.levels_.size()) return false;
    for (size_t i = 0; i < levels_.size(); ++i)
        if (levels_[i].alpha != other.levels_[i].alpha) return false;
    return true;
}

bool AlphaCutNumber::is_nested() const {
    for (size_t i = 1; i < levels_.size(); ++i) {
        if (levels_[i].cut.lower < levels_[i - 1].cut.lower - 1e-12) return false;
        if (levels_[i].cut.upper > levels_[i - 1].cut.upper + 1e-12) return false;
    }
    return true;
}

namespace {

template <typename Op>
AlphaCutNumber levelwise(const AlphaCutNumber& a, const AlphaCutNumber& b, Op op) {
    if (!a.same_grid(b))
        raise(errc::mismatched_alpha_grid, "operands carry different alpha grids");
    std::vector<AlphaCutNumber::Level> out;
    out.reserve(a.levels().size());
    for (size_t i = 0; i < a.levels().size(); ++i)
        out.push_back({a.levels()[i].alpha, op(a.levels()[i].cut, b.levels()[i].cut)});
    return AlphaCutNumber::from_levels(std::move(out));
}

} // namespace

AlphaCutNumber fz_add(const AlphaCutNumber& a, const AlphaCutNumber& b) {
    return levelwise(a, b, [](const Interval& x, const Interval& y) {
        return iv_add(x, y, /*clamp=*/false);
    });
}

AlphaCutNumber fz_sub(const AlphaCutNumber& a, const AlphaCutNumber& b) {
    return levelwise(a, b, [](const Interval& x, const Interval& y) {
        return iv_sub(x, y, /*clamp=*/false);
    });
}

AlphaCutNumber fz_mul(const AlphaCutNumber& a, const AlphaCutNumber& b) {
    return levelwise(a, b, [](const Interval& x, const Interval& y) {
        return iv_mul(x, y);
    });
}

AlphaCutNumber fz_clamp_floor(const AlphaCutNumber& a, double floor) {
    std::vector<AlphaCutNumber::Level> out;
    out.reserve(a.levels().size());
    for (const auto& lv : a.levels()) {
        double lo = std::max(lv.cut.lower, floor);
        double hi = std::max(lv.cut.upper, floor);
        out.push_back({lv.alpha, Interval::closed(lo, hi)});
    }
    return AlphaCutNumber::from_levels(std::move(out));
}

std::pair<Interval, Interval> defuzz_bounds(const BoundedQuantifier& q) {
    Interval sup = q.core.support();
    Interval ker = q.core.kernel();
    if (q.mode == BoundedQuantifier::Mode::AtLeast) {
        sup = Interval::closed(sup.lower, 1.0);
        ker = Interval::closed(std::min(ker.lower, 1.0), 1.0);
    }
    return {sup, ker};
}

} // namespace syllogist
