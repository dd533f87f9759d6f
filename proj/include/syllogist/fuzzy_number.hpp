#pragma once

#include <utility>
#include <vector>

#include "syllogist/interval.hpp"

namespace syllogist {

/// Four-point trapezoidal quantifier: support [support_low, support_high],
/// kernel [kernel_low, kernel_high].  Values are proportions for relative
/// quantifiers and plain counts for absolute ones; intermediates of fuzzy
/// subtraction may leave [0,1], so only the ordering is enforced here.
struct TrapezoidalQuantifier {
    double support_low = 0.0;
    double kernel_low = 0.0;
    double kernel_high = 0.0;
    double support_high = 0.0;

    static TrapezoidalQuantifier make(double a, double b, double c, double d);
    static TrapezoidalQuantifier crisp(double v) { return make(v, v, v, v); }
    static TrapezoidalQuantifier from_interval(const Interval& iv) {
        return make(iv.lower, iv.lower, iv.upper, iv.upper);
    }

    Interval support() const { return Interval::closed(support_low, support_high); }
    Interval kernel() const { return Interval::closed(kernel_low, kernel_high); }

    /// Membership degree at x (linear shoulders, degenerate ramps are steps).
    double membership(double x) const;

    bool operator==(const TrapezoidalQuantifier&) const = default;
};

inline constexpr int kDefaultAlphaLevels = 11;

/// A fuzzy number carried as a family of nested alpha-cuts.  Level 0 is the
/// limit cut at alpha -> 0+ (the support); the last level is alpha = 1 (the
/// kernel).  Products of trapezoids are not trapezoids, so interior levels
/// of derived numbers are the exact cuts of the operation applied levelwise,
/// while support and kernel endpoints stay exact throughout.
class AlphaCutNumber {
public:
    struct Level {
        double alpha;  // 0.0 denotes the alpha -> 0+ limit
        Interval cut;
    };

    AlphaCutNumber() = default;

    static AlphaCutNumber from_trapezoid(const TrapezoidalQuantifier& t,
                                         int levels = kDefaultAlphaLevels);
    static AlphaCutNumber crisp(double v, int levels = kDefaultAlphaLevels) {
        return from_trapezoid(TrapezoidalQuantifier::crisp(v), levels);
    }
    static AlphaCutNumber from_interval(const Interval& iv, int levels = kDefaultAlphaLevels) {
        return from_trapezoid(TrapezoidalQuantifier::from_interval(iv), levels);
    }

    const std::vector<Level>& levels() const { return levels_; }
    int resolution() const { return static_cast<int>(levels_.size()); }

    Interval support() const { return levels_.front().cut; }
    Interval kernel() const { return levels_.back().cut; }

    bool same_grid(const AlphaCutNumber& other) const;

    /// True when every higher-alpha cut is contained in every lower one.
    bool is_nested() const;

    static AlphaCutNumber from_levels(std::vector<Level> levels);

private:
    std::vector<Level> levels_;
};

AlphaCutNumber fz_add(const AlphaCutNumber& a, const AlphaCutNumber& b);
AlphaCutNumber fz_sub(const AlphaCutNumber& a, const AlphaCutNumber& b);
AlphaCutNumber fz_mul(const AlphaCutNumber& a, const AlphaCutNumber& b);

/// Pointwise max(endpoint, floor) on every cut.
AlphaCutNumber fz_clamp_floor(const AlphaCutNumber& a, double floor);

/// A conclusion quantifier: either an exact fuzzy value or a lower bound
/// ("Q >= expr"), in which case every effective cut is [cut.lower, 1].
struct BoundedQuantifier {
    enum class Mode { Exact, AtLeast };

    AlphaCutNumber core;
    Mode mode = Mode::Exact;

    static BoundedQuantifier exact(AlphaCutNumber v) {
        return BoundedQuantifier{std::move(v), Mode::Exact};
    }
    static BoundedQuantifier at_least(AlphaCutNumber v) {
        return BoundedQuantifier{std::move(v), Mode::AtLeast};
    }
};

/// Support and kernel cuts, widened to upper = 1 in AtLeast mode.
std::pair<Interval, Interval> defuzz_bounds(const BoundedQuantifier& q);

} // namespace syllogist
