#pragma once

#include <string>

namespace syllogist {

/// The four classical quantifier letters.
enum class Letter { A, E, I, O };

const char* letter_name(Letter l);
Letter letter_from_char(char c);

/// Absolute tolerance used when comparing against *closed* endpoints.
/// Open endpoints always compare strictly.
inline constexpr double kEndpointTol = 1e-9;

/// An interval of proportions with per-endpoint openness.  Point intervals
/// are always closed; the empty interval is not representable.  Values
/// normally live in [0,1], but unclamped intermediates (fuzzy subtraction,
/// QEP chains) may leave that range.
struct Interval {
    double lower = 0.0;
    double upper = 0.0;
    bool lower_open = false;
    bool upper_open = false;

    static Interval make(double lo, double hi, bool lo_open = false, bool hi_open = false);
    static Interval closed(double lo, double hi) { return make(lo, hi); }
    static Interval point(double v) { return make(v, v); }

    bool is_point() const { return lower == upper; }
    double width() const { return upper - lower; }

    /// Membership test honoring openness; `tol` is applied at closed
    /// endpoints only.
    bool contains(double x, double tol = kEndpointTol) const;

    bool operator==(const Interval&) const = default;
};

/// Interval encodings of A/E/I/O: [1,1], [0,0], (0,1], [0,1).
Interval classical_interval(Letter l);

Interval iv_add(const Interval& a, const Interval& b, bool clamp);
/// Subtraction clamps at 0 only (the "max(0, ...)" shape).
Interval iv_sub(const Interval& a, const Interval& b, bool clamp);
/// Product of non-negative intervals.
Interval iv_mul(const Interval& a, const Interval& b);
/// Quotient; errors when 0 lies in the closure of b.
Interval iv_div(const Interval& a, const Interval& b);

/// True iff every point of `specific` lies in `general`.
bool iv_entails(const Interval& specific, const Interval& general);

/// True iff the two intervals share no point.
bool iv_disjoint(const Interval& a, const Interval& b);

/// Convex hull of two intervals (used to accumulate sweep unions).
Interval iv_hull(const Interval& a, const Interval& b);

/// Renders "[0.25, 0.35]", "(0, 1]", ...; parsed back by the dsl module.
std::string to_string(const Interval& iv);

/// Shortest-ish decimal form ("%.9g") used in interval/statement rendering.
std::string format_proportion(double v);

} // namespace syllogist
