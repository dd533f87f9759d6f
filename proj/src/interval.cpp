#include "syllogist/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "syllogist/errors.hpp"

namespace syllogist {

const char* letter_name(Letter l) {
    switch (l) {
    case Letter::A: return "A";
    case Letter::E: return "E";
    case Letter::I: return "I";
    case Letter::O: return "O";
    }
    return "?";
}

Letter letter_from_char(char c) {
    switch (c) {
    case 'A': case 'a': return Letter::A;
    case 'E': case 'e': return Letter::E;
    case 'I': case 'i': return Letter::I;
    case 'O': case 'o': return Letter::O;
    }
    raise(errc::syntax_error, std::string("not a quantifier letter: ") + c);
}

Interval Interval::make(double lo, double hi, bool lo_open, bool hi_open) {
    if (!(lo <= hi))
        raise(errc::malformed_interval, "lower > upper");
    if (lo == hi && (lo_open || hi_open))
        raise(errc::malformed_interval, "open point interval is empty");
    return Interval{lo, hi, lo_open, hi_open};
}

bool Interval::contains(double x, double tol) const {
    bool lo_ok = lower_open ? x > lower : x >= lower - tol;
    bool hi_ok = upper_open ? x < upper : x <= upper + tol;
    return lo_ok && hi_ok;
}

Interval classical_interval(Letter l) {
    switch (l) {
    case Letter::A: return Interval::point(1.0);
    case Letter::E: return Interval::point(0.0);
    case Letter::I: return Interval::make(0.0, 1.0, true, false);
    case Letter::O: return Interval::make(0.0, 1.0, false, true);
    }
    raise(errc::domain_error, "bad letter");
}

namespace {

// Clamp a raw result into [lo_bound, hi_bound]; a clamped endpoint becomes
// attained (closed) unless the raw interval never actually reaches the bound
// (raw endpoint sitting exactly on the bound keeps its own openness).
Interval clamp_interval(double lo, double hi, bool lo_open, bool hi_open,
                        double lo_bound, double hi_bound) {
    if (hi < lo_bound) return Interval{lo_bound, lo_bound, false, false};
    if (lo > hi_bound) return Interval{hi_bound, hi_bound, false, false};
    if (lo < lo_bound) { lo = lo_bound; lo_open = false; }
    if (hi > hi_bound) { hi = hi_bound; hi_open = false; }
    if (lo == hi) { lo_open = false; hi_open = false; }
    return Interval{lo, hi, lo_open, hi_open};
}

} // namespace

Interval iv_add(const Interval& a, const Interval& b, bool clamp) {
    double lo = a.lower + b.lower;
    double hi = a.upper + b.upper;
    bool lo_open = a.lower_open || b.lower_open;
    bool hi_open = a.upper_open || b.upper_open;
    if (clamp) return clamp_interval(lo, hi, lo_open, hi_open, 0.0, 1.0);
    return Interval{lo, hi, lo_open, hi_open};
}

Interval iv_sub(const Interval& a, const Interval& b, bool clamp) {
    double lo = a.lower - b.upper;
    double hi = a.upper - b.lower;
    bool lo_open = a.lower_open || b.upper_open;
    bool hi_open = a.upper_open || b.lower_open;
    if (clamp) return clamp_interval(lo, hi, lo_open, hi_open, 0.0,
                                     std::numeric_limits<double>::infinity());
    return Interval{lo, hi, lo_open, hi_open};
}

namespace {

// Product endpoint openness: p = x*y is unattained iff a contributing
// endpoint is unattained, except that 0 stays attained whenever either
// factor attains 0.
bool mul_endpoint_open(double p, double x, bool x_open, double y, bool y_open) {
    if (!x_open && !y_open) return false;
    if (p == 0.0 && ((x == 0.0 && !x_open) || (y == 0.0 && !y_open))) return false;
    return true;
}

} // namespace

Interval iv_mul(const Interval& a, const Interval& b) {
    if (a.lower < 0 || b.lower < 0)
        raise(errc::domain_error, "iv_mul requires non-negative intervals");
    double lo = a.lower * b.lower;
    double hi = a.upper * b.upper;
    return Interval{lo, hi,
                    mul_endpoint_open(lo, a.lower, a.lower_open, b.lower, b.lower_open),
                    mul_endpoint_open(hi, a.upper, a.upper_open, b.upper, b.upper_open)};
}

Interval iv_div(const Interval& a, const Interval& b) {
    if (a.lower < 0)
        raise(errc::domain_error, "iv_div requires a non-negative numerator");
    if (b.lower <= 0.0 && b.upper >= 0.0)
        raise(errc::division_by_zero_interval, "0 in closure of divisor " + to_string(b));
    if (b.lower < 0)
        raise(errc::domain_error, "iv_div requires a positive divisor");
    double lo = a.lower / b.upper;
    double hi = a.upper / b.lower;
    return Interval{lo, hi,
                    a.lower_open || b.upper_open,
                    a.upper_open || b.lower_open};
}

bool iv_entails(const Interval& specific, const Interval& general) {
    bool lo_ok;
    if (!general.lower_open)
        lo_ok = specific.lower >= general.lower - kEndpointTol;
    else if (specific.lower_open)
        lo_ok = specific.lower >= general.lower;
    else
        lo_ok = specific.lower > general.lower;

    bool hi_ok;
    if (!general.upper_open)
        hi_ok = specific.upper <= general.upper + kEndpointTol;
    else if (specific.upper_open)
        hi_ok = specific.upper <= general.upper;
    else
        hi_ok = specific.upper < general.upper;

    return lo_ok && hi_ok;
}

bool iv_disjoint(const Interval& a, const Interval& b) {
    // a entirely below b?
    if (a.upper < b.lower) return true;
    if (a.upper == b.lower && (a.upper_open || b.lower_open)) return true;
    if (b.upper < a.lower) return true;
    if (b.upper == a.lower && (b.upper_open || a.lower_open)) return true;
    return false;
}

Interval iv_hull(const Interval& a, const Interval& b) {
    double lo; bool lo_open;
    if (a.lower < b.lower || (a.lower == b.lower && !a.lower_open)) {
        lo = a.lower; lo_open = a.lower_open && (a.lower != b.lower || b.lower_open);
    } else {
        lo = b.lower; lo_open = b.lower_open;
    }
    double hi; bool hi_open;
    if (a.upper > b.upper || (a.upper == b.upper && !a.upper_open)) {
        hi = a.upper; hi_open = a.upper_open && (a.upper != b.upper || b.upper_open);
    } else {
        hi = b.upper; hi_open = b.upper_open;
    }
    return Interval{lo, hi, lo_open, hi_open};
}

std::string format_proportion(double v) {
    char buf[32];
    int n = std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::string(buf, buf + n);
}

std::string to_string(const Interval& iv) {
    std::string s;
    s += iv.lower_open ? '(' : '[';
    s += format_proportion(iv.lower);
    s += ", ";
    s += format_proportion(iv.upper);
    s += iv.upper_open ? ')' : ']';
    return s;
}

} // namespace syllogist
