#include "syllogist/dubois.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "syllogist/errors.hpp"

namespace syllogist {

namespace {

void check_proportion(double v, const char* slot) {
    if (!(v >= 0.0 && v <= 1.0))
        raise(errc::domain_error, std::string(slot) + " must lie in [0,1]");
}

double eq_lower(double q1, double q2, double q1c) {
    return q1 * std::max(0.0, 1.0 - (1.0 - q2) / q1c);
}

double eq_upper(double q1, double q2, double q1c, double q2c) {
    double chain = q1 * q2 / q1c;                       // P(C∩B) scaled by P(A)
    double t2 = 1.0 - q1 + chain;
    double t3 = chain / q2c;
    double t4 = q1 + chain * (1.0 - q2c) / q2c;
    return std::min(std::min(1.0, t2), std::min(t3, t4));
}

constexpr double kConsistencyTol = 1e-9;

Interval finish_bounds(double lower, double upper) {
    if (lower > upper + kConsistencyTol)
        raise(errc::inconsistent_premises,
              "conclusion lower bound " + format_proportion(lower) +
                  " exceeds upper bound " + format_proportion(upper));
    return Interval::closed(std::min(lower, upper), upper);
}

} // namespace

Interval pattern1_precise(double q1, double q1_conv, double q2, double q2_conv) {
    check_proportion(q1, "q1");
    check_proportion(q1_conv, "q1'");
    check_proportion(q2, "q2");
    check_proportion(q2_conv, "q2'");
    if (q1_conv <= 0.0 || q2_conv <= 0.0)
        raise(errc::zero_converse, "converse proportions must be positive");
    return finish_bounds(eq_lower(q1, q2, q1_conv), eq_upper(q1, q2, q1_conv, q2_conv));
}

Interval pattern1_precise_converse(double q1, double q1_conv, double q2, double q2_conv) {
    // chain read from C through B to A
    return pattern1_precise(q2_conv, q2, q1_conv, q1);
}

namespace {

struct Box {
    // slot order: q1, q1', q2, q2'
    std::array<double, 4> lo;
    std::array<double, 4> hi;
};

double eval_upper(const std::array<double, 4>& x) {
    return eq_upper(x[0], x[2], x[1], x[3]);
}
double eval_lower(const std::array<double, 4>& x) {
    return eq_lower(x[0], x[2], x[1]);
}

// Effective closed box for one input interval: open endpoints are pulled in
// by delta (the epsilon reading of strict bounds).
void effective_dim(const Interval& iv, double delta, bool converse, double& lo, double& hi) {
    lo = iv.lower;
    hi = iv.upper;
    if (iv.lower_open) lo = std::min(iv.lower + delta, hi);
    if (iv.upper_open) hi = std::max(iv.upper - delta, lo);
    if (converse && lo <= 0.0) {
        if (!iv.lower_open)
            raise(errc::zero_converse,
                  "converse interval " + to_string(iv) + " reaches 0 with a closed bound");
        lo = std::min(delta, hi);
    }
    if (lo > hi) lo = hi;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> pts;
    if (n <= 1 || hi <= lo) {
        pts.push_back(lo);
        return pts;
    }
    pts.reserve(n);
    for (int i = 0; i < n; ++i)
        pts.push_back(lo + (hi - lo) * i / (n - 1));
    pts.back() = hi;
    return pts;
}

// Maximizes f along one coordinate by ternary search; each coordinate slice
// of min(1, t2, t3, t4) is a min of monotone/linear terms, hence unimodal.
template <typename F>
double ternary_max_coord(F&& f, std::array<double, 4>& x, int dim, double lo, double hi) {
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
        double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
        x[dim] = m1;
        double f1 = f(x);
        x[dim] = m2;
        double f2 = f(x);
        if (f1 < f2) a = m1; else b = m2;
    }
    x[dim] = 0.5 * (a + b);
    return f(x);
}

} // namespace

Pattern1Bounds pattern1_imprecise(const Interval& q1, const Interval& q1_conv,
                                  const Interval& q2, const Interval& q2_conv,
                                  const Pattern1Options& opt) {
    for (const Interval* iv : {&q1, &q1_conv, &q2, &q2_conv}) {
        check_proportion(iv->lower, "interval lower bound");
        check_proportion(iv->upper, "interval upper bound");
    }

    Box box{};
    effective_dim(q1, opt.delta, false, box.lo[0], box.hi[0]);
    effective_dim(q1_conv, opt.delta, true, box.lo[1], box.hi[1]);
    effective_dim(q2, opt.delta, false, box.lo[2], box.hi[2]);
    effective_dim(q2_conv, opt.delta, true, box.lo[3], box.hi[3]);

    Pattern1Bounds out;

    // The lower expression is nondecreasing in q1, q2 and q1', so its box
    // minimum sits at the all-lower corner.
    out.vertex_lower = eval_lower({box.lo[0], box.lo[1], box.lo[2], box.lo[3]});

    double vertex_upper = -1.0;
    for (int corner = 0; corner < 16; ++corner) {
        std::array<double, 4> x;
        for (int d = 0; d < 4; ++d)
            x[d] = (corner >> d) & 1 ? box.hi[d] : box.lo[d];
        vertex_upper = std::max(vertex_upper, eval_upper(x));
    }
    out.vertex_upper = vertex_upper;

    // Grid sweep.  Degenerate dims collapse to a single point; wide boxes are
    // coarsened to stay inside the evaluation budget before refinement.
    std::array<std::vector<double>, 4> pts;
    std::array<int, 4> counts;
    for (int d = 0; d < 4; ++d) {
        double width = box.hi[d] - box.lo[d];
        int n = width <= 0 ? 1 : static_cast<int>(std::lround(width / opt.grid_step)) + 1;
        counts[d] = std::max(1, n);
    }
    auto total = [&] {
        long long t = 1;
        for (int d = 0; d < 4; ++d) t *= counts[d];
        return t;
    };
    while (total() > opt.max_grid_points) {
        int widest = 0;
        for (int d = 1; d < 4; ++d)
            if (counts[d] > counts[widest]) widest = d;
        counts[widest] = std::max(2, counts[widest] / 2);
    }
    for (int d = 0; d < 4; ++d) pts[d] = linspace(box.lo[d], box.hi[d], counts[d]);

    double sweep_upper = -1.0, sweep_lower = 2.0;
    std::array<double, 4> best_seed = {box.lo[0], box.lo[1], box.lo[2], box.lo[3]};
    std::array<double, 4> x;
    for (double a : pts[0]) {
        x[0] = a;
        for (double b : pts[1]) {
            x[1] = b;
            for (double c : pts[2]) {
                x[2] = c;
                for (double dd : pts[3]) {
                    x[3] = dd;
                    double up = eval_upper(x);
                    if (up > sweep_upper) {
                        sweep_upper = up;
                        best_seed = x;
                    }
                    sweep_lower = std::min(sweep_lower, eval_lower(x));
                }
            }
        }
    }
    out.sweep_upper = sweep_upper;
    out.sweep_lower = sweep_lower;

    // Local refinement: coordinate ascent from the best grid point.
    double refined = sweep_upper;
    for (int pass = 0; pass < 12; ++pass) {
        double before = refined;
        for (int d = 0; d < 4; ++d)
            refined = std::max(refined, ternary_max_coord(eval_upper, best_seed, d,
                                                          box.lo[d], box.hi[d]));
        if (refined - before < 1e-13) break;
    }

    double upper = std::max({vertex_upper, sweep_upper, refined});
    out.conclusion = finish_bounds(out.vertex_lower, upper);
    return out;
}

Pattern1Bounds pattern1_imprecise(const PatternIInput& in, const Pattern1Options& opt) {
    for (const QuantifierKind* q : {&in.q1, &in.q1_conv, &in.q2, &in.q2_conv}) {
        if (q->absolute)
            raise(errc::absolute_quantifier, "chaining patterns need proportional quantifiers");
        if (q->is_fuzzy())
            raise(errc::domain_error, "fuzzy slots take the pattern1_fuzzy route");
    }
    return pattern1_imprecise(in.q1.as_interval(), in.q1_conv.as_interval(),
                              in.q2.as_interval(), in.q2_conv.as_interval(), opt);
}

TrapezoidalQuantifier pattern1_fuzzy(const PatternIInput& in, const Pattern1Options& opt) {
    for (const QuantifierKind* q : {&in.q1, &in.q1_conv, &in.q2, &in.q2_conv})
        if (q->absolute)
            raise(errc::absolute_quantifier, "chaining patterns need proportional quantifiers");

    auto t1 = in.q1.as_trapezoid(), t1c = in.q1_conv.as_trapezoid();
    auto t2 = in.q2.as_trapezoid(), t2c = in.q2_conv.as_trapezoid();

    Interval ker = pattern1_imprecise(t1.kernel(), t1c.kernel(), t2.kernel(), t2c.kernel(), opt)
                       .conclusion;
    Interval sup = pattern1_imprecise(t1.support(), t1c.support(), t2.support(), t2c.support(), opt)
                       .conclusion;

    if (ker.lower < sup.lower - kEndpointTol || ker.upper > sup.upper + kEndpointTol)
        raise(errc::kernel_not_in_support,
              "independent support/kernel runs produced kernel " + to_string(ker) +
                  " outside support " + to_string(sup));
    double klo = std::clamp(ker.lower, sup.lower, sup.upper);
    double khi = std::clamp(ker.upper, klo, sup.upper);
    return TrapezoidalQuantifier::make(sup.lower, klo, khi, sup.upper);
}

RationalRange pattern23_bounds(const Pattern23Input& in, int total_max) {
    if (in.pattern != 2 && in.pattern != 3)
        raise(errc::domain_error, "pattern must be 2 or 3");

    auto need = [&](const std::optional<Interval>& slot, const char* name) {
        if (!slot)
            raise(errc::domain_error,
                  std::string("missing premise quantifier ") + name + " for this version");
    };
    if (in.general) {
        need(in.q1, "q1"); need(in.q1_conv, "q1'");
        need(in.q2, "q2"); need(in.q2_conv, "q2'");
        need(in.q3, "q3"); need(in.q3_conv, "q3'");
    } else if (in.pattern == 2) {
        need(in.q1, "q1"); need(in.q1_conv, "q1'"); need(in.q2, "q2"); need(in.q3, "q3");
    } else {
        need(in.q2_conv, "q2'"); need(in.q3_conv, "q3'");
    }

    std::vector<ProportionConstraint> cs;
    auto add = [&](const std::optional<Interval>& slot, std::uint8_t num, std::uint8_t den) {
        if (slot) cs.push_back(ProportionConstraint::from_interval(num, den, *slot));
    };
    add(in.q1, atoms_a & atoms_b, atoms_a);
    add(in.q1_conv, atoms_a & atoms_b, atoms_b);
    add(in.q2, atoms_b & atoms_c, atoms_b);
    add(in.q2_conv, atoms_b & atoms_c, atoms_c);
    add(in.q3, atoms_a & atoms_c, atoms_a);
    add(in.q3_conv, atoms_a & atoms_c, atoms_c);

    ProportionTarget target;
    target.num_mask = atoms_a & atoms_b & atoms_c;
    target.den_mask = in.pattern == 2 ? (atoms_a & atoms_b) : atoms_c;
    return attained_range(cs, target, total_max);
}

} // namespace syllogist
