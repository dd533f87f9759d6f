#include <doctest.h>

#include <cmath>

#include "support/gen.hpp"
#include "syllogist/dubois.hpp"
#include "syllogist/errors.hpp"

using namespace syllogist;

TEST_CASE("precise chaining bounds at the crisp corners") {
    Interval aaa = pattern1_precise(1.0, 0.5, 1.0, 0.5);
    CHECK(aaa.lower == doctest::Approx(1.0));
    CHECK(aaa.upper == doctest::Approx(1.0));

    Interval eae = pattern1_precise(1.0, 0.5, 0.0, 0.5);
    CHECK(eae.lower == doctest::Approx(0.0));
    CHECK(eae.upper == doctest::Approx(0.0));

    Interval half = pattern1_precise(0.5, 0.5, 0.5, 0.5);
    CHECK(half.lower == doctest::Approx(0.0));
    CHECK(half.upper == doctest::Approx(1.0));
}

TEST_CASE("upper bound stays sound when the middle term saturates") {
    // B = C ⊆ A with |B| = 0.9|A|: conclusion proportion is exactly 0.9.
    Interval r = pattern1_precise(0.9, 1.0, 1.0, 1.0);
    CHECK(r.lower == doctest::Approx(0.9));
    CHECK(r.upper == doctest::Approx(0.9));

    ProportionConstraint q1 = ProportionConstraint::from_interval(
        atoms_a & atoms_b, atoms_a, Interval::point(0.9));
    ProportionConstraint q1c = ProportionConstraint::from_interval(
        atoms_a & atoms_b, atoms_b, Interval::point(1.0));
    ProportionConstraint q2 = ProportionConstraint::from_interval(
        atoms_b & atoms_c, atoms_b, Interval::point(1.0));
    ProportionConstraint q2c = ProportionConstraint::from_interval(
        atoms_b & atoms_c, atoms_c, Interval::point(1.0));
    RationalRange attained = attained_range(
        {q1, q1c, q2, q2c}, {static_cast<std::uint8_t>(atoms_a & atoms_c), atoms_a}, 30);
    CHECK(attained.lower.to_double() >= r.lower - 1e-9);
    CHECK(attained.upper.to_double() <= r.upper + 1e-9);
}

TEST_CASE("zero converses are rejected") {
    try {
        pattern1_precise(0.5, 0.0, 0.5, 0.5);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::zero_converse);
    }
    CHECK_THROWS_AS(pattern1_precise(1.5, 0.5, 0.5, 0.5), Error);
    CHECK_THROWS_AS(
        pattern1_imprecise(Interval::point(0.5), Interval::closed(0.0, 0.5),
                           Interval::point(0.5), Interval::point(0.5)),
        Error);
}

TEST_CASE("interval premises reproduce the students/young/single conclusion") {
    Pattern1Bounds b = pattern1_imprecise(Interval::closed(0.85, 0.95),
                                          Interval::closed(0.25, 0.35),
                                          Interval::closed(0.90, 1.0),
                                          Interval::closed(0.60, 0.80));
    CHECK(b.conclusion.lower == doctest::Approx(0.51).epsilon(1e-9));
    CHECK(b.conclusion.upper == doctest::Approx(1.0).epsilon(1e-9));
    // corner enumeration and the sweep agree here
    CHECK(std::fabs(b.vertex_lower - b.sweep_lower) <= 1e-6);
    CHECK(std::fabs(b.vertex_upper - b.sweep_upper) <= 1e-6);
}

TEST_CASE("the upper bound can peak strictly inside the box") {
    // min(1, t2, t3, t4) along q1 crosses at q1 = 0.5 with value 5/9, while
    // the best corner gives only 1/9: corner enumeration alone is not enough.
    Pattern1Bounds b = pattern1_imprecise(Interval::closed(0.0, 1.0), Interval::point(0.9),
                                          Interval::point(0.1), Interval::point(0.1));
    CHECK(b.conclusion.upper == doctest::Approx(5.0 / 9.0).epsilon(1e-6));
    CHECK(b.vertex_upper == doctest::Approx(1.0 / 9.0).epsilon(1e-6));
    CHECK(b.conclusion.lower == doctest::Approx(0.0));
}

TEST_CASE("degenerate boxes match the precise formulas") {
    gen::Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        double q1 = gen::unit2(rng), q2 = gen::unit2(rng);
        double c1 = 0.01 + 0.99 * gen::unit2(rng), c2 = 0.01 + 0.99 * gen::unit2(rng);
        Interval precise = pattern1_precise(q1, c1, q2, c2);
        Pattern1Bounds box = pattern1_imprecise(Interval::point(q1), Interval::point(c1),
                                                Interval::point(q2), Interval::point(c2));
        CHECK(box.conclusion.lower == doctest::Approx(precise.lower).epsilon(1e-9));
        CHECK(box.conclusion.upper == doctest::Approx(precise.upper).epsilon(1e-9));
    }
}

TEST_CASE("closed-form bounds contain the attained range of random worlds") {
    gen::Rng rng(77);
    int tested = 0;
    while (tested < 25) {
        VennModel m = gen::model(rng, 5);
        int na = m.count(atoms_a), nb = m.count(atoms_b), nc = m.count(atoms_c);
        int nab = m.count(atoms_a & atoms_b), nbc = m.count(atoms_b & atoms_c);
        if (na == 0 || nb == 0 || nc == 0 || nab == 0 || nbc == 0) continue;
        ++tested;

        double q1 = double(nab) / na, q1c = double(nab) / nb;
        double q2 = double(nbc) / nb, q2c = double(nbc) / nc;
        Interval concl = pattern1_precise(q1, q1c, q2, q2c);
        Interval concl_conv = pattern1_precise_converse(q1, q1c, q2, q2c);

        std::vector<ProportionConstraint> cs = {
            {static_cast<std::uint8_t>(atoms_a & atoms_b), atoms_a, Rational(nab, na),
             Rational(nab, na), false, false},
            {static_cast<std::uint8_t>(atoms_a & atoms_b), atoms_b, Rational(nab, nb),
             Rational(nab, nb), false, false},
            {static_cast<std::uint8_t>(atoms_b & atoms_c), atoms_b, Rational(nbc, nb),
             Rational(nbc, nb), false, false},
            {static_cast<std::uint8_t>(atoms_b & atoms_c), atoms_c, Rational(nbc, nc),
             Rational(nbc, nc), false, false},
        };
        RationalRange fwd = attained_range(
            cs, {static_cast<std::uint8_t>(atoms_a & atoms_c), atoms_a}, 24);
        CHECK(fwd.lower.to_double() >= concl.lower - 1e-9);
        CHECK(fwd.upper.to_double() <= concl.upper + 1e-9);

        RationalRange rev = attained_range(
            cs, {static_cast<std::uint8_t>(atoms_a & atoms_c), atoms_c}, 24);
        CHECK(rev.lower.to_double() >= concl_conv.lower - 1e-9);
        CHECK(rev.upper.to_double() <= concl_conv.upper + 1e-9);
    }
}

TEST_CASE("widening premises never narrows the conclusion") {
    gen::Rng rng(5150);
    for (int i = 0; i < 30; ++i) {
        Interval q1 = gen::interval(rng, false);
        Interval q2 = gen::interval(rng, false);
        Interval c1 = Interval::closed(0.2 + 0.5 * gen::unit2(rng), 0.8);
        Interval c2 = Interval::closed(0.2 + 0.5 * gen::unit2(rng), 0.8);
        auto widen = [](const Interval& iv, double floor) {
            return Interval::closed(std::max(floor, iv.lower - 0.1),
                                    std::min(1.0, iv.upper + 0.1));
        };
        Interval got = pattern1_imprecise(q1, c1, q2, c2).conclusion;
        Interval wide = pattern1_imprecise(widen(q1, 0.0), widen(c1, 0.01),
                                           widen(q2, 0.0), widen(c2, 0.01)).conclusion;
        CHECK(wide.lower <= got.lower + 1e-9);
        CHECK(wide.upper >= got.upper - 1e-9);
    }
}

TEST_CASE("fuzzy chaining: crisp and interval embeddings") {
    auto crisp = [](double v) { return QuantifierKind::precise(v); };
    PatternIInput in{crisp(0.9), crisp(0.5), crisp(0.8), crisp(0.5)};
    TrapezoidalQuantifier t = pattern1_fuzzy(in);
    Interval precise = pattern1_precise(0.9, 0.5, 0.8, 0.5);
    CHECK(t.support_low == doctest::Approx(precise.lower));
    CHECK(t.support_high == doctest::Approx(precise.upper));
    CHECK(t.kernel_low == doctest::Approx(precise.lower));
    CHECK(t.kernel_high == doctest::Approx(precise.upper));

    // interval inputs (kernel == support) stay interval-like
    auto iv = [](double l, double u) {
        return QuantifierKind::imprecise(Interval::closed(l, u));
    };
    PatternIInput in2{iv(0.85, 0.95), iv(0.25, 0.35), iv(0.9, 1.0), iv(0.6, 0.8)};
    TrapezoidalQuantifier t2 = pattern1_fuzzy(in2);
    CHECK(t2.kernel_low == doctest::Approx(t2.support_low));
    CHECK(t2.kernel_high == doctest::Approx(t2.support_high));
    CHECK(t2.kernel_low == doctest::Approx(0.51));
}

TEST_CASE("fuzzy chaining on the widened students example") {
    // supports are the kernel intervals widened by 0.05 on each side
    auto fz = [](double a, double b, double c, double d) {
        return QuantifierKind::fuzzy(TrapezoidalQuantifier::make(a, b, c, d));
    };
    PatternIInput in{fz(0.80, 0.85, 0.95, 1.00), fz(0.20, 0.25, 0.35, 0.40),
                     fz(0.85, 0.90, 1.00, 1.00), fz(0.55, 0.60, 0.80, 0.85)};
    TrapezoidalQuantifier t = pattern1_fuzzy(in);

    CHECK(t.kernel_low == doctest::Approx(0.51).epsilon(1e-9));
    CHECK(t.kernel_high == doctest::Approx(1.0));
    // support lower bound by direct substitution: 0.80 * (1 - 0.15/0.20)
    CHECK(t.support_low == doctest::Approx(0.80 * (1.0 - 0.15 / 0.20)).epsilon(1e-9));
    CHECK(t.support_high == doctest::Approx(1.0));
}

TEST_CASE("conjunction pattern bounds through the oracle") {
    // everything forced into the intersection
    Pattern23Input all_in;
    all_in.pattern = 3;
    all_in.q2_conv = Interval::point(1.0);
    all_in.q3_conv = Interval::point(1.0);
    RationalRange r = pattern23_bounds(all_in, 20);
    CHECK(r.lower == Rational(1));
    CHECK(r.upper == Rational(1));

    // chained inclusions: As and Bs are all Cs
    Pattern23Input chain;
    chain.pattern = 2;
    chain.q1 = Interval::point(1.0);
    chain.q1_conv = Interval::make(0.0, 1.0, true, false);
    chain.q2 = Interval::point(1.0);
    chain.q3 = Interval::make(0.0, 1.0, true, false);
    RationalRange rc = pattern23_bounds(chain, 20);
    CHECK(rc.lower == Rational(1));
    CHECK(rc.upper == Rational(1));

    // the children/young/single bounds
    Pattern23Input frozen4;
    frozen4.pattern = 3;
    frozen4.q2_conv = Interval::closed(0.05, 0.10);
    frozen4.q3_conv = Interval::closed(0.15, 0.20);
    RationalRange r4 = pattern23_bounds(frozen4, 60);
    CHECK(r4.lower == Rational(0));
    CHECK(r4.upper == Rational(1, 10));

    // missing slots are rejected
    Pattern23Input missing;
    missing.pattern = 3;
    missing.q2_conv = Interval::point(0.5);
    CHECK_THROWS_AS(pattern23_bounds(missing, 20), Error);

    // denominator forced empty
    Pattern23Input undef;
    undef.pattern = 2;
    undef.q1 = Interval::point(0.0);
    undef.q1_conv = Interval::closed(0.0, 1.0);
    undef.q2 = Interval::closed(0.0, 1.0);
    undef.q3 = Interval::closed(0.0, 1.0);
    try {
        pattern23_bounds(undef, 15);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::undefined_proportion);
    }
}

TEST_CASE("particular conjunction bounds equal the overlap formula on grid inputs") {
    gen::Rng rng(8888);
    for (int i = 0; i < 15; ++i) {
        auto grid05 = [&](double lo_min) {
            int lo = std::uniform_int_distribution<int>(int(lo_min * 20), 20)(rng);
            int hi = std::uniform_int_distribution<int>(lo, 20)(rng);
            return Interval::closed(lo / 20.0, hi / 20.0);
        };
        Interval a = grid05(0.0), b = grid05(0.0);
        Pattern23Input in;
        in.pattern = 3;
        in.q2_conv = a;
        in.q3_conv = b;
        RationalRange r = pattern23_bounds(in, 60);
        double exp_lo = std::max(0.0, a.lower + b.lower - 1.0);
        double exp_hi = std::min(a.upper, b.upper);
        CHECK(r.lower.to_double() == doctest::Approx(exp_lo).epsilon(1e-12));
        CHECK(r.upper.to_double() == doctest::Approx(exp_hi).epsilon(1e-12));
    }
}
