#include <doctest.h>

#include "support/ep_oracle.hpp"
#include "support/gen.hpp"
#include "syllogist/errors.hpp"
#include "syllogist/fuzzy_number.hpp"

using namespace syllogist;

namespace {
const TrapezoidalQuantifier kMost = TrapezoidalQuantifier::make(0.7, 0.8, 0.9, 1.0);
}

TEST_CASE("alpha-cut construction from a trapezoid") {
    AlphaCutNumber n = AlphaCutNumber::from_trapezoid(kMost);
    CHECK(n.resolution() == kDefaultAlphaLevels);
    CHECK(n.support() == Interval::closed(0.7, 1.0));
    CHECK(n.kernel() == Interval::closed(0.8, 0.9));
    CHECK(n.is_nested());
    // interior level: linear interpolation
    const auto& mid = n.levels()[5];
    CHECK(mid.alpha == doctest::Approx(0.5));
    CHECK(mid.cut.lower == doctest::Approx(0.75));
    CHECK(mid.cut.upper == doctest::Approx(0.95));
}

TEST_CASE("product of most with itself") {
    AlphaCutNumber m = AlphaCutNumber::from_trapezoid(kMost);
    AlphaCutNumber sq = fz_mul(m, m);
    CHECK(sq.support().lower == doctest::Approx(0.49).epsilon(1e-12));
    CHECK(sq.support().upper == doctest::Approx(1.0));
    CHECK(sq.kernel().lower == doctest::Approx(0.64).epsilon(1e-12));
    CHECK(sq.kernel().upper == doctest::Approx(0.81).epsilon(1e-12));
    CHECK(sq.is_nested());

    // cross-check against the brute-force extension principle
    auto ep = ep::ep_oracle(kMost, kMost, ep::Op::Mul);
    CHECK(std::fabs(ep.sup_lo - sq.support().lower) <= 2e-3);
    CHECK(std::fabs(ep.sup_hi - sq.support().upper) <= 2e-3);
    CHECK(std::fabs(ep.ker_lo - sq.kernel().lower) <= 2e-3);
    CHECK(std::fabs(ep.ker_hi - sq.kernel().upper) <= 2e-3);
}

TEST_CASE("crisp identities hold at every level") {
    AlphaCutNumber x = AlphaCutNumber::from_trapezoid(kMost);
    AlphaCutNumber zero = AlphaCutNumber::crisp(0.0);
    AlphaCutNumber one = AlphaCutNumber::crisp(1.0);
    AlphaCutNumber sum = fz_add(x, zero);
    AlphaCutNumber prod = fz_mul(x, one);
    for (size_t i = 0; i < x.levels().size(); ++i) {
        CHECK(sum.levels()[i].cut == x.levels()[i].cut);
        CHECK(prod.levels()[i].cut == x.levels()[i].cut);
    }
}

TEST_CASE("clamp floor") {
    AlphaCutNumber neg =
        AlphaCutNumber::from_trapezoid(TrapezoidalQuantifier::make(-0.3, -0.1, 0.2, 0.4));
    AlphaCutNumber clamped = fz_clamp_floor(neg, 0.0);
    CHECK(clamped.support() == Interval::closed(0.0, 0.4));
    CHECK(clamped.kernel() == Interval::closed(0.0, 0.2));

    AlphaCutNumber m = AlphaCutNumber::from_trapezoid(kMost);
    AlphaCutNumber same = fz_clamp_floor(m, 0.0);
    CHECK(same.support() == m.support());
    CHECK(same.kernel() == m.kernel());
}

TEST_CASE("twice-most minus one") {
    AlphaCutNumber m = AlphaCutNumber::from_trapezoid(kMost);
    AlphaCutNumber one = AlphaCutNumber::crisp(1.0);
    AlphaCutNumber r = fz_clamp_floor(fz_sub(fz_add(m, m), one), 0.0);
    CHECK(r.support().lower == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(r.support().upper == doctest::Approx(1.0));
    CHECK(r.kernel().lower == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(r.kernel().upper == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("defuzz bounds") {
    AlphaCutNumber m = AlphaCutNumber::from_trapezoid(kMost);
    auto [sup_e, ker_e] = defuzz_bounds(BoundedQuantifier::exact(m));
    CHECK(sup_e == Interval::closed(0.7, 1.0));
    CHECK(ker_e == Interval::closed(0.8, 0.9));

    auto [sup_a, ker_a] = defuzz_bounds(BoundedQuantifier::at_least(fz_mul(m, m)));
    CHECK(sup_a.lower == doctest::Approx(0.49));
    CHECK(sup_a.upper == 1.0);
    CHECK(ker_a.lower == doctest::Approx(0.64));
    CHECK(ker_a.upper == 1.0);

    auto [sup_c, ker_c] = defuzz_bounds(BoundedQuantifier::exact(AlphaCutNumber::crisp(0.5)));
    CHECK(sup_c == Interval::point(0.5));
    CHECK(ker_c == Interval::point(0.5));
}

TEST_CASE("mismatched grids are rejected") {
    AlphaCutNumber a = AlphaCutNumber::from_trapezoid(kMost, 11);
    AlphaCutNumber b = AlphaCutNumber::from_trapezoid(kMost, 7);
    try {
        fz_add(a, b);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::mismatched_alpha_grid);
    }
}

TEST_CASE("support/kernel of fuzzy arithmetic equals interval arithmetic") {
    gen::Rng rng(123);
    for (int i = 0; i < 40; ++i) {
        TrapezoidalQuantifier ta = gen::trapezoid(rng);
        TrapezoidalQuantifier tb = gen::trapezoid(rng);
        AlphaCutNumber a = AlphaCutNumber::from_trapezoid(ta);
        AlphaCutNumber b = AlphaCutNumber::from_trapezoid(tb);

        AlphaCutNumber sum = fz_add(a, b), diff = fz_sub(a, b), prod = fz_mul(a, b);
        CHECK(sum.is_nested());
        CHECK(diff.is_nested());
        CHECK(prod.is_nested());

        auto close = [](const Interval& x, const Interval& y) {
            return std::fabs(x.lower - y.lower) <= 1e-9 && std::fabs(x.upper - y.upper) <= 1e-9;
        };
        CHECK(close(sum.support(), iv_add(ta.support(), tb.support(), false)));
        CHECK(close(sum.kernel(), iv_add(ta.kernel(), tb.kernel(), false)));
        CHECK(close(diff.support(), iv_sub(ta.support(), tb.support(), false)));
        CHECK(close(diff.kernel(), iv_sub(ta.kernel(), tb.kernel(), false)));
        CHECK(close(prod.support(), iv_mul(ta.support(), tb.support())));
        CHECK(close(prod.kernel(), iv_mul(ta.kernel(), tb.kernel())));
    }
}

TEST_CASE("extension-principle oracle agrees on a few random pairs") {
    gen::Rng rng(456);
    for (int i = 0; i < 5; ++i) {
        TrapezoidalQuantifier ta = gen::trapezoid(rng);
        TrapezoidalQuantifier tb = gen::trapezoid(rng);
        AlphaCutNumber a = AlphaCutNumber::from_trapezoid(ta);
        AlphaCutNumber b = AlphaCutNumber::from_trapezoid(tb);

        struct Case { ep::Op op; AlphaCutNumber got; };
        Case cases[] = {{ep::Op::Add, fz_add(a, b)},
                        {ep::Op::Sub, fz_sub(a, b)},
                        {ep::Op::Mul, fz_mul(a, b)}};
        for (const auto& c : cases) {
            auto ref = ep::ep_oracle(ta, tb, c.op);
            CHECK(std::fabs(ref.sup_lo - c.got.support().lower) <= 2e-3);
            CHECK(std::fabs(ref.sup_hi - c.got.support().upper) <= 2e-3);
            CHECK(std::fabs(ref.ker_lo - c.got.kernel().lower) <= 2e-3);
            CHECK(std::fabs(ref.ker_hi - c.got.kernel().upper) <= 2e-3);
        }
    }
}
