#include <catch2/catch_amalgamated.hpp>

#include <cocompact/bowen.hpp>
#include <cocompact/generators.hpp>

using namespace cocompact;

namespace {

const compact_interval unit{rational(0), rational(1)};

// Independent arithmetic oracle for the doubling map: with step = eps/(4*2^(n-1))
// every d_n ball has radius exactly 4 grid cells, so the sweep advances in
// strides of 5 and the count is ceil(points / 5).
std::size_t doubling_stride_count(long e, std::size_t n) {
    const unsigned long long npts = (1ull << (n + static_cast<unsigned>(e) + 1)) + 1;
    return static_cast<std::size_t>((npts + 4) / 5);
}

}  // namespace

TEST_CASE("dn_metric") {
    const auto dbl = piecewise_affine::doubling();
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(dn_metric(dbl, rational(0), rational(1, 100), n) ==
              rational::pow2(static_cast<long>(n) - 1) * rational(1, 100));
    CHECK(dn_metric(piecewise_affine::identity(), rational(-3), rational(4), 7) == rational(7));
    // tent: orbit of 0 stays at 0, orbit of 1/2 goes 1/2 -> 1, so d_2 = 1
    CHECK(dn_metric(piecewise_affine::tent(), rational(0), rational(1, 2), 2) == rational(1));
    CHECK_THROWS_AS(dn_metric(dbl, rational(0), rational(1), 0), invalid_input);
}

TEST_CASE("greedy sweep on the identity map") {
    const auto id = piecewise_affine::identity();
    // eps = 1/4, grid 1/16: stride-5 sweep -> centers 0, 5/16, 10/16, 15/16
    CHECK(spanning_number(id, unit, 3, rational(1, 4), rational(1, 16)) == 4);
    // constant in n
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(spanning_number(id, unit, n, rational(1, 4), rational(1, 16)) == 4);
    // eps = 1/3 separated example: three points survive
    CHECK(separated_number(id, unit, 2, rational(1, 3), rational(1, 12)) == 3);
    // resolution rule enforced
    CHECK_THROWS_AS(spanning_number(id, unit, 2, rational(1, 4), rational(1, 8)), invalid_input);
}

TEST_CASE("doubling sweep matches the stride oracle exactly") {
    const auto dbl = piecewise_affine::doubling();
    const grid_rule rule;
    for (long e : {2L, 4L}) {
        const rational eps = rational::pow2(-e);
        for (std::size_t n = 2; n <= 8; ++n) {
            const rational step = rule.step(dbl, eps, n);
            CHECK(step == eps / (rational(4) * rational::pow2(static_cast<long>(n) - 1)));
            CHECK(spanning_number(dbl, unit, n, eps, step) == doubling_stride_count(e, n));
        }
    }
}

TEST_CASE("greedy counts sit between the exhaustive grid bounds") {
    sampler rng(90210);
    int runs = 0;
    for (int t = 0; t < 80 && runs < 50; ++t) {
        const piecewise_affine f = rng.perfect_map(2);
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 3));
        const rational eps(1, 3);
        const rational step(1, 12);  // 13 grid points on [0,1]
        const std::size_t brute_r = brute_force_rn(f, unit, n, eps, step);
        const std::size_t brute_s = brute_force_sn(f, unit, n, eps, step);
        const std::size_t greedy = spanning_number(f, unit, n, eps, step);
        CHECK(brute_r <= greedy);   // greedy spans the grid, optimum cannot be larger
        CHECK(greedy <= brute_s);   // greedy centers are pairwise separated
        CHECK(brute_r <= brute_s);  // a maximal separated set spans
        ++runs;
    }
    CHECK(runs == 50);
}

TEST_CASE("classical chain: s_n(eps) <= r_n(eps/2) on the grid") {
    sampler rng(424242);
    for (int t = 0; t < 25; ++t) {
        const piecewise_affine f = rng.perfect_map(2);
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 3));
        const rational eps(1, 2);
        const rational step(1, 12);
        CHECK(brute_force_sn(f, unit, n, eps, step) <= brute_force_rn(f, unit, n, eps / rational(2), step));
    }
}

TEST_CASE("single point and oversized eps") {
    const auto dbl = piecewise_affine::doubling();
    const compact_interval pt{rational(1, 3), rational(1, 3)};
    CHECK(spanning_number(dbl, pt, 4, rational(1, 8), rational(1, 32)) == 1);
    // n = 1, eps beyond the diameter: one center sees everything
    CHECK(brute_force_rn(piecewise_affine::identity(), unit, 1, rational(2), rational(1, 12)) == 1);
    CHECK(brute_force_sn(piecewise_affine::identity(), unit, 1, rational(2), rational(1, 12)) == 1);
}

TEST_CASE("growth_rate fits slopes of log counts") {
    std::vector<spanning_record> recs;
    for (std::size_t n = 3; n <= 9; ++n) {
        spanning_record r;
        r.n = n;
        r.r_hat = static_cast<std::size_t>(7) << n;  // 7 * 2^n
        r.s_hat = 5;                                 // constant
        recs.push_back(r);
    }
    const auto [slope, se] = growth_rate(recs, false);
    CHECK(slope == Catch::Approx(std::log(2.0)));
    CHECK(se == Catch::Approx(0.0).margin(1e-12));
    const auto [slope_s, se_s] = growth_rate(recs, true);
    CHECK(slope_s == Catch::Approx(0.0).margin(1e-12));
    recs.resize(2);
    CHECK_THROWS_AS(growth_rate(recs, false), invalid_input);
}

TEST_CASE("r_hat is monotone in n and in eps for the doubling map") {
    const auto dbl = piecewise_affine::doubling();
    const grid_rule rule;
    std::vector<std::size_t> by_n;
    for (std::size_t n = 2; n <= 9; ++n)
        by_n.push_back(spanning_number(dbl, unit, n, rational(1, 16), rule.step(dbl, rational(1, 16), n)));
    for (std::size_t i = 0; i + 1 < by_n.size(); ++i) CHECK(by_n[i] <= by_n[i + 1]);
    for (std::size_t n : {3u, 6u}) {
        const std::size_t coarse = spanning_number(dbl, unit, n, rational(1, 8), rule.step(dbl, rational(1, 8), n));
        const std::size_t fine = spanning_number(dbl, unit, n, rational(1, 32), rule.step(dbl, rational(1, 32), n));
        CHECK(coarse <= fine);
    }
}

TEST_CASE("bowen_estimate: identity has rate zero") {
    const auto est = compute_bowen_estimate(piecewise_affine::identity(), unit,
                                            {rational(1, 4), rational(1, 8)}, 2, 8);
    CHECK(est.value == Catch::Approx(0.0).margin(1e-9));
    for (const auto& er : est.ladder) {
        CHECK(er.spanning_rate == Catch::Approx(0.0).margin(1e-9));
        CHECK(er.separated_rate == Catch::Approx(0.0).margin(1e-9));
    }
}

TEST_CASE("bowen_estimate: doubling map reaches log 2") {
    const auto est = compute_bowen_estimate(piecewise_affine::doubling(), unit,
                                            {rational::pow2(-4), rational::pow2(-6)}, 4, 10);
    for (const auto& er : est.ladder) {
        CHECK(er.spanning_rate == Catch::Approx(std::log(2.0)).margin(0.1));
        CHECK(er.separated_rate == Catch::Approx(std::log(2.0)).margin(0.1));
    }
    CHECK(est.value >= std::log(2.0) - 0.1);
    CHECK(est.monotone_trend);
}

TEST_CASE("bowen_estimate: tent map reaches log 2") {
    const auto est = compute_bowen_estimate(piecewise_affine::tent(), unit,
                                            {rational::pow2(-3), rational::pow2(-5)}, 4, 9);
    CHECK(est.value == Catch::Approx(std::log(2.0)).margin(0.15));
}

TEST_CASE("bowen_estimate validates its ladder") {
    CHECK_THROWS_AS(compute_bowen_estimate(piecewise_affine::identity(), unit, {}, 2, 8), invalid_input);
    CHECK_THROWS_AS(compute_bowen_estimate(piecewise_affine::identity(), unit,
                                           {rational(1, 8), rational(1, 4)}, 2, 8),
                    invalid_input);
    CHECK_THROWS_AS(compute_bowen_estimate(piecewise_affine::identity(), unit, {rational(1, 4)}, 3, 4),
                    invalid_input);
}
