// Acceptance suite: every shipped claim about the library, one line each.
// Each criterion pins its tolerances in code; the binary exits nonzero if
// any line fails.

#include <cocompact/cocompact.hpp>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace cocompact;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::printf("criterion %2d [%s] %s\n", criterion, pass ? "PASS" : "FAIL", what.c_str());
    if (!pass) ++failures;
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

// 1. doubling map, default family, n_max = 20: sup of estimates <= 0.05,
//    every N_n exact and at most linear in n, under 60 s.
void criterion_1() {
    const auto t0 = clock_type::now();
    const auto family = cover_family(space::real_line());
    const auto sup = entropy_sup(piecewise_affine::doubling(), family, 20);
    bool linear = true, exact = true;
    for (const auto& e : sup.entries)
        for (const auto& r : e.sequence.rows) {
            exact = exact && r.exact;
            linear = linear && r.subcover_size <= e.sequence.rows.front().subcover_size + 3 * r.n;
        }
    const double elapsed = seconds_since(t0);
    const bool pass = sup.value <= 0.05 && linear && exact && elapsed < 60.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "doubling cover entropy: sup estimate %.6f <= 0.05, N_n exact and linear, %.1fs < 60s",
                  sup.value, elapsed);
    report(1, pass, buf);
}

// 2. doubling Bowen entropy on [0,1], eps in {2^-4, 2^-6, 2^-8}, n = 4..12:
//    both slope families within log 2 +- 0.1 and the estimate at least
//    log 2 - 0.1, a strict gap above criterion 1.
void criterion_2() {
    const auto est = compute_bowen_estimate(piecewise_affine::doubling(),
                                            compact_interval(rational(0), rational(1)),
                                            {rational::pow2(-4), rational::pow2(-6), rational::pow2(-8)}, 4, 12);
    const double l2 = std::log(2.0);
    bool slopes_ok = true;
    for (const auto& er : est.ladder)
        slopes_ok = slopes_ok && std::abs(er.spanning_rate - l2) <= 0.1 && std::abs(er.separated_rate - l2) <= 0.1;
    const bool pass = slopes_ok && est.value >= l2 - 0.1 && est.value > 0.05;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "doubling Bowen entropy: estimate %.6f within log2 +- 0.1, strictly above the cover value",
                  est.value);
    report(2, pass, buf);
}

// 3. full shifts on p in {2,3,5}: cover a_n = n log p with N_n = p^n exactly,
//    and the combinatorial Bowen rate within 1e-6 of log p.
void criterion_3() {
    bool pass = true;
    for (unsigned p : {2u, 3u, 5u}) {
        const shift_space s(p, 28);
        const auto seq = shift_cover_entropy(s, 12);
        std::size_t expect = 1;
        for (const auto& r : seq.rows) {
            expect *= p;
            pass = pass && r.exact && r.subcover_size == expect &&
                   std::abs(r.log_count - static_cast<double>(r.n) * std::log(static_cast<double>(p))) < 1e-9;
        }
        const auto bowen = shift_bowen_entropy(s, {rational(1, 2), rational(1, 4), rational(1, 16)}, 4, 12);
        pass = pass && std::abs(bowen.value - std::log(static_cast<double>(p))) < 1e-6;
    }
    report(3, pass, "full shifts p in {2,3,5}: a_n = n log p exactly, Bowen rate within 1e-6 of log p");
}

// 4. tent map powers m in {2,3}: estimate of T^m within 5% of m * estimate of
//    T, and exact integer N equality along the join identity for all mn <= 12.
void criterion_4() {
    const finite_cover tent_cover(space::compact(rational(0), rational(1)),
                                  {interval_set::of(rational(-1), rational(3, 5)),
                                   interval_set::of(rational(2, 5), rational(2))});
    sequence_options opts;
    opts.subcover.exact_threshold = 8192;
    bool pass = true;
    std::string detail;
    for (std::size_t m : {2u, 3u}) {
        const auto rep = verify_power(piecewise_affine::tent(), tent_cover, m, 12 / m, 0.05, opts);
        pass = pass && rep.identity_holds && rep.pass;
        detail += (detail.empty() ? "" : ", ") + std::string("m=") + std::to_string(m) + " gap " +
                  fmt(rep.relative_gap);
    }
    report(4, pass, "tent powers: N identity exact for mn <= 12; estimates within 5% (" + detail + ")");
}

// 5. tent system on [0,1] inside its extension to R: N_sub <= N_whole row by
//    row for n <= 10, all values exact.
void criterion_5() {
    const compact_interval unit(rational(0), rational(1));
    const finite_cover tent_cover(space::compact(unit),
                                  {interval_set::of(rational(-1), rational(3, 5)),
                                   interval_set::of(rational(2, 5), rational(2))});
    sequence_options opts;
    opts.subcover.exact_threshold = 8192;
    const auto rep = verify_subsystem(piecewise_affine::tent(), unit, tent_cover, 10, opts);
    report(5, rep.pass, "tent subsystem: N_sub <= N_whole for every n <= 10");
}

// 6. conjugation by h(x) = x + 1: integer N equality along both pullback
//    chains for all n <= 12 and every default-family cover.
void criterion_6() {
    const auto family = cover_family(space::real_line());
    const auto rep = verify_conjugacy(piecewise_affine::doubling(), piecewise_affine::linear(2, -1),
                                      piecewise_affine::linear(1, 1), family, 12);
    report(6, rep.pass && rep.intertwines,
           "conjugacy x -> x+1: N values agree along both chains, n <= 12, all family covers");
}

// 7. 200 seeded random co-compact covers: delta > 0 and 10^4 containment
//    trials each.
void criterion_7() {
    const auto rep = verify_lebesgue_theorem(42, 200, 10000);
    report(7, rep.pass, "Lebesgue numbers: 200 random co-compact covers, delta > 0, 10^4 trials each");
}

// 8. N(join at depth n) <= n * r_n(delta/3, K, f) + 1 for the doubling and
//    extended tent systems with co-compact covers, n = 1..8.
void criterion_8() {
    const auto rep = verify_bound_theorem(8);
    report(8, rep.pass, "spanning-cover bound: exact N vs n * r_hat + 1 for n = 1..8, doubling and tent");
}

// 9. exact solver vs exhaustive enumeration on 200 random covers with at most
//    12 elements: zero mismatches.
void criterion_9() {
    sampler rng(20250810);
    std::size_t mismatches = 0;
    for (int t = 0; t < 200; ++t) {
        const finite_cover u = (t % 2 == 0)
                                   ? rng.compact_cover(compact_interval(rational(0), rational(1)), 12)
                                   : rng.cocompact_cover(4, 9);
        const auto res = minimal_subcover(u);
        std::size_t best = u.size() + 1;
        for (std::uint32_t mask = 1; mask < (1u << u.size()); ++mask) {
            const auto pc = static_cast<std::size_t>(__builtin_popcount(mask));
            if (pc >= best) continue;
            std::vector<interval_set> chosen;
            for (std::size_t i = 0; i < u.size(); ++i)
                if (mask & (1u << i)) chosen.push_back(u[i]);
            if (covers_space(u.ambient(), chosen)) best = pc;
        }
        if (!res.exact || res.size != best || !witness_covers(u, res.witness)) ++mismatches;
    }
    report(9, mismatches == 0,
           "set-cover exactness: solver vs exhaustive enumeration on 200 covers, " +
               std::to_string(mismatches) + " mismatches");
}

// 10. property suites under 10^3 randomized cases with a fixed seed.
void criterion_10() {
    const auto facts = verify_facts(42, 1000);
    const auto subadd = verify_subadditivity(43, 10);
    const auto ident = verify_identity_map(44, 10);
    report(10, facts.pass && subadd.pass && ident.pass,
           "property suites: cover algebra relations, interval laws, a_n subadditivity, 10^3 seeded cases");
}

}  // namespace

int main() {
    const auto t0 = clock_type::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%d/10 criteria passed in %.1fs\n", 10 - failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
