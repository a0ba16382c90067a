#include <catch2/catch_amalgamated.hpp>

#include <cocompact/shift.hpp>

using namespace cocompact;

namespace {

// enumerate all words of length len over p symbols
std::vector<std::vector<unsigned>> all_words(unsigned p, std::size_t len) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> w(len, 0);
    while (true) {
        out.push_back(w);
        std::size_t i = len;
        while (i > 0) {
            if (++w[i - 1] < p) break;
            w[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
    }
    return out;
}

}  // namespace

TEST_CASE("cylinder covers are counted exactly") {
    const shift_space two(2, 16);
    CHECK(make_cylinder_cover(two, 1).count() == 2);
    const shift_space three(3, 16);
    CHECK(make_cylinder_cover(three, 2).count() == 9);
    CHECK_THROWS_AS(make_cylinder_cover(two, 0), invalid_input);
    CHECK_THROWS_AS(make_cylinder_cover(two, 15), invalid_input);  // horizon - 2 exceeded
    CHECK_THROWS_AS(shift_space(1, 16), invalid_input);
}

TEST_CASE("joining n pullbacks of the 1-cylinder cover gives p^n cylinders") {
    const shift_space two(2, 16);
    const auto base = make_cylinder_cover(two, 1);
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto joined = join_with_pullbacks(two, base, n);
        CHECK(joined.depth == n);
        CHECK(joined.count() == (std::size_t(1) << n));
        // explicit enumeration: distinct words of length n
        CHECK(all_words(2, n).size() == joined.count());
    }
}

TEST_CASE("shift cover entropy is n log p exactly") {
    for (unsigned p : {2u, 5u}) {
        const shift_space s(p, 24);
        const auto seq = shift_cover_entropy(s, 12);
        REQUIRE(seq.rows.size() == 12);
        std::size_t expect = 1;
        for (const auto& r : seq.rows) {
            expect *= p;
            CHECK(r.exact);
            CHECK(r.subcover_size == expect);
            CHECK(r.log_count == Catch::Approx(static_cast<double>(r.n) * std::log(static_cast<double>(p))));
        }
        CHECK(seq.rows.front().log_count == Catch::Approx(std::log(static_cast<double>(p))));
        CHECK(compute_entropy_estimate(seq).value ==
              Catch::Approx(std::log(static_cast<double>(p))).epsilon(1e-12));
    }
    CHECK_THROWS_AS(shift_cover_entropy(shift_space(2, 8), 7), invalid_input);
}

TEST_CASE("shift metric tail counts scales") {
    CHECK(shift_metric_tail(rational(1)) == 0);
    CHECK(shift_metric_tail(rational(1, 2)) == 1);
    CHECK(shift_metric_tail(rational(1, 4)) == 2);
    CHECK(shift_metric_tail(rational(3, 8)) == 2);  // 1/2 > 3/8 >= 1/4
    CHECK_THROWS_AS(shift_metric_tail(rational(0)), invalid_input);
}

TEST_CASE("separation criterion matches the word metric exhaustively") {
    // two words are (n,eps)-separated iff they differ within the first
    // n-1+tail(eps) coordinates; checked against d_n over enumerated words
    struct scenario {
        unsigned p;
        std::size_t n;
        rational eps;
    };
    for (const auto& sc : {scenario{2, 4, rational(1, 2)}, scenario{2, 6, rational(1, 4)},
                           scenario{3, 3, rational(1, 2)}}) {
        const std::size_t t = shift_metric_tail(sc.eps);
        const std::size_t window = sc.n - 1 + t;
        const auto words = all_words(sc.p, window + 2);
        for (std::size_t a = 0; a < words.size(); ++a)
            for (std::size_t b = a + 1; b < words.size(); ++b) {
                const bool separated = shift_dn(words[a], words[b], sc.n) > sc.eps;
                bool differ_in_window = false;
                for (std::size_t i = 0; i < window && !differ_in_window; ++i)
                    differ_in_window = words[a][i] != words[b][i];
                REQUIRE(separated == differ_in_window);
            }
    }
}

TEST_CASE("shift Bowen counts: s_n = 2^n at eps = 1/2") {
    const shift_space two(2, 24);
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(shift_span_count(two, n, rational(1, 2)) == (std::size_t(1) << n));
}

TEST_CASE("shift Bowen rates hit log p to full precision") {
    for (unsigned p : {2u, 3u, 5u}) {
        const shift_space s(p, 28);
        const auto est = shift_bowen_entropy(s, {rational(1, 2), rational(1, 4), rational(1, 16)}, 4, 12);
        CHECK(std::abs(est.value - std::log(static_cast<double>(p))) < 1e-6);
        for (const auto& er : est.ladder) {
            CHECK(std::abs(er.spanning_rate - std::log(static_cast<double>(p))) < 1e-6);
            CHECK(std::abs(er.separated_rate - std::log(static_cast<double>(p))) < 1e-6);
            CHECK(er.spanning_stderr < 1e-9);
        }
        CHECK(est.monotone_trend);
    }
}

TEST_CASE("cover and Bowen estimates agree on the shift") {
    for (unsigned p : {2u, 3u}) {
        const shift_space s(p, 28);
        const double cover_val = compute_entropy_estimate(shift_cover_entropy(s, 12)).value;
        const double bowen_val = shift_bowen_entropy(s, {rational(1, 2), rational(1, 8)}, 4, 12).value;
        CHECK(std::abs(cover_val - bowen_val) < 1e-6);
    }
}

TEST_CASE("doubling the horizon changes nothing at fixed depth") {
    const shift_space a(3, 20), b(3, 40);
    const auto ea = shift_cover_entropy(a, 12), eb = shift_cover_entropy(b, 12);
    REQUIRE(ea.rows.size() == eb.rows.size());
    for (std::size_t i = 0; i < ea.rows.size(); ++i)
        CHECK(ea.rows[i].subcover_size == eb.rows[i].subcover_size);
    const auto ba = shift_bowen_entropy(a, {rational(1, 4)}, 3, 8);
    const auto bb = shift_bowen_entropy(b, {rational(1, 4)}, 3, 8);
    CHECK(ba.value == bb.value);
}
