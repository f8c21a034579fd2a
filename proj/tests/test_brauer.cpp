#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chatelet/brauer.hpp"

using namespace chatelet;

namespace {

// independent closed-form order: p^(dim kernel - dim relations)
unsigned long closed_form_order(unsigned p, const std::vector<long>& degrees,
                                const std::vector<bool>& flags) {
    unsigned m = (unsigned)degrees.size();
    bool proper = false;
    for (long d : degrees)
        if (d % (long)p != 0) proper = true;
    unsigned dim_kernel = m - (proper ? 1 : 0);
    unsigned nflags = 0;
    for (bool b : flags)
        if (b) ++nflags;
    unsigned dim_rel = (nflags == m) ? m : nflags + 1;
    if (dim_rel > dim_kernel) throw std::logic_error("oracle: relations escape the kernel");
    unsigned long r = 1;
    for (unsigned i = 0; i < dim_kernel - dim_rel; ++i) r *= p;
    return r;
}

}  // namespace

TEST_CASE("brauer quotient: spec examples") {
    auto q1 = brauer_quotient(2, {2, 2}, {false, false});
    CHECK(q1.order == 2);
    REQUIRE(q1.generators.size() == 1);
    CHECK(q1.generators[0] == std::vector<unsigned>{1, 0});

    auto q2 = brauer_quotient(2, {4}, {false});
    CHECK(q2.order == 1);
    CHECK(q2.is_trivial());

    auto q3 = brauer_quotient(3, {3, 3}, {false, false});
    CHECK(q3.order == 3);

    auto q4 = brauer_quotient(2, {2, 2}, {true, false});
    CHECK(q4.order == 1);

    auto q5 = brauer_quotient(2, {1, 3}, {false, false});
    CHECK(q5.order == 1);  // two factors of degree prime to p
}

TEST_CASE("brauer quotient vs closed form, exhaustive grid") {
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned m = 1; m <= 4; ++m) {
            // all degree tuples with entries in 1..2p and sum divisible by p
            std::vector<long> d(m, 1);
            while (true) {
                long sum = 0;
                for (long x : d) sum += x;
                if (sum % (long)p == 0) {
                    // flags: all false, plus one true on each p-divisible factor
                    std::vector<std::vector<bool>> flagsets{std::vector<bool>(m, false)};
                    for (unsigned i = 0; i < m; ++i)
                        if (d[i] % (long)p == 0) {
                            std::vector<bool> fl(m, false);
                            fl[i] = true;
                            flagsets.push_back(fl);
                        }
                    for (const auto& fl : flagsets) {
                        auto q = brauer_quotient(p, d, fl);
                        CHECK(q.order == closed_form_order(p, d, fl));
                        // every representative satisfies the kernel condition
                        for (const auto& r : q.representatives) {
                            long s = 0;
                            for (unsigned i = 0; i < m; ++i) s += (long)r[i] * d[i];
                            CHECK(s % (long)p == 0);
                        }
                    }
                }
                size_t i = 0;
                for (; i < m; ++i) {
                    if (++d[i] <= 2 * (long)p) break;
                    d[i] = 1;
                }
                if (i == m) break;
            }
        }
    }
}

TEST_CASE("triviality matches the two corollary hypotheses") {
    // irreducible P
    CHECK(brauer_quotient(2, {4}, {false}).is_trivial());
    CHECK(brauer_quotient(3, {6}, {false}).is_trivial());
    CHECK(brauer_quotient(5, {10}, {false}).is_trivial());
    // two irreducible factors of degree prime to p
    CHECK(brauer_quotient(2, {1, 3}, {false, false}).is_trivial());
    CHECK(brauer_quotient(3, {2, 4}, {false, false}).is_trivial());
    CHECK(brauer_quotient(3, {1, 2}, {false, false}).is_trivial());
    // but two factors of degree p are not trivial
    CHECK(!brauer_quotient(2, {2, 2}, {false, false}).is_trivial());
}

TEST_CASE("representative avoiding") {
    auto q = brauer_quotient(2, {2, 2}, {false, false});
    auto r0 = representative_avoiding(q, {1, 0}, {});
    CHECK(r0.exponents == std::vector<unsigned>{1, 0});
    CHECK(r0.content_power == 0);
    auto r1 = representative_avoiding(q, {1, 0}, {0});
    CHECK(r1.exponents == std::vector<unsigned>{0, 1});
    CHECK(r1.content_power == 1);

    auto q3 = brauer_quotient(3, {3, 3, 3}, {false, false, false});
    auto r2 = representative_avoiding(q3, {1, 2, 0}, {1});
    CHECK(r2.exponents == std::vector<unsigned>{2, 0, 1});
    CHECK(r2.content_power == 1);

    CHECK_THROWS_AS(representative_avoiding(q, {1, 0}, std::vector<size_t>{0, 1}),
                    NoValidRepresentative);
}

TEST_CASE("canonicalize collapses relation shifts") {
    auto q = brauer_quotient(3, {3, 3}, {false, false});
    CHECK(q.canonicalize({1, 0}) == q.canonicalize({2, 1}));
    CHECK(q.canonicalize({1, 0}) != q.canonicalize({2, 0}));
}

TEST_CASE("fold-level brauer group") {
    KummerExt ext{2, Rat(697)};
    auto f = build_fold<Rat>(ext, parse_poly_q("(x^2 + 12)*(41*x^2 + 493)"));
    auto q = brauer_quotient(f);
    CHECK(q.order == 2);
    auto rep = representative_poly(f, q.generators[0]);
    CHECK(rep == parse_poly_q("x^2 + 12"));

    // flag true when the splitting field matches: order drops to 1
    auto f2 = build_fold<Rat>(ext, parse_poly_q("(x^2 - 697)*(x^2 + 12)"));
    auto q2 = brauer_quotient(f2);
    CHECK(q2.order == 1);
}
